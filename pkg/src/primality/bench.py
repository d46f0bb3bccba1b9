"""Algorithm registry, benchmark corpora and CSV timing output."""

from __future__ import annotations

import csv
import logging
import statistics
import time
from collections import defaultdict
from dataclasses import astuple, dataclass, fields
from typing import Callable, Iterable, TextIO

from .arith import factorize
from .deterministic import aks, lucas_lehmer, pepin_test, trial_division
from .forms import FormKind, as_fermat, as_mersenne, detect_form, parse_number
from .heuristic import baillie_psw
from .lasvegas import lucas_test, pocklington_test, proth_test
from .montecarlo import fermat_test, miller_rabin, solovay_strassen
from .verdict import TestConfig, Verdict

log = logging.getLogger(__name__)


def _needs_odd(test):
    def run(n: int, cfg: TestConfig) -> Verdict:
        if n < 3 or n % 2 == 0:
            return Verdict.inapplicable("needs an odd n >= 3")
        return test(n, factorize(n - 1), cfg)

    return run


def _lucas_lehmer_on(n: int, cfg: TestConfig) -> Verdict:
    p = as_mersenne(n)
    if p is None:
        return Verdict.inapplicable(f"{n} is not a Mersenne number 2^p-1 with p prime")
    return lucas_lehmer(p)


def auto(n: int, cfg: TestConfig) -> Verdict:
    """Pick the specialised test for n's form; BPSW for generic numbers."""
    if n < 2:
        return Verdict.inapplicable("needs n >= 2")
    if n % 2 == 0:
        return Verdict.prime() if n == 2 else Verdict.composite(2)
    form = detect_form(n)
    if form.kind is FormKind.MERSENNE:
        return lucas_lehmer(form.exponent)
    if form.kind is FormKind.FERMAT and form.exponent >= 1:
        return pepin_test(n)
    if form.kind is FormKind.PROTH:
        v = proth_test(n, cfg)
        if not v.is_inapplicable:
            return v
    return baillie_psw(n)


def dispatch_target(n: int) -> str:
    """Algorithm id that :func:`auto` hands n to."""
    if n < 3 or n % 2 == 0:
        return "auto"
    kind = detect_form(n).kind
    if kind is FormKind.MERSENNE:
        return "lucas-lehmer"
    if kind is FormKind.FERMAT and as_fermat(n) >= 1:
        return "pepin"
    if kind is FormKind.PROTH:
        return "proth"
    return "bpsw"


ALGORITHMS: dict[str, Callable[[int, TestConfig], Verdict]] = {
    "fermat": fermat_test,
    "solovay": solovay_strassen,
    "miller": miller_rabin,
    "proth": proth_test,
    "lucas": _needs_odd(lucas_test),
    "pocklington": _needs_odd(pocklington_test),
    "trial": lambda n, cfg: trial_division(n),
    "pepin": lambda n, cfg: pepin_test(n),
    "lucas-lehmer": _lucas_lehmer_on,
    "aks": lambda n, cfg: aks(n),
    "bpsw": lambda n, cfg: baillie_psw(n),
    "auto": auto,
}

# skipped above 64-bit inputs unless explicitly requested
SLOW_ALGORITHMS = frozenset({"trial", "aks"})
SLOW_BITS = 64


def run_algorithm(algo: str, n: int, cfg: TestConfig | None = None) -> Verdict:
    try:
        test = ALGORITHMS[algo]
    except KeyError:
        raise ValueError(f"unknown algorithm {algo!r}; choose from {', '.join(ALGORITHMS)}") from None
    return test(n, cfg or TestConfig())


@dataclass(frozen=True)
class SuiteEntry:
    expr: str
    form: str
    expected: str  # "prime" or "composite"


@dataclass(frozen=True)
class Suite:
    name: str
    entries: tuple[SuiteEntry, ...]
    algos: tuple[str, ...]


def _entries(*rows):
    return tuple(SuiteEntry(*row) for row in rows)


SUITES: dict[str, Suite] = {
    "table2": Suite(
        "table2",
        _entries(
            ("11621", "generic", "prime"),
            ("11611", "generic", "composite"),
            ("2860486327", "generic", "prime"),
            ("2860486317", "generic", "composite"),
            ("12764787846358441471", "generic", "prime"),
            ("12764787846358441481", "generic", "composite"),
        ),
        ("fermat", "solovay", "miller"),
    ),
    "table3": Suite(
        "table3",
        _entries(
            ("9*2^11+1", "proth", "prime"),
            ("11*2^12+1", "proth", "composite"),
            ("17*2^27+1", "proth", "prime"),
            ("25*2^28+1", "proth", "composite"),
        ),
        ("proth", "lucas", "pocklington"),
    ),
    "table4": Suite(
        "table4",
        _entries(
            ("2^16+1", "fermat", "prime"),
            ("2^15+1", "proth", "composite"),
            ("2^32+1", "fermat", "composite"),
            ("2^64+1", "fermat", "composite"),
        ),
        ("pepin", "trial", "aks"),
    ),
    "table5": Suite(
        "table5",
        _entries(
            ("2^13-1", "mersenne", "prime"),
            ("2^11-1", "mersenne", "composite"),
            ("2^31-1", "mersenne", "prime"),
            ("2^37-1", "mersenne", "composite"),
        ),
        ("lucas-lehmer", "trial", "aks"),
    ),
    "mersenne-big": Suite(
        "mersenne-big",
        _entries(
            ("2^1279-1", "mersenne", "prime"),
            ("2^1278-1", "generic", "composite"),
        ),
        ("lucas-lehmer", "fermat", "solovay", "miller", "bpsw"),
    ),
    "proth-big": Suite(
        "proth-big",
        _entries(
            ("9*2^1305+1", "proth", "prime"),
            ("9*2^1303+1", "proth", "composite"),
        ),
        ("proth", "fermat", "solovay", "miller", "bpsw"),
    ),
}


def get_suites(name: str) -> list[Suite]:
    """Suites selected by a CLI name; ``all`` runs every suite with its own algorithms."""
    if name == "all":
        return list(SUITES.values())
    try:
        return [SUITES[name]]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}") from None


MAX_REPETITIONS = 5


@dataclass(frozen=True)
class BenchRecord:
    algorithm: str
    input_id: str
    digits: int
    form: str
    verdict: str
    elapsed_ns: int
    repetition: int

    def __post_init__(self):
        if not 1 <= self.repetition <= MAX_REPETITIONS:
            raise ValueError(f"repetition {self.repetition} outside 1..{MAX_REPETITIONS}")
        if self.elapsed_ns <= 0:
            raise ValueError("elapsed_ns must be positive")


class BenchmarkMismatch(RuntimeError):
    """A test returned a verdict that disagrees with the suite's expectation."""


def _matches(verdict: Verdict, expected: str) -> bool:
    if expected == "prime":
        return verdict.is_prime_class
    return verdict.is_composite


def timed(algo: str, n: int, cfg: TestConfig) -> tuple[Verdict, int]:
    test = ALGORITHMS[algo]
    start = time.perf_counter_ns()
    verdict = test(n, cfg)
    return verdict, max(1, time.perf_counter_ns() - start)


def run_suite(
    suite: Suite,
    algos: Iterable[str] | None = None,
    repetitions: int = MAX_REPETITIONS,
    seed: int = 0,
    rounds: int = 20,
    include_slow: bool = False,
) -> list[BenchRecord]:
    """Time every (algorithm, entry) pair ``repetitions`` times.

    Pairs where the algorithm is inapplicable are skipped with a log
    message.  A verdict that contradicts the suite raises
    :class:`BenchmarkMismatch`.
    """
    if not 1 <= repetitions <= MAX_REPETITIONS:
        raise ValueError(f"repetitions must be in 1..{MAX_REPETITIONS}")
    algos = list(algos or suite.algos)
    for a in algos:
        if a not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {a!r}")
    cfg = TestConfig(rounds, seed)
    parsed = [(e, parse_number(e.expr)) for e in suite.entries]
    records = []
    for algo in algos:
        for entry, n in parsed:
            if algo in SLOW_ALGORITHMS and n.bit_length() > SLOW_BITS and not include_slow:
                log.info("skipping %s on %s: slow algorithm above %d bits", algo, entry.expr, SLOW_BITS)
                continue
            digits = len(str(n))
            form = detect_form(n).tag
            for rep in range(1, repetitions + 1):
                verdict, elapsed = timed(algo, n, cfg)
                if verdict.is_inapplicable:
                    log.info("skipping %s on %s: %s", algo, entry.expr, verdict.reason)
                    break
                if not _matches(verdict, entry.expected):
                    raise BenchmarkMismatch(
                        f"{algo} says {verdict} for {entry.expr}, expected {entry.expected}"
                    )
                records.append(BenchRecord(algo, entry.expr, digits, form, verdict.tag, elapsed, rep))
    return records


CSV_FIELDS = tuple(f.name for f in fields(BenchRecord))
SUMMARY_FIELDS = ("algorithm", "input_id", "digits", "form", "verdict", "reps", "mean_ns", "median_ns")


def summarize(records: Iterable[BenchRecord]) -> list[dict]:
    groups: dict[tuple[str, str], list[BenchRecord]] = defaultdict(list)
    for rec in records:
        groups[rec.algorithm, rec.input_id].append(rec)
    rows = []
    for (algo, input_id), recs in groups.items():
        times = [r.elapsed_ns for r in recs]
        rows.append(
            {
                "algorithm": algo,
                "input_id": input_id,
                "digits": recs[0].digits,
                "form": recs[0].form,
                "verdict": recs[0].verdict,
                "reps": len(recs),
                "mean_ns": round(statistics.fmean(times)),
                "median_ns": round(statistics.median(times)),
            }
        )
    return rows


def emit_csv(records: Iterable[BenchRecord], destination: TextIO, summary: TextIO | None = None) -> None:
    """Write one row per record; optionally the per-(algorithm, input) summary."""
    records = list(records)
    writer = csv.writer(destination, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for rec in records:
        writer.writerow(astuple(rec))
    if summary is not None:
        sw = csv.DictWriter(summary, SUMMARY_FIELDS, lineterminator="\n")
        sw.writeheader()
        sw.writerows(summarize(records))


def summary_path(path: str) -> str:
    stem = path[:-4] if path.endswith(".csv") else path
    return stem + ".summary.csv"


def write_csv_files(records: Iterable[BenchRecord], path: str) -> str:
    """Write ``path`` and its ``.summary.csv`` companion; return the latter."""
    side = summary_path(path)
    with open(path, "w", newline="", encoding="utf-8") as out, open(
        side, "w", newline="", encoding="utf-8"
    ) as summ:
        emit_csv(records, out, summ)
    return side


def read_csv(source: TextIO) -> list[BenchRecord]:
    reader = csv.DictReader(source)
    if tuple(reader.fieldnames or ()) != CSV_FIELDS:
        raise ValueError(f"unexpected header {reader.fieldnames}")
    out = []
    for row in reader:
        out.append(
            BenchRecord(
                row["algorithm"],
                row["input_id"],
                int(row["digits"]),
                row["form"],
                row["verdict"],
                int(row["elapsed_ns"]),
                int(row["repetition"]),
            )
        )
    return out
