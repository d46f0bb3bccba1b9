"""Benchmark the Monte-Carlo tests on the Table 2 corpus and summarise.

The same data comes out of ``primality bench --suite table2 --out t2.csv``.
"""
import io

from primality import run_suite
from primality.bench import SUITES, emit_csv, summarize

records = run_suite(SUITES["table2"], repetitions=5, seed=0)
print(f"{len(records)} timing records")

rows = summarize(records)
for row in sorted(rows, key=lambda r: (r["input_id"], r["median_ns"])):
    print(f"{row['input_id']:>22} {row['algorithm']:>8} {row['verdict']:>15} median {row['median_ns'] / 1e3:8.1f} us")

buf = io.StringIO()
emit_csv(records[:3], buf)
print("\nfirst CSV rows:\n" + buf.getvalue())
