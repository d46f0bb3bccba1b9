import pytest

from primality import aks, sieve

_acceptance = {}


@pytest.fixture(scope="session")
def primes_1e5():
    return frozenset(sieve(10**5))


@pytest.fixture(scope="session")
def aks_verdicts():
    # exhaustive AKS run shared by the module tests and the acceptance gate
    return {n: aks(n) for n in range(2, 20001)}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call" or report.outcome != "passed":
        _acceptance.setdefault(name, report.outcome)
        if report.failed:
            _acceptance[name] = "failed"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance):
        status = "PASS" if _acceptance[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {name}")
