import numpy as np
import pytest

# parameter grid shared by the residual sweeps
GRID = (-0.9, -0.35, 0.45, 1.3, 3.0)


def chebyshev(k=20):
    return np.cos((2 * np.arange(k) + 1) * np.pi / (2 * k))


@pytest.fixture
def rng():
    return np.random.default_rng(20241016)


# one verdict line per acceptance criterion, shown in the terminal summary

_AC_TITLES = {
    "AC1": "table reproduction, |delta| <= 1e-4 on every printed cell",
    "AC2": "difference-equation residuals < 1e-11, n = 2..50, ten families",
    "AC3": "compact forms, normwise relative 1e-9, n <= 15",
    "AC4": "Jacobi-matrix commutation < 1e-11 at N = 20",
    "AC5": "Nevai limits at n = 1000",
    "AC6": "Laguerre solution-1 chain sequences",
    "AC7": "strict interlacing with boundary removal",
    "AC8": "three-way evaluation agreement, relative 1e-9",
    "AC9": "circle pipeline closed forms and Verblunsky round-trip",
}
_ac_outcomes: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(id): acceptance criterion the test belongs to")


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("acceptance")
    if mark is None or call.when != "call" and not (call.when == "setup" and call.excinfo):
        return
    ok = call.excinfo is None
    rec = _ac_outcomes.setdefault(mark.args[0], {"passed": 0, "failed": []})
    if ok:
        rec["passed"] += 1
    else:
        rec["failed"].append(item.name)


def pytest_terminal_summary(terminalreporter):
    if not _ac_outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for ac in sorted(_ac_outcomes, key=lambda k: int(k[2:])):
        rec = _ac_outcomes[ac]
        verdict = "FAIL" if rec["failed"] else "PASS"
        line = f"{ac} {verdict}  {_AC_TITLES.get(ac, '')}  ({rec['passed']} passed, {len(rec['failed'])} failed)"
        if rec["failed"]:
            line += "  failing: " + ", ".join(rec["failed"])
        terminalreporter.write_line(line)
