"""Collects per-criterion outcomes of the acceptance module and prints a summary."""
from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_OUTCOMES: dict[int, list[tuple[str, str, float]]] = {}
_CRITERIA = {
    1: "golden values rho_{2,(1)}(3)=1, rho_{2,(1)}(4)=sqrt2",
    2: "closed form vs power iteration, k<=3, n<=8",
    3: "quantum structure constants: sign, degree, d=0 layer, commutativity, associativity",
    4: "FPdim is a ring homomorphism on Gr(2,4), Gr(2,5), Gr(3,6)",
    5: "classical truncation FPdim is the indicator of 0",
    6: "Verlinde FPdim converges to hook dimension",
    7: "lower bound <= rho, k<=4, n<=12",
    8: "monotonicity, eventual concavity, slope lemma",
    9: "transpose duality",
    10: "Galkin bound and equality pattern",
    11: "rho == 1 exactly for rectangular shapes on P_3(7)",
}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    for key, value in report.user_properties:
        if key == "criterion":
            _OUTCOMES.setdefault(value, []).append((report.nodeid, report.outcome, report.duration))


def pytest_runtest_setup(item):
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        item.user_properties.append(("criterion", marker.args[0]))


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for number, title in _CRITERIA.items():
        runs = _OUTCOMES.get(number)
        if not runs:
            verdict, seconds = "NOT RUN", 0.0
        else:
            verdict = "PASS" if all(o == "passed" for _, o, _ in runs) else "FAIL"
            seconds = sum(d for _, _, d in runs)
        terminalreporter.write_line(f"criterion {number:2d}: {verdict:7s} ({seconds:6.2f}s) {title}")
