from __future__ import annotations

from irredcount.classgroup import Prescription, decompose
from irredcount.ff import GF

# (criterion, passed, detail) lines collected by tests/test_acceptance.py
ACCEPTANCE_LINES: list[tuple[str, bool, str]] = []


def make(q: int, kind: str, ell: int, t: int = 0):
    """Prescription and its decomposed group for a small instance."""
    p = Prescription(GF.from_q(q), kind, ell, t)
    return p, decompose(p)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_LINES:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
