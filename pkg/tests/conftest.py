import pytest

_ACCEPTANCE = {}


@pytest.fixture
def report():
    """Record one acceptance line: report(criterion_id, passed, detail)."""

    def _report(cid, passed, detail):
        _ACCEPTANCE[cid] = (bool(passed), detail)

    return _report


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(_ACCEPTANCE, key=lambda c: (int(c.split(".")[0].rstrip("abcdefgh")), c)):
        passed, detail = _ACCEPTANCE[cid]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] criterion {cid}: {detail}")
