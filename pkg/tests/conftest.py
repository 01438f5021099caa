import pytest

# acceptance tests append (criterion, passed, detail) here; printed at the end
ACCEPTANCE_LINES: list[tuple[str, bool, str]] = []


@pytest.fixture
def record():
    def _record(criterion: str, passed: bool, detail: str = "") -> bool:
        ACCEPTANCE_LINES.append((criterion, bool(passed), detail))
        return bool(passed)

    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for crit, ok, detail in ACCEPTANCE_LINES:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {crit}: {detail}")
