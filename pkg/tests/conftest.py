import pytest

ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture
def report_criterion():
    """Record the PASS/FAIL line of one acceptance criterion."""
    def record(number: int, title: str, ok: bool, note: str = "") -> None:
        line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}"
        if note:
            line += f"  ({note})"
        ACCEPTANCE_LINES[number] = line
        print(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
