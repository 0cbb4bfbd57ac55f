import pytest

ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_line():
    """Record one summary line per acceptance criterion."""
    def record(number, title, ok, seconds, budget):
        status = "PASS" if ok else "FAIL"
        ACCEPTANCE_LINES.append(f"[{status}] AC{number:>2} {title} ({seconds * 1000:.1f} ms, budget {budget})")
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("AC")[1].split()[0])):
            terminalreporter.write_line(line)
