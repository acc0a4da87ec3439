import pytest

from hypothesis import settings

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

ACCEPTANCE: dict = {}


@pytest.fixture
def criterion(request):
    """Record the outcome of one acceptance criterion for the summary."""

    def record(number: int, title: str):
        ACCEPTANCE[number] = (title, "FAIL")
        return lambda: ACCEPTANCE.__setitem__(number, (title, "PASS"))

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, status = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {status}  {title}")
