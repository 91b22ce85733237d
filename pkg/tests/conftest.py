import pytest

ACCEPTANCE = {}


@pytest.fixture
def criterion(request):
    """Record a named acceptance criterion; the outcome is filled in by
    the report hook below."""

    def register(number, text):
        ACCEPTANCE[request.node.nodeid] = [number, text, None]

    return register


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    entry = ACCEPTANCE.get(item.nodeid)
    if entry is not None and report.when == "call":
        entry[2] = report.passed


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, text, passed in sorted(ACCEPTANCE.values()):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] {number:2d}. {text}")
