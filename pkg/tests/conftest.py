import pytest

_CRITERIA = {}


@pytest.fixture
def criterion(request):
    """Record an acceptance criterion's outcome for the end-of-run summary."""
    label = {}

    def describe(number, text):
        label["key"] = (number, text)

    yield describe
    if "key" in label:
        rep = getattr(request.node, "rep_call", None)
        _CRITERIA[label["key"]] = rep is not None and rep.passed


@pytest.hookimpl(wrapper=True)
def pytest_runtest_makereport(item, call):
    rep = yield
    if rep.when == "call":
        item.rep_call = rep
    return rep


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for (number, text), ok in sorted(_CRITERIA.items()):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number}. {text}")
