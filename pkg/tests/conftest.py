import pytest

_outcomes = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if item.module.__name__.endswith("test_acceptance") and item.name.startswith("test_criterion["):
        k = item.callspec.params["k"]
        if rep.when == "call" or (rep.when == "setup" and rep.failed):
            _outcomes[k] = rep.passed


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    from test_acceptance import CRITERIA

    terminalreporter.section("acceptance criteria")
    for k in sorted(_outcomes):
        terminalreporter.write_line(f"criterion {k:>2}: {'PASS' if _outcomes[k] else 'FAIL'}  {CRITERIA[k]}")
