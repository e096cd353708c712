import pytest

from gqbreak.catalog import corpus, make


@pytest.fixture(scope="session")
def corpus64():
    return corpus(64)


@pytest.fixture(scope="session")
def corpus16(corpus64):
    return [e for e in corpus64 if e.group.order <= 16]


@pytest.fixture(scope="session")
def q16():
    return make("generalized_quaternion", 16)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    from tests import acceptance_log

    if acceptance_log.LINES:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_log.LINES:
            terminalreporter.write_line(line)
