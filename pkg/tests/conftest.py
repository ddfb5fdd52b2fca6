import pytest


@pytest.fixture(scope="session")
def cache_dir(tmp_path_factory):
    """One cache directory shared by every test in the session."""
    return str(tmp_path_factory.mktemp("k3fourh-cache"))


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    """Repeat the per-criterion acceptance lines after the test summary."""
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
