import pytest


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run the rank-7 enumeration checks")
    parser.addoption("--regen-golden", action="store_true", default=False, help="rewrite tests/golden from the current code")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long exhaustive runs, enabled with --runslow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter, config):
    lines = getattr(config, "_acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)


@pytest.fixture
def record_criterion(request):
    """Append one PASS/FAIL line to the end-of-run acceptance summary (and print it)."""
    lines = request.config.__dict__.setdefault("_acceptance_lines", [])

    def record(line: str) -> None:
        lines.append(line)
        print(line)

    return record


@pytest.fixture
def regen_golden(request) -> bool:
    return request.config.getoption("--regen-golden")
