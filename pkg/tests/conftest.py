import pytest

from smallcrn import parse_network

RUNNING = "A -> 2B\n2B -> A"
RATE_DEPENDENT = "A -> 2A\nA -> 0\n2A -> A"
SEMICUBIC = "3B -> A + 2B\n2A -> A + B"
OVERLAP = "3A + B -> 2A + 3B\n2A + 3B -> 3A + B"
QUARTIC = "4A -> 3A + B\n2B -> A + B"
HYPERBOLA = "A + B -> 0\n0 -> A + B"
EMPTY = "A -> A + B\nB -> A + B"
ACR = "A + B -> 2B\nB -> A"
TUNED = "2A + B -> 3A\n2A + B -> A + 2B"


@pytest.fixture
def running():
    return parse_network(RUNNING)


@pytest.fixture
def rate_dependent():
    return parse_network(RATE_DEPENDENT)


@pytest.fixture
def semicubic():
    return parse_network(SEMICUBIC)


@pytest.fixture
def overlap():
    return parse_network(OVERLAP)


@pytest.fixture
def quartic():
    return parse_network(QUARTIC)


@pytest.fixture(scope="session")
def small_networks():
    from smallcrn import enumerate_networks

    return enumerate_networks(2, 2, 2)


@pytest.fixture(scope="session")
def nonempty_small(small_networks):
    from smallcrn import pssv_status

    return [n for n in small_networks if pssv_status(n).nonempty]


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
