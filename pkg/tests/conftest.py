import sys

import pytest

from qhh import parse_quiver


@pytest.fixture
def a2():
    """u --x--> v"""
    return parse_quiver('{"vertices": ["u", "v"], "arrows": [{"id": "x", "src": "u", "tgt": "v"}]}')


@pytest.fixture
def kronecker_shortcut():
    """Two parallel arrows plus a path of length two that has a shortcut."""
    return parse_quiver(
        '{"vertices": ["u", "v", "w"], "arrows": ['
        '{"id": "x", "src": "u", "tgt": "v"}, {"id": "y", "src": "v", "tgt": "w"},'
        '{"id": "z", "src": "u", "tgt": "w"}, {"id": "t", "src": "u", "tgt": "w"}]}'
    )


@pytest.fixture
def two_cycle():
    return parse_quiver(
        '{"vertices": ["p", "q"], "arrows": ['
        '{"id": "f", "src": "p", "tgt": "q"}, {"id": "g", "src": "q", "tgt": "p"}]}'
    )



def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", {})
    if results:
        terminalreporter.section("acceptance criteria")
        for key in sorted(results):
            terminalreporter.write_line(results[key])
