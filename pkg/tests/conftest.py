import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from kinkydaisy.genesis import fixtures as _fixtures  # noqa: E402
from kinkydaisy.resonance import build_digraph, build_matching_table, build_resonance_graph  # noqa: E402
from kinkydaisy.structure import inner_dual, order_hexagons  # noqa: E402


@pytest.fixture(scope="session")
def fx():
    return _fixtures()


def pipeline(b, mode="dfs", root=None):
    """(ordering, matching table, resonance digraph) for a system."""
    ord = order_hexagons(inner_dual(b), mode, root)
    table = build_matching_table(b, ord)
    rg = build_digraph(build_resonance_graph(b, ord, table))
    return ord, table, rg


def label_strings(table):
    return {str(x) for x in table.labels}


_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def verdict_line():
    """Print one PASS/FAIL line and repeat it in the terminal summary."""
    def emit(number, ok, detail):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}"
        print(line)
        _ACCEPTANCE_LINES.append(line)
    return emit


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
