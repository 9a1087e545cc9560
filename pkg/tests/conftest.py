import random
from itertools import combinations

import pytest

from mediatrix.digraph import Digraph, uncovered_pair


def brute_force_mediated(n, in_nbrs):
    """Triple loop straight from the definition; shares no code with the library."""
    closed = [set(in_nbrs[z]) | {z} for z in range(n)]
    for x, y in combinations(range(n), 2):
        if not any(x in c and y in c for c in closed):
            return False
    return True


def random_mediated_digraph(rng: random.Random, n: int) -> Digraph:
    """Random arcs, then arcs between uncovered pairs until mediated."""
    p = rng.random() * 0.5
    arcs = [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p]
    d = Digraph.from_arcs(n, arcs)
    while (pair := uncovered_pair(d)) is not None:
        x, y = pair if rng.random() < 0.5 else pair[::-1]
        d = d.with_arc(x, y)
    return d


def paley_difference_set(p):
    """Nonzero squares mod a prime p = 3 (mod 4): a (p, (p-1)/2, (p-3)/4) difference set."""
    return sorted({x * x % p for x in range(1, p)})


@pytest.fixture
def rng():
    return random.Random(20261015)


def pytest_configure(config):
    config._acceptance_lines = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
