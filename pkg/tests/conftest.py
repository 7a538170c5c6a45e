import itertools

import pytest

from ringforge.config import reset_caps
from ringforge.corpus import corpus_ring


@pytest.fixture(autouse=True)
def _fresh_caps():
    yield
    reset_caps()


@pytest.fixture
def corpus():
    return corpus_ring


def elements(r):
    """Plain lexicographic scan, independent of the package's enumeration."""
    return list(itertools.product(*(range(d) for d in r.orders)))


def span(r, gens):
    """Additive closure by breadth-first search."""
    seen = {r.zero}
    frontier = [r.zero]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = r.add(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def as_set(s):
    return set(s.elements())
