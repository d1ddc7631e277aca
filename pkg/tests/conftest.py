import functools
import itertools

import pytest

from clustertilt.ar_model import CategorySpec
from clustertilt.presentation import Quiver
from clustertilt.tilting import cached_build, enumerate_ct


@functools.lru_cache(maxsize=None)
def cat(family, rank):
    return cached_build(CategorySpec(family, rank))


@functools.lru_cache(maxsize=None)
def cts(family, rank):
    return tuple(enumerate_ct(cat(family, rank)))


def canonical(Q):
    """Smallest relabelled arrow list over all vertex orders (small quivers only)."""
    vs = Q.vertices
    best = None
    for perm in itertools.permutations(range(len(vs))):
        m = dict(zip(vs, perm))
        key = tuple(sorted((m[s], m[t]) for s, t in Q.arrows))
        if best is None or key < best:
            best = key
    return len(vs), best


THREE_CYCLE = Quiver((1, 2, 3), ((1, 2), (2, 3), (3, 1)))
SHAPE_ONE = Quiver((1, 2, 3, 4), ((1, 2), (1, 3), (2, 4), (3, 4), (4, 1)))
FOUR_CYCLE = Quiver((1, 2, 3, 4), ((1, 2), (2, 3), (3, 4), (4, 1)))
FIVE_VERTEX = Quiver((1, 2, 3, 4, 5), ((1, 2), (2, 3), (3, 4), (4, 5), (5, 3)))


@pytest.fixture
def golden():
    import pathlib

    root = pathlib.Path(__file__).parent / "golden"
    return lambda name: (root / name).read_text()
