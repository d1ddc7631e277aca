"""Structural facts about cluster-tilting objects, checked exhaustively."""
from math import comb, prod

import pytest

from clustertilt.ar_model import Indec, outer_orbit, phi, region_at, tau, triangle_intersection
from clustertilt.classify import classify, connecting_vertices
from clustertilt.homext import diagonal_oracle
from clustertilt.mesh import MeshCategory, rank
from clustertilt.presentation import ct_quiver
from clustertilt.tilting import alpha_census, subfactor
from conftest import cat, cts


def cluster_count(spec):
    n = spec.rank
    if spec.family == "A":
        return comb(2 * n + 2, n + 1) // (n + 2)
    return (3 * n - 2) * comb(2 * n - 2, n - 1) // n


def ears(C):
    """Short diagonals {i, i+2} of the polygon: the outermost tau-orbit."""
    o = diagonal_oracle(C)
    out = set()
    for x, d in o.diagonal.items():
        a, b = sorted(d)
        if (b - a) % o.size in (2, o.size - 2):
            out.add(x)
    return out


@pytest.mark.parametrize("m", range(2, 9))
def test_outer_orbit_is_the_ears(m):
    C = cat("A", m)
    assert ears(C) == outer_orbit(C)


@pytest.mark.parametrize("m", range(2, 9))
def test_at_least_two_summands_in_the_outer_orbit(m):
    C = cat("A", m)
    outer = ears(C)
    assert all(len(outer & set(T)) >= 2 for T in cts("A", m))


@pytest.mark.parametrize("m", range(1, 9))
def test_connecting_vertices_are_exactly_the_outer_summands(m):
    C = cat("A", m)
    outer = ears(C) if m > 1 else set(C.indecs)
    for T in cts("A", m):
        conn = connecting_vertices(ct_quiver(C, T))
        assert conn == outer & set(T), T


@pytest.mark.parametrize("n", range(4, 7))
def test_at_least_two_alpha_summands(n):
    C = cat("D", n)
    assert all(sum(C.is_alpha(x) for x in T) >= 2 for T in cts("D", n))


@pytest.mark.parametrize("fam,n", [("A", m) for m in range(2, 8)] + [("D", m) for m in range(4, 7)])
def test_objects_containing_a_pivot_match_the_subfactor_count(fam, n):
    C = cat(fam, n)
    objs = cts(fam, n)
    for M in C.indecs:
        sub = subfactor(C, M)
        assert sum(s.rank for s in sub.quotient_spec) == n - 1
        want = prod(cluster_count(s) for s in sub.quotient_spec)
        assert sum(1 for T in objs if M in T) == want, M


def test_a6_middle_pivot_splits_into_a2_and_a3():
    C = cat("A", 6)
    sub = subfactor(C, Indec(0, 3))
    assert [str(s) for s in sub.quotient_spec] == ["A_2", "A_3"]
    assert sum(1 for T in cts("A", 6) if Indec(0, 3) in T) == 5 * 14
    # each factor is a whole component of the orthogonal category
    sizes = sorted(sum(1 for v in sub.object_map.values() if v[0] == i) for i in range(2))
    assert sizes == [5, 9]


@pytest.mark.parametrize("m", range(1, 9))
def test_every_object_is_a_translate_of_a_linear_tilting_module(m):
    C = cat("A", m)
    wedge = region_at(C, C.cover.level[m], m).members
    for T in cts("A", m):
        assert any({tau(C, x, k) for x in T} <= wedge for k in range(m + 3)), T


@pytest.mark.parametrize("n", range(4, 7))
def test_two_triangle_lemma(n):
    C = cat("D", n)
    mesh = MeshCategory.of(C)
    for a1 in C.alphas():
        for a2 in C.alphas():
            if a2 in (a1, phi(C, a1)):
                continue
            d1, d2 = triangle_intersection(C, a1, a2)
            # item 4
            assert all(C.hom(x, a1) == 0 for x in d2.members)
            assert all(C.hom(a1, y) == 0 for y in d1.members)
            # item 1: composites through the apex of the second triangle span Hom(a1, a2)
            h = C.hom(a1, a2)
            if h:
                vecs = [v for v in mesh.compose(a1, d2.top, a2).values() if any(v)]
                assert rank(vecs, h) == h, (a1, a2)


@pytest.mark.parametrize("n", range(4, 7))
def test_shape_matches_alpha_census_and_spacing(n):
    C = cat("D", n)
    census_seen = set()
    for T in cts("D", n):
        cen = alpha_census(C, T)
        census_seen.add(cen)
        alphas = {x for x in T if C.is_alpha(x)}
        d = classify(ct_quiver(C, T))
        match = [c for c in d.candidates if c.shape == f"D{cen}" and set(c.central) == alphas]
        assert match, T
        c = match[0]
        if cen == 2:
            n1, n2 = c.sizes
            a1, a2 = c.central
            assert n1 + n2 + 2 == n
            assert a2 in {tau(C, a1, -(n1 + 1)), tau(C, phi(C, a1), -(n1 + 1))}
            assert a1 in {tau(C, a2, -(n2 + 1)), tau(C, phi(C, a2), -(n2 + 1))}
            assert a1 in {tau(C, a2, n1 + 1), tau(C, phi(C, a2), n1 + 1)}
        if cen == 3:
            k = len(c.central)
            for r in range(k):
                a, b, g = c.central[r], c.central[(r + 1) % k], len(c.attached[r]) + 1
                assert b in {tau(C, a, -g), tau(C, phi(C, a), -g)}
    assert census_seen == {1, 2, 3}
