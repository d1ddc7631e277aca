from collections import defaultdict

import networkx as nx
import pytest
from networkx.algorithms.isomorphism import DiGraphMatcher

from clustertilt.ar_model import CategorySpec, Indec, phi, region_at
from clustertilt.classify import ATriangle, EMPTY_TRIANGLE, classify, connecting_vertices
from clustertilt.presentation import Quiver, ct_quiver, quiver_atlas, quiver_iso
from clustertilt.reconstruct import reconstruct, reconstruct_a, reconstruct_report, split, verify_roundtrip
from clustertilt.tilting import CTObject, alpha_census, is_cluster_tilting, is_rigid
from conftest import FOUR_CYCLE, SHAPE_ONE, THREE_CYCLE, cat, cts


def marked_iso(Q1, m1, Q2, m2):
    g1, g2 = nx.DiGraph(), nx.DiGraph()
    for g, Q, m in ((g1, Q1, m1), (g2, Q2, m2)):
        g.add_nodes_from((v, {"marked": v == m}) for v in Q.vertices)
        g.add_edges_from(Q.arrows)
    return DiGraphMatcher(g1, g2, node_match=lambda a, b: a["marked"] == b["marked"]).is_isomorphic()


def full_wedge(m):
    C = cat("A", m)
    return C, region_at(C, C.cover.level[m], m)


def test_empty_and_single_vertex():
    C, w1 = full_wedge(1)
    assert reconstruct_a(C, ATriangle(Quiver(("s",)), "s"), w1) == {Indec(0, 1)}
    C3 = cat("A", 3)
    assert reconstruct_a(C3, EMPTY_TRIANGLE, region_at(C3, 0, 0)) == set()


def test_three_cycle_fills_the_central_triangle():
    C, w = full_wedge(3)
    out = reconstruct_a(C, ATriangle(THREE_CYCLE, 1), w)
    assert len(out) == 3 and w.top in out
    assert quiver_iso(THREE_CYCLE, ct_quiver(C, CTObject(tuple(out)))) is not None


def test_split_of_a_marked_three_cycle():
    left, right = split(ATriangle(THREE_CYCLE, 1))
    assert (left.marked, right.marked) == (2, 3)
    assert len(left) == len(right) == 1


def test_vertex_count_must_match_region():
    from clustertilt.ar_model import MisuseError

    C, w = full_wedge(4)
    with pytest.raises(MisuseError):
        reconstruct_a(C, ATriangle(THREE_CYCLE, 1), w)


@pytest.mark.parametrize("m", range(1, 7))
def test_every_marked_triangle_is_realized_in_the_full_wedge(m):
    C, w = full_wedge(m)
    seen = set()
    for Q in quiver_atlas(C).values():
        for s in connecting_vertices(Q):
            t = ATriangle(Q, s)
            out = reconstruct_a(C, t, w)
            assert w.top in out and out <= w.members and len(out) == m
            assert is_rigid(C, out)
            # maximal rigid inside the region
            assert not any(z not in out and all(C.ext(z, x) == 0 for x in out) for z in w.members)
            assert marked_iso(Q, s, ct_quiver(C, CTObject(tuple(out))), w.top)
            seen.add(frozenset(out))
    assert len(seen) == len([T for T in cts("A", m) if set(T) <= w.members])


@pytest.mark.parametrize("fam,n", [("A", n) for n in range(1, 7)] + [("D", 4), ("D", 5)])
def test_round_trip(fam, n):
    C = cat(fam, n)
    for T in cts(fam, n):
        Q = ct_quiver(C, T)
        spec, U = reconstruct(Q)
        assert spec == C.spec
        assert is_cluster_tilting(C, U)
        assert quiver_iso(Q, ct_quiver(C, U)) is not None


@pytest.mark.parametrize("n", [4, 5, 6])
def test_alpha_count_follows_the_shape(n):
    C = cat("D", n)
    for Q in quiver_atlas(C).values():
        r = reconstruct_report(Q)
        alphas = [x for x in r.T if C.is_alpha(x)]
        census = alpha_census(C, r.T)
        assert r.shape == f"D{census}"
        if r.shape == "D3":
            assert len(alphas) == len(classify(Q).candidates[r.candidate].central)


def test_three_cycle_round_trip():
    spec, T = reconstruct(THREE_CYCLE)
    assert spec == CategorySpec("A", 3)
    assert len(T) == 3


def test_shape_one_gives_a_phi_pair():
    spec, T = reconstruct(SHAPE_ONE)
    C = cat("D", 4)
    assert spec == C.spec
    alphas = [x for x in T if C.is_alpha(x)]
    assert len(alphas) == 2 and phi(C, alphas[0]) == alphas[1]
    assert len([x for x in T if not C.is_alpha(x)]) == 2


def test_every_candidate_of_every_d_quiver_reconstructs():
    C = cat("D", 5)
    for Q in quiver_atlas(C).values():
        for c in classify(Q).candidates:
            r = reconstruct_report(Q, c)
            assert quiver_iso(Q, ct_quiver(C, r.T)) is not None


def test_alpha_positions_fix_the_piece_sizes():
    """For the cycle shapes the alpha-summands fix the size of every piece."""
    for n in (4, 5, 6):
        C = cat("D", n)
        by_alphas = defaultdict(set)
        for T in cts("D", n):
            alphas = frozenset(x for x in T if C.is_alpha(x))
            d = classify(ct_quiver(C, T))
            match = next(c for c in d.candidates if set(c.central) == alphas)
            if match.shape == "D1":
                # the two pieces hang on the stars; only their total is fixed
                assert sum(match.sizes) == n - 2
                continue
            sizes = {c: len(t) for c, t in zip(match.central, match.attached)}
            by_alphas[alphas].add((match.shape, tuple(sorted(sizes.items()))))
        assert all(len(v) == 1 for v in by_alphas.values())


def test_verify_reports():
    rep = verify_roundtrip(FOUR_CYCLE)
    assert rep.ok and len(rep.candidates) >= 2
    text = "\n".join(rep.lines())
    assert "candidate 0" in text and "branch" in text and "D_4" in text
    bad = verify_roundtrip(Quiver((1, 2), ((1, 2), (2, 1))))
    assert not bad.ok and bad.stage == "rejected at classify" and "2-cycle" in bad.message
