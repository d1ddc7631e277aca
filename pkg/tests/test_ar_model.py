import pytest
from hypothesis import given, settings, strategies as st

from clustertilt.ar_model import (CategorySpec, Indec, MisuseError, SpecError, b_regions, build, phi,
                                  region_at, tau, tau_distance, tau_period, triangle_intersection,
                                  triangle_region)
from conftest import cat


@pytest.mark.parametrize("n", range(1, 9))
def test_type_a_has_n_n_plus_3_over_2_indecomposables(n):
    assert len(cat("A", n).indecs) == n * (n + 3) // 2


@pytest.mark.parametrize("n", range(4, 9))
def test_type_d_has_n_squared_indecomposables(n):
    assert len(cat("D", n).indecs) == n * n


@pytest.mark.parametrize("family,rank", [("E", 6), ("A", 0), ("D", 1), ("A", -2)])
def test_invalid_specs_are_refused(family, rank):
    with pytest.raises(SpecError):
        CategorySpec(family, rank)


def test_small_d_ranks_are_normalized():
    C3 = build(CategorySpec("D", 3))
    assert C3.spec == CategorySpec("A", 3) and "A_3" in C3.note
    C2 = build(CategorySpec("D", 2))
    assert len(C2.indecs) == 4 and "A_1 x A_1" in C2.note
    assert [len(o) for o in C2.tau_orbits()] == [2, 2]


@pytest.mark.parametrize("n", range(1, 8))
def test_type_a_orbits(n):
    sizes = sorted(len(o) for o in cat("A", n).tau_orbits())
    # orbits of rows i and n+1-i are glued by the shift; a middle row stands alone
    want = [n + 3] * (n // 2) + ([(n + 3) // 2] if n % 2 else [])
    assert sizes == sorted(want)


@pytest.mark.parametrize("n", range(4, 8))
def test_type_d_beta_orbits_have_period_n(n):
    C = cat("D", n)
    assert all(tau_period(C, x) == n for x in C.betas())
    # for odd n the shift swaps the two alpha rows
    want = n if n % 2 == 0 else 2 * n
    assert all(tau_period(C, a) == want for a in C.alphas())


@pytest.mark.parametrize("n", range(4, 8))
def test_phi_is_a_fixed_point_free_involution_on_alpha_rows(n):
    C = cat("D", n)
    for a in C.alphas():
        b = phi(C, a)
        assert b != a and C.is_alpha(b) and phi(C, b) == a
        assert C.xpos(a) == C.xpos(b)
        assert tau(C, phi(C, a)) == phi(C, tau(C, a))


def test_phi_misuse():
    with pytest.raises(MisuseError):
        phi(cat("D", 4), Indec(0, 1))
    with pytest.raises(MisuseError):
        phi(cat("A", 4), Indec(0, 4))


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_tau_is_invertible(data):
    fam, n = data.draw(st.sampled_from([("A", 3), ("A", 6), ("D", 4), ("D", 5)]))
    C = cat(fam, n)
    x = data.draw(st.sampled_from(C.indecs))
    k = data.draw(st.integers(-12, 12))
    assert tau(C, tau(C, x, k), -k) == x


@pytest.mark.parametrize("m", range(1, 7))
def test_full_wedge_is_the_module_category_of_linear_a(m):
    C = cat("A", m)
    top = region_at(C, C.cover.level[m], m)
    assert len(top) == m * (m + 1) // 2
    assert top.top == Indec(0, m)
    # the slice (0, i) is the left edge: the projectives
    assert {Indec(0, i) for i in range(1, m + 1)} <= top.members
    assert triangle_region(C, Indec(0, m)) == top


def test_triangle_region_refuses_alpha_apex():
    with pytest.raises(MisuseError):
        triangle_region(cat("D", 5), Indec(0, 4))


@pytest.mark.parametrize("n", range(4, 8))
def test_b_region_is_a_copy_of_type_a_n_minus_2(n):
    C = cat("D", n)
    for a in C.alphas():
        B, B_star, star_B = b_regions(C, a)
        assert len(B) == (n - 2) * (n + 1) // 2
        assert B == B_star | star_B


@pytest.mark.parametrize("n", range(4, 8))
def test_triangle_intersection_orders(n):
    C = cat("D", n)
    for a1 in C.alphas():
        for a2 in C.alphas():
            if a2 in (a1, phi(C, a1)):
                continue
            k = tau_distance(C, a1, a2)
            d1, d2 = triangle_intersection(C, a1, a2)
            assert (d1.order, d2.order) == (k - 1, n - k - 1)
            assert not (d1.members & d2.members)
            assert len(d1) == d1.order * (d1.order + 1) // 2


def test_triangle_intersection_needs_distinct_orbits():
    C = cat("D", 4)
    a = Indec(0, 3)
    with pytest.raises(MisuseError):
        triangle_intersection(C, a, phi(C, a))
