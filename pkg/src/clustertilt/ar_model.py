"""Combinatorial model of cluster categories of type A_n and D_n.

An indecomposable is stored as ``Indec(orbit, row)``: the fundamental-domain
representative of its F-orbit in the universal cover (see ``cover``).  Row 1
is the bottom row.  In type D the rows ``1 .. n-2`` form the chain and the
rows ``n-1, n`` are the two alpha-rows at the fork.

Geometry used by the triangle regions: a cover vertex ``(p, i)`` sits at
x-coordinate ``2p + level(i)``; arrows move one step right and one row up or
down.  A wedge of order m with apex at ``(x0, m)`` is
``{(x, r) : 1 <= r <= m, |x - x0| <= m - r}``.
"""

from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .cover import Cover


class SpecError(ValueError):
    """Invalid family/rank combination."""


class MisuseError(ValueError):
    """An operation was called outside of its domain."""


class Indec(NamedTuple):
    orbit: int
    row: int

    def __str__(self):
        return f"({self.orbit},{self.row})"


@dataclass(frozen=True)
class CategorySpec:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in ("A", "D"):
            raise SpecError(f"unknown family {self.family!r}; expected A or D")
        if not isinstance(self.rank, int) or self.rank < 1:
            raise SpecError(f"rank must be a positive integer, got {self.rank!r}")
        if self.family == "D" and self.rank < 2:
            raise SpecError(f"D_{self.rank} does not exist; type D needs rank >= 2 (>= 4 proper)")

    def __str__(self):
        return f"{self.family}_{self.rank}"

    def normalized(self):
        """Return ``(spec, components, note)`` with D_2, D_3 rewritten."""
        if self.family == "D" and self.rank == 3:
            return CategorySpec("A", 3), (CategorySpec("A", 3),), "D_3 normalized to A_3"
        if self.family == "D" and self.rank == 2:
            a1 = CategorySpec("A", 1)
            return self, (a1, a1), "D_2 normalized to A_1 x A_1"
        return self, (self,), None


def dynkin_arrows(spec):
    """Arrows of the reference orientation on vertices ``1..rank``."""
    n = spec.rank
    if spec.family == "A":
        return [(i, i + 1) for i in range(1, n)]
    if n == 2:
        return []
    # fork: chain 1 -> ... -> n-2, with both leaves pointing at n-2
    return [(i, i + 1) for i in range(1, n - 2)] + [(n - 1, n - 2), (n, n - 2)]


@dataclass(eq=False)
class ClusterCategory:
    spec: CategorySpec
    indecs: tuple
    tau_map: dict
    ar_arrows: tuple
    hom_table: dict
    ext_table: dict
    cover: Cover = field(repr=False)
    components: tuple = ()
    note: Optional[str] = None
    cache: dict = field(default_factory=dict, repr=False)

    @property
    def rank(self):
        return self.spec.rank

    @property
    def family(self):
        return self.spec.family

    def __contains__(self, x):
        return x in self.tau_map

    def hom(self, x, y):
        return self.hom_table[x, y]

    def ext(self, x, y):
        return self.ext_table[x, y]

    def lift(self, x):
        """The cover vertex of ``x`` inside the fundamental domain."""
        return (x.orbit, x.row)

    def project(self, v):
        p, i = self.cover.canonical(v)
        return Indec(p, i)

    def xpos(self, x):
        return self.cover.xlevel(self.lift(x))

    def tau_orbits(self):
        seen, orbits = set(), []
        for x in self.indecs:
            if x in seen:
                continue
            orbit = [x]
            seen.add(x)
            y = self.tau_map[x]
            while y != x:
                orbit.append(y)
                seen.add(y)
                y = self.tau_map[y]
            orbits.append(tuple(orbit))
        return orbits

    def is_alpha(self, x):
        return self.family == "D" and self.rank >= 4 and x.row >= self.rank - 1

    def alphas(self):
        return [x for x in self.indecs if self.is_alpha(x)]

    def betas(self):
        return [x for x in self.indecs if not self.is_alpha(x)]


def build(spec):
    """Build the full model: indecomposables, tau, AR arrows, Hom/Ext tables."""
    from . import homext

    if isinstance(spec, tuple):
        spec = CategorySpec(*spec)
    spec, components, note = spec.normalized()
    cover = Cover(spec.rank, dynkin_arrows(spec))
    indecs = tuple(sorted(Indec(*v) for v in cover.domain()))
    tau_map = {x: Indec(*cover.canonical(cover.tau(x))) for x in indecs}
    arrows = []
    for x in indecs:
        for w in cover.arrows_out(x):
            arrows.append((x, Indec(*cover.canonical(w))))
    hom_table = {}
    for x in indecs:
        for y in indecs:
            hom_table[x, y] = homext.knitted_hom(cover, x, y)
    ext_table = {(x, y): hom_table[x, tau_map[y]] for x in indecs for y in indecs}
    return ClusterCategory(spec, indecs, tau_map, tuple(sorted(arrows)), hom_table,
                           ext_table, cover, components, note)


def tau(C, x, k=1):
    """k-fold AR-translate; negative k applies the inverse."""
    if x not in C:
        raise MisuseError(f"{x} is not an indecomposable of {C.spec}")
    return C.project(C.cover.tau(C.lift(x), k))


def tau_period(C, x):
    y, k = tau(C, x), 1
    while y != x:
        y, k = tau(C, y), k + 1
    return k


def phi(C, a):
    """The other alpha-object in the middle term of a mesh through ``a``."""
    if not C.is_alpha(a):
        raise MisuseError(f"phi is defined on alpha-objects of D_n only; {a} in {C.spec} is not one")
    cov = C.cover
    partners = set()
    for z in cov.arrows_out(C.lift(a)):
        for m in cov.arrows_in(z):
            other = C.project(m)
            if other != a and C.is_alpha(other):
                partners.add(other)
    if len(partners) != 1:
        raise AssertionError(f"phi({a}) is not unique: {sorted(partners)}")
    return partners.pop()


@dataclass(frozen=True)
class TriangleRegion:
    order: int
    top: Optional[Indec]
    members: frozenset = field(compare=False, default=frozenset())
    # x-level of the apex in the cover; several lifts may share one ``top``
    x0: Optional[int] = field(compare=False, default=None)

    def __len__(self):
        return len(self.members)

    def __contains__(self, x):
        return x in self.members


EMPTY_REGION = TriangleRegion(0, None, frozenset())


def wedge(C, x0, order):
    """Members of the wedge of given order whose apex is at x-level ``x0``."""
    cov = C.cover
    out = []
    for r in range(1, order + 1):
        for x in range(x0 - (order - r), x0 + (order - r) + 1, 2):
            d = x - cov.level[r]
            if d % 2:
                raise MisuseError(f"no vertex of row {r} at x-level {x}")
            out.append(C.project((d // 2, r)))
    if len(set(out)) != len(out):
        raise MisuseError(f"wedge of order {order} at x={x0} wraps onto itself")
    return out


def region_at(C, x0, order):
    if order == 0:
        return EMPTY_REGION
    members = wedge(C, x0, order)
    return TriangleRegion(order, members[-1], frozenset(members), x0)


def triangle_region(C, top, x0=None):
    """The wedge below ``top``; its order is the row of ``top``.

    ``x0`` selects a different lift of ``top`` in the cover (type A only
    needs this, since there a tau-orbit passes through two rows).
    """
    if top not in C:
        raise MisuseError(f"{top} is not an indecomposable of {C.spec}")
    if C.is_alpha(top):
        raise MisuseError(f"apex {top} lies in alpha-row {top.row}; a triangle must stay in rows 1..{C.rank - 2}")
    if x0 is None:
        x0 = C.xpos(top)
    return region_at(C, x0, top.row)


def b_regions(C, a):
    """``(B, B_star, star_B)`` of an alpha-object, as sets."""
    pa = phi(C, a)
    B = {x for x in C.betas() if C.ext(x, a) == 0 and C.ext(x, pa) == 0}
    B_star = {x for x in B if C.hom(x, a) == 0}
    star_B = {x for x in B if C.hom(a, x) == 0}
    return B, B_star, star_B


def maximal_triangles(C, members):
    """Decompose a set of beta-objects into maximal wedges contained in it."""
    members = set(members)
    found = []
    for y in sorted(members, key=lambda z: -z.row):
        if any(y in t for t in found):
            continue
        t = triangle_region(C, y)
        if t.members <= members and t not in found:
            found.append(t)
    return found


def tau_distance(C, a1, a2):
    """The k in 0 < k < rank with ``a1`` in {tau^k a2, tau^k phi a2}, or None."""
    targets = {a2, phi(C, a2)}
    for k in range(1, C.rank):
        if tau(C, a1, -k) in targets:
            return k
    return None


def triangle_intersection(C, a1, a2):
    """Split ``B(a1) & B(a2)`` into triangles of orders ``k-1`` and ``n-k-1``.

    The second triangle is the one whose apex receives a nonzero map from
    ``a1``; its order must come out as ``n-k-1``.
    """
    if not (C.is_alpha(a1) and C.is_alpha(a2)):
        raise MisuseError("triangle_intersection needs two alpha-objects")
    k = tau_distance(C, a1, a2)
    if k is None:
        raise MisuseError(f"{a1} is not tau^k of {a2} or of phi({a2}) for 0 < k < {C.rank}")
    common = b_regions(C, a1)[0] & b_regions(C, a2)[0]
    parts = maximal_triangles(C, common)
    if set().union(*[t.members for t in parts]) != common or len(parts) > 2:
        raise AssertionError(f"B({a1}) & B({a2}) is not a union of two triangles")
    second = [t for t in parts if C.hom(a1, t.top) != 0]
    first = [t for t in parts if C.hom(a1, t.top) == 0]
    if len(second) > 1 or len(first) > 1:
        raise AssertionError("both triangles receive maps from a1")
    d1 = first[0] if first else EMPTY_REGION
    d2 = second[0] if second else EMPTY_REGION
    if (d1.order, d2.order) != (k - 1, C.rank - k - 1):
        raise AssertionError(f"triangle orders {(d1.order, d2.order)} != {(k - 1, C.rank - k - 1)}")
    return d1, d2


def outer_orbit(C):
    """The tau-orbit through the bottom row (type A: it also covers the top row)."""
    start = Indec(0, 1)
    return next(set(o) for o in C.tau_orbits() if start in o)
