"""Explicit cluster-tilting objects realizing a classified quiver.

Type-A pieces are placed by recursive wedge splitting: in a wedge of order
m with apex at x-level x0, removing the marked vertex leaves a left piece
of order j (apex at ``x0 - (m - j)``) and a right piece of order j' (apex at
``x0 + (m - j')``) with ``j + j' = m - 1``.  An arrow ``s -> u`` out of the
marked vertex s sends u to the left; an arrow ``w -> s`` sends w right.

For type D the alpha-objects are placed first, spaced along their tau-orbit
by the sizes of the attached pieces, and every piece is then filled into
the triangle of beta-objects between its two alpha-neighbours.  Choices the
combinatorics leave open (phi-tags, direction, mirror image) are branched
and each assembled object is validated by recomputing its quiver.
"""

import itertools
from dataclasses import dataclass, field

from .ar_model import (CategorySpec, Indec, MisuseError, phi, region_at, tau,
                       triangle_intersection)
from .classify import ATriangle, EMPTY_TRIANGLE, classify
from .presentation import NotClusterTilted, ct_quiver, quiver_iso
from .tilting import CTObject, IntegrityError, cached_build, is_cluster_tilting, is_rigid


# -- type A pieces ----------------------------------------------------------

def split(t):
    """``(left, right)`` pieces left after removing the marked vertex."""
    Q, s = t.quiver, t.marked
    rest = Q.induced([v for v in Q.vertices if v != s])
    outs, ins = Q.successors(s), Q.predecessors(s)
    if len(outs) + len(ins) == 0:
        return EMPTY_TRIANGLE, EMPTY_TRIANGLE
    if len(outs) + len(ins) == 1:
        if outs:
            return ATriangle(rest, outs[0]), EMPTY_TRIANGLE
        return EMPTY_TRIANGLE, ATriangle(rest, ins[0])
    if len(outs) != 1 or len(ins) != 1:
        raise MisuseError(f"marked vertex {s} is not a connecting vertex")
    u, w = outs[0], ins[0]
    rest = rest.without_arrows([(u, w)])
    comps = rest.components()
    cu = next(c for c in comps if u in c)
    cw = next(c for c in comps if w in c)
    if cu == cw or len(comps) != 2:
        raise MisuseError(f"removing {s} does not split the triangle in two")
    return ATriangle(rest.induced(cu), u), ATriangle(rest.induced(cw), w)


def place(C, t, x0, m, mirror=False):
    """Objects realizing ``t`` minus its marked vertex below an apex at ``(x0, m)``."""
    if len(t) != m:
        raise MisuseError(f"triangle has {len(t)} vertices but the region has order {m}")
    if m <= 1:
        return []
    left, right = split(t)
    if mirror:
        left, right = right, left
    out = []
    for piece, sign in ((left, -1), (right, 1)):
        j = len(piece)
        if j == 0:
            continue
        x = x0 + sign * (m - j)
        region = region_at(C, x, j)
        out.append(region.top)
        out.extend(place(C, piece, x, j, mirror))
    return out


def reconstruct_a(C, t, target, mirror=False):
    """Maximal rigid subset of ``target`` realizing the triangle ``t``."""
    if len(t) != target.order:
        raise MisuseError(f"triangle has {len(t)} vertices but the region has order {target.order}")
    if target.order == 0:
        return set()
    if target.x0 is None:
        raise MisuseError("target region has no apex position")
    out = {target.top, *place(C, t, target.x0, target.order, mirror)}
    if len(out) != target.order or not out <= target.members:
        raise IntegrityError(f"placement of {len(out)} objects escapes the region {target.top}")
    return out


# -- assembling and validation ----------------------------------------------

@dataclass
class Attempt:
    candidate: int
    shape: str
    branch: dict
    summands: tuple = ()
    ok: bool = False
    reason: str = ""


@dataclass
class Reconstruction:
    spec: CategorySpec
    T: CTObject
    shape: str
    candidate: int
    branch: dict
    witness: dict
    attempts: list = field(default_factory=list, repr=False)


def _check(C, Q, summands):
    if len(set(summands)) != C.rank:
        return None, "summands collide"
    if not is_cluster_tilting(C, summands):
        return None, "not cluster-tilting"
    T = CTObject(tuple(summands))
    witness = quiver_iso(Q, ct_quiver(C, T))
    if witness is None:
        return None, "quiver not isomorphic"
    return (T, witness), ""


def _type_a_branches(Q, d):
    m = len(Q)
    C = cached_build(CategorySpec("A", m))
    top = region_at(C, C.cover.level[m], m)
    for mirror in (False, True):
        yield C, {"mirror": mirror}, lambda mirror=mirror: reconstruct_a(C, d.attached[0], top, mirror)


def _d1_branches(Q, d):
    n = d.rank
    C = cached_build(CategorySpec("D", n))
    A = Indec(0, n - 1)
    pA = phi(C, A)
    m1, m2 = d.central
    t = ATriangle(Q.induced([v for v in Q.vertices if v != m1]), m2)
    x = C.xpos(A)
    for mirror in (False, True):
        yield C, {"mirror": mirror}, lambda mirror=mirror: {A, pA, *place(C, t, x, n - 1, mirror)}


def _alpha_cycles(C, gaps):
    """All alpha-sequences with A_{r+1} = tau^{sign k_r}(A_r or phi A_r), pairwise rigid."""
    n, c = C.rank, len(gaps)
    start = Indec(0, n - 1)
    for sign in (-1, 1):
        def grow(seq, tags):
            r = len(seq) - 1
            if r == c - 1:
                prev = seq[-1]
                closing = {tau(C, prev, sign * gaps[r]), tau(C, phi(C, prev), sign * gaps[r])}
                if start in closing:
                    yield sign, tuple(tags), tuple(seq)
                return
            prev = seq[-1]
            for tag in (0, 1):
                base = phi(C, prev) if tag else prev
                nxt = tau(C, base, sign * gaps[r])
                if nxt in seq or not is_rigid(C, seq + [nxt]):
                    continue
                yield from grow(seq + [nxt], tags + [tag])

        yield from grow([start], [])


def _gap_regions(C, a, b, order):
    """Triangles of the given order between consecutive alpha-objects."""
    out = []
    for x, y in ((a, b), (b, a)):
        try:
            d1, d2 = triangle_intersection(C, x, y)
        except MisuseError:
            continue
        for d in (d1, d2):
            if d.order == order and d not in out:
                out.append(d)
    return out


def _cycle_branches(Q, d):
    n = d.rank
    C = cached_build(CategorySpec("D", n))
    gaps = [len(t) + 1 for t in d.attached]
    for sign, tags, alphas in _alpha_cycles(C, gaps):
        c = len(alphas)
        choices = []
        for r in range(c):
            order = gaps[r] - 1
            if order == 0:
                choices.append([None])
            else:
                choices.append(_gap_regions(C, alphas[r], alphas[(r + 1) % c], order))
        for regions in itertools.product(*choices):
            for mirror in (False, True):
                def build_T(regions=regions, mirror=mirror):
                    out = set(alphas)
                    for t, region in zip(d.attached, regions):
                        if region is not None:
                            out |= reconstruct_a(C, t, region, mirror)
                    return out
                info = {"direction": sign, "phi_tags": tags, "mirror": mirror,
                        "regions": tuple(str(g.top) if g else "-" for g in regions)}
                yield C, info, build_T


_BRANCHES = {"TypeA": _type_a_branches, "D1": _d1_branches, "D2": _cycle_branches, "D3": _cycle_branches}


def reconstruct_report(Q, decomp=None):
    """Try every candidate and branch; return a Reconstruction (attempts attached)."""
    if decomp is None:
        decomp = classify(Q)
    cands = decomp.candidates or (decomp,)
    attempts = []
    for idx, d in enumerate(cands):
        for C, info, make in _BRANCHES[d.shape](Q, d):
            att = Attempt(idx, d.shape, info)
            attempts.append(att)
            try:
                summands = make()
            except (MisuseError, IntegrityError) as e:
                att.reason = str(e)
                continue
            att.summands = tuple(sorted(summands))
            found, att.reason = _check(C, Q, summands)
            if found is None:
                continue
            att.ok = True
            T, witness = found
            return Reconstruction(C.spec, T, d.shape, idx, info, witness, attempts)
    raise IntegrityError(f"no branch realizes the quiver ({len(attempts)} branches over {len(cands)} candidates)")


def reconstruct(Q):
    """``(CategorySpec, CTObject)`` whose quiver is isomorphic to Q."""
    r = reconstruct_report(Q)
    return r.spec, r.T


@dataclass
class RoundTripReport:
    ok: bool
    stage: str
    message: str = ""
    candidates: tuple = ()
    result: object = None

    def lines(self):
        out = [f"round trip: {'pass' if self.ok else 'FAIL'} ({self.stage})"]
        if self.message:
            out.append(f"  {self.message}")
        for i, c in enumerate(self.candidates):
            out.append(f"  candidate {i}: {c.describe()}")
        r = self.result
        if r is not None:
            out.append(f"  chosen candidate {r.candidate} ({r.shape}), branch {_fmt_branch(r.branch)}")
            out.append(f"  branches tried: {len(r.attempts)}")
            out.append(f"  object in {r.spec}: {r.T}")
            out.append("  iso: " + ", ".join(f"{v}->{w}" for v, w in r.witness.items()))
        return out


def _fmt_branch(info):
    return " ".join(f"{k}={v}" for k, v in info.items())


def verify_roundtrip(Q):
    try:
        decomp = classify(Q)
    except NotClusterTilted as e:
        return RoundTripReport(False, "rejected at classify", str(e))
    cands = decomp.candidates or (decomp,)
    try:
        r = reconstruct_report(Q, decomp)
    except IntegrityError as e:
        return RoundTripReport(False, "reconstruct failed", str(e), cands)
    C = cached_build(r.spec)
    if quiver_iso(Q, ct_quiver(C, r.T)) is None:
        return RoundTripReport(False, "quiver mismatch", "", cands, r)
    return RoundTripReport(True, "quiver isomorphism holds", "", cands, r)
