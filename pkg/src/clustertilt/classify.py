"""Recognition of cluster-tilted quivers of type A and D.

Type A is decided by the local conditions on cycles and neighbours.  The D
shapes are found by locating a core of alpha-vertices and peeling off the
attached type-A pieces, each of which must hang on its star vertex as a
connecting vertex.

D shapes are reported in one of two forms:

* ``D1``: ``central = (m1, m2)``, two non-adjacent vertices with the same
  neighbours; ``attached = (at star, at star')`` where star sends arrows to
  both m's and star' receives arrows from both.
* ``D2`` / ``D3``: ``central = (A_1, ..., A_c)`` ordered so that the spike
  of gap r runs ``A_r -> star_r -> A_{r+1}`` (indices mod c); for c >= 3
  the cycle arrows are ``A_{r+1} -> A_r``.  ``attached[r]`` is the piece
  hanging on star_r, empty when the spike is absent.
"""

from dataclasses import dataclass, field
from typing import Optional

import networkx as nx

from .presentation import NotClusterTilted, Quiver


@dataclass(frozen=True)
class ATriangle:
    quiver: Quiver
    marked: Optional[object] = None

    def __post_init__(self):
        if self.marked is None:
            if len(self.quiver):
                raise ValueError("a non-empty triangle needs a marked vertex")
            return
        if self.marked not in connecting_vertices(self.quiver):
            raise ValueError(f"{self.marked} is not a connecting vertex")

    def __len__(self):
        return len(self.quiver)


EMPTY_TRIANGLE = ATriangle(Quiver(()))


@dataclass(frozen=True)
class ShapeDecomposition:
    shape: str
    central: tuple
    attached: tuple
    candidates: tuple = field(default=(), compare=False, repr=False)

    @property
    def sizes(self):
        return tuple(len(t) for t in self.attached)

    @property
    def rank(self):
        return len(self.central) + sum(self.sizes)

    @property
    def family(self):
        return "A" if self.shape == "TypeA" else "D"

    def describe(self):
        if self.shape == "TypeA":
            t = self.attached[0]
            return f"TypeA; connecting vertices: {','.join(str(v) for v in sorted_vertices(t.quiver, connecting_vertices(t.quiver)))}"
        central = ",".join(str(v) for v in self.central)
        parts = []
        for t in self.attached:
            parts.append(f"{len(t)}@{t.marked}" if len(t) else "0")
        return f"{self.shape}; central: {central}; triangles: {' '.join(parts)}"


def sorted_vertices(Q, vs):
    return [v for v in Q.vertices if v in vs]


# -- type A -----------------------------------------------------------------

def _three_cycles(Q):
    """Oriented 3-cycles as frozensets of vertices."""
    arrows = set(Q.arrows)
    out = set()
    for a, b in arrows:
        for c in Q.successors(b):
            if c not in (a, b) and (c, a) in arrows:
                out.add(frozenset((a, b, c)))
    return out


def _underlying(Q):
    g = nx.Graph()
    g.add_nodes_from(Q.vertices)
    g.add_edges_from(Q.arrows)
    return g


def precondition_failure(Q):
    """Name the first basic violation (loops, 2-cycles, ...), or None."""
    if not len(Q):
        return "empty quiver"
    counts = Q.counts()
    for (s, t), k in sorted(counts.items(), key=str):
        if s == t:
            return f"loop forbidden (at {s})"
    for (s, t) in sorted(counts, key=str):
        if (t, s) in counts:
            return f"2-cycle forbidden ({s} <-> {t})"
    for (s, t), k in sorted(counts.items(), key=str):
        if k > 1:
            return f"multiple arrows forbidden ({k} arrows {s} -> {t})"
    if not Q.is_connected():
        return "quiver is disconnected"
    return None


def type_a_failure(Q):
    """The first violated type-A condition, or None if Q is of type A."""
    basic = precondition_failure(Q)
    if basic:
        return basic
    arrows = set(Q.arrows)
    for cyc in nx.chordless_cycles(_underlying(Q)):
        if len(cyc) != 3:
            return f"chordless cycle of length {len(cyc)} through {','.join(str(v) for v in cyc)} (only oriented 3-cycles allowed)"
        a, b, c = cyc
        if not ({(a, b), (b, c), (c, a)} <= arrows or {(b, a), (c, b), (a, c)} <= arrows):
            return f"non-oriented 3-cycle through {a},{b},{c}"
    cycles = _three_cycles(Q)
    for v in Q.vertices:
        nb = Q.neighbours(v)
        on = [c for c in cycles if v in c]
        if len(nb) > 4:
            return f"vertex {v} has {len(nb)} neighbours (at most 4 allowed)"
        if len(nb) == 4 and (len(on) != 2 or len(on[0] | on[1]) != 5):
            return f"vertex {v} has 4 neighbours whose arrows do not split into two 3-cycles"
        if len(nb) == 3 and len(on) != 1:
            return f"vertex {v} has 3 neighbours but lies on {len(on)} 3-cycles (needs exactly 1)"
    return None


def is_type_a_quiver(Q):
    return type_a_failure(Q) is None


def connecting_vertices(Q):
    cycles = _three_cycles(Q)
    out = set()
    for v in Q.vertices:
        d = Q.degree(v)
        if d <= 1 or (d == 2 and any(v in c for c in cycles)):
            out.add(v)
    return out


def _triangle(Q, vs, star):
    """The type-A piece on ``vs`` marked at ``star``, or None."""
    sub = Q.induced(vs)
    if not is_type_a_quiver(sub) or star not in connecting_vertices(sub):
        return None
    return ATriangle(sub, star)


def _peel(Q, core, stars, drop=()):
    """Split Q minus ``core`` (and the arrows ``drop``) into one piece per star.

    ``stars`` lists a star vertex or None per slot; returns a tuple of
    ATriangles or None if the pieces do not line up.
    """
    rest = [v for v in Q.vertices if v not in set(core)]
    R = Q.induced(rest).without_arrows([a for a in drop if a[0] in rest and a[1] in rest])
    comps = R.components()
    present = [s for s in stars if s is not None]
    if len(comps) != len(present):
        return None
    out = []
    for s in stars:
        if s is None:
            out.append(EMPTY_TRIANGLE)
            continue
        comp = next(c for c in comps if s in c)
        if sum(1 for t in present if t in comp) != 1:
            return None
        t = _triangle(R, comp, s)
        if t is None:
            return None
        out.append(t)
    return tuple(out)


# -- D shapes ---------------------------------------------------------------

def _d1_candidates(Q):
    arrows = set(Q.arrows)
    out = []
    vs = Q.vertices
    for i, m1 in enumerate(vs):
        for m2 in vs[i + 1:]:
            if (m1, m2) in arrows or (m2, m1) in arrows:
                continue
            ins, outs = Q.predecessors(m1), Q.successors(m1)
            if ins != Q.predecessors(m2) or outs != Q.successors(m2):
                continue
            if len(ins) > 1 or len(outs) > 1 or not (ins or outs):
                continue
            star = ins[0] if ins else None
            star2 = outs[0] if outs else None
            drop = []
            if star is not None and star2 is not None:
                if (star2, star) not in arrows:
                    continue
                drop = [(star2, star)]
            pieces = _peel(Q, (m1, m2), (star, star2), drop)
            if pieces is not None:
                out.append(ShapeDecomposition("D1", (m1, m2), pieces))
    return out


def _cycle_candidate(Q, cyc):
    """Check a central α-sequence; return a decomposition or None."""
    arrows = set(Q.arrows)
    c = len(cyc)
    core = set(cyc)
    if c >= 3:
        expected = {(cyc[(r + 1) % c], cyc[r]) for r in range(c)}
    else:
        expected = set()
    if set(Q.arrows_within(core)) != expected:
        return None
    stars = []
    for r in range(c):
        a, b = cyc[r], cyc[(r + 1) % c]
        spikes = [s for s in Q.successors(a) if s not in core and (s, b) in arrows]
        if len(spikes) > 1:
            return None
        stars.append(spikes[0] if spikes else None)
    for r in range(c):
        allowed = {stars[r], stars[r - 1]} - {None}
        if c >= 3:
            allowed |= {cyc[(r + 1) % c], cyc[r - 1]}
        if Q.neighbours(cyc[r]) - allowed:
            return None
    if c == 2 and stars[0] == stars[1]:
        return None
    pieces = _peel(Q, cyc, stars)
    if pieces is None:
        return None
    return ShapeDecomposition("D2" if c == 2 else "D3", tuple(cyc), pieces)


def _d2_candidates(Q):
    out = []
    vs = Q.vertices
    for i, a in enumerate(vs):
        for b in vs[i + 1:]:
            d = _cycle_candidate(Q, (a, b))
            if d is not None:
                out.append(d)
    return out


def _d3_candidates(Q):
    g = nx.DiGraph()
    g.add_nodes_from(Q.vertices)
    g.add_edges_from(Q.arrows)
    index = {v: k for k, v in enumerate(Q.vertices)}
    found = []
    for cyc in nx.simple_cycles(g):
        if len(cyc) < 3:
            continue
        # the cycle runs v0 -> v1 -> ...; the central order is its reverse
        seq = list(reversed(cyc))
        k = min(range(len(seq)), key=lambda j: index[seq[j]])
        seq = tuple(seq[k:] + seq[:k])
        d = _cycle_candidate(Q, seq)
        if d is not None:
            found.append(d)
    found.sort(key=lambda d: [index[v] for v in d.central])
    return found


def classify(Q):
    """Shape decomposition of a cluster-tilted quiver of type A or D.

    Raises NotClusterTilted naming the violated condition otherwise.
    """
    basic = precondition_failure(Q)
    if basic:
        raise NotClusterTilted(basic)
    reason = type_a_failure(Q)
    if reason is None:
        marked = sorted_vertices(Q, connecting_vertices(Q))[0]
        return ShapeDecomposition("TypeA", (), (ATriangle(Q, marked),))
    cands = _d1_candidates(Q) + _d2_candidates(Q) + _d3_candidates(Q)
    cands = [c for c in cands if c.rank >= 4]
    if not cands:
        raise NotClusterTilted(f"not of type A or D: {reason}")
    first = cands[0]
    return ShapeDecomposition(first.shape, first.central, first.attached, tuple(cands))


def shape_candidates(decomp):
    return decomp.candidates or (decomp,)
