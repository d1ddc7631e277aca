"""Acceptance checks run by ``clustertilt selftest``.

Each check returns ``(passed, detail)``.  Exceptions raised by the library
(integrity errors in particular) are caught by ``run`` and reported as
failures of the check that raised them.
"""

import time
from math import comb

from . import tilting
from .ar_model import CategorySpec, build, outer_orbit, phi, tau, triangle_intersection
from .classify import classify, connecting_vertices
from .homext import diagonal_oracle, gabriel_oracle
from .mesh import MeshCategory, rank
from .presentation import NotClusterTilted, Quiver, ct_quiver, quiver_iso, relations
from .reconstruct import reconstruct_report
from .tilting import (alpha_census, enumerate_ct, exchange_graph, forget_pivot, lift_ct,
                      quotient_cts, subfactor)

CT_COUNTS = {("A", 2): 5, ("A", 3): 14, ("A", 4): 42, ("D", 4): 50, ("D", 5): 182, ("D", 6): 672}


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def d_cluster_count(n):
    return (3 * n - 2) * comb(2 * n - 2, n - 1) // n


class Session:
    """Builds categories once; ``corrupt`` injects a fault into every Ext table."""

    def __init__(self, max_a=8, max_d=6, corrupt=False):
        self.max_a, self.max_d, self.corrupt = max_a, max_d, corrupt
        self._cats, self._cts = {}, {}

    def specs(self):
        return ([CategorySpec("A", n) for n in range(1, self.max_a + 1)]
                + [CategorySpec("D", n) for n in range(4, self.max_d + 1)])

    def category(self, spec):
        key = (spec.family, spec.rank)
        if key not in self._cats:
            C = build(spec)
            if self.corrupt:
                _corrupt(C)
            self._cats[key] = C
        return self._cats[key]

    def cts(self, spec):
        key = (spec.family, spec.rank)
        if key not in self._cts:
            self._cts[key] = enumerate_ct(self.category(spec))
        return self._cts[key]


def _corrupt(C):
    """Declare a fake extension between two slice summands."""
    T0 = tilting.reference_object(C)
    if len(T0) < 2:
        return
    x, y = T0.summands[:2]
    C.ext_table[x, y] = C.ext_table[y, x] = 1


# -- criteria ---------------------------------------------------------------

def check_counts(s):
    bad = []
    for spec in s.specs():
        C, n = s.category(spec), spec.rank
        want_ind = n * (n + 3) // 2 if spec.family == "A" else n * n
        want_ct = catalan(n + 1) if spec.family == "A" else d_cluster_count(n)
        got_ct = len(s.cts(spec))
        if len(C.indecs) != want_ind:
            bad.append(f"{spec}: {len(C.indecs)} indecomposables, expected {want_ind}")
        if got_ct != want_ct or CT_COUNTS.get((spec.family, n), got_ct) != got_ct:
            bad.append(f"{spec}: {got_ct} cluster-tilting objects, expected {want_ct}")
        if len(exchange_graph(C)) != got_ct:
            bad.append(f"{spec}: exchange graph reaches {len(exchange_graph(C))} objects")
    return not bad, "; ".join(bad) or f"{len(s.specs())} categories"


def check_oracles(s):
    bad, quivers = [], 0
    for spec in s.specs():
        C = s.category(spec)
        if spec.family == "A":
            oracle = diagonal_oracle(C)
            wrong = [(x, y) for x in C.indecs for y in C.indecs if C.ext(x, y) != oracle.ext(x, y)]
            if wrong:
                bad.append(f"{spec}: knitting and diagonals disagree on {len(wrong)} pairs, e.g. {wrong[0]}")
        for T in s.cts(spec):
            quivers += 1
            if gabriel_oracle(C, T.summands) != ct_quiver(C, T):
                bad.append(f"{spec}: quiver of {T} differs from the mesh computation")
                break
    return not bad, "; ".join(bad) or f"{quivers} quivers agree"


def check_relations(s):
    bad, total = [], 0
    for spec in s.specs():
        C = s.category(spec)
        for T in s.cts(spec):
            total += 1
            try:
                relations(ct_quiver(C, T))
            except NotClusterTilted as e:
                bad.append(f"{spec} {T}: {e}")
                break
    examples = {
        "3-cycle": (Quiver((1, 2, 3), ((1, 2), (2, 3), (3, 1))), 3, 0),
        "shape-1 D4": (Quiver((1, 2, 3, 4), ((1, 2), (1, 3), (2, 4), (3, 4), (4, 1))), 4, 1),
        "oriented 4-cycle": (Quiver((1, 2, 3, 4), ((1, 2), (2, 3), (3, 4), (4, 1))), 4, 0),
    }
    for name, (Q, zeros, comms) in examples.items():
        P = relations(Q)
        if (len(P.zero_relations), len(P.commutativity_relations)) != (zeros, comms):
            bad.append(f"{name}: {len(P.zero_relations)} zero and {len(P.commutativity_relations)} commutativity relations")
    return not bad, "; ".join(bad) or f"{total} presentations"


def lemma_outer_orbit(C, cts):
    outer = outer_orbit(C)
    for T in cts:
        if len(outer & set(T)) < 2:
            return f"{T} has fewer than two summands in the outer orbit"
        conn = connecting_vertices(ct_quiver(C, T))
        if conn != outer & set(T):
            return f"{T}: connecting vertices {sorted(conn)} differ from outer-orbit summands"
    return None


def lemma_alpha_count(C, cts):
    for T in cts:
        if sum(1 for x in T if C.is_alpha(x)) < 2:
            return f"{T} has fewer than two alpha-summands"
    return None


def lemma_subfactor(C, cts):
    for M in C.indecs:
        sub = subfactor(C, M)
        containing = {T for T in cts if M in T}
        lifted = {lift_ct(sub, T_sub) for T_sub in quotient_cts(sub)}
        if lifted != containing:
            return f"pivot {M}: {len(lifted)} lifted objects, {len(containing)} containing it"
        if any(lift_ct(sub, forget_pivot(sub, T)) != T for T in containing):
            return f"pivot {M}: forgetting the pivot is not inverse to lifting"
    return None


def lemma_linear(C, cts):
    """Some tau-translate of every CT object lies in the standard wedge."""
    from .ar_model import region_at

    m = C.rank
    wedge = region_at(C, C.cover.level[m], m).members
    period = max(len(o) for o in C.tau_orbits())
    for T in cts:
        if not any({tau(C, x, k) for x in T} <= wedge for k in range(period)):
            return f"{T} is not a translate of a tilting module over the linear A_{m}"
    return None


def lemma_triangles(C):
    """Items 1 and 4 of the two-triangle lemma for every admissible alpha pair."""
    mesh = MeshCategory.of(C)
    for a1 in C.alphas():
        for a2 in C.alphas():
            if a2 in (a1, phi(C, a1)):
                continue
            d1, d2 = triangle_intersection(C, a1, a2)
            if any(C.hom(x, a1) for x in d2.members) or any(C.hom(a1, y) for y in d1.members):
                return f"({a1}, {a2}): Hom vanishing fails"
            h = C.hom(a1, a2)
            if h:
                if d2.top is None:
                    return f"({a1}, {a2}): maps exist but the second triangle is empty"
                composites = [v for v in mesh.compose(a1, d2.top, a2).values() if any(v)]
                if rank(composites, h) != h:
                    return f"({a1}, {a2}): not every map factors through {d2.top}"
    return None


def lemma_shapes(C, cts):
    for T in cts:
        d = classify(ct_quiver(C, T))
        cen = alpha_census(C, T)
        alphas = {x for x in T if C.is_alpha(x)}
        match = [c for c in d.candidates or (d,) if c.shape == f"D{cen}" and set(c.central) == alphas]
        if not match:
            return f"{T}: no D{cen} candidate with central vertices {sorted(alphas)}"
        c = match[0]
        if c.shape == "D1":
            continue
        k = len(c.central)
        for r in range(k):
            a, b = c.central[r], c.central[(r + 1) % k]
            gap = len(c.attached[r]) + 1
            if b not in (tau(C, a, -gap), tau(C, phi(C, a), -gap)):
                return f"{T}: {b} is not tau^-{gap} of {a} or of phi({a})"
    return None


def check_lemmas(s):
    bad = []
    for spec in s.specs():
        C, cts = s.category(spec), s.cts(spec)
        if spec.family == "A":
            steps = [lemma_linear(C, cts)]
            if spec.rank >= 2:
                steps.append(lemma_outer_orbit(C, cts))
            if spec.rank <= 7:
                steps.append(lemma_subfactor(C, cts))
        else:
            steps = [lemma_alpha_count(C, cts), lemma_subfactor(C, cts),
                     lemma_triangles(C), lemma_shapes(C, cts)]
        bad.extend(f"{spec}: {msg}" for msg in steps if msg)
    if s.max_a >= 6:
        C = s.category(CategorySpec("A", 6))
        from .ar_model import Indec
        got = [str(q) for q in subfactor(C, Indec(0, 3)).quotient_spec]
        if got != ["A_2", "A_3"]:
            bad.append(f"A_6 subfactor at (0,3) is {got}, expected A_2 x A_3")
    return not bad, "; ".join(bad) or "all lemmas hold"


def check_roundtrip(s):
    bad, total = [], 0
    for spec in s.specs():
        C = s.category(spec)
        for T in s.cts(spec):
            total += 1
            Q = ct_quiver(C, T)
            r = reconstruct_report(Q)
            if r.spec != C.spec or quiver_iso(Q, ct_quiver(s.category(r.spec), r.T)) is None:
                bad.append(f"{spec} {T}: reconstructed {r.T} in {r.spec}")
                break
    return not bad, "; ".join(bad) or f"{total} quivers reconstructed"


def rejection_corpus():
    """Non-cluster-tilted quivers with the phrase their rejection must contain."""
    Q = Quiver
    return [
        ("2-cycle", Q((1, 2, 3), ((1, 2), (2, 1), (2, 3))), "2-cycle forbidden"),
        ("loop", Q((1, 2), ((1, 1), (1, 2))), "loop forbidden"),
        ("double arrow", Q((1, 2), ((1, 2), (1, 2))), "multiple arrows forbidden"),
        ("non-oriented 4-cycle", Q((1, 2, 3, 4), ((1, 2), (2, 3), (1, 4), (4, 3))), "chordless cycle of length 4"),
        ("non-oriented 3-cycle", Q((1, 2, 3), ((1, 2), (2, 3), (1, 3))), "non-oriented 3-cycle"),
        ("degree-5 vertex", Q((0, 1, 2, 3, 4, 5), tuple((0, i) for i in range(1, 6))), "has 5 neighbours"),
        ("4-star", Q((0, 1, 2, 3, 4), tuple((0, i) for i in range(1, 5))), "4 neighbours"),
        ("3-neighbour vertex on two 3-cycles",
         Q((1, 2, 3, 4, 5, 6), ((1, 2), (2, 3), (3, 1), (2, 4), (4, 1), (3, 5), (4, 6))), "3 neighbours"),
        ("non-oriented 5-cycle", Q((1, 2, 3, 4, 5), ((1, 2), (2, 3), (3, 4), (4, 5), (1, 5))), "chordless cycle of length 5"),
        ("4-cycle with a chord", Q((1, 2, 3, 4), ((1, 2), (2, 3), (3, 4), (4, 1), (1, 3))), "non-oriented 3-cycle"),
        ("two oriented 4-cycles", Q((1, 2, 3, 4, 5, 6, 7),
                                   ((1, 2), (2, 3), (3, 4), (4, 1), (4, 5), (5, 6), (6, 7), (7, 4))),
         "chordless cycle of length 4"),
        ("disconnected", Q((1, 2, 3), ((1, 2),)), "disconnected"),
        ("empty", Q(()), "empty quiver"),
    ]


def check_robustness(s):
    bad = []
    for name, Q, phrase in rejection_corpus():
        try:
            classify(Q)
            bad.append(f"{name}: accepted")
        except NotClusterTilted as e:
            if phrase not in str(e):
                bad.append(f"{name}: rejected as '{e}'")
    return not bad, "; ".join(bad) or f"{len(rejection_corpus())} quivers rejected"


CRITERIA = [
    ("1 counts", check_counts),
    ("2 oracle agreement", check_oracles),
    ("3 relations", check_relations),
    ("4 lemma suite", check_lemmas),
    ("5 round trip", check_roundtrip),
    ("6 robustness", check_robustness),
]


def run(max_a=8, max_d=6, corrupt=False):
    """``[(name, passed, detail, seconds)]`` for every criterion."""
    s = Session(max_a, max_d, corrupt)
    rows = []
    for name, fn in CRITERIA:
        t0 = time.perf_counter()
        try:
            ok, detail = fn(s)
        except Exception as e:  # a raising check is a failing check
            ok, detail = False, f"{type(e).__name__}: {e}"
        rows.append((name, ok, detail, time.perf_counter() - t0))
    return rows
