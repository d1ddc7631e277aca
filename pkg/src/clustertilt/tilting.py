"""Cluster-tilting objects: recognition, enumeration, mutation, subfactors."""

import itertools
from collections import deque
from dataclasses import dataclass, field

import networkx as nx
from networkx.algorithms import isomorphism

from .ar_model import CategorySpec, Indec, build


class IntegrityError(RuntimeError):
    """A background fact of the theory failed; signals a model bug."""


@dataclass(frozen=True)
class CTObject:
    summands: tuple

    def __post_init__(self):
        object.__setattr__(self, "summands", tuple(sorted(self.summands)))

    def __iter__(self):
        return iter(self.summands)

    def __len__(self):
        return len(self.summands)

    def __contains__(self, x):
        return x in self.summands

    def __str__(self):
        return " ".join(str(x) for x in self.summands)


def is_rigid(C, xs):
    xs = list(xs)
    return all(C.ext(x, y) == 0 for x in xs for y in xs)


def is_maximal_rigid(C, xs):
    xs = set(xs)
    if not is_rigid(C, xs):
        return False
    return not any(z not in xs and C.ext(z, z) == 0 and all(C.ext(z, x) == 0 for x in xs)
                   for z in C.indecs)


def is_cluster_tilting(C, xs):
    """Rigid with rank summands; cross-checked against maximality."""
    xs = set(xs)
    if not all(x in C for x in xs):
        return False
    by_count = len(xs) == C.rank and is_rigid(C, xs)
    if by_count != is_maximal_rigid(C, xs):
        raise IntegrityError(f"rigid of size rank and maximal rigid disagree on {sorted(xs)}")
    return by_count


def first_ext_pair(C, xs):
    """A pair with nonzero Ext, for diagnostics."""
    for x, y in itertools.combinations(sorted(xs), 2):
        if C.ext(x, y):
            return x, y
    for x in xs:
        if C.ext(x, x):
            return x, x
    return None


def _compatible(C):
    return {x: {y for y in C.indecs if y != x and C.ext(x, y) == 0} for x in C.indecs}


def enumerate_ct(C):
    """All cluster-tilting objects in lexicographic order of sorted summands."""
    compat = _compatible(C)
    order = [x for x in C.indecs if C.ext(x, x) == 0]
    out = []

    def grow(chosen, candidates):
        if len(chosen) == C.rank:
            out.append(CTObject(tuple(chosen)))
            return
        for idx, x in enumerate(candidates):
            rest = [y for y in candidates[idx + 1:] if y in compat[x]]
            if len(chosen) + 1 + len(rest) < C.rank:
                continue
            grow(chosen + [x], rest)

    grow([], order)
    return out


def complements(C, almost):
    """The two indecomposables completing a rigid set of size rank-1."""
    almost = set(almost)
    if len(almost) != C.rank - 1 or not is_rigid(C, almost):
        raise ValueError(f"expected a rigid set of {C.rank - 1} summands, got {sorted(almost)}")
    found = [z for z in C.indecs if z not in almost and C.ext(z, z) == 0
             and all(C.ext(z, x) == 0 for x in almost)]
    if len(found) != 2:
        raise IntegrityError(f"{' '.join(map(str, sorted(almost)))} has {len(found)} complements, expected 2")
    return tuple(found)


def mutate(C, T, k):
    """Exchange summand ``k`` (an index into ``T.summands`` or the summand itself)."""
    old = T.summands[k] if isinstance(k, int) else k
    rest = [x for x in T if x != old]
    a, b = complements(C, rest)
    if old not in (a, b):
        raise IntegrityError(f"{old} is not among the complements {a}, {b}")
    new = b if old == a else a
    return CTObject(tuple(rest) + (new,)), new


def exchange_graph(C, start=None):
    """BFS over mutations; returns ``{CTObject: {neighbour, ...}}``."""
    if start is None:
        start = reference_object(C)
    graph = {start: set()}
    queue = deque([start])
    while queue:
        T = queue.popleft()
        for x in T:
            U, _ = mutate(C, T, x)
            graph[T].add(U)
            if U not in graph:
                graph[U] = set()
                queue.append(U)
    return graph


def reference_object(C):
    """The slice ``{(0, i)}``: the projectives of the reference orientation."""
    return CTObject(tuple(Indec(0, i) for i in C.cover.vertices))


# -- subfactor categories -----------------------------------------------------

def _ext_graph(C, objects):
    g = nx.Graph()
    g.add_nodes_from(objects)
    for x, y in itertools.combinations(objects, 2):
        e = C.ext(x, y)
        if e:
            g.add_edge(x, y, weight=e)
    return g


def _candidate_specs(count):
    out = []
    k = 1
    while k * (k + 3) // 2 <= count:
        if k * (k + 3) // 2 == count:
            out.append(CategorySpec("A", k))
        k += 1
    k = 4
    while k * k <= count:
        if k * k == count:
            out.append(CategorySpec("D", k))
        k += 1
    return out


_BUILT = {}


def cached_build(spec):
    key = (spec.family, spec.rank)
    if key not in _BUILT:
        _BUILT[key] = build(spec)
    return _BUILT[key]


@dataclass(eq=False)
class SubfactorModel:
    host: object
    pivot: Indec
    quotient_spec: list
    quotients: list = field(repr=False)
    # host object -> (component index, indecomposable of that component)
    object_map: dict = field(repr=False)

    def inverse(self):
        return {v: k for k, v in self.object_map.items()}


def subfactor(C, M):
    """Identify ``M^perp / (M)`` as a product of smaller cluster categories."""
    perp = [x for x in C.indecs if x != M and C.ext(x, M) == 0]
    g = _ext_graph(C, perp)
    pieces = sorted((sorted(c) for c in nx.connected_components(g)), key=lambda c: (len(c), c))
    specs, quotients, object_map = [], [], {}
    for idx, piece in enumerate(pieces):
        match = None
        for spec in _candidate_specs(len(piece)):
            Q = cached_build(spec)
            gm = isomorphism.GraphMatcher(g.subgraph(piece), _ext_graph(Q, list(Q.indecs)),
                                          edge_match=lambda a, b: a["weight"] == b["weight"])
            if gm.is_isomorphic():
                match = (spec, Q, gm.mapping)
                break
        if match is None:
            raise IntegrityError(f"component of size {len(piece)} in {M}^perp matches no cluster category")
        spec, Q, mapping = match
        specs.append(spec)
        quotients.append(Q)
        for x in piece:
            object_map[x] = (idx, mapping[x])
    total = sum(s.rank for s in specs)
    if total != C.rank - 1:
        raise IntegrityError(f"{M}^perp has total rank {total}, expected {C.rank - 1}")
    return SubfactorModel(C, M, specs, quotients, object_map)


def quotient_cts(sub):
    """All cluster-tilting objects of the product category, as tuples per factor."""
    per_factor = [enumerate_ct(Q) for Q in sub.quotients]
    return [tuple(combo) for combo in itertools.product(*per_factor)]


def lift_ct(sub, T_sub):
    """Lift a cluster-tilting object of the product back to the host."""
    inv = sub.inverse()
    summands = [sub.pivot]
    for idx, T in enumerate(T_sub):
        summands.extend(inv[idx, x] for x in T)
    if not is_cluster_tilting(sub.host, summands):
        raise IntegrityError(f"lift of {T_sub} is not cluster-tilting")
    return CTObject(tuple(summands))


def forget_pivot(sub, T):
    """Inverse of ``lift_ct``: drop the pivot and map into the product."""
    parts = [[] for _ in sub.quotients]
    for x in T:
        if x == sub.pivot:
            continue
        idx, y = sub.object_map[x]
        parts[idx].append(y)
    return tuple(CTObject(tuple(p)) for p in parts)


def alpha_census(C, T):
    """Shape index forced by the alpha-summands: 1 for a phi-pair, 2 for two others, 3 beyond."""
    from .ar_model import phi

    alphas = [x for x in T if C.is_alpha(x)]
    if len(alphas) > 2:
        return 3
    if len(alphas) == 2:
        return 1 if phi(C, alphas[0]) == alphas[1] else 2
    raise IntegrityError(f"{T} has {len(alphas)} alpha-summands")
