"""Quivers with relations of cluster-tilted algebras.

Arrow convention: an irreducible map ``X -> Y`` between summands of T gives
the arrow ``Y -> X`` in the quiver of End(T)^op.
"""

from collections import Counter, deque
from dataclasses import dataclass, field

from .tilting import CTObject, IntegrityError, mutate, reference_object


class NotClusterTilted(ValueError):
    """The quiver violates a property every cluster-tilted quiver has."""


@dataclass(frozen=True)
class Quiver:
    vertices: tuple
    arrows: tuple = ()

    def __post_init__(self):
        vs = tuple(self.vertices)
        if len(set(vs)) != len(vs):
            raise ValueError("vertex labels must be unique")
        known = set(vs)
        for s, t in self.arrows:
            if s not in known or t not in known:
                raise ValueError(f"arrow {s}->{t} has an unknown endpoint")
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "arrows", tuple(sorted(tuple(a) for a in self.arrows)))

    @classmethod
    def from_counts(cls, vertices, counts):
        arrows = []
        for (s, t), k in counts.items():
            arrows.extend([(s, t)] * k)
        return cls(tuple(vertices), tuple(arrows))

    def __len__(self):
        return len(self.vertices)

    def counts(self):
        return Counter(self.arrows)

    def successors(self, v):
        return sorted({t for s, t in self.arrows if s == v})

    def predecessors(self, v):
        return sorted({s for s, t in self.arrows if t == v})

    def neighbours(self, v):
        return set(self.successors(v)) | set(self.predecessors(v))

    def degree(self, v):
        """Number of arrows adjacent to ``v``."""
        return sum((s == v) + (t == v) for s, t in self.arrows)

    def arrows_within(self, vs):
        vs = set(vs)
        return [(s, t) for s, t in self.arrows if s in vs and t in vs]

    def induced(self, vs):
        vs = [v for v in self.vertices if v in set(vs)]
        return Quiver(tuple(vs), tuple(self.arrows_within(vs)))

    def without_arrows(self, drop):
        left = Counter(self.arrows)
        left.subtract(Counter(drop))
        return Quiver.from_counts(self.vertices, +left)

    def relabel(self, mapping):
        return Quiver(tuple(mapping[v] for v in self.vertices),
                      tuple((mapping[s], mapping[t]) for s, t in self.arrows))

    def opposite(self):
        return Quiver(self.vertices, tuple((t, s) for s, t in self.arrows))

    def is_connected(self):
        if not self.vertices:
            return True
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            v = stack.pop()
            for w in self.neighbours(v):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    def components(self):
        left = list(self.vertices)
        out = []
        while left:
            seen = {left[0]}
            stack = [left[0]]
            while stack:
                v = stack.pop()
                for w in self.neighbours(v):
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            out.append([v for v in self.vertices if v in seen])
            left = [v for v in left if v not in seen]
        return out

    def __str__(self):
        return "\n".join(f"{s} -> {t}" for s, t in self.arrows)


# -- mutation-tracked quivers of cluster-tilting objects ----------------------

def mutate_quiver(counts, k, new=None):
    """Quiver mutation at ``k``; the mutated vertex is renamed to ``new``."""
    counts = Counter(counts)
    out = Counter()
    for (s, t), m in counts.items():
        if s == k or t == k:
            continue
        out[s, t] += m
    for (i, k1), a in counts.items():
        if k1 != k:
            continue
        for (k2, j), b in counts.items():
            if k2 == k and i != j:
                out[i, j] += a * b
    # cancel 2-cycles
    for (s, t) in list(out):
        back = out.get((t, s), 0)
        if back and out[s, t]:
            c = min(out[s, t], back)
            out[s, t] -= c
            out[t, s] -= c
    new = k if new is None else new
    for (s, t), m in counts.items():
        if s == k:
            out[t, new] += m
        elif t == k:
            out[new, s] += m
    return +out


def reference_quiver(C):
    """Quiver of the slice object: arrows opposite to the reference orientation."""
    T0 = reference_object(C)
    arrows = []
    for x in T0:
        for w in C.cover.arrows_out(C.lift(x)):
            y = C.project(w)
            if y in T0:
                arrows.append((y, x))
    return T0, Quiver(T0.summands, tuple(arrows))


def quiver_atlas(C):
    """``{CTObject: Quiver}`` for every CT object, by mutation from the slice."""
    atlas = C.cache.get("quiver_atlas")
    if atlas is not None:
        return atlas
    T0, Q0 = reference_quiver(C)
    counts = {T0: Q0.counts()}
    queue = deque([T0])
    while queue:
        T = queue.popleft()
        for x in T:
            U, new = mutate(C, T, x)
            if U in counts:
                continue
            counts[U] = mutate_quiver(counts[T], x, new)
            queue.append(U)
    atlas = {T: Quiver.from_counts(T.summands, c) for T, c in counts.items()}
    C.cache["quiver_atlas"] = atlas
    return atlas


def ct_quiver(C, T):
    if not isinstance(T, CTObject):
        T = CTObject(tuple(T))
    atlas = quiver_atlas(C)
    if T not in atlas:
        raise IntegrityError(f"no mutation path reaches {T}")
    return atlas[T]


# -- relations ------------------------------------------------------------------

def shortest_paths(Q, arrow):
    """Shortest paths opposite to ``arrow = (b, a)``: paths ``a -> ... -> b``
    without cyclic subpaths whose cycle spans no further arrows."""
    b, a = arrow
    counts = Q.counts()
    succ = {v: Q.successors(v) for v in Q.vertices}
    out = []

    def walk(path):
        v = path[-1]
        if v == b:
            if len(Q.arrows_within(path)) == len(path):
                out.append(tuple(path))
            return
        for w in succ[v]:
            if w not in path:
                walk(path + [w])

    if counts.get((b, a), 0) and a != b:
        walk([a])
    return out


def is_disjoint(r, s):
    return set(r[1:-1]).isdisjoint(s[1:-1]) and r[0] == s[0] and r[-1] == s[-1]


def is_disconnected(Q, r, s):
    """Only the path arrows, plus possibly one arrow from end back to start."""
    vs = set(r) | set(s)
    expected = (len(r) - 1) + (len(s) - 1)
    inside = Q.arrows_within(vs)
    back = sum(1 for e in inside if e == (r[-1], r[0]))
    return len(inside) - min(back, 1) == expected


@dataclass(frozen=True)
class Presentation:
    quiver: Quiver
    zero_relations: tuple = ()
    commutativity_relations: tuple = ()


def relations(Q):
    zeros, comms = [], []
    for arrow in sorted(set(Q.arrows)):
        paths = shortest_paths(Q, arrow)
        if len(paths) == 1:
            zeros.append(paths[0])
        elif len(paths) == 2:
            r, s = paths
            if not is_disjoint(r, s):
                raise NotClusterTilted(f"shortest paths {r} and {s} opposite {arrow} are not disjoint")
            if not is_disconnected(Q, r, s):
                raise NotClusterTilted(f"shortest paths {r} and {s} opposite {arrow} are not disconnected")
            comms.append((r, s))
        elif len(paths) > 2:
            raise NotClusterTilted(f"{len(paths)} shortest paths opposite the arrow {arrow[0]}->{arrow[1]}")
    return Presentation(Q, tuple(zeros), tuple(comms))


def format_path(path):
    return " -> ".join(str(v) for v in path)


def format_presentation(P):
    lines = [f"arrows: {len(P.quiver.arrows)}"]
    lines.extend(f"  {s} -> {t}" for s, t in P.quiver.arrows)
    lines.append(f"zero-relations: {len(P.zero_relations)}")
    lines.extend(f"  {format_path(p)}" for p in P.zero_relations)
    lines.append(f"commutativity-relations: {len(P.commutativity_relations)}")
    lines.extend(f"  {format_path(r)}  ~  {format_path(s)}" for r, s in P.commutativity_relations)
    return "\n".join(lines)


# -- isomorphism ---------------------------------------------------------------

def _signature(Q, v):
    c = Q.counts()
    outs = sorted(c[v, w] for w in Q.vertices if c.get((v, w)))
    ins = sorted(c[w, v] for w in Q.vertices if c.get((w, v)))
    return (tuple(outs), tuple(ins))


def quiver_iso(Q1, Q2):
    """A vertex bijection carrying the arrows of Q1 exactly onto Q2, or None."""
    if len(Q1.vertices) != len(Q2.vertices) or len(Q1.arrows) != len(Q2.arrows):
        return None
    sig1 = {v: _signature(Q1, v) for v in Q1.vertices}
    sig2 = {v: _signature(Q2, v) for v in Q2.vertices}
    if sorted(sig1.values()) != sorted(sig2.values()):
        return None
    c1, c2 = Q1.counts(), Q2.counts()
    # visit Q1 in BFS order so each new vertex touches assigned ones
    order, seen = [], set()
    for root in Q1.vertices:
        if root in seen:
            continue
        seen.add(root)
        queue = deque([root])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in sorted(Q1.neighbours(v), key=Q1.vertices.index):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    mapping, used = {}, set()

    def fits(v, w):
        if sig1[v] != sig2[w]:
            return False
        for u, x in mapping.items():
            if c1.get((v, u), 0) != c2.get((w, x), 0) or c1.get((u, v), 0) != c2.get((x, w), 0):
                return False
        return True

    def extend(k):
        if k == len(order):
            return True
        v = order[k]
        for w in Q2.vertices:
            if w not in used and fits(v, w):
                mapping[v] = w
                used.add(w)
                if extend(k + 1):
                    return True
                del mapping[v]
                used.discard(w)
        return False

    return dict(mapping) if extend(0) else None
