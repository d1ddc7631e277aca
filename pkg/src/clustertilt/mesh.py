"""Exact linear algebra in the mesh category of the cover.

``Hom_D(x, -)`` is built level by level as a representation of the cover:
the space at ``z`` is the cokernel of ``Hom(x, tau z) -> sum Hom(x, m)`` over
the mesh ending in ``z``.  Every basis vector is a class of a single path, so
morphisms can be pushed along paths and composed.  Used to compute the
Gabriel quiver of End(T)^op without any knitting shortcut.
"""

from fractions import Fraction

from .cover import WindowError
from .homext import WINDOW


def rref(rows, ncols):
    """Reduced row echelon form; returns ``(rows, pivot_columns)``."""
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = rows[r][c]
        rows[r] = [v / lead for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(vectors, ncols):
    if not vectors:
        return 0
    return len(rref(vectors, ncols)[1])


class HomRep:
    """``Hom_D(x, -)`` with path-class bases and arrow matrices."""

    def __init__(self, cover, x):
        self.cover = cover
        self.source = x
        self.dim = {x: 1}
        self.paths = {x: [(x,)]}
        self.maps = {}
        comp = cover.component[x[1]]
        lx = cover.xlevel(x)
        limit = 8 * (cover.n + 2)
        L, zero_run = lx, 0
        while zero_run < 2:
            L += 1
            if L - lx > limit:
                raise WindowError(f"Hom({x}, -) did not die out within {limit} levels; enlarge the window")
            alive = False
            for z in cover.at_level(L, comp):
                if self._add_vertex(z):
                    alive = True
            zero_run = 0 if alive else zero_run + 1

    def _add_vertex(self, z):
        cov = self.cover
        ins = [m for m in cov.arrows_in(z) if self.dim.get(m, 0)]
        gens = [(m, b) for m in ins for b in range(self.dim[m])]
        if not gens:
            return False
        t = cov.tau(z)
        relations = []
        for c in range(self.dim.get(t, 0)):
            row = []
            for m in ins:
                mat = self.maps.get((t, m))
                row.extend(mat[c][b] if mat else 0 for b in range(self.dim[m]))
            relations.append(row)
        red, pivots = rref(relations, len(gens))
        free = [g for g in range(len(gens)) if g not in pivots]
        if not free:
            return False
        pos = {g: k for k, g in enumerate(free)}
        # image of each generator in the quotient
        image = []
        pivot_row = {c: i for i, c in enumerate(pivots)}
        for g in range(len(gens)):
            vec = [Fraction(0)] * len(free)
            if g in pos:
                vec[pos[g]] = Fraction(1)
            else:
                row = red[pivot_row[g]]
                for f in free:
                    vec[pos[f]] = -row[f]
            image.append(vec)
        self.dim[z] = len(free)
        self.paths[z] = [self.paths[gens[f][0]][gens[f][1]] + (z,) for f in free]
        start = 0
        for m in ins:
            d = self.dim[m]
            # matrix rows indexed by the basis of m, columns by the basis of z
            self.maps[(m, z)] = [image[start + b] for b in range(d)]
            start += d
        return True

    def push(self, vec, path):
        """Push a vector at ``path[0]`` along the arrows of ``path``."""
        for a, b in zip(path, path[1:]):
            mat = self.maps.get((a, b))
            if mat is None:
                return None
            out = [Fraction(0)] * self.dim[b]
            for i, v in enumerate(vec):
                if v:
                    for j, w in enumerate(mat[i]):
                        if w:
                            out[j] += v * w
            vec = out
            if not any(vec):
                return None
        return vec


class MeshCategory:
    """Hom spaces and composition of the cluster category, by linear algebra."""

    _instances = {}

    def __init__(self, C):
        self.C = C
        self.cover = C.cover
        self._reps = {}
        self._basis = {}
        self._comp = {}

    @classmethod
    def of(cls, C):
        key = id(C)
        inst = cls._instances.get(key)
        if inst is None or inst.C is not C:
            inst = cls(C)
            cls._instances[key] = inst
        return inst

    def rep(self, x):
        r = self._reps.get(x)
        if r is None:
            r = self._reps[x] = HomRep(self.cover, self.C.lift(x))
        return r

    def basis(self, x, y):
        """Basis of Hom_C(x, y): pairs ``(i, b)`` with b a basis index at F^i y."""
        key = (x, y)
        out = self._basis.get(key)
        if out is None:
            rx = self.rep(x)
            out = []
            for i in WINDOW:
                d = rx.dim.get(self.cover.F(self.C.lift(y), i), 0)
                if d and i in (WINDOW[0], WINDOW[-1]):
                    raise WindowError(f"Hom({x},{y}) has a term at the window edge i={i}")
                out.extend((i, b) for b in range(d))
            self._basis[key] = out
        return out

    def hom_dim(self, x, y):
        return len(self.basis(x, y))

    def compose(self, x, y, z):
        """``{(f, g): vector of g.f in the basis of Hom_C(x, z)}`` over basis pairs."""
        key = (x, y, z)
        table = self._comp.get(key)
        if table is not None:
            return table
        F = self.cover.F
        rx, ry = self.rep(x), self.rep(y)
        bxz = self.basis(x, z)
        index = {e: k for k, e in enumerate(bxz)}
        ly, lz = self.C.lift(y), self.C.lift(z)
        table = {}
        for f in self.basis(x, y):
            i, b = f
            for g in self.basis(y, z):
                j, c = g
                path = ry.paths[F(lz, j)][c]
                moved = tuple(F(v, i) for v in path)
                start = [Fraction(0)] * rx.dim[F(ly, i)]
                start[b] = Fraction(1)
                res = rx.push(start, moved)
                vec = [Fraction(0)] * len(bxz)
                if res is not None:
                    if i + j not in WINDOW:
                        raise WindowError(f"composite lands outside the window (i={i + j})")
                    for k, v in enumerate(res):
                        if v:
                            vec[index[(i + j, k)]] = v
                table[f, g] = vec
        self._comp[key] = table
        return table

    def arrow_count(self, a, b, others):
        """``dim rad(a, b) - dim rad^2(a, b)`` within add of ``others``."""
        n = self.hom_dim(a, b)
        if n == 0:
            return 0
        composites = []
        for c in others:
            if c == a or c == b:
                continue
            composites.extend(v for v in self.compose(a, c, b).values() if any(v))
        return n - rank(composites, n)

    def gabriel_quiver(self, summands):
        from .presentation import Quiver

        summands = sorted(summands)
        for a in summands:
            if self.hom_dim(a, a) != 1:
                raise AssertionError(f"End({a}) has dimension {self.hom_dim(a, a)}")
        arrows = []
        for a in summands:
            for b in summands:
                if a != b:
                    # an irreducible map a -> b is an arrow b -> a of End(T)^op
                    arrows.extend([(b, a)] * self.arrow_count(a, b, summands))
        return Quiver(tuple(summands), tuple(sorted(arrows)))
