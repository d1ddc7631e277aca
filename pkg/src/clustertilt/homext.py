"""Hom and Ext dimensions in the cluster category.

Two computation routes exist: ``knitted_hom`` uses the clipped mesh rule on
the cover, and ``gabriel_oracle`` runs exact linear algebra in the mesh
category.  They share nothing but the cover's vertex set.
"""

from .ar_model import MisuseError

WINDOW = range(-2, 4)


def knitted_hom(cover, x, y):
    """``sum_i dim Hom_D(x, F^i y)`` over the window, checking the edges vanish."""
    h = cover.hammock(tuple(x))
    terms = [h.get(cover.F(tuple(y), i), 0) for i in WINDOW]
    if terms[0] or terms[-1]:
        raise AssertionError(f"orbit sum for Hom({x},{y}) does not vanish at the window edge: {terms}")
    return sum(terms)


def hom_dim(C, x, y):
    return C.hom_table[x, y]


def ext_dim(C, x, y):
    return C.ext_table[x, y]


def hom_terms(C, x, y):
    """The individual ``dim Hom_D(x, F^i y)`` for i in the window."""
    h = C.cover.hammock(C.lift(x))
    return {i: h.get(C.cover.F(C.lift(y), i), 0) for i in WINDOW}


# -- polygon model, type A only ----------------------------------------------

class DiagonalOracle:
    """Indecomposables of C(A_n) as diagonals of an (n+3)-gon.

    The cover vertex ``(p, i)`` is the diagonal ``{p, p+i+1}`` mod n+3.
    """

    def __init__(self, C):
        if C.family != "A":
            raise MisuseError(f"the diagonal oracle only models type A, not {C.spec}")
        self.C = C
        self.size = C.rank + 3
        self.diagonal = {}
        for x in C.indecs:
            d = self.diagonal_of_lift(C.lift(x))
            if d in self.diagonal.values():
                raise AssertionError(f"diagonal {d} hit twice")
            self.diagonal[x] = d
        self.indec = {d: x for x, d in self.diagonal.items()}

    def diagonal_of_lift(self, v):
        p, i = v
        return frozenset({p % self.size, (p + i + 1) % self.size})

    def crosses(self, d1, d2):
        a, b = sorted(d1)
        c, d = sorted(d2)
        return (a < c < b < d) or (c < a < d < b)

    def ext(self, x, y):
        return 1 if self.crosses(self.diagonal[x], self.diagonal[y]) else 0


def diagonal_oracle(C):
    return DiagonalOracle(C)


def gabriel_oracle(C, summands):
    """Quiver of End(T)^op computed in the mesh category (see ``mesh``)."""
    from .mesh import MeshCategory

    return MeshCategory.of(C).gabriel_quiver(summands)
