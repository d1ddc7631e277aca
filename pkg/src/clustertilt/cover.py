"""The universal cover Z.Delta of a cluster category of Dynkin type.

Vertices of the cover are pairs ``(p, i)``: ``i`` is a vertex of the Dynkin
forest and ``p`` the position along the tau-direction.  For every arrow
``i -> j`` of the reference orientation there are arrows ``(p, i) -> (p, j)``
and ``(p, j) -> (p + 1, i)``; tau acts by ``(p, i) -> (p - 1, i)``.

The cover is the AR-quiver of the bounded derived category.  The functor
``F = tau^-1 [1]`` is not hard-wired: it is recovered from hammocks, since the
Serre functor sends a vertex to the far end of its hammock and ``[1]`` equals
``tau^-1`` composed with the Serre functor.
"""

from collections import deque


class WindowError(RuntimeError):
    """A hammock did not die out inside the search window."""


class Cover:

    def __init__(self, n, arrows):
        self.n = n
        self.vertices = tuple(range(1, n + 1))
        self.succ = {i: [] for i in self.vertices}
        self.pred = {i: [] for i in self.vertices}
        for i, j in arrows:
            self.succ[i].append(j)
            self.pred[j].append(i)
        self.level = self._levels()
        self.component = self._components()
        self._hammocks = {}
        self._serre = {i: self._serre_of_slice(i) for i in self.vertices}
        # F(p, i) = (p + shift[i], perm[i])
        self.shift = {i: self._serre[i][0] + 2 for i in self.vertices}
        self.perm = {i: self._serre[i][1] for i in self.vertices}
        self.perm_inv = {j: i for i, j in self.perm.items()}
        if sorted(self.perm_inv) != list(self.vertices):
            raise AssertionError("Serre functor does not permute the tau-orbits")
        # the fundamental domain in orbit i is 0 <= p < bound[i]
        self.bound = {self.perm[j]: self.shift[j] for j in self.vertices}
        self._check_F_is_automorphism()

    # -- plain structure -------------------------------------------------

    def _levels(self):
        level = {}
        for root in self.vertices:
            if root in level:
                continue
            level[root] = 0
            queue = deque([root])
            while queue:
                i = queue.popleft()
                for j in self.succ[i]:
                    if j not in level:
                        level[j] = level[i] + 1
                        queue.append(j)
                for j in self.pred[i]:
                    if j not in level:
                        level[j] = level[i] - 1
                        queue.append(j)
        for i in self.vertices:
            for j in self.succ[i]:
                assert level[j] == level[i] + 1, "diagram is not a forest"
        return level

    def _components(self):
        comp = {}
        for root in self.vertices:
            if root in comp:
                continue
            comp[root] = root
            stack = [root]
            while stack:
                i = stack.pop()
                for j in self.succ[i] + self.pred[i]:
                    if j not in comp:
                        comp[j] = root
                        stack.append(j)
        return comp

    def xlevel(self, v):
        p, i = v
        return 2 * p + self.level[i]

    def at_level(self, x, comp):
        """Vertices of the component ``comp`` sitting at x-level ``x``."""
        out = []
        for i in self.vertices:
            if self.component[i] != comp:
                continue
            d = x - self.level[i]
            if d % 2 == 0:
                out.append((d // 2, i))
        return out

    def arrows_out(self, v):
        p, i = v
        return [(p, j) for j in self.succ[i]] + [(p + 1, k) for k in self.pred[i]]

    def arrows_in(self, v):
        p, i = v
        return [(p, k) for k in self.pred[i]] + [(p - 1, j) for j in self.succ[i]]

    @staticmethod
    def tau(v, k=1):
        p, i = v
        return (p - k, i)

    # -- hammocks --------------------------------------------------------

    def hammock(self, x):
        """``dim Hom_D(x, -)`` on the cover, by knitting.

        Values follow the clipped mesh rule
        ``h(z) = max(0, sum of h over the mesh middle - h(tau z))``.
        Returns a dict holding the support only.
        """
        x = tuple(x)
        cached = self._hammocks.get(x)
        if cached is not None:
            return cached
        h = {x: 1}
        comp = self.component[x[1]]
        lx = self.xlevel(x)
        zero_run = 0
        limit = 8 * (self.n + 2)
        L = lx
        while zero_run < 2:
            L += 1
            if L - lx > limit:
                raise WindowError(f"hammock from {x} exceeded {limit} levels")
            alive = False
            for z in self.at_level(L, comp):
                val = sum(h.get(m, 0) for m in self.arrows_in(z)) - h.get(self.tau(z), 0)
                if val > 0:
                    h[z] = val
                    alive = True
            zero_run = 0 if alive else zero_run + 1
        self._hammocks[x] = h
        return h

    def _serre_of_slice(self, i):
        h = self.hammock((0, i))
        ends = [v for v in h if all(w not in h for w in self.arrows_out(v))]
        if len(ends) != 1:
            raise AssertionError(f"hammock of (0,{i}) has {len(ends)} end points")
        return ends[0]

    # -- the functor F and the fundamental domain ------------------------

    def F(self, v, k=1):
        p, i = v
        while k > 0:
            p, i = p + self.shift[i], self.perm[i]
            k -= 1
        while k < 0:
            j = self.perm_inv[i]
            p, i = p - self.shift[j], j
            k += 1
        return (p, i)

    def in_domain(self, v):
        p, i = v
        return 0 <= p < self.bound[i]

    def canonical(self, v):
        p, i = v
        steps = 0
        while not self.in_domain((p, i)):
            p, i = self.F((p, i), -1 if p >= self.bound[i] else 1)
            steps += 1
            if steps > 4 * abs(v[0]) + 8:
                raise AssertionError(f"cannot canonicalize {v}")
        return (p, i)

    def domain(self):
        return [(p, i) for i in self.vertices for p in range(self.bound[i])]

    def _check_F_is_automorphism(self):
        for i in self.vertices:
            v = (0, i)
            img = sorted(self.F(w) for w in self.arrows_out(v))
            if img != sorted(self.arrows_out(self.F(v))):
                raise AssertionError("F does not preserve arrows")
            if self.F(self.F(v), -1) != v:
                raise AssertionError("F is not invertible")
            if self.F(self.tau(v)) != self.tau(self.F(v)):
                raise AssertionError("F does not commute with tau")
