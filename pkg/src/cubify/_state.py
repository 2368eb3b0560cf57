"""Mutable working state for the reduction passes.

Holds the current rows, the accumulated row transform (rows = trans · input)
and the metric tensor, with rhombicity and norm sum kept in sync
incrementally.  All pass internals mutate one of these instead of rebuilding
bases, so each elementary step is O(N) or O(N^2) instead of O(N^3).
"""

from __future__ import annotations

from .exact import dot


class BasisState:

    __slots__ = ("rows", "trans", "gram", "r", "s")

    def __init__(self, rows, trans=None):
        self.rows = [list(r) for r in rows]
        n = len(self.rows)
        if trans is None:
            trans = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        self.trans = [list(r) for r in trans]
        self.gram = [[dot(self.rows[i], self.rows[j]) for j in range(n)]
                     for i in range(n)]
        self.r = sum(abs(x) for row in self.gram for x in row)
        self.s = sum(self.gram[i][i] for i in range(n))

    def copy(self):
        c = BasisState.__new__(BasisState)
        c.rows = [r[:] for r in self.rows]
        c.trans = [r[:] for r in self.trans]
        c.gram = [r[:] for r in self.gram]
        c.r = self.r
        c.s = self.s
        return c

    def adopt(self, other):
        """Take over another state's contents; list objects are kept alive."""
        self.rows[:] = other.rows
        self.trans[:] = other.trans
        self.gram[:] = other.gram
        self.r = other.r
        self.s = other.s

    def _row_weight(self, i):
        g = self.gram
        return 2 * sum(abs(g[i][j]) for j in range(len(g)) if j != i) + abs(g[i][i])

    def replace(self, idx, vec, tvec, dots=None):
        """Replace row idx (and its transform row); update gram, r, s.

        dots, when given, must be the scalar products of vec with every
        current row except idx plus vec·vec at position idx; callers that
        derive the new row from existing ones get these from gram for free.
        """
        n = len(self.rows)
        if dots is None:
            dots = [0] * n
            for j in range(n):
                dots[j] = dot(vec, vec) if j == idx else dot(vec, self.rows[j])
        self.r -= self._row_weight(idx)
        self.s -= self.gram[idx][idx]
        self.rows[idx] = list(vec)
        self.trans[idx] = list(tvec)
        for j in range(n):
            self.gram[idx][j] = dots[j]
            self.gram[j][idx] = dots[j]
        self.r += 2 * sum(abs(dots[j]) for j in range(n) if j != idx) + abs(dots[idx])
        self.s += dots[idx]

    def combine_into(self, idx, coeffs, srcs):
        """rows[idx] += sum(c * rows[s]); derived dots come from gram."""
        live = [(c, s) for c, s in zip(coeffs, srcs) if c]
        if not live:
            return
        g = self.gram
        n = len(self.rows)
        vec = self.rows[idx][:]
        tvec = self.trans[idx][:]
        for c, s in live:
            for t in range(n):
                vec[t] += c * self.rows[s][t]
                tvec[t] += c * self.trans[s][t]
        dots = [0] * n
        for j in range(n):
            if j == idx:
                continue
            dots[j] = g[idx][j] + sum(c * g[s][j] for c, s in live)
        nn = g[idx][idx] + 2 * sum(c * g[idx][s] for c, s in live)
        for c1, s1 in live:
            for c2, s2 in live:
                nn += c1 * c2 * g[s1][s2]
        dots[idx] = nn
        self.replace(idx, vec, tvec, dots)

    def permute(self, order):
        self.rows[:] = [self.rows[i] for i in order]
        self.trans[:] = [self.trans[i] for i in order]
        self.gram[:] = [[self.gram[i][j] for j in order] for i in order]

    def sort_by_norm(self, upto=None):
        """Stable sort of rows[:upto] by squared norm; r and s are unchanged."""
        n = len(self.rows)
        m = n if upto is None else upto
        order = sorted(range(m), key=lambda i: self.gram[i][i])
        if order != list(range(m)):
            self.permute(order + list(range(m, n)))

    # -- checks used by tests and debug asserts --

    def recomputed(self):
        fresh = BasisState(self.rows, self.trans)
        return fresh.gram, fresh.r, fresh.s

    def consistent(self):
        gram, r, s = self.recomputed()
        return gram == self.gram and r == self.r and s == self.s
