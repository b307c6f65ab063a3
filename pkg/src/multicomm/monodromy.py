"""Monodromy matrix elements acting on the vector representation.

T(u; xi) = R_{0n}(u, xi_n) ... R_{01}(u, xi_1).  The matrix element T_ij(u)
feeds color j into the auxiliary line, runs it through quantum sites 1..n
(site 1 first) and keeps the terms where it leaves with color i.  The action
on a basis vector is a sum over lattice paths, computed site by site.

Operator words are lists of ``(i, j, params)`` in displayed order; the
rightmost factor is applied first.  Within one factor the parameters are
applied in list order (the elements T_ij(u), T_ij(v) commute).
"""
from __future__ import annotations

from fractions import Fraction

from .rmatrix import Flavor
from .scalars import prod
from .states import SparseState, all_keys


class Monodromy:
    """Monodromy of an R-matrix over quantum sites with inhomogeneities ``xi``."""

    def __init__(self, rmatrix, N, xi):
        if N < 1:
            raise ValueError("N must be positive")
        self.rm = rmatrix
        self.N = N
        self.xi = list(xi)

    @property
    def n(self):
        return len(self.xi)

    def _check(self, i, j, state, dual):
        if not (1 <= i <= self.N and 1 <= j <= self.N):
            raise ValueError(f"matrix element ({i},{j}) out of range for N={self.N}")
        if (state.N, state.n) != (self.N, self.n):
            raise ValueError("state does not live on this quantum space")
        if state.dual != dual:
            raise ValueError("expected a dual state" if dual else "expected a vector")

    def _site_weights(self, u):
        rm = self.rm
        out = []
        for x in self.xi:
            if rm.flavor is Flavor.RATIONAL:
                lo = hi = rm.coupling
            else:
                lo, hi = rm.exchange(1, 2, u, x), rm.exchange(2, 1, u, x)
            out.append((rm.same(u, x), u - x, lo, hi))
        return out

    def normalization(self, u):
        """prod_k (u - xi_k), the factor removed in the normalized monodromy."""
        return prod(u - x for x in self.xi)

    def apply(self, i, j, u, state: SparseState, normalized=False) -> SparseState:
        """T_ij(u) state.  With ``normalized`` the result is divided by prod (u - xi_k)."""
        self._check(i, j, state, False)
        weights = self._site_weights(u)
        out = SparseState(self.N, self.n)
        n = self.n
        for key, c in state.items():
            # suffix[s] = colors present at sites s..n-1, for pruning dead paths
            suffix = [frozenset()] * (n + 1)
            for s in range(n - 1, -1, -1):
                suffix[s] = suffix[s + 1] | {key[s]}
            paths = {(j, ()): c}
            for s in range(n):
                b = key[s]
                same, pas, lo, hi = weights[s]
                live = suffix[s + 1]
                nxt = {}
                for (a, pre), w in paths.items():
                    if a == b:
                        cand = ((a, pre + (b,), w * same),)
                    else:
                        cand = ((a, pre + (b,), w * pas), (b, pre + (a,), w * (lo if a < b else hi)))
                    for a2, p2, w2 in cand:
                        if a2 != i and i not in live:
                            continue
                        if not w2:
                            continue
                        k2 = (a2, p2)
                        v = nxt.get(k2)
                        nxt[k2] = w2 if v is None else v + w2
                paths = nxt
            for (a, pre), w in paths.items():
                if a == i:
                    out.add_term(pre, w)
        if normalized:
            out = out * (Fraction(1) / self.normalization(u))
        return out

    def apply_dual(self, i, j, u, dual: SparseState, normalized=False) -> SparseState:
        """The covector dual o T_ij(u), computed by running the paths backwards."""
        self._check(i, j, dual, True)
        weights = self._site_weights(u)
        out = SparseState(self.N, self.n, dual=True)
        n = self.n
        for key, c in dual.items():
            prefix = [frozenset()] * (n + 1)
            for s in range(n):
                prefix[s + 1] = prefix[s] | {key[s]}
            # state: (aux color after site s, input colors for sites s..n-1)
            paths = {(i, ()): c}
            for s in range(n - 1, -1, -1):
                b2 = key[s]
                same, pas, lo, hi = weights[s]
                live = prefix[s]
                nxt = {}
                for (a2, suf), w in paths.items():
                    if a2 == b2:
                        cand = ((a2, (b2,) + suf, w * same),)
                    else:
                        # pass: input (a2, b2); exchange: input (b2, a2) -> output (a2, b2)
                        cand = ((a2, (b2,) + suf, w * pas), (b2, (a2,) + suf, w * (lo if b2 < a2 else hi)))
                    for a, s2, w2 in cand:
                        if a != j and j not in live:
                            continue
                        if not w2:
                            continue
                        k2 = (a, s2)
                        v = nxt.get(k2)
                        nxt[k2] = w2 if v is None else v + w2
                paths = nxt
            for (a, suf), w in paths.items():
                if a == j:
                    out.add_term(suf, w)
        if normalized:
            out = out * (Fraction(1) / self.normalization(u))
        return out

    def apply_multiset(self, i, j, us, state, normalized=False):
        """T_ij(u_1) ... T_ij(u_m) state."""
        for u in reversed(list(us)):
            state = self.apply(i, j, u, state, normalized)
        return state

    def apply_word(self, word, state, normalized=False):
        for i, j, us in reversed(list(word)):
            state = self.apply_multiset(i, j, us, state, normalized)
        return state

    def apply_word_dual(self, dual, word, normalized=False):
        for i, j, us in word:
            for u in us:
                dual = self.apply_dual(i, j, u, dual, normalized)
        return dual

    def word_matrix(self, word, normalized=False):
        """All columns of the word: {input key: output state data}, zero columns omitted."""
        cols = {}
        for key in all_keys(self.N, self.n):
            s = self.apply_word(word, SparseState(self.N, self.n, {key: Fraction(1)}), normalized)
            if not s.is_zero():
                cols[key] = s.data
        return cols
