"""Sparse vectors in (C^N)^{(x) n} and helpers for color tuples.

A basis vector e_{c_1} (x) ... (x) e_{c_n} is keyed by the tuple (c_1, ..., c_n)
with colors in 1..N.  Tuple position k is the k-th tensor factor.
"""
from __future__ import annotations

import itertools
import re
from fractions import Fraction


class SparseState:
    """Finite linear combination of basis tensors (or of dual basis tensors)."""

    __slots__ = ("N", "data", "dual", "n")

    def __init__(self, N, n, data=None, dual=False):
        self.N = N
        self.n = n
        self.dual = dual
        self.data = {}
        if data:
            for k, c in data.items():
                self._check_key(k)
                if c:
                    self.data[tuple(k)] = c

    def _check_key(self, k):
        if len(k) != self.n or any(not 1 <= c <= self.N for c in k):
            raise ValueError(f"bad basis key {k} for N={self.N}, n={self.n}")

    def _compatible(self, other):
        if (self.N, self.n, self.dual) != (other.N, other.n, other.dual):
            raise ValueError("incompatible states")

    @classmethod
    def zero(cls, N, n, dual=False):
        return cls(N, n, None, dual)

    def copy(self):
        s = SparseState(self.N, self.n, None, self.dual)
        s.data = dict(self.data)
        return s

    def add_term(self, key, c):
        """In-place accumulate; drops entries that cancel exactly."""
        if not c:
            return
        v = self.data.get(key)
        v = c if v is None else v + c
        if v:
            self.data[key] = v
        else:
            self.data.pop(key, None)

    def __add__(self, other):
        self._compatible(other)
        s = self.copy()
        for k, c in other.data.items():
            s.add_term(k, c)
        return s

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        s = SparseState(self.N, self.n, None, self.dual)
        if not c:
            return s
        for k, v in self.data.items():
            w = v * c
            if w:
                s.data[k] = w
        return s

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self * (Fraction(1) / c)

    def __getitem__(self, key):
        return self.data.get(tuple(key), 0)

    def items(self):
        return self.data.items()

    def keys(self):
        return self.data.keys()

    def __len__(self):
        return len(self.data)

    def is_zero(self):
        return not self.data

    def __eq__(self, other):
        if isinstance(other, SparseState):
            return (self.N, self.n, self.dual) == (other.N, other.n, other.dual) and self.data == other.data
        if other == 0:
            return self.is_zero()
        return NotImplemented

    __hash__ = None

    def map_coefficients(self, f):
        s = SparseState(self.N, self.n, None, self.dual)
        for k, v in self.data.items():
            w = f(v)
            if w:
                s.data[k] = w
        return s

    def __repr__(self):
        star = "*" if self.dual else ""
        body = " + ".join(f"({v}) e{star}_{format_colors(k)}" for k, v in sorted(self.data.items())) or "0"
        return f"SparseState[N={self.N}, n={self.n}]({body})"


def basis_state(colors, N, dual=False, coefficient=1):
    colors = tuple(colors)
    return SparseState(N, len(colors), {colors: coefficient}, dual)


def pair(dual: SparseState, state: SparseState):
    """<dual, state> for a covector and a vector on the same space."""
    if not dual.dual or state.dual:
        raise ValueError("pair expects (dual, vector)")
    if (dual.N, dual.n) != (state.N, state.n):
        raise ValueError("incompatible spaces")
    small, big = (dual, state) if len(dual) <= len(state) else (state, dual)
    total = 0
    for k, v in small.items():
        w = big.data.get(k)
        if w is not None:
            total = total + v * w
    return total


def all_keys(N, n):
    return itertools.product(range(1, N + 1), repeat=n)


# ---------------------------------------------------------------------------
# color tuples

_RUN = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


def runs(*pairs):
    """runs((1, 2), (3, 1)) -> (1, 1, 3)."""
    out = []
    for color, mult in pairs:
        if mult < 0:
            raise ValueError("negative multiplicity")
        out.extend([color] * mult)
    return tuple(out)


def parse_colors(text: str):
    """Parse '1^2,3,2^0' (or '1^2 3') into a color tuple."""
    out = []
    text = text.strip()
    if not text:
        return ()
    for tok in re.split(r"[,\s]+", text):
        if not tok:
            continue
        m = _RUN.match(tok)
        if not m:
            raise ValueError(f"bad color token {tok!r}")
        color, mult = int(m.group(1)), int(m.group(2) or 1)
        if color < 1:
            raise ValueError("colors start at 1")
        out.extend([color] * mult)
    return tuple(out)


def format_colors(colors) -> str:
    """Inverse of parse_colors, compressing runs."""
    parts = []
    for color, grp in itertools.groupby(colors):
        m = len(list(grp))
        parts.append(str(color) if m == 1 else f"{color}^{m}")
    return ",".join(parts)


def positions_at_most(colors, j):
    """1-based positions whose color is <= j, in increasing order."""
    return tuple(k + 1 for k, c in enumerate(colors) if c <= j)


def relabel_subset(outer, inner):
    """Positions of the elements of ``inner`` within ``outer``.

    Both are increasing tuples and ``inner`` must be a subset of ``outer``.
    relabel_subset((2, 4, 7), (4, 7)) == (2, 3).
    """
    index = {x: k + 1 for k, x in enumerate(outer)}
    try:
        return tuple(index[x] for x in inner)
    except KeyError as exc:
        raise ValueError(f"{inner} is not a subset of {outer}") from exc


def color_content(colors, N):
    return tuple(sum(1 for c in colors if c == a) for a in range(1, N + 1))
