"""Weight functions and Izergin-Korepin type determinants.

The scalar building blocks come from an ``RMatrix`` so that every formula has
a trigonometric and a rational version:

    same(x, y)  = q x - q^-1 y      |  x - y + h
    cross(x)    = (q - q^-1) x      |  h
    sym(a, b)   = (q^-1 a - q b)/(a - b)  |  (a - b - h)/(a - b)
"""
from __future__ import annotations

import itertools
from fractions import Fraction

from .scalars import DegenerateParameters, has_duplicates, prod
from .states import positions_at_most, relabel_subset

# ---------------------------------------------------------------------------
# exact linear algebra


def bareiss_det(matrix):
    """Determinant by fraction-free elimination with pivoting on nonzero entries."""
    a = [list(row) for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not a[k][k]:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0 * prev
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rank(rows):
    """Rank of a list of rows over the rationals."""
    a = [list(r) for r in rows]
    if not a:
        return 0
    m = len(a[0])
    r = 0
    for c in range(m):
        piv = next((i for i in range(r, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == len(a):
            break
    return r


# ---------------------------------------------------------------------------
# weight function


def _layer_factor(rm, us, upper, positions):
    """Product over one layer for fixed orderings of its own and the upper parameters."""
    val = Fraction(1)
    for a, u in enumerate(us):
        p = positions[a]
        for i, w in enumerate(upper, start=1):
            if i < p:
                val = val * (u - w)
            elif i == p:
                val = val * rm.cross(u)
            else:
                val = val * rm.same(u, w)
    for a in range(len(us)):
        for b in range(a + 1, len(us)):
            val = val * rm.sym(us[a], us[b])
    return val


def weight_function(rm, layers, v, colors):
    """Weight function W(u^1, ..., u^{N-1} | v | I).

    ``layers[p-1]`` holds the parameters of layer p, ``v`` the bottom
    parameters and ``colors`` the color tuple I (length len(v), colors 1..N,
    N = len(layers) + 1).  Layer p must have as many parameters as I has
    entries <= p.  Layer p is attached to the positions of its colors inside
    the positions of layer p+1; the top layer to positions in 1..len(v).
    """
    N = len(layers) + 1
    layers = [list(x) for x in layers]
    v = list(v)
    colors = tuple(colors)
    if len(colors) != len(v):
        raise ValueError("color tuple and bottom parameters differ in length")
    if any(not 1 <= c <= N for c in colors):
        raise ValueError("color out of range")
    pos = [positions_at_most(colors, p) for p in range(1, N)]
    for p in range(1, N):
        if len(layers[p - 1]) != len(pos[p - 1]):
            raise ValueError(f"layer {p} needs {len(pos[p - 1])} parameters")
    for grp in layers:
        if has_duplicates(grp):
            raise DegenerateParameters("coincident parameters inside a layer")
    rel = [relabel_subset(pos[p], pos[p - 1]) for p in range(1, N - 1)] + [pos[N - 2]] if N >= 2 else []

    # sum over orderings of every layer; the top layer is attached to v directly
    perms = [list(itertools.permutations(grp)) for grp in layers]
    total = Fraction(0)
    for choice in itertools.product(*perms):
        term = Fraction(1)
        for p in range(N - 1):
            upper = choice[p + 1] if p + 1 < N - 1 else v
            term = term * _layer_factor(rm, choice[p], upper, rel[p])
            if not term:
                break
        total = total + term
    return total


# ---------------------------------------------------------------------------
# Izergin-Korepin determinants


def _check_sets(u, v):
    if len(u) != len(v):
        raise ValueError("both parameter sets must have the same size")
    if has_duplicates(u) or has_duplicates(v):
        raise DegenerateParameters("coincident parameters inside a set")


def _ik_polynomial(rm, u, v, kernel):
    u, v = list(u), list(v)
    _check_sets(u, v)
    n = len(u)
    mat = [
        [kernel(i, j) * prod(rm.same(u[i], v[k]) * (u[i] - v[k]) for k in range(n) if k != j) for j in range(n)]
        for i in range(n)
    ]
    den = prod((u[i] - u[j]) * (v[j] - v[i]) for i in range(n) for j in range(i + 1, n))
    return bareiss_det(mat) / den


def ik_determinant(rm, u, v):
    """Domain-wall determinant in polynomial form (kernel (q - q^-1) u_i, or h)."""
    return _ik_polynomial(rm, u, v, lambda i, j: rm.cross(u[i]))


def ik_left(rm, u, v):
    """Left-normalized determinant: the same as ``ik_determinant``."""
    return ik_determinant(rm, u, v)


def ik_right(rm, u, v):
    """Right-normalized determinant: kernel (q - q^-1) v_j."""
    if not rm.is_trig:
        raise ValueError("the right-normalized determinant is trigonometric only")
    return _ik_polynomial(rm, u, v, lambda i, j: rm.cross(v[j]))


def ik_left_rat(rm, u, v):
    return ik_left(rm, u, v) / prod(a - b for a in u for b in v)


def ik_right_rat(rm, u, v):
    return ik_right(rm, u, v) / prod(a - b for a in u for b in v)


def ik_determinant_ratio(rm, u, v):
    """The same determinant written with the Cauchy-like kernel; needs u_i != v_j."""
    u, v = list(u), list(v)
    _check_sets(u, v)
    n = len(u)
    mat = [[rm.cross(u[i]) / (rm.same(u[i], v[j]) * (u[i] - v[j])) for j in range(n)] for i in range(n)]
    num = prod(rm.same(a, b) * (a - b) for a in u for b in v)
    den = prod((u[i] - u[j]) * (v[j] - v[i]) for i in range(n) for j in range(i + 1, n))
    return num / den * bareiss_det(mat)


def f_product(rm, xs, ys):
    """prod over x in xs, y in ys of f(x, y) = same(x, y)/(x - y)."""
    return prod(rm.f(x, y) for x in xs for y in ys)


def same_product(rm, xs, ys):
    return prod(rm.same(x, y) for x in xs for y in ys)


def plain_product(xs, ys):
    return prod(x - y for x in xs for y in ys)
