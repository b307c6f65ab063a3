"""Trigonometric to rational degeneration.

Substituting u = e^{eps x}, v = e^{eps y}, q = e^{eps h/2} into the second
trigonometric R-matrix gives eps times the rational R-matrix plus O(eps^2).
The exponent bookkeeping for the operator-level limit is the integer identity
alpha = beta + gamma checked by ``exponent_identity``.
"""
from __future__ import annotations

import itertools
import random

from .report import SampleRecord, VerificationReport
from .rmatrix import Flavor, RMatrix
from .scalars import SamplePlan, truncated_exp, verify_equal_at_samples


class _SeriesTrig:
    """Second trigonometric R-matrix with q = e^{eps h/2} as a truncated series."""

    def __init__(self, h, order):
        self.q = truncated_exp(h / 2, order)
        self.qi = truncated_exp(-h / 2, order)

    def element(self, u, v, i, j, k, l):
        if i == j:
            return self.q * u - self.qi * v if (k, l) == (i, j) else 0
        if (k, l) == (i, j):
            return u - v
        if (k, l) == (j, i):
            # second trigonometric matrix: R_ij^ji = (q - q^-1) v for i < j, (q - q^-1) u for i > j
            return (self.q - self.qi) * (v if i < j else u)
        return 0


def series_element(h, x, y, order, i, j, k, l):
    """Element of the second trigonometric R-matrix at u=e^{eps x}, v=e^{eps y}, q=e^{eps h/2}."""
    r = _SeriesTrig(h, order)
    val = r.element(truncated_exp(x, order), truncated_exp(y, order), i, j, k, l)
    return val * 1 if not isinstance(val, int) else truncated_exp(0, order) * val


def degenerate_r_check(N, order, plan: SamplePlan):
    """eps^0 coefficients vanish and eps^1 coefficients equal the rational matrix, for every index quadruple."""
    if order < 2:
        raise ValueError("order must be at least 2")
    quads = list(itertools.product(range(1, N + 1), repeat=4))

    def lhs(a):
        out = []
        for quad in quads:
            s = series_element(a["h"], a["x"], a["y"], order, *quad)
            out.append((s[0], s[1]))
        return out

    def rhs(a):
        rat = RMatrix(Flavor.RATIONAL, a["h"])
        return [(0, rat.element(a["x"], a["y"], *quad)) for quad in quads]

    return verify_equal_at_samples(
        lhs, rhs, plan, ["h", "x", "y"], identity="degeneration-r-matrix", anchor="degeneration/r-matrix",
        flavor="trigB", instance={"N": N, "order": order},
    )


def exponents(sizes):
    """(alpha, beta, gamma) for set sizes m_1..m_N."""
    m = list(sizes)
    if any(x < 0 for x in m):
        raise ValueError("sizes must be non-negative")
    N = len(m)
    n = sum(m)
    alpha = n * sum((j - 1) * m[j - 1] for j in range(2, N + 1))
    beta = n * sum(m[j - 1] for j in range(2, N + 1))
    # 1-based m_j is m[j-1]; |I_{j+1} + ... + I_N| = sum(m[j:])
    gamma = sum(sum(m[j:]) * sum(m[: j - 2 + 1 - 0][: j - 1]) for j in range(2, N))
    gamma += sum((2 * j - 1) * m[k] * m[j] for j in range(1, N) for k in range(j + 1, N))
    gamma += sum((j - 1) * m[j] ** 2 for j in range(2, N))
    return alpha, beta, gamma


def exponent_identity(sizes):
    a, b, g = exponents(sizes)
    rep = VerificationReport(
        identity="exponent-identity", anchor="degeneration/exponents", instance={"sizes": list(sizes), "alpha": a, "beta": b, "gamma": g},
    )
    rep.samples.append(SampleRecord(index=0, attempt=0, equal=a == b + g))
    return rep.finish()


def random_size_vectors(seed, count=200, max_N=6, max_size=4):
    rng = random.Random(f"sizes|{seed}")
    out = []
    for _ in range(count):
        N = rng.randint(2, max_N)
        out.append([rng.randint(0, max_size) for _ in range(N)])
    return out
