"""Multiple commutation relations for T_N1(u^1) T_N2(u^2) ... T_NN(u^N).

The product is rewritten as a sum over set partitions of the union of the
families u^1..u^N into families v^1..v^N of the same sizes, each term being a
scalar coefficient times T_NN(v^N) ... T_N1(v^1).  The coefficient can be
computed by three independent routes:

* ``weight``: closed-form weight function W
* ``grid``:   lattice partition function grid_h
* ``grid_k``: the larger lattice grid_k divided by its boundary factor

and, for N=2, ``ik`` uses the Izergin-Korepin determinant.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from math import factorial

from .grid import grid_h, grid_k
from .monodromy import Monodromy
from .rmatrix import Flavor, RMatrix
from .scalars import (
    DegenerateParameters,
    SamplePlan,
    has_duplicates,
    prod,
    verify_equal_at_samples,
)
from .special import ik_determinant, same_product, weight_function
from .states import runs


def multinomial(sizes):
    return factorial(sum(sizes)) // prod(factorial(m) for m in sizes)


def enumerate_partitions(families):
    """Every redistribution of the union of ``families`` into groups of the same sizes.

    Groups keep the order in which elements appear in the concatenated union.
    """
    union = [x for g in families for x in g]
    sizes = [len(g) for g in families]

    def rec(avail, k):
        if k == len(sizes) - 1:
            yield [[union[i] for i in avail]]
            return
        for pick in itertools.combinations(avail, sizes[k]):
            rest = [i for i in avail if i not in pick]
            for tail in rec(rest, k + 1):
                yield [[union[i] for i in pick]] + tail

    if not sizes:
        yield []
        return
    yield from rec(list(range(len(union))), 0)


def _check_distinct(families):
    union = [x for g in families for x in g]
    if has_duplicates(union):
        raise DegenerateParameters("parameters in the union must be pairwise distinct")


def v_prefactor(rm, vs):
    """1 / prod_{j<k} (v^k - v^j)(same(v^j, v^{k-1}))."""
    N = len(vs)
    den = Fraction(1)
    for j in range(N):
        for k in range(j + 1, N):
            den = den * prod(b - a for a in vs[j] for b in vs[k]) * same_product(rm, vs[j], vs[k - 1])
    return Fraction(1) / den


def _nested(us):
    return [[x for g in us[: p + 1] for x in g] for p in range(len(us) - 1)]


def layer_product(rm, groups, second=None):
    """prod_{l=1}^{N-2} prod_{j<=l} prod_{k<=l+1} same(a^j, b^k), with b = groups unless given."""
    second = groups if second is None else second
    N = len(groups)
    val = Fraction(1)
    for ell in range(1, N - 1):
        for j in range(ell):
            for k in range(ell + 1):
                val = val * same_product(rm, groups[j], second[k])
    return val


def weight_specialization(rm, us, vs):
    """W(u^1, u^1+u^2, ... | v^1, ..., v^N | 1^m1 ... N^mN)."""
    N = len(us)
    colors = runs(*((j + 1, len(us[j])) for j in range(N)))
    return weight_function(rm, _nested(us), [x for g in vs for x in g], colors)


def _head(rm, us, vs):
    N = len(us)
    return v_prefactor(rm, vs) * prod(same_product(rm, us[N - 1], vs[j]) for j in range(N - 1))


def coefficient_weight(rm, us, vs, literal_rational_display=False):
    """Coefficient of T_NN(v^N)...T_N1(v^1) from the weight-function formula.

    ``literal_rational_display`` replaces the layer product by the variant whose
    second argument runs over the v families (only meaningful for the rational
    flavor; kept to document that this reading does not hold).
    """
    N = len(us)
    den = prod(same_product(rm, us[j], vs[N - 1]) for j in range(N - 1))
    den = den * layer_product(rm, us, vs if literal_rational_display else None)
    return _head(rm, us, vs) / den * weight_specialization(rm, us, vs)


def coefficient_grid(rm, us, vs):
    """Same coefficient with the weight function replaced by the lattice grid_h."""
    N = len(us)
    return _head(rm, us, vs) * grid_h(rm, N, us[:-1], vs[:-1])


def coefficient_grid_k(rm, us, vs):
    """grid_h obtained as grid_k divided by prod_j same(u^j, v^N)."""
    N = len(us)
    kval = grid_k(rm, N, us[:-1], vs)
    return _head(rm, us, vs) * kval / prod(same_product(rm, us[j], vs[N - 1]) for j in range(N - 1))


def coefficient_ik(rm, us, vs):
    """N=2 only: the domain-wall factor is the Izergin-Korepin determinant."""
    if len(us) != 2:
        raise ValueError("the determinant form is for N=2")
    return _head(rm, us, vs) * ik_determinant(rm, us[0], vs[0])


COEFFICIENT_ROUTES = {
    "weight": coefficient_weight,
    "grid": coefficient_grid,
    "grid_k": coefficient_grid_k,
    "ik": coefficient_ik,
}


def lhs_word(us):
    N = len(us)
    return [(N, j + 1, list(us[j])) for j in range(N)]


def rhs_word(vs):
    N = len(vs)
    return [(N, j + 1, list(vs[j])) for j in reversed(range(N))]


def _accumulate(total, cols, c):
    for key, col in cols.items():
        dst = total.setdefault(key, {})
        for k, v in col.items():
            w = dst.get(k, 0) + c * v
            if w:
                dst[k] = w
            else:
                dst.pop(k, None)
        if not dst:
            total.pop(key)


def lhs_matrix(rm, us, xi):
    _check_distinct(us)
    return Monodromy(rm, len(us), xi).word_matrix(lhs_word(us))


def rhs_matrix(rm, us, xi, route="weight"):
    """sum over partitions of coefficient * matrix of T_NN(v^N) ... T_N1(v^1)."""
    _check_distinct(us)
    coef = COEFFICIENT_ROUTES[route]
    mono = Monodromy(rm, len(us), xi)
    total = {}
    for vs in enumerate_partitions(us):
        c = coef(rm, us, vs)
        if c:
            _accumulate(total, mono.word_matrix(rhs_word(vs)), c)
    return total


def _slots(flavor, sizes, n_sites, xi_mode):
    cname = Flavor.parse(flavor).coupling_name
    uslots = [f"u{j + 1}_{a + 1}" for j, m in enumerate(sizes) for a in range(m)]
    xslots = [] if xi_mode == "union" else [f"xi{k + 1}" for k in range(n_sites)]
    return cname, uslots, xslots


def _families(a, sizes):
    return [[a[f"u{j + 1}_{b + 1}"] for b in range(m)] for j, m in enumerate(sizes)]


def verify_multiple_commutation(flavor, sizes, plan: SamplePlan, n_sites=None, xi_mode="independent", route="weight"):
    """Full-matrix check of the multiple commutation relation in a vector representation.

    ``xi_mode='union'`` puts the quantum inhomogeneities equal to the union of
    the families (so n = sum(sizes)); otherwise they are independent generic
    values on ``n_sites`` sites.
    """
    flavor = Flavor.parse(flavor)
    sizes = list(sizes)
    N = len(sizes)
    if N < 2:
        raise ValueError("need N >= 2")
    if route == "ik" and N != 2:
        raise ValueError("the determinant route needs N = 2")
    if xi_mode == "union" or n_sites is None:
        n_sites = sum(sizes)
    cname, uslots, xslots = _slots(flavor, sizes, n_sites, xi_mode)

    def setup(a):
        rm = RMatrix(flavor, a[cname])
        us = _families(a, sizes)
        xi = [x for g in us for x in g] if xi_mode == "union" else [a[s] for s in xslots]
        return rm, us, xi

    def lhs(a):
        rm, us, xi = setup(a)
        return lhs_matrix(rm, us, xi)

    def rhs(a):
        rm, us, xi = setup(a)
        return rhs_matrix(rm, us, xi, route)

    ident = "multiple-commutation" if route != "ik" else "rank-one-determinant-form"
    return verify_equal_at_samples(
        lhs, rhs, plan, [cname] + uslots + xslots, identity=ident, anchor=f"commutation/{route}",
        flavor=flavor.value,
        instance={"N": N, "sizes": sizes, "n": n_sites, "inhomogeneities": xi_mode, "coefficients": route},
    )


def verify_coefficient_routes(flavor, sizes, plan: SamplePlan, routes=("weight", "grid", "grid_k")):
    """All coefficient routes agree as scalars on every partition of the sampled families."""
    flavor = Flavor.parse(flavor)
    sizes = list(sizes)
    cname, uslots, _ = _slots(flavor, sizes, 0, "union")

    def table(route):
        fn = COEFFICIENT_ROUTES[route]

        def ev(a):
            rm = RMatrix(flavor, a[cname])
            us = _families(a, sizes)
            return [fn(rm, us, vs) for vs in enumerate_partitions(us)]

        return ev

    reports = []
    base = routes[0]
    for other in routes[1:]:
        reports.append(
            verify_equal_at_samples(
                table(base), table(other), plan, [cname] + uslots, identity="coefficient-routes",
                anchor=f"commutation/{base}={other}", flavor=flavor.value,
                instance={"N": len(sizes), "sizes": sizes, "routes": [base, other]},
            )
        )
    return reports
