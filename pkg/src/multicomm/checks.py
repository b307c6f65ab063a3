"""Sampled verification wrappers for the lattice, Bethe and Gelfand-Tsetlin identities.

Every function returns a ``VerificationReport``; the evaluators draw their
scalars from ``sample_assignment`` so the reports are reproducible per seed.
"""
from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .bethe import (
    gt_rank,
    gt_relation_prefactor,
    gt_vector_molev,
    gt_vector_new,
    psi_closed_first,
    psi_closed_second,
    psi_specialization,
    qdet,
    qdet_eigenvalue,
    quantum_minor,
    set_partitions,
    show_relation_sides,
    singular_conditions,
    singular_ladder,
    specialization_targets,
    universal_bethe,
)
from .grid import domain_wall, grid_f, grid_h, grid_k, psi_layered
from .monodromy import Monodromy
from .rmatrix import Flavor, RMatrix
from .scalars import SamplePlan, fmt_q, prod, sample_assignment, verify_equal_at_samples
from .special import ik_determinant, same_product, weight_function
from .states import SparseState, all_keys, basis_state, positions_at_most


def _rm(flavor, a):
    flavor = Flavor.parse(flavor)
    return RMatrix(flavor, a[flavor.coupling_name])


def _seq(prefix, k):
    return [f"{prefix}{a + 1}" for a in range(k)]


def _pick(a, names):
    return [a[s] for s in names]


# ---------------------------------------------------------------------------
# lattice identities


def color_tuples(N, L, max_layer):
    """Color tuples of length L whose layer sizes k_1..k_{N-1} are all <= max_layer."""
    out = []
    for colors in itertools.product(range(1, N + 1), repeat=L):
        if all(len(positions_at_most(colors, p)) <= max_layer for p in range(1, N)):
            out.append(colors)
    return out


def check_psi_equals_w(flavor, N, L, plan: SamplePlan, max_layer=2):
    """Layered partition function equals the weight function for every admissible color tuple of length L."""
    flavor = Flavor.parse(flavor)
    tuples = color_tuples(N, L, max_layer)
    uslots = [[f"u{p}_{a + 1}" for a in range(max_layer)] for p in range(1, N)]
    vslots = _seq("v", L)
    slots = [flavor.coupling_name] + [s for g in uslots for s in g] + vslots

    def args(a, colors):
        ks = [len(positions_at_most(colors, p)) for p in range(1, N)]
        return [_pick(a, uslots[p][: ks[p]]) for p in range(N - 1)], _pick(a, vslots)

    def lhs(a):
        rm = _rm(flavor, a)
        return [psi_layered(rm, *args(a, c), c) for c in tuples]

    def rhs(a):
        rm = _rm(flavor, a)
        return [weight_function(rm, *args(a, c), c) for c in tuples]

    return verify_equal_at_samples(
        lhs, rhs, plan, slots, identity="psi-equals-weight-function", anchor="grid/psi=W", flavor=flavor.value,
        instance={"N": N, "L": L, "max_layer": max_layer, "tuples": len(tuples)},
    )


def check_h_equals_k(flavor, n, plan: SamplePlan):
    """Domain-wall partition function equals the Izergin-Korepin determinant."""
    flavor = Flavor.parse(flavor)
    us, vs = _seq("u", n), _seq("v", n)

    def lhs(a):
        return domain_wall(_rm(flavor, a), _pick(a, us), _pick(a, vs))

    def rhs(a):
        return ik_determinant(_rm(flavor, a), _pick(a, us), _pick(a, vs))

    return verify_equal_at_samples(
        lhs, rhs, plan, [flavor.coupling_name] + us + vs, identity="domain-wall-equals-determinant",
        anchor="grid/H=K", flavor=flavor.value, instance={"n": n},
    )


def _groups(a, prefix, sizes):
    return [[a[f"{prefix}{j + 1}_{b + 1}"] for b in range(m)] for j, m in enumerate(sizes)]


def _group_slots(prefix, sizes):
    return [f"{prefix}{j + 1}_{b + 1}" for j, m in enumerate(sizes) for b in range(m)]


def check_grid_k_factor(flavor, sizes, plan: SamplePlan):
    """grid_k = prod_j same(u^j, v^N) * grid_h.  ``sizes`` are |u^1|..|u^{N-1}| followed by |v^N|."""
    flavor = Flavor.parse(flavor)
    sizes = list(sizes)
    N = len(sizes)
    us_sizes = sizes[:-1]
    slots = [flavor.coupling_name] + _group_slots("u", us_sizes) + _group_slots("v", sizes)

    def lhs(a):
        return grid_k(_rm(flavor, a), N, _groups(a, "u", us_sizes), _groups(a, "v", sizes))

    def rhs(a):
        rm = _rm(flavor, a)
        us, vs = _groups(a, "u", us_sizes), _groups(a, "v", sizes)
        return prod(same_product(rm, g, vs[-1]) for g in us) * grid_h(rm, N, us, vs[:-1])

    return verify_equal_at_samples(
        lhs, rhs, plan, slots, identity="enlarged-grid-factorization", anchor="grid/K=prod*H",
        flavor=flavor.value, instance={"N": N, "sizes": sizes},
    )


def check_grid_f_factor(flavor, sizes, plan: SamplePlan):
    """grid_f = prod_j same(u^N, v^j) * grid_h.  ``sizes`` are |u^1|..|u^{N-1}| followed by |u^N|."""
    flavor = Flavor.parse(flavor)
    sizes = list(sizes)
    N = len(sizes)
    slots = [flavor.coupling_name] + _group_slots("u", sizes) + _group_slots("v", sizes[:-1])

    def lhs(a):
        return grid_f(_rm(flavor, a), N, _groups(a, "u", sizes), _groups(a, "v", sizes[:-1]))

    def rhs(a):
        rm = _rm(flavor, a)
        us, vs = _groups(a, "u", sizes), _groups(a, "v", sizes[:-1])
        return prod(same_product(rm, us[-1], g) for g in vs) * grid_h(rm, N, us[:-1], vs)

    return verify_equal_at_samples(
        lhs, rhs, plan, slots, identity="grid-with-diagonal-factorization", anchor="grid/F=prod*H",
        flavor=flavor.value, instance={"N": N, "sizes": sizes},
    )


# ---------------------------------------------------------------------------
# Bethe vectors and their specializations (second trigonometric R-matrix)


def check_b_equals_bhat(N, sizes, n, plan: SamplePlan, flavor="trigB"):
    """Both universal Bethe vector expressions agree on e_{1^n}."""
    flavor = Flavor.parse(flavor)
    sizes = list(sizes)
    ws = _seq("w", n)
    slots = [flavor.coupling_name] + ws + _group_slots("t", sizes)

    def side(variant):
        def ev(a):
            return universal_bethe(_rm(flavor, a), _pick(a, ws), _groups(a, "t", sizes), variant)

        return ev

    return verify_equal_at_samples(
        side("B"), side("B_hat"), plan, slots, identity="universal-bethe-equivalence", anchor="bethe/B=B_hat",
        flavor=flavor.value, instance={"N": N, "sizes": sizes, "n": n},
    )


def check_psi_closed_forms(N, n, plan: SamplePlan, max_part=2, flavor="trigB", path_check=True):
    """Both specializations equal their closed forms for every I.

    With ``path_check`` the first one is also recomputed along a second,
    random approach direction.
    """
    flavor = Flavor.parse(flavor)
    ws = _seq("w", n)
    parts = set_partitions(n, N, max_part)

    def directions(a, I):
        # distinct directions: a site shared by two levels must not cancel exactly
        rng = random.Random(f"{plan.seed}|{a['w1']}|{I}")
        targets = specialization_targets(ws, I)
        pool = iter(rng.sample(range(1, 1000), sum(len(t) for t in targets)))
        return [[next(pool) for _ in t] for t in targets]

    def lhs(a):
        rm, w = _rm(flavor, a), _pick(a, ws)
        out = []
        for I in parts:
            out.append(psi_specialization(rm, w, I, "B"))
            out.append(psi_specialization(rm, w, I, "B_hat"))
            if path_check:
                out.append(psi_specialization(rm, w, I, "B", deltas=directions(a, I)))
        return out

    def rhs(a):
        rm, w = _rm(flavor, a), _pick(a, ws)
        out = []
        for I in parts:
            first = psi_closed_first(rm, w, I)
            out += [first, psi_closed_second(rm, w, I)] + ([first] if path_check else [])
        return out

    return verify_equal_at_samples(
        lhs, rhs, plan, [flavor.coupling_name] + ws, identity="bethe-specializations", anchor="bethe/psi-closed",
        flavor=flavor.value, instance={"N": N, "n": n, "max_part": max_part, "partitions": len(parts), "path_check": path_check},
    )


def check_show_relation(flavor, N, n, plan: SamplePlan, max_part=2):
    """Top-down chain on e_{1^n} equals the prefactor times the T_1N ... T_12 word."""
    flavor = Flavor.parse(flavor)
    ws = _seq("w", n)
    parts = set_partitions(n, N, max_part)

    def side(k):
        def ev(a):
            rm, w = _rm(flavor, a), _pick(a, ws)
            return [show_relation_sides(rm, w, I)[k] for I in parts]

        return ev

    return verify_equal_at_samples(
        side(0), side(1), plan, [flavor.coupling_name] + ws, identity="chain-relation", anchor="bethe/chain-relation",
        flavor=flavor.value, instance={"N": N, "n": n, "max_part": max_part, "partitions": len(parts)},
    )


# ---------------------------------------------------------------------------
# Gelfand-Tsetlin vectors (first trigonometric or rational R-matrix)


def check_relation_gz(flavor, N, n, plan: SamplePlan, max_part=2):
    """The nested-chain vector equals the prefactor times T_N1 ... T_{N,N-1} e_{N^n}, for every J."""
    flavor = Flavor.parse(flavor)
    ws = _seq("w", n)
    parts = set_partitions(n, N, max_part)

    def lhs(a):
        rm, w = _rm(flavor, a), _pick(a, ws)
        return [gt_vector_molev(rm, w, J) for J in parts]

    def rhs(a):
        rm, w = _rm(flavor, a), _pick(a, ws)
        return [gt_vector_new(rm, w, J) * gt_relation_prefactor(rm, w, J) for J in parts]

    return verify_equal_at_samples(
        lhs, rhs, plan, [flavor.coupling_name] + ws, identity="gelfand-tsetlin-relation", anchor="bethe/gt-relation",
        flavor=flavor.value, instance={"N": N, "n": n, "max_part": max_part, "partitions": len(parts)},
    )


def check_qdet_diagonalization(N, n, plan: SamplePlan):
    """qdet T^(j)(u) acts on both Gelfand-Tsetlin vectors by the product of lambda_jk, for all J and j."""
    ws = _seq("w", n)
    parts = set_partitions(n, N)

    def lhs(a):
        rm, w, u = _rm("trigA", a), _pick(a, ws), a["u"]
        mono = Monodromy(rm, N, w)
        out = []
        for J in parts:
            for vec in (gt_vector_molev(rm, w, J), gt_vector_new(rm, w, J)):
                out += [qdet(mono, j, u, vec) for j in range(1, N + 1)]
        return out

    def rhs(a):
        rm, w, u = _rm("trigA", a), _pick(a, ws), a["u"]
        out = []
        for J in parts:
            for vec in (gt_vector_molev(rm, w, J), gt_vector_new(rm, w, J)):
                out += [vec * qdet_eigenvalue(rm, w, J, j, u) for j in range(1, N + 1)]
        return out

    return verify_equal_at_samples(
        lhs, rhs, plan, ["q"] + ws + ["u"], identity="qdet-diagonalization", anchor="gt/qdet",
        flavor="trigA", instance={"N": N, "n": n, "partitions": len(parts)},
    )


def _random_minor(rng, N):
    r = rng.randint(1, N)
    rows = rng.sample(range(1, N + 1), r)
    cols = sorted(rng.sample(range(1, N + 1), r))
    return rows, cols, rng.randrange(r)


def check_minor_commutativity(N, n, plan: SamplePlan, states=20):
    """A quantum minor commutes with T_{a_j b_j}(v) for each of its own index pairs, on random states."""
    ws = _seq("w", n)
    rng = random.Random(f"minors|{plan.seed}|{N}|{n}")
    cases = []
    for _ in range(states):
        rows, cols, j = _random_minor(rng, N)
        coeffs = {k: Fraction(rng.randint(-9, 9)) for k in all_keys(N, n)}
        cases.append((rows, cols, j, coeffs))

    def side(minor_first):
        def ev(a):
            rm = _rm("trigA", a)
            mono = Monodromy(rm, N, _pick(a, ws))
            out = []
            for rows, cols, j, coeffs in cases:
                st = SparseState(N, n, coeffs)
                if minor_first:
                    s = mono.apply(rows[j], cols[j], a["v"], quantum_minor(mono, rows, cols, a["u"], st))
                else:
                    s = quantum_minor(mono, rows, cols, a["u"], mono.apply(rows[j], cols[j], a["v"], st))
                out.append(s)
            return out

        return ev

    return verify_equal_at_samples(
        side(True), side(False), plan, ["q"] + ws + ["u", "v"], identity="quantum-minor-commutativity",
        anchor="gt/minor-commutativity", flavor="trigA", instance={"N": N, "n": n, "states": states},
    )


def check_singular_ladder(N, n, plan: SamplePlan):
    """Along the chain from e_{N^n} to each nested-chain vector every step keeps the vector singular with the predicted weights."""
    ws = _seq("w", n)
    parts = set_partitions(n, N)

    def lhs(a):
        rm, w = _rm("trigA", a), _pick(a, ws)
        mono = Monodromy(rm, N, w)
        out = []
        for J in parts:
            for k, eta, weights, ok in singular_ladder(mono, w, J):
                out.append(ok and all(c for _, c in singular_conditions(mono, eta, k, weights, a["u"])))
        return out

    def rhs(a):
        rm, w = _rm("trigA", a), _pick(a, ws)
        mono = Monodromy(rm, N, w)
        return [True for J in parts for _ in singular_ladder(mono, w, J)]

    return verify_equal_at_samples(
        lhs, rhs, plan, ["q"] + ws + ["u"], identity="singular-vector-ladder", anchor="gt/singular-ladder",
        flavor="trigA", instance={"N": N, "n": n, "partitions": len(parts)},
    )


def check_gt_independence(flavor, N, n, plan: SamplePlan):
    """Gelfand-Tsetlin vectors with the same color content are linearly independent."""
    flavor = Flavor.parse(flavor)
    ws = _seq("w", n)
    parts = set_partitions(n, N)

    def content(J):
        return tuple(len(p) for p in J)

    groups = {}
    for J in parts:
        groups.setdefault(content(J), []).append(J)

    def lhs(a):
        rm, w = _rm(flavor, a), _pick(a, ws)
        return [gt_rank([gt_vector_new(rm, w, J) for J in grp]) for _, grp in sorted(groups.items())]

    def rhs(a):
        return [len(grp) for _, grp in sorted(groups.items())]

    return verify_equal_at_samples(
        lhs, rhs, plan, [flavor.coupling_name] + ws, identity="gelfand-tsetlin-independence",
        anchor="bethe/gt-rank", flavor=flavor.value, instance={"N": N, "n": n},
    )


# ---------------------------------------------------------------------------
# golden example: rational N=3, n=3, I_1={2}, I_2={3}, I_3={1}


def golden_sides(h, z1, z2, z3):
    """Left state, right state and the two displayed expansion coefficients."""
    rm = RMatrix(Flavor.RATIONAL, h)
    mono = Monodromy(rm, 3, [z1, z2, z3])
    e = basis_state((1, 1, 1), 3)
    left = mono.apply_word([(2, 3, [z1]), (1, 2, [z1]), (1, 2, [z3])], e)
    right = mono.apply_word([(1, 3, [z1]), (1, 2, [z3])], e) * (h * (z1 - z2) * (z1 - z3 + h))
    c312 = -h ** 3 * (z1 - z2) * (z1 - z2 + h) * (z1 - z3 + h) ** 2 * (z2 - z3) * (z3 - z1 + h)
    c321 = h ** 4 * (z1 - z2) * (z1 - z2 + h) * (z1 - z3 + h) ** 2 * (z3 - z1 + h)
    return left, right, {(3, 1, 2): c312, (3, 2, 1): c321}


def check_golden(plan: SamplePlan):
    """The explicit rational example: both states agree and carry exactly the two displayed coefficients."""
    slots = ["h", "z1", "z2", "z3"]

    def lhs(a):
        left, right, _ = golden_sides(*_pick(a, slots))
        return [dict(left.items()), dict(right.items())]

    def rhs(a):
        _, _, coeffs = golden_sides(*_pick(a, slots))
        return [coeffs, coeffs]

    return verify_equal_at_samples(
        lhs, rhs, plan, slots, identity="golden-rational-example", anchor="golden/N3-n3", flavor="rational",
        instance={"N": 3, "n": 3, "I": [[2], [3], [1]]},
    )


def golden_point_table(plan: SamplePlan):
    """(assignment, left coefficients) per sample point, as strings, for regression files."""
    rows = []
    for index in range(plan.count):
        a = sample_assignment(plan, ["h", "z1", "z2", "z3"], index, 0)
        left, _, _ = golden_sides(a["h"], a["z1"], a["z2"], a["z3"])
        rows.append(({k: fmt_q(v) for k, v in a.items()}, {",".join(map(str, k)): fmt_q(v) for k, v in sorted(left.items())}))
    return rows

