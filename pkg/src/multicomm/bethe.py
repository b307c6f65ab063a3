"""Nested Bethe vectors, their specializations, Gelfand-Tsetlin vectors and quantum minors.

Two expressions B and B_hat for the universal nested Bethe vector are sums
over *nested partitions*: level k (k = 1..N-1) splits t^k into cells (i, j)
with i <= k <= j <= N-1, and a cell has the same size on every level where it
appears.  Both are evaluated in the vector representation of the second
trigonometric R-matrix with the normalized monodromy T/prod(u - w).

The prefactored specializations Psi and Psi_tilde put the sets t^j on the
parameters w_{I_{j+1}} + ... + w_{I_N}.  Individual terms have poles there,
so the value is computed as an exact limit: every t-variable is moved off
the specialization point by eps * delta and the eps^0 coefficient of the
resulting Laurent jet is taken, after checking that negative powers cancel.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

from .monodromy import Monodromy
from .scalars import LaurentJet, PrecisionError, prod
from .special import ik_left_rat, ik_right_rat, rank
from .states import SparseState, basis_state, runs

# ---------------------------------------------------------------------------
# nested partitions


def cells(N, k):
    """Cells of level k, in row-major order."""
    return [(i, j) for i in range(1, k + 1) for j in range(k, N)]


def prec(c):
    """Row-major order key."""
    return c


def prec_t(c):
    """Column-major order key."""
    return (c[1], c[0])


def _size_profiles(N, totals):
    all_cells = sorted({c for k in range(1, N) for c in cells(N, k)})
    levels = {k: cells(N, k) for k in range(1, N)}
    bound = max(totals) if totals else 0

    def rec(idx, acc):
        if idx == len(all_cells):
            if all(sum(acc[c] for c in levels[k]) == totals[k - 1] for k in range(1, N)):
                yield dict(acc)
            return
        c = all_cells[idx]
        for s in range(bound + 1):
            acc[c] = s
            if any(sum(acc.get(d, 0) for d in levels[k]) > totals[k - 1] for k in range(1, N)):
                break
            yield from rec(idx + 1, acc)
        acc.pop(c, None)

    yield from rec(0, {})


def _split(items, sizes):
    if not sizes:
        if not items:
            yield []
        return
    for pick in itertools.combinations(range(len(items)), sizes[0]):
        rest = [x for k, x in enumerate(items) if k not in pick]
        for tail in _split(rest, sizes[1:]):
            yield [[items[k] for k in pick]] + tail


def nested_partitions(N, ts):
    """All nested partitions of t^1..t^{N-1} as dicts {(k, cell): list}."""
    ts = [list(t) for t in ts]
    if len(ts) != N - 1:
        raise ValueError("need N-1 sets t^k")
    for prof in _size_profiles(N, [len(t) for t in ts]):
        per_level = []
        for k in range(1, N):
            cs = cells(N, k)
            per_level.append([dict(zip(((k, c) for c in cs), split)) for split in _split(ts[k - 1], [prof[c] for c in cs])])
        for combo in itertools.product(*per_level):
            out = {}
            for d in combo:
                out.update(d)
            yield out


# ---------------------------------------------------------------------------
# the two universal expressions


def _fset(rm, xs, ys):
    return prod(rm.f(x, y) for x in xs for y in ys)


def default_within_order(variant):
    """Order of the within-level f-products: row-major for B, column-major for B_hat.

    For N=3 both orders give the same product; from N=4 on only this choice
    makes B and B_hat agree.
    """
    return prec if variant == "B" else prec_t


def bethe_coefficient(rm, N, part, variant, within_order=None):
    """Scalar weight of one nested partition.  ``variant`` is 'B' or 'B_hat'."""
    if within_order is None:
        within_order = default_within_order(variant)
    cross_order = prec if variant == "B" else prec_t
    ik = ik_left_rat if variant == "B" else ik_right_rat
    val = Fraction(1)
    for k in range(1, N):
        cs = sorted(cells(N, k), key=within_order)
        for a in range(len(cs)):
            for b in range(a + 1, len(cs)):
                val = val * _fset(rm, part[(k, cs[b])], part[(k, cs[a])])
    for k in range(2, N):
        upper = cells(N, k)
        lower = cells(N, k - 1)
        for c in upper:
            for d in lower:
                if cross_order(c) < cross_order(d):
                    val = val * _fset(rm, part[(k, c)], part[(k - 1, d)])
        for c in upper:
            if c in lower and c[0] < c[1]:
                x, y = part[(k, c)], part[(k - 1, c)]
                if x:
                    val = val * ik(rm, x, y)
    return val


def bethe_word(N, part, variant):
    word = []
    if variant == "B":
        for k in range(1, N):
            for j in range(N, k, -1):
                word.append((k, j, part[(k, (k, j - 1))]))
        for k in range(2, N):
            for c in cells(N, k):
                if prec(c) < prec((k, k)):
                    word.append((k, k, part[(k, c)]))
    else:
        for k in range(N - 1, 0, -1):
            for j in range(1, k + 1):
                word.append((j, k + 1, part[(k, (j, k))]))
        for k in range(1, N - 1):
            for c in cells(N, k):
                if prec_t((k, k)) < prec_t(c):
                    word.append((k + 1, k + 1, part[(k, c)]))
    return [(i, j, us) for i, j, us in word if us]


def universal_bethe(rm, w, ts, variant="B", within_order=None):
    """B(t^1..t^{N-1}) e_{1^n} (or B_hat) in the vector representation on sites w.

    ``rm`` should be the second trigonometric R-matrix; N = len(ts) + 1.
    """
    N = len(ts) + 1
    mono = Monodromy(rm, N, w)
    start = basis_state(runs((1, len(w))), N)
    total = SparseState(N, len(w))
    for part in nested_partitions(N, ts):
        c = bethe_coefficient(rm, N, part, variant, within_order)
        if not c:
            continue
        s = mono.apply_word(bethe_word(N, part, variant), start, normalized=True)
        if not s.is_zero():
            total = total + s * c
    return total


# ---------------------------------------------------------------------------
# specializations


def _check_partition(I, n):
    flat = sorted(x for part in I for x in part)
    if flat != list(range(1, n + 1)):
        raise ValueError(f"{I} is not a set partition of 1..{n}")


def _ws(w, idx):
    return [w[k - 1] for k in idx]


def specialization_targets(w, I):
    """t^j = w_{I_{j+1}} + ... + w_{I_N}, as lists of site indices (1-based)."""
    N = len(I)
    return [[k for part in I[j:] for k in sorted(part)] for j in range(1, N)]


def psi_prefactor(ts, w):
    """(t^1 - w) prod_{l>=2} (t^l - t^{l-1})."""
    val = prod(a - b for a in ts[0] for b in w)
    for ell in range(1, len(ts)):
        val = val * prod(a - b for a in ts[ell] for b in ts[ell - 1])
    return val


def psi_specialization(rm, w, I, variant="B", deltas=None, work=2, max_work=256):
    """Exact value of the prefactored specialization Psi (variant 'B') or Psi_tilde ('B_hat').

    ``deltas[k][a]`` is the direction in which the a-th member of t^{k+1} leaves
    the specialization point; the default uses distinct small integers.
    """
    N = len(I)
    n = len(w)
    _check_partition(I, n)
    targets = specialization_targets(w, I)
    if deltas is None:
        deltas, d = [], 1
        for t in targets:
            deltas.append([d + a for a in range(len(t))])
            d += len(t) + 1
    while True:
        try:
            return _psi_jet(rm, w, targets, deltas, variant, work, N)
        except PrecisionError:
            if work >= max_work:
                raise
            work *= 2


def _psi_jet(rm, w, targets, deltas, variant, work, N):
    ts = [
        [LaurentJet([w[k - 1], delta], 0, None, work) for k, delta in zip(t, ds)]
        for t, ds in zip(targets, deltas)
    ]
    state = universal_bethe(rm, w, ts, variant) * psi_prefactor(ts, w)
    out = SparseState(N, len(w))
    for key, jet in state.items():
        if not isinstance(jet, LaurentJet):
            out.add_term(key, jet)
            continue
        if jet.prec is not None and jet.prec <= 0:
            raise PrecisionError("insufficient precision for the eps^0 coefficient")
        out.add_term(key, jet.limit())
    return out


def _same_pow(rm, xs, ys, e):
    return prod(rm.same(x, y) for x in xs for y in ys) ** e


def psi_closed_first(rm, w, I):
    """prod(...) T_1N(w_{I_N}) ... T_12(w_{I_2}) e_{1^n} (unnormalized monodromy)."""
    N = len(I)
    _check_partition(I, len(w))
    W = [_ws(w, sorted(p)) for p in I]
    c = Fraction(1)
    for j in range(1, N):
        for k in range(j + 1, N):
            c = c * _same_pow(rm, W[k], W[j], j) * _same_pow(rm, W[j], W[k], j - 1)
    for j in range(2, N):
        c = c * _same_pow(rm, W[j], W[j], j - 1)
    mono = Monodromy(rm, N, w)
    word = [(1, j, W[j - 1]) for j in range(N, 1, -1)]
    return mono.apply_word(word, basis_state(runs((1, len(w))), N)) * c


def chain_word_top_down(N, W):
    """T_{N-1,N}(W_N) T_{N-2,N-1}(W_{N-1} + W_N) ... T_12(W_2 + ... + W_N)."""
    word = []
    for j in range(N - 1, 0, -1):
        word.append((j, j + 1, [x for grp in W[j:] for x in grp]))
    return word


def psi_closed_second(rm, w, I):
    """prod 1/(w_{I_{j+1}..I_N} - w_{I_1..I_{j-1}}) times the top-down chain on e_{1^n}."""
    N = len(I)
    _check_partition(I, len(w))
    W = [_ws(w, sorted(p)) for p in I]
    c = Fraction(1)
    for j in range(2, N):
        hi = [x for grp in W[j:] for x in grp]
        lo = [x for grp in W[: j - 1] for x in grp]
        c = c * prod(a - b for a in hi for b in lo)
    mono = Monodromy(rm, N, w)
    return mono.apply_word(chain_word_top_down(N, W), basis_state(runs((1, len(w))), N)) / c


def show_relation_prefactor(rm, w, I):
    """Proportionality factor between the top-down chain and T_1N(w_{I_N}) ... T_12(w_{I_2}) on e_{1^n}."""
    N = len(I)
    W = [_ws(w, sorted(p)) for p in I]
    c = Fraction(1)
    for j in range(2, N):
        hi = [x for grp in W[j:] for x in grp]
        lo = [x for grp in W[: j - 1] for x in grp]
        c = c * prod(a - b for a in hi for b in lo)
    for j in range(1, N):
        for k in range(j + 1, N):
            c = c * _same_pow(rm, W[k], W[j], j) * _same_pow(rm, W[j], W[k], j - 1)
    for j in range(2, N):
        c = c * _same_pow(rm, W[j], W[j], j - 1)
    return c


def show_relation_sides(rm, w, I):
    """(top-down chain on e_{1^n}, prefactor * T_1N(w_{I_N}) ... T_12(w_{I_2}) e_{1^n})."""
    N = len(I)
    _check_partition(I, len(w))
    W = [_ws(w, sorted(p)) for p in I]
    mono = Monodromy(rm, N, w)
    e = basis_state(runs((1, len(w))), N)
    lhs = mono.apply_word(chain_word_top_down(N, W), e)
    rhs = mono.apply_word([(1, j, W[j - 1]) for j in range(N, 1, -1)], e) * show_relation_prefactor(rm, w, I)
    return lhs, rhs


# ---------------------------------------------------------------------------
# Gelfand-Tsetlin vectors (first trigonometric or rational R-matrix)


def set_partitions(n, N, max_part=None):
    """All ordered set partitions (J_1, ..., J_N) of 1..n, parts as sorted tuples."""
    out = []
    for labels in itertools.product(range(N), repeat=n):
        parts = [tuple(k + 1 for k in range(n) if labels[k] == j) for j in range(N)]
        if max_part is None or all(len(p) <= max_part for p in parts):
            out.append(tuple(parts))
    return out


def gt_vector_molev(rm, w, J):
    """T_21(w_J1) T_32(w_J1 + w_J2) ... T_{N,N-1}(w_J1 + ... + w_J{N-1}) e_{N^n}."""
    N = len(J)
    _check_partition(J, len(w))
    W = [_ws(w, sorted(p)) for p in J]
    word = [(j + 1, j, [x for grp in W[:j] for x in grp]) for j in range(1, N)]
    return Monodromy(rm, N, w).apply_word(word, basis_state(runs((N, len(w))), N))


def gt_vector_new(rm, w, J):
    """T_N1(w_J1) T_N2(w_J2) ... T_{N,N-1}(w_J{N-1}) e_{N^n}."""
    N = len(J)
    _check_partition(J, len(w))
    W = [_ws(w, sorted(p)) for p in J]
    word = [(N, j, W[j - 1]) for j in range(1, N)]
    return Monodromy(rm, N, w).apply_word(word, basis_state(runs((N, len(w))), N))


def gt_relation_prefactor(rm, w, J):
    N = len(J)
    W = [_ws(w, sorted(p)) for p in J]
    c = Fraction(1)
    for j in range(2, N):
        lo = [x for grp in W[: j - 1] for x in grp]
        hi = [x for grp in W[j:] for x in grp]
        c = c * prod(a - b for a in lo for b in hi)
    for j in range(1, N):
        for k in range(j + 1, N):
            c = c * _same_pow(rm, W[j - 1], W[k - 1], N - k) * _same_pow(rm, W[k - 1], W[j - 1], N - k - 1)
    for j in range(1, N - 1):
        c = c * _same_pow(rm, W[j - 1], W[j - 1], N - j - 1)
    return c


# ---------------------------------------------------------------------------
# quantum minors and Gelfand-Tsetlin eigenvalues (first trigonometric R-matrix)


def inversions(perm):
    return sum(1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b])


def quantum_minor(mono, rows, cols, u, state):
    """T^{rows}_{cols}(u) state = sum_sigma (-q)^{-l(sigma)} T_{a_r b_sigma(r)}(q^{2r-2} u) ... T_{a_1 b_sigma(1)}(u) state."""
    rows, cols = list(rows), list(cols)
    if len(rows) != len(cols):
        raise ValueError("minor must be square")
    if any(cols[k] >= cols[k + 1] for k in range(len(cols) - 1)):
        raise ValueError("column indices must be strictly increasing")
    q = mono.rm.q
    r = len(rows)
    total = SparseState(state.N, state.n)
    for perm in itertools.permutations(range(r)):
        word = [(rows[s], cols[perm[s]], [q ** (2 * s) * u]) for s in reversed(range(r))]
        s = mono.apply_word(word, state)
        total = total + s * (-q) ** (-inversions(perm))
    return total


def qdet(mono, j, u, state):
    idx = list(range(1, j + 1))
    return quantum_minor(mono, idx, idx, u, state)


def gt_lambda(rm, w, J, j, k, u):
    """Eigenvalue building block lambda^J_{jk}(u)."""
    if k != j:
        return prod(u - x for x in w)
    hi = [w[m - 1] for part in J[j:] for m in part]
    lo = [w[m - 1] for part in J[:j] for m in part]
    return prod(u - x for x in hi) * prod(rm.same(u, x) for x in lo)


def qdet_eigenvalue(rm, w, J, j, u):
    q = rm.q
    return prod(gt_lambda(rm, w, J, j, k, q ** (2 * k - 2) * u) for k in range(1, j + 1))


# ---------------------------------------------------------------------------
# singular vectors


def singular_conditions(mono, eta, k, weights, u):
    """List of (name, holds) for: T_ij(u) eta = 0 (i<j<=k) and T_ii(u) eta = weights[i-1](u) eta."""
    out = []
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            out.append((f"T{i}{j}", mono.apply(i, j, u, eta).is_zero()))
    for i in range(1, k + 1):
        out.append((f"T{i}{i}", mono.apply(i, i, u, eta) == eta * weights[i - 1](u)))
    return out


def singular_step(mono, eta, k, weights, alpha):
    """Apply T_{k+1,k}(alpha) and the predicted weight update; returns (new vector, new weights, precondition ok)."""
    rm = mono.rm
    pre = mono.apply(k, k, alpha, eta).is_zero()
    new = mono.apply(k + 1, k, alpha, eta)
    mk = weights[k - 1]
    neww = list(weights[: k - 1]) + [lambda u, mk=mk: rm.same(u, alpha) / (u - alpha) * mk(u)]
    return new, neww, pre


def base_weights(rm, w, N):
    """Weights of e_{N^n}: (u - w, ..., u - w, q u - q^-1 w)."""
    ws = [lambda u: prod(u - x for x in w) for _ in range(N - 1)]
    ws.append(lambda u: prod(rm.same(u, x) for x in w))
    return ws


def singular_ladder(mono, w, J):
    """Walk from e_{N^n} to the first Gelfand-Tsetlin vector one operator at a time.

    Yields (level k, vector, weights, precondition ok) after every step; the
    vector at the end of level k is singular for the rank-k subalgebra.
    """
    rm = mono.rm
    N = mono.N
    eta = basis_state(runs((N, len(w))), N)
    weights = base_weights(rm, w, N)
    for k in range(N - 1, 0, -1):
        weights = weights[:k + 1]
        alphas = [w[m - 1] for part in J[:k] for m in sorted(part)]
        ws = weights[:k]
        for alpha in reversed(alphas):
            eta, ws, ok = singular_step(mono, eta, k, ws, alpha)
            yield k, eta, ws, ok
        weights = ws


def gt_rank(vectors):
    keys = sorted({k for v in vectors for k in v.keys()})
    return rank([[v[k] for k in keys] for v in vectors])
