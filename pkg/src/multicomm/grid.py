"""Partition functions on grids built from monodromy matrix elements.

All of these are single coefficients <e*_target, word e_start> of an operator
word acting on the vector representation.
"""
from __future__ import annotations

from fractions import Fraction

from .monodromy import Monodromy
from .states import SparseState, basis_state, runs


def _flat(groups):
    return [x for g in groups for x in g]


def coefficient(rm, N, xi, word, start, target):
    mono = Monodromy(rm, N, xi)
    return mono.apply_word(word, basis_state(start, N))[tuple(target)]


def domain_wall(rm, u, v):
    """<e*_{1^n}, T_21(u_1) ... T_21(u_n) e_{2^n}> on sites with parameters v."""
    u, v = list(u), list(v)
    if len(u) != len(v):
        raise ValueError("domain wall needs |u| = |v|")
    n = len(u)
    return coefficient(rm, 2, v, [(2, 1, u)], runs((2, n)), runs((1, n)))


def domain_wall_colored(rm, N, j, u, v):
    """<e*_{j^m}, T_Nj(u) e_{N^m}> on sites with parameters v."""
    u, v = list(u), list(v)
    if len(u) != len(v):
        raise ValueError("domain wall needs |u| = |v|")
    if not 1 <= j <= N:
        raise ValueError("color out of range")
    m = len(u)
    return coefficient(rm, N, v, [(N, j, u)], runs((N, m)), runs((j, m)))


def _grid_word(N, us):
    return [(N, j, list(us[j - 1])) for j in range(1, len(us) + 1)]


def grid_h(rm, N, us, vs):
    """<e*_{1^m1 ... (N-1)^m(N-1)}, T_N1(u^1) ... T_N,N-1(u^(N-1)) e_{N^M}>, sites v^1, ..., v^(N-1)."""
    if len(us) != N - 1 or len(vs) != N - 1:
        raise ValueError("grid_h needs N-1 groups of each kind")
    m = [len(g) for g in us]
    if m != [len(g) for g in vs]:
        raise ValueError("group sizes of u and v differ")
    M = sum(m)
    target = runs(*((j, m[j - 1]) for j in range(1, N)))
    return coefficient(rm, N, _flat(vs), _grid_word(N, us), runs((N, M)), target)


def grid_k(rm, N, us, vs):
    """As grid_h with an extra group of sites v^N left in color N."""
    if len(us) != N - 1 or len(vs) != N:
        raise ValueError("grid_k needs N-1 groups of u and N groups of v")
    m = [len(g) for g in vs]
    if [len(g) for g in us] != m[:-1]:
        raise ValueError("group sizes of u and v differ")
    target = runs(*((j, m[j - 1]) for j in range(1, N + 1)))
    return coefficient(rm, N, _flat(vs), _grid_word(N, us), runs((N, sum(m))), target)


def grid_k_colored(rm, N, wj, w, colors):
    """<e*_I, T_N1(w_J1) ... T_N,N-1(w_J(N-1)) e_{N^n}> on sites w."""
    if len(wj) != N - 1:
        raise ValueError("need N-1 groups")
    return coefficient(rm, N, list(w), _grid_word(N, wj), runs((N, len(w))), tuple(colors))


def grid_f(rm, N, us, vs):
    """grid_h with the extra factor T_NN(u^N) on the right."""
    if len(us) != N or len(vs) != N - 1:
        raise ValueError("grid_f needs N groups of u and N-1 groups of v")
    m = [len(g) for g in vs]
    target = runs(*((j, m[j - 1]) for j in range(1, N)))
    return coefficient(rm, N, _flat(vs), _grid_word(N, us), runs((N, sum(m))), target)


def psi_layered(rm, layers, v, colors, reverse=False):
    """Layered partition function psi(u^1, ..., u^{N-1} | v | I).

    Layer p uses the parameters of layer p+1 (or v for the top layer) as
    quantum sites.  Its auxiliary lines carry u^p and enter with the colors
    produced by the layer below; every site starts in color p+1.
    """
    N = len(layers) + 1
    layers = [list(g) for g in layers]
    sites = layers[1:] + [list(v)]
    colors = tuple(colors)
    if len(colors) != len(v):
        raise ValueError("color tuple and bottom parameters differ in length")
    # state of layer-1 inputs: the single color tuple 1^{k1}
    prev = SparseState(N, len(layers[0]), {runs((1, len(layers[0]))): Fraction(1)})
    for p in range(1, N):
        mono = Monodromy(rm, N, sites[p - 1])
        start = basis_state(runs((p + 1, len(sites[p - 1]))), N)
        nxt = SparseState(N, len(sites[p - 1]))
        us = layers[p - 1]
        for key, c in prev.items():
            word = [(p + 1, key[a], [us[a]]) for a in range(len(us))]
            if reverse:
                word = word[::-1]
            nxt = nxt + mono.apply_word(word, start) * c
        prev = nxt
    return prev[colors]
