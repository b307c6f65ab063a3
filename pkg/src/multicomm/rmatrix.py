"""The three R-matrices and their basic identities.

Convention: R e_i (x) e_j = sum_{k,l} R_{ij}^{kl}(u, v) e_k (x) e_l.  All three
matrices are color conserving: the only nonzero entries are

* R_{ii}^{ii}                      ("same")
* R_{ij}^{ij}, i != j               ("pass")
* R_{ij}^{ji}, i != j               ("exchange")
"""
from __future__ import annotations

from enum import Enum
from fractions import Fraction

from .scalars import SamplePlan, as_q, verify_equal_at_samples
from .states import SparseState, all_keys


class Flavor(str, Enum):
    TRIG_A = "trigA"
    TRIG_B = "trigB"
    RATIONAL = "rational"

    @classmethod
    def parse(cls, s):
        if isinstance(s, Flavor):
            return s
        for f in cls:
            if f.value.lower() == str(s).lower():
                return f
        raise ValueError(f"unknown flavor {s!r}")

    @property
    def coupling_name(self):
        return "h" if self is Flavor.RATIONAL else "q"


class RMatrix:
    """One R-matrix flavor together with its coupling (q, or h for rational)."""

    __slots__ = ("_dq", "_qi", "coupling", "flavor")

    def __init__(self, flavor, coupling):
        self.flavor = Flavor.parse(flavor)
        c = as_q(coupling)
        if self.flavor is Flavor.RATIONAL:
            if c == 0:
                raise ValueError("h must be nonzero")
        elif c == 0 or abs(c) == 1:
            raise ValueError("q must satisfy q != 0 and q != +-1")
        self.coupling = c
        if self.is_trig:
            self._qi = 1 / c
            self._dq = c - self._qi

    @property
    def is_trig(self):
        return self.flavor is not Flavor.RATIONAL

    @property
    def q(self):
        if not self.is_trig:
            raise AttributeError("rational flavor has no q")
        return self.coupling

    @property
    def h(self):
        if self.is_trig:
            raise AttributeError("trigonometric flavors have no h")
        return self.coupling

    # scalar building blocks ------------------------------------------------

    def same(self, u, v):
        """Diagonal weight: q u - q^-1 v, or u - v + h."""
        if self.is_trig:
            return self.coupling * u - self._qi * v
        return u - v + self.coupling

    def plain(self, u, v):
        return u - v

    def cross(self, x):
        """(q - q^-1) x, or h."""
        if self.is_trig:
            return self._dq * x
        return self.coupling

    def sym(self, a, b):
        """(q^-1 a - q b)/(a - b), or (a - b - h)/(a - b)."""
        if self.is_trig:
            return (self._qi * a - self.coupling * b) / (a - b)
        return (a - b - self.coupling) / (a - b)

    def f(self, a, b):
        """(q a - q^-1 b)/(a - b), or (a - b + h)/(a - b)."""
        return self.same(a, b) / (a - b)

    def exchange(self, i, j, u, v):
        """R_{ij}^{ji}(u, v) for i != j."""
        if self.flavor is Flavor.RATIONAL:
            return self.coupling
        if (i < j) == (self.flavor is Flavor.TRIG_A):
            return self._dq * u
        return self._dq * v

    def element(self, u, v, i, j, k, l):
        if i == j:
            return self.same(u, v) if (k, l) == (i, j) else 0
        if (k, l) == (i, j):
            return u - v
        if (k, l) == (j, i):
            return self.exchange(i, j, u, v)
        return 0

    def unitarity_scalar(self, u, v):
        """R_12(u,v) R_21(v,u) = this scalar times the identity."""
        return self.same(u, v) * self.same(v, u)

    def __repr__(self):
        return f"RMatrix({self.flavor.value}, {self.flavor.coupling_name}={self.coupling})"


def r_element(flavor, N, coupling, u, v, i, j, k, l):
    for x in (i, j, k, l):
        if not 1 <= x <= N:
            raise ValueError(f"color {x} out of range 1..{N}")
    return RMatrix(flavor, coupling).element(u, v, i, j, k, l)


def apply_r(rm, u, v, a, b, state: SparseState) -> SparseState:
    """Apply R(u, v) acting on tensor factors a (first) and b (second), 0-based."""
    out = SparseState(state.N, state.n)
    for key, c in state.items():
        i, j = key[a], key[b]
        if i == j:
            out.add_term(key, c * rm.same(u, v))
            continue
        out.add_term(key, c * (u - v))
        new = list(key)
        new[a], new[b] = j, i
        out.add_term(tuple(new), c * rm.exchange(i, j, u, v))
    return out


def _default_factory(flavor, coupling):
    return RMatrix(flavor, coupling)


def check_yang_baxter(flavor, N, plan: SamplePlan, factory=_default_factory):
    """R12(u,v) R13(u,w) R23(v,w) = R23(v,w) R13(u,w) R12(u,v) on every basis vector of (C^N)^3."""
    flavor = Flavor.parse(flavor)
    cname = flavor.coupling_name
    keys = list(all_keys(N, 3))

    def side(order):
        def ev(a):
            rm = factory(flavor, a[cname])
            u, v, w = a["u"], a["v"], a["w"]
            ops = {"12": (u, v, 0, 1), "13": (u, w, 0, 2), "23": (v, w, 1, 2)}
            cols = []
            for key in keys:
                s = SparseState(N, 3, {key: Fraction(1)})
                for name in reversed(order):
                    x, y, p, r = ops[name]
                    s = apply_r(rm, x, y, p, r, s)
                cols.append(s.data)
            return cols

        return ev

    return verify_equal_at_samples(
        side(["12", "13", "23"]), side(["23", "13", "12"]), plan, [cname, "u", "v", "w"],
        identity="yang-baxter", anchor="r-matrix/yang-baxter", flavor=flavor.value, instance={"N": N},
    )


def check_unitarity(flavor, N, plan: SamplePlan, factory=_default_factory):
    """R12(u,v) R21(v,u) = scalar(u,v) * Id on (C^N)^2."""
    flavor = Flavor.parse(flavor)
    cname = flavor.coupling_name
    keys = list(all_keys(N, 2))

    def lhs(a):
        rm = factory(flavor, a[cname])
        u, v = a["u"], a["v"]
        cols = []
        for key in keys:
            s = SparseState(N, 2, {key: Fraction(1)})
            s = apply_r(rm, v, u, 1, 0, s)
            s = apply_r(rm, u, v, 0, 1, s)
            cols.append(s.data)
        return cols

    def rhs(a):
        sc = RMatrix(flavor, a[cname]).unitarity_scalar(a["u"], a["v"])
        return [{key: sc} for key in keys]

    return verify_equal_at_samples(
        lhs, rhs, plan, [cname, "u", "v"], identity="unitarity", anchor="r-matrix/unitarity",
        flavor=flavor.value, instance={"N": N},
    )


def check_equal_argument(flavor, N, plan: SamplePlan):
    """R(u, u) = (q - q^-1) u P  (rational: h P), P the flip."""
    flavor = Flavor.parse(flavor)
    cname = flavor.coupling_name
    keys = list(all_keys(N, 2))

    def lhs(a):
        rm = RMatrix(flavor, a[cname])
        return [apply_r(rm, a["u"], a["u"], 0, 1, SparseState(N, 2, {k: Fraction(1)})).data for k in keys]

    def rhs(a):
        c = RMatrix(flavor, a[cname]).cross(a["u"])
        return [{(k[1], k[0]): c} for k in keys]

    return verify_equal_at_samples(
        lhs, rhs, plan, [cname, "u"], identity="equal-argument-permutation", anchor="r-matrix/permutation",
        flavor=flavor.value, instance={"N": N},
    )


def check_flavor_duality(N, plan: SamplePlan):
    """The second trigonometric matrix is the first with all colors reversed: c -> N+1-c."""
    rev = lambda c: N + 1 - c
    quads = [(i, j, k, l) for i, j in all_keys(N, 2) for k, l in all_keys(N, 2)]

    def a_side(a):
        rm = RMatrix(Flavor.TRIG_A, a["q"])
        return [rm.element(a["u"], a["v"], rev(i), rev(j), rev(k), rev(l)) for i, j, k, l in quads]

    def b_side(a):
        rm = RMatrix(Flavor.TRIG_B, a["q"])
        return [rm.element(a["u"], a["v"], i, j, k, l) for i, j, k, l in quads]

    return verify_equal_at_samples(
        b_side, a_side, plan, ["q", "u", "v"], identity="color-reversal-duality", anchor="r-matrix/duality",
        flavor="trigB", instance={"N": N},
    )
