"""Exact scalars: rationals, truncated power series, Laurent jets and seeded sampling.

Everything in the package is computed over ``fractions.Fraction``.  Two series
types sit on top of it:

* ``TruncatedSeries``: a polynomial in eps modulo eps**(order+1).  Used for the
  exponential substitution in the trigonometric-to-rational degeneration.
* ``LaurentJet``: a Laurent series in eps known up to an absolute precision.
  Used to take exact limits of rational functions at points where individual
  terms have poles that cancel in the sum.
"""
from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

Q = Fraction


class DegenerateParameters(ZeroDivisionError):
    """Raised when a formula is evaluated at coincident or otherwise singular parameters."""


class PrecisionError(ArithmeticError):
    """A Laurent jet ran out of precision before the requested coefficient."""


class SamplingExhausted(RuntimeError):
    """Every candidate sample point hit a singularity."""


def as_q(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


def fmt_q(x) -> str:
    """Serialize a rational as ``num/den``."""
    x = as_q(x)
    return f"{x.numerator}/{x.denominator}"


def has_duplicates(xs):
    """Pairwise equality test that also works for unhashable scalars."""
    xs = list(xs)
    return any(xs[a] == xs[b] for a in range(len(xs)) for b in range(a + 1, len(xs)))


def prod(xs, start=Fraction(1)):
    r = start
    for x in xs:
        r = r * x
    return r


# ---------------------------------------------------------------------------
# truncated power series


class TruncatedSeries:
    """Polynomial in eps modulo eps**(order+1) with rational coefficients."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order):
        if order < 0:
            raise ValueError("order must be non-negative")
        cs = [as_q(c) for c in list(coeffs)[: order + 1]]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        self.coeffs = cs
        self.order = order

    @classmethod
    def constant(cls, c, order):
        return cls([c], order)

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            if other.order != self.order:
                raise ValueError("mixed truncation orders")
            return other
        return TruncatedSeries([other], self.order)

    def __add__(self, other):
        o = self._coerce(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, o.coeffs)], self.order)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-a for a in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            c = as_q(other)
            return TruncatedSeries([a * c for a in self.coeffs], self.order)
        o = self._coerce(other)
        out = [Fraction(0)] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(self.order + 1 - i):
                    out[i + j] += a * o.coeffs[j]
        return TruncatedSeries(out, self.order)

    __rmul__ = __mul__

    def __getitem__(self, k):
        return self.coeffs[k]

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.order == other.order and self.coeffs == other.coeffs
        return self == self._coerce(other)

    __hash__ = None

    def __repr__(self):
        return f"TruncatedSeries({[str(c) for c in self.coeffs]}, order={self.order})"


def truncated_exp(c, order) -> TruncatedSeries:
    """exp(c*eps) truncated after eps**order."""
    c = as_q(c)
    return TruncatedSeries([c**k / factorial(k) for k in range(order + 1)], order)


# ---------------------------------------------------------------------------
# Laurent jets

DEFAULT_JET_PRECISION = 8


class LaurentJet:
    """sum(coeffs[k] * eps**(val+k)) + O(eps**prec).

    ``prec is None`` means the value is exact (a Laurent polynomial).  When an
    exact value with several terms is inverted, the result is a genuine series
    and is cut off ``work`` orders beyond its leading term.
    """

    __slots__ = ("coeffs", "prec", "val", "work")

    def __init__(self, coeffs, val=0, prec=None, work=DEFAULT_JET_PRECISION):
        self.val = val
        self.coeffs = [as_q(c) for c in coeffs]
        self.prec = prec
        self.work = work
        self._normalize()

    def _normalize(self):
        cs = self.coeffs
        if self.prec is not None:
            keep = max(self.prec - self.val, 0)
            del cs[keep:]
        k = 0
        while k < len(cs) and cs[k] == 0:
            k += 1
        if k:
            del cs[:k]
            self.val += k
        while cs and cs[-1] == 0:
            cs.pop()
        if not cs:
            self.val = self.prec if self.prec is not None else 0

    @classmethod
    def eps(cls, work=DEFAULT_JET_PRECISION):
        return cls([1], 1, None, work)

    def _lift(self, other):
        if isinstance(other, LaurentJet):
            return other
        return LaurentJet([other], 0, None, self.work)

    def is_exact_zero(self):
        return not self.coeffs and self.prec is None

    def __bool__(self):
        return not self.is_exact_zero()

    def _top(self):
        return self.val + len(self.coeffs)

    def __add__(self, other):
        o = self._lift(other)
        prec = _pmin(self.prec, o.prec)
        if not self.coeffs:
            base = o
        elif not o.coeffs:
            base = self
        else:
            base = None
        if base is not None:
            return LaurentJet(list(base.coeffs), base.val, prec, max(self.work, o.work))
        lo = min(self.val, o.val)
        hi = max(self._top(), o._top())
        out = [Fraction(0)] * (hi - lo)
        for k, c in enumerate(self.coeffs):
            out[self.val - lo + k] += c
        for k, c in enumerate(o.coeffs):
            out[o.val - lo + k] += c
        return LaurentJet(out, lo, prec, max(self.work, o.work))

    __radd__ = __add__

    def __neg__(self):
        return LaurentJet([-c for c in self.coeffs], self.val, self.prec, self.work)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, LaurentJet):
            c = as_q(other)
            if c == 0:
                return LaurentJet([], 0, None, self.work)
            return LaurentJet([a * c for a in self.coeffs], self.val, self.prec, self.work)
        o = other
        work = max(self.work, o.work)
        if self.is_exact_zero() or o.is_exact_zero():
            return LaurentJet([], 0, None, work)
        # absolute precision of the product
        cands = []
        if self.prec is not None:
            cands.append(self.prec + (o.val if o.coeffs else o.prec))
        if o.prec is not None:
            cands.append(o.prec + (self.val if self.coeffs else self.prec))
        prec = min(cands) if cands else None
        if not self.coeffs or not o.coeffs:
            return LaurentJet([], 0, prec, work)
        val = self.val + o.val
        length = len(self.coeffs) + len(o.coeffs) - 1
        if prec is not None:
            length = min(length, prec - val)
        out = [Fraction(0)] * max(length, 0)
        for i, a in enumerate(self.coeffs):
            if i >= length:
                break
            for j, b in enumerate(o.coeffs):
                if i + j >= length:
                    break
                out[i + j] += a * b
        return LaurentJet(out, val, prec, work)

    __rmul__ = __mul__

    def inverse(self):
        if not self.coeffs:
            raise PrecisionError("cannot invert a jet with no known nonzero coefficient")
        rel = self.work if self.prec is None else self.prec - self.val
        if self.prec is None and len(self.coeffs) == 1:
            return LaurentJet([1 / self.coeffs[0]], -self.val, None, self.work)
        a = self.coeffs + [Fraction(0)] * max(rel - len(self.coeffs), 0)
        inv0 = 1 / a[0]
        out = [inv0]
        for k in range(1, rel):
            s = sum(a[m] * out[k - m] for m in range(1, k + 1))
            out.append(-s * inv0)
        return LaurentJet(out, -self.val, -self.val + rel, self.work)

    def __truediv__(self, other):
        if not isinstance(other, LaurentJet):
            c = as_q(other)
            if c == 0:
                raise DegenerateParameters("division by zero")
            return self * (1 / c)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        r = LaurentJet([1], 0, None, self.work)
        for _ in range(k):
            r = r * self
        return r

    def coefficient(self, k):
        """Coefficient of eps**k; raises PrecisionError when it is not known."""
        if self.prec is not None and k >= self.prec:
            raise PrecisionError(f"coefficient of eps^{k} unknown (precision {self.prec})")
        idx = k - self.val
        if 0 <= idx < len(self.coeffs):
            return self.coeffs[idx]
        return Fraction(0)

    def limit(self):
        """Value at eps=0, requiring every negative power to vanish."""
        if self.coeffs and self.val < 0:
            raise ArithmeticError(f"jet has a pole of order {-self.val}")
        return self.coefficient(0)

    def __eq__(self, other):
        if isinstance(other, LaurentJet):
            return (self.val, self.coeffs, self.prec) == (other.val, other.coeffs, other.prec)
        if isinstance(other, (int, Fraction)):
            return self == self._lift(other)
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        terms = " + ".join(f"({c})e^{self.val + k}" for k, c in enumerate(self.coeffs)) or "0"
        tail = "" if self.prec is None else f" + O(e^{self.prec})"
        return f"<{terms}{tail}>"


def _pmin(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


# ---------------------------------------------------------------------------
# seeded sampling


@dataclass(frozen=True)
class SamplePlan:
    """How many sample points to use and where to draw them from.

    Spectral parameters are nonzero integers in [-bound, bound], pairwise
    distinct.  The slot ``q`` is a ratio of two such integers with |q| != 1 and
    the slot ``h`` is a nonzero integer.
    """

    seed: int = 0
    count: int = 5
    bound: int = 10**6
    max_attempts: int = 64

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("sample count must be positive")
        if self.bound < 2:
            raise ValueError("sampling bound too small")


COUPLING_SLOTS = ("q", "h")


def _rng(plan, slots, index, attempt):
    tag = f"{plan.seed}|{index}|{attempt}|{','.join(slots)}".encode()
    return random.Random(int.from_bytes(hashlib.sha256(tag).digest()[:16], "big"))


def sample_assignment(plan: SamplePlan, slots, index=0, attempt=0) -> dict:
    """Deterministic assignment of rationals to the named slots."""
    slots = list(slots)
    if len(set(slots)) != len(slots):
        raise ValueError("duplicate slot names")
    rng = _rng(plan, slots, index, attempt)
    b = plan.bound

    def nonzero():
        while True:
            x = rng.randint(-b, b)
            if x:
                return x

    out = {}
    used = set()
    for s in slots:
        if s == "q":
            while True:
                x = Fraction(nonzero(), nonzero())
                if abs(x) != 1:
                    break
            out[s] = x
        elif s == "h":
            out[s] = Fraction(nonzero())
        else:
            while True:
                x = nonzero()
                if x not in used:
                    break
            used.add(x)
            out[s] = Fraction(x)
    return out


def verify_equal_at_samples(lhs, rhs, plan: SamplePlan, slots, identity="", anchor="", flavor=None, instance=None):
    """Evaluate ``lhs(a)`` and ``rhs(a)`` at ``plan.count`` sample points and compare exactly.

    Sample points on which either side raises ``ZeroDivisionError`` are redrawn.
    """
    from .report import SampleRecord, VerificationReport

    rep = VerificationReport(identity=identity, anchor=anchor, flavor=flavor, instance=dict(instance or {}), seed=plan.seed)
    slots = list(slots)
    for index in range(plan.count):
        for attempt in range(plan.max_attempts):
            a = sample_assignment(plan, slots, index, attempt)
            try:
                left = lhs(a)
                right = rhs(a)
            except ZeroDivisionError:
                continue
            ok = left == right
            rep.samples.append(SampleRecord(index=index, attempt=attempt, equal=ok))
            if not ok and rep.counterexample is None:
                rep.counterexample = {k: fmt_q(v) for k, v in a.items()}
            break
        else:
            raise SamplingExhausted(f"{identity}: no regular sample point after {plan.max_attempts} attempts")
    rep.finish()
    return rep
