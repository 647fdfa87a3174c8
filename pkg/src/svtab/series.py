"""Exact truncated power series over sparse integer polynomials.

Coefficients are polynomials in x, y and alpha with arbitrary-precision
integer coefficients; z is the series variable.  Everything is exact:
there is no fraction field, and division of series is only allowed when
every step of the coefficient recursion divides exactly.  A failed
division raises NonExactDivision, which in this package always means a
generating-function expression was transcribed wrongly.

The module also solves the functional equation for the height-0 weight
series M(z) by plain fixed-point iteration and provides the Lagrange
reversion self-check.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional


class NonExactDivision(ArithmeticError):
    """A series or polynomial division failed to be exact."""


_VAR_NAMES = ("x", "y", "alpha")


class MultiPoly:
    """Sparse polynomial in x, y, alpha over the integers.

    Immutable; the term map goes from exponent triples (a, b, c) to
    nonzero integer coefficients.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[dict[tuple[int, int, int], int]] = None):
        clean = {}
        if terms:
            for exps, coeff in terms.items():
                if coeff:
                    clean[exps] = coeff
        self._terms = clean
        self._hash = None

    @staticmethod
    def zero() -> "MultiPoly":
        return MultiPoly()

    @staticmethod
    def const(k: int) -> "MultiPoly":
        return MultiPoly({(0, 0, 0): k})

    @staticmethod
    def var(name: str) -> "MultiPoly":
        i = _VAR_NAMES.index(name)
        exps = tuple(1 if j == i else 0 for j in range(3))
        return MultiPoly({exps: 1})

    @property
    def terms(self) -> dict[tuple[int, int, int], int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {(0, 0, 0): 1}

    def constant_value(self) -> Optional[int]:
        if not self._terms:
            return 0
        if len(self._terms) == 1 and (0, 0, 0) in self._terms:
            return self._terms[(0, 0, 0)]
        return None

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self) -> "MultiPoly":
        return MultiPoly({e: -k for e, k in self._terms.items()})

    def __add__(self, other) -> "MultiPoly":
        if isinstance(other, int):
            other = MultiPoly.const(other)
        out = dict(self._terms)
        for e, k in other._terms.items():
            out[e] = out.get(e, 0) + k
        return MultiPoly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "MultiPoly":
        if isinstance(other, int):
            other = MultiPoly.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return MultiPoly.const(other) - self

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, int):
            if other == 0:
                return MultiPoly()
            return MultiPoly({e: k * other for e, k in self._terms.items()})
        out: dict[tuple[int, int, int], int] = {}
        for (a1, b1, c1), k1 in self._terms.items():
            for (a2, b2, c2), k2 in other._terms.items():
                e = (a1 + a2, b1 + b2, c1 + c2)
                out[e] = out.get(e, 0) + k1 * k2
        return MultiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divexact(self, other: "MultiPoly") -> "MultiPoly":
        """Exact polynomial quotient, or NonExactDivision.

        Single-divisor division with respect to the lexicographic term
        order; since one polynomial is always a Groebner basis of its own
        ideal, the remainder vanishes exactly when the division is exact.
        """
        if other.is_zero():
            raise NonExactDivision("division by the zero polynomial")
        if self.is_zero():
            return MultiPoly()
        lead = max(other._terms)
        lead_coeff = other._terms[lead]
        rem = dict(self._terms)
        quot: dict[tuple[int, int, int], int] = {}
        while rem:
            e = max(rem)
            k = rem[e]
            diff = (e[0] - lead[0], e[1] - lead[1], e[2] - lead[2])
            if min(diff) < 0 or k % lead_coeff != 0:
                raise NonExactDivision(
                    f"{other} does not divide {self} exactly")
            q = k // lead_coeff
            quot[diff] = quot.get(diff, 0) + q
            for e2, k2 in other._terms.items():
                tgt = (diff[0] + e2[0], diff[1] + e2[1], diff[2] + e2[2])
                nv = rem.get(tgt, 0) - q * k2
                if nv:
                    rem[tgt] = nv
                else:
                    rem.pop(tgt, None)
        return MultiPoly(quot)

    def alpha_derivative(self) -> "MultiPoly":
        out = {}
        for (a, b, c), k in self._terms.items():
            if c:
                out[(a, b, c - 1)] = k * c
        return MultiPoly(out)

    def substitute(self, x: Optional[int] = None, y: Optional[int] = None,
                   alpha: Optional[int] = None) -> "MultiPoly":
        """Substitute integer values for some of the variables."""
        out: dict[tuple[int, int, int], int] = {}
        for (a, b, c), k in self._terms.items():
            if x is not None:
                k *= x ** a
                a = 0
            if y is not None:
                k *= y ** b
                b = 0
            if alpha is not None:
                k *= alpha ** c
                c = 0
            e = (a, b, c)
            out[e] = out.get(e, 0) + k
        return MultiPoly(out)

    def specialize(self, x, y, alpha) -> Fraction:
        total = Fraction(0)
        x, y, alpha = Fraction(x), Fraction(y), Fraction(alpha)
        for (a, b, c), k in self._terms.items():
            total += k * x ** a * y ** b * alpha ** c
        return total

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exps in sorted(self._terms, reverse=True):
            k = self._terms[exps]
            vars_part = "*".join(
                name if p == 1 else f"{name}^{p}"
                for name, p in zip(_VAR_NAMES, exps) if p)
            mag = abs(k)
            if not vars_part:
                body = str(mag)
            elif mag == 1:
                body = vars_part
            else:
                body = f"{mag}*{vars_part}"
            parts.append(("-" if k < 0 else "+", body))
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"MultiPoly({self})"


ZERO = MultiPoly.zero()
ONE = MultiPoly.const(1)
X = MultiPoly.var("x")
Y = MultiPoly.var("y")
ALPHA = MultiPoly.var("alpha")


class ZSeries:
    """Power series in z truncated at z^order, with MultiPoly coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[MultiPoly]):
        if order < 0:
            raise ValueError("order must be nonnegative")
        coeffs = tuple(coeffs)
        if len(coeffs) != order + 1:
            raise ValueError(
                f"need {order + 1} coefficients for order {order}, got {len(coeffs)}")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("ZSeries is immutable")

    @staticmethod
    def zero(order: int) -> "ZSeries":
        return ZSeries(order, [ZERO] * (order + 1))

    @staticmethod
    def one(order: int) -> "ZSeries":
        return ZSeries.constant(ONE, order)

    @staticmethod
    def constant(poly: MultiPoly, order: int) -> "ZSeries":
        return ZSeries(order, [poly] + [ZERO] * order)

    @staticmethod
    def z(order: int) -> "ZSeries":
        if order == 0:
            return ZSeries.zero(0)
        return ZSeries(order, [ZERO, ONE] + [ZERO] * (order - 1))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __getitem__(self, n: int) -> MultiPoly:
        return self.coeffs[n]

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __add__(self, other: "ZSeries") -> "ZSeries":
        self._check(other)
        return ZSeries(self.order,
                       [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "ZSeries") -> "ZSeries":
        self._check(other)
        return ZSeries(self.order,
                       [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "ZSeries":
        return ZSeries(self.order, [-a for a in self.coeffs])

    def __mul__(self, other: "ZSeries") -> "ZSeries":
        self._check(other)
        n = self.order
        out = [ZERO] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b.is_zero():
                    continue
                out[i + j] = out[i + j] + a * b
        return ZSeries(n, out)

    def __pow__(self, k: int) -> "ZSeries":
        if k < 0:
            raise ValueError("negative series power")
        result = ZSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, poly: MultiPoly | int) -> "ZSeries":
        if isinstance(poly, int):
            poly = MultiPoly.const(poly)
        return ZSeries(self.order, [poly * a for a in self.coeffs])

    def shift(self, k: int) -> "ZSeries":
        """Multiply by z^k (truncating at the order)."""
        if k < 0:
            raise ValueError("negative shift")
        return ZSeries(self.order,
                       ([ZERO] * k + list(self.coeffs))[:self.order + 1])

    def _check(self, other: "ZSeries") -> None:
        if self.order != other.order:
            raise ValueError(
                f"order mismatch: {self.order} vs {other.order}")

    def valuation(self) -> Optional[int]:
        for i, a in enumerate(self.coeffs):
            if not a.is_zero():
                return i
        return None

    def unit_inverse(self) -> "ZSeries":
        """Inverse of a series with constant term 1."""
        if not self.coeffs[0].is_one():
            raise ValueError("unit_inverse needs constant term 1")
        n = self.order
        out = [ONE] + [ZERO] * n
        for k in range(1, n + 1):
            acc = ZERO
            for j in range(1, k + 1):
                if not self.coeffs[j].is_zero():
                    acc = acc + self.coeffs[j] * out[k - j]
            out[k] = -acc
        return ZSeries(n, out)

    def exact_divide(self, other: "ZSeries") -> "ZSeries":
        """Quotient Q with Q*other = self modulo z^(order+1).

        Raises NonExactDivision when a coefficient step fails to divide
        exactly or when the numerator's valuation is too small.
        """
        self._check(other)
        n = self.order
        v = other.valuation()
        if v is None:
            raise NonExactDivision("division by the zero series")
        for i in range(min(v, n + 1)):
            if not self.coeffs[i].is_zero():
                raise NonExactDivision(
                    f"numerator has a z^{i} term below the denominator valuation {v}")
        lead = other.coeffs[v]
        out = [ZERO] * (n + 1)
        for k in range(n + 1 - v):
            acc = self.coeffs[v + k]
            for j in range(k):
                if not out[j].is_zero():
                    b = other.coeffs[v + k - j]
                    if not b.is_zero():
                        acc = acc - out[j] * b
            out[k] = acc.divexact(lead)
        return ZSeries(n, out)

    def z_derivative(self) -> "ZSeries":
        """Formal d/dz; the result is truncated one order lower."""
        if self.order == 0:
            return ZSeries.zero(0)
        return ZSeries(self.order - 1,
                       [self.coeffs[k] * k for k in range(1, self.order + 1)])

    def alpha_derivative(self) -> "ZSeries":
        return ZSeries(self.order, [a.alpha_derivative() for a in self.coeffs])

    def substitute(self, x: Optional[int] = None, y: Optional[int] = None,
                   alpha: Optional[int] = None) -> "ZSeries":
        return ZSeries(self.order,
                       [a.substitute(x=x, y=y, alpha=alpha) for a in self.coeffs])

    def specialize(self, x, y, alpha) -> tuple[Fraction, ...]:
        return tuple(a.specialize(x, y, alpha) for a in self.coeffs)

    def truncate(self, order: int) -> "ZSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return ZSeries(order, self.coeffs[:order + 1])

    def dump(self) -> str:
        return "\n".join(f"{i}: {poly}" for i, poly in enumerate(self.coeffs))

    def __repr__(self) -> str:
        return f"ZSeries(order={self.order})"


@lru_cache(maxsize=128)
def solve_M(order: int, x_val: Optional[int] = None, y_val: Optional[int] = None,
            alpha_val: Optional[int] = None) -> ZSeries:
    """Solve M = 1 + (x+y) z M + alpha z^2 M^2 by fixed-point iteration.

    Starting from the constant series 1, each iteration fixes one more
    coefficient, so `order` iterations settle the whole truncation.  The
    optional integer substitutions solve the specialized equation
    directly, which keeps the coefficients small.
    """
    xy = (X + Y).substitute(x=x_val, y=y_val)
    al = ALPHA.substitute(alpha=alpha_val)
    one = ZSeries.one(order)
    m = one
    for _ in range(order):
        m = one + m.shift(1).scale(xy) + (m * m).shift(2).scale(al)
    return m


def solve_M0(order: int, x_val: Optional[int] = None, y_val: Optional[int] = None,
             alpha_val: Optional[int] = None) -> ZSeries:
    """M0 = 1/(1 - y z - alpha z^2 M): no umber horizontal on the x-axis."""
    m = solve_M(order, x_val, y_val, alpha_val)
    y = Y.substitute(y=y_val)
    al = ALPHA.substitute(alpha=alpha_val)
    one = ZSeries.one(order)
    denom = one - ZSeries.z(order).scale(y) - m.shift(2).scale(al)
    return denom.unit_inverse()


class ReversionCheck:
    """Outcome of the Lagrange-inversion self-check; truthy iff it passed."""

    __slots__ = ("ok", "first_mismatch", "part")

    def __init__(self, ok: bool, first_mismatch: Optional[int] = None,
                 part: Optional[str] = None):
        self.ok = ok
        self.first_mismatch = first_mismatch
        self.part = part

    def __bool__(self) -> bool:
        return self.ok

    def __repr__(self) -> str:
        if self.ok:
            return "ReversionCheck(ok)"
        return f"ReversionCheck(failed at z^{self.first_mismatch} in {self.part})"


def check_reversion(order: int, m: Optional[ZSeries] = None) -> ReversionCheck:
    """Verify that z M(z) is the compositional inverse of z/(1+(x+y)z+alpha z^2).

    Substituting F = z M into that rational function must give back z, and
    the derivative of the function must satisfy
    f'(z) * (1+(x+y)z+alpha z^2)^2 = 1 - alpha z^2 (checked by
    cross-multiplication, one order lower because of the derivative).
    Passing a corrupted series for m is the intended negative control.
    """
    if m is None:
        m = solve_M(order)
    one = ZSeries.one(order)
    f_series = m.shift(1)  # F = z M
    denom_at_f = one + f_series.scale(X + Y) + (f_series * f_series).scale(ALPHA)
    composed = f_series.exact_divide(denom_at_f)
    target = ZSeries.z(order)
    for i in range(order + 1):
        if composed[i] != target[i]:
            return ReversionCheck(False, i, "inverse")
    denom = one + ZSeries.z(order).scale(X + Y) + ZSeries.z(order).shift(1).scale(ALPHA)
    q = ZSeries.z(order).exact_divide(denom)
    if order >= 1:
        qprime = q.z_derivative()
        low = order - 1
        denom_low = denom.truncate(low)
        lhs = qprime * denom_low * denom_low
        rhs = ZSeries.one(low) - ZSeries.z(low).shift(1).scale(ALPHA)
        for i in range(low + 1):
            if lhs[i] != rhs[i]:
                return ReversionCheck(False, i, "derivative")
    return ReversionCheck(True)
