"""Truncated formal power series with exact coefficients.

A :class:`PowerSeries` stores coefficients on a grid of ``1/den`` (``den`` is 1
or 2), so ``coeffs[i]`` is the coefficient of ``q**(i/den)``.  Coefficients
past ``order`` are unknown rather than zero; every operation returns the
tightest order it can vouch for.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Iterable, Sequence

from .exactring import DyadicSqrt2

__all__ = [
    "PowerSeries",
    "ps_mul",
    "ps_div_unit",
    "bkp_product_series",
    "macmahon_series",
    "ratio_expansion",
    "strict_partition_series",
]


class PowerSeries:
    __slots__ = ("den", "coeffs")

    def __init__(self, coeffs: Iterable, den: int = 1):
        if den not in (1, 2):
            raise ValueError("exponent grid must be 1 or 1/2")
        self.den = den
        self.coeffs = list(coeffs)
        if not self.coeffs:
            raise ValueError("a truncated series needs at least the constant term")

    @classmethod
    def zero(cls, order: int, den: int = 1, zero=0) -> "PowerSeries":
        return cls([zero] * (order + 1), den)

    @classmethod
    def monomial(cls, index: int, order: int, coeff=1, den: int = 1, zero=0) -> "PowerSeries":
        out = [zero] * (order + 1)
        if index <= order:
            out[index] = coeff
        return cls(out, den)

    @classmethod
    def polynomial(cls, coeffs: Sequence, order: int, den: int = 1) -> "PowerSeries":
        c = list(coeffs[: order + 1])
        return cls(c + [0] * (order + 1 - len(c)), den)

    @property
    def order(self) -> int:
        """Largest known grid index."""
        return len(self.coeffs) - 1

    @property
    def unit(self) -> str:
        return "1" if self.den == 1 else "1/2"

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series known to order {self.order}")
        return PowerSeries(self.coeffs[: order + 1], self.den)

    def _check(self, other: "PowerSeries"):
        if self.den != other.den:
            raise ValueError("series live on different exponent grids")

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        self._check(other)
        n = min(self.order, other.order)
        return PowerSeries([a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)], self.den)

    def __neg__(self):
        return PowerSeries([-c for c in self.coeffs], self.den)

    def __sub__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            return ps_mul(self, other)
        return PowerSeries([c * other for c in self.coeffs], self.den)

    def __rmul__(self, scalar):
        return PowerSeries([scalar * c for c in self.coeffs], self.den)

    def __truediv__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return ps_div_unit(self, other)

    def __eq__(self, other):
        if isinstance(other, PowerSeries):
            return self.den == other.den and self.coeffs == other.coeffs
        if isinstance(other, (list, tuple)):
            return self.coeffs == list(other)
        return NotImplemented

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self):
        return len(self.coeffs)

    def __repr__(self):
        return f"PowerSeries({self.coeffs!r}, den={self.den})"

    # -- conversions --------------------------------------------------------

    def to_integer_grid(self) -> "PowerSeries":
        """Drop to the integer grid; every half-integer coefficient must vanish."""
        if self.den == 1:
            return self
        bad = [i for i in range(1, len(self.coeffs), 2) if self.coeffs[i]]
        if bad:
            raise ValueError(f"non-zero coefficients at half-integer exponents {bad}")
        return PowerSeries(self.coeffs[::2], 1)

    def to_half_grid(self) -> "PowerSeries":
        if self.den == 2:
            return self
        zero = self.coeffs[0] * 0
        out = []
        for c in self.coeffs:
            out.extend((c, zero))
        return PowerSeries(out[:-1], 2)

    def integer_coeffs(self) -> list[int]:
        """Coefficients as plain ints; raises if any carries sqrt(2) or a 1/2."""
        out = []
        for i, c in enumerate(self.coeffs):
            if isinstance(c, DyadicSqrt2):
                if not c.is_integer():
                    raise ValueError(f"coefficient {i} is not an integer: {c}")
                c = int(c)
            elif isinstance(c, Fraction):
                if c.denominator != 1:
                    raise ValueError(f"coefficient {i} is not an integer: {c}")
                c = int(c)
            out.append(int(c))
        return out

    def exponent(self, i: int) -> Fraction:
        return Fraction(i, self.den)

    # -- I/O ----------------------------------------------------------------

    @staticmethod
    def _jsonable(c):
        if isinstance(c, int):
            return c
        if isinstance(c, DyadicSqrt2):
            return int(c) if c.is_integer() else str(c)
        return str(c)

    def to_dict(self) -> dict:
        return {
            "order": int(Fraction(self.order, self.den)) if self.order % self.den == 0
            else str(Fraction(self.order, self.den)),
            "unit": self.unit,
            "coeffs": [self._jsonable(c) for c in self.coeffs],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "PowerSeries":
        den = {"1": 1, "1/2": 2}[data["unit"]]
        coeffs = [c if isinstance(c, int) else DyadicSqrt2.parse(c) for c in data["coeffs"]]
        return cls(coeffs, den)

    @classmethod
    def from_json(cls, text: str) -> "PowerSeries":
        return cls.from_dict(json.loads(text))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["exponent", "coefficient"])
        for i, c in enumerate(self.coeffs):
            w.writerow([str(self.exponent(i)), self._jsonable(c)])
        return buf.getvalue()

    def to_text(self, var: str = "q") -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            e = self.exponent(i)
            mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
            cs = c.pretty() if isinstance(c, DyadicSqrt2) else str(c)
            if mono and cs == "1":
                terms.append(mono)
            else:
                terms.append(f"{cs}{'·' if mono else ''}{mono}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O({var}^{self.exponent(self.order + 1)})"


def ps_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    a._check(b)
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    out = []
    for k in range(n + 1):
        s = ac[0] * bc[k]
        for i in range(1, k + 1):
            if ac[i] and bc[k - i]:
                s = s + ac[i] * bc[k - i]
        out.append(s)
    return PowerSeries(out, a.den)


def ps_div_unit(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """``a / b`` for ``b`` with constant term +1 or -1."""
    a._check(b)
    b0 = b.coeffs[0]
    if b0 == 1:
        sign = 1
    elif b0 == -1:
        sign = -1
    else:
        raise ZeroDivisionError(f"constant term {b0!r} is not a unit")
    n = min(a.order, b.order)
    bc = b.coeffs
    out = []
    for k in range(n + 1):
        s = a.coeffs[k]
        for i in range(1, k + 1):
            if bc[i] and out[k - i]:
                s = s - bc[i] * out[k - i]
        out.append(s if sign == 1 else -s)
    return PowerSeries(out, a.den)


def _times_one_plus(c: list, n: int):
    """In place: c *= (1 + q**n)."""
    for i in range(len(c) - 1, n - 1, -1):
        c[i] += c[i - n]


def _over_one_minus(c: list, n: int):
    """In place: c /= (1 - q**n)."""
    for i in range(n, len(c)):
        c[i] += c[i - n]


def bkp_product_series(order: int) -> PowerSeries:
    """Coefficients of ``prod_n ((1+q**n)/(1-q**n))**n`` up to ``q**order``."""
    if order < 0:
        raise ValueError("order must be non-negative")
    c = [1] + [0] * order
    for n in range(1, order + 1):
        for _ in range(n):
            _times_one_plus(c, n)
            _over_one_minus(c, n)
    return PowerSeries(c)


def macmahon_series(order: int) -> PowerSeries:
    """Plane-partition generating function ``prod_n (1-q**n)**-n`` up to ``q**order``."""
    if order < 0:
        raise ValueError("order must be non-negative")
    c = [1] + [0] * order
    for n in range(1, order + 1):
        for _ in range(n):
            _over_one_minus(c, n)
    return PowerSeries(c)


def strict_partition_series(order: int) -> PowerSeries:
    """``prod_m (1 + q**m)``: counts strict partitions."""
    c = [1] + [0] * order
    for n in range(1, order + 1):
        _times_one_plus(c, n)
    return PowerSeries(c)


def ratio_expansion(order: int) -> PowerSeries:
    """``(1+w)/(1-w) = 1 + 2 sum_{m>=1} w**m`` truncated at ``w**order``."""
    if order < 0:
        raise ValueError("order must be non-negative")
    return PowerSeries([1] + [2] * order)
