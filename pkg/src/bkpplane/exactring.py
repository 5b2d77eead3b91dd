"""Exact arithmetic in Z[sqrt(2), 1/2].

Every scalar that shows up in the neutral-fermion computations (the 1/sqrt(2)
of the zero mode, the sqrt(2) normalisation of states with a zero part, the
powers of two in the vertex-operator matrix elements) lives in this ring, so
elements are stored as ``(p + q*sqrt(2)) / 2**k`` with a shared power-of-two
denominator.

:class:`QSqrt2` is the field Q(sqrt(2)).  It is only needed while summing an
exponential series term by term (the ``2/m`` and ``1/k!`` factors have odd
denominators); results are brought back to :class:`DyadicSqrt2` with
:meth:`QSqrt2.to_dyadic`, which refuses values outside the ring.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Integral, Rational

__all__ = ["DyadicSqrt2", "QSqrt2", "SQRT2", "INV_SQRT2", "HALF", "ONE", "ZERO"]


def _trailing_zeros(n: int) -> int:
    return (n & -n).bit_length() - 1


class DyadicSqrt2:
    """The number ``(p + q*sqrt(2)) / 2**k``, always stored normalized.

    Normalized means ``k == 0`` or at least one of ``p``, ``q`` is odd, which
    makes the triple unique, so equality and hashing are tuple comparisons.

    >>> DyadicSqrt2(2, 4, 1)
    DyadicSqrt2(1, 2, 0)
    >>> SQRT2 * SQRT2
    DyadicSqrt2(2, 0, 0)
    """

    __slots__ = ("p", "q", "k")

    def __init__(self, p: int = 0, q: int = 0, k: int = 0):
        if k < 0:
            raise ValueError("denominator exponent must be non-negative")
        p, q, k = int(p), int(q), int(k)
        if p == 0 and q == 0:
            k = 0
        elif k:
            shift = min(k, _trailing_zeros(p | q))
            if shift:
                p >>= shift
                q >>= shift
                k -= shift
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "k", k)

    def __setattr__(self, name, value):
        raise AttributeError("DyadicSqrt2 is immutable")

    @classmethod
    def coerce(cls, x) -> "DyadicSqrt2":
        if isinstance(x, DyadicSqrt2):
            return x
        if isinstance(x, Integral):
            return cls(int(x), 0, 0)
        if isinstance(x, Rational):
            den = int(x.denominator)
            if den & (den - 1):
                raise ValueError(f"{x} is not a dyadic rational")
            return cls(int(x.numerator), 0, den.bit_length() - 1)
        raise TypeError(f"cannot coerce {type(x).__name__} to DyadicSqrt2")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.p, self.q, self.k)

    # -- arithmetic ---------------------------------------------------------

    def _other(self, other):
        if isinstance(other, DyadicSqrt2):
            return other
        if isinstance(other, Integral):
            return DyadicSqrt2(int(other))
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if self.k >= o.k:
            s = self.k - o.k
            return DyadicSqrt2(self.p + (o.p << s), self.q + (o.q << s), self.k)
        s = o.k - self.k
        return DyadicSqrt2((self.p << s) + o.p, (self.q << s) + o.q, o.k)

    __radd__ = __add__

    def __neg__(self):
        return DyadicSqrt2(-self.p, -self.q, self.k)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return DyadicSqrt2(
            self.p * o.p + 2 * self.q * o.q,
            self.p * o.q + self.q * o.p,
            self.k + o.k,
        )

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, Integral) or n < 0:
            return NotImplemented
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "DyadicSqrt2":
        """Galois conjugate, sqrt(2) -> -sqrt(2)."""
        return DyadicSqrt2(self.p, -self.q, self.k)

    def half(self, times: int = 1) -> "DyadicSqrt2":
        return DyadicSqrt2(self.p, self.q, self.k + times)

    # -- predicates ---------------------------------------------------------

    def __bool__(self):
        return bool(self.p or self.q)

    def __eq__(self, other):
        o = self._other(other)
        if o is None:
            if isinstance(other, QSqrt2):
                return other == self
            return NotImplemented
        return self.p == o.p and self.q == o.q and self.k == o.k

    def __hash__(self):
        if self.q == 0 and self.k == 0:
            return hash(self.p)
        return hash((self.p, self.q, self.k))

    def is_integer(self) -> bool:
        return self.q == 0 and self.k == 0

    def is_rational(self) -> bool:
        return self.q == 0

    def __int__(self):
        if not self.is_integer():
            raise ValueError(f"{self} is not an integer")
        return self.p

    def norm(self) -> Fraction:
        """Field norm x * conj(x), a dyadic rational."""
        return Fraction(self.p * self.p - 2 * self.q * self.q, 1 << (2 * self.k))

    def sign(self) -> int:
        """Sign of the real number represented (exact)."""
        # compare p with -q*sqrt(2) by squaring
        sp = (self.p > 0) - (self.p < 0)
        sq = (self.q > 0) - (self.q < 0)
        if sq == 0:
            return sp
        if sp == 0 or sp == sq:
            return sq
        return sp if self.p * self.p > 2 * self.q * self.q else sq

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __lt__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __float__(self):
        return (self.p + self.q * 2**0.5) / (1 << self.k)

    # -- rendering ----------------------------------------------------------

    def __repr__(self):
        return f"DyadicSqrt2({self.p}, {self.q}, {self.k})"

    def __str__(self):
        return f"{self.p}/2^{self.k} + {self.q}/2^{self.k}·√2"

    def pretty(self) -> str:
        """Short human rendering, e.g. ``-2√2`` or ``1/2``."""
        return QSqrt2.from_dyadic(self).pretty()

    @classmethod
    def parse(cls, text: str) -> "DyadicSqrt2":
        """Inverse of ``str()``: ``"p/2^k + q/2^k·√2"``."""
        try:
            left, right = text.split(" + ")
            p, kp = left.split("/2^")
            q, rest = right.split("/2^")
            kq = rest.removesuffix("·√2")
        except ValueError:
            raise ValueError(f"malformed DyadicSqrt2 literal: {text!r}") from None
        if kp != kq:
            raise ValueError(f"mismatched denominators in {text!r}")
        return cls(int(p), int(q), int(kp))


ZERO = DyadicSqrt2(0)
ONE = DyadicSqrt2(1)
HALF = DyadicSqrt2(1, 0, 1)
SQRT2 = DyadicSqrt2(0, 1, 0)
INV_SQRT2 = DyadicSqrt2(0, 1, 1)


class QSqrt2:
    """``a + b*sqrt(2)`` with rational ``a``, ``b``.

    Mixed arithmetic with ints, Fractions and :class:`DyadicSqrt2` promotes
    to ``QSqrt2``.
    """

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))

    def __setattr__(self, name, value):
        raise AttributeError("QSqrt2 is immutable")

    @classmethod
    def from_dyadic(cls, x: DyadicSqrt2) -> "QSqrt2":
        den = 1 << x.k
        return cls(Fraction(x.p, den), Fraction(x.q, den))

    def to_dyadic(self) -> DyadicSqrt2:
        da, db = self.a.denominator, self.b.denominator
        if da & (da - 1) or db & (db - 1):
            raise ValueError(f"{self.pretty()} is outside Z[sqrt2, 1/2]")
        k = max(da, db).bit_length() - 1
        return DyadicSqrt2(self.a.numerator << (k - da.bit_length() + 1),
                           self.b.numerator << (k - db.bit_length() + 1), k)

    @staticmethod
    def _other(other):
        if isinstance(other, QSqrt2):
            return other
        if isinstance(other, DyadicSqrt2):
            return QSqrt2.from_dyadic(other)
        if isinstance(other, Rational):
            return QSqrt2(other)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return QSqrt2(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QSqrt2(-self.a, -self.b)

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return QSqrt2(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return QSqrt2(self.a * o.a + 2 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        n = o.a * o.a - 2 * o.b * o.b
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt2)")
        inv = QSqrt2(o.a / n, -o.b / n)
        return self * inv

    def __bool__(self):
        return bool(self.a or self.b)

    def __eq__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return f"QSqrt2({self.a}, {self.b})"

    def pretty(self) -> str:
        if not self:
            return "0"
        parts = []
        if self.a:
            parts.append(str(self.a))
        if self.b:
            mag = abs(self.b)
            coef = "" if mag == 1 else f"{mag}"
            if coef and mag.denominator != 1:
                coef = f"({coef})"
            term = f"{coef}√2"
            if parts:
                parts.append(("- " if self.b < 0 else "+ ") + term)
            else:
                parts.append(("-" if self.b < 0 else "") + term)
        return " ".join(parts)
