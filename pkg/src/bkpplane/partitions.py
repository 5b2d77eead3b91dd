"""Strict partitions and the interlacing order between them."""

from __future__ import annotations

from functools import lru_cache
from itertools import product

__all__ = [
    "StrictPartition",
    "interlaces",
    "down_set",
    "up_set",
    "new_parts_count",
    "enumerate_strict",
    "strict_partitions_upto",
]


class StrictPartition(tuple):
    """Strictly decreasing tuple of positive parts.

    The canonical form never stores a zero part; padding to an even number of
    parts is done only when a Fock state is built from the partition.
    """

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a <= b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be strictly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The ``i``-th part (0-based), reading zero past the end."""
        return self[i] if i < len(self) else 0

    def __repr__(self):
        return f"StrictPartition({tuple(self)!r})"

    def __str__(self):
        return "+".join(map(str, self)) if self else "[]"

    @classmethod
    def parse(cls, text: str) -> "StrictPartition":
        """Read ``"3+1"``, ``"[]"``, ``"[3, 1]"`` or ``"3,1"``."""
        s = text.strip()
        if s in ("", "[]", "()", "0", "∅"):
            return cls()
        s = s.strip("[]() ")
        sep = "+" if "+" in s else ","
        try:
            return cls(int(tok) for tok in s.split(sep) if tok.strip())
        except ValueError as exc:
            raise ValueError(f"bad partition literal {text!r}: {exc}") from None


EMPTY = StrictPartition()


def interlaces(nu, mu) -> bool:
    """True iff ``mu[0] >= nu[0] >= mu[1] >= nu[1] >= ...``."""
    n = max(len(nu), len(mu))
    pad_nu = tuple(nu) + (0,) * (n - len(nu) + 1)
    pad_mu = tuple(mu) + (0,) * (n - len(mu) + 1)
    for i in range(n):
        if not pad_mu[i] >= pad_nu[i] >= pad_mu[i + 1]:
            return False
    return True


@lru_cache(maxsize=None)
def _down_set(mu: StrictPartition) -> tuple[StrictPartition, ...]:
    ranges = [range(mu.part(i + 1), mu[i] + 1) for i in range(len(mu))]
    out = []
    for choice in product(*ranges):
        parts = [c for c in choice if c > 0]
        if all(a > b for a, b in zip(parts, parts[1:])):
            out.append(StrictPartition(parts))
    out.sort(key=lambda p: (-p.weight, [-x for x in p]))
    return tuple(out)


def down_set(mu) -> set[StrictPartition]:
    """All strict ``nu`` with ``nu`` interlacing below ``mu``."""
    return set(_down_set(StrictPartition(mu)))


def down_list(mu) -> tuple[StrictPartition, ...]:
    """:func:`down_set` in a fixed order (heaviest first)."""
    return _down_set(StrictPartition(mu))


def up_set(nu, max_weight: int) -> set[StrictPartition]:
    """All strict ``mu`` of weight at most ``max_weight`` with ``nu`` below ``mu``."""
    nu = StrictPartition(nu)
    return {
        mu
        for w in range(nu.weight, max_weight + 1)
        for mu in enumerate_strict(w)
        if interlaces(nu, mu)
    }


def new_parts_count(nu, mu) -> int:
    """Number of parts of ``nu`` that are not parts of ``mu``.

    Raises ``ValueError`` unless ``nu`` interlaces below ``mu``.
    """
    if not interlaces(nu, mu):
        raise ValueError(f"{nu} does not interlace below {mu}")
    present = set(mu)
    return sum(1 for p in nu if p > 0 and p not in present)


@lru_cache(maxsize=None)
def _strict(weight: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if weight == 0:
        return ((),)
    out = []
    for first in range(min(weight, largest), 0, -1):
        for rest in _strict(weight - first, first - 1):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_strict(weight: int) -> list[StrictPartition]:
    """Strict partitions of ``weight`` in descending lexicographic order.

    >>> enumerate_strict(5)
    [StrictPartition((5,)), StrictPartition((4, 1)), StrictPartition((3, 2))]
    """
    if weight < 0:
        raise ValueError("weight must be non-negative")
    return [StrictPartition(p) for p in _strict(weight, weight)]


def strict_partitions_upto(max_weight: int) -> list[StrictPartition]:
    return [mu for w in range(max_weight + 1) for mu in enumerate_strict(w)]
