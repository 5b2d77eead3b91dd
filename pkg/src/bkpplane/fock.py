"""Brute-force neutral-fermion Fock space.

Basis kets are labelled by finite sets of occupied non-negative levels, stored
as strictly decreasing tuples (:data:`FockLabel`).  The mode operators are
realised as

* ``phi_m``, ``m > 0``: create level ``m``;
* ``phi_-m``, ``m > 0``: ``(-1)**m`` times annihilation of level ``m``;
* ``phi_0``: ``(a_0 + a_0^+)/sqrt(2)``, toggling level 0;

with the usual Jordan-Wigner sign ``(-1)**(number of occupied levels above)``.
This gives ``[phi_m, phi_n]_+ = (-1)**m delta_{m+n,0}``, ``phi_0**2 = 1/2`` and
kills the vacuum with every negative mode.  The test-suite checks these
relations instead of trusting the derivation above.

The vertex operators are evaluated as literal exponential series in the weight
grading, so nothing here uses the closed-form transition weights.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Tuple

from .exactring import HALF, INV_SQRT2, ONE, SQRT2, DyadicSqrt2, QSqrt2
from .partitions import StrictPartition

__all__ = [
    "FockLabel",
    "FockVector",
    "fock_label",
    "basis_labels",
    "vacuum",
    "phi_apply",
    "lambda_apply",
    "ket_from_partition",
    "bra_pairing",
    "gamma_oracle",
    "oracle_element",
    "oracle_transitions",
]

FockLabel = Tuple[int, ...]


def fock_label(levels: Iterable[int]) -> FockLabel:
    lab = tuple(sorted((int(x) for x in levels), reverse=True))
    if any(x < 0 for x in lab) or len(set(lab)) != len(lab):
        raise ValueError(f"invalid Fock label {lab}")
    return lab


class FockVector:
    """Finite linear combination of basis kets.

    Coefficients are :class:`DyadicSqrt2` (or :class:`QSqrt2` inside the
    exponential series).  Zero coefficients are never stored.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[FockLabel, object] | None = None):
        self.terms: Dict[FockLabel, object] = {}
        if terms:
            for lab, c in terms.items():
                if c:
                    self.terms[fock_label(lab)] = c

    @classmethod
    def basis(cls, label: Iterable[int], coeff=ONE) -> "FockVector":
        return cls({fock_label(label): coeff})

    @classmethod
    def _raw(cls, terms: Dict[FockLabel, object]) -> "FockVector":
        v = cls.__new__(cls)
        v.terms = {k: c for k, c in terms.items() if c}
        return v

    def __iter__(self) -> Iterator[Tuple[FockLabel, object]]:
        return iter(sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0])))

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, label: Iterable[int]):
        return self.terms.get(fock_label(label), DyadicSqrt2(0))

    def __add__(self, other: "FockVector") -> "FockVector":
        out = dict(self.terms)
        for lab, c in other.terms.items():
            out[lab] = out[lab] + c if lab in out else c
        return FockVector._raw(out)

    def __neg__(self):
        return FockVector._raw({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + (-other)

    def __rmul__(self, scalar) -> "FockVector":
        return FockVector._raw({k: scalar * c for k, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        return (self - other).terms == {}

    def weights(self) -> set[int]:
        return {sum(lab) for lab in self.terms}

    def dump(self, z_exponents: Mapping[FockLabel, int] | None = None) -> str:
        """One term per line: ``coeff · |labels⟩ · z^e``."""
        lines = []
        for lab, c in self:
            text = c.pretty() if hasattr(c, "pretty") else str(c)
            line = f"{text} · |{','.join(map(str, lab))}⟩"
            if z_exponents is not None:
                line += f" · z^{z_exponents[lab]}"
            lines.append(line)
        return "\n".join(lines)

    def __repr__(self):
        return f"FockVector({dict(self)!r})"


def vacuum() -> FockVector:
    return FockVector.basis(())


def basis_labels(max_weight: int) -> list[FockLabel]:
    """All basis labels (with or without level 0) of weight <= ``max_weight``."""
    from .partitions import strict_partitions_upto

    labels = []
    for mu in strict_partitions_upto(max_weight):
        labels.append(tuple(mu))
        labels.append(tuple(mu) + (0,))
    return labels


def _above(label: FockLabel, level: int) -> int:
    n = 0
    for x in label:
        if x > level:
            n += 1
        else:
            break
    return n


def _phi_on_label(m: int, label: FockLabel):
    """``phi_m`` on one basis ket: ``None`` or ``(new_label, sign, half_root)``."""
    if m > 0:
        if m in label:
            return None
        i = _above(label, m)
        return label[:i] + (m,) + label[i:], -1 if i & 1 else 1, False
    if m < 0:
        p = -m
        if p not in label:
            return None
        i = _above(label, p)
        sign = -1 if (i + p) & 1 else 1
        return label[:i] + label[i + 1:], sign, False
    if label and label[-1] == 0:
        i = len(label) - 1
        return label[:-1], -1 if i & 1 else 1, True
    i = len(label)
    return label + (0,), -1 if i & 1 else 1, True


def phi_apply(m: int, v: FockVector) -> FockVector:
    """Apply the mode operator ``phi_m`` to ``v``."""
    out: Dict[FockLabel, object] = {}
    for lab, c in v.terms.items():
        hit = _phi_on_label(m, lab)
        if hit is None:
            continue
        new, sign, root = hit
        if root:
            c = c * INV_SQRT2
        c = c if sign > 0 else -c
        out[new] = out[new] + c if new in out else c
    return FockVector._raw(out)


def phi_string(modes: Iterable[int], v: FockVector) -> FockVector:
    """Apply ``phi_{m_1} phi_{m_2} ... phi_{m_k}`` (rightmost acts first)."""
    for m in reversed(list(modes)):
        v = phi_apply(m, v)
    return v


def lambda_apply(m: int, v: FockVector) -> FockVector:
    """Heisenberg bilinear ``lambda_m = 1/2 sum_j (-1)**(j+1) phi_j phi_{-j-m}``.

    Only finitely many ``j`` act non-trivially on a finite vector, so the
    result is exact.
    """
    if m % 2 == 0:
        raise ValueError(f"lambda_m needs odd m, got {m}")
    if not v:
        return FockVector()
    top = max((lab[0] for lab in v.terms if lab), default=0)
    reach = top + abs(m) + 1
    out = FockVector()
    for j in range(-reach, reach + 1):
        w = phi_apply(j, phi_apply(-j - m, v))
        if w:
            out = out + (w if j % 2 else -w)
    return HALF * out


def _padded(mu: StrictPartition) -> FockLabel:
    mu = StrictPartition(mu)
    return tuple(mu) + (0,) if len(mu) % 2 else tuple(mu)


def ket_from_partition(mu) -> FockVector:
    """``alpha (-1)**r phi_{m_1} ... phi_{m_2r} |0>`` for the padded partition."""
    levels = _padded(mu)
    r = len(levels) // 2
    alpha = SQRT2 if levels and levels[-1] == 0 else ONE
    v = phi_string(levels, vacuum())
    v = (alpha if r % 2 == 0 else -alpha) * v
    if len(v) != 1:
        raise AssertionError(f"ket for {mu} is not a single basis state")
    (c,) = v.terms.values()
    if c not in (ONE, -ONE):
        raise AssertionError(f"ket for {mu} has coefficient {c}")
    return v


def bra_pairing(mu, v: FockVector):
    """``<mu| v>`` with ``<mu| = alpha (-1)**(r+|mu|) <0| phi_{-m_2r} ... phi_{-m_1}``."""
    mu = StrictPartition(mu)
    levels = _padded(mu)
    r = len(levels) // 2
    alpha = SQRT2 if levels and levels[-1] == 0 else ONE
    w = phi_string([-x for x in reversed(levels)], v)
    c = w.terms.get((), DyadicSqrt2(0))
    return alpha * c if (r + mu.weight) % 2 == 0 else -(alpha * c)


# -- vertex operators as exponential series ---------------------------------

def _lambda_q(m: int, terms: Dict[Tuple[FockLabel, int], QSqrt2], z_step: int, factor):
    """``factor * z**z_step * lambda_m`` on a z-graded vector."""
    out: Dict[Tuple[FockLabel, int], QSqrt2] = defaultdict(lambda: QSqrt2(0))
    by_e: Dict[int, Dict[FockLabel, QSqrt2]] = defaultdict(dict)
    for (lab, e), c in terms.items():
        by_e[e][lab] = c
    for e, part in by_e.items():
        res = lambda_apply(m, FockVector._raw(part))
        for lab, c in res.terms.items():
            out[(lab, e + z_step)] += factor * c
    return {k: c for k, c in out.items() if c}


def gamma_oracle(direction: str, v: FockVector, weight_cutoff: int | None = None):
    """Evaluate ``Gamma_+(z) v`` or ``Gamma_-(z) v`` term by term.

    ``Gamma_+(z) = exp(sum_{m odd > 0} (2/m) z**-m lambda_m)`` lowers the weight
    and its series terminates; ``Gamma_-(z) = exp(sum (2/m) z**m lambda_-m)``
    raises it, and everything above ``weight_cutoff`` is dropped.  ``v`` must be
    homogeneous.  Returns ``{label: (coeff, z_exponent)}``.
    """
    if direction not in ("plus", "minus"):
        raise ValueError(f"direction must be 'plus' or 'minus', got {direction!r}")
    weights = v.weights()
    if len(weights) > 1:
        raise ValueError("gamma_oracle needs a homogeneous vector")
    w0 = weights.pop() if weights else 0
    if weight_cutoff is None:
        if direction == "minus":
            raise ValueError("weight_cutoff is required for the raising direction")
        weight_cutoff = w0
    if weight_cutoff < w0:
        raise ValueError(f"cutoff {weight_cutoff} below input weight {w0}")

    term = {(lab, 0): QSqrt2.from_dyadic(DyadicSqrt2.coerce(c)) for lab, c in v.terms.items()}
    total: Dict[Tuple[FockLabel, int], QSqrt2] = defaultdict(lambda: QSqrt2(0))
    k = 0
    while term:
        for key, c in term.items():
            total[key] += c
        k += 1
        nxt: Dict[Tuple[FockLabel, int], QSqrt2] = defaultdict(lambda: QSqrt2(0))
        if direction == "plus":
            reach = max(sum(lab) for lab, _ in term)
        else:
            reach = weight_cutoff - min(sum(lab) for lab, _ in term)
        for m in range(1, reach + 1, 2):
            factor = QSqrt2(Fraction(2, m * k))
            if direction == "plus":
                contrib = _lambda_q(m, term, -m, factor)
            else:
                contrib = _lambda_q(-m, term, m, factor)
                contrib = {key: c for key, c in contrib.items()
                           if sum(key[0]) <= weight_cutoff}
            for key, c in contrib.items():
                nxt[key] += c
        term = {key: c for key, c in nxt.items() if c}

    result: Dict[FockLabel, Tuple[DyadicSqrt2, int]] = {}
    for (lab, e), c in total.items():
        if not c:
            continue
        if lab in result:
            raise AssertionError(f"label {lab} reached with two z-exponents")
        result[lab] = (c.to_dyadic(), e)
    return result


def _label_to_partition(label: FockLabel) -> StrictPartition:
    return StrictPartition(x for x in label if x > 0)


def oracle_transitions(direction: str, mu, weight_cutoff: int | None = None):
    """Matrix elements between strict-partition states from the brute-force oracle.

    For ``plus``: ``{nu: (<nu|Gamma_+(z)|mu>, z-exponent)}``.
    For ``minus``: ``{lam: (<lam|Gamma_-(z)|mu>, z-exponent)}`` up to the cutoff.
    """
    mu = StrictPartition(mu)
    raw = gamma_oracle(direction, ket_from_partition(mu), weight_cutoff)
    out = {}
    for lab, (c, e) in raw.items():
        target = _label_to_partition(lab)
        elem = bra_pairing(target, FockVector.basis(lab, c))
        if elem:
            out[target] = (elem, e)
    return out


def oracle_element(direction: str, bra, ket, weight_cutoff: int | None = None):
    """Single matrix element ``<bra|Gamma_±(z)|ket>`` as ``(coeff, z_exponent)``."""
    bra = StrictPartition(bra)
    cutoff = weight_cutoff
    if direction == "minus" and cutoff is None:
        cutoff = bra.weight
    table = oracle_transitions(direction, ket, cutoff)
    return table.get(bra, (DyadicSqrt2(0), 0))


def vacuum_expectation_oracle(order: int) -> list[DyadicSqrt2]:
    """``<0|Gamma_+(z) Gamma_-(z')|0>`` coefficients of ``(z'/z)**n``, ``n <= order``.

    Both exponentials are summed directly on Fock vectors; no intermediate
    resolution over strict-partition states is used.
    """
    raised = gamma_oracle("minus", vacuum(), order)
    by_weight: Dict[int, Dict[FockLabel, DyadicSqrt2]] = defaultdict(dict)
    for lab, (c, e) in raised.items():
        assert e == sum(lab)
        by_weight[e][lab] = c
    out = [DyadicSqrt2(0)] * (order + 1)
    for n, terms in by_weight.items():
        lowered = gamma_oracle("plus", FockVector(terms))
        c, e = lowered.get((), (DyadicSqrt2(0), -n))
        assert e == -n
        out[n] = c
    return out
