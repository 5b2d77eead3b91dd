"""Closed-form vertex-operator transition weights and the slice-by-slice DP.

The matrix elements of ``Gamma_+(z)`` and ``Gamma_-(z)`` between strict
partition states are

* ``2**n(nu|mu) * z**(|nu|-|mu|)`` when ``nu < mu`` keeps the number of parts,
* ``(-1)**n(mu) * 2**(n(nu|mu) + 1/2) * z**(|nu|-|mu|)`` when it drops one part,

(``z`` exponent negated for ``Gamma_-``), and zero otherwise.  The DP threads
these through ``Gamma_+(q**-(2j-1)/2)`` on the left and ``Gamma_-(q**(2k-1)/2)``
on the right of the vacuum expectation value, on a half-integer ``q`` grid.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict

from .exactring import ONE, SQRT2, ZERO, DyadicSqrt2
from .partitions import (
    EMPTY,
    StrictPartition,
    down_list,
    interlaces,
    new_parts_count,
    strict_partitions_upto,
)
from .series import PowerSeries, ratio_expansion

__all__ = [
    "TransitionWeight",
    "gamma_plus_element",
    "gamma_minus_element",
    "vacuum_expectation_series",
    "vacuum_commutation_check",
    "scalar_product_series",
    "chain_weight",
]


@dataclass(frozen=True)
class TransitionWeight:
    coeff: DyadicSqrt2
    z_exponent: int

    def __bool__(self):
        return bool(self.coeff)

    def as_pair(self):
        return (self.coeff, self.z_exponent)


_ZERO_WEIGHT = TransitionWeight(ZERO, 0)


def _coefficient(nu: StrictPartition, mu: StrictPartition) -> DyadicSqrt2:
    if not interlaces(nu, mu):
        return ZERO
    c = DyadicSqrt2(1 << new_parts_count(nu, mu))
    if len(nu) == len(mu):
        return c
    # interlacing leaves only len(nu) == len(mu) - 1
    c = c * SQRT2
    return -c if len(mu) % 2 else c


def gamma_plus_element(nu, mu) -> TransitionWeight:
    """``<nu| Gamma_+(z) |mu>``."""
    nu, mu = StrictPartition(nu), StrictPartition(mu)
    c = _coefficient(nu, mu)
    if not c:
        return _ZERO_WEIGHT
    return TransitionWeight(c, nu.weight - mu.weight)


def gamma_minus_element(mu, nu) -> TransitionWeight:
    """``<mu| Gamma_-(z) |nu>``; non-zero only for ``nu`` below ``mu``."""
    nu, mu = StrictPartition(nu), StrictPartition(mu)
    c = _coefficient(nu, mu)
    if not c:
        return _ZERO_WEIGHT
    return TransitionWeight(c, mu.weight - nu.weight)


def vacuum_expectation_series(
    order: int,
    plus: Callable = gamma_plus_element,
    minus: Callable = gamma_minus_element,
) -> PowerSeries:
    """``<0|Gamma_+(z) Gamma_-(z')|0>`` in ``w = z'/z`` via a sum over intermediate states.

    ``plus``/``minus`` default to the closed forms; tests pass perturbed ones.
    """
    out = [ZERO] * (order + 1)
    for mu in strict_partitions_upto(order):
        left = plus(EMPTY, mu)
        right = minus(mu, EMPTY)
        if not (left and right):
            continue
        # z**(-|mu|) * z'**(|mu|) = w**|mu|
        assert -left.z_exponent == right.z_exponent == mu.weight
        out[mu.weight] = out[mu.weight] + left.coeff * right.coeff
    return PowerSeries(out)


def vacuum_commutation_check(order: int) -> bool:
    """True iff the intermediate-state sum reproduces ``(z+z')/(z-z')``."""
    got = vacuum_expectation_series(order)
    return got == PowerSeries([DyadicSqrt2(c) for c in ratio_expansion(order).coeffs])


# -- transfer DP --------------------------------------------------------------

def _up_table(max_weight: int) -> Dict[StrictPartition, list]:
    up: Dict[StrictPartition, list] = {mu: [] for mu in strict_partitions_upto(max_weight)}
    for mu in up:
        for nu in down_list(mu):
            up[nu].append(mu)
    return up


def _shift_add(dst: list, src: list, coeff: DyadicSqrt2, shift: int):
    for i in range(len(src) - shift):
        c = src[i]
        if c:
            dst[i + shift] = dst[i + shift] + coeff * c


def scalar_product_series(order: int, *, check_sign: bool = True) -> PowerSeries:
    """Vacuum expectation of the ordered vertex-operator product, to ``q**order``.

    Runs ``order`` slices of ``Gamma_+`` (the ``nu_{-j}`` side) into the
    central slice and ``order`` slices of ``Gamma_-`` back out to the vacuum.
    Signs and ``sqrt(2)`` factors are multiplied as they come; the result is
    asserted to be a series of positive integers.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    top = 2 * order  # half-grid index of q**order
    up = _up_table(order)
    states: Dict[StrictPartition, list] = {EMPTY: [ONE] + [ZERO] * top}

    # left half: nu_{-j} -> nu_{-j+1} under Gamma_+(q**(-(2j-1)/2)), j = order..1
    for j in range(order, 0, -1):
        step = 2 * j - 1
        nxt: Dict[StrictPartition, list] = {}
        for nu, vec in states.items():
            for mu in up[nu]:
                shift = step * (mu.weight - nu.weight)
                if shift > top:
                    continue
                w = gamma_plus_element(nu, mu)
                acc = nxt.setdefault(mu, [ZERO] * (top + 1))
                _shift_add(acc, vec, w.coeff, shift)
        states = {k: v for k, v in nxt.items() if any(v)}

    # right half: nu_{k-1} -> nu_k under Gamma_-(q**((2k-1)/2)), k = 1..order
    for k in range(1, order + 1):
        step = 2 * k - 1
        nxt = {}
        for mu, vec in states.items():
            for nu in down_list(mu):
                shift = step * (mu.weight - nu.weight)
                if shift > top:
                    continue
                w = gamma_minus_element(mu, nu)
                acc = nxt.setdefault(nu, [ZERO] * (top + 1))
                _shift_add(acc, vec, w.coeff, shift)
        states = {k_: v for k_, v in nxt.items() if any(v)}

    half = PowerSeries(states.get(EMPTY, [ZERO] * (top + 1)), den=2)
    series = half.to_integer_grid()
    coeffs = series.integer_coeffs()
    if check_sign and any(c <= 0 for c in coeffs):
        raise AssertionError(f"scalar product has non-positive coefficients: {coeffs}")
    return PowerSeries(coeffs)


def chain_weight(chain) -> tuple[DyadicSqrt2, int]:
    """Product of transition weights along one interlacing chain.

    Returns ``(coefficient, q-exponent)``; asserts that the exponent lands on
    the integer grid and that part-count drops balance part-count rises.
    """
    slices = chain.slices
    c0 = chain.center
    coeff = ONE
    half_exp = 0
    rises = drops = 0
    for j in range(1, c0 + 1):
        nu, mu = slices[c0 - j], slices[c0 - j + 1]
        w = gamma_plus_element(nu, mu)
        coeff = coeff * w.coeff
        half_exp += (2 * j - 1) * (mu.weight - nu.weight)
        rises += len(mu) > len(nu)
    for k in range(1, len(slices) - c0):
        mu, nu = slices[c0 + k - 1], slices[c0 + k]
        w = gamma_minus_element(mu, nu)
        coeff = coeff * w.coeff
        half_exp += (2 * k - 1) * (mu.weight - nu.weight)
        drops += len(mu) > len(nu)
    if coeff:
        assert rises == drops, "part-count rises and drops do not balance"
    assert half_exp % 2 == 0, f"chain lands on half-integer exponent {half_exp}/2"
    return coeff, half_exp // 2
