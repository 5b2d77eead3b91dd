from collections import defaultdict

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bkpplane.exactring import HALF, INV_SQRT2, ONE, SQRT2, ZERO, DyadicSqrt2
from bkpplane.fock import (
    FockVector,
    basis_labels,
    bra_pairing,
    gamma_oracle,
    ket_from_partition,
    lambda_apply,
    oracle_element,
    phi_apply,
    vacuum,
)
from bkpplane.partitions import StrictPartition, down_set, strict_partitions_upto

SP = StrictPartition
labels_st = st.sets(st.integers(min_value=0, max_value=9), max_size=6)
modes_st = st.integers(min_value=-10, max_value=10)


def basis(*levels):
    return FockVector.basis(levels)


def test_phi_zero_squares_to_half():
    for lab in basis_labels(5):
        v = FockVector.basis(lab)
        assert phi_apply(0, phi_apply(0, v)) == HALF * v


def test_anticommutator_example():
    v = vacuum()
    lhs = phi_apply(1, phi_apply(-1, v)) + phi_apply(-1, phi_apply(1, v))
    assert lhs == -v


@pytest.mark.parametrize("lab", basis_labels(6))
def test_nilpotent_mode(lab):
    v = FockVector.basis(lab)
    assert not phi_apply(3, phi_apply(3, v))


@given(labels_st, modes_st, modes_st)
def test_anticommutation_property(levels, m, n):
    v = FockVector.basis(levels)
    lhs = phi_apply(m, phi_apply(n, v)) + phi_apply(n, phi_apply(m, v))
    expect = DyadicSqrt2(-1 if m % 2 else 1) if m + n == 0 else ZERO
    assert lhs == expect * v


def test_negative_modes_kill_vacuum():
    for m in range(-8, 0):
        assert not phi_apply(m, vacuum())


def test_phi_zero_toggles_with_root_half():
    assert phi_apply(0, vacuum()) == FockVector.basis((0,), INV_SQRT2)
    assert phi_apply(0, basis(2, 0)) == FockVector.basis((2,), -INV_SQRT2)


def test_ket_of_empty_is_vacuum():
    assert ket_from_partition(SP()) == vacuum()


def test_ket_of_single_part_is_padded():
    ket = ket_from_partition(SP((1,)))
    assert list(ket.terms) == [(1, 0)]
    (c,) = ket.terms.values()
    assert abs(c) == ONE


def test_norms_and_orthogonality():
    parts = strict_partitions_upto(6)
    for mu in parts:
        ket = ket_from_partition(mu)
        for nu in parts:
            assert bra_pairing(nu, ket) == (ONE if nu == mu else ZERO)


def test_kets_have_unit_coefficients():
    for mu in strict_partitions_upto(9):
        (c,) = ket_from_partition(mu).terms.values()
        assert c in (ONE, -ONE)


def test_heisenberg_example():
    v = vacuum()
    lhs = lambda_apply(1, lambda_apply(-1, v)) - lambda_apply(-1, lambda_apply(1, v))
    assert lhs == HALF * v


def test_lambda_phi_spot_example():
    v = vacuum()
    lhs = lambda_apply(1, phi_apply(-2, v)) - phi_apply(-2, lambda_apply(1, v))
    assert lhs == phi_apply(-3, v)
    # a non-trivial instance
    v = basis(3)
    lhs = lambda_apply(1, phi_apply(2, v)) - phi_apply(2, lambda_apply(1, v))
    assert lhs == phi_apply(1, v) and lhs


def test_raising_lambda_on_vacuum():
    assert not lambda_apply(1, vacuum())
    raised = lambda_apply(-1, vacuum())
    assert len(raised) == 1
    ((lab, c),) = raised.terms.items()
    assert sum(lab) == 1 and abs(c) == INV_SQRT2


def test_lambda_needs_odd_index():
    with pytest.raises(ValueError):
        lambda_apply(2, vacuum())


@given(labels_st, st.sampled_from([-5, -3, -1, 1, 3, 5]), st.sampled_from([-5, -3, -1, 1, 3, 5]))
def test_heisenberg_property(levels, m, n):
    v = FockVector.basis(levels)
    lhs = lambda_apply(m, lambda_apply(n, v)) - lambda_apply(n, lambda_apply(m, v))
    assert lhs == (DyadicSqrt2(m, 0, 1) if m + n == 0 else ZERO) * v


def test_gamma_plus_fixes_vacuum():
    assert gamma_oracle("plus", vacuum(), 5) == {(): (ONE, 0)}


def test_gamma_plus_single_part_to_vacuum():
    c, e = oracle_element("plus", SP(), SP((1,)))
    assert abs(c) == SQRT2 and e == -1


def test_gamma_errors():
    with pytest.raises(ValueError):
        gamma_oracle("plus", basis(3), 2)
    with pytest.raises(ValueError):
        gamma_oracle("plus", basis(3) + basis(1), 5)
    with pytest.raises(ValueError):
        gamma_oracle("sideways", vacuum(), 1)


@pytest.mark.parametrize("mu", strict_partitions_upto(8), ids=str)
def test_gamma_plus_support_is_down_set(mu):
    ket = ket_from_partition(mu)
    support = {SP(x for x in lab if x) for lab in gamma_oracle("plus", ket)}
    assert support == down_set(mu)


def _graded(direction, v, cutoff, flip=False):
    """Apply Gamma_±(±z) to an inhomogeneous vector, keyed by (label, z-exponent)."""
    pieces = defaultdict(dict)
    for lab, c in v.terms.items():
        pieces[sum(lab)][lab] = c
    out = defaultdict(lambda: ZERO)
    for w, terms in pieces.items():
        if direction == "minus" and w > cutoff:
            continue
        res = gamma_oracle(direction, FockVector(terms), cutoff if direction == "minus" else None)
        for lab, (c, e) in res.items():
            out[(lab, e)] += -c if (flip and e % 2) else c
    return out


def _conjugate(direction, j, v, cutoff):
    """Gamma(±z) phi_j Gamma(∓z) v with the z sign flipped on the inner factor."""
    inner = _graded(direction, v, cutoff, flip=(direction == "plus"))
    by_e = defaultdict(dict)
    for (lab, e), c in inner.items():
        if c:
            by_e[e][lab] = c
    out = defaultdict(lambda: ZERO)
    for e1, terms in by_e.items():
        moved = phi_apply(j, FockVector(terms))
        for (lab, e2), c in _graded(direction, moved, cutoff, flip=(direction == "minus")).items():
            out[(lab, e1 + e2)] += c
    return {k: c for k, c in out.items() if c}


@pytest.mark.parametrize("lab", basis_labels(4))
@pytest.mark.parametrize("j", [-2, 0, 1, 3])
def test_plus_conjugation_shifts_modes_down(lab, j):
    v = FockVector.basis(lab)
    got = _conjugate("plus", j, v, None)
    expect = defaultdict(lambda: ZERO)
    for lab2, c in phi_apply(j, v).terms.items():
        expect[(lab2, 0)] += c
    for n in range(1, j + (lab[0] if lab else 0) + 2):
        for lab2, c in phi_apply(j - n, v).terms.items():
            expect[(lab2, -n)] += 2 * c
    assert got == {k: c for k, c in expect.items() if c}


@pytest.mark.parametrize("lab", basis_labels(3))
@pytest.mark.parametrize("j", [-2, 0, 1])
def test_minus_conjugation_shifts_modes_up(lab, j):
    v = FockVector.basis(lab)
    w0 = sum(lab)
    final = w0 + 3
    cutoff = final + abs(j) + 1
    got = {k: c for k, c in _conjugate("minus", j, v, cutoff).items() if sum(k[0]) <= final}
    expect = defaultdict(lambda: ZERO)
    for lab2, c in phi_apply(j, v).terms.items():
        expect[(lab2, 0)] += c
    for n in range(1, final + abs(j) + 2):
        for lab2, c in phi_apply(j + n, v).terms.items():
            if sum(lab2) <= final:
                expect[(lab2, n)] += 2 * c * (-1 if n % 2 else 1)
    assert got == {k: c for k, c in expect.items() if c}


def test_dump_format():
    v = FockVector.basis((2, 0), DyadicSqrt2(0, -2))
    assert v.dump({(2, 0): -2}) == "-2√2 · |2,0⟩ · z^-2"
