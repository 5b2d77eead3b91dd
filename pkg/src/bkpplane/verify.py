"""Exhaustive cross-checks shared by the CLI ``verify`` commands and the tests."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import fock, planepart, vertex
from .exactring import ONE, ZERO, DyadicSqrt2
from .partitions import down_list, strict_partitions_upto, up_set
from .series import bkp_product_series, ratio_expansion

__all__ = [
    "CheckResult",
    "check_lemma1",
    "check_algebra",
    "check_commutation",
    "check_path_width",
    "check_three_way",
    "check_sample_partition",
    "run_all",
    "BUDGETS",
]

MAX_REPORTED = 20


@dataclass
class CheckResult:
    name: str
    passed: bool
    details: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "status": "pass" if self.passed else "fail",
            "details": self.details,
            "counterexamples": self.counterexamples,
        }


def _label(mu) -> tuple:
    return tuple(mu) + (0,) if len(mu) % 2 else tuple(mu)


def _dump(table: dict) -> str:
    if not table:
        return "(zero)"
    v = fock.FockVector({_label(k): c for k, (c, _) in table.items()})
    return v.dump({_label(k): e for k, (_, e) in table.items()})


def _compare_tables(oracle: dict, closed: dict) -> bool:
    keys = set(oracle) | set(closed)
    zero = (ZERO, 0)
    return all(oracle.get(k, zero) == closed.get(k, zero) for k in keys)


def check_lemma1(max_weight: int) -> CheckResult:
    """Closed-form transition weights against the exponential-series oracle."""
    bad = []
    compared = 0
    outside = 0
    for mu in strict_partitions_upto(max_weight):
        oracle = fock.oracle_transitions("plus", mu)
        closed = {}
        for nu in down_list(mu):
            w = vertex.gamma_plus_element(nu, mu)
            if w:
                closed[nu] = w.as_pair()
        outside += len(set(oracle) - set(down_list(mu)))
        compared += len(set(oracle) | set(closed))
        if not _compare_tables(oracle, closed):
            bad.append(f"<nu|Gamma_+|{mu}>\noracle:\n{_dump(oracle)}\nclosed form:\n{_dump(closed)}")
    for nu in strict_partitions_upto(max_weight):
        oracle = fock.oracle_transitions("minus", nu, max_weight)
        closed = {}
        for mu in up_set(nu, max_weight):
            w = vertex.gamma_minus_element(mu, nu)
            if w:
                closed[mu] = w.as_pair()
        compared += len(set(oracle) | set(closed))
        if not _compare_tables(oracle, closed):
            bad.append(f"<mu|Gamma_-|{nu}>\noracle:\n{_dump(oracle)}\nclosed form:\n{_dump(closed)}")
    return CheckResult(
        "lemma1",
        not bad,
        {"max_weight": max_weight, "entries_compared": compared,
         "oracle_support_outside_down_set": outside, "mismatches": len(bad)},
        bad[:MAX_REPORTED],
    )


def _basis(label) -> fock.FockVector:
    return fock.FockVector.basis(label)


def check_algebra(max_weight: int, *, mode_range: int = 6, heis_range: int = 5,
                  mixed_m: int = 3, mixed_n: int = 4, mixed_weight: int = 6) -> CheckResult:
    """Mode anticommutators, Heisenberg relations, ``[lambda_m, phi_n]``, norms."""
    labels = fock.basis_labels(max_weight)
    bad = []
    counts = {"anticommutator": 0, "heisenberg": 0, "lambda_phi": 0, "norm": 0}

    def fail(kind, text):
        if len(bad) < MAX_REPORTED:
            bad.append(f"{kind}: {text}")

    for lab in labels:
        v = _basis(lab)
        for m in range(-mode_range, mode_range + 1):
            for n in range(-mode_range, mode_range + 1):
                lhs = fock.phi_apply(m, fock.phi_apply(n, v)) + fock.phi_apply(n, fock.phi_apply(m, v))
                expect = DyadicSqrt2((-1) ** (m % 2)) if m + n == 0 else ZERO
                counts["anticommutator"] += 1
                if lhs != expect * v:
                    fail("anticommutator", f"m={m} n={n} on |{lab}⟩:\n{lhs.dump()}")

    odd = [m for m in range(-heis_range, heis_range + 1) if m % 2]
    for lab in labels:
        v = _basis(lab)
        lam = {m: fock.lambda_apply(m, v) for m in odd}
        for m in odd:
            for n in odd:
                lhs = fock.lambda_apply(m, lam[n]) - fock.lambda_apply(n, lam[m])
                expect = DyadicSqrt2(m, 0, 1) if m + n == 0 else ZERO
                counts["heisenberg"] += 1
                if lhs != expect * v:
                    fail("heisenberg", f"m={m} n={n} on |{lab}⟩:\n{lhs.dump()}")

    odd_small = [m for m in range(-mixed_m, mixed_m + 1) if m % 2]
    for lab in fock.basis_labels(mixed_weight):
        v = _basis(lab)
        for m in odd_small:
            for n in range(-mixed_n, mixed_n + 1):
                lhs = (fock.lambda_apply(m, fock.phi_apply(n, v))
                       - fock.phi_apply(n, fock.lambda_apply(m, v)))
                counts["lambda_phi"] += 1
                if lhs != fock.phi_apply(n - m, v):
                    fail("lambda_phi", f"m={m} n={n} on |{lab}⟩:\n{lhs.dump()}")

    for mu in strict_partitions_upto(min(max_weight, 6)):
        counts["norm"] += 1
        ket = fock.ket_from_partition(mu)
        if fock.bra_pairing(mu, ket) != ONE:
            fail("norm", f"<{mu}|{mu}> = {fock.bra_pairing(mu, ket)}")

    return CheckResult("algebra", not bad, {"max_weight": max_weight, **counts}, bad)


def check_commutation(order: int) -> CheckResult:
    """Vacuum expectation of ``Gamma_+ Gamma_-`` against ``(z+z')/(z-z')``."""
    expected = [DyadicSqrt2(c) for c in ratio_expansion(order).coeffs]
    closed = vertex.vacuum_expectation_series(order).coeffs
    oracle = fock.vacuum_expectation_oracle(order)
    bad = []
    if closed != expected:
        bad.append(f"intermediate-state sum: {[x.pretty() for x in closed]}")
    if oracle != expected:
        bad.append(f"Fock oracle: {[x.pretty() for x in oracle]}")
    return CheckResult(
        "commutation",
        not bad,
        {"order": order, "series": [int(x) if x.is_integer() else str(x) for x in closed]},
        bad,
    )


def check_path_width(max_volume: int, *, backend=None, threads: int = 1) -> CheckResult:
    report = planepart.path_width_experiment(max_volume, backend=backend, threads=threads)
    cex = [f"{pi}" for pi in report["counterexamples"]]
    details = {k: v for k, v in report.items() if k != "counterexamples"}
    return CheckResult("path_width", report["agree"], details, cex[:MAX_REPORTED])


def check_three_way(order: int, *, backend=None, threads: int = 1) -> CheckResult:
    product = bkp_product_series(order).coeffs
    dp = vertex.scalar_product_series(order).coeffs
    cen = planepart.census(order, backend=backend, threads=threads).coeffs
    head = [1, 2, 6, 16][: order + 1]
    ok = product == dp == cen and product[: len(head)] == head
    bad = [] if ok else [f"product={product}", f"scalar_product={dp}", f"census={cen}"]
    return CheckResult("three_way", ok, {"order": order, "coeffs": product}, bad)


def check_sample_partition() -> CheckResult:
    pi = planepart.SAMPLE_PARTITION
    paths = planepart.h_paths(pi)
    lengths = sorted((p.height, len(p)) for p in paths)
    chain = planepart.plane_partition_to_chain(pi)
    coeff, q_exp = vertex.chain_weight(chain)
    facts = {
        "volume": pi.volume,
        "paths": len(paths),
        "has_3_path_of_5": (3, 5) in lengths,
        "has_6_path_of_2": (6, 2) in lengths,
        "diagonally_strict": planepart.is_diagonally_strict(pi),
        "wide_path": planepart.has_wide_path(pi),
        "census_weight": 1 << len(paths),
        "chain_weight": int(coeff) if coeff.is_integer() else str(coeff),
        "chain_q_exponent": q_exp,
    }
    ok = (facts["volume"] == 39 and facts["paths"] == 6 and facts["has_3_path_of_5"]
          and facts["has_6_path_of_2"] and facts["diagonally_strict"]
          and not facts["wide_path"] and facts["census_weight"] == 64
          and coeff == DyadicSqrt2(64) and q_exp == 39)
    return CheckResult("sample_partition", ok, facts, [] if ok else [pi.ascii()])


BUDGETS = {
    "small": {"series_order": 8, "lemma_weight": 6, "algebra_weight": 6,
              "commutation_order": 6, "path_volume": 8},
    "full": {"series_order": 12, "lemma_weight": 8, "algebra_weight": 8,
             "commutation_order": 10, "path_volume": 10},
}


def run_all(budget: str = "full", *, backend=None, threads: int = 1) -> list[CheckResult]:
    b = BUDGETS[budget]
    return [
        check_three_way(b["series_order"], backend=backend, threads=threads),
        check_lemma1(b["lemma_weight"]),
        check_algebra(b["algebra_weight"]),
        check_commutation(b["commutation_order"]),
        check_path_width(b["path_volume"], backend=backend, threads=threads),
        check_sample_partition(),
    ]
