"""The six acceptance criteria, each at exact tolerance."""

import time

from bkpplane import fock, planepart, vertex
from bkpplane.exactring import DyadicSqrt2
from bkpplane.series import bkp_product_series, ratio_expansion
from bkpplane.verify import check_algebra, check_lemma1


def test_1_three_way_series_agreement(report_line):
    t0 = time.perf_counter()
    product = bkp_product_series(12).coeffs
    dp = vertex.scalar_product_series(12).coeffs
    cen = planepart.census(12, threads=1).coeffs
    elapsed = time.perf_counter() - t0
    ok = (product == dp == cen and product[:4] == [1, 2, 6, 16]
          and all(isinstance(c, int) for c in product) and elapsed < 120)
    report_line(1, ok, f"N=12 product=scalar-product=census={product} ({elapsed:.2f}s)")
    assert ok


def test_2_transition_weights_match_oracle(report_line):
    res = check_lemma1(8)
    d = res.details
    report_line(2, res.passed, f"|mu|<=8 entries={d['entries_compared']} mismatches={d['mismatches']}"
                f" outside-down-set={d['oracle_support_outside_down_set']} sign offset=none")
    assert res.passed, "\n\n".join(res.counterexamples)
    assert d["oracle_support_outside_down_set"] == 0


def test_3_algebra_suite(report_line):
    res = check_algebra(8, mode_range=6, heis_range=5)
    d = res.details
    report_line(3, res.passed, f"weight<=8 anticommutator={d['anticommutator']} "
                f"heisenberg={d['heisenberg']} lambda_phi={d['lambda_phi']} failures={len(res.counterexamples)}")
    assert res.passed, "\n\n".join(res.counterexamples)


def test_4_commutation_vacuum_check(report_line):
    expected = [DyadicSqrt2(c) for c in ratio_expansion(10).coeffs]
    closed = vertex.vacuum_expectation_series(10).coeffs
    oracle = fock.vacuum_expectation_oracle(10)
    ok = closed == oracle == expected and expected == [DyadicSqrt2(1)] + [DyadicSqrt2(2)] * 10
    report_line(4, ok, f"order 10 <0|G+G-|0> = {[int(x) for x in closed]}")
    assert ok


def test_5_path_width_equivalence(report_line):
    rep = planepart.path_width_experiment(10)
    ok = rep["agree"] and not rep["counterexamples"]
    report_line(5, ok, f"volume<=10 checked={rep['checked']} strict={rep['diagonally_strict']} "
                f"counterexamples={len(rep['counterexamples'])}")
    assert ok, f"counterexamples: {rep['counterexamples']}"


def test_6_sample_partition_regression(report_line, sample_partition):
    paths = planepart.h_paths(sample_partition)
    sizes = {(p.height, len(p)) for p in paths}
    ok = (sample_partition.volume == 39 and len(paths) == 6 and (3, 5) in sizes and (6, 2) in sizes
          and planepart.is_diagonally_strict(sample_partition) and 2 ** len(paths) == 64)
    report_line(6, ok, f"volume={sample_partition.volume} paths={len(paths)} weight={2 ** len(paths)}")
    assert ok
