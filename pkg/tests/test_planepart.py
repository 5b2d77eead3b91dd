import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bkpplane import kernels
from bkpplane.partitions import StrictPartition, interlaces
from bkpplane.planepart import (
    InterlacingChain,
    PlanePartition,
    census,
    census_listing,
    chain_to_plane_partition,
    diagonal_slices,
    h_paths,
    has_wide_path,
    is_diagonally_strict,
    iter_plane_partitions,
    path_width_experiment,
    plane_partition_to_chain,
    volume,
)
from bkpplane.series import macmahon_series

SP = StrictPartition
PP = PlanePartition
ALL8 = list(iter_plane_partitions(8))


def test_volume(sample_partition):
    assert volume(sample_partition) == 39
    assert volume(PP()) == 0
    assert volume(PP([[1]])) == 1


def test_slices(sample_partition):
    sl = diagonal_slices(sample_partition)
    assert sl[0] == (6, 4, 3)
    assert sl[-1] == (5, 3)
    assert diagonal_slices(PP()) == {}


def test_diagonal_strictness(sample_partition):
    assert is_diagonally_strict(sample_partition)
    assert not is_diagonally_strict(PP([[1, 1], [1, 1]]))
    assert is_diagonally_strict(PP([[3], [2], [2], [1]]))


def test_paths(sample_partition):
    paths = h_paths(sample_partition)
    assert len(paths) == 6
    sizes = {(p.height, len(p)) for p in paths}
    assert (3, 5) in sizes and (6, 2) in sizes
    assert h_paths(PP()) == []


def test_wide_paths(sample_partition):
    assert has_wide_path(PP([[1, 1], [1, 1]]))
    assert not has_wide_path(sample_partition)
    for pi in ALL8:
        if sum(1 for _ in pi.cells()) <= 3:
            assert not has_wide_path(pi)


def test_enumeration_counts_match_macmahon():
    counts = [0] * 9
    for pi in ALL8:
        counts[pi.volume] += 1
    assert counts == macmahon_series(8).coeffs
    assert len(set(ALL8)) == len(ALL8)


def test_census_examples():
    assert census(0) == [1]
    assert census(1) == [1, 2]
    # volume 2: three shapes of weight 2; volume 3: 2+4+4+2+2+2
    assert census(3) == [1, 2, 6, 16]


def test_sample_partition_contributes_64(sample_partition):
    assert 2 ** len(h_paths(sample_partition)) == 64


def test_census_listing_matches_series():
    listing = census_listing(6)
    totals = [0] * 7
    for e in listing:
        totals[e["volume"]] += e["weight"]
    assert totals == census(6).coeffs


def test_path_width_equivalence():
    for pi in iter_plane_partitions(10):
        assert is_diagonally_strict(pi) == (not has_wide_path(pi)), pi


def test_path_width_report():
    rep = path_width_experiment(7)
    assert rep["agree"] and rep["counterexamples"] == []
    assert rep["checked"] == sum(macmahon_series(7).coeffs)


def test_adjacent_slices_interlace():
    for pi in ALL8:
        if not is_diagonally_strict(pi):
            continue
        sl = diagonal_slices(pi)
        for d in sl:
            if d + 1 in sl:
                smaller, larger = (sl[d + 1], sl[d]) if d >= 0 else (sl[d], sl[d + 1])
                assert interlaces(smaller, larger)


def test_single_box_chain():
    chain = plane_partition_to_chain(PP([[1]]))
    assert chain.slices == (SP(), SP((1,)), SP()) and chain.center == 1
    assert chain_to_plane_partition(chain) == PP([[1]])


def test_sample_partition_chain(sample_partition):
    chain = plane_partition_to_chain(sample_partition)
    assert chain[0] == SP((6, 4, 3))
    assert chain_to_plane_partition(chain) == sample_partition


def test_round_trip_all_small():
    for pi in ALL8:
        if is_diagonally_strict(pi):
            chain = plane_partition_to_chain(pi)
            assert chain_to_plane_partition(chain) == pi
            assert plane_partition_to_chain(chain_to_plane_partition(chain)) == chain


def test_chain_padding_is_trimmed():
    padded = InterlacingChain((SP(), SP(), SP((1,)), SP(), SP()), 2)
    assert padded.trimmed() == InterlacingChain((SP(), SP((1,)), SP()), 1)
    assert chain_to_plane_partition(padded) == PP([[1]])


def test_backward_map_rejects_wide():
    with pytest.raises(ValueError):
        plane_partition_to_chain(PP([[1, 1], [1, 1]]))


def test_invalid_chain_rejected():
    with pytest.raises(ValueError):
        InterlacingChain((SP(), SP((1,)), SP((3,)), SP()), 1)
    with pytest.raises(ValueError):
        InterlacingChain((SP((1,)), SP()), 0)


def test_invalid_plane_partition():
    with pytest.raises(ValueError):
        PP([[1, 2]])
    with pytest.raises(ValueError):
        PP([[1], [2]])


def test_json_and_ascii(sample_partition):
    assert PP.from_json(sample_partition.to_json()) == sample_partition
    assert json.loads(sample_partition.to_json()) == [[6, 6, 3, 2], [5, 4, 3, 1], [3, 3, 3]]
    art = sample_partition.ascii().splitlines()
    assert art[1] == "| 6 | 6 | 3 | 2 |"


@given(st.sampled_from([p for p in ALL8 if is_diagonally_strict(p)]))
def test_transpose_preserves_census_data(pi):
    t = pi.transpose()
    assert t.transpose() == pi
    assert is_diagonally_strict(t) and len(h_paths(t)) == len(h_paths(pi))


@pytest.mark.parametrize("strict_only", [True, False])
def test_backends_agree(strict_only):
    tables = {name: fn(9, strict_only) for name, fn in kernels.BACKENDS.items()}
    first = next(iter(tables.values()))
    assert all(t == first for t in tables.values())


def test_threads_do_not_change_results():
    assert kernels.scan(9, True, threads=4) == kernels.scan(9, True, threads=1)
    assert kernels.scan(9, False, backend="python", threads=3) == kernels.scan(9, False, backend="python")


def test_first_rows_are_all_partitions():
    rows = kernels.first_rows(6)
    assert len(rows) == len(set(rows)) == 1 + 1 + 2 + 3 + 5 + 7 + 11


def test_scan_rejects_bad_input():
    for fn in kernels.BACKENDS.values():
        with pytest.raises(ValueError):
            fn(-1)
        with pytest.raises(ValueError):
            fn(5, True, (1, 2))
    with pytest.raises(ValueError):
        kernels.get_scan("fortran")
