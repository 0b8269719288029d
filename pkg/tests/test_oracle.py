import itertools

import pytest

from lozgap.errors import ResourceLimitError, SymmetryError
from lozgap.oracle import (
    Tiling,
    count_symmetric_tilings,
    count_tilings,
    enumerate_tilings,
    validate_region_invariants,
)
from lozgap.regions import (
    Cell,
    HexagonSpec,
    RegionLattice,
    RegionSpec,
    build_hexagon,
    build_region,
)


def single_left(free: bool) -> RegionLattice:
    cell = Cell("L", 0, 0)
    free_edges = frozenset({(cell, "e")}) if free else frozenset()
    return RegionLattice(frozenset({cell}), free_edges)


def test_single_cell_with_free_edge_is_forced_protrusion():
    assert count_tilings(single_left(True)) == 1
    (t,) = enumerate_tilings(single_left(True), cap=10)
    assert not t.lozenges and len(t.protrusions) == 1


def test_single_cell_without_free_edge_uncoverable():
    assert count_tilings(single_left(False)) == 0
    assert enumerate_tilings(single_left(False), cap=10) == []


def test_empty_region():
    empty = RegionLattice(frozenset(), frozenset())
    assert count_tilings(empty) == 1
    assert enumerate_tilings(empty, cap=10) == [Tiling(frozenset(), frozenset())]


def test_two_cell_rhombus_forced():
    cells = frozenset({Cell("L", 0, 0), Cell("R", 0, 0)})
    lat = RegionLattice(cells, frozenset())
    tilings = enumerate_tilings(lat, cap=10)
    assert count_tilings(lat) == len(tilings) == 1
    assert tilings[0].lozenges == frozenset({cells})


def test_reference_trapezoid_count():
    lat = build_region(RegionSpec(2, 1, 0, (1, 2)))
    assert count_tilings(lat) == 10
    assert len(enumerate_tilings(lat, cap=100)) == 10


def test_count_matches_enumeration_on_grid():
    for n, x, y in itertools.product(range(0, 3), range(0, 3), (-1, 0, 1)):
        for k in range(n + 1):
            for kept in itertools.combinations(range(1, n + 1), k):
                lat = build_region(RegionSpec(n, x, y, kept))
                count = count_tilings(lat)
                assert count == len(enumerate_tilings(lat, cap=200_000))


def test_each_tiling_covers_every_cell_once():
    lat = build_region(RegionSpec(2, 1, 0, (2,)))
    for t in enumerate_tilings(lat, cap=1000):
        covered = list(c for pair in t.lozenges for c in pair) + [
            c for c, _ in t.protrusions
        ]
        assert sorted(covered) == sorted(lat.cells)
        assert all((c, side) in lat.free_edges for c, side in t.protrusions)


def test_free_boundary_decomposition():
    # the free count equals the sum, over protrusion patterns, of constrained
    # counts with the protruding cells deleted
    for spec in (RegionSpec(2, 1, 0, (1, 2)), RegionSpec(2, 0, 1, (1,)), RegionSpec(1, 2, 0, (1,))):
        lat = build_region(spec)
        assert lat.cell_count() <= 30
        free_cells = sorted(lat.free_cells())
        total = 0
        for r in range(len(free_cells) + 1):
            for removed in itertools.combinations(free_cells, r):
                total += count_tilings(lat.without_cells(removed).constrained())
        assert total == count_tilings(lat)


def test_mirror_invariance():
    for spec in (RegionSpec(2, 1, 0, (1, 2)), RegionSpec(3, 0, -1, (2, 3))):
        lat = build_region(spec)
        assert count_tilings(lat.mirrored()) == count_tilings(lat)


def test_hexagon_222_has_twenty_tilings():
    lat = build_hexagon(HexagonSpec("even", 1, 1))
    tilings = enumerate_tilings(lat, cap=100)
    assert count_tilings(lat) == len(tilings) == 20


def test_symmetric_count_no_filter_equals_plain_count():
    lat = build_hexagon(HexagonSpec("even", 1, 1))
    assert count_symmetric_tilings(lat, False, False) == count_tilings(lat)


def test_symmetric_count_examples():
    from lozgap.exactcount import ssc_hexagon_count

    lat = build_hexagon(HexagonSpec("even", 1, 1))
    assert count_symmetric_tilings(lat, True, True) == 2
    spec = HexagonSpec("even", 2, 1, (1,))
    assert count_symmetric_tilings(build_hexagon(spec), True, True) == ssc_hexagon_count(spec)
    spec = HexagonSpec("odd", 2, 0, (1,))
    assert count_symmetric_tilings(build_hexagon(spec), True, True) == ssc_hexagon_count(spec)


def test_symmetry_request_on_asymmetric_region():
    lat = build_region(RegionSpec(2, 1, 0, (1, 2)))
    with pytest.raises(SymmetryError):
        count_symmetric_tilings(lat, True, True)


def test_resource_guards():
    lat = build_region(RegionSpec(3, 2, 1, (1, 2, 3)))
    with pytest.raises(ResourceLimitError):
        count_tilings(lat, max_cells=5)
    with pytest.raises(ResourceLimitError):
        count_tilings(lat, max_frontier=2)
    with pytest.raises(ResourceLimitError):
        enumerate_tilings(lat, cap=3)


def test_structural_invariants():
    for spec in (RegionSpec(3, 1, 1, (1, 3)), RegionSpec(2, 2, -1, (2,))):
        validate_region_invariants(build_region(spec))
