import json

import pytest

from lozgap.errors import GapPlacementError, ValidationError
from lozgap.regions import (
    Cell,
    HexagonSpec,
    RegionLattice,
    RegionSpec,
    build_hexagon,
    build_region,
    gap_cells,
    hexagon_vertices,
    mirror_cell,
    neighbors,
    quarter_reduction,
    region_area,
    trapezoid_vertices,
)


def test_neighbors_are_symmetric():
    for cell in (Cell("L", 0, 0), Cell("R", 3, 1), Cell("L", -5, 1)):
        for b in neighbors(cell):
            assert cell in neighbors(b)


def test_cell_parity_validation():
    with pytest.raises(ValidationError):
        RegionLattice(frozenset({Cell("L", 0, 1)}), frozenset())


def test_trapezoid_side_lengths_n6_x5_y4():
    spec = RegionSpec(6, 5, 4, tuple(range(1, 7)))
    lat = build_region(spec)
    # east free side carries n + x = 11 unit edges, all on column y + 1
    assert len(lat.free_edges) == 11
    assert {c.col for c, _ in lat.free_edges} == {5}
    # bottom zig-zag spans 2n columns west of the corner
    assert lat.strip_range()[0] == -12
    # boundary area equals the cell count
    assert lat.cell_count() == region_area(trapezoid_vertices(6, 5, 4))


def test_degenerate_trapezoid_no_bumps():
    for x in range(0, 3):
        for y in range(-1, 3):
            lat = build_region(RegionSpec(0, x, y, ()))
            assert lat.cell_count() == region_area(trapezoid_vertices(0, x, y))


def test_quarter_hexagon_cells_at_n2():
    # independent hand construction: the y = 0 quarter at n = 2, x = 2 has
    # area (in unit triangles) equal to the shoelace value of its pentagon
    lat = build_region(RegionSpec(2, 2, 0, (1, 2)))
    assert lat.cell_count() == region_area(trapezoid_vertices(2, 2, 0))
    # dents remove one left-pointing cell each
    dented = build_region(RegionSpec(2, 2, 0, (2,)))
    assert dented.cell_count() == lat.cell_count() - 1


def test_build_region_pure_and_deterministic():
    spec = RegionSpec(3, 1, 0, (1, 3))
    a, b = build_region(spec), build_region(spec)
    assert a.cells == b.cells and a.free_edges == b.free_edges


def test_imbalance_counts_protrusions():
    # left minus right = number of kept bumps (forced protrusions per tiling)
    for n, x, y, kept in ((2, 1, 0, (1, 2)), (3, 2, 1, (2,)), (4, 0, -1, (1, 4))):
        lat = build_region(RegionSpec(n, x, y, kept))
        assert lat.imbalance() == -len(kept)


def test_gap_removes_three_left_one_right():
    spec = RegionSpec(4, 4, 0, tuple(range(1, 5)))
    plain = build_region(spec)
    gapped = build_region(RegionSpec(4, 4, 0, tuple(range(1, 5)), gap=(2, 2)))
    assert plain.cell_count() - gapped.cell_count() == 4
    removed = plain.cells - gapped.cells
    assert sorted(c.orient for c in removed) == ["L", "L", "L", "R"]
    # removing the gap raises right-minus-left by 2
    assert gapped.imbalance() == plain.imbalance() + 2


def test_gap_placement_errors():
    with pytest.raises(GapPlacementError):
        build_region(RegionSpec(4, 4, 0, tuple(range(1, 5)), gap=(9, 9)))
    with pytest.raises(GapPlacementError):
        # off-lattice: odd y cannot host integer gap coordinates
        build_region(RegionSpec(4, 4, 1, tuple(range(1, 5)), gap=(2, 2)))
    with pytest.raises(ValidationError):
        RegionSpec(4, 4, 0, (1, 2, 3, 4), gap=(0, 2))


def test_malformed_dent_sets():
    with pytest.raises(ValidationError):
        RegionSpec(3, 1, 0, (2, 1))
    with pytest.raises(ValidationError):
        RegionSpec(3, 1, 0, (1, 5))
    with pytest.raises(ValidationError):
        RegionSpec(-1, 0, 0, ())


def test_hexagon_plain_222():
    lat = build_hexagon(HexagonSpec("even", 1, 1))
    assert lat.cell_count() == 24  # hexagon with all six sides 2
    assert not lat.free_edges
    # symmetric across the vertical axis
    assert frozenset(mirror_cell(c) for c in lat.cells) == lat.cells


def test_hexagon_with_slots_cell_audit():
    # slant sides 4, vertical sides 2, one slot pair: 64 - 8 cells
    lat = build_hexagon(HexagonSpec("even", 2, 1, (1,)))
    assert lat.cell_count() == 56
    # odd parity, n=1, x=0: rhombus of 18 cells minus one slot pair
    lat2 = build_hexagon(HexagonSpec("odd", 1, 0, (1,)))
    assert lat2.cell_count() == 10
    assert all(cell.is_valid() for cell in lat2.cells)


def test_hexagon_area_matches_cells():
    for parity in ("even", "odd"):
        for n in (1, 2):
            for x in (0, 1, 2):
                lat = build_hexagon(HexagonSpec(parity, n, x))
                assert lat.cell_count() == region_area(hexagon_vertices(parity, n, x))


def test_hexagon_slot_validation():
    with pytest.raises(ValidationError):
        HexagonSpec("even", 2, 1, (2, 1))
    with pytest.raises(ValidationError):
        HexagonSpec("even", 2, 1, (3,))
    with pytest.raises(ValidationError):
        HexagonSpec("diagonal", 2, 1, ())


def test_quarter_reduction_examples():
    r = quarter_reduction(HexagonSpec("even", 3, 2, ()))
    assert (r.n, r.y, r.kept_bumps) == (3, -1, (1, 2, 3))
    r = quarter_reduction(HexagonSpec("even", 3, 0, (2,)))
    assert (r.n, r.y, r.kept_bumps) == (3, -1, (1, 3))
    # initial-run slots consume corner bumps: reduced frame, labels shifted
    r = quarter_reduction(HexagonSpec("odd", 4, 1, (1, 2)))
    assert (r.n, r.y, r.kept_bumps) == (2, 4, (1, 2))


def test_quarter_reduction_frames_agree_on_counts():
    # the reduced frame and the unshifted labels in the larger region give
    # identical product-formula counts
    from lozgap.exactcount import product_formula_count

    for x in range(0, 4):
        assert product_formula_count(2, x, 4, (1, 2)) == product_formula_count(
            4, x, 0, (3, 4)
        )
        assert product_formula_count(3, x, 1, (1, 3)) == product_formula_count(
            4, x, -1, (2, 4)
        )


def test_region_spec_json_roundtrip():
    spec = RegionSpec(4, 2, 0, (1, 3), gap=(2, 2))
    again = RegionSpec.from_json(spec.to_json())
    assert again == spec
    d = json.loads(spec.to_json())
    assert set(d) == {"n", "x", "y", "kept_bumps", "gap", "free_east"}
    assert d["gap"] == {"alpha": 2, "beta": 2}

    hspec = HexagonSpec("odd", 3, 1, (2, 3))
    assert HexagonSpec.from_json(hspec.to_json()) == hspec
    assert set(json.loads(hspec.to_json())) == {"parity", "n", "x", "slots"}


def test_gap_cells_shape():
    cells = gap_cells(2, 3, 0)
    assert len(cells) == 4
    assert sorted(c.orient for c in cells) == ["L", "L", "L", "R"]
    # all four belong to the same size-2 triangle: columns span two strips
    assert {c.col for c in cells} == {-3, -2}


def test_mirrored_region_is_valid():
    lat = build_region(RegionSpec(2, 1, 0, (1, 2)))
    mirrored = lat.mirrored()
    assert mirrored.cell_count() == lat.cell_count()
    assert len(mirrored.free_edges) == len(lat.free_edges)
    # free edges flipped to the west side of right-pointing cells
    assert {side for _, side in mirrored.free_edges} == {"w"}
