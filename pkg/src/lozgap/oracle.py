"""Brute-force ground truth: exact tiling counts for small explicit regions.

A lozenge tiling covers every cell exactly once, pairing edge-adjacent
cells; a cell carrying a free edge may instead be covered by a half-lozenge
protruding through that edge.  Counting sweeps the cells strip by strip
from west to east (so a free eastern boundary is handled last) and runs a
profile DP whose state is a bitset over the frontier cells.  Resource
guards are explicit inputs: when a region is too large the functions raise
instead of answering.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .errors import ResourceLimitError, SymmetryError, ValidationError
from .regions import Cell, RegionLattice, flip_cell, mirror_cell, neighbors, strip

DEFAULT_MAX_CELLS = 2000
DEFAULT_MAX_FRONTIER = 64
DEFAULT_ENUM_CAP = 2_000_000


@dataclass(frozen=True)
class Tiling:
    """One tiling: unordered lozenges plus protrusions through free edges."""

    lozenges: frozenset[frozenset[Cell]]
    protrusions: frozenset[tuple[Cell, str]]

    def covered_cells(self) -> frozenset[Cell]:
        cells = {c for pair in self.lozenges for c in pair}
        cells.update(c for c, _ in self.protrusions)
        return frozenset(cells)


def _prepare(
    region: RegionLattice, max_cells: int, max_frontier: int
) -> tuple[list[Cell], list[list[int]], list[list[str]]]:
    cells = region.sorted_cells()
    n = len(cells)
    if n > max_cells:
        raise ResourceLimitError(f"region has {n} cells, guard is {max_cells}")
    index = {c: i for i, c in enumerate(cells)}
    nbrs: list[list[int]] = []
    span = 0
    for i, c in enumerate(cells):
        js = sorted(index[b] for b in neighbors(c) if b in index)
        nbrs.append(js)
        for j in js:
            span = max(span, abs(j - i))
    if span > max_frontier:
        raise ResourceLimitError(f"frontier width {span} exceeds guard {max_frontier}")
    free_sides: list[list[str]] = [[] for _ in range(n)]
    for cell, side in region.free_edges:
        free_sides[index[cell]].append(side)
    return cells, nbrs, free_sides


def count_tilings(
    region: RegionLattice,
    *,
    max_cells: int = DEFAULT_MAX_CELLS,
    max_frontier: int = DEFAULT_MAX_FRONTIER,
) -> int:
    """Exact number of tilings (protrusions allowed through free edges)."""
    cells, nbrs, free_sides = _prepare(region, max_cells, max_frontier)
    n = len(cells)
    states = {0: 1}
    for i in range(n):
        nxt: dict[int, int] = defaultdict(int)
        for mask, ways in states.items():
            if mask & 1:
                nxt[mask >> 1] += ways
                continue
            k = len(free_sides[i])
            if k:
                nxt[mask >> 1] += ways * k
            for j in nbrs[i]:
                if j > i and not (mask >> (j - i)) & 1:
                    nxt[(mask | (1 << (j - i))) >> 1] += ways
        states = dict(nxt)
        if not states:
            return 0
    return states.get(0, 0)


def enumerate_tilings(
    region: RegionLattice,
    cap: int = DEFAULT_ENUM_CAP,
    *,
    max_cells: int = DEFAULT_MAX_CELLS,
    max_frontier: int = DEFAULT_MAX_FRONTIER,
) -> list[Tiling]:
    """The complete list of tilings; raises once more than ``cap`` exist."""
    return list(iter_tilings(region, cap, max_cells=max_cells, max_frontier=max_frontier))


def iter_tilings(
    region: RegionLattice,
    cap: int = DEFAULT_ENUM_CAP,
    *,
    max_cells: int = DEFAULT_MAX_CELLS,
    max_frontier: int = DEFAULT_MAX_FRONTIER,
):
    """Yield every tiling exactly once (bounded by ``cap``)."""
    cells, nbrs, free_sides = _prepare(region, max_cells, max_frontier)
    n = len(cells)
    covered = [False] * n
    pairs: list[tuple[int, int]] = []
    prots: list[tuple[int, str]] = []
    produced = 0

    def emit() -> Tiling:
        return Tiling(
            frozenset(frozenset((cells[i], cells[j])) for i, j in pairs),
            frozenset((cells[i], side) for i, side in prots),
        )

    def rec(i: int):
        nonlocal produced
        while i < n and covered[i]:
            i += 1
        if i == n:
            produced += 1
            if produced > cap:
                raise ResourceLimitError(f"more than {cap} tilings")
            yield emit()
            return
        covered[i] = True
        for side in free_sides[i]:
            prots.append((i, side))
            yield from rec(i + 1)
            prots.pop()
        for j in nbrs[i]:
            if j > i and not covered[j]:
                covered[j] = True
                pairs.append((i, j))
                yield from rec(i + 1)
                pairs.pop()
                covered[j] = False
        covered[i] = False

    yield from rec(0)


def reflect_tiling_cellmap(t: Tiling, cell_map, side_map=lambda s: s) -> Tiling:
    return Tiling(
        frozenset(frozenset(cell_map(c) for c in pair) for pair in t.lozenges),
        frozenset((cell_map(c), side_map(s)) for c, s in t.protrusions),
    )


def count_symmetric_tilings(
    region: RegionLattice,
    horizontal: bool,
    vertical: bool,
    *,
    cap: int = DEFAULT_ENUM_CAP,
    max_cells: int = DEFAULT_MAX_CELLS,
    max_frontier: int = DEFAULT_MAX_FRONTIER,
) -> int:
    """Number of tilings fixed by the requested reflections.

    Implemented by filtering the full enumeration, so it is only usable on
    regions small enough to enumerate.
    """
    if not horizontal and not vertical:
        return count_tilings(region, max_cells=max_cells, max_frontier=max_frontier)
    if not region.cells:
        return 1

    maps = []
    if vertical:
        lo, hi = region.strip_range()
        twice_col = lo + hi + 1
        if twice_col % 2 != 0:
            raise SymmetryError("region has no vertical lattice symmetry axis")
        axis_col = twice_col // 2
        vmap = lambda c: mirror_cell(c, axis_col)  # noqa: E731
        vside = lambda s: "w" if s == "e" else "e"  # noqa: E731
        if frozenset(vmap(c) for c in region.cells) != region.cells:
            raise SymmetryError("region is not symmetric across its vertical axis")
        if frozenset((vmap(c), vside(s)) for c, s in region.free_edges) != region.free_edges:
            raise SymmetryError("free edges are not symmetric across the vertical axis")
        maps.append((vmap, vside))
    if horizontal:
        mlo, mhi = region.doubled_height_range()
        axis2 = (mlo + mhi) // 2 if (mlo + mhi) % 2 == 0 else None
        if axis2 is None:
            raise SymmetryError("region has no horizontal lattice symmetry axis")
        hmap = lambda c: flip_cell(c, axis2)  # noqa: E731
        hside = lambda s: s  # noqa: E731
        if frozenset(hmap(c) for c in region.cells) != region.cells:
            raise SymmetryError("region is not symmetric across its horizontal axis")
        if frozenset((hmap(c), s) for c, s in region.free_edges) != region.free_edges:
            raise SymmetryError("free edges are not symmetric across the horizontal axis")
        maps.append((hmap, hside))

    count = 0
    for t in iter_tilings(region, cap, max_cells=max_cells, max_frontier=max_frontier):
        if all(reflect_tiling_cellmap(t, m, sm) == t for m, sm in maps):
            count += 1
    return count


def validate_region_invariants(region: RegionLattice) -> None:
    """Cheap structural checks: symmetric adjacency, free edges on one line."""
    for c in region.cells:
        for b in region.neighbors_in(c):
            if c not in region.neighbors_in(b):
                raise ValidationError(f"asymmetric adjacency between {c} and {b}")
    cols = {c.col for c, _ in region.free_edges}
    if len(cols) > 1:
        raise ValidationError(f"free edges lie on several vertical lines: {sorted(cols)}")
