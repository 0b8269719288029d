"""Triangular-lattice regions: dented trapezoids with a free east side and
hexagons with symmetric triangular holes.

Coordinate conventions
----------------------
The lattice is drawn with one family of lattice lines vertical.  Vertical
lattice lines sit at integer columns ``c`` (horizontal pitch sqrt(3)/2 per
column in lattice units).  Heights are stored *doubled* so that every vertex
is an integer pair: on even columns vertices sit at integer heights, on odd
columns at half-integer heights, hence a vertical unit edge on column ``c``
spans doubled heights ``[m, m+2]`` with ``m == c (mod 2)``.

A unit triangle is identified by its vertical edge:

    Cell('L', c, m)  left-pointing (apex to the west); vertical edge on
                     column c spanning [m, m+2]; apex at (c-1, m+1).
    Cell('R', c, m)  right-pointing; vertical edge on column c; apex at
                     (c+1, m+1).

Edge neighbours:

    L(c, m):  R(c, m)    across the shared vertical edge,
              R(c-1, m+1) across the upper slant,
              R(c-1, m-1) across the lower slant.
    R(c, m):  L(c, m), L(c+1, m+1), L(c+1, m-1).

The dented trapezoid with parameters (n, x, y) is bounded by

  * a bottom zig-zag of 2n unit edges with valleys at (-2j, 0) and bump
    peaks at (1-2j, 1) for j = 1..n (bumps numbered right to left, bump 1
    nearest the southeast corner);
  * a western vertical side of length x on column -2n;
  * a straight north side of 2n+y+1 unit edges climbing to the east;
  * an eastern vertical side of length n+x on column y+1 -- the free
    boundary, through which lozenges may protrude halfway;
  * a southeastern side of y+1 unit edges joining (0, 0) to the bottom of
    the east side (empty when y = -1).

A dent at bump j removes Cell('L', 2-2j, 0), the cell whose apex is the
peak of bump j.  A gap with parameters (alpha, beta) removes the side-2
left-pointing triangle whose apex is the vertex (y - 2*alpha, 2*beta): its
top-side midpoint lies at orthogonal distance alpha*sqrt(3) west of the
free boundary line and beta lattice units above the line through the
zig-zag peaks.  Integer gap coordinates land on the lattice only when y is
even; the correlation regions always have y = 0.

Hexagons are centred on their vertical symmetry axis (column 0).  The
even hexagon with slant sides 2n and vertical sides 2x has its horizontal
symmetry axis at height 0; the odd hexagon (slant sides 2n+1) has it at
height 1/2.  Slot j is the side-2 left-pointing triangle centred on the
horizontal axis whose apex sits at column -2j (even) or -2j-1 (odd), slots
numbered right to left; removing a slot removes it together with its
mirror image in the vertical axis.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

from .errors import GapPlacementError, ValidationError


class Cell(NamedTuple):
    orient: str  # 'L' or 'R'
    col: int     # column carrying the cell's vertical edge
    low: int     # doubled height of the vertical edge's lower endpoint

    def is_valid(self) -> bool:
        return self.orient in ("L", "R") and (self.col - self.low) % 2 == 0


def neighbors(cell: Cell) -> tuple[Cell, Cell, Cell]:
    """The three edge-neighbours of a cell (independent of any region)."""
    o, c, m = cell
    if o == "L":
        return (Cell("R", c, m), Cell("R", c - 1, m + 1), Cell("R", c - 1, m - 1))
    return (Cell("L", c, m), Cell("L", c + 1, m + 1), Cell("L", c + 1, m - 1))


def strip(cell: Cell) -> int:
    """Index of the vertical strip a cell occupies (between columns s, s+1)."""
    return cell.col - 1 if cell.orient == "L" else cell.col


def mirror_cell(cell: Cell, axis_col: int = 0) -> Cell:
    """Reflect a cell across the vertical lattice line at ``axis_col``."""
    o, c, m = cell
    return Cell("R" if o == "L" else "L", 2 * axis_col - c, m)


def flip_cell(cell: Cell, axis_doubled: int) -> Cell:
    """Reflect a cell across the horizontal line at doubled height ``axis_doubled``."""
    o, c, m = cell
    return Cell(o, c, 2 * axis_doubled - m - 2)


# ---------------------------------------------------------------------------
# Specs


@dataclass(frozen=True)
class RegionSpec:
    """Symbolic description of a dented trapezoid, optionally with a gap."""

    n: int
    x: int
    y: int
    kept_bumps: tuple[int, ...]
    gap: tuple[int, int] | None = None  # (alpha, beta)
    free_east: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "kept_bumps", tuple(self.kept_bumps))
        if self.gap is not None:
            object.__setattr__(self, "gap", (int(self.gap[0]), int(self.gap[1])))
        self.validate()

    def validate(self) -> None:
        if self.n < 0 or self.x < 0 or self.y < -1:
            raise ValidationError(
                f"need n >= 0, x >= 0, y >= -1, got (n, x, y) = ({self.n}, {self.x}, {self.y})"
            )
        ks = self.kept_bumps
        if list(ks) != sorted(set(ks)):
            raise ValidationError(f"kept_bumps must be strictly increasing, got {ks}")
        if ks and (ks[0] < 1 or ks[-1] > self.n):
            raise ValidationError(f"kept_bumps must lie in [1, {self.n}], got {ks}")
        if self.gap is not None:
            a, b = self.gap
            if a < 1 or b < 1:
                raise ValidationError(f"gap parameters must be >= 1, got {self.gap}")

    @property
    def dents(self) -> tuple[int, ...]:
        return tuple(j for j in range(1, self.n + 1) if j not in set(self.kept_bumps))

    def to_json_dict(self) -> dict:
        d = {
            "n": self.n,
            "x": self.x,
            "y": self.y,
            "kept_bumps": list(self.kept_bumps),
            "gap": None if self.gap is None else {"alpha": self.gap[0], "beta": self.gap[1]},
            "free_east": self.free_east,
        }
        return d

    @classmethod
    def from_json_dict(cls, d: dict) -> "RegionSpec":
        gap = d.get("gap")
        if gap is not None:
            gap = (int(gap["alpha"]), int(gap["beta"]))
        return cls(
            n=int(d["n"]),
            x=int(d["x"]),
            y=int(d["y"]),
            kept_bumps=tuple(int(k) for k in d.get("kept_bumps", [])),
            gap=gap,
            free_east=bool(d.get("free_east", True)),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json(cls, s: str) -> "RegionSpec":
        return cls.from_json_dict(json.loads(s))


@dataclass(frozen=True)
class HexagonSpec:
    """A hexagon with 2s mirrored side-2 triangular holes on its horizontal axis."""

    parity: str  # 'even' (slant sides 2n) or 'odd' (slant sides 2n+1)
    n: int
    x: int
    slots: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "slots", tuple(self.slots))
        self.validate()

    def validate(self) -> None:
        if self.parity not in ("even", "odd"):
            raise ValidationError(f"parity must be 'even' or 'odd', got {self.parity!r}")
        if self.n < 1 or self.x < 0:
            raise ValidationError(f"need n >= 1 and x >= 0, got (n, x) = ({self.n}, {self.x})")
        ks = self.slots
        if list(ks) != sorted(set(ks)):
            raise ValidationError(f"slots must be strictly increasing, got {ks}")
        if ks and (ks[0] < 1 or ks[-1] > self.n):
            raise ValidationError(f"slots must lie in [1, {self.n}], got {ks}")

    def to_json_dict(self) -> dict:
        return {"parity": self.parity, "n": self.n, "x": self.x, "slots": list(self.slots)}

    @classmethod
    def from_json_dict(cls, d: dict) -> "HexagonSpec":
        return cls(
            parity=d["parity"],
            n=int(d["n"]),
            x=int(d["x"]),
            slots=tuple(int(k) for k in d.get("slots", [])),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json(cls, s: str) -> "HexagonSpec":
        return cls.from_json_dict(json.loads(s))


# ---------------------------------------------------------------------------
# Explicit cell complexes


@dataclass(frozen=True)
class RegionLattice:
    """An explicit set of unit triangles plus the open (free) vertical edges.

    ``free_edges`` holds (cell, side) pairs where side is 'e' for the east
    vertical edge of a left-pointing cell or 'w' for the west vertical edge
    of a right-pointing cell; a lozenge may protrude halfway through such
    an edge.
    """

    cells: frozenset[Cell] = field(default_factory=frozenset)
    free_edges: frozenset[tuple[Cell, str]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        object.__setattr__(self, "cells", frozenset(self.cells))
        object.__setattr__(self, "free_edges", frozenset(self.free_edges))
        for cell in self.cells:
            if not cell.is_valid():
                raise ValidationError(f"cell off the lattice: {cell}")
        for cell, side in self.free_edges:
            if cell not in self.cells:
                raise ValidationError(f"free edge on a cell outside the region: {cell}")
            if (cell.orient, side) not in (("L", "e"), ("R", "w")):
                raise ValidationError(f"free side {side!r} does not match cell {cell}")

    # -- basic queries ------------------------------------------------------

    def cell_count(self) -> int:
        return len(self.cells)

    def imbalance(self) -> int:
        """Number of right-pointing minus left-pointing cells."""
        right = sum(1 for c in self.cells if c.orient == "R")
        return right - (len(self.cells) - right)

    def neighbors_in(self, cell: Cell) -> tuple[Cell, ...]:
        return tuple(b for b in neighbors(cell) if b in self.cells)

    def free_cells(self) -> frozenset[Cell]:
        return frozenset(cell for cell, _ in self.free_edges)

    def sorted_cells(self) -> list[Cell]:
        """Cells in sweep order: west to east by strip, then bottom up."""
        return sorted(self.cells, key=lambda c: (strip(c), c.low))

    def strip_range(self) -> tuple[int, int]:
        ss = [strip(c) for c in self.cells]
        return (min(ss), max(ss))

    def doubled_height_range(self) -> tuple[int, int]:
        ms = [c.low for c in self.cells]
        return (min(ms), max(ms) + 2)

    # -- transformations ----------------------------------------------------

    def mirrored(self, axis_col: int = 0) -> "RegionLattice":
        """The mirror image across a vertical lattice line."""
        cells = frozenset(mirror_cell(c, axis_col) for c in self.cells)
        free = frozenset(
            (mirror_cell(c, axis_col), "w" if s == "e" else "e") for c, s in self.free_edges
        )
        return RegionLattice(cells, free)

    def without_cells(self, removed: Iterable[Cell]) -> "RegionLattice":
        removed = frozenset(removed)
        missing = removed - self.cells
        if missing:
            raise ValidationError(f"cannot remove cells outside the region: {sorted(missing)}")
        return RegionLattice(
            self.cells - removed,
            frozenset((c, s) for c, s in self.free_edges if c not in removed),
        )

    def constrained(self) -> "RegionLattice":
        """The same cell set with every free edge closed."""
        return RegionLattice(self.cells, frozenset())


# ---------------------------------------------------------------------------
# Point-in-polygon on the scaled integer grid


def _inside(px: int, py: int, poly: list[tuple[int, int]]) -> bool:
    # Ray cast east from (px, py); the polygons built here never touch a
    # cell centroid, so no boundary handling is needed.
    crossings = 0
    for i in range(len(poly)):
        x1, y1 = poly[i]
        x2, y2 = poly[(i + 1) % len(poly)]
        if (y1 > py) == (y2 > py):
            continue
        dx, dy = x2 - x1, y2 - y1
        lhs = x1 * dy + dx * (py - y1)
        rhs = px * dy
        if (lhs > rhs) if dy > 0 else (lhs < rhs):
            crossings += 1
    return crossings % 2 == 1


def _cells_in_polygon(vertices: list[tuple[int, int]]) -> set[Cell]:
    """All unit cells whose centroid lies inside the polygon.

    Vertices are (column, doubled height) pairs; centroids are tested in
    3x-scaled coordinates so everything stays in exact integers.
    """
    pts = [p for i, p in enumerate(vertices) if p != vertices[i - 1]]
    if len(pts) < 3:
        return set()
    poly3 = [(3 * c, 3 * m) for c, m in pts]
    cols = [c for c, _ in pts]
    ms = [m for _, m in pts]
    cells: set[Cell] = set()
    for s in range(min(cols), max(cols)):
        for m in range(min(ms) - 2, max(ms) + 1):
            if (m - s) % 2 == 0 and _inside(3 * s + 1, 3 * (m + 1), poly3):
                cells.add(Cell("R", s, m))
            if (m - s) % 2 == 1 and _inside(3 * s + 2, 3 * (m + 1), poly3):
                cells.add(Cell("L", s + 1, m))
    return cells


def region_area(vertices: list[tuple[int, int]]) -> int:
    """Polygon area in unit-triangle units (shoelace on (col, doubled) coords)."""
    pts = [p for i, p in enumerate(vertices) if p != vertices[i - 1]]
    twice = 0
    for i in range(len(pts)):
        x1, y1 = pts[i]
        x2, y2 = pts[(i + 1) % len(pts)]
        twice += x1 * y2 - x2 * y1
    # One unit triangle has shoelace area 1 in these coordinates.
    return abs(twice) // 2


# ---------------------------------------------------------------------------
# Region constructions


def trapezoid_vertices(n: int, x: int, y: int) -> list[tuple[int, int]]:
    """Boundary vertices of the (undented, ungapped) trapezoid, in order."""
    pts: list[tuple[int, int]] = [(0, 0)]
    for j in range(1, n + 1):
        pts.append((1 - 2 * j, 1))   # bump peak
        pts.append((-2 * j, 0))      # valley
    pts.append((-2 * n, 2 * x))                     # top of west side
    pts.append((y + 1, 2 * x + 2 * n + y + 1))      # top of east side
    pts.append((y + 1, y + 1))                      # bottom of east side
    return pts


def dent_cell(j: int) -> Cell:
    """The cell removed by a dent at bump j."""
    return Cell("L", 2 - 2 * j, 0)


def gap_cells(alpha: int, beta: int, y: int) -> tuple[Cell, Cell, Cell, Cell]:
    """The four cells of the side-2 gap at (alpha, beta) in a region of the
    given y (apex vertex at (y - 2*alpha, 2*beta))."""
    c0 = y - 2 * alpha
    m0 = 2 * beta
    return (
        Cell("L", c0 + 1, m0 - 1),
        Cell("R", c0 + 1, m0 - 1),
        Cell("L", c0 + 2, m0),
        Cell("L", c0 + 2, m0 - 2),
    )


def build_region(spec: RegionSpec) -> RegionLattice:
    """Materialize a RegionSpec as an explicit cell complex."""
    spec.validate()
    cells = _cells_in_polygon(trapezoid_vertices(spec.n, spec.x, spec.y))
    for j in spec.dents:
        cells.discard(dent_cell(j))
    if spec.gap is not None:
        alpha, beta = spec.gap
        if spec.y % 2 != 0:
            raise GapPlacementError(
                f"integer gap coordinates are off-lattice for odd y = {spec.y}"
            )
        removed = gap_cells(alpha, beta, spec.y)
        if any(cell not in cells for cell in removed):
            raise GapPlacementError(
                f"gap at (alpha, beta) = ({alpha}, {beta}) does not fit inside the region"
            )
        cells.difference_update(removed)
    free: set[tuple[Cell, str]] = set()
    if spec.free_east:
        east = spec.y + 1
        free = {(c, "e") for c in cells if c.orient == "L" and c.col == east}
    return RegionLattice(frozenset(cells), frozenset(free))


def hexagon_vertices(parity: str, n: int, x: int) -> list[tuple[int, int]]:
    if parity == "even":
        w = 2 * n
        return [
            (-w, -2 * x),
            (-w, 2 * x),
            (0, 2 * x + w),
            (w, 2 * x),
            (w, -2 * x),
            (0, -2 * x - w),
        ]
    w = 2 * n + 1
    return [
        (-w, 1 - 2 * x),
        (-w, 1 + 2 * x),
        (0, 2 * x + w + 1),
        (w, 1 + 2 * x),
        (w, 1 - 2 * x),
        (0, 1 - 2 * x - w),
    ]


def slot_cells(spec: HexagonSpec, j: int) -> tuple[Cell, ...]:
    """Cells of slot j together with its mirror image in the vertical axis."""
    if spec.parity == "even":
        apex_col, apex_m = -2 * j, 0
    else:
        apex_col, apex_m = -2 * j - 1, 1
    hole = (
        Cell("L", apex_col + 1, apex_m - 1),
        Cell("R", apex_col + 1, apex_m - 1),
        Cell("L", apex_col + 2, apex_m),
        Cell("L", apex_col + 2, apex_m - 2),
    )
    mirrored = tuple(mirror_cell(c) for c in hole)
    return tuple(dict.fromkeys(hole + mirrored))


def build_hexagon(spec: HexagonSpec) -> RegionLattice:
    """Materialize a HexagonSpec (constrained boundary, no free edges)."""
    spec.validate()
    cells = _cells_in_polygon(hexagon_vertices(spec.parity, spec.n, spec.x))
    removed: set[Cell] = set()
    for j in spec.slots:
        hole = set(slot_cells(spec, j))
        if hole & removed:
            raise ValidationError(f"slot {j} overlaps a previously removed slot")
        if not hole <= cells:
            raise ValidationError(f"slot {j} does not fit inside the hexagon")
        removed |= hole
    return RegionLattice(frozenset(cells - removed), frozenset())


def quarter_reduction(spec: HexagonSpec) -> RegionSpec:
    """The dented trapezoid whose free-boundary tiling count equals the
    doubly-symmetric tiling count of the holed hexagon.

    With slots k_1 < ... < k_s, let t be the length of the initial run
    k_i = i (t = 0 when k_1 > 1).  Slots 1..t hug the corner where the
    two symmetry axes meet; the forced tiles there turn the quarter into
    a region with t fewer bumps and a southeastern side of length 2t
    (even hexagon) or 2t+1 (odd hexagon), with the surviving bump labels
    shifted down by t.  Counts satisfy the exact identity

        M(D(n - t, x, 2t - 1; {i - t}))  =  M(D(n, x, -1; {i}))

    (and the analogue with y = 2t, 0 for the odd parity), so the
    reduction is count-preserving whichever frame one prefers; this
    function returns the reduced frame, which is the one the oracle's
    doubly-symmetric counts confirm.
    """
    spec.validate()
    slots = spec.slots
    t = 0
    while t < len(slots) and slots[t] == t + 1:
        t += 1
    kept = tuple(i - t for i in range(1, spec.n + 1) if i not in set(slots))
    y = 2 * t - 1 if spec.parity == "even" else 2 * t
    return RegionSpec(n=spec.n - t, x=spec.x, y=y, kept_bumps=kept, gap=None, free_east=True)
