"""Signed image configurations of a gap near straight boundaries, and the
distance-product predictions they induce.

Positions live in the ring Q[sqrt(3)]: a coordinate is r + s*sqrt(3) with
rational r, s, stored exactly and converted to float only when a distance
or a prediction is finally evaluated.  The sign rule for images: reflecting
across a constrained (zig-zag) line preserves the charge, reflecting across
a free (lattice-line) boundary negates it.

For the 90-degree angle with constrained horizontal side l1 and free
vertical side l2, the gap O1 sits at (alpha*sqrt(3), beta) with charge -2;
its image O2 in l1 keeps charge -2, while O3 (image in l2) and O4 (double
image) carry +2.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import DomainError, ValidationError

GEOMETRIES = (
    "half-plane-constrained",
    "half-plane-free",
    "angle-90-mixed",
    "angle-60-constrained",
    "angle-120-constrained",
)


@dataclass(frozen=True)
class QSqrt3:
    """An exact number r + s*sqrt(3)."""

    r: Fraction = Fraction(0)
    s: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "r", Fraction(self.r))
        object.__setattr__(self, "s", Fraction(self.s))

    def __add__(self, other: "QSqrt3") -> "QSqrt3":
        return QSqrt3(self.r + other.r, self.s + other.s)

    def __sub__(self, other: "QSqrt3") -> "QSqrt3":
        return QSqrt3(self.r - other.r, self.s - other.s)

    def __mul__(self, other: "QSqrt3") -> "QSqrt3":
        return QSqrt3(
            self.r * other.r + 3 * self.s * other.s,
            self.r * other.s + self.s * other.r,
        )

    def __neg__(self) -> "QSqrt3":
        return QSqrt3(-self.r, -self.s)

    def scaled(self, t) -> "QSqrt3":
        t = Fraction(t)
        return QSqrt3(self.r * t, self.s * t)

    def is_zero(self) -> bool:
        return self.r == 0 and self.s == 0

    def __float__(self) -> float:
        return float(self.r) + float(self.s) * math.sqrt(3.0)

    def as_pair(self) -> tuple[str, str]:
        return (
            f"{self.r.numerator}/{self.r.denominator}",
            f"{self.s.numerator}/{self.s.denominator}",
        )

    @classmethod
    def from_pair(cls, pair) -> "QSqrt3":
        return cls(Fraction(pair[0]), Fraction(pair[1]))


@dataclass(frozen=True)
class ChargePoint:
    x: QSqrt3
    y: QSqrt3
    charge: int

    def __post_init__(self) -> None:
        if self.charge == 0:
            raise ValidationError("charge must be nonzero")

    def position_float(self) -> tuple[float, float]:
        return (float(self.x), float(self.y))


@dataclass(frozen=True)
class ImageConfig:
    """A gap (or gaps) plus the signed reflections a boundary geometry creates."""

    originals: tuple[ChargePoint, ...]
    images: tuple[ChargePoint, ...]
    geometry: str

    def __post_init__(self) -> None:
        if self.geometry not in GEOMETRIES:
            raise ValidationError(f"unknown geometry {self.geometry!r}")
        if not self.originals:
            raise ValidationError("need at least one original gap")
        total = len(self.originals) + len(self.images)
        if total % len(self.originals) != 0:
            raise ValidationError("image count must be a multiple of the original count")

    def points(self) -> tuple[ChargePoint, ...]:
        return self.originals + self.images

    def copies(self) -> int:
        """Number of copies of each original (1 + images per original)."""
        return (len(self.originals) + len(self.images)) // len(self.originals)

    def charge_multiset(self) -> tuple[int, ...]:
        return tuple(sorted(p.charge for p in self.points()))

    def to_json_dict(self) -> dict:
        def enc(p: ChargePoint) -> dict:
            return {"x": p.x.as_pair(), "y": p.y.as_pair(), "charge": p.charge}

        return {
            "geometry": self.geometry,
            "originals": [enc(p) for p in self.originals],
            "images": [enc(p) for p in self.images],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "ImageConfig":
        def dec(e: dict) -> ChargePoint:
            return ChargePoint(
                QSqrt3.from_pair(e["x"]), QSqrt3.from_pair(e["y"]), int(e["charge"])
            )

        return cls(
            originals=tuple(dec(e) for e in d["originals"]),
            images=tuple(dec(e) for e in d["images"]),
            geometry=d["geometry"],
        )

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json(cls, s: str) -> "ImageConfig":
        return cls.from_json_dict(json.loads(s))


def build_images_90_mixed(alpha, beta) -> ImageConfig:
    """Gap at (alpha*sqrt(3), beta) in the angle with constrained horizontal
    side (the x-axis) and free vertical side (the y-axis)."""
    alpha, beta = Fraction(alpha), Fraction(beta)
    if alpha < 1 or beta < 1:
        raise ValidationError(f"need alpha, beta >= 1, got ({alpha}, {beta})")
    ax = QSqrt3(0, alpha)
    by = QSqrt3(beta)
    o1 = ChargePoint(ax, by, -2)
    o2 = ChargePoint(ax, -by, -2)      # image in the constrained line: same sign
    o3 = ChargePoint(-ax, by, +2)      # image in the free line: opposite sign
    o4 = ChargePoint(-ax, -by, +2)     # double image
    return ImageConfig(originals=(o1,), images=(o2, o3, o4), geometry="angle-90-mixed")


def build_images_half_plane(height, charge: int = -2, boundary: str = "free") -> ImageConfig:
    """A single gap at distance ``height`` above a straight boundary line."""
    height = Fraction(height)
    if height <= 0:
        raise ValidationError(f"gap must sit strictly above the boundary, got {height}")
    if boundary == "free":
        geometry, image_charge = "half-plane-free", -charge
    elif boundary == "constrained":
        geometry, image_charge = "half-plane-constrained", charge
    else:
        raise ValidationError(f"boundary must be 'free' or 'constrained', got {boundary!r}")
    o1 = ChargePoint(QSqrt3(), QSqrt3(height), charge)
    o2 = ChargePoint(QSqrt3(), QSqrt3(-height), image_charge)
    return ImageConfig(originals=(o1,), images=(o2,), geometry=geometry)


def distance_squared(a: ChargePoint, b: ChargePoint) -> QSqrt3:
    """Exact squared Euclidean distance (an element of Q[sqrt(3)])."""
    dx = a.x - b.x
    dy = a.y - b.y
    return dx * dx + dy * dy


def distances(config: ImageConfig) -> dict[tuple[int, int], float]:
    """Pairwise distances keyed by 1-based point indices (i, j), i < j."""
    pts = config.points()
    out: dict[tuple[int, int], float] = {}
    for (i, a), (j, b) in combinations(enumerate(pts, start=1), 2):
        d2 = distance_squared(a, b)
        if d2.is_zero():
            raise DomainError(f"points {i} and {j} coincide")
        out[(i, j)] = math.sqrt(float(d2))
    return out


def distance_product_prediction(config: ImageConfig) -> float:
    """Boundary-correlation prediction from the image distances:

        constant * (prod_{i<j} d(O_i, O_j)^(q_i q_j / 2))^(1/copies)

    where copies is the number of copies of each gap the reflections create
    (4 for the 90-degree angle, 2 for half-planes).  The constant 32/pi is
    known for the 90-degree mixed angle; other geometries are normalized to
    1 and should only be used inside ratios.
    """
    pts = config.points()
    ds = distances(config)
    log_prod = 0.0
    for (i, j), d in ds.items():
        log_prod += 0.5 * pts[i - 1].charge * pts[j - 1].charge * math.log(d)
    constant = 32.0 / math.pi if config.geometry == "angle-90-mixed" else 1.0
    return constant * math.exp(log_prod / config.copies())


def conjecture_ratio(config_a: ImageConfig, config_b: ImageConfig) -> float:
    """Predicted correlation ratio between two gap placements in the same
    boundary geometry (the heat-flow picture's exp(-E)/exp(-E'): divergent
    self-energies and the overall constant cancel in the ratio)."""
    if config_a.geometry != config_b.geometry:
        raise ValidationError(
            f"geometries differ: {config_a.geometry!r} vs {config_b.geometry!r}"
        )
    if config_a.charge_multiset() != config_b.charge_multiset():
        raise ValidationError("charge multisets differ between the two configurations")
    return distance_product_prediction(config_a) / distance_product_prediction(config_b)
