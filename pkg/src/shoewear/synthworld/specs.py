"""Parameter records and palettes for the procedural shoe-and-leg world.

Color families are deliberately separated in RGB so that downstream
image-level checks can tell garment pixels from floor, background, and shoe
material without a trained classifier.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

# ---------------------------------------------------------------------------
# Scene tag vocabulary (the categorical condition fed to the generator stage).

FLOOR_TYPES = ("wood", "stone", "mat")
BACKGROUND_TONES = ("bright", "medium", "dim")
SHOE_COUNTS = ("one_shoe", "two_shoes")
GARMENTS = ("pants", "skin", "sock")

TAG_CATEGORIES = (
    ("floor", FLOOR_TYPES),
    ("background", BACKGROUND_TONES),
    ("count", SHOE_COUNTS),
    ("garment", GARMENTS),
)

# Token table: one id per tag value plus a reserved null token (id 0) used
# when conditions are dropped.
NULL_TOKEN = 0
TAG_TOKENS: dict[str, int] = {}
for _cat, _values in TAG_CATEGORIES:
    for _v in _values:
        TAG_TOKENS[f"{_cat}={_v}"] = len(TAG_TOKENS) + 1
VOCAB_SIZE = len(TAG_TOKENS) + 1
NUM_TAG_SLOTS = len(TAG_CATEGORIES)


def tags_to_tokens(tags: dict[str, str]) -> list[int]:
    """Map a tag dict to the fixed 4-slot token list (floor, bg, count, garment)."""
    tokens = []
    for cat, values in TAG_CATEGORIES:
        v = tags.get(cat)
        if v is None:
            tokens.append(NULL_TOKEN)
            continue
        if v not in values:
            raise ValueError(f"unknown {cat} tag {v!r}; choose from {values}")
        tokens.append(TAG_TOKENS[f"{cat}={v}"])
    return tokens


def null_tokens() -> list[int]:
    return [NULL_TOKEN] * NUM_TAG_SLOTS


# ---------------------------------------------------------------------------
# Color families, as (center RGB, per-channel jitter).

FLOOR_COLORS = {
    "wood": ((150, 102, 58), (25, 20, 15)),
    "stone": ((128, 132, 142), (15, 15, 15)),
    "mat": ((78, 135, 80), (15, 20, 15)),
}

BACKGROUND_VALUES = {"bright": (212, 22), "medium": (140, 20), "dim": (58, 18)}

GARMENT_COLORS = {
    "pants": ((35, 45, 110), (12, 12, 20)),
    "skin": ((215, 165, 130), (15, 15, 12)),
    "sock": ((170, 40, 55), (15, 12, 12)),
}

SHOE_BASE_COLORS = (
    ((225, 195, 45), (15, 15, 15)),  # yellow
    ((230, 125, 35), (12, 15, 12)),  # orange
    ((198, 52, 175), (15, 12, 15)),  # magenta
    ((45, 185, 198), (12, 15, 12)),  # cyan
    ((130, 205, 55), (15, 15, 12)),  # lime
    ((35, 158, 130), (10, 15, 12)),  # teal
)

SOLE_TINTS = ((232, 229, 222), (46, 43, 40))  # light rubber / dark rubber
LOGO_COLORS = ((245, 245, 245), (22, 22, 22))
LOGO_GLYPHS = ("disc", "bar", "chevron")


def sample_color(rng: np.random.Generator, center_jitter) -> tuple[int, int, int]:
    center, jitter = center_jitter
    c = [int(np.clip(center[i] + rng.integers(-jitter[i], jitter[i] + 1), 0, 255)) for i in range(3)]
    return tuple(c)


# ---------------------------------------------------------------------------


@dataclass
class ShoeSpec:
    """One shoe, in a local frame: origin at the heel ground point, +x toward
    the toe, +y up. ``direction`` mirrors it on the canvas (+1 points right)."""

    side: str  # "left" | "right" (which foot)
    direction: int  # +1 or -1
    length: float
    sole_thickness: float
    heel_height: float
    back_height: float  # upper height at the heel counter
    collar_back_x: float
    collar_span: float
    collar_front_height: float
    collar_dip: float
    toe_height: float
    base_color: tuple[int, int, int]
    sole_color: tuple[int, int, int]
    lining_color: tuple[int, int, int]
    logo_glyph: str
    logo_color: tuple[int, int, int]
    logo_center: tuple[float, float]  # local coords
    logo_size: float
    anchor: tuple[float, float] = (0.0, 0.0)  # heel ground point on the canvas

    # Control polylines (local coords), filled in by the geometry builder.
    sole_points: list = field(default_factory=list)
    upper_points: list = field(default_factory=list)


@dataclass
class LegSpec:
    """One leg chained down to its shoe's ankle point (canvas coords, y down).

    Angles are tilts from vertical; ``hip_angle - calf_angle`` is the knee
    bend, kept within [0, 2.6] rad.
    """

    side: str
    ankle: tuple[float, float]
    calf_length: float
    thigh_length: float
    calf_angle: float  # tilt of the ankle->knee segment
    hip_angle: float  # tilt of the knee->hip segment
    garment_color: tuple[int, int, int]
    plug_width: float  # width of the band that fills the collar opening

    def knee(self) -> tuple[float, float]:
        ax, ay = self.ankle
        return (ax + self.calf_length * np.sin(self.calf_angle), ay - self.calf_length * np.cos(self.calf_angle))

    def hip(self) -> tuple[float, float]:
        kx, ky = self.knee()
        return (kx + self.thigh_length * np.sin(self.hip_angle), ky - self.thigh_length * np.cos(self.hip_angle))

    def knee_angle(self) -> float:
        return abs(self.calf_angle - self.hip_angle)


@dataclass
class SynthConfig:
    """Knobs of the procedural world. Defaults target the desk-scale build."""

    canvas: int = 256
    two_shoe_prob: float = 0.5
    shoe_length_range: tuple[float, float] = (0.22, 0.32)  # fraction of canvas
    heel_prob: float = 0.4
    calf_length_range: tuple[float, float] = (0.24, 0.34)
    thigh_ratio_range: tuple[float, float] = (0.8, 1.25)
    calf_tilt_range: tuple[float, float] = (-0.08, 0.30)  # toward shoe forward
    knee_bend_range: tuple[float, float] = (0.0, 0.45)
    ground_range: tuple[float, float] = (0.80, 0.92)
