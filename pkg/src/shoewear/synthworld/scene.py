"""Seeded procedural 2D shoe-and-leg scenes with exact ground truth.

Every scene is rendered three ways from one shared set of polygon masks, so
the class labels, the unworn/worn images, and the shoe-only image agree
pixel-for-pixel by construction:

* unworn: background + floor + full shoes (lining visible in the collar
  opening),
* worn: same scene with legs plugged into the collar openings; the leg band
  covers exactly the region that is lining in the unworn view,
* shoe_only: the full shoes on black (the background-removed input image).

Rasterization is flat-color with anti-aliasing off everywhere; that is what
makes "visible pixels identical between worn and unworn" an exact identity
rather than an approximation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from PIL import Image, ImageDraw

from ..keypoints import PoseAnnotation
from .specs import (
    BACKGROUND_TONES,
    BACKGROUND_VALUES,
    FLOOR_COLORS,
    FLOOR_TYPES,
    GARMENT_COLORS,
    GARMENTS,
    LOGO_COLORS,
    LOGO_GLYPHS,
    SHOE_BASE_COLORS,
    SOLE_TINTS,
    LegSpec,
    ShoeSpec,
    SynthConfig,
    sample_color,
)

LABEL_BACKGROUND = 0
LABEL_VISIBLE = 1
LABEL_WEARABLE = 2

_RIM_SAMPLES = 9


@dataclass
class SceneSample:
    worn: np.ndarray  # (s, s, 3) uint8
    unworn: np.ndarray
    shoe_only: np.ndarray  # X_m analogue: shoes on black
    trimask: np.ndarray  # (s, s) uint8 in {0, 1, 2}
    pose: PoseAnnotation
    tags: dict[str, str]
    seed: int
    shoes: list[ShoeSpec]
    legs: list[LegSpec]
    geometry: dict  # canvas-space polygons and palette, see scene_geometry()


def _poly_mask(canvas: int, pts) -> np.ndarray:
    img = Image.new("L", (canvas, canvas), 0)
    ImageDraw.Draw(img).polygon([(float(x), float(y)) for x, y in pts], fill=1)
    return np.asarray(img, dtype=bool)


def _disc_mask(canvas: int, center, radius: float) -> np.ndarray:
    img = Image.new("L", (canvas, canvas), 0)
    cx, cy = center
    ImageDraw.Draw(img).ellipse([cx - radius, cy - radius, cx + radius, cy + radius], fill=1)
    return np.asarray(img, dtype=bool)


def _to_canvas(spec: ShoeSpec, pts) -> list[tuple[float, float]]:
    ax, ay = spec.anchor
    return [(ax + spec.direction * x, ay - y) for x, y in pts]


class _ShoeGeometry:
    """Local-frame polygons of one shoe plus its keypoints, built once."""

    def __init__(self, spec: ShoeSpec, rng: np.random.Generator):
        L = spec.length
        ts, hh, hb = spec.sole_thickness, spec.heel_height, spec.back_height
        xcb, span = spec.collar_back_x, spec.collar_span
        xcf = xcb + span
        hcf = spec.collar_front_height
        toe_h = spec.toe_height

        def sole_top(x):
            return ts + hh * (1.0 - x / L)

        self.sole_top = sole_top
        self.sole_poly = [(0.0, hh), (L, 0.0), (L, ts), (0.0, hh + ts)]
        self.heel_poly = None
        if hh > 0:
            self.heel_poly = [(0.0, 0.0), (0.22 * L, 0.0), (0.19 * L, hh), (0.0, hh)]

        # Collar rim: the near-side topline dips between the two collar
        # points; the straight chord between them is the far-side rim. The
        # lining lens between the two curves is the wearable area.
        cb = (xcb, sole_top(xcb) + hb)
        cf = (xcf, sole_top(xcf) + hcf)
        ts_ = np.linspace(0.0, 1.0, _RIM_SAMPLES)
        rim = []
        for t in ts_:
            x = xcb + t * span
            chord_y = cb[1] + (cf[1] - cb[1]) * t
            y = chord_y - spec.collar_dip * np.sin(np.pi * t)
            y = min(max(y, sole_top(x) + 1.1 * toe_h), chord_y)
            rim.append((x, y))
        self.rim = rim
        self.cb, self.cf = cb, cf
        self.chord = lambda x: cb[1] + (cf[1] - cb[1]) * (x - xcb) / span

        self.upper_poly = (
            [(0.0, sole_top(0.0)), (0.0, sole_top(0.0) + 0.85 * hb), (0.035 * L, cb[1])]
            + rim
            + [
                (xcf + 0.40 * (0.93 * L - xcf), sole_top(xcf + 0.40 * (0.93 * L - xcf)) + 0.55 * hcf),
                (xcf + 0.72 * (0.93 * L - xcf), sole_top(xcf + 0.72 * (0.93 * L - xcf)) + 1.30 * toe_h),
                (0.93 * L, sole_top(0.93 * L) + toe_h),
                (0.995 * L, sole_top(0.995 * L) + 0.3 * toe_h),
                (0.995 * L, sole_top(0.995 * L)),
            ]
        )

        self.lens_poly = [cb, cf] + rim[::-1]
        up = 0.12 * L
        self.collar_poly = rim + [(xcf, cf[1] + up), (xcb, cb[1] + up)]

        # Band that the leg paints over the opening; its lower edge tracks
        # the rim slightly below so coverage of the lens is strict.
        eps = 0.02 * L
        top = 0.45 * L
        self.plug_poly = [(x, y - eps) for x, y in rim] + [(xcf, cf[1] + top), (xcb, cb[1] + top)]
        self.plug_top = ((xcb, cb[1] + top), (xcf, cf[1] + top))

        rim_floor = min(y - sole_top(x) for x, y in rim)
        ankle_x = xcb + span * (0.5 + rng.uniform(-0.08, 0.08))
        self.keypoints = {
            "ankle": (ankle_x, self.chord(ankle_x) + rng.uniform(0.02, 0.06) * L),
            "heel": (0.09 * L, sole_top(0.09 * L) + rng.uniform(0.07, 0.12) * L),
            "big_toe": (0.85 * L, sole_top(0.85 * L) + toe_h * rng.uniform(0.35, 0.55)),
            "small_toe": (0.73 * L, sole_top(0.73 * L) + toe_h * rng.uniform(0.5, 0.75)),
        }

        # Logo sits under the rim dip on the side panel, clipped to the upper.
        lx = spec.logo_center[0]
        self.logo_center = (lx, sole_top(lx) + rim_floor * rng.uniform(0.30, 0.55))
        self.logo_size = min(spec.logo_size, 0.38 * rim_floor)


def _logo_masks(canvas: int, spec: ShoeSpec, geom: _ShoeGeometry) -> np.ndarray:
    cx, cy = _to_canvas(spec, [geom.logo_center])[0]
    r = geom.logo_size
    if spec.logo_glyph == "disc":
        return _disc_mask(canvas, (cx, cy), r)
    if spec.logo_glyph == "bar":
        pts = [(cx - 1.6 * r, cy - 0.5 * r), (cx + 1.6 * r, cy - 0.9 * r), (cx + 1.6 * r, cy - 0.1 * r), (cx - 1.6 * r, cy + 0.3 * r)]
        return _poly_mask(canvas, pts)
    # chevron: two slanted bars
    m1 = _poly_mask(canvas, [(cx - 1.5 * r, cy + r), (cx, cy - r), (cx + 0.5 * r, cy - r), (cx - r, cy + r)])
    m2 = _poly_mask(canvas, [(cx, cy + r), (cx + 1.5 * r, cy - r), (cx + 2.0 * r, cy - r), (cx + 0.5 * r, cy + r)])
    return m1 | m2


def _sample_shoes(rng: np.random.Generator, cfg: SynthConfig, two: bool) -> list[ShoeSpec]:
    c = cfg.canvas
    L = c * rng.uniform(*cfg.shoe_length_range)
    direction = 1 if rng.random() < 0.5 else -1
    heel = rng.uniform(0.08, 0.20) * L if rng.random() < cfg.heel_prob else 0.0
    base = sample_color(rng, SHOE_BASE_COLORS[rng.integers(len(SHOE_BASE_COLORS))])
    sole = sample_color(rng, (SOLE_TINTS[rng.integers(2)], (8, 8, 8)))
    lining = tuple(int(np.clip(v * 0.30 + 12, 0, 255)) for v in base)
    hb = L * rng.uniform(0.30, 0.42)
    hcf = hb * rng.uniform(0.60, 0.78)
    shape = dict(
        direction=direction,
        length=L,
        sole_thickness=L * rng.uniform(0.08, 0.15),
        heel_height=heel,
        back_height=hb,
        collar_back_x=L * rng.uniform(0.10, 0.16),
        collar_span=L * rng.uniform(0.32, 0.44),
        collar_front_height=hcf,
        collar_dip=hcf * rng.uniform(0.45, 0.70),
        toe_height=min(L * rng.uniform(0.13, 0.22), 0.5 * hcf),
        base_color=base,
        sole_color=sole,
        lining_color=lining,
        logo_glyph=LOGO_GLYPHS[rng.integers(len(LOGO_GLYPHS))],
        logo_color=sample_color(rng, (LOGO_COLORS[rng.integers(2)], (8, 8, 8))),
        logo_center=(L * rng.uniform(0.30, 0.52), 0.0),  # y resolved by geometry
        logo_size=L * rng.uniform(0.045, 0.07),
    )

    margin = 0.04 * c
    ground = c * rng.uniform(*cfg.ground_range)
    if two:
        gap = rng.uniform(0.35, 0.60) * L
        left_edge = rng.uniform(margin, c - margin - (2 * L + gap))
        edges = [left_edge, left_edge + L + gap]
        sides = ["left", "right"]  # leftmost shoe on canvas is the left foot
    else:
        edges = [rng.uniform(margin, c - margin - L)]
        sides = ["left" if rng.random() < 0.5 else "right"]

    shoes = []
    for side, edge in zip(sides, edges):
        anchor_x = edge if direction == 1 else edge + L
        shoes.append(ShoeSpec(side=side, anchor=(anchor_x, ground), **shape))
    return shoes


def _sample_leg(rng: np.random.Generator, cfg: SynthConfig, shoe: ShoeSpec, ankle, garment) -> LegSpec:
    c = cfg.canvas
    d = shoe.direction
    calf_len = c * rng.uniform(*cfg.calf_length_range)
    thigh_len = calf_len * rng.uniform(*cfg.thigh_ratio_range)
    for attempt in range(40):
        shrink = 1.0 / (1.0 + 0.15 * attempt)
        t1 = d * rng.uniform(*cfg.calf_tilt_range) * shrink
        t2 = t1 - d * rng.uniform(*cfg.knee_bend_range) * shrink
        leg = LegSpec(
            side=shoe.side,
            ankle=tuple(ankle),
            calf_length=calf_len,
            thigh_length=thigh_len,
            calf_angle=t1,
            hip_angle=t2,
            garment_color=garment,
            plug_width=shoe.collar_span,
        )
        hx, hy = leg.hip()
        kx, _ = leg.knee()
        if 0.02 * c < hx < 0.98 * c and hy > 0.02 * c and 0.02 * c < kx < 0.98 * c:
            return leg
    leg.calf_angle = 0.0
    leg.hip_angle = 0.0
    return leg


def _leg_mask(canvas: int, leg: LegSpec, plug_canvas_poly, plug_top_canvas) -> np.ndarray:
    mask = _poly_mask(canvas, plug_canvas_poly)
    knee = leg.knee()
    hip = leg.hip()
    a, b = plug_top_canvas

    def quad(p0, p1, q, half_w):
        qx, qy = q
        mx, my = (p0[0] + p1[0]) / 2, (p0[1] + p1[1]) / 2
        ux, uy = qx - mx, qy - my
        n = max(np.hypot(ux, uy), 1e-9)
        px, py = -uy / n * half_w, ux / n * half_w
        return [p0, p1, (qx + px, qy + py), (qx - px, qy - py)]

    w_knee = leg.plug_width * 0.95
    mask |= _poly_mask(canvas, quad(a, b, knee, w_knee / 2))
    mask |= _disc_mask(canvas, knee, w_knee * 0.48)
    w_hip = w_knee * 1.25
    kx, ky = knee
    perp = np.array([hip[1] - ky, kx - hip[0]])
    perp = perp / max(np.linalg.norm(perp), 1e-9)
    k0 = (kx + perp[0] * w_knee / 2, ky + perp[1] * w_knee / 2)
    k1 = (kx - perp[0] * w_knee / 2, ky - perp[1] * w_knee / 2)
    h0 = (hip[0] + perp[0] * w_hip / 2, hip[1] + perp[1] * w_hip / 2)
    h1 = (hip[0] - perp[0] * w_hip / 2, hip[1] - perp[1] * w_hip / 2)
    mask |= _poly_mask(canvas, [k0, k1, h1, h0])
    # torso stub continuing out of frame above the hip
    tw = w_hip * 1.5
    mask |= _poly_mask(canvas, [(hip[0] - tw / 2, hip[1]), (hip[0] + tw / 2, hip[1]), (hip[0] + tw / 2, hip[1] - 0.2 * canvas), (hip[0] - tw / 2, hip[1] - 0.2 * canvas)])
    mask |= _disc_mask(canvas, hip, w_hip * 0.52)
    return mask


def sample_scene(seed: int, config: SynthConfig | None = None) -> SceneSample:
    """Fully deterministic scene draw for one integer seed."""
    cfg = config or SynthConfig()
    c = cfg.canvas
    rng = np.random.default_rng(np.random.SeedSequence(seed))

    tags = {
        "floor": FLOOR_TYPES[rng.integers(len(FLOOR_TYPES))],
        "background": BACKGROUND_TONES[rng.integers(len(BACKGROUND_TONES))],
        "count": "two_shoes" if rng.random() < cfg.two_shoe_prob else "one_shoe",
        "garment": GARMENTS[rng.integers(len(GARMENTS))],
    }
    bg_v, bg_j = BACKGROUND_VALUES[tags["background"]]
    bg = tuple(int(np.clip(bg_v + rng.integers(-bg_j, bg_j + 1) + rng.integers(-4, 5), 0, 255)) for _ in range(3))
    floor_color = sample_color(rng, FLOOR_COLORS[tags["floor"]])
    garment = sample_color(rng, GARMENT_COLORS[tags["garment"]])

    shoes = _sample_shoes(rng, cfg, two=tags["count"] == "two_shoes")
    geoms = [_ShoeGeometry(s, rng) for s in shoes]

    ground_y = shoes[0].anchor[1]
    floor_mask = _poly_mask(c, [(0, ground_y), (c, ground_y), (c, c), (0, c)])

    # Per-shoe ordered (mask, color, label) paint lists.
    shoe_layers = []
    kp_canvas = []
    for spec, geom in zip(shoes, geoms):
        layers = [(_poly_mask(c, _to_canvas(spec, geom.lens_poly)), spec.lining_color, LABEL_WEARABLE)]
        if geom.heel_poly is not None:
            layers.append((_poly_mask(c, _to_canvas(spec, geom.heel_poly)), spec.sole_color, LABEL_VISIBLE))
        layers.append((_poly_mask(c, _to_canvas(spec, geom.sole_poly)), spec.sole_color, LABEL_VISIBLE))
        upper_mask = _poly_mask(c, _to_canvas(spec, geom.upper_poly))
        layers.append((upper_mask, spec.base_color, LABEL_VISIBLE))
        layers.append((_logo_masks(c, spec, geom) & upper_mask, spec.logo_color, LABEL_VISIBLE))
        shoe_layers.append(layers)
        kp_canvas.append({k: _to_canvas(spec, [v])[0] for k, v in geom.keypoints.items()})

    legs = [_sample_leg(rng, cfg, spec, kp["ankle"], garment) for spec, kp in zip(shoes, kp_canvas)]
    leg_masks = [
        _leg_mask(c, leg, _to_canvas(spec, geom.plug_poly), _to_canvas(spec, list(geom.plug_top)))
        for leg, spec, geom in zip(legs, shoes, geoms)
    ]

    def compose(background_color, with_floor: bool, with_legs: bool, shoes_visible_only: bool):
        rgb = np.empty((c, c, 3), dtype=np.uint8)
        rgb[:] = background_color
        labels = np.zeros((c, c), dtype=np.uint8)
        if with_floor:
            rgb[floor_mask] = floor_color
        if with_legs:
            for lm, leg in zip(leg_masks, legs):
                rgb[lm] = leg.garment_color
        for layers in shoe_layers:
            for mask, color, label in layers:
                if shoes_visible_only and label == LABEL_WEARABLE:
                    continue
                rgb[mask] = color
                labels[mask] = label
        return rgb, labels

    unworn, trimask = compose(bg, True, False, False)
    worn, _ = compose(bg, True, True, True)
    shoe_only, _ = compose((0, 0, 0), False, False, False)

    pose = PoseAnnotation(image_size=c)
    for spec, kp, leg in zip(shoes, kp_canvas, legs):
        side = spec.side
        pose.set(f"{side}_ankle", *kp["ankle"])
        pose.set(f"{side}_heel", *kp["heel"])
        pose.set(f"{side}_big_toe", *kp["big_toe"])
        pose.set(f"{side}_small_toe", *kp["small_toe"])
        pose.set(f"{side}_knee", *leg.knee())
        pose.set(f"{side}_hip", *leg.hip())

    geometry = {
        "canvas": c,
        "ground_y": float(ground_y),
        "tags": dict(tags),
        "colors": {
            "background": list(bg),
            "floor": list(floor_color),
            "garment": list(garment),
            "shoe_base": [list(s.base_color) for s in shoes],
        },
        "shoes": [
            {
                "side": spec.side,
                "direction": spec.direction,
                "anchor": [float(spec.anchor[0]), float(spec.anchor[1])],
                "length": float(spec.length),
                "heel_height": float(spec.heel_height),
                "collar_span": float(spec.collar_span),
                "collar_polygon": [[float(x), float(y)] for x, y in _to_canvas(spec, geom.collar_poly)],
                "silhouette_polygon": [[float(x), float(y)] for x, y in _silhouette(spec, geom)],
                "wearable_polygon": [[float(x), float(y)] for x, y in _to_canvas(spec, geom.lens_poly)],
            }
            for spec, geom in zip(shoes, geoms)
        ],
        "legs": [
            {
                "side": leg.side,
                "ankle": [float(leg.ankle[0]), float(leg.ankle[1])],
                "calf_length": float(leg.calf_length),
                "thigh_length": float(leg.thigh_length),
                "calf_angle": float(leg.calf_angle),
                "hip_angle": float(leg.hip_angle),
            }
            for leg in legs
        ],
    }

    return SceneSample(
        worn=worn,
        unworn=unworn,
        shoe_only=shoe_only,
        trimask=trimask,
        pose=pose,
        tags=tags,
        seed=seed,
        shoes=shoes,
        legs=legs,
        geometry=geometry,
    )


def _silhouette(spec: ShoeSpec, geom: _ShoeGeometry) -> list[tuple[float, float]]:
    """Convex hull of the shoe body in canvas coordinates."""
    pts = geom.upper_poly + geom.sole_poly + (geom.heel_poly or [])
    pts = np.array(_to_canvas(spec, pts))
    hull = _convex_hull(pts)
    return [tuple(p) for p in hull]


def _convex_hull(pts: np.ndarray) -> np.ndarray:
    pts = pts[np.lexsort((pts[:, 1], pts[:, 0]))]

    def half(points):
        out = []
        for p in points:
            while len(out) >= 2 and np.cross(out[-1] - out[-2], p - out[-2]) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = half(pts)
    upper = half(pts[::-1])
    return np.array(lower[:-1] + upper[:-1])


def point_in_polygon(point, polygon) -> bool:
    """Even-odd rule; boundary points count as inside for our tolerances."""
    x, y = point
    inside = False
    poly = list(polygon)
    n = len(poly)
    for i in range(n):
        x0, y0 = poly[i]
        x1, y1 = poly[(i + 1) % n]
        if (y0 > y) != (y1 > y):
            t = (y - y0) / (y1 - y0)
            if x < x0 + t * (x1 - x0):
                inside = not inside
    return inside
