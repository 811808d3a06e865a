"""Keypoint containers and the [0, 1] coordinate normalization used by the
pose diffusion stage.

A pose always carries 12 named slots. Missing points are expressed with
``present=False``, never by omission. Two overlapping subsets matter
downstream: the 6 leg points (hips, knees, ankles) that the diffusion model
generates, and the 8 foot points (ankles, heels, toes) that the estimator
predicts. The ankles belong to both.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

KEYPOINT_NAMES = (
    "left_hip",
    "right_hip",
    "left_knee",
    "right_knee",
    "left_ankle",
    "right_ankle",
    "left_heel",
    "right_heel",
    "left_big_toe",
    "right_big_toe",
    "left_small_toe",
    "right_small_toe",
)

LEG_NAMES = ("left_hip", "right_hip", "left_knee", "right_knee", "left_ankle", "right_ankle")
FOOT_NAMES = (
    "left_ankle",
    "right_ankle",
    "left_heel",
    "right_heel",
    "left_big_toe",
    "right_big_toe",
    "left_small_toe",
    "right_small_toe",
)

SUBSETS = {"leg": LEG_NAMES, "foot": FOOT_NAMES, "all": KEYPOINT_NAMES}

# Normalized coordinates of a present point live in [0.1, 1.0]; 0.0 is the
# absence sentinel. Anything under this threshold decodes as absent.
ABSENCE_THRESHOLD = 0.05


@dataclass
class Keypoint2D:
    x: float = 0.0
    y: float = 0.0
    present: bool = False


@dataclass
class PoseAnnotation:
    """All 12 named keypoints of one scene plus the square canvas side."""

    image_size: int
    keypoints: dict[str, Keypoint2D] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for name in KEYPOINT_NAMES:
            self.keypoints.setdefault(name, Keypoint2D())
        extra = set(self.keypoints) - set(KEYPOINT_NAMES)
        if extra:
            raise ValueError(f"unknown keypoint names: {sorted(extra)}")

    def __getitem__(self, name: str) -> Keypoint2D:
        return self.keypoints[name]

    def set(self, name: str, x: float, y: float, present: bool = True) -> None:
        self.keypoints[name] = Keypoint2D(float(x), float(y), present)

    def present_names(self) -> list[str]:
        return [n for n in KEYPOINT_NAMES if self.keypoints[n].present]

    def scaled(self, new_size: int) -> "PoseAnnotation":
        """Same pose on a canvas of a different side length."""
        f = new_size / self.image_size
        out = PoseAnnotation(image_size=new_size)
        for name, kp in self.keypoints.items():
            out.keypoints[name] = Keypoint2D(kp.x * f, kp.y * f, kp.present)
        return out

    def to_dict(self) -> dict:
        return {
            "image_size": self.image_size,
            "keypoints": [
                {"name": n, "x": self.keypoints[n].x, "y": self.keypoints[n].y, "present": self.keypoints[n].present}
                for n in KEYPOINT_NAMES
            ],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "PoseAnnotation":
        pose = cls(image_size=int(d["image_size"]))
        for rec in d["keypoints"]:
            pose.keypoints[rec["name"]] = Keypoint2D(float(rec["x"]), float(rec["y"]), bool(rec["present"]))
        return pose

    def save(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.to_dict(), indent=1, sort_keys=True))

    @classmethod
    def load(cls, path: str | Path) -> "PoseAnnotation":
        return cls.from_dict(json.loads(Path(path).read_text()))


def normalize_pose(pose: PoseAnnotation, subset: str = "all") -> np.ndarray:
    """Flatten a keypoint subset to a (x1, y1, ..., xk, yk) vector.

    Present coordinates map through ``p / s * 0.9 + 0.1`` so they land in
    [0.1, 1.0]; absent points become exactly (0.0, 0.0). The offset keeps the
    zero sentinel unambiguous even for a point at pixel (0, 0).
    """
    if pose.image_size <= 0:
        raise ValueError(f"image_size must be positive, got {pose.image_size}")
    names = SUBSETS[subset]
    s = float(pose.image_size)
    out = np.zeros(2 * len(names), dtype=np.float64)
    for i, name in enumerate(names):
        kp = pose.keypoints[name]
        if kp.present:
            out[2 * i] = kp.x / s * 0.9 + 0.1
            out[2 * i + 1] = kp.y / s * 0.9 + 0.1
    return out


def denormalize_pose(values: np.ndarray, image_size: int, subset: str = "all") -> PoseAnnotation:
    """Inverse of :func:`normalize_pose`; slots outside the subset stay absent.

    Coordinate pairs whose values both sit below ``ABSENCE_THRESHOLD`` decode
    as absent. Decoded pixel positions are clipped to the canvas.
    """
    names = SUBSETS[subset]
    values = np.asarray(values, dtype=np.float64)
    if values.shape != (2 * len(names),):
        raise ValueError(f"expected {2 * len(names)} values for subset '{subset}', got shape {values.shape}")
    s = float(image_size)
    pose = PoseAnnotation(image_size=image_size)
    for i, name in enumerate(names):
        vx, vy = values[2 * i], values[2 * i + 1]
        if vx < ABSENCE_THRESHOLD and vy < ABSENCE_THRESHOLD:
            continue
        x = np.clip((vx - 0.1) / 0.9 * s, 0.0, s)
        y = np.clip((vy - 0.1) / 0.9 * s, 0.0, s)
        pose.keypoints[name] = Keypoint2D(float(x), float(y), True)
    return pose


def merge_poses(base: PoseAnnotation, other: PoseAnnotation, names: tuple[str, ...]) -> PoseAnnotation:
    """Copy the named slots of ``other`` over ``base`` (returns a new pose)."""
    out = PoseAnnotation(image_size=base.image_size)
    for name in KEYPOINT_NAMES:
        src = other.keypoints[name] if name in names else base.keypoints[name]
        out.keypoints[name] = Keypoint2D(src.x, src.y, src.present)
    return out
