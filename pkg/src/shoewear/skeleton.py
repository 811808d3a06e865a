"""Deterministic raster rendering of a 12-keypoint pose to the skeleton
conditioning image.

Style is frozen here so golden-image tests stay stable: one fixed color per
bone, white joint discs, and line width / disc radius of 4 px on a 512 canvas
(scaled proportionally for other canvas sizes). A bone is drawn only when
both endpoints are present.
"""

from __future__ import annotations

import numpy as np
from PIL import Image, ImageDraw

from .keypoints import KEYPOINT_NAMES, PoseAnnotation

# (endpoint_a, endpoint_b, RGB). Five bones per side.
BONES = (
    ("left_hip", "left_knee", (255, 64, 64)),
    ("left_knee", "left_ankle", (255, 160, 48)),
    ("left_ankle", "left_heel", (255, 224, 32)),
    ("left_ankle", "left_big_toe", (192, 255, 48)),
    ("left_big_toe", "left_small_toe", (96, 255, 96)),
    ("right_hip", "right_knee", (64, 96, 255)),
    ("right_knee", "right_ankle", (48, 176, 255)),
    ("right_ankle", "right_heel", (32, 224, 224)),
    ("right_ankle", "right_big_toe", (128, 96, 255)),
    ("right_big_toe", "right_small_toe", (224, 64, 255)),
)

JOINT_COLOR = (255, 255, 255)
BASE_CANVAS = 512
BASE_LINE_WIDTH = 4
BASE_JOINT_RADIUS = 4


def render_skeleton(pose: PoseAnnotation, canvas: int) -> np.ndarray:
    """Rasterize the pose to an RGB uint8 array of shape (canvas, canvas, 3).

    Keypoint coordinates are interpreted in ``pose.image_size`` space and
    scaled to the canvas. All-absent poses yield an all-black image.
    """
    img = Image.new("RGB", (canvas, canvas), (0, 0, 0))
    draw = ImageDraw.Draw(img)
    f = canvas / pose.image_size
    width = max(1, round(BASE_LINE_WIDTH * canvas / BASE_CANVAS))
    radius = max(1, round(BASE_JOINT_RADIUS * canvas / BASE_CANVAS))

    for a, b, color in BONES:
        ka, kb = pose.keypoints[a], pose.keypoints[b]
        if ka.present and kb.present:
            draw.line([(ka.x * f, ka.y * f), (kb.x * f, kb.y * f)], fill=color, width=width)

    for name in KEYPOINT_NAMES:
        kp = pose.keypoints[name]
        if kp.present:
            x, y = kp.x * f, kp.y * f
            draw.ellipse([x - radius, y - radius, x + radius, y + radius], fill=JOINT_COLOR)

    return np.asarray(img, dtype=np.uint8)
