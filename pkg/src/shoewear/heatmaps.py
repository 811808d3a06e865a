"""Gaussian-blob heatmap targets for foot keypoint regression and the argmax
decode back to coordinates.

One channel per foot keypoint (8 total). A present keypoint becomes an
unnormalized Gaussian with peak 1.0 at its (resolution-scaled) location; an
absent keypoint leaves its channel all-zero. Decode is plain per-channel
argmax with a row-major tie-break and a presence threshold on the channel
maximum. No sub-pixel refinement.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .keypoints import FOOT_NAMES, Keypoint2D, PoseAnnotation

PRESENCE_THRESHOLD = 0.1


@dataclass
class HeatmapStack:
    maps: np.ndarray  # (8, resolution, resolution) float32 in [0, 1]
    resolution: int
    sigma: float
    image_size: int  # pixel space the coordinates decode back into


def encode_heatmaps(pose: PoseAnnotation, resolution: int = 64, sigma: float = 2.0) -> HeatmapStack:
    if resolution <= 0:
        raise ValueError(f"resolution must be positive, got {resolution}")
    if sigma <= 0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    scale = resolution / pose.image_size
    grid = np.arange(resolution, dtype=np.float64)
    maps = np.zeros((len(FOOT_NAMES), resolution, resolution), dtype=np.float32)
    for i, name in enumerate(FOOT_NAMES):
        kp = pose.keypoints[name]
        if not kp.present:
            continue
        cx, cy = kp.x * scale, kp.y * scale
        dx2 = (grid - cx) ** 2
        dy2 = (grid - cy) ** 2
        maps[i] = np.exp(-(dy2[:, None] + dx2[None, :]) / (2.0 * sigma**2)).astype(np.float32)
    return HeatmapStack(maps=maps, resolution=resolution, sigma=sigma, image_size=pose.image_size)


def decode_heatmaps(stack: HeatmapStack) -> PoseAnnotation:
    """Argmax decode to a foot-subset pose in ``stack.image_size`` pixels.

    Channels whose maximum falls below ``PRESENCE_THRESHOLD`` decode as
    absent. Equal maxima resolve to the lowest row-major index.
    """
    pose = PoseAnnotation(image_size=stack.image_size)
    scale = stack.image_size / stack.resolution
    for i, name in enumerate(FOOT_NAMES):
        chan = stack.maps[i]
        peak = float(chan.max())
        if peak < PRESENCE_THRESHOLD:
            continue
        flat = int(np.argmax(chan))  # first occurrence = row-major tie-break
        row, col = divmod(flat, stack.resolution)
        pose.keypoints[name] = Keypoint2D(col * scale, row * scale, True)
    return pose
