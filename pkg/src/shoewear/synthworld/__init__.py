from .scene import LABEL_BACKGROUND, LABEL_VISIBLE, LABEL_WEARABLE, SceneSample, point_in_polygon, sample_scene
from .specs import SynthConfig, tags_to_tokens

__all__ = [
    "LABEL_BACKGROUND",
    "LABEL_VISIBLE",
    "LABEL_WEARABLE",
    "SceneSample",
    "SynthConfig",
    "point_in_polygon",
    "sample_scene",
    "tags_to_tokens",
]
