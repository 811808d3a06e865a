"""Shoe-wearing image generation in three stages: wearable-area detection,
leg-pose synthesis, and conditioned image generation, plus the procedural
world they train on."""

__version__ = "0.1.0"
