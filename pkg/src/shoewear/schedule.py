"""Noise schedules and the two schedule-level primitives every diffusion
stage shares: forward noising and the deterministic DDIM update.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class DiffusionSchedule:
    """Linear-beta schedule; ``alpha_bars[t]`` is the cumulative product
    of (1 - beta) up to and including step t."""

    T: int
    betas: np.ndarray
    alpha_bars: np.ndarray

    def alpha_bar(self, t: int) -> float:
        if not 0 <= t < self.T:
            raise ValueError(f"timestep {t} outside [0, {self.T})")
        return float(self.alpha_bars[t])


def make_schedule(T: int, beta_min: float = 1e-4, beta_max: float = 0.02) -> DiffusionSchedule:
    if T < 1:
        raise ValueError(f"T must be >= 1, got {T}")
    if not (0.0 < beta_min <= beta_max < 1.0):
        raise ValueError(f"need 0 < beta_min <= beta_max < 1, got ({beta_min}, {beta_max})")
    betas = np.linspace(beta_min, beta_max, T, dtype=np.float64)
    alpha_bars = np.cumprod(1.0 - betas)
    return DiffusionSchedule(T=T, betas=betas, alpha_bars=alpha_bars)


def q_sample(x0, t: int, eps, sched: DiffusionSchedule):
    """Forward noising: sqrt(a_bar_t) * x0 + sqrt(1 - a_bar_t) * eps."""
    a = sched.alpha_bar(t)
    return np.sqrt(a) * x0 + np.sqrt(1.0 - a) * eps


def ddim_step(x_t, eps_pred, t: int, t_prev: int | None, sched: DiffusionSchedule):
    """One deterministic (eta=0) DDIM update from step t down to t_prev.

    ``t_prev=None`` denotes the final hop to the clean sample, i.e. the
    x0 estimate itself is returned.
    """
    a_t = sched.alpha_bar(t)
    if a_t <= 0.0:
        raise FloatingPointError(f"alpha_bar[{t}] is zero; cannot invert the noising step")
    x0_hat = (x_t - np.sqrt(1.0 - a_t) * eps_pred) / np.sqrt(a_t)
    if t_prev is None:
        return x0_hat
    if not 0 <= t_prev < t:
        raise ValueError(f"t_prev={t_prev} must satisfy 0 <= t_prev < t={t}")
    a_p = sched.alpha_bar(t_prev)
    return np.sqrt(a_p) * x0_hat + np.sqrt(1.0 - a_p) * eps_pred


def ddim_timesteps(T: int, steps: int) -> list[int]:
    """Evenly spaced descending timestep list for a ``steps``-step DDIM chain."""
    if steps < 1:
        raise ValueError(f"steps must be >= 1, got {steps}")
    steps = min(steps, T)
    ts = np.linspace(0, T - 1, steps).round().astype(int)
    return sorted(set(int(t) for t in ts), reverse=True)
