from __future__ import annotations

import math

import numpy as np
from scipy import stats

from .. import VACUUM_VARIANCE
from .models import GAUSSIAN_KINDS, GaussianState, StateSpec, rotation


def make_gaussian(spec: StateSpec) -> GaussianState:
    """Covariance of a vacuum or squeezed vacuum spec.

    The first principal axis (angle `squeeze_angle`) is anti-squeezed, so the
    default angle 0 squeezes x_(pi/2).
    """
    if spec.kind not in GAUSSIAN_KINDS:
        raise ValueError(f"'{spec.kind}' is not a Gaussian state kind")

    if spec.g_sq < 0:
        raise ValueError("'g_sq' must be non-negative")

    principal = np.diag([math.exp(2 * spec.g_sq), math.exp(-2 * spec.g_sq)]) * VACUUM_VARIANCE
    R = rotation(spec.squeeze_angle)
    cov = R @ principal @ R.T

    # Exact symmetry so the covariance validator never trips on rounding.
    cov[0, 1] = cov[1, 0] = 0.5 * (cov[0, 1] + cov[1, 0])
    return GaussianState(cov)


def gaussian_loss(state: GaussianState, eta: float) -> GaussianState:
    return GaussianState(eta * state.cov + (1 - eta) * VACUUM_VARIANCE * np.eye(2))


def gaussian_marginal(state: GaussianState, theta: float, x_grid: np.ndarray) -> np.ndarray:
    return stats.norm.pdf(x_grid, scale=math.sqrt(state.variance(theta)))


def gaussian_wigner(state: GaussianState):
    """Closed-form W(x, p) of a zero-mean Gaussian state."""
    inverse = np.linalg.inv(state.cov)
    norm = 1 / (2 * math.pi * math.sqrt(state.determinant))

    def W(x, p):
        quadratic = inverse[0, 0] * x * x + 2 * inverse[0, 1] * x * p + inverse[1, 1] * p * p
        return norm * np.exp(-0.5 * quadratic)

    return W


def rotate(state: GaussianState, angle: float) -> GaussianState:
    return state.rotated(angle)
