from __future__ import annotations

import math
from typing import Union

import numpy as np
from scipy.integrate import cumulative_trapezoid

from .gaussian import gaussian_loss, gaussian_marginal, make_gaussian
from .models import GaussianState, StateSpec, WignerGrid
from .wigner import build_wigner_grid, grid_loss, grid_marginal

State = Union[GaussianState, WignerGrid]

#: Resolution of the tabulated marginal used for inverse-CDF sampling.
SAMPLING_TABLE_POINTS = 4096


def _require_uniform(x_grid: np.ndarray):
    steps = np.diff(x_grid)

    if x_grid.ndim != 1 or x_grid.size < 2 or np.any(steps <= 0) or not np.allclose(steps, steps[0]):
        raise ValueError("'x_grid' must be a uniform increasing 1-D grid")


def marginal_density(state: State, theta: float, x_grid) -> np.ndarray:
    """Probability density of x_theta = x cos(theta) + p sin(theta) on `x_grid`."""
    x_grid = np.asarray(x_grid, dtype=float)
    _require_uniform(x_grid)

    if isinstance(state, GaussianState):
        return gaussian_marginal(state, theta, x_grid)

    return grid_marginal(state, theta, x_grid)


def sampling_table(state: WignerGrid, theta: float) -> tuple[np.ndarray, np.ndarray]:
    """Tabulated (x, CDF) of a grid state's marginal, CDF strictly increasing."""
    x_min, x_max, p_min, p_max = state.extent
    reach = math.hypot(max(-x_min, x_max), max(-p_min, p_max))
    x_table = np.linspace(-reach, reach, SAMPLING_TABLE_POINTS)

    cdf = cumulative_trapezoid(grid_marginal(state, theta, x_table), x_table, initial=0)
    cdf /= cdf[-1]

    keep = np.concatenate(([True], np.diff(cdf) > 0))
    return x_table[keep], cdf[keep]


def sample_quadrature(state: State, theta: float, n_shots: int, rng=None) -> np.ndarray:
    """Draw `n_shots` i.i.d. x_theta values; `rng` is a seed or a numpy Generator."""
    if n_shots < 1:
        raise ValueError("'n_shots' must be at least 1")

    rng = np.random.default_rng(rng)

    if isinstance(state, GaussianState):
        return rng.normal(0.0, math.sqrt(state.variance(theta)), n_shots)

    x_table, cdf = sampling_table(state, theta)
    return np.interp(rng.random(n_shots), cdf, x_table)


def apply_pre_amp_loss(state: State, eta: float) -> State:
    """Pass `state` through a beam splitter of transmission `eta` with vacuum in the other port."""
    if not 0 <= eta <= 1:
        raise ValueError("'eta' must lie in [0, 1]")

    if isinstance(state, GaussianState):
        return gaussian_loss(state, eta)

    return grid_loss(state, eta)


def prepare_state(spec: StateSpec) -> State:
    """Analytic covariance for Gaussian kinds, a default grid otherwise."""
    if spec.is_gaussian:
        return make_gaussian(spec)

    return build_wigner_grid(spec)
