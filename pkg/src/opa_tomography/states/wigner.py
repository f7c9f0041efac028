"""Closed-form Wigner functions and their sampled grids."""
from __future__ import annotations

import logging
import math

import numpy as np
from scipy import ndimage, special
from scipy.integrate import trapezoid

from .. import VACUUM_VARIANCE
from ..errors import ExtentTooSmallError, NegativeMarginalError
from .gaussian import gaussian_wigner, make_gaussian
from .models import CAT, CONVENTION, FOCK, SQUEEZED_FOCK, VACUUM, StateSpec, WignerGrid, rotation

LOG = logging.getLogger(__name__)

DEFAULT_GRID_POINTS = 201
DEFAULT_HALF_WIDTH = 4.0
MASS_TOLERANCE = 1e-3

# Interpolated projections of oscillating W carry small negative wiggles;
# anything deeper than this fraction of the peak is a real error.
NEGATIVITY_TOLERANCE = 1e-4


def _substituted(function, matrix: np.ndarray):
    """W o M, i.e. r -> W(M r)."""
    (a, b), (c, d) = matrix

    def W(x, p):
        return function(a * x + b * p, c * x + d * p)

    return W


def _symplectic_inverse(g: float, angle: float) -> np.ndarray:
    R = rotation(angle)
    return R @ np.diag([math.exp(-g), math.exp(g)]) @ R.T


def _fock_wigner(n: int):
    sign = -1 if n % 2 else 1

    def W(x, p):
        r2 = np.square(x) + np.square(p)
        return sign * (2 / np.pi) * special.eval_laguerre(n, 4 * r2) * np.exp(-2 * r2)

    return W


def _cat_wigner(alpha: float, parity: str):
    sign = 1 if parity == 'even' else -1
    norm = 1 / (2 * (1 + sign * math.exp(-2 * alpha ** 2)))

    def W(x, p):
        p2 = np.square(p)
        lobes = np.exp(-2 * np.square(x - alpha) - 2 * p2) + np.exp(-2 * np.square(x + alpha) - 2 * p2)
        fringes = 2 * np.exp(-2 * (np.square(x) + p2)) * np.cos(4 * alpha * p)
        return norm * (2 / np.pi) * (lobes + sign * fringes)

    return W


def wigner_function(spec: StateSpec):
    """Return a vectorized callable W(x, p) for `spec`."""
    if spec.kind == VACUUM:
        return CONVENTION.vacuum_wigner

    if spec.is_gaussian:
        return gaussian_wigner(make_gaussian(spec))

    if spec.kind == FOCK:
        return _fock_wigner(spec.n)

    if spec.kind == SQUEEZED_FOCK:
        return _substituted(_fock_wigner(spec.n), _symplectic_inverse(spec.g_sq, spec.squeeze_angle))

    if spec.kind == CAT:
        return _cat_wigner(spec.amplitude, spec.parity)

    raise ValueError(f"Unsupported state kind '{spec.kind}'")


def amplify_wigner(spec: StateSpec, G: float, theta: float):
    """W of `spec` after noiseless amplification of x_theta by e^G."""
    return _substituted(wigner_function(spec), _symplectic_inverse(G, theta))


def default_extent(spec: StateSpec) -> float:
    """Half-width of a square grid holding four standard deviations of every marginal."""
    needed = 4 * math.sqrt(spec.largest_quadrature_variance)
    return max(DEFAULT_HALF_WIDTH, math.ceil(2 * needed) / 2)


def _as_extent(extent) -> tuple[float, float, float, float]:
    if np.isscalar(extent):
        return (-float(extent), float(extent), -float(extent), float(extent))

    x_min, x_max, p_min, p_max = map(float, extent)
    return (x_min, x_max, p_min, p_max)


def build_wigner_grid(
    spec: StateSpec,
    nx: int = DEFAULT_GRID_POINTS,
    n_p: int = DEFAULT_GRID_POINTS,
    extent=None,
    *,
    strict: bool = True,
) -> WignerGrid:
    if extent is None:
        extent = default_extent(spec)

    extent = _as_extent(extent)
    grid = WignerGrid.from_function(wigner_function(spec), nx=nx, n_p=n_p, extent=extent)
    mass_outside = 1 - grid.integrate()

    if mass_outside > MASS_TOLERANCE:
        if strict:
            raise ExtentTooSmallError(extent=extent, mass_outside=mass_outside)

        LOG.warning(f"Grid {extent} misses {mass_outside:.2e} of the probability mass of {spec.kind}")

    return grid.normalized()


def _fractional_indices(grid: WignerGrid, X: np.ndarray, P: np.ndarray) -> np.ndarray:
    return np.array([((X - grid.x[0]) / grid.dx).ravel(), ((P - grid.p[0]) / grid.dp).ravel()])


def grid_marginal(grid: WignerGrid, theta: float, x_grid: np.ndarray) -> np.ndarray:
    """Numerical Radon projection of `grid` onto x_theta, normalized on `x_grid`."""
    x_min, x_max, p_min, p_max = grid.extent
    reach = math.hypot(max(-x_min, x_max), max(-p_min, p_max))
    step = min(grid.dx, grid.dp)
    s = np.arange(-reach, reach + step / 2, step)

    c, sn = math.cos(theta), math.sin(theta)
    X = x_grid[:, None] * c - s[None, :] * sn
    P = x_grid[:, None] * sn + s[None, :] * c

    samples = ndimage.map_coordinates(
        grid.values, _fractional_indices(grid, X, P), order=3, mode='constant', cval=0.0
    ).reshape(X.shape)
    density = trapezoid(samples, s, axis=1)

    peak = density.max()
    minimum = density.min()

    if minimum < -NEGATIVITY_TOLERANCE * peak:
        raise NegativeMarginalError(theta=theta, minimum=minimum)

    density = np.clip(density, 0, None)
    return density / trapezoid(density, x_grid)


def grid_loss(grid: WignerGrid, eta: float) -> WignerGrid:
    """Loss channel on a sampled W: rescale by sqrt(eta), then blur with added vacuum noise."""
    if eta == 1:
        return grid

    if eta == 0:
        X, P = grid.meshgrid()
        return grid.with_values(CONVENTION.vacuum_wigner(X, P)).normalized()

    X, P = grid.meshgrid()
    shrunk = ndimage.map_coordinates(
        grid.values,
        _fractional_indices(grid, X / math.sqrt(eta), P / math.sqrt(eta)),
        order=3,
        mode='constant',
        cval=0.0,
    ).reshape(X.shape) / eta

    sigma = math.sqrt((1 - eta) * VACUUM_VARIANCE)
    blurred = ndimage.gaussian_filter(shrunk, sigma=(sigma / grid.dx, sigma / grid.dp), mode='constant')
    return grid.with_values(blurred).normalized()
