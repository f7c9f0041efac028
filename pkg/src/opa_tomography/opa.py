"""Phase-sensitive parametric amplification ahead of direct detection."""
from __future__ import annotations

import math

import attr
import numpy as np

from .states import GaussianState, WignerGrid, sample_quadrature
from .validators import finite, not_negative

SUFFICIENT_MARGIN = 1.5


@attr.s(frozen=True)
class OpaParams:
    G: float           = attr.ib(default=4.4, converter=float, validator=[finite, not_negative])
    theta: float       = attr.ib(default=0.0, converter=float, validator=[finite])
    exact_model: bool  = attr.ib(default=True, converter=bool)

    @property
    def gain(self) -> float:
        return math.exp(self.G)

    @property
    def deamplification(self) -> float:
        return math.exp(-self.G)

    def at_phase(self, theta: float) -> OpaParams:
        return attr.evolve(self, theta=theta)

    def approximate(self) -> OpaParams:
        return attr.evolve(self, exact_model=False)


@attr.s(frozen=True)
class SufficiencyReport:
    THRESHOLD = SUFFICIENT_MARGIN

    G: float              = attr.ib()
    G_sq: float           = attr.ib()
    margin: float         = attr.ib()
    sufficient: bool      = attr.ib()
    residual_ratio: float = attr.ib()

    def to_dict(self) -> dict[str, str]:
        return {
            'G': repr(self.G),
            'G_sq': repr(self.G_sq),
            'margin': repr(self.margin),
            'sufficient': str(self.sufficient).lower(),
            'residual_ratio': repr(self.residual_ratio),
        }


def amplified_photon_number(x_theta, p_theta, params: OpaParams):
    """Photon number behind the amplifier for quadrature values (x_theta, p_theta).

    Continuous valued; the exact form is clamped at zero.
    """
    x2 = np.square(x_theta)

    if not params.exact_model:
        return math.exp(2 * params.G) * x2

    N = math.exp(2 * params.G) * x2 + math.exp(-2 * params.G) * np.square(p_theta) - 0.5
    return np.maximum(N, 0.0)


def mean_photon_number(state: GaussianState, params: OpaParams) -> float:
    mean = math.exp(2 * params.G) * state.variance(params.theta)

    if params.exact_model:
        mean += math.exp(-2 * params.G) * state.conjugate_variance(params.theta) - 0.5

    return mean


def check_sufficiency(G: float, G_sq: float) -> SufficiencyReport:
    if G < 0 or G_sq < 0:
        raise ValueError("'G' and 'G_sq' must be non-negative")

    margin = G - G_sq
    return SufficiencyReport(
        G=G,
        G_sq=G_sq,
        margin=margin,
        sufficient=margin >= SUFFICIENT_MARGIN,
        residual_ratio=min(1.0, math.exp(-4 * margin)),
    )


def sample_photon_numbers(state, params: OpaParams, n_shots: int, rng) -> np.ndarray:
    """Amplified photon numbers for `n_shots` pulses of `state` at `params.theta`.

    Gaussian states are sampled jointly in (x_theta, p_theta) from the state
    rotated by -theta. Grid states only give a valid marginal, so they use the
    approximate mapping whatever `exact_model` says.
    """
    rng = np.random.default_rng(rng)

    if isinstance(state, WignerGrid):
        x_theta = sample_quadrature(state, params.theta, n_shots, rng)
        return amplified_photon_number(x_theta, 0.0, params.approximate())

    x_theta, p_theta = sample_joint_quadratures(state.rotated(-params.theta), n_shots, rng)
    return amplified_photon_number(x_theta, p_theta, params)


def sample_joint_quadratures(state: GaussianState, n_shots: int, rng) -> tuple[np.ndarray, np.ndarray]:
    """(x, p) samples of a zero-mean Gaussian state."""
    L = np.linalg.cholesky(state.cov)
    x, p = L @ rng.standard_normal((2, n_shots))
    return x, p


def photon_number_density(x_grid, density, G: float) -> tuple[np.ndarray, np.ndarray]:
    """Distribution of N = e^(2G) x^2 for a symmetric quadrature density.

    Returns (N, P(N)) on the image of the positive half of `x_grid`.
    """
    x_grid = np.asarray(x_grid, dtype=float)
    density = np.asarray(density, dtype=float)
    positive = x_grid > 0

    N = math.exp(2 * G) * np.square(x_grid[positive])
    return N, density[positive] * math.exp(-G) / np.sqrt(N)
