from __future__ import annotations

import logging
import math
from typing import Optional

import attr
import numpy as np

from ..errors import ReconstructionError
from ..states import GaussianState, WignerGrid, apply_pre_amp_loss, prepare_state
from .histograms import PhotonHistogram, histogram_photons
from .params import ReconstructionParams
from .quadrature import (
    QuadratureDistribution, fitted_quadrature_distribution, gaussian_distribution, to_quadrature_distribution,
)
from .radon import inverse_radon
from .sinogram import Sinogram, build_sinogram, forward_radon
from .variance import VarianceCurve, variance_curve

LOG = logging.getLogger(__name__)

ROW_SIGMAS = 6.0
FIT_POINTS = 401


@attr.s(frozen=True, eq=False)
class ReconstructionResult:
    source: str                                      = attr.ib()
    params: ReconstructionParams                     = attr.ib()
    histograms: tuple[PhotonHistogram, ...]          = attr.ib(converter=tuple)
    distributions: tuple[QuadratureDistribution, ...] = attr.ib(converter=tuple)
    fits: tuple[QuadratureDistribution, ...]         = attr.ib(converter=tuple)
    curve: Optional[VarianceCurve]                   = attr.ib()
    sinogram: Sinogram                               = attr.ib()
    grid: WignerGrid                                 = attr.ib()


def resolve_source(sample_set, params: ReconstructionParams) -> str:
    spec = sample_set.config.state

    if params.source != 'auto':
        return params.source

    return 'fit' if spec.is_gaussian and spec.is_reflection_symmetric else 'raw'


def dense_phases(n_angles: int) -> np.ndarray:
    return np.arange(n_angles) * (math.pi / n_angles)


def _row_grid(largest_variance: float, points: int) -> np.ndarray:
    reach = math.ceil(2 * ROW_SIGMAS * math.sqrt(largest_variance)) / 2
    return np.linspace(-reach, reach, points)


def calibration_mean(sample_set) -> float:
    """Dark-corrected amplified-vacuum mean of the run."""
    if sample_set.vacuum_records is None:
        raise ReconstructionError("Quadrature recovery needs the vacuum calibration run")

    return sample_set.vacuum_mean() - sample_set.config.detector.dark_mean


def measured_distributions(sample_set):
    """Histograms, binned quadrature distributions and their Gaussian fits at every measured phase."""
    config = sample_set.config
    dark_mean = config.detector.dark_mean
    n_vac_mean = calibration_mean(sample_set)
    histograms, distributions, fits = [], [], []

    for phase, records in sample_set.records.items():
        hist = histogram_photons(records, bins=config.bins, dark_mean=dark_mean, phase=phase)
        dist = to_quadrature_distribution(hist, n_vac_mean)
        histograms.append(hist)
        distributions.append(dist)
        x_fit = np.linspace(-dist.abs_edges[-1], dist.abs_edges[-1], FIT_POINTS)
        fits.append(fitted_quadrature_distribution(records, n_vac_mean, dark_mean, phase, x_fit))

    return histograms, distributions, fits


def _fitted_sinogram(curve: VarianceCurve, params: ReconstructionParams) -> Sinogram:
    phases = dense_phases(params.n_angles)
    variances = curve.variance(phases)

    if np.any(variances <= 0):
        raise ReconstructionError(f"Fitted variance curve (a={curve.a:.4f}, d={curve.d:.4f}) is not positive everywhere")

    x = _row_grid(float(variances.max()), params.sinogram_points)
    rows = [gaussian_distribution(theta, variance, x).density for theta, variance in zip(phases, variances)]
    return Sinogram(phases, x, np.array(rows), measured=np.zeros(phases.size, dtype=bool))


def _exact_sinogram(sample_set, params: ReconstructionParams) -> Sinogram:
    config = sample_set.config
    state = apply_pre_amp_loss(prepare_state(config.state), config.eta_pre)

    if isinstance(state, GaussianState):
        x = _row_grid(float(np.linalg.eigvalsh(state.cov).max()), params.sinogram_points)
    else:
        reach = max(abs(bound) for bound in state.extent)
        x = np.linspace(-reach, reach, params.sinogram_points)

    sino = forward_radon(state, dense_phases(params.n_angles), x)
    return Sinogram(sino.phases, sino.x, sino.rows, measured=np.zeros(sino.phases.size, dtype=bool))


def reconstruct(sample_set, params: ReconstructionParams = None, *, progress: bool = False) -> ReconstructionResult:
    """Photon-number records to a Wigner grid through the chosen sinogram source."""
    params = sample_set.config.reconstruction if params is None else params
    source = resolve_source(sample_set, params)
    spec = sample_set.config.state

    histograms, distributions, fits, curve = [], [], [], None

    if sample_set.records and sample_set.vacuum_records is not None:
        histograms, distributions, fits = measured_distributions(sample_set)

        if len(sample_set.records) >= 3:
            curve = variance_curve(sample_set)

    if source == 'raw':
        if not distributions:
            raise ReconstructionError("Raw reconstruction needs signal records and the vacuum run")

        sino = build_sinogram(
            distributions, reflection_symmetric=spec.is_reflection_symmetric, points=params.sinogram_points
        )
    elif source == 'fit':
        if curve is None:
            raise ReconstructionError("Fit reconstruction needs at least 3 phases and the vacuum run")

        if not spec.is_reflection_symmetric:
            raise ReconstructionError("The cos^2 variance model assumes principal axes at 0 and pi/2")

        sino = _fitted_sinogram(curve, params)
    else:
        sino = _exact_sinogram(sample_set, params)

    LOG.info(f"Reconstruct from {sino.phases.size} {source} sinogram rows")
    grid = inverse_radon(sino, params, progress=progress)

    return ReconstructionResult(
        source=source,
        params=params,
        histograms=histograms,
        distributions=distributions,
        fits=fits,
        curve=curve,
        sinogram=sino,
        grid=grid,
    )
