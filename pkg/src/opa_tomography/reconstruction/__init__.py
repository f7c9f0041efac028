from .histograms import DEFAULT_BINS, PhotonHistogram, histogram_photons
from .params import ReconstructionParams
from .quadrature import (
    QuadratureDistribution, calibration_scale, fitted_quadrature_distribution, gaussian_distribution,
    quadrature_samples, recover_quadrature_density, symmetrize, to_quadrature_distribution,
)
from .radon import angle_weights, filter_rows, inverse_radon, ramp_response, window_response
from .result import ReconstructionResult, calibration_mean, dense_phases, measured_distributions, reconstruct, resolve_source
from .sinogram import Sinogram, build_sinogram, forward_radon
from .variance import VarianceCurve, variance_curve, variance_model
