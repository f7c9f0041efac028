from __future__ import annotations

import math

import attr
import numpy as np
from scipy.optimize import curve_fit

from .. import VACUUM_VARIANCE
from ..errors import ReconstructionError
from ..states.models import readonly_array

MIN_PHASES = 3


def variance_model(theta, a, d):
    return a * np.cos(theta) ** 2 + d


@attr.s(frozen=True, eq=False)
class VarianceCurve:
    """Var(x_theta) / Var(x_vac) per phase and its fit a cos^2(theta) + d."""

    phases: np.ndarray       = attr.ib(converter=readonly_array)
    ratios: np.ndarray       = attr.ib(converter=readonly_array)
    ratio_errors: np.ndarray = attr.ib(converter=readonly_array)
    a: float                 = attr.ib(converter=float)
    d: float                 = attr.ib(converter=float)
    a_error: float           = attr.ib(converter=float)
    d_error: float           = attr.ib(converter=float)
    sum_error: float         = attr.ib(converter=float)
    vacuum_mean: float       = attr.ib(converter=float)

    def ratio(self, theta):
        return variance_model(np.asarray(theta, dtype=float), self.a, self.d)

    def variance(self, theta):
        return VACUUM_VARIANCE * self.ratio(theta)

    @property
    def min_ratio(self) -> float:
        return min(self.d, self.a + self.d)

    @property
    def max_ratio(self) -> float:
        return max(self.d, self.a + self.d)

    @property
    def max_ratio_error(self) -> float:
        return self.sum_error if self.a >= 0 else self.d_error

    @property
    def min_ratio_error(self) -> float:
        return self.d_error if self.a >= 0 else self.sum_error


def phase_means(sample_set, dark_mean: float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(phases, dark-corrected means, standard errors) of the signal records."""
    phases = np.array(sample_set.phases)
    counts = [sample_set.records[phase] for phase in sample_set.phases]
    means = np.array([np.mean(c) for c in counts]) - dark_mean
    errors = np.array([np.std(c, ddof=1) / math.sqrt(c.size) for c in counts])
    return phases, means, errors


def variance_curve(sample_set) -> VarianceCurve:
    if sample_set.vacuum_records is None:
        raise ReconstructionError("The variance curve needs the vacuum calibration run")

    if len(sample_set.records) < MIN_PHASES:
        raise ReconstructionError(f"The variance curve needs at least {MIN_PHASES} phases, got {len(sample_set.records)}")

    dark_mean = sample_set.config.detector.dark_mean
    vacuum = sample_set.vacuum_records
    vacuum_mean = float(np.mean(vacuum)) - dark_mean

    if not vacuum_mean > 0:
        raise ReconstructionError(f"Dark-corrected vacuum mean must be positive, got {vacuum_mean}")

    phases, means, errors = phase_means(sample_set, dark_mean)
    ratios = means / vacuum_mean
    ratio_errors = errors / vacuum_mean
    sigma = ratio_errors if np.all(ratio_errors > 0) else None

    guess = (ratios[0] - ratios[-1], ratios[-1])
    (a, d), covariance = curve_fit(variance_model, phases, ratios, p0=guess, sigma=sigma, absolute_sigma=sigma is not None)
    a_error, d_error = np.sqrt(np.abs(np.diag(covariance)))
    sum_error = math.sqrt(abs(covariance.sum()))

    return VarianceCurve(
        phases=phases,
        ratios=ratios,
        ratio_errors=ratio_errors,
        a=a,
        d=d,
        a_error=a_error,
        d_error=d_error,
        sum_error=sum_error,
        vacuum_mean=vacuum_mean,
    )
