"""Effective mode number of amplified-vacuum photon statistics.

M independent thermal-like quadratures squared give a gamma density of
shape M/2; a single amplified quadrature is chi-squared with one degree of
freedom, so mu = 2 <N>^2 / Var(N) equals 1 for a single mode.
"""
from __future__ import annotations

import attr
import numpy as np
from scipy import stats

MIN_RECORDS = 1000


@attr.s(frozen=True)
class ModeFit:
    mu: float       = attr.ib(converter=float)
    mean: float     = attr.ib(converter=float)
    variance: float = attr.ib(converter=float)

    @property
    def shape(self) -> float:
        return self.mu / 2

    @property
    def scale(self) -> float:
        return self.mean / self.shape

    def pdf(self, N) -> np.ndarray:
        """Gamma density with the fitted shape and the observed mean."""
        return stats.gamma.pdf(N, a=self.shape, scale=self.scale)


def fit_mode_number(records, dark_mean: float = 0.0, dark_std: float = 0.0) -> ModeFit:
    """Moment estimate of mu from dark-corrected records; the dark variance is removed first."""
    N = np.asarray(records, dtype=float) - dark_mean

    if N.size < MIN_RECORDS:
        raise ValueError(f"Mode-number fit needs at least {MIN_RECORDS} records, got {N.size}")

    mean = float(np.mean(N))
    variance = float(np.var(N, ddof=1)) - dark_std ** 2

    if not variance > 0:
        raise ValueError("Mode-number fit needs records with non-zero variance")

    return ModeFit(mu=2 * mean ** 2 / variance, mean=mean, variance=variance)
