"""Everything after the amplifier: mode admixture, detection loss and dark noise."""
from __future__ import annotations

import math

import attr
from attr.validators import instance_of
import numpy as np

from .validators import finite, in_half_open_unit_interval, not_negative, one_of

MATCHED = 'matched'
VACUUM_CONTENT = 'vacuum'


def _power_fraction(instance, attribute, value):
    if not 0 <= value < 1:
        raise ValueError(f"'{attribute.name}' must lie in [0, 1)")


@attr.s(frozen=True)
class DetectorModel:
    eta_det: float        = attr.ib(default=0.044, converter=float, validator=[finite, in_half_open_unit_interval])
    dark_mean: float      = attr.ib(default=2.0, converter=float, validator=[finite, not_negative])
    dark_std: float       = attr.ib(default=1.0, converter=float, validator=[finite, not_negative])
    clamp_negative: bool  = attr.ib(default=True, validator=[instance_of(bool)])

    def without_dark_noise(self) -> DetectorModel:
        return attr.evolve(self, dark_mean=0.0, dark_std=0.0)


@attr.s(frozen=True)
class ModeModel:
    """Incoherent admixture of a second spatial mode carrying a fraction of the power.

    Two modes of equal mean with power fractions (1 - f, f) give the
    effective mode number mu = 1 / ((1 - f)^2 + f^2).
    """

    secondary_fraction: float = attr.ib(default=0.0, converter=float, validator=[finite, _power_fraction])
    secondary_content: str    = attr.ib(default=MATCHED, validator=[one_of(MATCHED, VACUUM_CONTENT)])

    @classmethod
    def from_mode_number(cls, mu: float, secondary_content: str = MATCHED) -> ModeModel:
        if not 1 <= mu <= 2:
            raise ValueError("'mu' must lie in [1, 2] for a two-mode admixture")

        fraction = (1 - math.sqrt(max(2 / mu - 1, 0.0))) / 2
        return cls(secondary_fraction=fraction, secondary_content=secondary_content)

    @property
    def mu(self) -> float:
        f = self.secondary_fraction
        return 1 / ((1 - f) ** 2 + f ** 2)

    @property
    def is_single_mode(self) -> bool:
        return self.secondary_fraction == 0


def detect(N_true, det: DetectorModel, rng) -> np.ndarray:
    """Scale by the detection efficiency and add Gaussian dark noise."""
    N_true = np.asarray(N_true, dtype=float)
    dark = rng.normal(det.dark_mean, det.dark_std, N_true.shape)
    N_meas = det.eta_det * N_true + dark

    if det.clamp_negative:
        N_meas = np.maximum(N_meas, 0.0)

    return N_meas


def admix_modes(N_primary, mode: ModeModel, rng, vacuum_scale: float, secondary=None) -> np.ndarray:
    """Mix the primary photon numbers with those of an admixed mode.

    `secondary` holds photon numbers of the admixed mode when it carries the
    same state as the primary; without it the admixed mode is amplified
    vacuum with mean `vacuum_scale`.
    """
    N_primary = np.asarray(N_primary, dtype=float)

    if mode.is_single_mode:
        return N_primary.copy()

    if secondary is None:
        secondary = vacuum_scale * np.square(rng.standard_normal(N_primary.shape))

    f = mode.secondary_fraction
    return (1 - f) * N_primary + f * np.asarray(secondary, dtype=float)
