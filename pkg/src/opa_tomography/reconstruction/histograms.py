from __future__ import annotations

import logging

import attr
import numpy as np

from ..errors import ReconstructionError
from ..states.models import readonly_array

LOG = logging.getLogger(__name__)

DEFAULT_BINS = 35
RECORDS_PER_BIN = 10


@attr.s(frozen=True, eq=False)
class PhotonHistogram:
    """Dark-corrected photon numbers of one phase in uniform bins from 0 to the largest value."""

    phase: float          = attr.ib(converter=float)
    bin_edges: np.ndarray = attr.ib(converter=readonly_array)
    counts: np.ndarray    = attr.ib(converter=readonly_array)

    @counts.validator
    def _check_counts(self, attribute, value):
        if value.shape != (self.bin_edges.size - 1,):
            raise ValueError("'counts' must hold one entry per bin")

        if np.any(value < 0) or value.sum() == 0:
            raise ValueError("'counts' must be non-negative with at least one record")

    @property
    def shots(self) -> int:
        return int(self.counts.sum())

    @property
    def widths(self) -> np.ndarray:
        return np.diff(self.bin_edges)

    @property
    def centers(self) -> np.ndarray:
        return 0.5 * (self.bin_edges[:-1] + self.bin_edges[1:])

    @property
    def masses(self) -> np.ndarray:
        return self.counts / self.shots

    @property
    def density(self) -> np.ndarray:
        """P(N) per bin; sums to one against the bin widths."""
        return self.masses / self.widths


def histogram_photons(records, bins: int = DEFAULT_BINS, dark_mean: float = 0.0, phase: float = 0.0) -> PhotonHistogram:
    records = np.asarray(records, dtype=float)

    if records.size == 0:
        raise ReconstructionError(f"No records to histogram at phase {phase:.4f}")

    if records.size < bins * RECORDS_PER_BIN:
        LOG.warning(f"Only {records.size} records for {bins} bins at phase {phase:.4f}; histogram will be noisy")

    N = np.maximum(records - dark_mean, 0.0)
    upper = N.max()

    if upper == 0:
        LOG.warning(f"Every record at phase {phase:.4f} lies below the dark level {dark_mean}")
        upper = 1.0

    counts, edges = np.histogram(N, bins=bins, range=(0.0, upper))
    return PhotonHistogram(phase=phase, bin_edges=edges, counts=counts)
