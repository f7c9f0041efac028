from __future__ import annotations

from typing import Iterator, Optional

import attr
from attr.validators import instance_of, optional
import numpy as np

from ..opa import SufficiencyReport
from .config import ExperimentConfig

VACUUM_PHASE = 0.0


@attr.s(frozen=True)
class ShotRecord:
    phase: float      = attr.ib(converter=float)
    shot_index: int   = attr.ib(converter=int)
    n_detected: float = attr.ib(converter=float)


def _frozen_records(value) -> dict[float, np.ndarray]:
    records = {}

    for phase, counts in value.items():
        counts = np.array(counts, dtype=float)
        counts.setflags(write=False)
        records[float(phase)] = counts

    return dict(sorted(records.items()))


def _frozen_optional(value) -> Optional[np.ndarray]:
    if value is None:
        return None

    counts = np.array(value, dtype=float)
    counts.setflags(write=False)
    return counts


def _consistent_shots(instance, attribute, value):
    if not value:
        return

    expected = instance.config.shots_per_phase

    for phase, counts in value.items():
        if counts.ndim != 1 or counts.size != expected:
            raise ValueError(f"phase {phase!r} holds {counts.size} records, expected {expected}")


@attr.s(frozen=True, eq=False)
class SampleSet:
    """Detected photon numbers of one simulated run, keyed by phase in radians."""

    config: ExperimentConfig                    = attr.ib(validator=[instance_of(ExperimentConfig)])
    records: dict[float, np.ndarray]            = attr.ib(converter=_frozen_records, validator=[_consistent_shots])
    vacuum_records: Optional[np.ndarray]        = attr.ib(default=None, converter=_frozen_optional)
    sufficiency: Optional[SufficiencyReport]    = attr.ib(default=None, validator=[optional(instance_of(SufficiencyReport))])
    override: bool                              = attr.ib(default=False, validator=[instance_of(bool)])

    def __eq__(self, other):
        if not isinstance(other, SampleSet):
            return NotImplemented

        if (self.config, self.sufficiency, self.override) != (other.config, other.sufficiency, other.override):
            return False

        if list(self.records) != list(other.records):
            return False

        if any(not np.array_equal(self.records[phase], other.records[phase]) for phase in self.records):
            return False

        if (self.vacuum_records is None) != (other.vacuum_records is None):
            return False

        return self.vacuum_records is None or np.array_equal(self.vacuum_records, other.vacuum_records)

    __hash__ = None

    @property
    def phases(self) -> tuple[float, ...]:
        return tuple(self.records)

    @property
    def is_empty(self) -> bool:
        return not self.records and self.vacuum_records is None

    def iter_records(self) -> Iterator[ShotRecord]:
        for phase, counts in self.records.items():
            for shot_index, n_detected in enumerate(counts):
                yield ShotRecord(phase, shot_index, float(n_detected))

    def iter_vacuum_records(self) -> Iterator[ShotRecord]:
        if self.vacuum_records is None:
            return

        for shot_index, n_detected in enumerate(self.vacuum_records):
            yield ShotRecord(VACUUM_PHASE, shot_index, float(n_detected))

    def vacuum_mean(self) -> float:
        """Mean detected vacuum photon number, dark counts included."""
        if self.vacuum_records is None:
            raise ValueError("the run has no vacuum calibration records")

        return float(np.mean(self.vacuum_records))

    def resampled(self, rng) -> SampleSet:
        """Bootstrap copy: every phase and the vacuum run resampled with replacement."""
        records = {
            phase: counts[rng.integers(0, counts.size, counts.size)]
            for phase, counts in self.records.items()
        }
        vacuum = None

        if self.vacuum_records is not None:
            vacuum = self.vacuum_records[rng.integers(0, self.vacuum_records.size, self.vacuum_records.size)]

        return attr.evolve(self, records=records, vacuum_records=vacuum)
