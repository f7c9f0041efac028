from __future__ import annotations

import logging
import math

import attr
import numpy as np
from tqdm import tqdm

from ..reconstruction import variance_curve
from .metrics import squeezing_db

LOG = logging.getLogger(__name__)

PERCENTILES = (2.5, 50.0, 97.5)


@attr.s(frozen=True)
class Interval:
    low: float    = attr.ib(converter=float)
    median: float = attr.ib(converter=float)
    high: float   = attr.ib(converter=float)

    @classmethod
    def from_samples(cls, samples) -> Interval:
        return cls(*np.percentile(samples, PERCENTILES))


@attr.s(frozen=True)
class BootstrapSummary:
    """Percentile intervals over shot-resampled runs.

    Purity here comes from the fitted variance curve, 1 / sqrt(ratio_min * ratio_max),
    so no backprojection runs per resample.
    """

    n_resamples: int           = attr.ib()
    squeezing_db: Interval     = attr.ib()
    antisqueezing_db: Interval = attr.ib()
    purity: Interval           = attr.ib()

    def to_dict(self) -> dict[str, str]:
        fields = {'bootstrap.n_resamples': str(self.n_resamples)}

        for name in ('squeezing_db', 'antisqueezing_db', 'purity'):
            interval = getattr(self, name)
            fields.update({
                f'bootstrap.{name}.low': repr(interval.low),
                f'bootstrap.{name}.median': repr(interval.median),
                f'bootstrap.{name}.high': repr(interval.high),
            })

        return fields


def bootstrap_metrics(sample_set, n_resamples: int, seed: int, *, progress: bool = False) -> BootstrapSummary:
    if n_resamples < 2:
        raise ValueError("'n_resamples' must be at least 2")

    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence(seed)))
    squeezing, antisqueezing, purity = [], [], []

    for _ in tqdm(range(n_resamples), desc="Bootstrap", disable=not progress):
        curve = variance_curve(sample_set.resampled(rng))
        squeezing.append(squeezing_db(curve.min_ratio))
        antisqueezing.append(squeezing_db(curve.max_ratio))
        purity.append(1 / math.sqrt(curve.min_ratio * curve.max_ratio))

    LOG.debug(f"Bootstrap over {n_resamples} resamples with seed {seed}")

    return BootstrapSummary(
        n_resamples=n_resamples,
        squeezing_db=Interval.from_samples(squeezing),
        antisqueezing_db=Interval.from_samples(antisqueezing),
        purity=Interval.from_samples(purity),
    )
