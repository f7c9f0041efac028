import logging
from pathlib import Path

from .... import formats
from ....analysis import analyze, bootstrap_metrics

from .. import METRICS_FILE, WIGNER_FILE, BaseAction, ConfigOption

LOG = logging.getLogger(__name__)


def write_analysis(metrics, out_dir, bootstrap=None):
    values = metrics.to_dict()

    if bootstrap is not None:
        values.update(bootstrap.to_dict())

    values['summary'] = metrics.summary_line()
    formats.write_key_values(values, out_dir / METRICS_FILE, formats.METRICS)


def bootstrap_summary(sample_set, n_resamples, progress):
    if not n_resamples:
        return None

    return bootstrap_metrics(sample_set, n_resamples, sample_set.config.rng_seed, progress=progress)


class Action(BaseAction):
    NAME = "Compute squeezing, purity and fidelity"
    CONFIG = [
        ConfigOption('input', "Shot file to analyze (default: shots.txt in the output directory)", Path),
        ConfigOption('bootstrap', "Number of shot-resampled runs for percentile intervals", int),
    ]

    def run(self):
        sample_set = self._sample_set()
        out_dir = self._out_dir()
        grid = formats.read_wigner_grid(out_dir / WIGNER_FILE)

        metrics = analyze(sample_set, grid)
        write_analysis(metrics, out_dir, bootstrap_summary(sample_set, self._config['action'].get('bootstrap'), self.progress))

        LOG.info(metrics.summary_line())
