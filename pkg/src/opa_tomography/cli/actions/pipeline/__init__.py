import logging

from ....analysis import analyze
from ....experiment import run_experiment
from ....reconstruction import reconstruct

from .. import BaseAction, ConfigOption
from ..analyze import bootstrap_summary, write_analysis
from ..reconstruct import write_reconstruction
from ..simulate import write_simulation

LOG = logging.getLogger(__name__)


class Action(BaseAction):
    NAME = "Simulate, reconstruct and analyze in one go"
    REQUIRES_CONFIG = True
    CONFIG = [
        ConfigOption('bootstrap', "Number of shot-resampled runs for percentile intervals", int),
    ]

    def run(self):
        config = self._experiment_config()
        out_dir = self._out_dir()

        sample_set = run_experiment(config, progress=self.progress)
        write_simulation(sample_set, out_dir)

        result = reconstruct(sample_set, progress=self.progress)
        write_reconstruction(result, out_dir)

        metrics = analyze(sample_set, result.grid, result.curve)
        write_analysis(metrics, out_dir, bootstrap_summary(sample_set, self._config['action'].get('bootstrap'), self.progress))

        LOG.info(metrics.summary_line())
