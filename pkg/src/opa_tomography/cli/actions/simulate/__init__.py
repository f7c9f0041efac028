import logging

from .... import formats
from ....experiment import persist, run_experiment, run_metadata

from .. import RUN_METADATA_FILE, SHOT_FILE, BaseAction

LOG = logging.getLogger(__name__)


def write_simulation(sample_set, out_dir):
    persist(sample_set, out_dir / SHOT_FILE)
    formats.write_key_values(run_metadata(sample_set), out_dir / RUN_METADATA_FILE, formats.RUN_METADATA)


class Action(BaseAction):
    NAME = "Simulate a measurement run"
    REQUIRES_CONFIG = True

    def run(self):
        config = self._experiment_config()
        out_dir = self._out_dir()

        sample_set = run_experiment(config, progress=self.progress)
        write_simulation(sample_set, out_dir)

        LOG.info(f"Simulation written to {out_dir}")
