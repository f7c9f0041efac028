from abc import ABC, abstractmethod
from collections import namedtuple
from importlib import import_module
import logging
from pathlib import Path
from pkgutil import iter_modules

import attr

from ...errors import ConfigError
from ...experiment import ExperimentConfig, load, read_config
from ..config import resolve_output_dir

LOG = logging.getLogger(__name__)

ConfigOption = namedtuple('ConfigOption', ('name', 'nice_name', 'type', 'nargs'), defaults=(None,))

SHOT_FILE = 'shots.txt'
RUN_METADATA_FILE = 'run_metadata.txt'
HISTOGRAMS_FILE = 'photon_histograms.csv'
QUADRATURE_FILE = 'quadrature_distributions.csv'
VARIANCE_FILE = 'variance_curve.csv'
SINOGRAM_FILE = 'sinogram.csv'
WIGNER_FILE = 'wigner_grid.csv'
METRICS_FILE = 'metrics.txt'


class BaseAction(ABC):
    NAME: str = "Nice Action Name"
    CONFIG: list['ConfigOption'] = list()
    REQUIRES_CONFIG: bool = False

    def __init__(self, *, config):
        self._config = config

    @abstractmethod
    def run(self):
        pass

    @property
    def progress(self) -> bool:
        return not self._config['main']['quiet']

    def _out_dir(self) -> Path:
        out_dir = resolve_output_dir(self._config['main']['out'])
        out_dir.mkdir(parents=True, exist_ok=True)
        return out_dir

    def _with_overrides(self, config: ExperimentConfig) -> ExperimentConfig:
        main = self._config['main']

        try:
            return config.with_overrides(seed=main['seed'], shots=main['shots'])
        except (TypeError, ValueError) as e:
            raise ConfigError(str(e)) from e

    def _experiment_config(self) -> ExperimentConfig:
        path = self._config['main']['config']

        if path is None:
            raise ConfigError("no configuration file given (use --config)")

        return self._with_overrides(read_config(path))

    def _input_path(self, default_name: str) -> Path:
        path = self._config['action'].get('input')
        return Path(path) if path is not None else self._out_dir() / default_name

    def _sample_set(self):
        """Shot file from --input (default: the output directory), with a --config reconstruction section applied."""
        sample_set = load(self._input_path(SHOT_FILE))

        if self._config['main']['config'] is not None:
            reconstruction = read_config(self._config['main']['config']).reconstruction
            sample_set = attr.evolve(sample_set, config=attr.evolve(sample_set.config, reconstruction=reconstruction))

        return sample_set


def get_actions_map():
    actions = {}

    for mi in iter_modules(__path__):
        if not mi.ispkg:
            continue

        action_module = import_module(f'.{mi.name}', package=__package__)
        actions[mi.name.replace('_', '-')] = action_module.Action

    return actions


__actions__ = get_actions_map()
del get_actions_map
