import logging
from pathlib import Path

from .... import formats
from ....plotting import plot_file

from .. import BaseAction, ConfigOption

LOG = logging.getLogger(__name__)


class Action(BaseAction):
    NAME = "Render data files as SVG"
    CONFIG = [
        ConfigOption('input', "Data files to plot (default: every plottable CSV in the output directory)", Path, '+'),
    ]

    def _inputs(self):
        inputs = self._config['action'].get('input')

        if inputs:
            return list(inputs)

        return [
            path for path in sorted(self._out_dir().glob('*.csv'))
            if formats.read_header(path).get('kind') not in (None, formats.METRICS, formats.RUN_METADATA)
        ]

    def run(self):
        for path in self._inputs():
            plot_file(path)
