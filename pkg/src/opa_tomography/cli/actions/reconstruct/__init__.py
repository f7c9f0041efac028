import logging
from pathlib import Path

from .... import formats
from ....reconstruction import reconstruct

from .. import (
    HISTOGRAMS_FILE, QUADRATURE_FILE, SINOGRAM_FILE, VARIANCE_FILE, WIGNER_FILE, BaseAction, ConfigOption,
)

LOG = logging.getLogger(__name__)


def write_reconstruction(result, out_dir):
    if result.histograms:
        formats.write_table(formats.histogram_table(result.histograms), out_dir / HISTOGRAMS_FILE, formats.PHOTON_HISTOGRAMS)
        formats.write_table(
            formats.quadrature_table(result.distributions, result.fits), out_dir / QUADRATURE_FILE,
            formats.QUADRATURE_DISTRIBUTIONS,
        )

    if result.curve is not None:
        formats.write_table(
            formats.variance_table(result.curve), out_dir / VARIANCE_FILE, formats.VARIANCE_CURVE,
            a=repr(result.curve.a), d=repr(result.curve.d),
        )

    formats.write_sinogram(result.sinogram, out_dir / SINOGRAM_FILE)
    formats.write_wigner_grid(result.grid, out_dir / WIGNER_FILE)


class Action(BaseAction):
    NAME = "Reconstruct the Wigner function from a shot file"
    CONFIG = [
        ConfigOption('input', "Shot file to reconstruct (default: shots.txt in the output directory)", Path),
    ]

    def run(self):
        sample_set = self._sample_set()
        out_dir = self._out_dir()

        result = reconstruct(sample_set, progress=self.progress)
        write_reconstruction(result, out_dir)

        LOG.info(f"Reconstruction ({result.source} rows) written to {out_dir}")
