import pytest

from opa_tomography.experiment import ExperimentConfig, write_config
from opa_tomography.reconstruction import ReconstructionParams
from opa_tomography.states import StateSpec


@pytest.fixture
def config_path(tmp_path):
    """Small squeezed-vacuum run on a coarse grid."""
    config = ExperimentConfig(
        state=StateSpec.squeezed_vacuum(1.0),
        shots_per_phase=500,
        rng_seed=5,
        reconstruction=ReconstructionParams(nx=51, n_p=51, n_angles=45, sinogram_points=257),
    )
    path = tmp_path / 'run.ini'
    write_config(config, path)
    return path


@pytest.fixture
def bad_config_path(tmp_path):
    path = tmp_path / 'bad.ini'
    path.write_text('[state]\nkind = coherent\n')
    return path
