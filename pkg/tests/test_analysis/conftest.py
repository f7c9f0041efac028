import pytest

from opa_tomography.experiment import ExperimentConfig, run_experiment
from opa_tomography.reconstruction import ReconstructionParams, reconstruct
from opa_tomography.states import StateSpec


@pytest.fixture(scope='module')
def squeezed_run():
    config = ExperimentConfig(
        state=StateSpec.squeezed_vacuum(1.0),
        shots_per_phase=2000,
        rng_seed=303,
        reconstruction=ReconstructionParams(nx=101, n_p=101, n_angles=90),
    )
    return run_experiment(config, progress=False)


@pytest.fixture(scope='module')
def squeezed_result(squeezed_run):
    return reconstruct(squeezed_run)
