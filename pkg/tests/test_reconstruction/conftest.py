import math

import pytest

from opa_tomography.detection import DetectorModel, ModeModel
from opa_tomography.experiment import ExperimentConfig, run_experiment
from opa_tomography.reconstruction import ReconstructionParams
from opa_tomography.states import StateSpec


@pytest.fixture(scope='module')
def vacuum_sample_set():
    """Single-mode amplified vacuum behind a dark-free detector, 8000 shots per phase."""
    config = ExperimentConfig(
        state=StateSpec.vacuum(),
        phases=(0.0, math.pi / 4, math.pi / 2),
        shots_per_phase=8000,
        detector=DetectorModel(eta_det=0.044, dark_mean=0.0, dark_std=0.0),
        mode=ModeModel(),
        rng_seed=101,
    )
    return run_experiment(config, progress=False)


@pytest.fixture(scope='module')
def squeezed_sample_set():
    config = ExperimentConfig(
        state=StateSpec.squeezed_vacuum(1.0),
        shots_per_phase=2000,
        rng_seed=202,
        reconstruction=ReconstructionParams(nx=101, n_p=101, n_angles=90),
    )
    return run_experiment(config, progress=False)
