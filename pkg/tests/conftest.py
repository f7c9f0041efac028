from pathlib import Path

import pytest
import yaml

from opa_tomography.detection import DetectorModel, ModeModel
from opa_tomography.experiment import ExperimentConfig
from opa_tomography.opa import OpaParams
from opa_tomography.states import StateSpec

REFERENCE_VALUES_PATH = Path(__file__).parent / 'reference_values.yaml'


@pytest.fixture(scope='session')
def reference_values() -> dict:
    with REFERENCE_VALUES_PATH.open() as f:
        return yaml.load(f, Loader=yaml.SafeLoader)


@pytest.fixture(scope='session')
def reference_config(reference_values) -> ExperimentConfig:
    """Full-size configuration of the measured squeezed-vacuum run."""
    chain = reference_values['chain']

    return ExperimentConfig(
        state=StateSpec.squeezed_vacuum(chain['g_sq']),
        eta_pre=chain['eta_pre'],
        opa=OpaParams(G=chain['G']),
        shots_per_phase=chain['shots_per_phase'],
        detector=DetectorModel(eta_det=chain['eta_det'], dark_mean=chain['dark_mean'], dark_std=chain['dark_std']),
        mode=ModeModel.from_mode_number(chain['mode_number']),
    )

