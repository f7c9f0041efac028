import pytest

from opa_tomography.experiment import ExperimentConfig, run_experiment
from opa_tomography.states import StateSpec

# Sections of a complete configuration file as written by hand.
CONFIG_SECTIONS = {
    'state': {'kind': 'squeezed_vacuum', 'g_sq': '1.0', 'squeeze_angle': '0'},
    'opa': {'g': '4.4', 'exact_model': 'true'},
    'loss': {'optical_loss': '0.006', 'visibility_loss': '0.053'},
    'detector': {'eta_det': '0.044', 'dark_mean': '2.0', 'dark_std': '1.0'},
    'mode': {'mu': '1.2', 'secondary_content': 'matched'},
    'run': {'n_phases': '19', 'phase_max': 'pi/2', 'shots_per_phase': '500', 'bins': '35', 'seed': '11'},
    'reconstruction': {'source': 'auto', 'nx': '101', 'n_p': '101', 'filter_window': 'hann'},
}


@pytest.fixture
def config_sections():
    return CONFIG_SECTIONS


@pytest.fixture
def tiny_config() -> ExperimentConfig:
    return ExperimentConfig(state=StateSpec.squeezed_vacuum(1.0), shots_per_phase=200, rng_seed=3)


@pytest.fixture
def tiny_sample_set(tiny_config):
    return run_experiment(tiny_config, progress=False)
