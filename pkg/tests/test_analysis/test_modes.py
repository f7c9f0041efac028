import numpy as np
import pytest
from scipy.integrate import trapezoid

from opa_tomography.analysis import fit_mode_number
from opa_tomography.detection import MATCHED, VACUUM_CONTENT, DetectorModel, ModeModel
from opa_tomography.experiment import ExperimentConfig, simulate_phase, stream_generator
from opa_tomography.states import GaussianState

DARK_FREE = DetectorModel(dark_mean=0.0, dark_std=0.0)


def _amplified_vacuum(mode, detector=DARK_FREE, shots=40000, seed=11):
    config = ExperimentConfig(shots_per_phase=shots, detector=detector, mode=mode, rng_seed=seed)
    return simulate_phase(GaussianState.vacuum(), 0.0, config, stream_generator(seed, 1, 0))


class TestFitModeNumber:
    def test_single_mode(self):
        fit = fit_mode_number(_amplified_vacuum(ModeModel()))

        assert fit.mu == pytest.approx(1.0, abs=0.1)
        assert fit.shape == pytest.approx(fit.mu / 2)

    @pytest.mark.parametrize('content', [MATCHED, VACUUM_CONTENT])
    def test_two_equal_modes(self, content):
        fit = fit_mode_number(_amplified_vacuum(ModeModel(secondary_fraction=0.5, secondary_content=content)))

        assert fit.mu == pytest.approx(2.0, abs=0.15)

    @pytest.mark.parametrize('content', [MATCHED, VACUUM_CONTENT])
    def test_default_admixture(self, content):
        detector = DetectorModel()
        mode = ModeModel.from_mode_number(1.2, content)
        fit = fit_mode_number(_amplified_vacuum(mode, detector), detector.dark_mean, detector.dark_std)

        assert fit.mu == pytest.approx(1.2, abs=0.1)

    def test_gamma_density_keeps_the_mean(self):
        fit = fit_mode_number(_amplified_vacuum(ModeModel(), shots=5000))
        N = np.linspace(0.01, 40 * fit.mean, 200001)
        pdf = fit.pdf(N)

        assert trapezoid(N * pdf, N) == pytest.approx(fit.mean, rel=0.02)

    def test_too_few_records(self):
        with pytest.raises(ValueError):
            fit_mode_number(np.ones(999))

    def test_constant_records(self):
        with pytest.raises(ValueError):
            fit_mode_number(np.ones(1000))
