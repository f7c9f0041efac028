import math

import numpy as np
import pytest
from scipy import stats

from opa_tomography.errors import SinogramError
from opa_tomography.reconstruction import QuadratureDistribution, Sinogram, build_sinogram, forward_radon
from opa_tomography.states import GaussianState, StateSpec, make_gaussian


def _gaussian_rows(phases, std=0.5):
    x = np.linspace(-3, 3, 601)
    return [QuadratureDistribution(phase, x, stats.norm.pdf(x, scale=std)) for phase in phases]


class TestBuildSinogramValid:
    def test_mirrors_the_half_turn(self):
        phases = np.linspace(0, math.pi / 2, 10)
        sino = build_sinogram(_gaussian_rows(phases), points=257)

        assert sino.phases.size == 18
        assert sino.measured.sum() == 10
        assert np.all(np.diff(sino.phases) > 0)
        assert sino.phases[-1] == pytest.approx(math.pi - phases[1])

    def test_mirrored_rows_copy_their_partner(self):
        phases = np.linspace(0, math.pi / 2, 4)
        rows = _gaussian_rows(phases[:1], 0.5) + _gaussian_rows(phases[1:2], 0.8) + _gaussian_rows(phases[2:], 0.5)
        sino = build_sinogram(rows, points=257)
        partner = int(np.argmin(np.abs(sino.phases - (math.pi - phases[1]))))

        assert not sino.measured[partner]
        assert sino.rows[partner] == pytest.approx(sino.rows[1])

    def test_without_reflection_symmetry(self):
        phases = np.linspace(0, math.pi / 2, 5)
        sino = build_sinogram(_gaussian_rows(phases), reflection_symmetric=False, points=257)

        assert sino.phases.size == 5
        assert sino.measured.all()

    def test_rows_are_normalized_and_even(self):
        sino = build_sinogram(_gaussian_rows(np.linspace(0, math.pi / 2, 5)), points=257)

        for i in range(sino.phases.size):
            row = sino.row(i)
            assert row.integral() == pytest.approx(1.0)
            assert row.density == pytest.approx(row.density[::-1])

        assert sino.variances() == pytest.approx(np.full(sino.phases.size, 0.25), rel=1e-3)


class TestBuildSinogramInvalid:
    def test_single_phase(self):
        with pytest.raises(SinogramError):
            build_sinogram(_gaussian_rows([0.0]))

    def test_coverage_short_of_a_quarter_turn(self):
        with pytest.raises(SinogramError):
            build_sinogram(_gaussian_rows(np.linspace(0, 1.2, 5)))

    def test_coverage_missing_zero(self):
        with pytest.raises(SinogramError):
            build_sinogram(_gaussian_rows(np.linspace(0.2, math.pi / 2, 5)))

    def test_duplicate_phases(self):
        with pytest.raises(SinogramError):
            build_sinogram(_gaussian_rows([0.0, 0.5, 0.5, math.pi / 2]))

    def test_grid_narrower_than_the_support(self):
        with pytest.raises(SinogramError):
            build_sinogram(_gaussian_rows(np.linspace(0, math.pi / 2, 5)), half_width=1.0)


class TestForwardRadon:
    def test_gaussian_rows(self):
        state = make_gaussian(StateSpec.squeezed_vacuum(0.5))
        phases = np.linspace(0, math.pi, 12, endpoint=False)
        sino = forward_radon(state, phases, np.linspace(-4, 4, 401))

        assert sino.variances() == pytest.approx([state.variance(theta) for theta in phases], rel=1e-3)

    def test_invalid_phases(self):
        with pytest.raises(ValueError):
            forward_radon(GaussianState.vacuum(), [0.0, math.pi], np.linspace(-3, 3, 61))


class TestSinogram:
    def test_equality(self):
        x = np.linspace(-1, 1, 5)
        rows = np.ones((2, 5))

        assert Sinogram([0.0, 1.0], x, rows) == Sinogram([0.0, 1.0], x, rows.copy())
        assert Sinogram([0.0, 1.0], x, rows) != Sinogram([0.0, 1.0], x, 2 * rows)

    def test_non_uniform_axis(self):
        with pytest.raises(ValueError):
            Sinogram([0.0], np.array([0.0, 1.0, 3.0]), np.ones((1, 3)))
