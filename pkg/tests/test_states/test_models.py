import math

import numpy as np
import pytest

from opa_tomography.states import (
    CONVENTION, PURE_DETERMINANT, GaussianState, StateSpec, WignerGrid, gaussian_loss, make_gaussian, rotate,
)

from tests.helpers.oracles import squeezed_variances


class TestStateSpecValid:
    SPECS = {
        'vacuum':          StateSpec.vacuum(),
        'squeezed_vacuum': StateSpec.squeezed_vacuum(1.0),
        'fock':            StateSpec.fock(2),
        'squeezed_fock':   StateSpec.squeezed_fock(1, 0.5),
        'cat__even':       StateSpec.cat(1.5),
        'cat__odd':        StateSpec.cat(1.5, 'odd'),
    }

    @pytest.mark.parametrize('spec', SPECS.values(), ids=SPECS.keys())
    def test_to_dict_names_kind(self, spec):
        assert spec.to_dict()['kind'] == spec.kind

    def test_to_dict_keeps_used_fields_only(self):
        assert StateSpec.vacuum().to_dict() == {'kind': 'vacuum'}
        assert StateSpec.fock(3).to_dict() == {'kind': 'fock', 'n': '3'}
        assert StateSpec.squeezed_vacuum(1.0).to_dict() == {'kind': 'squeezed_vacuum', 'g_sq': '1.0', 'squeeze_angle': '0.0'}

    def test_gaussian_kinds(self):
        assert StateSpec.vacuum().is_gaussian
        assert StateSpec.squeezed_vacuum(1.0).is_gaussian
        assert not StateSpec.fock(1).is_gaussian

    REFLECTION = {
        'angle_0':       (0.0, True),
        'angle_pi_2':    (math.pi / 2, True),
        'angle_pi_4':    (math.pi / 4, False),
        'angle_pi_3':    (math.pi / 3, False),
    }

    @pytest.mark.parametrize('angle, expected', REFLECTION.values(), ids=REFLECTION.keys())
    def test_reflection_symmetry(self, angle, expected):
        assert StateSpec.squeezed_vacuum(1.0, angle).is_reflection_symmetric == expected

    def test_unsqueezed_states_are_reflection_symmetric(self):
        assert StateSpec.squeezed_vacuum(0.0, math.pi / 4).is_reflection_symmetric
        assert StateSpec.cat(2.0).is_reflection_symmetric

    def test_largest_quadrature_variance(self):
        anti, _ = squeezed_variances(1.0)
        assert StateSpec.squeezed_vacuum(1.0).largest_quadrature_variance == pytest.approx(anti)
        assert StateSpec.fock(1).largest_quadrature_variance == pytest.approx(0.75)


class TestStateSpecInvalid:
    INVALID = {
        'kind__unknown':       dict(kind='thermal'),
        'g_sq__negative':      dict(kind='squeezed_vacuum', g_sq=-0.1),
        'g_sq__nan':           dict(kind='squeezed_vacuum', g_sq=float('nan')),
        'n__negative':         dict(kind='fock', n=-1),
        'parity__unknown':     dict(kind='cat', parity='both'),
        'amplitude__odd_zero': dict(kind='cat', amplitude=0.0, parity='odd'),
    }

    @pytest.mark.parametrize('kwargs', INVALID.values(), ids=INVALID.keys())
    def test_invalid(self, kwargs):
        with pytest.raises(ValueError):
            StateSpec(**kwargs)


class TestGaussianState:
    def test_default_angle_squeezes_p(self):
        state = make_gaussian(StateSpec.squeezed_vacuum(1.0))
        anti, squeezed = squeezed_variances(1.0)

        assert state.variance(0.0) == pytest.approx(anti)
        assert state.variance(math.pi / 2) == pytest.approx(squeezed)
        assert state.conjugate_variance(0.0) == pytest.approx(squeezed)

    def test_squeezed_vacuum_is_pure(self):
        state = make_gaussian(StateSpec.squeezed_vacuum(1.3, 0.4))

        assert state.is_pure
        assert state.purity == pytest.approx(1.0)
        assert state.determinant == pytest.approx(PURE_DETERMINANT)

    def test_rotated_axes(self):
        state = make_gaussian(StateSpec.squeezed_vacuum(1.0))
        anti, squeezed = squeezed_variances(1.0)
        turned = rotate(state, math.pi / 2)

        assert turned.variance(math.pi / 2) == pytest.approx(anti)
        assert turned.variance(0.0) == pytest.approx(squeezed)

    def test_squeeze_angle_moves_the_anti_squeezed_axis(self):
        state = make_gaussian(StateSpec.squeezed_vacuum(1.0, math.pi / 4))
        anti, _ = squeezed_variances(1.0)
        assert state.variance(math.pi / 4) == pytest.approx(anti)

    def test_loss_mixes_in_vacuum(self):
        state = gaussian_loss(make_gaussian(StateSpec.squeezed_vacuum(1.0)), 0.5)
        anti, squeezed = squeezed_variances(1.0)

        assert state.variance(0.0) == pytest.approx(0.5 * anti + 0.125)
        assert state.variance(math.pi / 2) == pytest.approx(0.5 * squeezed + 0.125)
        assert state.purity < 1

    def test_full_loss_gives_vacuum(self):
        state = gaussian_loss(make_gaussian(StateSpec.squeezed_vacuum(2.0)), 0.0)
        assert state == GaussianState.vacuum()

    def test_make_gaussian_rejects_non_gaussian_kinds(self):
        with pytest.raises(ValueError):
            make_gaussian(StateSpec.fock(1))

    INVALID_COVARIANCES = {
        'shape':          np.eye(3) * 0.25,
        'asymmetric':     np.array([[0.3, 0.1], [0.0, 0.3]]),
        'not_definite':   np.array([[0.25, 0.0], [0.0, -0.25]]),
        'below_vacuum':   np.eye(2) * 0.2,
    }

    @pytest.mark.parametrize('cov', INVALID_COVARIANCES.values(), ids=INVALID_COVARIANCES.keys())
    def test_invalid_covariance(self, cov):
        with pytest.raises(ValueError):
            GaussianState(cov)

    def test_covariance_is_read_only(self):
        state = GaussianState.vacuum()

        with pytest.raises(ValueError):
            state.cov[0, 0] = 1.0


class TestWignerGrid:
    def test_from_function(self):
        grid = WignerGrid.from_function(CONVENTION.vacuum_wigner, nx=101, n_p=81, extent=(-3, 3, -2, 2))

        assert grid.values.shape == (101, 81)
        assert grid.extent == (-3.0, 3.0, -2.0, 2.0)
        assert grid.dx == pytest.approx(0.06)
        assert grid.integrate() == pytest.approx(1.0, abs=1e-4)

    def test_covers(self):
        grid = WignerGrid.from_function(CONVENTION.vacuum_wigner, nx=11, n_p=11, extent=(-2, 2, -1, 1))

        assert grid.covers(1.0)
        assert not grid.covers(1.5)

    def test_equality_compares_values(self):
        grid = WignerGrid.from_function(CONVENTION.vacuum_wigner, nx=11, n_p=11, extent=(-2, 2, -2, 2))

        assert grid == grid.with_values(np.array(grid.values))
        assert grid != grid.with_values(2 * grid.values)

    INVALID_AXES = {
        'too_short':    (np.array([0.0, 1.0]), np.linspace(-1, 1, 5)),
        'non_uniform':  (np.array([0.0, 1.0, 3.0]), np.linspace(-1, 1, 5)),
        'decreasing':   (np.linspace(1, -1, 5), np.linspace(-1, 1, 5)),
    }

    @pytest.mark.parametrize('x, p', INVALID_AXES.values(), ids=INVALID_AXES.keys())
    def test_invalid_axes(self, x, p):
        with pytest.raises(ValueError):
            WignerGrid(x, p, np.zeros((x.size, p.size)))

    def test_values_shape_must_match(self):
        with pytest.raises(ValueError):
            WignerGrid(np.linspace(-1, 1, 5), np.linspace(-1, 1, 7), np.zeros((7, 5)))


def test_decibels_relative_to_vacuum():
    assert CONVENTION.decibels(0.25) == 0.0
    assert CONVENTION.decibels(0.25 * math.exp(-2)) == pytest.approx(-8.6859, abs=1e-4)
