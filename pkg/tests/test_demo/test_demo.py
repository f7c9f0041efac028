import math

import numpy as np
import pytest
from scipy.integrate import trapezoid

from opa_tomography import formats
from opa_tomography.demo import DEMO_SQUEEZING_DB, demo_state, worked_example, write_worked_example

from tests.helpers.oracles import fock_origin


@pytest.fixture(scope='module')
def example():
    return worked_example()


def test_demo_state(reference_values):
    expected = reference_values['worked_example']

    assert DEMO_SQUEEZING_DB == expected['squeezing_db']
    assert demo_state().g_sq == pytest.approx(expected['squeezing_db'] * math.log(10) / 20)


def test_input_is_negative_at_the_origin(example):
    assert example.input_grid.values.min() == pytest.approx(fock_origin(1), rel=1e-3)


def test_amplified_grid_is_stretched(example):
    x_min, x_max, p_min, p_max = example.amplified_grid.extent

    assert x_max / p_max == pytest.approx(math.exp(2 * 2.7))
    assert example.amplified_grid.values.min() == pytest.approx(fock_origin(1), rel=1e-3)


def test_photon_numbers_are_normalized(example):
    frame = example.photon_numbers

    assert trapezoid(frame['density'], frame['N']) == pytest.approx(1.0, abs=1e-2)
    assert np.all(frame['density'] >= 0)


def test_recovered_quadrature_matches_the_marginal(example):
    frame = example.recovered
    peak = frame['marginal'].max()

    assert np.max(np.abs(frame['recovered'] - frame['marginal'])) < 0.02 * peak


def test_write(example, tmp_path):
    paths = write_worked_example(example, tmp_path)

    assert sorted(paths) == ['a', 'b', 'c', 'd']
    assert formats.read_kind(paths['a']) == formats.WIGNER_GRID
    assert formats.read_kind(paths['c']).startswith(formats.EXAMPLE_PREFIX)
    assert formats.read_wigner_grid(paths['a']) == example.input_grid
