import numpy as np
import pandas as pd
import pytest

from opa_tomography import formats
from opa_tomography.errors import UnknownFileTypeError
from opa_tomography.plotting import plot_file
from opa_tomography.states import StateSpec, build_wigner_grid


@pytest.fixture
def wigner_path(tmp_path):
    return formats.write_wigner_grid(build_wigner_grid(StateSpec.fock(1), nx=41, n_p=41), tmp_path / 'wigner_grid.csv')


@pytest.fixture
def variance_path(tmp_path):
    phases = np.linspace(0, np.pi / 2, 5)
    frame = pd.DataFrame({
        'phase': phases,
        'ratio': 7 * np.cos(phases) ** 2 + 0.18,
        'ratio_error': np.full(5, 0.01),
        'fit': 7 * np.cos(phases) ** 2 + 0.18,
    })
    return formats.write_table(frame, tmp_path / 'variance_curve.csv', formats.VARIANCE_CURVE)


def test_writes_svg_next_to_the_input(wigner_path):
    out = plot_file(wigner_path)

    assert out == wigner_path.with_name('wigner_grid.csv.svg')
    assert out.read_text().lstrip().startswith('<?xml')


def test_rendering_is_reproducible(variance_path):
    first = plot_file(variance_path).read_bytes()
    second = plot_file(variance_path).read_bytes()

    assert first == second


def test_example_tables_use_the_generic_plot(tmp_path):
    frame = pd.DataFrame({'x': [0.1, 0.2, 0.3], 'recovered': [1.0, 0.8, 0.5], 'marginal': [1.0, 0.8, 0.5]})
    path = formats.write_table(frame, tmp_path / 'example_d.csv', 'example_recovered_quadrature')

    assert plot_file(path).exists()


def test_unknown_kind(tmp_path):
    path = formats.write_key_values({'a': '1'}, tmp_path / 'metrics.txt', formats.METRICS)

    with pytest.raises(UnknownFileTypeError):
        plot_file(path)
