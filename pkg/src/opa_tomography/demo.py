"""Worked example of the measurement principle on a squeezed single photon.

Produces the input Wigner function, the amplified (stretched) Wigner
function, the photon-number distribution behind the amplifier and the
quadrature distribution recovered from it.
"""
from __future__ import annotations

import logging
import math
from pathlib import Path

import attr
import numpy as np
import pandas as pd

from . import formats
from .opa import photon_number_density
from .reconstruction import recover_quadrature_density
from .states import StateSpec, WignerGrid, amplify_wigner, build_wigner_grid, marginal_density, rotation

LOG = logging.getLogger(__name__)

DEMO_SQUEEZING_DB = 4.3
DEMO_GAIN = 2.7
DEMO_THETA = math.pi / 4
QUADRATURE_POINTS = 4001
AMPLIFIED_POINTS = 201

INPUT_WIGNER_FILE = 'example_a_input_wigner.csv'
AMPLIFIED_WIGNER_FILE = 'example_b_amplified_wigner.csv'
PHOTON_NUMBERS_FILE = 'example_c_photon_numbers.csv'
RECOVERED_QUADRATURE_FILE = 'example_d_recovered_quadrature.csv'
WORKED_EXAMPLE_FILES = (INPUT_WIGNER_FILE, AMPLIFIED_WIGNER_FILE, PHOTON_NUMBERS_FILE, RECOVERED_QUADRATURE_FILE)


@attr.s(frozen=True)
class WorkedExample:
    input_grid: WignerGrid       = attr.ib()
    amplified_grid: WignerGrid   = attr.ib()
    photon_numbers: pd.DataFrame = attr.ib(eq=False)
    recovered: pd.DataFrame      = attr.ib(eq=False)


def demo_state() -> StateSpec:
    return StateSpec.squeezed_fock(1, g_sq=DEMO_SQUEEZING_DB * math.log(10) / 20)


def amplified_grid(spec: StateSpec, G: float, theta: float, half_width: float) -> WignerGrid:
    """Amplified W sampled in the frame (x_theta, p_theta) of the amplified quadrature."""
    W = amplify_wigner(spec, G, theta)
    u = np.linspace(-half_width * math.exp(G), half_width * math.exp(G), AMPLIFIED_POINTS)
    v = np.linspace(-half_width * math.exp(-G), half_width * math.exp(-G), AMPLIFIED_POINTS)
    U, V = np.meshgrid(u, v, indexing='ij')
    R = rotation(theta)
    return WignerGrid(u, v, W(R[0, 0] * U + R[0, 1] * V, R[1, 0] * U + R[1, 1] * V))


def worked_example(G: float = DEMO_GAIN, theta: float = DEMO_THETA, spec: StateSpec = None) -> WorkedExample:
    spec = demo_state() if spec is None else spec
    grid = build_wigner_grid(spec)
    half_width = grid.extent[1]

    x = np.linspace(-half_width, half_width, QUADRATURE_POINTS)
    P_x = marginal_density(grid, theta, x)
    N, P_N = photon_number_density(x, P_x, G)
    x_rec, P_rec = recover_quadrature_density(N, P_N, G)

    return WorkedExample(
        input_grid=grid,
        amplified_grid=amplified_grid(spec, G, theta, half_width),
        photon_numbers=pd.DataFrame({'N': N, 'density': P_N}),
        recovered=pd.DataFrame({'x': x_rec, 'recovered': P_rec, 'marginal': P_x[x > 0]}),
    )


def write_worked_example(result: WorkedExample, out_dir) -> dict[str, Path]:
    out_dir = Path(out_dir)
    paths = {
        'a': formats.write_wigner_grid(result.input_grid, out_dir / INPUT_WIGNER_FILE),
        'b': formats.write_wigner_grid(result.amplified_grid, out_dir / AMPLIFIED_WIGNER_FILE),
        'c': formats.write_table(result.photon_numbers, out_dir / PHOTON_NUMBERS_FILE, 'example_photon_numbers'),
        'd': formats.write_table(result.recovered, out_dir / RECOVERED_QUADRATURE_FILE, 'example_recovered_quadrature'),
    }
    LOG.info(f"Wrote worked example to {out_dir}")
    return paths
