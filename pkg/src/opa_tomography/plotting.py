"""SVG figures for the data files; rendering is byte-for-byte reproducible."""
from __future__ import annotations

import logging
from pathlib import Path

import matplotlib
matplotlib.use('Agg')
from matplotlib.figure import Figure
import numpy as np

from . import formats
from .errors import UnknownFileTypeError
from .states import CONVENTION

LOG = logging.getLogger(__name__)

matplotlib.rcParams['svg.hashsalt'] = 'opa-tomography'
matplotlib.rcParams['svg.fonttype'] = 'path'

SVG_METADATA = {'Date': None}

# Vacuum W at 1/sqrt(e) of its peak: the circle of radius 1/2.
VACUUM_CONTOUR = 2 / np.pi * np.exp(-0.5)


def _save(fig: Figure, path: Path) -> Path:
    fig.savefig(path, format='svg', metadata=SVG_METADATA)
    return path


def plot_wigner_grid(path: Path, fig: Figure):
    grid = formats.read_wigner_grid(path)
    ax = fig.add_subplot()
    limit = float(np.max(np.abs(grid.values)))
    image = ax.pcolormesh(grid.x, grid.p, grid.values.T, cmap='RdBu_r', vmin=-limit, vmax=limit, shading='auto')
    fig.colorbar(image, ax=ax, label='W(x, p)')

    X, P = grid.meshgrid()
    ax.contour(grid.x, grid.p, CONVENTION.vacuum_wigner(X, P).T, levels=[VACUUM_CONTOUR], colors='white', linestyles='dashed')
    ax.set_xlabel('x')
    ax.set_ylabel('p')

    x_min, x_max, p_min, p_max = grid.extent

    if max(x_max - x_min, p_max - p_min) <= 10 * min(x_max - x_min, p_max - p_min):
        ax.set_aspect('equal')


def plot_sinogram(path: Path, fig: Figure):
    sino = formats.read_sinogram(path)
    ax = fig.add_subplot()
    image = ax.pcolormesh(sino.x, sino.phases, sino.rows, cmap='viridis', shading='auto')
    fig.colorbar(image, ax=ax, label='P(x_theta)')
    ax.set_xlabel('x_theta')
    ax.set_ylabel('theta (rad)')


def plot_photon_histograms(path: Path, fig: Figure):
    _, frame = formats.read_table(path)
    ax = fig.add_subplot()

    for phase, rows in frame.groupby('phase', sort=True):
        edges = np.append(rows['bin_low'].to_numpy(), rows['bin_high'].to_numpy()[-1])
        ax.stairs(rows['density'].to_numpy(), edges, label=f'theta={phase:.3f}')

    ax.set_xlabel('N')
    ax.set_ylabel('P(N)')
    ax.set_yscale('log')
    ax.legend(fontsize='x-small', ncol=2)


def plot_quadrature_distributions(path: Path, fig: Figure):
    _, frame = formats.read_table(path)
    ax = fig.add_subplot()

    for phase, rows in frame.groupby('phase', sort=True):
        line, = ax.plot(rows['x'], rows['density'], marker='.', linestyle='none', label=f'theta={phase:.3f}')

        if 'fit' in rows:
            ax.plot(rows['x'], rows['fit'], color=line.get_color())

    ax.set_xlabel('x_theta')
    ax.set_ylabel('P(x_theta)')
    ax.legend(fontsize='x-small', ncol=2)


def plot_variance_curve(path: Path, fig: Figure):
    _, frame = formats.read_table(path)
    ax = fig.add_subplot()
    ax.errorbar(frame['phase'], frame['ratio'], yerr=frame['ratio_error'], fmt='o', label='measured')
    ax.plot(frame['phase'], frame['fit'], label='a cos^2(theta) + d')
    ax.set_xlabel('theta (rad)')
    ax.set_ylabel('Var(x_theta) / Var(x_vac)')
    ax.set_yscale('log')
    ax.legend()


def plot_generic_table(path: Path, fig: Figure):
    """First column against every other column."""
    _, frame = formats.read_table(path)
    ax = fig.add_subplot()
    x_name = frame.columns[0]

    for name in frame.columns[1:]:
        ax.plot(frame[x_name], frame[name], label=name)

    ax.set_xlabel(x_name)
    ax.legend()


PLOTTERS = {
    formats.WIGNER_GRID: plot_wigner_grid,
    formats.SINOGRAM: plot_sinogram,
    formats.PHOTON_HISTOGRAMS: plot_photon_histograms,
    formats.QUADRATURE_DISTRIBUTIONS: plot_quadrature_distributions,
    formats.VARIANCE_CURVE: plot_variance_curve,
}


def plot_file(path) -> Path:
    """Render `path` to `<path>.svg` according to its `# kind=` line."""
    path = Path(path)
    kind = formats.read_kind(path)

    if kind in PLOTTERS:
        plotter = PLOTTERS[kind]
    elif kind.startswith(formats.EXAMPLE_PREFIX):
        plotter = plot_generic_table
    else:
        raise UnknownFileTypeError(path=path, kind=kind)

    fig = Figure(figsize=(6.4, 4.8))
    plotter(path, fig)
    fig.suptitle(path.name)
    out = path.with_name(path.name + '.svg')
    _save(fig, out)
    LOG.info(f"Wrote {out}")
    return out

