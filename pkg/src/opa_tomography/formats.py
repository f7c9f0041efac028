"""Text formats of every data file; each starts with a `# kind=<type>` line."""
from __future__ import annotations

from pathlib import Path

import numpy as np
import pandas as pd

from .errors import EmptyTableError, UnknownFileTypeError
from .reconstruction import Sinogram
from .states import WignerGrid

FLOAT_FORMAT = '%.17g'

WIGNER_GRID = 'wigner_grid'
SINOGRAM = 'sinogram'
PHOTON_HISTOGRAMS = 'photon_histograms'
QUADRATURE_DISTRIBUTIONS = 'quadrature_distributions'
VARIANCE_CURVE = 'variance_curve'
METRICS = 'metrics'
RUN_METADATA = 'run_metadata'
EXAMPLE_PREFIX = 'example_'


def _format_values(values) -> str:
    return ','.join(repr(float(value)) for value in values)


def _parse_values(text: str) -> np.ndarray:
    return np.array([float(value) for value in text.split(',')]) if text else np.empty(0)


def read_header(path) -> dict[str, str]:
    """Leading `# key=value` lines of a data file."""
    header = {}

    with open(path, 'r', encoding='utf-8') as f:
        for line in f:
            if not line.startswith('# ') or '=' not in line:
                break

            key, value = line[2:].rstrip('\n').split('=', 1)
            header[key] = value

    return header


def read_kind(path) -> str:
    header = read_header(path)

    if 'kind' not in header:
        raise UnknownFileTypeError(path=path, kind=None)

    return header['kind']


def _write(path, header: dict[str, str], frame: pd.DataFrame = None, *, columns: bool = True):
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        for key, value in header.items():
            f.write(f'# {key}={value}\n')

        if frame is not None:
            frame.to_csv(f, index=False, header=columns, float_format=FLOAT_FORMAT, lineterminator='\n')

    return Path(path)


def write_wigner_grid(grid: WignerGrid, path) -> Path:
    header = {
        'kind': WIGNER_GRID,
        'nx': str(grid.nx),
        'np': str(grid.n_p),
        'extent': _format_values(grid.extent),
    }
    return _write(path, header, pd.DataFrame(grid.values), columns=False)


def read_wigner_grid(path) -> WignerGrid:
    header = read_header(path)
    x_min, x_max, p_min, p_max = _parse_values(header['extent'])
    nx, n_p = int(header['nx']), int(header['np'])
    values = pd.read_csv(path, comment='#', header=None).to_numpy(dtype=float)
    return WignerGrid(np.linspace(x_min, x_max, nx), np.linspace(p_min, p_max, n_p), values)


def write_sinogram(sino: Sinogram, path) -> Path:
    header = {
        'kind': SINOGRAM,
        'phases': _format_values(sino.phases),
        'measured': ','.join('1' if flag else '0' for flag in sino.measured),
        'x': _format_values(sino.x),
    }
    return _write(path, header, pd.DataFrame(sino.rows), columns=False)


def read_sinogram(path) -> Sinogram:
    header = read_header(path)
    rows = pd.read_csv(path, comment='#', header=None).to_numpy(dtype=float)
    measured = [flag == '1' for flag in header['measured'].split(',')]
    return Sinogram(_parse_values(header['phases']), _parse_values(header['x']), rows, measured)


def write_table(frame: pd.DataFrame, path, kind: str, **header) -> Path:
    return _write(path, {'kind': kind, **header}, frame)


def read_table(path) -> tuple[str, pd.DataFrame]:
    kind = read_kind(path)
    frame = pd.read_csv(path, comment='#')

    if frame.empty:
        raise EmptyTableError(path=path)

    return kind, frame


def write_key_values(values: dict[str, str], path, kind: str) -> Path:
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(f'# kind={kind}\n')

        for key, value in values.items():
            f.write(f'{key}={value}\n')

    return Path(path)


def read_key_values(path) -> dict[str, str]:
    values = {}

    with open(path, 'r', encoding='utf-8') as f:
        for line in f:
            line = line.rstrip('\n')

            if not line or line.startswith('#'):
                continue

            key, value = line.split('=', 1)
            values[key] = value

    return values


def histogram_table(histograms) -> pd.DataFrame:
    frames = [
        pd.DataFrame({
            'phase': hist.phase,
            'bin_low': hist.bin_edges[:-1],
            'bin_high': hist.bin_edges[1:],
            'count': hist.counts.astype(int),
            'density': hist.density,
        })
        for hist in histograms
    ]
    return pd.concat(frames, ignore_index=True)


def quadrature_table(distributions, fits=()) -> pd.DataFrame:
    """Long table of recovered densities, with the Gaussian fit evaluated at the same points."""
    fits = {fit.phase: fit for fit in fits}
    frames = []

    for dist in distributions:
        frame = pd.DataFrame({'phase': dist.phase, 'x': dist.x, 'density': dist.density})

        if dist.phase in fits:
            frame['fit'] = fits[dist.phase].density_at(dist.x)

        frames.append(frame)

    return pd.concat(frames, ignore_index=True)


def variance_table(curve) -> pd.DataFrame:
    return pd.DataFrame({
        'phase': curve.phases,
        'ratio': curve.ratios,
        'ratio_error': curve.ratio_errors,
        'fit': curve.ratio(curve.phases),
    })
