"""Filtered backprojection of a quadrature sinogram onto a Wigner grid."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
import logging
import math

import numpy as np
from tqdm import tqdm
from tqdm.contrib.logging import logging_redirect_tqdm

from ..errors import ReconstructionError
from ..states import WignerGrid
from .params import ReconstructionParams
from .sinogram import Sinogram

LOG = logging.getLogger(__name__)

MIN_ANGLES = 9
SUPPORT_MASS = 1e-3


def ramp_response(n: int) -> np.ndarray:
    """DFT of the band-limited ramp kernel (1/4 at 0, -1/(pi k)^2 at odd k), about |f| in cycles per sample."""
    k = np.concatenate((np.arange(0, n // 2 + 1), np.arange(n // 2 - 1, 0, -1)))
    kernel = np.zeros(n)
    kernel[0] = 0.25
    odd = k % 2 == 1
    kernel[odd] = -1 / (math.pi * k[odd]) ** 2
    return np.real(np.fft.fft(kernel))


def window_response(name: str, n: int, cutoff: float) -> np.ndarray:
    """Apodization over |f| / f_Nyquist, zero beyond `cutoff`."""
    nu = np.abs(np.fft.fftfreq(n)) / 0.5
    scaled = nu / cutoff

    if name == 'ramp':
        window = np.ones(n)
    elif name == 'hann':
        window = 0.5 * (1 + np.cos(math.pi * scaled))
    elif name == 'hamming':
        window = 0.54 + 0.46 * np.cos(math.pi * scaled)
    elif name == 'cosine':
        window = np.cos(0.5 * math.pi * scaled)
    elif name == 'shepp-logan':
        window = np.sinc(0.5 * scaled)
    else:
        raise ValueError(f"Unknown filter window '{name}'")

    window[scaled > 1] = 0.0
    return window


def filter_rows(rows: np.ndarray, dx: float, params: ReconstructionParams) -> np.ndarray:
    """Ramp-filter every row in the frequency domain, zero-padded to a power of two."""
    n = rows.shape[1]
    n_pad = 2 ** int(math.ceil(math.log2(2 * n)))
    response = ramp_response(n_pad) * window_response(params.filter_window, n_pad, params.cutoff)

    padded = np.zeros((rows.shape[0], n_pad))
    padded[:, :n] = rows
    filtered = np.real(np.fft.ifft(np.fft.fft(padded, axis=1) * response, axis=1))
    return filtered[:, :n] / dx


def angle_weights(phases: np.ndarray) -> np.ndarray:
    """Trapezoid weights over the half-turn with wrap-around; pi / K for K uniform angles."""
    before = np.concatenate(([phases[-1] - math.pi], phases[:-1]))
    after = np.concatenate((phases[1:], [phases[0] + math.pi]))
    return 0.5 * (after - before)


def grid_half_width(sino: Sinogram, params: ReconstructionParams) -> float:
    support = sino.support_radius(SUPPORT_MASS)

    if params.half_width is None:
        return max(0.5, math.ceil(2 * support) / 2)

    if params.half_width < support:
        raise ReconstructionError(
            f"Grid half-width {params.half_width} is smaller than the sinogram support {support:.3f}"
        )

    return params.half_width


def _extended(sino: Sinogram, reach: float) -> tuple[np.ndarray, np.ndarray]:
    """Rows zero-padded symmetrically so the grid covers |t| <= reach."""
    extra = max(0, int(math.ceil((reach - sino.half_width) / sino.dx)))

    if extra == 0:
        return np.asarray(sino.x), np.asarray(sino.rows)

    steps = np.arange(1, extra + 1) * sino.dx
    x = np.concatenate((sino.x[0] - steps[::-1], sino.x, sino.x[-1] + steps))
    rows = np.pad(sino.rows, ((0, 0), (extra, extra)))
    return x, rows


def _backproject(q: np.ndarray, x: np.ndarray, theta: float, weight: float, X: np.ndarray, P: np.ndarray, interpolation: str) -> np.ndarray:
    t = X * math.cos(theta) + P * math.sin(theta)

    if interpolation == 'nearest':
        index = np.clip(np.rint((t - x[0]) / (x[1] - x[0])).astype(int), 0, x.size - 1)
        values = q[index]
    else:
        values = np.interp(t, x, q, left=0.0, right=0.0)

    return weight * values


def inverse_radon(sino: Sinogram, params: ReconstructionParams = None, *, progress: bool = False) -> WignerGrid:
    params = ReconstructionParams() if params is None else params

    if sino.phases.size < MIN_ANGLES:
        raise ReconstructionError(f"Backprojection needs at least {MIN_ANGLES} angles, got {sino.phases.size}")

    L = grid_half_width(sino, params)
    x_grid = np.linspace(-L, L, params.nx)
    p_grid = np.linspace(-L, L, params.n_p)
    X, P = np.meshgrid(x_grid, p_grid, indexing='ij')

    x, rows = _extended(sino, math.hypot(L, L))
    filtered = filter_rows(rows, sino.dx, params)
    weights = angle_weights(np.asarray(sino.phases))

    LOG.debug(
        f"Backproject {sino.phases.size} angles onto {params.nx}x{params.n_p} over [-{L}, {L}] "
        f"({params.filter_window} window, cutoff {params.cutoff})"
    )

    values = np.zeros_like(X)

    with logging_redirect_tqdm(), ThreadPoolExecutor(max_workers=params.workers) as pool:
        partials = [
            pool.submit(_backproject, q, x, theta, weight, X, P, params.interpolation)
            for q, theta, weight in zip(filtered, sino.phases, weights)
        ]

        # Summed in angle order whatever the completion order.
        for partial in tqdm(partials, desc="Backproject", disable=not progress):
            values += partial.result()

    return WignerGrid(x_grid, p_grid, values).normalized()
