from __future__ import annotations

import math

import attr
from attr.validators import instance_of
import numpy as np
from scipy.integrate import trapezoid

from .. import VACUUM_VARIANCE
from ..validators import finite, not_negative, one_of

VACUUM = 'vacuum'
SQUEEZED_VACUUM = 'squeezed_vacuum'
FOCK = 'fock'
SQUEEZED_FOCK = 'squeezed_fock'
CAT = 'cat'

STATE_KINDS = (VACUUM, SQUEEZED_VACUUM, FOCK, SQUEEZED_FOCK, CAT)
GAUSSIAN_KINDS = (VACUUM, SQUEEZED_VACUUM)

# Pure single-mode states have det(cov) = 1/16 in these units.
PURE_DETERMINANT = VACUUM_VARIANCE ** 2


@attr.s(frozen=True)
class QuadratureConvention:
    """Quadrature units in which the vacuum variance is 1/4 and W integrates to 1."""

    vacuum_variance: float = attr.ib(default=VACUUM_VARIANCE)
    wigner_normalization: float = attr.ib(default=1.0)

    def vacuum_wigner(self, x, p):
        return (2 / np.pi) * np.exp(-2 * (np.square(x) + np.square(p)))

    def mean_photon_number(self, var_x: float, var_p: float) -> float:
        return var_x + var_p - 0.5

    def decibels(self, variance: float) -> float:
        return 10 * math.log10(variance / self.vacuum_variance)


CONVENTION = QuadratureConvention()


def _amplitude_valid_for_parity(instance, attribute, value):
    if instance.kind == CAT and instance.parity == 'odd' and value == 0:
        raise ValueError("'amplitude' must be positive for an odd cat state")


@attr.s(frozen=True)
class StateSpec:
    """Description of an inversion-symmetric input state.

    Only the fields relevant to `kind` are read; the others keep their
    defaults so that specs compare and serialize uniformly.
    """

    kind: str            = attr.ib(validator=[instance_of(str), one_of(*STATE_KINDS)])
    g_sq: float          = attr.ib(default=0.0, converter=float, validator=[finite, not_negative])
    squeeze_angle: float = attr.ib(default=0.0, converter=float, validator=[finite])
    n: int               = attr.ib(default=1, converter=int, validator=[not_negative])
    amplitude: float     = attr.ib(default=1.0, converter=float, validator=[finite, not_negative, _amplitude_valid_for_parity])
    parity: str          = attr.ib(default='even', validator=[one_of('even', 'odd')])

    @classmethod
    def vacuum(cls) -> StateSpec:
        return cls(VACUUM)

    @classmethod
    def squeezed_vacuum(cls, g_sq: float, squeeze_angle: float = 0.0) -> StateSpec:
        return cls(SQUEEZED_VACUUM, g_sq=g_sq, squeeze_angle=squeeze_angle)

    @classmethod
    def fock(cls, n: int) -> StateSpec:
        return cls(FOCK, n=n)

    @classmethod
    def squeezed_fock(cls, n: int, g_sq: float, squeeze_angle: float = 0.0) -> StateSpec:
        return cls(SQUEEZED_FOCK, n=n, g_sq=g_sq, squeeze_angle=squeeze_angle)

    @classmethod
    def cat(cls, amplitude: float, parity: str = 'even') -> StateSpec:
        return cls(CAT, amplitude=amplitude, parity=parity)

    @property
    def is_gaussian(self) -> bool:
        return self.kind in GAUSSIAN_KINDS

    @property
    def is_squeezed(self) -> bool:
        return self.kind in (SQUEEZED_VACUUM, SQUEEZED_FOCK) and self.g_sq > 0

    @property
    def is_reflection_symmetric(self) -> bool:
        """Whether W(x, p) = W(x, -p), so that P_theta equals P_(pi - theta)."""
        if not self.is_squeezed:
            return True

        quarter_turns = self.squeeze_angle / (math.pi / 2)
        return math.isclose(quarter_turns, round(quarter_turns), abs_tol=1e-12)

    @property
    def largest_quadrature_variance(self) -> float:
        if self.kind == VACUUM:
            return VACUUM_VARIANCE

        if self.kind == SQUEEZED_VACUUM:
            return math.exp(2 * self.g_sq) * VACUUM_VARIANCE

        if self.kind == FOCK:
            return (2 * self.n + 1) * VACUUM_VARIANCE

        if self.kind == SQUEEZED_FOCK:
            return (2 * self.n + 1) * VACUUM_VARIANCE * math.exp(2 * self.g_sq)

        overlap = math.exp(-2 * self.amplitude ** 2)
        sign = 1 if self.parity == 'even' else -1
        return VACUUM_VARIANCE + self.amplitude ** 2 / (1 + sign * overlap)

    def to_dict(self) -> dict[str, str]:
        """Config-file representation, limited to the fields the kind uses."""
        fields = {'kind': self.kind}

        if self.kind in (SQUEEZED_VACUUM, SQUEEZED_FOCK):
            fields['g_sq'] = repr(self.g_sq)
            fields['squeeze_angle'] = repr(self.squeeze_angle)

        if self.kind in (FOCK, SQUEEZED_FOCK):
            fields['n'] = str(self.n)

        if self.kind == CAT:
            fields['amplitude'] = repr(self.amplitude)
            fields['parity'] = self.parity

        return fields


def readonly_array(value) -> np.ndarray:
    array = np.array(value, dtype=float)
    array.setflags(write=False)
    return array


def _physical_covariance(instance, attribute, value):
    if value.shape != (2, 2):
        raise ValueError(f"'{attribute.name}' must be a 2x2 matrix")

    if not np.all(np.isfinite(value)):
        raise ValueError(f"'{attribute.name}' must be finite")

    if not np.isclose(value[0, 1], value[1, 0], rtol=1e-12, atol=1e-15):
        raise ValueError(f"'{attribute.name}' must be symmetric")

    if np.any(np.linalg.eigvalsh(value) <= 0):
        raise ValueError(f"'{attribute.name}' must be positive definite")

    if np.linalg.det(value) < PURE_DETERMINANT * (1 - 1e-9):
        raise ValueError(f"'{attribute.name}' violates the uncertainty relation det >= 1/16")


@attr.s(frozen=True, eq=False)
class GaussianState:
    """Zero-mean single-mode Gaussian state given by its quadrature covariance."""

    cov: np.ndarray = attr.ib(converter=readonly_array, validator=_physical_covariance)

    @classmethod
    def vacuum(cls) -> GaussianState:
        return cls(np.eye(2) * VACUUM_VARIANCE)

    def __eq__(self, other):
        if not isinstance(other, GaussianState):
            return NotImplemented

        return np.array_equal(self.cov, other.cov)

    def __hash__(self):
        return hash(self.cov.tobytes())

    @property
    def determinant(self) -> float:
        return float(np.linalg.det(self.cov))

    @property
    def purity(self) -> float:
        return 1 / (4 * math.sqrt(self.determinant))

    @property
    def is_pure(self) -> bool:
        return math.isclose(self.determinant, PURE_DETERMINANT, rel_tol=1e-9)

    def variance(self, theta: float) -> float:
        """Variance of x_theta = x cos(theta) + p sin(theta)."""
        u = np.array([math.cos(theta), math.sin(theta)])
        return float(u @ self.cov @ u)

    def conjugate_variance(self, theta: float) -> float:
        """Variance of p_theta, the quadrature orthogonal to x_theta."""
        return self.variance(theta + math.pi / 2)

    def rotated(self, angle: float) -> GaussianState:
        """The state rotated in phase space by `angle` (W -> W o R(-angle))."""
        return GaussianState(rotation(angle) @ self.cov @ rotation(angle).T)


def rotation(angle: float) -> np.ndarray:
    c, s = math.cos(angle), math.sin(angle)
    return np.array([[c, -s], [s, c]])


def _uniform_axis(instance, attribute, value):
    if value.ndim != 1 or value.size < 3:
        raise ValueError(f"'{attribute.name}' must be a 1-D axis with at least 3 points")

    steps = np.diff(value)

    if np.any(steps <= 0) or not np.allclose(steps, steps[0], rtol=1e-9, atol=0):
        raise ValueError(f"'{attribute.name}' must be uniform and increasing")


def _matches_axes(instance, attribute, value):
    if value.shape != (instance.x.size, instance.p.size):
        raise ValueError(f"'{attribute.name}' must have shape (len(x), len(p))")


@attr.s(frozen=True, eq=False)
class WignerGrid:
    """Wigner function sampled on a uniform grid, `values[i, j] = W(x[i], p[j])`."""

    x: np.ndarray      = attr.ib(converter=readonly_array, validator=_uniform_axis)
    p: np.ndarray      = attr.ib(converter=readonly_array, validator=_uniform_axis)
    values: np.ndarray = attr.ib(converter=readonly_array, validator=_matches_axes)

    @classmethod
    def from_function(cls, function, *, nx: int, n_p: int, extent) -> WignerGrid:
        x_min, x_max, p_min, p_max = extent
        x = np.linspace(x_min, x_max, nx)
        p = np.linspace(p_min, p_max, n_p)
        X, P = np.meshgrid(x, p, indexing='ij')
        return cls(x, p, function(X, P))

    def __eq__(self, other):
        if not isinstance(other, WignerGrid):
            return NotImplemented

        return (
            np.array_equal(self.x, other.x)
            and np.array_equal(self.p, other.p)
            and np.array_equal(self.values, other.values)
        )

    __hash__ = None

    @property
    def nx(self) -> int:
        return self.x.size

    @property
    def n_p(self) -> int:
        return self.p.size

    @property
    def extent(self) -> tuple[float, float, float, float]:
        return (float(self.x[0]), float(self.x[-1]), float(self.p[0]), float(self.p[-1]))

    @property
    def dx(self) -> float:
        return float(self.x[1] - self.x[0])

    @property
    def dp(self) -> float:
        return float(self.p[1] - self.p[0])

    def meshgrid(self) -> tuple[np.ndarray, np.ndarray]:
        return np.meshgrid(self.x, self.p, indexing='ij')

    def integrate(self, values: np.ndarray = None) -> float:
        """Trapezoidal integral over the grid of `values` (W itself by default)."""
        values = self.values if values is None else values
        return float(trapezoid(trapezoid(values, self.p, axis=1), self.x))

    def normalized(self) -> WignerGrid:
        return attr.evolve(self, values=self.values / self.integrate())

    def with_values(self, values: np.ndarray) -> WignerGrid:
        return attr.evolve(self, values=values)

    def covers(self, radius: float) -> bool:
        x_min, x_max, p_min, p_max = self.extent
        return min(-x_min, x_max, -p_min, p_max) >= radius
