"""Experiment configuration: the attrs record and its INI file form."""
from __future__ import annotations

import configparser
import math
from pathlib import Path
import re

import attr
from attr.validators import instance_of

from ..detection import MATCHED, DetectorModel, ModeModel
from ..errors import ConfigError
from ..opa import OpaParams
from ..reconstruction.params import ReconstructionParams
from ..states import StateSpec
from ..validators import at_least, in_closed_unit_interval, strictly_increasing

DEFAULT_ETA_PRE = 0.941
DEFAULT_OPTICAL_LOSS = 0.006
DEFAULT_VISIBILITY_LOSS = 0.053
DEFAULT_MODE_NUMBER = 1.2

DEFAULT_PHASE_COUNT = 19
FULL_TURN_PHASE_COUNT = 36

SECTIONS = ('state', 'opa', 'loss', 'detector', 'mode', 'run', 'reconstruction')

ANGLE_PATTERN = re.compile(r'^\s*(?:(?P<num>[0-9.eE+-]+)\s*\*?\s*)?pi\s*(?:/\s*(?P<den>[0-9.eE+-]+))?\s*$')


def default_phases(state: StateSpec) -> tuple[float, ...]:
    """19 phases over [0, pi/2] when P_theta = P_(pi - theta), else 36 over [0, pi)."""
    if state.is_reflection_symmetric:
        step = (math.pi / 2) / (DEFAULT_PHASE_COUNT - 1)
        return tuple(i * step for i in range(DEFAULT_PHASE_COUNT))

    step = math.pi / FULL_TURN_PHASE_COUNT
    return tuple(i * step for i in range(FULL_TURN_PHASE_COUNT))


def compose_transmission(optical_loss: float, visibility_loss: float) -> float:
    return (1 - optical_loss) * (1 - visibility_loss)


def _phases_in_half_turn(instance, attribute, value):
    if any(not 0 <= phase < math.pi for phase in value):
        raise ValueError(f"'{attribute.name}' must lie in [0, pi)")


def _as_phases(value) -> tuple[float, ...]:
    return tuple(float(phase) for phase in value)


@attr.s(frozen=True)
class ExperimentConfig:
    state: StateSpec                     = attr.ib(factory=lambda: StateSpec.squeezed_vacuum(1.0), validator=[instance_of(StateSpec)])
    eta_pre: float                       = attr.ib(default=DEFAULT_ETA_PRE, converter=float, validator=[in_closed_unit_interval])
    opa: OpaParams                       = attr.ib(factory=OpaParams, validator=[instance_of(OpaParams)])
    phases: tuple[float, ...]            = attr.ib(
        default=attr.Factory(lambda self: default_phases(self.state), takes_self=True),
        converter=_as_phases,
        validator=[strictly_increasing, _phases_in_half_turn],
    )
    shots_per_phase: int                 = attr.ib(default=8000, converter=int, validator=[at_least(100)])
    detector: DetectorModel              = attr.ib(factory=DetectorModel, validator=[instance_of(DetectorModel)])
    mode: ModeModel                      = attr.ib(factory=lambda: ModeModel.from_mode_number(DEFAULT_MODE_NUMBER), validator=[instance_of(ModeModel)])
    bins: int                            = attr.ib(default=35, converter=int, validator=[at_least(2)])
    rng_seed: int                        = attr.ib(default=20240101, converter=int, validator=[at_least(0)])
    include_vacuum_run: bool             = attr.ib(default=True, validator=[instance_of(bool)])
    allow_insufficient_gain: bool        = attr.ib(default=False, validator=[instance_of(bool)])
    reconstruction: ReconstructionParams = attr.ib(factory=ReconstructionParams, validator=[instance_of(ReconstructionParams)])
    workers: int                         = attr.ib(default=1, converter=int, validator=[at_least(1)], eq=False)

    def with_overrides(self, *, seed: int = None, shots: int = None) -> ExperimentConfig:
        changes = {}

        if seed is not None:
            changes['rng_seed'] = seed

        if shots is not None:
            changes['shots_per_phase'] = shots

        return attr.evolve(self, **changes) if changes else self

    def to_sections(self) -> dict[str, dict[str, str]]:
        """Text form of every reproducibility-relevant setting (no thread count)."""
        return {
            'state': self.state.to_dict(),
            'opa': {
                'g': repr(self.opa.G),
                'exact_model': _format_bool(self.opa.exact_model),
            },
            'loss': {'eta_pre': repr(self.eta_pre)},
            'detector': {
                'eta_det': repr(self.detector.eta_det),
                'dark_mean': repr(self.detector.dark_mean),
                'dark_std': repr(self.detector.dark_std),
                'clamp_negative': _format_bool(self.detector.clamp_negative),
            },
            'mode': {
                'secondary_fraction': repr(self.mode.secondary_fraction),
                'secondary_content': self.mode.secondary_content,
            },
            'run': {
                'phases': ','.join(repr(phase) for phase in self.phases),
                'shots_per_phase': str(self.shots_per_phase),
                'bins': str(self.bins),
                'seed': str(self.rng_seed),
                'include_vacuum_run': _format_bool(self.include_vacuum_run),
                'allow_insufficient_gain': _format_bool(self.allow_insufficient_gain),
            },
            'reconstruction': self.reconstruction.to_dict(),
        }


def _format_bool(value: bool) -> str:
    return 'true' if value else 'false'


def parse_angle(text: str) -> float:
    """Radians from a number or a multiple of pi such as `pi/2` or `3*pi/4`."""
    match = ANGLE_PATTERN.match(text)

    if match is None:
        return float(text)

    numerator = {None: 1.0, '': 1.0, '+': 1.0, '-': -1.0}.get(match['num'])
    numerator = float(match['num']) if numerator is None else numerator
    denominator = float(match['den']) if match['den'] else 1.0
    return numerator * math.pi / denominator


class ExperimentConfigParser(configparser.ConfigParser):
    """INI reader for experiment configs; every section is optional."""

    KNOWN_KEYS = {
        'state': {'kind', 'g_sq', 'squeeze_angle', 'n', 'amplitude', 'parity'},
        'opa': {'g', 'exact_model'},
        'loss': {'eta_pre', 'optical_loss', 'visibility_loss'},
        'detector': {'eta_det', 'dark_mean', 'dark_std', 'clamp_negative'},
        'mode': {'mu', 'secondary_fraction', 'secondary_content'},
        'run': {
            'phases', 'n_phases', 'phase_max', 'shots_per_phase', 'bins', 'seed',
            'include_vacuum_run', 'allow_insufficient_gain', 'workers',
        },
        'reconstruction': {
            'source', 'nx', 'n_p', 'half_width', 'filter_window', 'cutoff',
            'interpolation', 'n_angles', 'sinogram_points', 'workers',
        },
    }

    def __init__(self, *args, source=None, **kwargs):
        kwargs.setdefault('interpolation', None)
        super().__init__(*args, **kwargs)
        self._source = source

    def load(self, path) -> ExperimentConfigParser:
        path = Path(path)
        self._source = path

        if not path.is_file():
            raise ConfigError("file does not exist", path=path)

        try:
            with open(path, 'r', encoding='utf-8') as f:
                self.read_file(f)
        except configparser.Error as e:
            raise ConfigError(str(e).strip(), path=path) from e

        return self

    def save(self, path):
        with open(path, 'w', encoding='utf-8') as f:
            self.write(f)

    def _check_known(self):
        for section in self.sections():
            if section not in self.KNOWN_KEYS:
                raise ConfigError("unknown section", section=section, path=self._source)

            for key in self[section]:
                if key not in self.KNOWN_KEYS[section]:
                    raise ConfigError("unknown key", section=section, key=key, path=self._source)

    def _get_value(self, section, key, parse, default=None):
        if not self.has_option(section, key):
            return default

        raw = self.get(section, key)

        try:
            return parse(raw)
        except ValueError as e:
            raise ConfigError(f"cannot parse {raw!r} ({e})", section=section, key=key, path=self._source) from e

    def _get_bool(self, section, key, default=None):
        if not self.has_option(section, key):
            return default

        try:
            return self.getboolean(section, key)
        except ValueError as e:
            raise ConfigError(str(e), section=section, key=key, path=self._source) from e

    def _build(self, section, factory, **kwargs):
        values = {key: value for key, value in kwargs.items() if value is not None}

        try:
            return factory(**values)
        except (TypeError, ValueError) as e:
            raise ConfigError(str(e), section=section, path=self._source) from e

    def _state(self) -> StateSpec:
        if not self.has_section('state'):
            return StateSpec.squeezed_vacuum(1.0)

        return self._build(
            'state',
            StateSpec,
            kind=self._get_value('state', 'kind', str.strip, default='squeezed_vacuum'),
            g_sq=self._get_value('state', 'g_sq', float),
            squeeze_angle=self._get_value('state', 'squeeze_angle', parse_angle),
            n=self._get_value('state', 'n', int),
            amplitude=self._get_value('state', 'amplitude', float),
            parity=self._get_value('state', 'parity', str.strip),
        )

    def _eta_pre(self) -> float:
        eta_pre = self._get_value('loss', 'eta_pre', float)

        if eta_pre is not None:
            return eta_pre

        if not (self.has_option('loss', 'optical_loss') or self.has_option('loss', 'visibility_loss')):
            return DEFAULT_ETA_PRE

        return compose_transmission(
            self._get_value('loss', 'optical_loss', float, default=DEFAULT_OPTICAL_LOSS),
            self._get_value('loss', 'visibility_loss', float, default=DEFAULT_VISIBILITY_LOSS),
        )

    def _mode(self) -> ModeModel:
        content = self._get_value('mode', 'secondary_content', str.strip, default=MATCHED)
        mu = self._get_value('mode', 'mu', float)

        if mu is not None:
            return self._build('mode', ModeModel.from_mode_number, mu=mu, secondary_content=content)

        return self._build(
            'mode',
            ModeModel,
            secondary_fraction=self._get_value('mode', 'secondary_fraction', float, default=ModeModel.from_mode_number(DEFAULT_MODE_NUMBER).secondary_fraction),
            secondary_content=content,
        )

    def _phases(self, state: StateSpec):
        phases = self._get_value('run', 'phases', lambda raw: tuple(parse_angle(item) for item in raw.split(',') if item.strip()))

        if phases is not None:
            return phases

        if not (self.has_option('run', 'n_phases') or self.has_option('run', 'phase_max')):
            return None

        defaults = default_phases(state)
        count = self._get_value('run', 'n_phases', int, default=len(defaults))
        phase_max = self._get_value('run', 'phase_max', parse_angle, default=math.pi / 2)

        if count < 2:
            raise ConfigError("at least two phases are needed", section='run', key='n_phases', path=self._source)

        return tuple(i * phase_max / (count - 1) for i in range(count))

    def to_experiment_config(self) -> ExperimentConfig:
        self._check_known()
        state = self._state()

        reconstruction = self._build(
            'reconstruction',
            ReconstructionParams,
            source=self._get_value('reconstruction', 'source', str.strip),
            nx=self._get_value('reconstruction', 'nx', int),
            n_p=self._get_value('reconstruction', 'n_p', int),
            half_width=self._get_value('reconstruction', 'half_width', float),
            filter_window=self._get_value('reconstruction', 'filter_window', str.strip),
            cutoff=self._get_value('reconstruction', 'cutoff', float),
            interpolation=self._get_value('reconstruction', 'interpolation', str.strip),
            n_angles=self._get_value('reconstruction', 'n_angles', int),
            sinogram_points=self._get_value('reconstruction', 'sinogram_points', int),
            workers=self._get_value('reconstruction', 'workers', int),
        )

        return self._build(
            'run',
            ExperimentConfig,
            state=state,
            eta_pre=self._eta_pre(),
            opa=self._build('opa', OpaParams, G=self._get_value('opa', 'g', float), exact_model=self._get_bool('opa', 'exact_model')),
            phases=self._phases(state),
            shots_per_phase=self._get_value('run', 'shots_per_phase', int),
            detector=self._build(
                'detector',
                DetectorModel,
                eta_det=self._get_value('detector', 'eta_det', float),
                dark_mean=self._get_value('detector', 'dark_mean', float),
                dark_std=self._get_value('detector', 'dark_std', float),
                clamp_negative=self._get_bool('detector', 'clamp_negative'),
            ),
            mode=self._mode(),
            bins=self._get_value('run', 'bins', int),
            rng_seed=self._get_value('run', 'seed', int),
            include_vacuum_run=self._get_bool('run', 'include_vacuum_run'),
            allow_insufficient_gain=self._get_bool('run', 'allow_insufficient_gain'),
            reconstruction=reconstruction,
            workers=self._get_value('run', 'workers', int),
        )


def read_config(path) -> ExperimentConfig:
    return ExperimentConfigParser().load(path).to_experiment_config()


def config_from_sections(sections: dict[str, dict[str, str]], source=None) -> ExperimentConfig:
    parser = ExperimentConfigParser(source=source)
    parser.read_dict(sections)
    return parser.to_experiment_config()


def write_config(config: ExperimentConfig, path):
    parser = ExperimentConfigParser()
    parser.read_dict(config.to_sections())
    parser.save(path)
