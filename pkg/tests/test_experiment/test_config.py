import math

import pytest

from opa_tomography.detection import MATCHED, ModeModel
from opa_tomography.errors import ConfigError
from opa_tomography.experiment import (
    DEFAULT_ETA_PRE, ExperimentConfig, compose_transmission, config_from_sections, default_phases, parse_angle,
    read_config, write_config,
)
from opa_tomography.states import StateSpec

from tests.helpers.utils import delete_mod, delete_mods, modified_sections, set_mod, write_ini


class TestParseAngle:
    CASES = {
        'number':      ('0.5', 0.5),
        'pi':          ('pi', math.pi),
        'pi_over_2':   ('pi/2', math.pi / 2),
        'three_pi_4':  ('3*pi/4', 3 * math.pi / 4),
        'no_star':     ('2pi/3', 2 * math.pi / 3),
        'negative':    ('-pi/4', -math.pi / 4),
        'spaces':      (' pi / 2 ', math.pi / 2),
    }

    @pytest.mark.parametrize('text, expected', CASES.values(), ids=CASES.keys())
    def test_parse(self, text, expected):
        assert parse_angle(text) == pytest.approx(expected)

    def test_garbage(self):
        with pytest.raises(ValueError):
            parse_angle('half a turn')


class TestExperimentConfig:
    def test_defaults(self):
        config = ExperimentConfig()

        assert config.state == StateSpec.squeezed_vacuum(1.0)
        assert config.eta_pre == DEFAULT_ETA_PRE
        assert len(config.phases) == 19
        assert config.phases[-1] == pytest.approx(math.pi / 2)
        assert config.mode.mu == pytest.approx(1.2)
        assert config.mode.secondary_content == MATCHED

    def test_composed_transmission(self):
        assert compose_transmission(0.006, 0.053) == pytest.approx(0.941, abs=5e-4)

    def test_default_phases_for_rotated_states(self):
        phases = default_phases(StateSpec.squeezed_vacuum(1.0, math.pi / 4))

        assert len(phases) == 36
        assert phases[-1] < math.pi

    def test_workers_do_not_change_equality(self):
        assert ExperimentConfig(workers=1) == ExperimentConfig(workers=4)

    def test_overrides(self):
        config = ExperimentConfig().with_overrides(seed=9, shots=100)

        assert config.rng_seed == 9
        assert config.shots_per_phase == 100
        assert ExperimentConfig().with_overrides() == ExperimentConfig()

    INVALID = {
        'phases__unsorted':    dict(phases=(0.5, 0.1)),
        'phases__full_turn':   dict(phases=(0.0, math.pi)),
        'phases__empty':       dict(phases=()),
        'shots__too_few':      dict(shots_per_phase=50),
        'eta_pre__above_one':  dict(eta_pre=1.1),
        'bins__one':           dict(bins=1),
        'seed__negative':      dict(rng_seed=-1),
        'workers__zero':       dict(workers=0),
    }

    @pytest.mark.parametrize('kwargs', INVALID.values(), ids=INVALID.keys())
    def test_invalid(self, kwargs):
        with pytest.raises(ValueError):
            ExperimentConfig(**kwargs)


class TestConfigFileValid:
    def test_full_file(self, tmp_path, config_sections):
        path = tmp_path / 'experiment.ini'
        write_ini(config_sections, path)
        config = read_config(path)

        assert config.state == StateSpec.squeezed_vacuum(1.0)
        assert config.eta_pre == pytest.approx(0.994 * 0.947)
        assert config.opa.G == 4.4
        assert config.shots_per_phase == 500
        assert config.rng_seed == 11
        assert len(config.phases) == 19
        assert config.phases[-1] == pytest.approx(math.pi / 2)
        assert config.mode == ModeModel.from_mode_number(1.2)
        assert config.reconstruction.nx == 101

    def test_empty_file_gives_defaults(self, tmp_path):
        path = tmp_path / 'empty.ini'
        path.write_text('')

        assert read_config(path) == ExperimentConfig()
        assert read_config(path).mode.secondary_content == MATCHED

    def test_write_then_read(self, tmp_path, config_sections):
        config = config_from_sections(config_sections)
        path = tmp_path / 'written.ini'
        write_config(config, path)

        assert read_config(path) == config

    def test_vacuum_round_trip(self, tmp_path):
        config = ExperimentConfig(state=StateSpec.vacuum())
        path = tmp_path / 'vacuum.ini'
        write_config(config, path)

        assert read_config(path) == config

    MODIFICATIONS = {
        'eta_pre__direct':       [delete_mod('loss.optical_loss'), delete_mod('loss.visibility_loss'), set_mod('loss.eta_pre', '0.9')],
        'mode__fraction':        [delete_mod('mode.mu'), set_mod('mode.secondary_fraction', '0.1')],
        'mode__vacuum_content':  [set_mod('mode.secondary_content', 'vacuum')],
        'phases__explicit':      delete_mods('run.n_phases', 'run.phase_max') + [set_mod('run.phases', '0, pi/4, pi/2')],
        'state__fock':           [delete_mod('state'), set_mod('state.kind', 'fock'), set_mod('state.n', '1')],
        'no_vacuum_run':         [set_mod('run.include_vacuum_run', 'false')],
        'half_width':            [set_mod('reconstruction.half_width', '3.5')],
    }

    @pytest.mark.parametrize('modifications', MODIFICATIONS.values(), ids=MODIFICATIONS.keys())
    def test_valid_modifications(self, tmp_path, config_sections, modifications):
        path = tmp_path / 'experiment.ini'
        write_ini(modified_sections(config_sections, modifications), path)

        config = read_config(path)
        write_config(config, tmp_path / 'rewritten.ini')

        assert read_config(tmp_path / 'rewritten.ini') == config


class TestConfigFileInvalid:
    MODIFICATIONS = {
        'section__unknown':    [set_mod('laser.power', '1')],
        'key__unknown':        [set_mod('opa.pump', '3')],
        'value__not_number':   [set_mod('opa.g', 'large')],
        'value__not_bool':     [set_mod('opa.exact_model', 'maybe')],
        'kind__unknown':       [set_mod('state.kind', 'thermal')],
        'mu__out_of_range':    [set_mod('mode.mu', '3.0')],
        'phases__one':         [set_mod('run.n_phases', '1')],
        'shots__too_few':      [set_mod('run.shots_per_phase', '10')],
        'window__unknown':     [set_mod('reconstruction.filter_window', 'box')],
    }

    @pytest.mark.parametrize('modifications', MODIFICATIONS.values(), ids=MODIFICATIONS.keys())
    def test_invalid(self, tmp_path, config_sections, modifications):
        path = tmp_path / 'experiment.ini'
        write_ini(modified_sections(config_sections, modifications), path)

        with pytest.raises(ConfigError):
            read_config(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError) as excinfo:
            read_config(tmp_path / 'nowhere.ini')

        assert 'does not exist' in excinfo.value.message

    def test_malformed_file(self, tmp_path):
        path = tmp_path / 'broken.ini'
        path.write_text('kind = vacuum\n')

        with pytest.raises(ConfigError):
            read_config(path)

    def test_error_names_the_key(self, tmp_path, config_sections):
        path = tmp_path / 'experiment.ini'
        write_ini(modified_sections(config_sections, [set_mod('opa.g', 'large')]), path)

        with pytest.raises(ConfigError) as excinfo:
            read_config(path)

        assert (excinfo.value.section, excinfo.value.key) == ('opa', 'g')
        assert '[opa] g' in excinfo.value.message
