from .config import (
    DEFAULT_ETA_PRE, ExperimentConfig, ExperimentConfigParser, compose_transmission, config_from_sections,
    default_phases, parse_angle, read_config, write_config,
)
from .records import VACUUM_PHASE, SampleSet, ShotRecord
from .runner import run_experiment, run_metadata, simulate_phase, stream_generator
from .shotfile import FORMAT_VERSION, load, persist
