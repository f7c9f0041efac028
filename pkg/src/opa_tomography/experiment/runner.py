"""Simulated measurement runs: the phase sweep and the vacuum calibration run."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor, as_completed
import logging

import numpy as np
from tqdm import tqdm
from tqdm.contrib.logging import logging_redirect_tqdm

from .. import __app_version__
from ..detection import MATCHED, admix_modes, detect
from ..errors import InsufficientGainError
from ..opa import check_sufficiency, mean_photon_number, sample_photon_numbers
from ..states import GaussianState, apply_pre_amp_loss, prepare_state
from .config import ExperimentConfig
from .records import VACUUM_PHASE, SampleSet

LOG = logging.getLogger(__name__)

SIGNAL_STREAM = 0
VACUUM_STREAM = 1


def stream_generator(seed: int, stream: int, index: int) -> np.random.Generator:
    """Counter-based generator for one (stream, phase) pair of a run.

    Shots are drawn in one vectorized call per phase, so the shot index is
    the position in the Philox counter sequence and no result depends on
    the order in which phases are scheduled.
    """
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=(stream, index))))


def squeezing_parameter(config: ExperimentConfig) -> float:
    return config.state.g_sq if config.state.is_squeezed else 0.0


def simulate_phase(state, theta: float, config: ExperimentConfig, rng) -> np.ndarray:
    """Detected photon numbers of `config.shots_per_phase` pulses at amplification phase `theta`."""
    params = config.opa.at_phase(theta)
    n_shots = config.shots_per_phase

    N_primary = sample_photon_numbers(state, params, n_shots, rng)
    secondary = None

    if not config.mode.is_single_mode and config.mode.secondary_content == MATCHED:
        secondary = sample_photon_numbers(state, params, n_shots, rng)

    vacuum_scale = mean_photon_number(GaussianState.vacuum(), params)
    N_true = admix_modes(N_primary, config.mode, rng, vacuum_scale, secondary=secondary)
    return detect(N_true, config.detector, rng)


def run_experiment(config: ExperimentConfig, *, progress: bool = True) -> SampleSet:
    report = check_sufficiency(config.opa.G, squeezing_parameter(config))

    if not report.sufficient:
        if not config.allow_insufficient_gain:
            raise InsufficientGainError(report=report)

        LOG.warning(
            f"Gain margin {report.margin:.3f} below {report.THRESHOLD}; "
            f"expect a residual variance ratio near {report.residual_ratio:.2e}"
        )

    state = apply_pre_amp_loss(prepare_state(config.state), config.eta_pre)
    records = {}

    LOG.info(f"Simulate {len(config.phases)} phases x {config.shots_per_phase} shots (seed {config.rng_seed})")

    with logging_redirect_tqdm(), ThreadPoolExecutor(max_workers=config.workers) as pool:
        jobs = {
            pool.submit(simulate_phase, state, theta, config, stream_generator(config.rng_seed, SIGNAL_STREAM, index)): theta
            for index, theta in enumerate(config.phases)
        }

        for future in tqdm(as_completed(jobs), total=len(jobs), desc="Simulate phases", disable=not progress):
            records[jobs[future]] = future.result()

    vacuum_records = None

    if config.include_vacuum_run:
        rng = stream_generator(config.rng_seed, VACUUM_STREAM, 0)
        vacuum_records = simulate_phase(GaussianState.vacuum(), VACUUM_PHASE, config, rng)

    return SampleSet(
        config=config,
        records=records,
        vacuum_records=vacuum_records,
        sufficiency=report,
        override=not report.sufficient,
    )


def run_metadata(sample_set: SampleSet) -> dict[str, str]:
    """Provenance and calibration numbers of a run, as text key/value pairs."""
    config = sample_set.config
    metadata = {
        'version': __app_version__,
        'seed': str(config.rng_seed),
        'shots_per_phase': str(config.shots_per_phase),
        'n_phases': str(len(sample_set.records)),
        'eta_pre': repr(config.eta_pre),
        'eta_det': repr(config.detector.eta_det),
        'dark_mean': repr(config.detector.dark_mean),
        'dark_std': repr(config.detector.dark_std),
        'mode_number': repr(config.mode.mu),
        'override': str(sample_set.override).lower(),
    }

    if sample_set.sufficiency is not None:
        metadata.update({f'sufficiency.{key}': value for key, value in sample_set.sufficiency.to_dict().items()})

    if sample_set.vacuum_records is not None:
        vacuum_mean = sample_set.vacuum_mean() - config.detector.dark_mean
        amplified_vacuum = mean_photon_number(GaussianState.vacuum(), config.opa.at_phase(VACUUM_PHASE))
        metadata['vacuum_mean'] = repr(vacuum_mean)
        metadata['vacuum_mean_stderr'] = repr(float(np.std(sample_set.vacuum_records, ddof=1) / np.sqrt(sample_set.vacuum_records.size)))
        metadata['realized_eta_det'] = repr(vacuum_mean / amplified_vacuum)

    return metadata
