"""Line-oriented shot files: a `#` header carrying the run configuration, then one record per line."""
from __future__ import annotations

import hashlib
import logging
from pathlib import Path

import numpy as np

from ..errors import ConfigError, ShotFileChecksumError, ShotFileError, ShotFileParseError, ShotFileVersionError
from ..opa import SufficiencyReport
from .config import config_from_sections
from .records import SampleSet

LOG = logging.getLogger(__name__)

FORMAT_VERSION = 'opa-tomography-shots/1'
SIGNAL_SECTION = 'signal'
VACUUM_SECTION = 'vacuum'


def _checksum(body: str) -> str:
    return 'sha256:' + hashlib.sha256(body.encode('utf-8')).hexdigest()


def _body_lines(sample_set: SampleSet):
    yield f'# section={SIGNAL_SECTION}'

    for record in sample_set.iter_records():
        yield f'{record.phase!r},{record.shot_index},{record.n_detected!r}'

    if sample_set.vacuum_records is not None:
        yield f'# section={VACUUM_SECTION}'

        for record in sample_set.iter_vacuum_records():
            yield f'{record.phase!r},{record.shot_index},{record.n_detected!r}'


def persist(sample_set: SampleSet, path) -> Path:
    path = Path(path)
    header = [f'# format={FORMAT_VERSION}']

    for section, values in sample_set.config.to_sections().items():
        header.extend(f'# config.{section}.{key}={value}' for key, value in values.items())

    if sample_set.sufficiency is not None:
        header.extend(f'# sufficiency.{key}={value}' for key, value in sample_set.sufficiency.to_dict().items())

    header.append(f'# override={str(sample_set.override).lower()}')

    body = ''.join(line + '\n' for line in _body_lines(sample_set))
    header.append(f'# checksum={_checksum(body)}')

    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write('\n'.join(header) + '\n')
        f.write(body)

    LOG.info(f"Wrote {sum(counts.size for counts in sample_set.records.values())} signal records to {path}")
    return path


def _parse_header(lines, path):
    """Split the header into its key/value pairs; returns (fields, index of the first body line)."""
    fields = {}

    for index, line in enumerate(lines):
        if not line.startswith('# ') or '=' not in line:
            raise ShotFileParseError(line_number=index + 1, reason="expected a '# key=value' header line", path=path)

        key, value = line[2:].split('=', 1)
        fields[key] = value

        if index == 0 and (key != 'format' or value != FORMAT_VERSION):
            raise ShotFileVersionError(found=value if key == 'format' else None, expected=FORMAT_VERSION, path=path)

        if key == 'checksum':
            return fields, index + 1

    raise ShotFileParseError(line_number=len(lines), reason="header has no checksum line", path=path)


def _parse_sufficiency(fields, path):
    values = {key[len('sufficiency.'):]: value for key, value in fields.items() if key.startswith('sufficiency.')}

    if not values:
        return None

    try:
        return SufficiencyReport(
            G=float(values['G']),
            G_sq=float(values['G_sq']),
            margin=float(values['margin']),
            sufficient=values['sufficient'] == 'true',
            residual_ratio=float(values['residual_ratio']),
        )
    except (KeyError, ValueError) as e:
        raise ShotFileError(f"incomplete sufficiency header ({e})", path=path) from e


def _parse_config(fields, path):
    sections = {}

    for key, value in fields.items():
        if not key.startswith('config.'):
            continue

        section, option = key[len('config.'):].split('.', 1)
        sections.setdefault(section, {})[option] = value

    try:
        return config_from_sections(sections, source=path)
    except ConfigError as e:
        raise ShotFileError(f"bad configuration header: {e.message}", path=path) from e


def _parse_body(lines, offset, has_final_newline, path):
    signal, vacuum = {}, []
    section = None

    for index, line in enumerate(lines):
        line_number = offset + index + 1

        if index == len(lines) - 1 and not has_final_newline:
            raise ShotFileParseError(line_number=line_number, reason="truncated record", path=path)

        if line.startswith('# section='):
            section = line[len('# section='):]

            if section not in (SIGNAL_SECTION, VACUUM_SECTION):
                raise ShotFileParseError(line_number=line_number, reason=f"unknown section {section!r}", path=path)

            continue

        if section is None:
            raise ShotFileParseError(line_number=line_number, reason="record before any section marker", path=path)

        parts = line.split(',')

        if len(parts) != 3:
            raise ShotFileParseError(line_number=line_number, reason=f"expected 3 fields, found {len(parts)}", path=path)

        try:
            phase, shot_index, n_detected = float(parts[0]), int(parts[1]), float(parts[2])
        except ValueError as e:
            raise ShotFileParseError(line_number=line_number, reason=str(e), path=path) from e

        target = vacuum if section == VACUUM_SECTION else signal.setdefault(phase, [])

        if shot_index != len(target):
            raise ShotFileParseError(
                line_number=line_number, reason=f"shot index {shot_index} out of sequence", path=path
            )

        target.append(n_detected)

    return signal, (vacuum if vacuum else None)


def load(path) -> SampleSet:
    path = Path(path)

    with open(path, 'r', encoding='utf-8', newline='') as f:
        text = f.read()

    if not text:
        raise ShotFileParseError(line_number=1, reason="empty file", path=path)

    has_final_newline = text.endswith('\n')
    lines = text.split('\n')

    if has_final_newline:
        lines.pop()

    fields, body_start = _parse_header(lines, path)
    config = _parse_config(fields, path)
    body_lines = lines[body_start:]
    signal, vacuum = _parse_body(body_lines, body_start, has_final_newline, path)

    body = ''.join(line + '\n' for line in body_lines)
    found = _checksum(body)

    if found != fields['checksum']:
        raise ShotFileChecksumError(expected=fields['checksum'], found=found, path=path)

    if not signal and vacuum is None:
        LOG.warning(f"{path} holds a configuration header but no records")

    try:
        return SampleSet(
            config=config,
            records={phase: np.array(counts) for phase, counts in signal.items()},
            vacuum_records=None if vacuum is None else np.array(vacuum),
            sufficiency=_parse_sufficiency(fields, path),
            override=fields.get('override', 'false') == 'true',
        )
    except ValueError as e:
        raise ShotFileError(str(e), path=path) from e
