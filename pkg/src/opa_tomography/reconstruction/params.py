from __future__ import annotations

from typing import Optional

import attr
from attr.validators import instance_of, optional

from ..validators import at_least, in_half_open_unit_interval, one_of, positive

SOURCES = ('auto', 'raw', 'fit', 'exact')
WINDOWS = ('ramp', 'hann', 'hamming', 'cosine', 'shepp-logan')
INTERPOLATIONS = ('linear', 'nearest')


def _odd(instance, attribute, value):
    if value % 2 == 0:
        raise ValueError(f"'{attribute.name}' must be odd so the grid contains the origin")


@attr.s(frozen=True)
class ReconstructionParams:
    """Grid, filter and row-source settings for filtered backprojection.

    `half_width=None` sizes the square grid to the sinogram support.
    """

    source: str                 = attr.ib(default='auto', validator=[one_of(*SOURCES)])
    nx: int                     = attr.ib(default=201, converter=int, validator=[at_least(9), _odd])
    n_p: int                    = attr.ib(default=201, converter=int, validator=[at_least(9), _odd])
    half_width: Optional[float] = attr.ib(default=None, converter=attr.converters.optional(float), validator=[optional(instance_of(float)), optional(positive)])
    filter_window: str          = attr.ib(default='hann', validator=[one_of(*WINDOWS)])
    cutoff: float               = attr.ib(default=0.7, converter=float, validator=[in_half_open_unit_interval])
    interpolation: str          = attr.ib(default='linear', validator=[one_of(*INTERPOLATIONS)])
    n_angles: int               = attr.ib(default=180, converter=int, validator=[at_least(9)])
    sinogram_points: int        = attr.ib(default=1025, converter=int, validator=[at_least(65), _odd])
    workers: int                = attr.ib(default=1, converter=int, validator=[at_least(1)])

    def to_dict(self) -> dict[str, str]:
        fields = attr.asdict(self)
        fields.pop('workers')

        if fields['half_width'] is None:
            fields.pop('half_width')

        return {key: repr(value) if isinstance(value, float) else str(value) for key, value in fields.items()}
