import math


def finite(instance, attribute, value):
    if not math.isfinite(value):
        raise ValueError(f"'{attribute.name}' must be finite")


def not_negative(instance, attribute, value):
    if value < 0:
        raise ValueError(f"'{attribute.name}' must be non-negative")


def positive(instance, attribute, value):
    if value <= 0:
        raise ValueError(f"'{attribute.name}' must be positive")


def in_closed_unit_interval(instance, attribute, value):
    if value < 0 or value > 1:
        raise ValueError(f"'{attribute.name}' must lie in [0, 1]")


def in_half_open_unit_interval(instance, attribute, value):
    if value <= 0 or value > 1:
        raise ValueError(f"'{attribute.name}' must lie in (0, 1]")


def at_least(minimum):
    def _at_least(instance, attribute, value):
        if value < minimum:
            raise ValueError(f"'{attribute.name}' must be at least {minimum}")

    return _at_least


def one_of(*choices):
    def _one_of(instance, attribute, value):
        if value not in choices:
            raise ValueError(f"'{attribute.name}' must be one of {', '.join(map(str, choices))}")

    return _one_of


def strictly_increasing(instance, attribute, value):
    if len(value) == 0:
        raise ValueError(f"'{attribute.name}' must not be empty")

    if any(b <= a for a, b in zip(value, value[1:])):
        raise ValueError(f"'{attribute.name}' must be strictly increasing")
