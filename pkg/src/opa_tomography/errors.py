from __future__ import annotations


class TomographyError(Exception):
    """Base class for every failure raised by this package."""

    def __init__(self, message, **fields):
        self.__dict__.update(fields)
        super().__init__(message)

    @property
    def message(self):
        return self.args[0]

    def __str__(self):
        return self.message


class ConfigError(TomographyError):
    MESSAGE_TEMPLATE = "Invalid configuration{where}: {reason}"

    def __init__(self, reason: str, *, section: str = None, key: str = None, path=None):
        where = ''

        if path is not None:
            where += f" in {path}"

        if section is not None:
            where += f" [{section}]" + (f" {key}" if key else '')

        message = self.MESSAGE_TEMPLATE.format(where=where, reason=reason)
        super().__init__(message, reason=reason, section=section, key=key, path=path)


class InsufficientGainError(TomographyError):
    MESSAGE_TEMPLATE = (
        "Amplifier gain G={G} is insufficient for G_sq={G_sq} "
        "(margin {margin:.3f} < {threshold}); set allow_insufficient_gain to override"
    )

    def __init__(self, *, report):
        message = self.MESSAGE_TEMPLATE.format(
            G=report.G, G_sq=report.G_sq, margin=report.margin, threshold=report.THRESHOLD
        )
        super().__init__(message, report=report)


class ExtentTooSmallError(TomographyError):
    MESSAGE_TEMPLATE = "Grid extent {extent} leaves {mass_outside:.2e} of the probability mass outside"

    def __init__(self, *, extent, mass_outside: float):
        message = self.MESSAGE_TEMPLATE.format(extent=extent, mass_outside=mass_outside)
        super().__init__(message, extent=extent, mass_outside=mass_outside)


class NegativeMarginalError(TomographyError):
    MESSAGE_TEMPLATE = "Marginal at theta={theta:.6f} has negative density down to {minimum:.3e}"

    def __init__(self, *, theta: float, minimum: float):
        message = self.MESSAGE_TEMPLATE.format(theta=theta, minimum=minimum)
        super().__init__(message, theta=theta, minimum=minimum)


class UnnormalizedGridError(TomographyError):
    MESSAGE_TEMPLATE = "Wigner grid integrates to {integral:.6f}, expected 1"

    def __init__(self, *, integral: float):
        message = self.MESSAGE_TEMPLATE.format(integral=integral)
        super().__init__(message, integral=integral)


class UnphysicalStateError(TomographyError):
    MESSAGE_TEMPLATE = "Unphysical reconstruction: {quantity} = {value:.4f}"

    def __init__(self, *, quantity: str, value: float):
        message = self.MESSAGE_TEMPLATE.format(quantity=quantity, value=value)
        super().__init__(message, quantity=quantity, value=value)


class ShotFileError(TomographyError):
    def __init__(self, message, *, path=None, **fields):
        if path is not None:
            message = f"{path}: {message}"

        super().__init__(message, path=path, **fields)


class ShotFileParseError(ShotFileError):
    MESSAGE_TEMPLATE = "line {line_number}: {reason}"

    def __init__(self, *, line_number: int, reason: str, path=None):
        message = self.MESSAGE_TEMPLATE.format(line_number=line_number, reason=reason)
        super().__init__(message, path=path, line_number=line_number, reason=reason)


class ShotFileVersionError(ShotFileError):
    MESSAGE_TEMPLATE = "Unsupported shot file format {found!r} (expected {expected!r})"

    def __init__(self, *, found, expected: str, path=None):
        message = self.MESSAGE_TEMPLATE.format(found=found, expected=expected)
        super().__init__(message, path=path, found=found, expected=expected)


class ShotFileChecksumError(ShotFileError):
    MESSAGE_TEMPLATE = "Checksum mismatch (header {expected}, records {found})"

    def __init__(self, *, expected: str, found: str, path=None):
        message = self.MESSAGE_TEMPLATE.format(expected=expected, found=found)
        super().__init__(message, path=path, expected=expected, found=found)


class SinogramError(TomographyError):
    pass


class ReconstructionError(TomographyError):
    pass


class UnknownFileTypeError(TomographyError):
    MESSAGE_TEMPLATE = "Cannot plot {path}: unknown file type {kind!r}"

    def __init__(self, *, path, kind):
        message = self.MESSAGE_TEMPLATE.format(path=path, kind=kind)
        super().__init__(message, path=path, kind=kind)


class EmptyTableError(TomographyError):
    MESSAGE_TEMPLATE = "Cannot plot {path}: the table has no rows"

    def __init__(self, *, path):
        super().__init__(self.MESSAGE_TEMPLATE.format(path=path), path=path)
