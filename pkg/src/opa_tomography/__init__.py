__app_name__ = "OPA Tomography"
__app_author__ = "opa-tomography"

from importlib.metadata import PackageNotFoundError, version  # pragma: no cover

try:
    __app_version__ = version('opa-tomography')
except PackageNotFoundError:  # pragma: no cover
    __app_version__ = "unknown"
finally:
    del version, PackageNotFoundError

#: Variance of each vacuum quadrature; every dB figure is relative to it.
VACUUM_VARIANCE = 0.25
