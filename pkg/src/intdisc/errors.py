"""Exception taxonomy shared by all modules.

InputError covers malformed or inconsistent inputs (bad multi-indices,
unparseable files, unknown names).  DomainError covers mathematically
inadmissible requests on well-formed inputs: singular forms, divergent
series, quadrature outside the validity region.  The CLI maps InputError
to exit code 2 and DomainError to exit code 1.
"""


class IntdiscError(Exception):
    """Base class for all library errors."""


class InputError(IntdiscError, ValueError):
    """Malformed or inconsistent input."""


class DomainError(IntdiscError, ArithmeticError):
    """Mathematically inadmissible operation (singular form, divergence)."""


class CalibrationError(IntdiscError):
    """A derived-invariant consistency check failed."""
