"""Exception taxonomy shared by every module.

The CLI maps these onto exit codes: InputError -> 2, NumericalError and
ResourceError -> 3. Anything else is a bug.
"""


class CausalrelError(Exception):
    """Base class for all errors raised by this package."""


class InputError(CausalrelError, ValueError):
    """Malformed or out-of-contract input (bad vertex id, bad file, ...)."""


class ContractError(CausalrelError, RuntimeError):
    """An operation was called outside its stated precondition."""


class NumericalError(CausalrelError, ArithmeticError):
    """A numerical computation failed (singular matrix, undefined metric)."""


class DegenerateDataError(NumericalError):
    """Data is degenerate for the requested statistic (e.g. |rho| = 1)."""


class ResourceError(CausalrelError, RuntimeError):
    """A configured resource cap (enumeration size, ...) would be exceeded."""
