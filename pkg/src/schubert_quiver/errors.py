"""Exception types shared across the package.

The CLI maps :class:`UserInputError` to exit code 1 and
:class:`InvariantError` to exit code 2.
"""


class UserInputError(ValueError):
    """Bad shapes, unmet preconditions or unsupported parameters."""


class SizeLimitError(UserInputError):
    """An enumeration was asked to exceed the configured size cap."""


class InconsistentInputError(UserInputError):
    """Input lies outside the domain on which a bijection is defined."""


class InvariantError(RuntimeError):
    """An internal consistency check failed; this indicates a bug."""
