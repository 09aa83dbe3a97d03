"""Exception hierarchy shared by all modules."""


class ChisignError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInput(ChisignError):
    """Malformed or inconsistent input data."""


class InvalidType(InvalidInput):
    """Impossible family/rank/twist combination."""


class InvalidQuery(InvalidInput):
    """Query incompatible with the requested Cartan-Killing type."""


class UnknownForm(ChisignError):
    """A local form record that is not part of the census."""


class UnsupportedCenter(ChisignError):
    """Operation undefined for this center module."""


class InvalidSignatures(InvalidInput):
    """Field signatures violating the required degree relation."""


class NotApplicable(ChisignError):
    """Parity invariant requested in a zero-Euler-characteristic regime."""


class MissingD4Data(InvalidInput):
    """A place of a triality form without its decomposition count."""


class TooLarge(ChisignError):
    """Enumeration would exceed the configured element bound."""


class NotTransitive(ChisignError):
    """Permutation group fails the required transitivity."""


class NotSubgroup(ChisignError):
    """Claimed subgroup relation does not hold."""
