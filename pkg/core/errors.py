"""
Exception hierarchy shared by every package.

Malformed input raises a subclass of InputError (CLI exit code 2), a configured
cap that would be exceeded raises ResourceCapError (exit code 3). Refutations are
never exceptions: they come back as report objects.
"""


class LogicToolError(Exception):
    """Base class for all errors raised by this project."""


class InputError(LogicToolError, ValueError):
    """Malformed input: bad syntax, out-of-range indices, inconsistent files."""


class FormulaSyntaxError(InputError):
    """
    Syntax error in formula or proof text.

    Attributes:
        message (str): Description without the position
        position (int): Character offset of the offending token
    """

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.message = message
        self.position = position


class AtomRangeError(InputError):
    """An atom index is not below the ambient mu."""


class ProofFormatError(InputError):
    """A proof file does not have the (node <formula> <just> <child>*) shape."""


class RuleShapeError(InputError):
    """Premises handed to a proof builder do not fit the rule."""


class PosetError(InputError):
    """A relation is not a preorder, or a subset names unknown elements."""


class FrameError(InputError):
    """A Kripke frame or labeling is malformed (not reflexive/transitive, bad sizes)."""


class ConfigurationError(InputError):
    """
    Invalid configuration.

    Attributes:
        missing (str or None): Name of the required formula or key, when one is missing
    """

    def __init__(self, message, missing=None):
        super().__init__(message)
        self.missing = missing


class ResourceCapError(LogicToolError):
    """
    A computation would exceed a configured cap.

    Attributes:
        cap_name (str): Which cap (e.g. "max_mu")
        limit (int): The configured limit
        requested (int): The size that was asked for
    """

    def __init__(self, cap_name, limit, requested):
        super().__init__(f"{cap_name} exceeded: requested {requested}, limit {limit}")
        self.cap_name = cap_name
        self.limit = limit
        self.requested = requested


def check_cap(cap_name, limit, requested):
    """Raise ResourceCapError when requested > limit."""
    if requested > limit:
        raise ResourceCapError(cap_name, limit, requested)
