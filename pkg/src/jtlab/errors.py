"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed input file or literal (tree, vector, functional, sequence)."""


class CapExceeded(RuntimeError):
    """An enumeration grew past its caller-supplied cap."""


class InvariantViolation(RuntimeError):
    """An internal exact cross-check failed; indicates a bug, not bad input."""
