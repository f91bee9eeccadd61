"""Exception types shared across the package.

ValueError is used directly for bad caller input. The two classes below
mark conditions with a different meaning: a broken internal invariant
(a bug, never user error) and a synchronization-margin overflow.
"""


class InvariantViolation(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""


class ToleranceExceeded(ValueError):
    """Requested misalignment margins c_l + c_r reach or exceed the limit ord(f)."""
