class CapabilityError(RuntimeError):
    """Input exceeds the size an exact routine is allowed to handle."""


class IntegrityError(RuntimeError):
    """Certified facts contradict each other; indicates a bug."""
