class ClassificationError(ValueError):
    """A tensor's invariants fell outside the orbit decision tree, or outside the labels admissible for its shape."""


class MemoryBudgetExceeded(RuntimeError):
    """An oracle allocation would exceed the configured memory cap (TOK_MEMORY_CAP_MB)."""


class TensorFormatError(ValueError):
    """A tensor text line could not be parsed."""
