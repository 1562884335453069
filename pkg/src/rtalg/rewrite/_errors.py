"""Exceptions shared by both reduction kernels."""


class MissingRule(LookupError):
    """An out-of-order adjacent pair has no rewriting rule."""

    def __init__(self, a, b):
        super().__init__(a, b)
        self.pair = (a, b)
