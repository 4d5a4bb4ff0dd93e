from __future__ import annotations


class ParameterError(ValueError):
    """A size parameter (s, n, i, vertex index) lies outside its domain."""


class InvalidObjectError(ValueError):
    """A combinatorial object fails its validity rules."""


class CodecInvariantError(AssertionError):
    """An internal invariant of a codec recursion was broken.

    Never expected on valid input; if raised, the recursion convention is wrong.
    """


class SizeLimitError(RuntimeError):
    """A brute-force routine was asked to work beyond its configured size."""
