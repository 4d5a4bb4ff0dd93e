"""Polygon dissections, spider collections and labeled pairings.

Exact counting formulas, brute-force enumerators, and the bijective codecs
that connect them.
"""

from ncdissect.errors import (
    CodecInvariantError,
    InvalidObjectError,
    ParameterError,
    SizeLimitError,
)

__version__ = "0.1.0"

__all__ = [
    "CodecInvariantError",
    "InvalidObjectError",
    "ParameterError",
    "SizeLimitError",
]
