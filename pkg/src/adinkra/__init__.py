"""Height functions on rainbow-colored hypercubes, their Morse-style
divisors, combinatorial curve images, and the numeric elliptic-curve
realization in dimension 5."""

from .heights import Height, enumerate_heights, count_heights
from .jacobian import GroupElt, divisor_image, height_image
from .morse import Divisor, divisor

__all__ = [
    "Height",
    "enumerate_heights",
    "count_heights",
    "GroupElt",
    "divisor_image",
    "height_image",
    "Divisor",
    "divisor",
]
