"""Primitive roots of unity built from basic arithmetic and square roots.

Real numbers are exchanged as decimal strings that parse back to the same
binary value at the requested precision. ``to_complex`` turns a
``(re, im)`` pair into a Python float complex for convenience.
"""

from . import _core
from ._core import DEFAULT_PRECISION, PrimrootError

__all__ = [
    "DEFAULT_PRECISION",
    "PrimrootError",
    "certificate",
    "dft",
    "order",
    "roots",
    "roots_of",
    "solve_binomial",
    "to_complex",
    "zeta",
]


def _pair(value):
    if isinstance(value, tuple):
        re, im = value
        return (str(re), str(im))
    if isinstance(value, complex):
        return (repr(value.real), repr(value.imag))
    return (str(value), "0")


def to_complex(pair):
    return complex(float(pair[0]), float(pair[1]))


def zeta(n, precision=DEFAULT_PRECISION):
    """The root with positive imaginary part closest to 1."""
    return _core.construct_zeta(n, precision)


def roots(n, precision=DEFAULT_PRECISION):
    """All n-th roots of unity from the simultaneous solver."""
    return _core.solve_unity(n, precision)


def solve_binomial(c, n, precision=DEFAULT_PRECISION):
    return _core.solve_binomial(_pair(c), n, precision)


def roots_of(c, n, precision=DEFAULT_PRECISION):
    """All solutions of z**n = c as zeta**k times one Newton root."""
    return _core.roots_of(_pair(c), n, precision)


def certificate(n, precision=DEFAULT_PRECISION):
    return _core.certificate(n, precision)


def order(n, m, precision=DEFAULT_PRECISION):
    """Multiplicative order of zeta(n)**m next to the gcd criterion."""
    return _core.order(n, m, precision)


def dft(values, inverse=False, precision=DEFAULT_PRECISION):
    return _core.dft([_pair(v) for v in values], inverse, precision)
