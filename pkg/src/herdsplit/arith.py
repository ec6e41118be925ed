"""Exact integer and rational arithmetic primitives.

Everything downstream is built on these: integers are Python's unbounded
ints (no wrapping, ever), rationals are `fractions.Fraction`, which keeps
a positive denominator and stores every value reduced.
"""

import math
from fractions import Fraction
from typing import Iterable

from .errors import InvalidInput

# Reduced-form exact rational with a guaranteed positive denominator.
Rational = Fraction


def gcd(a: int, b: int) -> int:
    """Greatest common divisor of two nonnegative integers.

    >>> gcd(12, 18)
    6
    >>> gcd(7, 0)
    7
    >>> gcd(0, 0)
    0
    """
    return math.gcd(a, b)


def lcm_all(values: Iterable[int]) -> int:
    """Least common multiple of a nonempty collection of integers >= 1.

    >>> lcm_all([3, 6, 9, 12])
    36
    >>> lcm_all([7])
    7
    """
    vals = list(values)
    if not vals:
        raise InvalidInput("lcm_all needs at least one value")
    if any(v < 1 for v in vals):
        raise InvalidInput("lcm_all values must all be >= 1")
    return math.lcm(*vals)


def rat_sum(terms: Iterable[Rational]) -> Rational:
    """Exact reduced sum of rationals; the empty sum is 0.

    >>> rat_sum([Fraction(1, 2), Fraction(1, 3), Fraction(1, 9)])
    Fraction(17, 18)
    >>> rat_sum([])
    Fraction(0, 1)
    """
    return sum(terms, start=Fraction(0))
