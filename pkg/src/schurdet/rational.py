"""Exact rational scalars. Everything in this package is a fractions.Fraction."""

from fractions import Fraction

Rational = Fraction


def as_fraction(value) -> Fraction:
    """Coerce an int, Fraction, or "num/den" string to an exact Fraction.

    Floats are rejected: exactness is a contract, not a preference.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational scalar")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")
