#########################################################
#                                                       #
#   Rational                                            #
#                                                       #
#   Exact values for binding number, toughness and      #
#   every threshold compared against them               #
#                                                       #
#########################################################

from fractions import Fraction
from numbers import Rational as RationalNumber
from re import fullmatch
from typing import Union


class Infinity:
    """
    The +infinity sentinel; compares strictly above every Fraction and int, and equal only to itself. Used for the
    toughness of complete graphs and the girth of forests, so that no float ever enters a comparison.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITY"

    def __str__(self) -> str:
        return "inf"

    def __hash__(self) -> int:
        return hash("matchex-infinity")

    def __eq__(self, other) -> bool:
        return isinstance(other, Infinity)

    def __lt__(self, other) -> bool:
        return False

    def __le__(self, other) -> bool:
        return isinstance(other, Infinity)

    def __gt__(self, other) -> bool:
        return not isinstance(other, Infinity)

    def __ge__(self, other) -> bool:
        return True

    def __reduce__(self):
        return Infinity, ()


INFINITY = Infinity()

Rational = Union[Fraction, Infinity]


def parse_rational(text: str) -> Fraction:
    """
    Parse an exact rational from a string such as "1/4", "2", or "-3/7".
    @param text: The string to parse; decimal points are rejected so that no rounding can occur.
    @return: The Fraction in lowest terms
    @raise ValueError if the string is not of the form P or P/Q with integers P, Q and Q nonzero.
    """
    stripped = text.strip()
    if not fullmatch(r"[+-]?\d+(/\d+)?", stripped):
        raise ValueError(f"Not an exact rational P/Q: '{text}'")

    numerator, _, denominator = stripped.partition("/")
    if denominator and int(denominator) == 0:
        raise ValueError(f"Zero denominator in '{text}'")

    return Fraction(int(numerator), int(denominator) if denominator else 1)


def as_rational(value: Union[int, Fraction, str]) -> Fraction:
    """
    Coerce an int, Fraction, or "P/Q" string into a Fraction; floats are refused.
    @param value: The value to coerce
    @return: An exact Fraction
    @raise TypeError on floats or other inexact types
    """
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, RationalNumber):
        return Fraction(value)
    raise TypeError(f"Expected an exact rational, got {type(value).__name__}: {value!r}")


def is_infinite(value) -> bool:
    return isinstance(value, Infinity)


def rational_str(value: Rational) -> str:
    """
    Human readable form; "inf", "3", or "4/3".
    """
    if is_infinite(value):
        return "inf"
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
