"""Parsing and formatting of exact rationals.

Every quantity in this package (block lengths, masses, gaps, costs, scales)
is a ``fractions.Fraction``, so all comparisons and cost identities are
decided exactly.  Files and printed documents carry rationals as strings
"p/q" (or bare integers); these helpers convert both ways and always keep
lowest terms with a positive denominator.
"""

from fractions import Fraction


def parse_rational(value) -> Fraction:
    """Accept an int or a "p/q" / "n" string; reject everything else.

    Floats are rejected on purpose: they would silently lose exactness.
    """
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational: {value!r}") from exc
    raise ValueError(f"not a rational: {value!r}")


def format_rational(x) -> str:
    """Lowest-terms "p/q", or a plain integer string when the denominator is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
