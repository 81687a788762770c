"""Exact rational scalars.

All arithmetic in this package is exact.  We use gmpy2's mpq when available
(much faster), falling back to fractions.Fraction.  Both types are kept in
lowest terms with positive denominator, compare equal across types, and hash
consistently.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as Rat
except ImportError:  # pragma: no cover
    from fractions import Fraction as Rat

ZERO = Rat(0)
ONE = Rat(1)


def rat(value) -> Rat:
    """Coerce an int, string "p/q", or rational to a Rat."""
    if isinstance(value, str):
        return Rat(value.strip())
    return Rat(value)


def rat_str(value) -> str:
    """Canonical string form: "p" or "p/q" with q > 0."""
    return str(Rat(value))
