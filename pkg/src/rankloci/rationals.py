"""Exact rational scalars and their "p/q" string encoding.

All arithmetic in this package happens over the rationals.  gmpy2's ``mpq``
is used when available (GMP-backed gcds are much faster on large operands);
``fractions.Fraction`` is a drop-in fallback.  Both types keep values reduced
with a positive denominator, which is exactly the canonical form we need.
"""

from __future__ import annotations

import re
from fractions import Fraction

try:
    from gmpy2 import mpq as _mpq

    _HAVE_GMPY2 = True
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    _mpq = None
    _HAVE_GMPY2 = False


def rat(value=0, den=None):
    """Build an exact rational from ints, "p/q" strings, or other rationals.

    Floats are rejected: silently converting them would defeat exactness.
    """
    if isinstance(value, float):
        raise TypeError("refusing float -> rational coercion; pass int or 'p/q' string")
    if den is not None:
        if isinstance(den, float):
            raise TypeError("refusing float -> rational coercion; pass int or 'p/q' string")
        return _mpq(value, den) if _HAVE_GMPY2 else Fraction(value, den)
    if _HAVE_GMPY2:
        return _mpq(value)
    if isinstance(value, str):
        return Fraction(value)
    return Fraction(value)


ZERO = rat(0)
ONE = rat(1)


def rat_str(q) -> str:
    """Render a rational as "p" or "p/q" (denominator omitted when 1)."""
    n, d = q.numerator, q.denominator
    return str(n) if d == 1 else f"{n}/{d}"


_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def parse_rational(value):
    """Parse a JSON-level rational: an int or a strict "p/q" / "p" string.

    Decimal notation is rejected on purpose: values that went through a
    float once cannot be trusted to be exact.
    """
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return rat(value)
    if isinstance(value, str):
        text = value.strip()
        if not _RATIONAL_RE.match(text):
            raise ValueError(f"not a rational: {value!r}")
        return rat(text)
    raise ValueError(f"not a rational: {value!r}")
