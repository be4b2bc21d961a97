"""
Exact decimal text <-> int conversion for naturals of any size.

CPython caps int()/str() at a few thousand digits by default; ball counts in
Digicomp_EXP instances can exceed that, so conversion splits recursively
around powers of ten.
"""

import re
from functools import lru_cache

_DIGIT_LIMIT = 1000
_DECIMAL_PATTERN = re.compile(r"^[0-9]+$")


@lru_cache(maxsize=None)
def _pow10(k: int) -> int:
    return 10**k


def is_decimal(token: str) -> bool:
    return bool(_DECIMAL_PATTERN.match(token))


def decimal_to_int(token: str) -> int:
    """Parse a string of ASCII digits."""
    if not is_decimal(token):
        raise ValueError(f"not a decimal natural: {token[:40]!r}")

    def inner(digits: str) -> int:
        if len(digits) <= _DIGIT_LIMIT:
            return int(digits)
        half = len(digits) // 2
        return inner(digits[:-half]) * _pow10(half) + inner(digits[-half:])

    return inner(token)


def int_to_decimal(value: int) -> str:
    """Render a natural as decimal digits, without leading zeros."""
    if value < 0:
        raise ValueError("negative values have no natural decimal form")

    def inner(x: int, width: int) -> str:
        # width is an upper bound on the digit count of x
        if width <= _DIGIT_LIMIT:
            return str(x)
        half = width // 2
        hi, lo = divmod(x, _pow10(half))
        return inner(hi, width - half) + inner(lo, half).zfill(half)

    width = int(value.bit_length() * 0.30103) + 1
    text = inner(value, width).lstrip("0")
    return text or "0"
