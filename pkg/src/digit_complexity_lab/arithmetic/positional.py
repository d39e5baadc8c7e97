"""Subquadratic conversion between integers and fixed-width digit strings.

Both directions split the digit range in half and recurse, reusing one cache
of powers ``base**k`` per call. Below ``SMALL_WIDTH`` digits the schoolbook
loop takes over.
"""

from collections.abc import Sequence

from digit_complexity_lab.errors import InputError

SMALL_WIDTH = 64
_BINARY_DIGITS = bytes.maketrans(b"01", b"\x00\x01")


def _powers(base: int, width: int) -> dict[int, int]:
    """``base**k`` for every split width ``k`` the recursion will request."""
    cache: dict[int, int] = {}
    pending = [width]
    while pending:
        w = pending.pop()
        if w <= SMALL_WIDTH:
            continue
        half = w >> 1
        for part in (half, w - half):
            if part not in cache:
                pending.append(part)
        if half not in cache:
            cache[half] = base**half
    return cache


def int_to_digits(value: int, base: int, width: int) -> bytes:
    """The ``width`` low base-``base`` digits of ``value``, most significant first.

    Raises:
        InputError: If ``value`` is negative or needs more than ``width`` digits.
    """
    if value < 0:
        raise InputError("only non-negative integers have digit strings")
    if width <= 0:
        if value:
            raise InputError("value does not fit in zero digits")
        return b""
    if base == 2:
        text = format(value, "b")
        if len(text) > width:
            raise InputError(f"value needs {len(text)} binary digits")
        return text.zfill(width).encode("ascii").translate(_BINARY_DIGITS)

    powers = _powers(base, width)
    out = bytearray(width)

    def inner(x: int, start: int, w: int) -> None:
        if w <= SMALL_WIDTH:
            for i in range(start + w - 1, start - 1, -1):
                x, out[i] = divmod(x, base)
            if x:
                raise InputError(f"value does not fit in {width} digits")
            return
        half = w >> 1
        hi, lo = divmod(x, powers[half])
        inner(hi, start, w - half)
        inner(lo, start + w - half, half)

    inner(value, 0, width)
    return bytes(out)


def digits_to_int(digits: Sequence[int], base: int) -> int:
    """Inverse of ``int_to_digits``."""
    width = len(digits)
    if width == 0:
        return 0
    powers = _powers(base, width)

    def inner(start: int, w: int) -> int:
        if w <= SMALL_WIDTH:
            value = 0
            for d in digits[start : start + w]:
                value = value * base + d
            return value
        half = w >> 1
        return inner(start, w - half) * powers[half] + inner(start + w - half, half)

    return inner(0, width)
