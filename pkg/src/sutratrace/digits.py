"""Exact non-negative base-10 digit sequences and the primitives built on them.

Digits are stored least-significant first, so index k carries place value
10**k.  Leading (most-significant) zeros are legal; `normalize` strips them.
Display layers reverse the sequence for rendering.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import LengthError, ParseError

__all__ = [
    "DigitString",
    "parse_operand",
    "from_int",
    "value_of",
    "normalize",
    "pad_to_length",
    "duplex",
    "tens_complement",
]


@dataclass(frozen=True, slots=True)
class DigitString:
    """Immutable digit sequence, units digit at index 0, length >= 1."""

    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.digits) < 1:
            raise ValueError("digit sequence must have at least one digit")
        for d in self.digits:
            if not (isinstance(d, int) and 0 <= d <= 9):
                raise ValueError(f"digit out of range: {d!r}")

    def __len__(self) -> int:
        return len(self.digits)

    def __str__(self) -> str:
        return "".join(str(d) for d in reversed(self.digits))

    @property
    def value(self) -> int:
        return value_of(self)


def parse_operand(text: str) -> DigitString:
    """Parse user-typed operand text, preserving leading zeros as given.

    Accepts optional surrounding whitespace around a run of ASCII decimal
    digits; anything else (signs, decimal points, inner spaces) raises
    ParseError with the offending position in the original text.
    """
    stripped = text.strip()
    if not stripped:
        raise ParseError(0, "empty operand")
    start = text.index(stripped[0])
    for offset, ch in enumerate(stripped):
        if ch not in "0123456789":
            raise ParseError(start + offset, f"not a decimal digit: {ch!r}")
    return DigitString(tuple(int(ch) for ch in reversed(stripped)))


def from_int(value: int) -> DigitString:
    """Normalized digits of a non-negative integer."""
    if value < 0:
        raise ValueError("negative values are not representable")
    return DigitString(tuple(int(ch) for ch in reversed(str(value))))


def value_of(d: DigitString) -> int:
    """Exact integer value: sum of digits[k] * 10**k."""
    total = 0
    for digit in reversed(d.digits):
        total = total * 10 + digit
    return total


def normalize(d: DigitString) -> DigitString:
    """Strip leading (most-significant) zeros; zero stays a single digit."""
    digits = d.digits
    top = len(digits)
    while top > 1 and digits[top - 1] == 0:
        top -= 1
    return DigitString(digits[:top])


def pad_to_length(d: DigitString, n: int) -> DigitString:
    """Append most-significant zeros until the sequence has n places."""
    if n < len(d):
        raise LengthError(f"cannot pad {len(d)} digits down to {n}")
    return DigitString(d.digits + (0,) * (n - len(d)))


def duplex(d: DigitString) -> int:
    """Duplex (Dwandwa) of a digit sequence.

    Twice the sum of products of digits equidistant from the ends, plus the
    square of the middle digit when the length is odd.  Symmetric under
    reversal, so digit order does not matter.
    """
    digits = d.digits
    last = len(digits) - 1
    total = 0
    for i in range((last + 2) // 2):
        j = last - i
        if i == j:
            total += digits[i] * digits[i]
        else:
            total += 2 * digits[i] * digits[j]
    return total


def tens_complement(d: DigitString, width: int) -> DigitString:
    """Complement with respect to 10**width: value_of(result) = 10**width - value_of(d).

    Uses the all-from-9-last-from-10 digit rule: trailing zeros stay zero,
    the lowest nonzero digit is taken from 10, every higher digit from 9.
    The complement of zero is 10**width itself (width + 1 digits).
    """
    if width < len(normalize(d)):
        raise LengthError(f"width {width} too small for {len(normalize(d))} digits")
    src = pad_to_length(normalize(d), width).digits
    if value_of(d) == 0:
        return DigitString((0,) * width + (1,))
    out = []
    seen_nonzero = False
    for digit in src:
        if not seen_nonzero:
            if digit == 0:
                out.append(0)
            else:
                out.append(10 - digit)
                seen_nonzero = True
        else:
            out.append(9 - digit)
    # Exactly `width` places, leading zeros kept, so grid columns stay aligned.
    return DigitString(tuple(out))
