"""Scalar handling: exact rationals by default, tolerance-based floats on request.

Every model fixes one scalar mode at load time.  Exact mode stores
``fractions.Fraction`` everywhere and all comparisons are literal equality.
Float mode stores machine floats and defers to a tolerance, which callers
thread through explicitly.  The two modes are never mixed inside one model.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

EXACT = "exact"
FLOAT = "float"
MODES = (EXACT, FLOAT)

# Absolute tolerance for float-mode probability comparison; rank decisions
# use it relative to the largest pivot seen.
DEFAULT_TOLERANCE = 1e-9

Scalar = Fraction | float

_RATIONAL_RE = re.compile(r"[+-]?\d+(/\d+)?\Z")


def zero(mode: str) -> Scalar:
    return Fraction(0) if mode == EXACT else 0.0


def one(mode: str) -> Scalar:
    return Fraction(1) if mode == EXACT else 1.0


def as_scalar(value, mode: str) -> Scalar:
    """Coerce a number to the given mode, refusing silent precision changes."""
    if mode == EXACT:
        if isinstance(value, float):
            raise TypeError("float entry in an exact-mode model")
        return Fraction(value)
    if isinstance(value, Fraction):
        raise TypeError("Fraction entry in a float-mode model")
    return float(value)


def parse_scalar(text: str, mode: str) -> Scalar:
    """Parse one numeric literal.  Exact mode takes integers and p/q, float
    mode takes anything ``float()`` accepts except fraction syntax."""
    if mode == EXACT:
        if not _RATIONAL_RE.match(text):
            raise ValueError(f"not an exact rational literal: {text!r}")
        try:
            return Fraction(text)
        except ZeroDivisionError:
            raise ValueError(f"zero denominator: {text!r}") from None
    if "/" in text:
        raise ValueError(f"fraction literal in float mode: {text!r}")
    try:
        value = float(text)
    except ValueError:
        raise ValueError(f"not a numeric literal: {text!r}") from None
    if not math.isfinite(value):
        raise ValueError(f"non-finite literal: {text!r}")
    return value


def format_scalar(x) -> str:
    """Canonical text form: lowest-terms rational, or shortest float repr."""
    if isinstance(x, float):
        return repr(x + 0.0)  # normalizes -0.0
    return str(x)  # Fraction and int both print exactly


def scalar_is_zero(x, mode: str, tolerance: float = DEFAULT_TOLERANCE) -> bool:
    if mode == EXACT:
        return x == 0
    return abs(x) <= tolerance


def scalars_equal(x, y, mode: str, tolerance: float = DEFAULT_TOLERANCE) -> bool:
    if mode == EXACT:
        return x == y
    return abs(x - y) <= tolerance


@dataclass(frozen=True)
class ComplexScalar:
    """Complex number over the current scalar mode (Gaussian rational or
    float pair).  Only the operations the wave-function algebra needs."""

    re: Scalar
    im: Scalar

    def __add__(self, other: "ComplexScalar") -> "ComplexScalar":
        return ComplexScalar(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "ComplexScalar") -> "ComplexScalar":
        return ComplexScalar(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "ComplexScalar") -> "ComplexScalar":
        return ComplexScalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __neg__(self) -> "ComplexScalar":
        return ComplexScalar(-self.re, -self.im)

    def conjugate(self) -> "ComplexScalar":
        return ComplexScalar(self.re, -self.im)

    def abs_squared(self) -> Scalar:
        return self.re * self.re + self.im * self.im


def complex_zero(mode: str) -> ComplexScalar:
    return ComplexScalar(zero(mode), zero(mode))


def complex_one(mode: str) -> ComplexScalar:
    return ComplexScalar(one(mode), zero(mode))


def complex_i(mode: str) -> ComplexScalar:
    return ComplexScalar(zero(mode), one(mode))


def as_complex(value, mode: str) -> ComplexScalar:
    if isinstance(value, ComplexScalar):
        return ComplexScalar(as_scalar(value.re, mode), as_scalar(value.im, mode))
    return ComplexScalar(as_scalar(value, mode), zero(mode))


def parse_complex(text: str, mode: str) -> ComplexScalar:
    """Parse ``re+imi`` / ``re-imi``.  A doubled sign like ``1/2+-1/2i`` is
    accepted; bare reals get a zero imaginary part."""
    t = text.strip()
    if not t.endswith("i"):
        return ComplexScalar(parse_scalar(t, mode), zero(mode))
    body = t[:-1]
    split = None
    for idx in range(1, len(body)):
        ch = body[idx]
        if ch in "+-" and body[idx - 1] not in "eE+-":
            split = idx
            break
    if split is None:
        # pure imaginary, e.g. "1i" (canonical form is "0+1i")
        return ComplexScalar(zero(mode), parse_scalar(body, mode))
    re_text = body[:split]
    im_text = body[split:]
    if im_text.startswith("+"):
        im_text = im_text[1:]
    if not im_text or im_text in "+-":
        raise ValueError(f"malformed complex literal: {text!r}")
    return ComplexScalar(parse_scalar(re_text, mode), parse_scalar(im_text, mode))


def format_complex(z: ComplexScalar) -> str:
    re_part = format_scalar(z.re)
    im = z.im
    if isinstance(im, float):
        im = im + 0.0
    if im < 0:
        return f"{re_part}-{format_scalar(-im)}i"
    return f"{re_part}+{format_scalar(im)}i"
