# twostep/core/scalars.py

"""
Exact scalars.

Every scalar handled by the package is an element of sympy's Gaussian
rational field QQ_I; rational numbers are the elements with zero imaginary
part. Real and imaginary parts are elements of QQ.

Note that QQ_I elements only compare equal to other QQ_I elements, so zero
tests are written as ``not z``.
"""

import re
from fractions import Fraction

from sympy.polys.domains import QQ, QQ_I

from twostep.core.errors import TwoStepError

ZERO = QQ_I(0)
ONE = QQ_I(1)
I_UNIT = QQ_I(0, 1)
HALF = QQ_I(QQ(1, 2))
QUARTER = QQ_I(QQ(1, 4))

_RATIONAL = re.compile(r"^[+-]?\d+(?:/\d+)?$")


class ScalarSyntaxError(TwoStepError, ValueError):
    pass


def rational(value):
    """Convert int, Fraction, QQ element or 'p/q' text to a QQ element."""
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, str):
        text = value.strip()
        if not _RATIONAL.match(text):
            raise ScalarSyntaxError(f"not a rational literal: {value!r}")
        if "/" in text:
            num, den = text.split("/")
            if int(den) == 0:
                raise ScalarSyntaxError(f"zero denominator in {value!r}")
            return QQ(int(num), int(den))
        return QQ(int(text))
    if QQ.of_type(value):
        return value
    raise TypeError(f"cannot convert {type(value).__name__} to a rational")


def scalar(value):
    """Convert any supported exact value to a QQ_I element."""
    if QQ_I.of_type(value):
        return value
    if isinstance(value, str):
        return parse_scalar(value)
    if isinstance(value, tuple) and len(value) == 2:
        return QQ_I(rational(value[0]), rational(value[1]))
    return QQ_I(rational(value))


def gaussian(re_part, im_part=0):
    return QQ_I(rational(re_part), rational(im_part))


def parse_scalar(text):
    """Parse `p/q`, `p`, `bi`, `a+bi`, `a-bi`, `i`, `-i`."""
    body = text.strip().replace(" ", "")
    if not body:
        raise ScalarSyntaxError("empty scalar literal")
    if not body.endswith("i"):
        return QQ_I(rational(body))

    body = body[:-1]
    split = max(body.rfind("+"), body.rfind("-"))
    if split > 0:
        re_text, im_text = body[:split], body[split:]
    else:
        re_text, im_text = "", body

    if im_text in ("", "+"):
        im = QQ(1)
    elif im_text == "-":
        im = QQ(-1)
    else:
        im = rational(im_text)
    re_value = rational(re_text) if re_text else QQ(0)
    return QQ_I(re_value, im)


def _format_rational(q):
    if q.denominator == 1:
        return str(int(q.numerator))
    return f"{int(q.numerator)}/{int(q.denominator)}"


def format_scalar(z):
    """Canonical literal accepted back by parse_scalar."""
    z = scalar(z)
    x, y = z.x, z.y
    if not y:
        return _format_rational(x)
    if not x:
        return f"{_format_rational(y)}i"
    sign = "+" if y > 0 else "-"
    return f"{_format_rational(x)}{sign}{_format_rational(abs_rational(y))}i"


def abs_rational(q):
    return -q if q < 0 else q


def is_real(z):
    return not z.y


def is_positive_real(z):
    return not z.y and z.x > 0


def conj(z):
    return QQ_I(z.x, -z.y)


def norm_squared(z):
    """z * conj(z) as a QQ element."""
    return z.x * z.x + z.y * z.y


def to_fraction(q):
    return Fraction(int(q.numerator), int(q.denominator))


def to_complex(z):
    return complex(float(to_fraction(z.x)), float(to_fraction(z.y)))


def to_float(z):
    if z.y:
        raise ValueError(f"scalar {format_scalar(z)} is not real")
    return float(to_fraction(z.x))


def from_float(value, max_denominator=10**4):
    """Continued-fraction rounding of a float to a rational QQ_I element."""
    approx = Fraction(float(value)).limit_denominator(max_denominator)
    return QQ_I(QQ(approx.numerator, approx.denominator))
