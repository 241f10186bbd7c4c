# twostep/invariants/binary_quartic.py

"""
Classical invariants of a binary quartic

    f = a x⁴ + 4b x³y + 6c x²y² + 4d xy³ + e y⁴
    S = ae - 4bd + 3c²
    T = ace + 2bcd - ad² - b²e - c³

The binomial convention reads (a, b, c, d, e) from f with the binomial
weights (1, 4, 6, 4, 1) divided out, which makes S and T invariant under
unimodular substitutions. The plain convention feeds the raw coefficients
of x⁴, x³y, x²y², xy³, y⁴ into the same formulas.
"""

from twostep.core.errors import FamilyMismatch
from twostep.core.polys import coefficient, is_homogeneous, num_vars, total_degree
from twostep.core.scalars import scalar
from twostep.invariants.pfaffian_form import BINARY_QUARTIC
from twostep.invariants.pair import BINOMIAL, CONVENTIONS, PLAIN, InvariantPair

_WEIGHTS = tuple(scalar(w) for w in (1, 4, 6, 4, 1))
_TWO, _THREE, _FOUR = scalar(2), scalar(3), scalar(4)


def quartic_coefficients(f, convention=PLAIN):
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    if num_vars(f) != 2:
        raise FamilyMismatch(f"binary quartic expected, got {num_vars(f)} variables")
    if f and (not is_homogeneous(f) or total_degree(f) != 4):
        raise FamilyMismatch("binary quartic must be homogeneous of degree 4")
    coeffs = [coefficient(f, (4 - k, k)) for k in range(5)]
    if convention == BINOMIAL:
        coeffs = [c / w for c, w in zip(coeffs, _WEIGHTS)]
    return tuple(coeffs)


def quartic_st(a, b, c, d, e):
    s = a * e - _FOUR * b * d + _THREE * c * c
    t = a * c * e + _TWO * b * c * d - a * d * d - b * b * e - c * c * c
    return s, t


def binary_quartic_st(f, convention=PLAIN):
    s, t = quartic_st(*quartic_coefficients(f, convention))
    return InvariantPair(s, t, convention, BINARY_QUARTIC)
