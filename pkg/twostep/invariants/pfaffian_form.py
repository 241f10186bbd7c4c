# twostep/invariants/pfaffian_form.py

"""
Pfaffian form of a type-(p, q) presentation.

For the W1 basis (u_a) and z in the dual of W2, B(z)_ab is the linear form
Σ_k z_k · (W2-coordinate k of [u_a, u_b]), and the Pfaffian form is
Pf(B(z)), homogeneous of degree p/2 in z1..zq.
"""

from twostep.core.errors import NotTwoStep, OddDimensionError
from twostep.core.polys import (
    format_poly,
    is_homogeneous,
    linear_form,
    poly_pfaffian,
    poly_ring,
    total_degree,
)

BINARY_QUARTIC = "binary-quartic"
TERNARY_CUBIC = "ternary-cubic"


class PfaffianForm:
    """Homogeneous polynomial Pf(B(z)) with its presentation type."""

    __slots__ = ("poly", "p", "q")

    def __init__(self, poly, p, q):
        if not is_homogeneous(poly):
            raise ValueError("Pfaffian form must be homogeneous")
        self.poly = poly
        self.p = p
        self.q = q

    @property
    def degree(self):
        return self.p // 2

    @property
    def family(self):
        """BINARY_QUARTIC, TERNARY_CUBIC or None."""
        if self.q == 2 and self.degree == 4:
            return BINARY_QUARTIC
        if self.q == 3 and self.degree == 3:
            return TERNARY_CUBIC
        return None

    def format(self):
        return format_poly(self.poly)

    def __eq__(self, other):
        if not isinstance(other, PfaffianForm):
            return NotImplemented
        return (self.p, self.q) == (other.p, other.q) and self.poly == other.poly

    __hash__ = None

    def __repr__(self):
        return f"PfaffianForm({self.format()}, type=({self.p}, {self.q}))"


def coefficient_matrix(pres):
    """B(z) as a list of rows of linear forms in z1..zq."""
    a = pres.algebra
    p, q = pres.type
    u = pres.w1.vectors
    R = poly_ring(q)
    rows = [[R.zero] * p for _ in range(p)]
    for i in range(p):
        for j in range(i + 1, p):
            coords = pres.w2_coordinates(a.bracket_vec(u[i], u[j]))
            form = linear_form(coords)
            rows[i][j] = form
            rows[j][i] = -form
    return rows


def pfaffian_form(pres):
    p, q = pres.type
    if q == 0:
        raise NotTwoStep("Pfaffian form needs q >= 1")
    if p % 2:
        raise OddDimensionError(f"Pfaffian form needs even p, got p = {p}")
    poly = poly_pfaffian(coefficient_matrix(pres))
    if poly and total_degree(poly) != p // 2:
        raise ArithmeticError("Pfaffian form has the wrong degree")
    return PfaffianForm(poly, p, q)
