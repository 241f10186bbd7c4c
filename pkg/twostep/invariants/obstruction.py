# twostep/invariants/obstruction.py

"""
Absolute invariant S³/T² and the verdicts built on it.

If two algebras are isomorphic their Pfaffian forms are projectively
equivalent, so different absolute invariants prove the algebras distinct.
A finite absolute invariant that is not real proves that the algebra has no
real form. Neither test can prove the opposite.
"""

from twostep.core.errors import FamilyMismatch
from twostep.core.scalars import format_scalar, is_real
from twostep.invariants.binary_quartic import binary_quartic_st
from twostep.invariants.pair import BINOMIAL
from twostep.invariants.pfaffian_form import BINARY_QUARTIC, TERNARY_CUBIC
from twostep.invariants.ternary_cubic import ternary_cubic_st

FINITE = "finite"
INFINITE = "infinite"
INDETERMINATE = "indeterminate"

NO_REAL_FORM = "no-real-form"
DISTINCT = "distinct"
INCONCLUSIVE = "inconclusive"


class AbsoluteInvariant:
    """S³/T², or one of the degenerate kinds INFINITE (T = 0 ≠ S) and INDETERMINATE (S = T = 0)."""

    __slots__ = ("kind", "value")

    def __init__(self, kind, value=None):
        self.kind = kind
        self.value = value

    def is_finite(self):
        return self.kind == FINITE

    def format(self):
        return format_scalar(self.value) if self.is_finite() else self.kind

    def __eq__(self, other):
        if not isinstance(other, AbsoluteInvariant):
            return NotImplemented
        return self.kind == other.kind and self.value == other.value

    __hash__ = None

    def __repr__(self):
        return f"AbsoluteInvariant({self.format()})"


def absolute_invariant(pair):
    s, t = pair.s, pair.t
    if not t:
        return AbsoluteInvariant(INDETERMINATE if not s else INFINITE)
    return AbsoluteInvariant(FINITE, s * s * s / (t * t))


def real_form_obstruction(pair):
    value = absolute_invariant(pair)
    if value.is_finite() and not is_real(value.value):
        return NO_REAL_FORM
    return INCONCLUSIVE


def invariant_pair(form, convention=BINOMIAL):
    """S and T of a Pfaffian form in one of the two supported families."""
    family = form.family
    if family == BINARY_QUARTIC:
        return binary_quartic_st(form.poly, convention)
    if family == TERNARY_CUBIC:
        return ternary_cubic_st(form.poly)
    raise FamilyMismatch(f"no invariants for a Pfaffian form of type ({form.p}, {form.q})")


def distinguish_algebras(f, g, convention=BINOMIAL):
    if f.family != g.family:
        raise FamilyMismatch(f"cannot compare a {f.family} with a {g.family}")
    first = absolute_invariant(invariant_pair(f, convention))
    second = absolute_invariant(invariant_pair(g, convention))
    if INDETERMINATE in (first.kind, second.kind):
        return INCONCLUSIVE
    return DISTINCT if first != second else INCONCLUSIVE
