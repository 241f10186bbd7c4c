from twostep.invariants.binary_quartic import binary_quartic_st
from twostep.invariants.obstruction import (
    AbsoluteInvariant,
    absolute_invariant,
    distinguish_algebras,
    invariant_pair,
    real_form_obstruction,
)
from twostep.invariants.pair import BINOMIAL, PLAIN, InvariantPair
from twostep.invariants.pfaffian_form import PfaffianForm, pfaffian_form
from twostep.invariants.ternary_cubic import ternary_cubic_st
