from twostep.lie.algebra import LieAlgebra, validate_lie
from twostep.lie.presentation import TwoStepPresentation, act_gl, two_step_presentation
from twostep.lie.structure import (
    center,
    derivation_basis,
    derivation_space,
    derived_subalgebra,
    is_derivation,
    is_nilpotent,
    is_two_step,
    lower_central_series,
    nilpotency_step,
)
