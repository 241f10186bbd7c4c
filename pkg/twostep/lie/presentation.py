# twostep/lie/presentation.py

"""
Change of basis and type-(p, q) presentations of 2-step algebras.
"""

from twostep.core.errors import DimensionMismatch, NotTwoStep, PresentationError
from twostep.core.matrices import Subspace, is_zero_vector, unit_vector
from twostep.lie.algebra import LieAlgebra
from twostep.lie.structure import derived_subalgebra, nilpotency_step


def act_gl(a, g):
    """g.λ with (g.λ)(X, Y) = g[g⁻¹X, g⁻¹Y]."""
    n = a.dim
    if g.shape != (n, n):
        raise DimensionMismatch(f"matrix {g.shape} acting on dimension {n}")
    g_inv = g.inverse()
    preimages = g_inv.columns()
    brackets = {}
    for i in range(n):
        for j in range(i + 1, n):
            value = a.bracket_vec(preimages[i], preimages[j])
            if not is_zero_vector(value):
                brackets[(i, j)] = g.apply(value)
    return LieAlgebra(n, brackets, name=a.name, basis_names=a.basis_names)


class TwoStepPresentation:
    """
    Splitting W = W1 ⊕ W2 of a 2-step algebra with [W1, W1] ⊆ W2 and
    [W, W2] = 0. The bases of W1 and W2 are kept in the given order.
    """

    __slots__ = ("algebra", "w1", "w2")

    def __init__(self, algebra, w1, w2):
        self.algebra = algebra
        self.w1 = w1
        self.w2 = w2

    @property
    def p(self):
        return self.w1.dim

    @property
    def q(self):
        return self.w2.dim

    @property
    def type(self):
        return (self.p, self.q)

    def w2_coordinates(self, v):
        coords = self.w2.coordinates(v)
        if coords is None:
            raise PresentationError("bracket value outside W2")
        return coords

    def validate(self):
        a = self.algebra
        if not self.w1.is_complement_of(self.w2):
            raise PresentationError("W1 is not a complement of W2")
        n = a.dim
        for w in self.w2.vectors:
            for k in range(n):
                if not is_zero_vector(a.bracket_vec(unit_vector(n, k), w)):
                    raise PresentationError("[W, W2] is not zero")
        for idx, u in enumerate(self.w1.vectors):
            for v in self.w1.vectors[idx + 1:]:
                if not self.w2.contains(a.bracket_vec(u, v)):
                    raise PresentationError("[W1, W1] is not contained in W2")
        return self

    def __repr__(self):
        return f"TwoStepPresentation(type={self.type})"


def two_step_presentation(a, w1_choice=None):
    """W2 = derived algebra; W1 = given complement or the coordinate complement."""
    step = nilpotency_step(a)
    if step != 2:
        if step == 1:
            raise NotTwoStep("algebra is abelian (q = 0)")
        raise NotTwoStep(f"algebra is not 2-step nilpotent (step {step})")
    w2 = derived_subalgebra(a)
    if w1_choice is None:
        w1 = w2.coordinate_complement()
    else:
        if not isinstance(w1_choice, Subspace):
            w1_choice = Subspace(a.dim, w1_choice)
        w1 = w1_choice
    return TwoStepPresentation(a, w1, w2).validate()
