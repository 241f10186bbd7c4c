# twostep/acs/conjugation.py

"""
The conjugation map φ of a 2-step algebra with an almost complex structure.

For J-invariant W1 and W2 = [W, W], W1 is split as W1^R ⊕ J W1^R by a
greedy choice of "real" vectors u with partners Ju. φ fixes W2 and the u's
and negates the Ju's, so φ² = I and φ anticommutes with J on W1. The
conjugate bracket is φ.λ.
"""

from twostep.core.errors import InvarianceError, PresentationError
from twostep.core.matrices import MatrixExact, Subspace, unit_vector
from twostep.core.scalars import ONE
from twostep.core.utils import get_logger
from twostep.acs.structures import AlmostComplexStructure
from twostep.lie.presentation import TwoStepPresentation, act_gl
from twostep.lie.structure import derived_subalgebra

logger = get_logger("twostep.acs")


def j_adapted_vectors(j, candidates, start):
    """
    Greedily pick u from `candidates` outside the running span (which starts
    at the J-invariant subspace `start`), adding u and Ju each time.
    """
    span = start
    chosen = []
    for u in candidates:
        if span.contains(u):
            continue
        ju = j.apply(u)
        chosen.append(u)
        span = span.sum(Subspace(span.ambient_dim, [u, ju]))
    return chosen, span


class ConjugationSplit:
    """Presentation with J-invariant W1, W2, the real vectors of W1 and φ."""

    __slots__ = ("presentation", "phi", "j", "real_vectors")

    def __init__(self, presentation, phi, j, real_vectors):
        self.presentation = presentation
        self.phi = phi
        self.j = j
        self.real_vectors = tuple(real_vectors)

    @property
    def algebra(self):
        return self.presentation.algebra

    def validate(self):
        n = self.phi.rows
        if self.phi @ self.phi != MatrixExact.identity(n):
            raise PresentationError("φ is not an involution")
        for w in self.presentation.w2.vectors:
            if self.phi.apply(w) != w:
                raise PresentationError("φ does not fix W2")
        jm = self.j.matrix
        for u in self.presentation.w1.vectors:
            if (self.phi @ jm).apply(u) != tuple(-x for x in (jm @ self.phi).apply(u)):
                raise PresentationError("φ does not anticommute with J on W1")
        self.presentation.validate()
        return self


def conjugation_split(a, j, w1=None):
    """Build the ConjugationSplit of (a, j); W1 defaults to a greedy J-invariant complement."""
    j.check_size(a)
    n = a.dim
    w2 = derived_subalgebra(a)
    if not w2.is_invariant(j.matrix):
        raise InvarianceError("derived algebra is not J-invariant", subspace=w2)

    if w1 is None:
        candidates = [unit_vector(n, k) for k in range(n)]
        real, total = j_adapted_vectors(j, candidates, w2)
    else:
        if not w1.is_invariant(j.matrix):
            raise InvarianceError("W1 is not J-invariant", subspace=w1)
        real, total = j_adapted_vectors(j, w1.vectors, w2)
    if not total.is_whole():
        raise PresentationError("W1 and W2 do not span the algebra")

    w1_vectors = []
    for u in real:
        w1_vectors.extend([u, j.apply(u)])
    w1_space = Subspace(n, w1_vectors)
    presentation = TwoStepPresentation(a, w1_space, w2)

    frame = MatrixExact.from_columns(w1_vectors + list(w2.vectors), n)
    signs = [ONE if k % 2 == 0 else -ONE for k in range(len(w1_vectors))] + [ONE] * w2.dim
    phi = frame @ MatrixExact.diag(signs) @ frame.inverse()
    logger.debug("conjugation split with %d real vectors", len(real))
    return ConjugationSplit(presentation, phi, j, real).validate()


def conjugate_bracket(split):
    """λ⁻ = φ.λ."""
    split.presentation.validate()
    return act_gl(split.algebra, split.phi)


def conjugate(a, j, w1=None):
    return conjugate_bracket(conjugation_split(a, j, w1))


def conjugate_structure(split):
    """φJφ: the structure on λ for which φ is an isomorphism onto (λ⁻, J)."""
    return AlmostComplexStructure(split.phi @ split.j.matrix @ split.phi)
