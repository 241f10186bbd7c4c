import random

import pytest

from twostep.acs import (
    AlmostComplexStructure,
    anticomplexify,
    classify_acs,
    complexify,
    conjugate,
    conjugate_bracket,
    conjugate_structure,
    conjugation_split,
    decompose_bracket,
    doubled_metric,
    j_flip,
    realify,
)
from twostep.acs.classify import bracket_sum
from twostep.core.errors import InvarianceError, NotAlmostComplex, NotTwoStep
from twostep.core.matrices import MatrixExact, vector
from twostep.core.scalars import gaussian
from twostep.lie import LieAlgebra, act_gl, derived_subalgebra, validate_lie
from twostep.lie.samples import random_invertible, random_skew_bracket, random_two_step


@pytest.fixture
def h3():
    return validate_lie({(0, 1): {2: 1}}, dim=3, name="h3")


@pytest.fixture
def iwasawa(h3):
    return complexify(h3)


_SHAPES = ((2, 1), (3, 1), (3, 2), (4, 2))


def _generic_two_step(rng, p, q):
    # derived algebra equal to the full span of Z1..Zq; needs q <= p(p-1)/2
    while True:
        a = random_two_step(rng, p, q)
        if derived_subalgebra(a).dim == q:
            return a


def _generic_pair(rng, p, q):
    """Realified 2-step algebra over the Gaussian rationals with J = i."""
    h = _generic_two_step(rng, p, q)
    brackets = {}
    for key, value in h.constants():
        twist = gaussian(rng.randint(-2, 2), rng.randint(1, 2))
        brackets[key] = tuple(twist * c for c in value)
    return realify(LieAlgebra(h.dim, brackets))


def test_structure_validation():
    with pytest.raises(NotAlmostComplex):
        AlmostComplexStructure(MatrixExact.identity(2))
    with pytest.raises(NotAlmostComplex):
        AlmostComplexStructure.standard(3)
    j = AlmostComplexStructure.standard(4)
    assert j.apply(vector([1, 0, 0, 0])) == vector([0, 1, 0, 0])
    assert j.negated().negated() == j


def test_complexify_h3(iwasawa):
    a, j = iwasawa
    assert a.dim == 6
    assert a.bracket(0, 2) == vector([0, 0, 0, 0, 1, 0])
    assert a.bracket(0, 3) == vector([0, 0, 0, 0, 0, 1])
    assert a.bracket(1, 2) == vector([0, 0, 0, 0, 0, 1])
    assert a.bracket(1, 3) == vector([0, 0, 0, 0, -1, 0])
    assert a.jacobi_violation() is None
    assert j == AlmostComplexStructure.standard(6)


def test_anticomplexify_h3(h3):
    a, _ = anticomplexify(h3)
    assert a.bracket(0, 2) == vector([0, 0, 0, 0, 1, 0])
    assert a.bracket(0, 3) == vector([0, 0, 0, 0, 0, -1])
    assert a.bracket(1, 2) == vector([0, 0, 0, 0, 0, -1])
    assert a.bracket(1, 3) == vector([0, 0, 0, 0, -1, 0])
    assert a.jacobi_violation() is None


def test_anticomplexify_requires_two_step():
    aff = validate_lie({(0, 1): {1: 1}}, dim=2)
    with pytest.raises(NotTwoStep):
        anticomplexify(aff)
    with pytest.raises(ValueError):
        complexify(LieAlgebra(2, {(0, 1): (0, gaussian(0, 1))}))


def test_abelian_round_trips():
    ab = LieAlgebra.abelian(3)
    assert complexify(ab)[0] == LieAlgebra.abelian(6)
    assert anticomplexify(ab)[0] == LieAlgebra.abelian(6)


def test_classify_bi_invariant(iwasawa):
    flags = classify_acs(*iwasawa)
    assert flags.as_dict() == {"in_int": True, "in_ab": False, "in_C": True,
                               "in_Ch": True, "in_Cbar": False}
    assert flags.consistent()
    assert set(flags.witnesses) == {"in_ab", "in_Cbar"}


def test_classify_after_flip(iwasawa):
    a, j = iwasawa
    j_minus = j_flip(a, j, MatrixExact.identity(6))
    flags = classify_acs(a, j_minus)
    assert flags.in_Cbar
    assert not flags.in_C
    assert flags.in_Ch
    assert not flags.in_int


def test_classify_abelian_all_true():
    flags = classify_acs(LieAlgebra.abelian(4), AlmostComplexStructure.standard(4))
    assert all(flags.as_dict().values())
    assert flags.witnesses == {}


def test_complexify_is_bi_invariant_on_random_algebras():
    rng = random.Random(11)
    for _ in range(5):
        h = random_two_step(rng, rng.randint(2, 4), rng.randint(1, 2))
        assert classify_acs(*complexify(h)).in_C
        assert classify_acs(*anticomplexify(h)).in_Cbar


def test_decomposition_on_random_brackets():
    rng = random.Random(2024)
    j = AlmostComplexStructure.standard(6)
    for _ in range(100):
        a = random_skew_bracket(rng, 6)
        ab, c, cbar = decompose_bracket(a, j)
        assert bracket_sum(ab, c, cbar) == a
        assert classify_acs(ab, j).in_ab
        assert classify_acs(c, j).in_C
        assert classify_acs(cbar, j).in_Cbar


def test_decomposition_fixes_its_parts(iwasawa):
    a, j = iwasawa
    ab, c, cbar = decompose_bracket(a, j)
    assert ab.is_abelian()
    assert c == a
    assert cbar.is_abelian()
    rng = random.Random(3)
    part = decompose_bracket(random_skew_bracket(rng, 4), AlmostComplexStructure.standard(4))[0]
    again = decompose_bracket(part, AlmostComplexStructure.standard(4))
    assert again[0] == part
    assert again[1].is_abelian() and again[2].is_abelian()


def test_conjugation_exchanges_flags(iwasawa):
    a, j = iwasawa
    minus = conjugate(a, j)
    flags = classify_acs(minus, j)
    assert flags.in_Cbar and not flags.in_C
    assert conjugate(minus, j) == a


def test_conjugation_on_random_pairs():
    rng = random.Random(7)
    for _ in range(50):
        a, j = _generic_pair(rng, *rng.choice(_SHAPES[:3]))
        before = classify_acs(a, j)
        minus = conjugate(a, j)
        after = classify_acs(minus, j)
        assert conjugate(minus, j) == a
        assert after.in_C == before.in_Cbar
        assert after.in_Cbar == before.in_C
        assert after.in_Ch == before.in_Ch
        assert after.in_ab == before.in_ab


def test_conjugation_split_invariants(iwasawa):
    a, j = iwasawa
    split = conjugation_split(a, j)
    assert split.presentation.type == (4, 2)
    assert split.phi @ split.phi == MatrixExact.identity(6)
    assert conjugate_bracket(split) == act_gl(a, split.phi)


def test_conjugation_requires_invariant_derived_algebra():
    a = validate_lie({(0, 1): {2: 1}}, dim=4)
    with pytest.raises(InvarianceError) as info:
        conjugation_split(a, AlmostComplexStructure.standard(4))
    assert info.value.subspace.dim == 1


def test_conjugate_of_abelian_is_abelian():
    a = LieAlgebra.abelian(4)
    assert conjugate(a, AlmostComplexStructure.standard(4)) == a


def test_anticomplexify_equals_conjugated_complexify(h3):
    assert anticomplexify(h3)[0] == conjugate(*complexify(h3))
    rng = random.Random(19)
    for _ in range(10):
        h = _generic_two_step(rng, *rng.choice(_SHAPES))
        assert anticomplexify(h)[0] == conjugate(*complexify(h))


def test_conjugate_structure_is_transported_by_phi():
    rng = random.Random(31)
    for _ in range(10):
        a, j = _generic_pair(rng, *rng.choice(_SHAPES[:2]))
        split = conjugation_split(a, j)
        pulled = conjugate_structure(split)
        assert classify_acs(a, pulled) == classify_acs(conjugate_bracket(split), j)


def test_classification_is_equivariant():
    rng = random.Random(13)
    for _ in range(10):
        a, j = _generic_pair(rng, 2, 1)
        g = random_invertible(rng, a.dim)
        moved = AlmostComplexStructure(g @ j.matrix @ g.inverse())
        assert classify_acs(act_gl(a, g), moved) == classify_acs(a, j)


def test_j_flip_involution_and_commuting(iwasawa):
    a, j = iwasawa
    g = MatrixExact.identity(6)
    j_minus = j_flip(a, j, g)
    assert j_minus != j
    assert j_flip(a, j_minus, g) == j
    assert j_minus.commutes_with(j)
    assert j_minus.apply(vector([1, 0, 0, 0, 0, 0])) == vector([0, -1, 0, 0, 0, 0])
    assert j_minus.apply(vector([0, 0, 0, 0, 1, 0])) == vector([0, 0, 0, 0, 0, 1])


def test_j_flip_abelian_keeps_j():
    j = AlmostComplexStructure.standard(4)
    assert j_flip(LieAlgebra.abelian(4), j, MatrixExact.identity(4)) == j


def test_j_flip_reports_non_invariant_center():
    a = validate_lie({(0, 2): {3: 1}}, dim=4)
    with pytest.raises(InvarianceError):
        j_flip(a, AlmostComplexStructure.standard(4), MatrixExact.identity(4))


def test_doubled_metric_makes_j_orthogonal(h3):
    g = MatrixExact.diag([1, 2, 3])
    big = doubled_metric(g)
    assert big == MatrixExact.diag([1, 1, 2, 2, 3, 3])
    assert complexify(h3)[1].is_orthogonal_for(big)
