import random

import pytest

from twostep.catalog import catalog_get
from twostep.core.errors import FamilyMismatch, OddDimensionError
from twostep.core.matrices import MatrixExact, block_diag
from twostep.core.polys import (
    from_terms,
    is_homogeneous,
    proportionality_factor,
    scale_poly,
    substitute_linear,
    total_degree,
    variables,
)
from twostep.core.scalars import ZERO, gaussian, scalar
from twostep.invariants import (
    BINOMIAL,
    PLAIN,
    absolute_invariant,
    binary_quartic_st,
    distinguish_algebras,
    invariant_pair,
    pfaffian_form,
    real_form_obstruction,
    ternary_cubic_st,
)
from twostep.invariants.obstruction import (
    DISTINCT,
    INCONCLUSIVE,
    INDETERMINATE,
    INFINITE,
    NO_REAL_FORM,
)
from twostep.invariants.pfaffian_form import PfaffianForm, coefficient_matrix
from twostep.invariants.ternary_cubic import hesse_cubic
from twostep.lie import act_gl, two_step_presentation, validate_lie
from twostep.lie.samples import random_invertible, random_rational, random_unimodular


def quartic_family(t):
    return from_terms(2, {(4, 0): 1, (2, 2): scalar(t), (0, 4): 1})


def cubic_family(t):
    t = scalar(t)
    return from_terms(3, {(1, 1, 1): t ** 3 + scalar(2), (3, 0, 0): -t, (0, 3, 0): -t, (0, 0, 3): -t})


def evaluate(f, point):
    total = ZERO
    for exps, c in f.terms():
        term = c
        for x, e in zip(point, exps):
            term = term * x ** e
        total = total + term
    return total


def form_of(name, t=None):
    return pfaffian_form(two_step_presentation(catalog_get(name, t=t).algebra))


def random_quartic(rng):
    return from_terms(2, {(4 - k, k): random_rational(rng) for k in range(5)})


def random_cubic(rng):
    exps = [(i, j, 3 - i - j) for i in range(4) for j in range(4 - i)]
    return from_terms(3, {e: random_rational(rng) for e in exps})


# --- Pfaffian forms ---

def test_h3_pfaffian_form():
    form = pfaffian_form(two_step_presentation(validate_lie({(0, 1): {2: 1}}, dim=3)))
    (z1,) = variables(1)
    assert form.poly == z1
    assert form.degree == 1
    assert form.family is None


@pytest.mark.parametrize("t", [0, 2, -3, (1, 1), (0, 1)])
def test_quartic_catalog_family_matches(t):
    form = form_of("lambda82", t=scalar(t))
    assert form.family == "binary-quartic"
    assert proportionality_factor(form.poly, quartic_family(t))


@pytest.mark.parametrize("t", [0, 1, 2, (1, 1)])
def test_cubic_catalog_family_matches(t):
    form = form_of("lambda63", t=scalar(t))
    assert form.family == "ternary-cubic"
    assert proportionality_factor(form.poly, cubic_family(t))


def test_pfaffian_form_squares_to_determinant():
    rng = random.Random(8)
    pres = two_step_presentation(catalog_get("lambda82", t=scalar(3)).algebra)
    form = pfaffian_form(pres)
    assert is_homogeneous(form.poly) and total_degree(form.poly) == 4
    rows = coefficient_matrix(pres)
    for _ in range(5):
        point = [random_rational(rng), random_rational(rng)]
        b = MatrixExact([[evaluate(entry, point) for entry in row] for row in rows])
        value = evaluate(form.poly, point)
        assert value * value == b.det()


def test_pfaffian_form_rejects_odd_p():
    pres = two_step_presentation(validate_lie({(0, 1): {3: 1}}, dim=4))
    with pytest.raises(OddDimensionError):
        pfaffian_form(pres)


# --- binary quartics ---

@pytest.mark.parametrize("t", [0, 1, 2, 3, -1, (0, 1), (1, 1), (1, -2)])
def test_binary_quartic_plain_closed_forms(t):
    t = scalar(t)
    pair = binary_quartic_st(quartic_family(t), PLAIN)
    assert pair.s == scalar(1) + scalar(3) * t * t
    assert pair.t == t - t ** 3


@pytest.mark.parametrize("t", [0, 2, 6, (2, 1)])
def test_binary_quartic_binomial_closed_forms(t):
    t = scalar(t)
    pair = binary_quartic_st(quartic_family(t), BINOMIAL)
    assert pair.s == scalar(1) + t * t / scalar(12)
    assert pair.t == t / scalar(6) - t ** 3 / scalar(216)


def test_binary_quartic_rejects_other_shapes():
    with pytest.raises(FamilyMismatch):
        binary_quartic_st(from_terms(2, {(3, 0): 1}))
    with pytest.raises(FamilyMismatch):
        binary_quartic_st(from_terms(3, {(4, 0, 0): 1}))


def test_binary_invariants_are_unimodular_invariant():
    rng = random.Random(41)
    for _ in range(20):
        f = random_quartic(rng)
        a = random_unimodular(rng, 2)
        before = binary_quartic_st(f, BINOMIAL)
        after = binary_quartic_st(substitute_linear(f, a), BINOMIAL)
        assert (after.s, after.t) == (before.s, before.t)


def test_binary_scaling_covariance():
    rng = random.Random(4)
    f = random_quartic(rng)
    c = gaussian(2, -1)
    base = binary_quartic_st(f, BINOMIAL)
    scaled = binary_quartic_st(scale_poly(f, c), BINOMIAL)
    assert scaled.s == c ** 2 * base.s
    assert scaled.t == c ** 3 * base.t


# --- ternary cubics ---

def test_ternary_hesse_calibration():
    fermat = ternary_cubic_st(hesse_cubic(1, 0))
    assert (fermat.s, fermat.t) == (scalar(0), scalar(1))
    triangle = ternary_cubic_st(hesse_cubic(0, 1))
    assert (triangle.s, triangle.t) == (scalar(-1), scalar(-8))


def test_ternary_hesse_closed_forms():
    rng = random.Random(17)
    for _ in range(10):
        a, b = random_rational(rng), random_rational(rng)
        pair = ternary_cubic_st(hesse_cubic(a, b))
        assert pair.s == a ** 3 * b - b ** 4
        assert pair.t == a ** 6 - scalar(20) * a ** 3 * b ** 3 - scalar(8) * b ** 6


@pytest.mark.parametrize("t", [0, 1, 2, (0, 1)])
def test_ternary_cubic_family(t):
    t = scalar(t)
    b = (t ** 3 + scalar(2)) / scalar(6)
    pair = ternary_cubic_st(cubic_family(t))
    assert pair.s == -t ** 3 * b - b ** 4
    assert pair.t == t ** 6 + scalar(20) * t ** 3 * b ** 3 - scalar(8) * b ** 6


def test_ternary_invariants_are_unimodular_invariant():
    rng = random.Random(23)
    for _ in range(10):
        f = random_cubic(rng)
        a = random_unimodular(rng, 3)
        before = ternary_cubic_st(f)
        after = ternary_cubic_st(substitute_linear(f, a))
        assert (after.s, after.t) == (before.s, before.t)


def test_ternary_scaling_covariance():
    f = random_cubic(random.Random(9))
    c = scalar(3)
    base = ternary_cubic_st(f)
    scaled = ternary_cubic_st(scale_poly(f, c))
    assert scaled.s == c ** 4 * base.s
    assert scaled.t == c ** 6 * base.t


def test_ternary_rejects_quartics():
    with pytest.raises(FamilyMismatch):
        ternary_cubic_st(from_terms(3, {(4, 0, 0): 1}))


# --- absolute invariant and verdicts ---

def test_absolute_invariant_values():
    at_i = absolute_invariant(binary_quartic_st(quartic_family((0, 1)), PLAIN))
    assert at_i.is_finite()
    assert at_i.value == scalar(2)
    assert absolute_invariant(binary_quartic_st(quartic_family(0), PLAIN)).kind == INFINITE
    assert absolute_invariant(binary_quartic_st(quartic_family(1), PLAIN)).kind == INFINITE
    x4 = from_terms(2, {(4, 0): 1})
    assert absolute_invariant(binary_quartic_st(x4, PLAIN)).kind == INDETERMINATE


def test_absolute_invariant_closed_form_at_two():
    value = absolute_invariant(binary_quartic_st(quartic_family(2), PLAIN))
    assert value.value == scalar("2197/36")


def test_real_form_obstruction():
    pair = binary_quartic_st(quartic_family((1, 1)), PLAIN)
    assert absolute_invariant(pair).value == gaussian("83/25", "-1113/50")
    assert real_form_obstruction(pair) == NO_REAL_FORM
    assert real_form_obstruction(binary_quartic_st(quartic_family(2), PLAIN)) == INCONCLUSIVE
    assert real_form_obstruction(binary_quartic_st(quartic_family((0, 1)), PLAIN)) == INCONCLUSIVE
    assert real_form_obstruction(binary_quartic_st(quartic_family(0), PLAIN)) == INCONCLUSIVE


def test_distinguish_family_members():
    f2, f3 = form_of("lambda82", t=scalar(2)), form_of("lambda82", t=scalar(3))
    assert distinguish_algebras(f2, f3) == DISTINCT
    assert distinguish_algebras(f2, f3, convention=PLAIN) == DISTINCT
    assert distinguish_algebras(f2, f2) == INCONCLUSIVE


def test_distinguish_is_scale_and_substitution_blind():
    f = form_of("lambda82", t=scalar(2))
    scaled = PfaffianForm(scale_poly(f.poly, 5), f.p, f.q)
    assert distinguish_algebras(f, scaled) == INCONCLUSIVE
    a = random_unimodular(random.Random(6), 2)
    moved = PfaffianForm(substitute_linear(f.poly, a), f.p, f.q)
    assert distinguish_algebras(f, moved) == INCONCLUSIVE


def test_distinguish_rejects_mixed_families():
    with pytest.raises(FamilyMismatch):
        distinguish_algebras(form_of("lambda82", t=scalar(2)), form_of("lambda63", t=scalar(1)))


def test_absolute_invariant_constant_on_presentation_changes():
    rng = random.Random(12)
    a = catalog_get("lambda82", t=scalar(2)).algebra
    reference = absolute_invariant(invariant_pair(pfaffian_form(two_step_presentation(a))))
    for _ in range(2):
        g = block_diag(random_invertible(rng, 8, bound=1), random_invertible(rng, 2))
        moved = pfaffian_form(two_step_presentation(act_gl(a, g)))
        assert absolute_invariant(invariant_pair(moved)) == reference
