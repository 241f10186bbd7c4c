# twostep/lie/samples.py

"""
Seeded random exact data: brackets, 2-step algebras, invertible and
unimodular matrices. Used by property suites and by the catalog tests.
"""

from fractions import Fraction

from twostep.core.matrices import MatrixExact
from twostep.core.scalars import ZERO, gaussian, scalar
from twostep.lie.algebra import LieAlgebra


def random_rational(rng, bound=3):
    return scalar(Fraction(rng.randint(-bound, bound), rng.randint(1, 2)))


def random_gaussian(rng, bound=3):
    return gaussian(Fraction(rng.randint(-bound, bound), rng.randint(1, 2)),
                    Fraction(rng.randint(-bound, bound), rng.randint(1, 2)))


def random_skew_bracket(rng, n, density=0.5):
    """Skew bilinear map with random rational constants; Jacobi not imposed."""
    brackets = {}
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                brackets[(i, j)] = tuple(random_rational(rng) if rng.random() < density else ZERO
                                         for _ in range(n))
    return LieAlgebra(n, brackets)


def random_two_step(rng, p, q, density=0.6):
    """
    Random 2-step algebra on X1..Xp, Z1..Zq with [Xi, Xj] in span(Z) and
    [X1, X2] having a nonzero Z1 component.
    """
    n = p + q
    brackets = {}
    for i in range(p):
        for j in range(i + 1, p):
            coords = [ZERO] * n
            for k in range(q):
                if rng.random() < density:
                    coords[p + k] = random_rational(rng)
            if (i, j) == (0, 1) and not coords[p]:
                coords[p] = scalar(1)
            brackets[(i, j)] = tuple(coords)
    return LieAlgebra(n, brackets)


def random_invertible(rng, n, bound=2):
    while True:
        m = MatrixExact([[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)])
        if m.det():
            return m


def random_unimodular(rng, n, steps=None):
    """Integer matrix of determinant 1 as a product of elementary shears."""
    m = MatrixExact.identity(n)
    for _ in range(steps or 3 * n):
        i, j = rng.sample(range(n), 2)
        rows = [list(r) for r in MatrixExact.identity(n).entries]
        rows[i][j] = scalar(rng.choice([-2, -1, 1, 2]))
        m = m @ MatrixExact(rows)
    return m
