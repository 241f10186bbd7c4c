# twostep/invariants/ternary_cubic.py

"""
Aronhold invariants S (degree 4) and T (degree 6) of a ternary cubic.

The cubic is written f = Σ A_ijk x_i x_j x_k with A symmetric, so A_ijk is
the coefficient of the monomial divided by its multinomial count. S and T
are expanded once from their bracket symbols

    S = [abc][abd][acd][bcd]
    T = [abc][abd][ace][bcf][def]²

where [uvw] = det(u, v, w) and every symbolic letter u carries three
indices replaced by A at the end. The resulting integer polynomials in the
ten A's are scaled so that on the Hesse pencil a(x³+y³+z³) + 6b·xyz

    S = a³b - b⁴,    T = a⁶ - 20a³b³ - 8b⁶.
"""

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import factorial

from twostep.core.errors import FamilyMismatch
from twostep.core.polys import coefficient, from_terms, is_homogeneous, num_vars, total_degree
from twostep.core.scalars import ZERO, scalar
from twostep.invariants.pair import BINOMIAL, InvariantPair
from twostep.invariants.pfaffian_form import TERNARY_CUBIC

MONOMIALS = tuple(sorted(((i, j, 3 - i - j) for i in range(4) for j in range(4 - i)), reverse=True))
_POSITION = {e: k for k, e in enumerate(MONOMIALS)}
_XYZ = _POSITION[(1, 1, 1)]

S_SYMBOL = ("abc", "abd", "acd", "bcd")
T_SYMBOL = ("abc", "abd", "ace", "bcf", "def", "def")

# value on 6xyz, i.e. A_012 = 1 and every other A zero
_S_ON_XYZ = -1
_T_ON_XYZ = -8
_SIX = scalar(6)


def _signed_permutations():
    out = []
    for perm in permutations(range(3)):
        inversions = sum(1 for i in range(3) for j in range(i + 1, 3) if perm[i] > perm[j])
        out.append((perm, -1 if inversions % 2 else 1))
    return tuple(out)


_PERMS = _signed_permutations()


def _multinomial(exps):
    return factorial(3) // (factorial(exps[0]) * factorial(exps[1]) * factorial(exps[2]))


@lru_cache(maxsize=None)
def expand_symbol(symbol):
    """Bracket symbol as {exponents over MONOMIALS: integer coefficient}."""
    letters = sorted(set("".join(symbol)))
    terms = defaultdict(int)
    for choice in product(_PERMS, repeat=len(symbol)):
        slots = {letter: [0, 0, 0] for letter in letters}
        sign = 1
        for word, (perm, s) in zip(symbol, choice):
            sign *= s
            for letter, index in zip(word, perm):
                slots[letter][index] += 1
        exps = [0] * len(MONOMIALS)
        for counts in slots.values():
            exps[_POSITION[tuple(counts)]] += 1
        terms[tuple(exps)] += sign
    return {e: c for e, c in terms.items() if c}


@lru_cache(maxsize=None)
def _calibrated(symbol, target):
    terms = expand_symbol(symbol)
    degree = len(set("".join(symbol)))
    on_xyz = terms.get(tuple(degree if k == _XYZ else 0 for k in range(len(MONOMIALS))), 0)
    if not on_xyz:
        raise ArithmeticError(f"bracket symbol {symbol} vanishes on xyz")
    factor = Fraction(target, on_xyz)
    return tuple((e, scalar(c * factor)) for e, c in sorted(terms.items()))


def _evaluate(terms, values):
    total = ZERO
    for exps, c in terms:
        term = c
        for k, e in enumerate(exps):
            if e:
                term = term * values[k] ** e
        total = total + term
    return total


def normalized_coefficients(f):
    """The ten A's of a ternary cubic, in MONOMIALS order."""
    if num_vars(f) != 3:
        raise FamilyMismatch(f"ternary cubic expected, got {num_vars(f)} variables")
    if f and (not is_homogeneous(f) or total_degree(f) != 3):
        raise FamilyMismatch("ternary cubic must be homogeneous of degree 3")
    return tuple(coefficient(f, e) / scalar(_multinomial(e)) for e in MONOMIALS)


def aronhold_s(values):
    return _evaluate(_calibrated(S_SYMBOL, _S_ON_XYZ), values)


def aronhold_t(values):
    return _evaluate(_calibrated(T_SYMBOL, _T_ON_XYZ), values)


def ternary_cubic_st(f):
    values = normalized_coefficients(f)
    return InvariantPair(aronhold_s(values), aronhold_t(values), BINOMIAL, TERNARY_CUBIC)


def hesse_cubic(a, b):
    """a(x³ + y³ + z³) + 6b·xyz as a polynomial in z1, z2, z3."""
    a = scalar(a)
    return from_terms(3, {(3, 0, 0): a, (0, 3, 0): a, (0, 0, 3): a, (1, 1, 1): _SIX * scalar(b)})
