# twostep/core/polys.py

"""
Sparse multivariate polynomials over the Gaussian rationals.

Polynomials are sympy PolyElement values from a ring in variables
z1..zq, cached per variable count. A PolyElement is a dict from exponent
tuples to nonzero QQ_I coefficients, which is exactly the MultiPoly shape.
"""

from functools import lru_cache

from sympy.polys.domains import QQ_I
from sympy.polys.rings import ring

from twostep.core.errors import DimensionMismatch, NotSkewError, OddDimensionError
from twostep.core.scalars import ONE, ZERO, format_scalar, scalar


@lru_cache(maxsize=None)
def poly_ring(num_vars):
    """Polynomial ring QQ_I[z1..zq]."""
    if num_vars < 1:
        raise ValueError("a polynomial ring needs at least one variable")
    names = [f"z{k + 1}" for k in range(num_vars)]
    return ring(names, QQ_I)[0]


def variables(num_vars):
    return tuple(poly_ring(num_vars).gens)


def monomial(num_vars, index):
    exps = [0] * num_vars
    exps[index] = 1
    return tuple(exps)


def from_terms(num_vars, terms):
    """Build a polynomial from {exponent tuple: scalar}."""
    R = poly_ring(num_vars)
    clean = {}
    for exps, coeff in terms.items():
        if len(exps) != num_vars:
            raise DimensionMismatch(f"exponent {exps} for {num_vars} variables")
        c = scalar(coeff)
        if c:
            clean[tuple(exps)] = c
    return R.from_dict(clean) if clean else R.zero


def linear_form(coeffs):
    """Sum of c_k * z_k."""
    q = len(coeffs)
    return from_terms(q, {monomial(q, k): c for k, c in enumerate(coeffs)})


def num_vars(f):
    return f.ring.ngens


def coefficient(f, exps):
    return f.get(tuple(exps), ZERO)


def total_degree(f):
    """Largest total degree of a term; -1 for the zero polynomial."""
    if not f:
        return -1
    return max(sum(m) for m in f.keys())


def is_homogeneous(f):
    return len({sum(m) for m in f.keys()}) <= 1


def scale_poly(f, c):
    return f * f.ring.ground_new(scalar(c))


def substitute_linear(f, a):
    """f ∘ a, with x_i replaced by Σ_j a[i][j] x_j."""
    n = num_vars(f)
    if a.shape != (n, n):
        raise DimensionMismatch(f"substitution matrix {a.shape} for {n} variables")
    R = f.ring
    images = [linear_form(a.row(i)) for i in range(n)]
    out = R.zero
    for exps, coeff in f.terms():
        term = R.ground_new(coeff)
        for i, e in enumerate(exps):
            if e:
                term = term * images[i] ** e
        out = out + term
    return out


def proportionality_factor(f, g):
    """Scalar c with f = c·g, or None when f and g are not proportional."""
    if not g:
        return None if f else ZERO
    if set(f.keys()) != set(g.keys()):
        return None
    lead = next(iter(sorted(g.keys(), reverse=True)))
    c = f[lead] / g[lead]
    for exps, coeff in g.items():
        if f[exps] != c * coeff:
            return None
    return c


def format_poly(f):
    """Deterministic text form, terms in descending lexicographic order."""
    if not f:
        return "0"
    names = [str(s) for s in f.ring.symbols]
    parts = []
    for exps in sorted(f.keys(), reverse=True):
        coeff = f[exps]
        factors = []
        for name, e in zip(names, exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        text = format_scalar(coeff)
        if coeff.x and coeff.y:
            text = f"({text})"
        if not factors:
            parts.append(text)
        elif coeff == ONE:
            parts.append("*".join(factors))
        else:
            parts.append(f"{text}*" + "*".join(factors))
    return " + ".join(parts)


# ----------------------------------------
# Pfaffians
# ----------------------------------------

def pfaffian(m, zero, one, is_zero=None):
    """
    Pfaffian of a skew matrix given as a list of rows, by recursive
    first-row expansion Pf(A) = Σ_{j≥1} (-1)^(j+1) a_0j Pf(A_0j), 0-based.

    Entries may be any ring elements supporting +, -, *; `zero` and `one`
    are that ring's identities. Sub-Pfaffians are memoized on the tuple of
    remaining indices.
    """
    n = len(m)
    if n % 2:
        raise OddDimensionError(f"Pfaffian of odd dimension {n}")
    if is_zero is None:
        def is_zero(x):
            return not x

    cache = {}

    def pf(indices):
        if not indices:
            return one
        if indices in cache:
            return cache[indices]
        first, rest = indices[0], indices[1:]
        total = zero
        for pos, j in enumerate(rest):
            entry = m[first][j]
            if is_zero(entry):
                continue
            remaining = rest[:pos] + rest[pos + 1:]
            term = entry * pf(remaining)
            total = total + term if pos % 2 == 0 else total - term
        cache[indices] = total
        return total

    return pf(tuple(range(n)))


def check_skew(m):
    n = len(m)
    for row in m:
        if len(row) != n:
            raise DimensionMismatch("Pfaffian input must be square")
    for i in range(n):
        if m[i][i]:
            raise NotSkewError(f"nonzero diagonal entry at {i}")
        for j in range(i + 1, n):
            if m[i][j] != -m[j][i]:
                raise NotSkewError(f"entries ({i},{j}) and ({j},{i}) are not opposite")


def poly_pfaffian(m):
    """Pfaffian of a skew matrix of polynomials (all from one ring)."""
    check_skew(m)
    n = len(m)
    if n % 2:
        raise OddDimensionError(f"Pfaffian of odd dimension {n}")
    if n == 0:
        raise DimensionMismatch("Pfaffian of an empty matrix needs a ring")
    R = m[0][1].ring if n > 1 else None
    return pfaffian(m, R.zero, R.one)


def scalar_pfaffian(m):
    """Pfaffian of a skew MatrixExact."""
    rows = [list(r) for r in m.entries]
    check_skew(rows)
    return pfaffian(rows, ZERO, ONE)
