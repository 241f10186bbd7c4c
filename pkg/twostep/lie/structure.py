# twostep/lie/structure.py

"""
Structural subspaces of a Lie algebra: lower central series, center,
derived subalgebra and the derivation algebra.
"""

from twostep.core.matrices import MatrixExact, Subspace, mat_kernel, unit_vector
from twostep.core.scalars import ZERO
from twostep.core.utils import get_logger

logger = get_logger("twostep.lie")


def derived_subalgebra(a):
    """Span of all [X_i, X_j]."""
    return Subspace.span(a.dim, [value for _, value in a.constants()])


def bracket_with_subspace(a, subspace):
    """[g, S] for a subspace S."""
    n = a.dim
    images = [a.bracket_vec(unit_vector(n, i), v) for v in subspace.vectors for i in range(n)]
    return Subspace.span(n, images)


def lower_central_series(a):
    """
    [g, g^(k)] iterated from g, ending with the zero subspace or with the
    first term equal in dimension to its predecessor (non-nilpotent).
    """
    series = [Subspace.whole(a.dim)]
    while not series[-1].is_zero():
        nxt = bracket_with_subspace(a, series[-1])
        if nxt.dim == series[-1].dim:
            logger.debug("lower central series stabilizes at dimension %d", nxt.dim)
            break
        series.append(nxt)
    return series


def series_dims(a):
    return tuple(s.dim for s in lower_central_series(a))


def is_nilpotent(a):
    return lower_central_series(a)[-1].is_zero()


def nilpotency_step(a):
    """Number of nonzero terms of the series after g itself; None if not nilpotent."""
    series = lower_central_series(a)
    if not series[-1].is_zero():
        return None
    return len(series) - 1


def is_two_step(a):
    """Nonzero bracket and [g, [g, g]] = 0."""
    return nilpotency_step(a) == 2


def center(a):
    """Kernel of X -> ad(X): rows indexed by (j, k), columns by i."""
    n = a.dim
    if a.is_abelian():
        return Subspace.whole(n)
    t = a.tensor
    rows = []
    for j in range(n):
        for k in range(n):
            row = [t[i][j][k] for i in range(n)]
            if any(row):
                rows.append(row)
    return mat_kernel(MatrixExact(rows, (len(rows), n)))


def derivation_equations(a):
    """
    Coefficient rows of D[X_i,X_j] - [DX_i,X_j] - [X_i,DX_j] = 0 for i < j,
    in the unknowns D[r][s] flattened as r*n + s.
    """
    n = a.dim
    t = a.tensor
    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            cij = t[i][j]
            for k in range(n):
                row = [ZERO] * (n * n)
                for m in range(n):
                    if cij[m]:
                        row[k * n + m] += cij[m]
                for r in range(n):
                    crj = t[r][j][k]
                    if crj:
                        row[r * n + i] -= crj
                    cir = t[i][r][k]
                    if cir:
                        row[r * n + j] -= cir
                if any(row):
                    rows.append(row)
    return rows


def derivation_space(a):
    """Der(g) as a subspace of End(g) = QQ_I^(n*n), row-major coordinates."""
    n = a.dim
    rows = derivation_equations(a)
    if not rows:
        return Subspace.whole(n * n)
    space = mat_kernel(MatrixExact(rows, (len(rows), n * n)))
    logger.debug("derivation algebra of dimension %d", space.dim)
    return space


def flat_to_matrix(v, n):
    return MatrixExact([v[r * n:(r + 1) * n] for r in range(n)], (n, n))


def matrix_to_flat(m):
    return tuple(x for row in m.entries for x in row)


def derivation_basis(a):
    return [flat_to_matrix(v, a.dim) for v in derivation_space(a).vectors]


def is_derivation(a, d):
    n = a.dim
    t = a.tensor
    columns = d.columns()
    for i in range(n):
        for j in range(i + 1, n):
            lhs = d.apply(t[i][j])
            rhs1 = a.bracket_vec(columns[i], unit_vector(n, j))
            rhs2 = a.bracket_vec(unit_vector(n, i), columns[j])
            if any(x - y - z for x, y, z in zip(lhs, rhs1, rhs2)):
                return False
    return True
