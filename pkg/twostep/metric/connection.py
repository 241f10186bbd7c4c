# twostep/metric/connection.py

"""
Levi-Civita connection of a left-invariant metric, from the Koszul formula

    2⟨∇_X Y, Z⟩ = ⟨[X,Y],Z⟩ - ⟨[Y,Z],X⟩ + ⟨[Z,X],Y⟩.
"""

from twostep.core.matrices import (
    MatrixExact,
    unit_vector,
    vec_add,
    vec_scale,
    vec_sub,
    zero_vector,
)
from twostep.core.scalars import HALF, I_UNIT
from twostep.core.utils import get_logger
from twostep.metric.inner_product import as_inner_product

logger = get_logger("twostep.metric")


def lowered_brackets(a, ip):
    """CG[a][b][d] = ⟨[X_a, X_b], X_d⟩."""
    n = a.dim
    g = ip.matrix
    t = a.tensor
    return [[g.apply(t[i][j]) if any(t[i][j]) else zero_vector(n) for j in range(n)]
            for i in range(n)]


def _require_real(a):
    if not a.is_rational():
        raise ValueError("metric computations need rational structure constants")


class Connection:
    """
    ∇ on basis fields: operators[a] is the matrix L_a with L_a X_b = ∇_{X_a} X_b
    in its column b.
    """

    __slots__ = ("algebra", "ip", "operators")

    def __init__(self, algebra, ip, operators):
        self.algebra = algebra
        self.ip = ip
        self.operators = tuple(operators)

    def basis_derivative(self, i, j):
        return self.operators[i].column(j)

    def derivative(self, u, v):
        """∇_u v for coordinate vectors, complex-bilinear on QQ_I vectors."""
        n = self.algebra.dim
        op = MatrixExact.zeros(n)
        for i, c in enumerate(u):
            if c:
                op = op + self.operators[i].scale(c)
        return op.apply(v)

    def torsion_defects(self):
        """Basis pairs with ∇_a b - ∇_b a ≠ [a, b]."""
        n = self.algebra.dim
        bad = []
        for i in range(n):
            for j in range(i + 1, n):
                diff = vec_sub(self.basis_derivative(i, j), self.basis_derivative(j, i))
                if diff != self.algebra.bracket(i, j):
                    bad.append((i, j))
        return bad

    def compatibility_defects(self):
        """Triples with ⟨∇_a b, c⟩ + ⟨b, ∇_a c⟩ ≠ 0."""
        n = self.algebra.dim
        g = self.ip.matrix
        bad = []
        for i in range(n):
            lowered = g @ self.operators[i]
            for j in range(n):
                for k in range(n):
                    if lowered[k, j] + lowered[j, k]:
                        bad.append((i, j, k))
        return bad


def levi_civita(a, ip):
    ip = as_inner_product(ip)
    ip.check_size(a)
    _require_real(a)
    n = a.dim
    cg = lowered_brackets(a, ip)
    h = ip.inverse
    operators = []
    for i in range(n):
        columns = []
        for j in range(n):
            koszul = tuple(HALF * (cg[i][j][d] - cg[j][d][i] + cg[d][i][j]) for d in range(n))
            columns.append(h.apply(koszul) if any(koszul) else zero_vector(n))
        operators.append(MatrixExact.from_columns(columns, n))
    logger.debug("Levi-Civita connection on dimension %d", n)
    return Connection(a, ip, operators)


def holomorphic_frame(j):
    """Z_a = X_a - iJX_a for every basis vector, as QQ_I coordinates."""
    n = j.dim
    images = j.images()
    return [vec_sub(unit_vector(n, k), vec_scale(I_UNIT, images[k])) for k in range(n)]


def antiholomorphic_frame(j):
    """Z̄_a = X_a + iJX_a."""
    n = j.dim
    images = j.images()
    return [vec_add(unit_vector(n, k), vec_scale(I_UNIT, images[k])) for k in range(n)]
