# twostep/metric/gray.py

"""
Riemann curvature of a left-invariant metric and the Gray identities.

Convention: R(X,Y) = ∇_X∇_Y - ∇_Y∇_X - ∇_[X,Y] and
R(X,Y,Z,W) = ⟨R(X,Y)Z, W⟩. The real forms checked are

    G1:  R(JX,JY,Z,W) = R(X,Y,Z,W)
    G2:  R(X,Y,Z,W) - R(JX,JY,Z,W) = R(JX,Y,JZ,W) + R(JX,Y,Z,JW)
    G3:  R(JX,JY,JZ,JW) = R(X,Y,Z,W)
"""

from itertools import product

from twostep.core.errors import DimensionMismatch
from twostep.core.matrices import MatrixExact
from twostep.core.scalars import ZERO
from twostep.core.utils import get_logger
from twostep.metric.connection import levi_civita

logger = get_logger("twostep.metric")

IDENTITIES = ("G1", "G2", "G3")


class CurvatureTensor:
    """
    operators[a][b] is the matrix of R(X_a, X_b); components[a][b][c][d]
    is R(a, b, c, d) = ⟨R(X_a, X_b) X_c, X_d⟩.
    """

    __slots__ = ("dim", "operators", "components")

    def __init__(self, operators, g):
        self.dim = g.rows
        self.operators = operators
        n = self.dim
        comps = []
        for i in range(n):
            row = []
            for j in range(n):
                lowered = g @ operators[i][j]
                row.append([[lowered[d, c] for d in range(n)] for c in range(n)])
            comps.append(row)
        self.components = comps

    def __call__(self, a, b, c, d):
        return self.components[a][b][c][d]

    def value(self, x, y, z, w):
        """R(x, y, z, w) for coordinate vectors, multilinear."""
        n = self.dim
        total = ZERO
        for a, b, c, d in product(range(n), repeat=4):
            r = self.components[a][b][c][d]
            if r and x[a] and y[b] and z[c] and w[d]:
                total += x[a] * y[b] * z[c] * w[d] * r
        return total

    def apply(self, x, y, z):
        """R(x, y) z for coordinate vectors, complex-multilinear."""
        n = self.dim
        op = MatrixExact.zeros(n)
        for a in range(n):
            for b in range(n):
                if x[a] and y[b]:
                    op = op + self.operators[a][b].scale(x[a] * y[b])
        return op.apply(z)

    def is_zero(self):
        return not any(self.components[a][b][c][d]
                       for a, b, c, d in product(range(self.dim), repeat=4))

    def symmetry_defects(self):
        """First tuple violating antisymmetry, pair symmetry or first Bianchi, or None."""
        n = self.dim
        r = self.components
        for a, b, c, d in product(range(n), repeat=4):
            if r[a][b][c][d] + r[b][a][c][d]:
                return ("antisymmetry-ab", (a, b, c, d))
            if r[a][b][c][d] + r[a][b][d][c]:
                return ("antisymmetry-cd", (a, b, c, d))
            if r[a][b][c][d] != r[c][d][a][b]:
                return ("pair-symmetry", (a, b, c, d))
            if r[a][b][c][d] + r[b][c][a][d] + r[c][a][b][d]:
                return ("bianchi", (a, b, c, d))
        return None

    def sectional(self, ip, u, v):
        """K(u, v) = R(u, v, v, u) / (|u|²|v|² - ⟨u,v⟩²)."""
        area = ip.inner(u, u) * ip.inner(v, v) - ip.inner(u, v) ** 2
        if not area:
            raise ValueError("sectional curvature of a degenerate plane")
        return self.value(u, v, v, u) / area


def curvature(a, ip):
    nabla = levi_civita(a, ip)
    n = a.dim
    ops = nabla.operators
    t = a.tensor
    operators = []
    for i in range(n):
        row = []
        for j in range(n):
            r = ops[i] @ ops[j] - ops[j] @ ops[i]
            for k, c in enumerate(t[i][j]):
                if c:
                    r = r - ops[k].scale(c)
            row.append(r)
        operators.append(row)
    logger.debug("curvature tensor on dimension %d", n)
    return CurvatureTensor(operators, nabla.ip.matrix)


def _with_j(r, j, slots):
    """Components of R with J applied in the given argument slots."""
    n = r.dim
    jm = j.matrix
    comps = r.components
    for slot in slots:
        out = [[[[ZERO] * n for _ in range(n)] for _ in range(n)] for _ in range(n)]
        for idx in product(range(n), repeat=4):
            k = idx[slot]
            total = ZERO
            for m in range(n):
                coeff = jm[m, k]
                if not coeff:
                    continue
                src = list(idx)
                src[slot] = m
                value = comps[src[0]][src[1]][src[2]][src[3]]
                if value:
                    total += coeff * value
            out[idx[0]][idx[1]][idx[2]][idx[3]] = total
        comps = out
    return comps


def gray_check(r, j, which):
    """(holds, first violating basis 4-tuple or None) for G1, G2 or G3."""
    if which not in IDENTITIES:
        raise ValueError(f"unknown Gray identity {which!r}")
    if j.dim != r.dim:
        raise DimensionMismatch(f"J of size {j.dim} for a curvature tensor of dimension {r.dim}")
    base = r.components
    n = r.dim
    jj = _with_j(r, j, (0, 1))
    if which == "G1":
        def residual(a, b, c, d):
            return jj[a][b][c][d] - base[a][b][c][d]
    elif which == "G2":
        j02 = _with_j(r, j, (0, 2))
        j03 = _with_j(r, j, (0, 3))

        def residual(a, b, c, d):
            return (base[a][b][c][d] - jj[a][b][c][d]
                    - j02[a][b][c][d] - j03[a][b][c][d])
    else:
        jjjj = _with_j(r, j, (0, 1, 2, 3))

        def residual(a, b, c, d):
            return jjjj[a][b][c][d] - base[a][b][c][d]

    for idx in product(range(n), repeat=4):
        if residual(*idx):
            return False, idx
    return True, None
