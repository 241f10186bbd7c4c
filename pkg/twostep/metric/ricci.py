# twostep/metric/ricci.py

"""
Ricci operator of a left-invariant metric on a nilpotent algebra.

For an orthonormal basis (X_i)

    ⟨Ric X, Y⟩ = -1/2 Σ ⟨[X,X_i],X_j⟩⟨[Y,X_i],X_j⟩ + 1/4 Σ ⟨[X_i,X_j],X⟩⟨[X_i,X_j],Y⟩.

ricci() evaluates the same sums with Σ X_i ⊗ X_i = Σ H_pq X_p ⊗ X_q,
H = g⁻¹, so no square roots are needed. ricci_orthonormal() evaluates the
formula literally on a given orthonormal basis.
"""

from twostep.core.errors import DimensionMismatch, NotNilpotent
from twostep.core.matrices import MatrixExact
from twostep.core.scalars import HALF, QUARTER, ZERO
from twostep.lie.structure import is_nilpotent
from twostep.metric.connection import lowered_brackets
from twostep.metric.inner_product import as_inner_product


def ricci_form(a, ip):
    """Symmetric bilinear form ric[a][b] = ⟨Ric X_a, X_b⟩."""
    ip = as_inner_product(ip)
    ip.check_size(a)
    if not a.is_rational():
        raise ValueError("metric computations need rational structure constants")
    if not is_nilpotent(a):
        raise NotNilpotent("the Ricci formula used here holds for nilpotent algebras only")
    n = a.dim
    t = a.tensor
    cg = lowered_brackets(a, ip)
    h = ip.inverse

    # y[b][p][c] = Σ_q H_pq CG[b][q][c]
    y = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for b in range(n):
        for q in range(n):
            row = cg[b][q]
            if not any(row):
                continue
            for p in range(n):
                hpq = h[p, q]
                if not hpq:
                    continue
                target = y[b][p]
                for c in range(n):
                    if row[c]:
                        target[c] += hpq * row[c]

    # u[r][s][a] = Σ_{p,q} H_pr H_qs CG[p][q][a]
    v = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for p in range(n):
        for q in range(n):
            row = cg[p][q]
            if not any(row):
                continue
            for r in range(n):
                hpr = h[p, r]
                if not hpr:
                    continue
                target = v[r][q]
                for c in range(n):
                    if row[c]:
                        target[c] += hpr * row[c]
    u = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for r in range(n):
        for q in range(n):
            row = v[r][q]
            if not any(row):
                continue
            for s in range(n):
                hqs = h[q, s]
                if not hqs:
                    continue
                target = u[r][s]
                for c in range(n):
                    if row[c]:
                        target[c] += hqs * row[c]

    form = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for k in range(n):
            first = ZERO
            for p in range(n):
                bracket = t[i][p]
                if not any(bracket):
                    continue
                yk = y[k][p]
                for c in range(n):
                    if bracket[c] and yk[c]:
                        first += bracket[c] * yk[c]
            second = ZERO
            for r in range(n):
                for s in range(n):
                    ur = u[r][s]
                    low = cg[r][s]
                    if ur[i] and low[k]:
                        second += ur[i] * low[k]
            form[i][k] = QUARTER * second - HALF * first
    return MatrixExact(form)


def ricci(a, ip):
    """Ricci operator Ric with ⟨Ric X, Y⟩ = ric(X, Y); column b is Ric X_b."""
    ip = as_inner_product(ip)
    return ip.inverse @ ricci_form(a, ip)


def ricci_orthonormal(a, ip, basis):
    """Ric evaluated term by term on an ip-orthonormal basis given as vectors."""
    ip = as_inner_product(ip)
    n = a.dim
    if len(basis) != n:
        raise DimensionMismatch(f"orthonormal basis of {len(basis)} vectors in dimension {n}")
    frame = MatrixExact.from_columns(basis, n)
    if frame.transpose() @ ip.matrix @ frame != MatrixExact.identity(n):
        raise ValueError("basis is not orthonormal")
    brackets = [[a.bracket_vec(u, w) for w in basis] for u in basis]
    coords = [[[ip.inner(brackets[i][k], basis[m]) for m in range(n)] for k in range(n)]
              for i in range(n)]
    on = [[ZERO] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            first = ZERO
            second = ZERO
            for i in range(n):
                for k in range(n):
                    first += coords[x][i][k] * coords[y][i][k]
                    second += coords[i][k][x] * coords[i][k][y]
            on[y][x] = QUARTER * second - HALF * first
    return frame @ MatrixExact(on) @ frame.inverse()


def ricci_one_one(a, ip, j):
    """Ric^J = 1/2 (Ric - J Ric J)."""
    ric = ricci(a, ip)
    return (ric - j.matrix @ ric @ j.matrix).scale(HALF)


def scalar_curvature(a, ip):
    return ricci(a, ip).trace()


def einstein_check(a, ip):
    """(True, c) when Ric = cI, else (False, None)."""
    ric = ricci(a, ip)
    n = a.dim
    c = ric[0, 0] if n else ZERO
    if ric == MatrixExact.identity(n).scale(c):
        return True, c
    return False, None
