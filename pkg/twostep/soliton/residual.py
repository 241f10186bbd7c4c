# twostep/soliton/residual.py

"""
Float view of a nilpotent algebra and the scale-invariant soliton residual.

A metric g = LᵀL (L upper triangular) is handled in the g-orthonormal frame
L⁻¹e_i, where the bracket becomes μ_L = L·μ(L⁻¹·, L⁻¹·) and the metric is the
identity. There

    Ric_L = -1/2 Σ C[x,i,k] C[y,i,k] + 1/4 Σ C[i,j,x] C[i,j,y]

and the residual is the Frobenius distance from Ric_L to span{I} + L·Der·L⁻¹,
divided by |Ric_L|.
"""

import numpy as np

from twostep.core.errors import NotNilpotent, NotPositiveDefinite
from twostep.core.scalars import to_float
from twostep.lie.structure import derivation_basis, is_nilpotent

EIGEN_FLOOR = 1e-10
RESIDUAL_EPS = 1e-300


class FloatAlgebra:
    """Structure constants and a derivation basis as float arrays."""

    def __init__(self, algebra):
        if not algebra.is_rational():
            raise ValueError("the soliton search needs rational structure constants")
        if not is_nilpotent(algebra):
            raise NotNilpotent("soliton search is defined for nilpotent algebras")
        n = algebra.dim
        self.dim = n
        self.algebra = algebra
        consts = np.zeros((n, n, n))
        for (i, j), value in algebra.constants():
            row = np.array([to_float(c) for c in value])
            consts[i, j] = row
            consts[j, i] = -row
        self.consts = consts
        derivations = [[[to_float(d[r, s]) for s in range(n)] for r in range(n)]
                       for d in derivation_basis(algebra)]
        self.derivations = np.array(derivations, dtype=float).reshape(len(derivations), n, n)

    def frame_constants(self, l_factor, l_inv=None):
        """C_L[i,j,k] for the frame L⁻¹e_i."""
        if l_inv is None:
            l_inv = np.linalg.inv(l_factor)
        return self.frame_constants_many(l_factor[None], l_inv[None])[0]

    def frame_constants_many(self, l_factors, l_invs):
        """frame_constants over a stack of factors, shape (m, n, n)."""
        return np.einsum("sbi,bcm,scj,skm->sijk", l_invs, self.consts, l_invs, l_factors,
                         optimize=True)

    def frame_ricci(self, l_factor, l_inv=None):
        if l_inv is None:
            l_inv = np.linalg.inv(l_factor)
        return self.frame_ricci_many(l_factor[None], l_inv[None])[0]

    def frame_ricci_many(self, l_factors, l_invs):
        c = self.frame_constants_many(l_factors, l_invs)
        return (-0.5 * np.einsum("sxik,syik->sxy", c, c)
                + 0.25 * np.einsum("sijx,sijy->sxy", c, c))

    def residual_at(self, l_factor):
        return float(self.residuals_at(l_factor[None])[0])

    def residuals_at(self, l_factors):
        """Residuals for a stack of factors; raises LinAlgError on a singular one."""
        l_factors = np.asarray(l_factors, dtype=float)
        m, n = l_factors.shape[0], self.dim
        l_invs = np.linalg.inv(l_factors)
        ric = self.frame_ricci_many(l_factors, l_invs).reshape(m, n * n)
        norms = np.linalg.norm(ric, axis=1)

        columns = np.broadcast_to(np.eye(n).ravel(), (m, n * n))[:, :, None]
        if self.derivations.shape[0]:
            moved = np.einsum("sab,qbc,scd->sqad", l_factors, self.derivations, l_invs,
                              optimize=True)
            columns = np.concatenate([columns, moved.reshape(m, -1, n * n).transpose(0, 2, 1)],
                                     axis=2)
        projected = columns @ (np.linalg.pinv(columns) @ ric[:, :, None])
        distance = np.linalg.norm(ric - projected[:, :, 0], axis=1)
        small = norms < RESIDUAL_EPS
        return np.where(small, 0.0, distance / np.where(small, 1.0, norms))

    def ricci_operator(self, g):
        """Ric of the metric g as an operator on the coordinate basis."""
        l_factor = cholesky_factor(g)
        l_inv = np.linalg.inv(l_factor)
        return l_inv @ self.frame_ricci(l_factor, l_inv) @ l_factor


def cholesky_factor(g):
    """Upper triangular L with g = LᵀL."""
    g = np.asarray(g, dtype=float)
    if g.shape[0] != g.shape[1] or not np.allclose(g, g.T):
        raise NotPositiveDefinite("metric must be a symmetric matrix")
    if np.linalg.eigvalsh(g).min() <= EIGEN_FLOOR:
        raise NotPositiveDefinite("metric is degenerate or not positive definite")
    return np.linalg.cholesky(g).T


def soliton_residual(a, g):
    """
    |Ric - P(Ric)| / |Ric| for the metric g (array-like), P the projection
    onto span{I} + Der; 0 when Ric vanishes.
    """
    view = a if isinstance(a, FloatAlgebra) else FloatAlgebra(a)
    return view.residual_at(cholesky_factor(g))
