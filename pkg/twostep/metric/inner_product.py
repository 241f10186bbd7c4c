# twostep/metric/inner_product.py

"""
Left-invariant inner products as exact Gram matrices on the basis.
"""

from twostep.core.errors import DimensionMismatch, NotPositiveDefinite
from twostep.core.matrices import MatrixExact, vec_scale, vec_sub
from twostep.core.scalars import conj, scalar
from twostep.lie.samples import random_invertible


class InnerProduct:
    """
    Symmetric positive definite rational Gram matrix g, with
    g[a, b] = ⟨X_a, X_b⟩. Positivity is checked on the leading minors.
    """

    __slots__ = ("matrix", "_inverse")

    def __init__(self, matrix):
        if not isinstance(matrix, MatrixExact):
            matrix = MatrixExact(matrix)
        if not matrix.is_square():
            raise DimensionMismatch(f"inner product matrix must be square, got {matrix.shape}")
        if not matrix.is_real():
            raise NotPositiveDefinite("inner product must have rational entries")
        if not matrix.is_symmetric():
            raise NotPositiveDefinite("inner product matrix is not symmetric")
        for k, minor in enumerate(matrix.leading_minors(), start=1):
            if not minor.x > 0:
                raise NotPositiveDefinite(f"leading minor of order {k} is not positive")
        self.matrix = matrix
        self._inverse = None

    @classmethod
    def identity(cls, n):
        return cls(MatrixExact.identity(n))

    @classmethod
    def diag(cls, values):
        return cls(MatrixExact.diag(values))

    @property
    def dim(self):
        return self.matrix.rows

    @property
    def inverse(self):
        if self._inverse is None:
            self._inverse = self.matrix.inverse()
        return self._inverse

    def check_size(self, algebra):
        if self.dim != algebra.dim:
            raise DimensionMismatch(f"inner product of size {self.dim} on dimension {algebra.dim}")

    def inner(self, u, v):
        """Bilinear ⟨u, v⟩, extended complex-bilinearly to QQ_I vectors."""
        gv = self.matrix.apply(v)
        total = scalar(0)
        for x, y in zip(u, gv):
            if x and y:
                total += x * y
        return total

    def hermitian(self, u, v):
        """h(u, v) = ⟨u, conj(v)⟩."""
        return self.inner(u, tuple(conj(x) for x in v))

    def norm_squared(self, u):
        return self.inner(u, u)

    def orthogonal_basis(self, vectors=None):
        """
        Gram-Schmidt without normalization; returns (basis, squared norms).
        Defaults to the coordinate basis.
        """
        if vectors is None:
            vectors = MatrixExact.identity(self.dim).columns()
        basis, norms = [], []
        for v in vectors:
            w = v
            for b, nb in zip(basis, norms):
                w = vec_sub(w, vec_scale(self.inner(v, b) / nb, b))
            basis.append(w)
            norms.append(self.inner(w, w))
        return basis, norms

    def is_orthogonal_map(self, m):
        """mᵀ g m = g."""
        return m.transpose() @ self.matrix @ m == self.matrix

    def __eq__(self, other):
        if not isinstance(other, InnerProduct):
            return NotImplemented
        return self.matrix == other.matrix

    __hash__ = None

    def __repr__(self):
        return f"InnerProduct({self.matrix!r})"


def as_inner_product(ip):
    if isinstance(ip, InnerProduct):
        return ip
    return InnerProduct(ip)


def random_metric(rng, n, bound=2):
    """MᵀM for a random invertible integer M."""
    m = random_invertible(rng, n, bound)
    return InnerProduct(m.transpose() @ m)


def random_hermitian_metric(rng, j, bound=2):
    """g0 + Jᵀ g0 J for a random g0, so that J is orthogonal."""
    g0 = random_metric(rng, j.dim, bound).matrix
    return InnerProduct(g0 + j.matrix.transpose() @ g0 @ j.matrix)
