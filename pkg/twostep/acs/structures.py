# twostep/acs/structures.py

"""
Almost complex structures J with J² = -I.
"""

from twostep.core.errors import DimensionMismatch, NotAlmostComplex
from twostep.core.matrices import MatrixExact
from twostep.core.scalars import ONE, ZERO


class AlmostComplexStructure:
    """An exact real matrix J on QQ_I^(2m) with J² = -I."""

    __slots__ = ("matrix",)

    def __init__(self, matrix):
        if not isinstance(matrix, MatrixExact):
            matrix = MatrixExact(matrix)
        if not matrix.is_square() or matrix.rows % 2:
            raise NotAlmostComplex(f"J must be square of even size, got {matrix.shape}")
        if not matrix.is_real():
            raise NotAlmostComplex("J must have rational entries")
        if matrix @ matrix != -MatrixExact.identity(matrix.rows):
            raise NotAlmostComplex("J² is not -I")
        self.matrix = matrix

    @classmethod
    def standard(cls, dim):
        """Interleaved rotation blocks: J e_2k = e_2k+1, J e_2k+1 = -e_2k."""
        if dim % 2:
            raise NotAlmostComplex(f"odd dimension {dim}")
        rows = [[ZERO] * dim for _ in range(dim)]
        for k in range(0, dim, 2):
            rows[k + 1][k] = ONE
            rows[k][k + 1] = -ONE
        return cls(MatrixExact(rows))

    @property
    def dim(self):
        return self.matrix.rows

    def apply(self, v):
        return self.matrix.apply(v)

    def images(self):
        """J X_k for every basis vector, as columns."""
        return self.matrix.columns()

    def negated(self):
        return AlmostComplexStructure(-self.matrix)

    def check_size(self, algebra):
        if self.dim != algebra.dim:
            raise DimensionMismatch(f"J of size {self.dim} on an algebra of dimension {algebra.dim}")

    def is_orthogonal_for(self, g):
        """J^T g J = g."""
        return self.matrix.transpose() @ g @ self.matrix == g

    def commutes_with(self, other):
        return self.matrix.commutes_with(other.matrix)

    def __eq__(self, other):
        if not isinstance(other, AlmostComplexStructure):
            return NotImplemented
        return self.matrix == other.matrix

    __hash__ = None

    def __repr__(self):
        return f"AlmostComplexStructure({self.matrix!r})"
