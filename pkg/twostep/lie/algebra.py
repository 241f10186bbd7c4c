# twostep/lie/algebra.py

"""
Lie algebras as structure-constant tensors.

A LieAlgebra stores [X_i, X_j] for i < j only; [X_j, X_i] is read off by
sign, so antisymmetry cannot be violated. The constructor does not check
the Jacobi identity: skew bilinear maps that are not Lie brackets are
legitimate inputs to the bracket decomposition. Use validate_lie to obtain
a checked algebra.
"""

from twostep.core.errors import DimensionMismatch, JacobiViolation
from twostep.core.matrices import (
    MatrixExact,
    is_zero_vector,
    lincomb,
    unit_vector,
    vec_add,
    vec_neg,
    vector,
    zero_vector,
)
from twostep.core.scalars import ZERO, scalar
from twostep.core.utils import get_logger

logger = get_logger("twostep.lie")

FIELD_RATIONAL = "Q"
FIELD_GAUSSIAN = "QI"


class LieAlgebra:
    """Skew bilinear bracket on QQ_I^n given by its structure constants."""

    __slots__ = ("dim", "name", "basis_names", "_constants", "_tensor")

    def __init__(self, dim, brackets=None, name=None, basis_names=None):
        self.dim = dim
        self.name = name
        if basis_names is None:
            basis_names = tuple(f"X{k + 1}" for k in range(dim))
        if len(basis_names) != dim:
            raise DimensionMismatch(f"{len(basis_names)} basis names for dimension {dim}")
        self.basis_names = tuple(basis_names)
        constants = {}
        for (i, j), value in (brackets or {}).items():
            if not (0 <= i < j < dim):
                raise DimensionMismatch(f"bracket index pair {(i, j)} must satisfy 0 <= i < j < {dim}")
            value = vector(value)
            if len(value) != dim:
                raise DimensionMismatch(f"bracket value of length {len(value)} in dimension {dim}")
            if not is_zero_vector(value):
                constants[(i, j)] = value
        self._constants = constants
        self._tensor = None

    @classmethod
    def from_raw(cls, dim, raw, name=None, basis_names=None):
        """
        Build from constants keyed by any ordered pair: (j, i) entries are
        negated into (i, j); i == j with a nonzero value and pairs given in
        both orders are rejected. Values are vectors or {k: coefficient}.
        """
        brackets = {}
        for (i, j), value in raw.items():
            if isinstance(value, dict):
                coords = [ZERO] * dim
                for k, c in value.items():
                    coords[k] += scalar(c)
                value = tuple(coords)
            else:
                value = vector(value)
            if i == j:
                if not is_zero_vector(value):
                    raise ValueError(f"bracket of X{i + 1} with itself must vanish")
                continue
            key, val = ((i, j), value) if i < j else ((j, i), vec_neg(value))
            if key in brackets:
                raise ValueError(f"bracket [X{key[0] + 1}, X{key[1] + 1}] given twice")
            brackets[key] = val
        return cls(dim, brackets, name=name, basis_names=basis_names)

    @classmethod
    def abelian(cls, dim, name=None):
        return cls(dim, {}, name=name)

    # --- field and equality ---

    @property
    def field(self):
        for value in self._constants.values():
            if any(x.y for x in value):
                return FIELD_GAUSSIAN
        return FIELD_RATIONAL

    def is_rational(self):
        return self.field == FIELD_RATIONAL

    def constants(self):
        """Sorted ((i, j), vector) pairs of nonzero brackets, i < j."""
        return sorted(self._constants.items())

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.dim == other.dim and self._constants == other._constants

    __hash__ = None

    def renamed(self, name):
        return LieAlgebra(self.dim, self._constants, name=name, basis_names=self.basis_names)

    def __repr__(self):
        label = self.name or "LieAlgebra"
        return f"<{label} dim={self.dim} brackets={len(self._constants)} field={self.field}>"

    # --- brackets ---

    def bracket(self, i, j):
        """[X_i, X_j] as a coordinate vector."""
        if i == j:
            return zero_vector(self.dim)
        if i < j:
            return self._constants.get((i, j), zero_vector(self.dim))
        value = self._constants.get((j, i))
        return vec_neg(value) if value is not None else zero_vector(self.dim)

    @property
    def tensor(self):
        """Full n x n table of bracket vectors."""
        if self._tensor is None:
            n = self.dim
            self._tensor = tuple(tuple(self.bracket(i, j) for j in range(n)) for i in range(n))
        return self._tensor

    def bracket_vec(self, u, v):
        """[u, v] for coordinate vectors u, v."""
        n = self.dim
        coeffs, values = [], []
        for (i, j), value in self._constants.items():
            c = u[i] * v[j] - u[j] * v[i]
            if c:
                coeffs.append(c)
                values.append(value)
        return lincomb(coeffs, values, n)

    def ad(self, v):
        """Matrix of ad(v) = [v, .]."""
        n = self.dim
        return MatrixExact.from_columns([self.bracket_vec(v, unit_vector(n, k)) for k in range(n)], n)

    def is_abelian(self):
        return not self._constants

    def jacobi_sum(self, i, j, k):
        """[[X_i,X_j],X_k] + [[X_j,X_k],X_i] + [[X_k,X_i],X_j]."""
        n = self.dim
        t = self.tensor
        out = zero_vector(n)
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            inner = t[a][b]
            if is_zero_vector(inner):
                continue
            out = vec_add(out, lincomb(inner, [t[m][c] for m in range(n)], n))
        return out

    def jacobi_violation(self):
        """First triple i < j < k with nonzero cyclic sum, or None."""
        n = self.dim
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    total = self.jacobi_sum(i, j, k)
                    if not is_zero_vector(total):
                        return (i, j, k), total
        return None


def validate_lie(raw, dim=None, name=None, basis_names=None):
    """
    Return a LieAlgebra satisfying the Jacobi identity.

    `raw` is either a LieAlgebra or a mapping of ordered index pairs to
    bracket values (see LieAlgebra.from_raw), in which case `dim` is required.
    """
    if isinstance(raw, LieAlgebra):
        algebra = raw
    else:
        if dim is None:
            raise ValueError("dimension required for raw structure constants")
        algebra = LieAlgebra.from_raw(dim, raw, name=name, basis_names=basis_names)

    violation = algebra.jacobi_violation()
    if violation is not None:
        (i, j, k), total = violation
        logger.debug("Jacobi violation on %s", (i, j, k))
        raise JacobiViolation(i, j, k, total)
    return algebra
