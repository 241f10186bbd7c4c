# twostep/core/matrices.py

"""
Dense exact matrices and subspaces over the Gaussian rationals.

MatrixExact is an immutable value wrapping rows of QQ_I elements. Row
reduction, determinants and inverses are delegated to sympy's
DomainMatrix; kernels and affine solutions are read off the reduced row
echelon form so their bases are deterministic.
"""

from sympy.polys.domains import QQ_I
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from twostep.core.errors import DimensionMismatch, SingularMatrixError
from twostep.core.scalars import ONE, ZERO, conj, format_scalar, scalar


# ----------------------------------------
# Vector helpers (vectors are tuples of QQ_I elements)
# ----------------------------------------

def zero_vector(n):
    return (ZERO,) * n


def unit_vector(n, k):
    return tuple(ONE if i == k else ZERO for i in range(n))


def vector(values):
    return tuple(scalar(v) for v in values)


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, v):
    return tuple(c * a for a in v)


def vec_neg(v):
    return tuple(-a for a in v)


def is_zero_vector(v):
    return not any(v)


def lincomb(coeffs, vectors, n):
    """Sum of c_k * v_k, skipping zero coefficients."""
    out = [ZERO] * n
    for c, v in zip(coeffs, vectors):
        if not c:
            continue
        for i, a in enumerate(v):
            if a:
                out[i] += c * a
    return tuple(out)


class MatrixExact:
    """Immutable dense matrix with QQ_I entries."""

    __slots__ = ("_entries", "_shape", "_hash")

    def __init__(self, rows, shape=None):
        entries = tuple(tuple(scalar(x) for x in row) for row in rows)
        if shape is None:
            shape = (len(entries), len(entries[0]) if entries else 0)
        if len(entries) != shape[0] or any(len(r) != shape[1] for r in entries):
            raise DimensionMismatch(f"ragged rows for a {shape[0]}x{shape[1]} matrix")
        self._entries = entries
        self._shape = tuple(shape)
        self._hash = None

    @classmethod
    def _trusted(cls, entries, shape):
        m = cls.__new__(cls)
        m._entries = tuple(tuple(r) for r in entries)
        m._shape = tuple(shape)
        m._hash = None
        return m

    # --- constructors ---

    @classmethod
    def zeros(cls, nrows, ncols=None):
        ncols = nrows if ncols is None else ncols
        return cls._trusted([[ZERO] * ncols for _ in range(nrows)], (nrows, ncols))

    @classmethod
    def identity(cls, n):
        return cls._trusted(
            [[ONE if i == j else ZERO for j in range(n)] for i in range(n)], (n, n))

    @classmethod
    def diag(cls, values):
        values = [scalar(v) for v in values]
        n = len(values)
        return cls._trusted(
            [[values[i] if i == j else ZERO for j in range(n)] for i in range(n)], (n, n))

    @classmethod
    def from_columns(cls, columns, nrows=None):
        columns = [tuple(scalar(x) for x in c) for c in columns]
        if nrows is None:
            if not columns:
                raise DimensionMismatch("row count required for an empty column list")
            nrows = len(columns[0])
        if any(len(c) != nrows for c in columns):
            raise DimensionMismatch("columns of unequal length")
        rows = [[c[i] for c in columns] for i in range(nrows)]
        return cls._trusted(rows, (nrows, len(columns)))

    @classmethod
    def from_domain_matrix(cls, dm):
        return cls._trusted(dm.to_list(), dm.shape)

    # --- access ---

    @property
    def shape(self):
        return self._shape

    @property
    def rows(self):
        return self._shape[0]

    @property
    def cols(self):
        return self._shape[1]

    @property
    def entries(self):
        return self._entries

    def __getitem__(self, index):
        i, j = index
        return self._entries[i][j]

    def row(self, i):
        return self._entries[i]

    def column(self, j):
        return tuple(r[j] for r in self._entries)

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def is_square(self):
        return self.rows == self.cols

    def to_domain_matrix(self):
        return DomainMatrix([list(r) for r in self._entries], self._shape, QQ_I)

    # --- arithmetic ---

    def _check_same_shape(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch(f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other):
        self._check_same_shape(other)
        return MatrixExact.from_domain_matrix(self.to_domain_matrix() + other.to_domain_matrix())

    def __sub__(self, other):
        self._check_same_shape(other)
        return MatrixExact.from_domain_matrix(self.to_domain_matrix() - other.to_domain_matrix())

    def __neg__(self):
        return MatrixExact._trusted([[-x for x in r] for r in self._entries], self._shape)

    def scale(self, c):
        c = scalar(c)
        return MatrixExact._trusted([[c * x for x in r] for r in self._entries], self._shape)

    def __matmul__(self, other):
        if isinstance(other, MatrixExact):
            if self.cols != other.rows:
                raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
            if 0 in self.shape or 0 in other.shape:
                return MatrixExact.zeros(self.rows, other.cols)
            product = self.to_domain_matrix() * other.to_domain_matrix()
            return MatrixExact.from_domain_matrix(product)
        return self.apply(other)

    def apply(self, v):
        """Matrix times a vector given as a tuple."""
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector of length {len(v)} for {self.shape} matrix")
        out = []
        for r in self._entries:
            acc = ZERO
            for a, b in zip(r, v):
                if a and b:
                    acc += a * b
            out.append(acc)
        return tuple(out)

    def transpose(self):
        if 0 in self.shape:
            return MatrixExact.zeros(self.cols, self.rows)
        return MatrixExact.from_domain_matrix(self.to_domain_matrix().transpose())

    @property
    def T(self):
        return self.transpose()

    def conjugate(self):
        return MatrixExact._trusted(
            [[conj(x) for x in r] for r in self._entries], self._shape)

    def trace(self):
        acc = ZERO
        for i in range(min(self.shape)):
            acc += self._entries[i][i]
        return acc

    # --- predicates ---

    def is_zero(self):
        return not any(any(r) for r in self._entries)

    def is_identity(self):
        return self.is_square() and self == MatrixExact.identity(self.rows)

    def is_symmetric(self):
        return self.is_square() and self == self.transpose()

    def is_real(self):
        return all(not x.y for r in self._entries for x in r)

    def commutes_with(self, other):
        return self @ other == other @ self

    # --- elimination ---

    def rref(self):
        """Reduced row echelon form and pivot columns."""
        if 0 in self.shape:
            return self, ()
        # sparse elimination; derivation systems are mostly zeros
        reduced, pivots = self.to_domain_matrix().to_sparse().rref()
        return MatrixExact.from_domain_matrix(reduced.to_dense()), tuple(pivots)

    def rank(self):
        return len(self.rref()[1])

    def det(self):
        if not self.is_square():
            raise DimensionMismatch("determinant of a non-square matrix")
        if self.rows == 0:
            return ONE
        return self.to_domain_matrix().det()

    def inverse(self):
        if not self.is_square():
            raise DimensionMismatch("inverse of a non-square matrix")
        try:
            return MatrixExact.from_domain_matrix(self.to_domain_matrix().inv())
        except (DMNonInvertibleMatrixError, ZeroDivisionError) as exc:
            raise SingularMatrixError("matrix is singular") from exc

    def leading_minors(self):
        return [MatrixExact._trusted([r[:k] for r in self._entries[:k]], (k, k)).det()
                for k in range(1, self.rows + 1)]

    def kernel(self):
        return mat_kernel(self)

    # --- dunder ---

    def __eq__(self, other):
        if not isinstance(other, MatrixExact):
            return NotImplemented
        return self._shape == other._shape and self._entries == other._entries

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._shape, self._entries))
        return self._hash

    def __repr__(self):
        body = "; ".join(" ".join(format_scalar(x) for x in r) for r in self._entries)
        return f"MatrixExact({self.rows}x{self.cols}: [{body}])"


def block_diag(*blocks):
    n = sum(b.rows for b in blocks)
    m = sum(b.cols for b in blocks)
    rows = [[ZERO] * m for _ in range(n)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                rows[r0 + i][c0 + j] = b[i, j]
        r0 += b.rows
        c0 += b.cols
    return MatrixExact._trusted(rows, (n, m))


# ----------------------------------------
# Kernel and affine solve
# ----------------------------------------

def mat_kernel(m):
    """Exact null space; one basis vector per free column of the RREF."""
    nrows, ncols = m.shape
    if nrows == 0:
        return Subspace.whole(ncols)
    reduced, pivots = m.rref()
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for k, p in enumerate(pivots):
            v[p] = -reduced[k, f]
        basis.append(tuple(v))
    return Subspace(ncols, basis)


class AffineSolution:
    """Solution set particular + kernel of a consistent linear system."""

    __slots__ = ("particular", "kernel")

    def __init__(self, particular, kernel):
        self.particular = tuple(particular)
        self.kernel = kernel

    def __repr__(self):
        part = ", ".join(format_scalar(x) for x in self.particular)
        return f"AffineSolution(particular=({part}), kernel_dim={self.kernel.dim})"


def mat_solve_affine(a, b):
    """Return an AffineSolution of a·x = b, or None when inconsistent."""
    b = vector(b)
    if a.rows != len(b):
        raise DimensionMismatch(f"{a.rows} equations but right-hand side of length {len(b)}")
    ncols = a.cols
    if a.rows == 0:
        return AffineSolution(zero_vector(ncols), Subspace.whole(ncols))
    augmented = MatrixExact._trusted(
        [list(r) + [b[i]] for i, r in enumerate(a.entries)], (a.rows, ncols + 1))
    reduced, pivots = augmented.rref()
    if ncols in pivots:
        return None
    x = [ZERO] * ncols
    for k, p in enumerate(pivots):
        x[p] = reduced[k, ncols]
    return AffineSolution(x, mat_kernel(a))


# ----------------------------------------
# Subspaces
# ----------------------------------------

class Subspace:
    """Span of linearly independent column vectors in QQ_I^n."""

    __slots__ = ("ambient_dim", "_vectors")

    def __init__(self, ambient_dim, vectors=()):
        vectors = tuple(vector(v) for v in vectors)
        if any(len(v) != ambient_dim for v in vectors):
            raise DimensionMismatch("basis vector of the wrong length")
        self.ambient_dim = ambient_dim
        self._vectors = vectors

    @classmethod
    def whole(cls, n):
        return cls(n, [unit_vector(n, k) for k in range(n)])

    @classmethod
    def zero(cls, n):
        return cls(n, ())

    @classmethod
    def span(cls, ambient_dim, vectors):
        """Canonical basis (nonzero RREF rows) of the span of arbitrary vectors."""
        vectors = [vector(v) for v in vectors]
        vectors = [v for v in vectors if not is_zero_vector(v)]
        if not vectors:
            return cls.zero(ambient_dim)
        reduced, pivots = MatrixExact(vectors, (len(vectors), ambient_dim)).rref()
        return cls(ambient_dim, [reduced.row(k) for k in range(len(pivots))])

    @property
    def dim(self):
        return len(self._vectors)

    @property
    def vectors(self):
        return self._vectors

    @property
    def basis(self):
        """Basis as the columns of a matrix."""
        if not self._vectors:
            return MatrixExact.zeros(self.ambient_dim, 0)
        return MatrixExact.from_columns(self._vectors, self.ambient_dim)

    def is_zero(self):
        return not self._vectors

    def is_whole(self):
        return self.dim == self.ambient_dim

    def contains(self, v):
        v = vector(v)
        if is_zero_vector(v):
            return True
        if not self._vectors:
            return False
        rows = list(self._vectors) + [v]
        return MatrixExact(rows, (len(rows), self.ambient_dim)).rank() == self.dim

    def contains_subspace(self, other):
        return all(self.contains(v) for v in other.vectors)

    def coordinates(self, v):
        """Coefficients of v in this basis; None if v is not in the subspace."""
        solution = mat_solve_affine(self.basis, vector(v))
        if solution is None:
            return None
        return solution.particular

    def sum(self, other):
        return Subspace.span(self.ambient_dim, list(self._vectors) + list(other.vectors))

    def intersection(self, other):
        # x in both iff B1 a = B2 b
        if self.is_zero() or other.is_zero():
            return Subspace.zero(self.ambient_dim)
        stacked = MatrixExact.from_columns(
            list(self._vectors) + [tuple(-x for x in w) for w in other.vectors], self.ambient_dim)
        kernel = mat_kernel(stacked)
        images = [lincomb(k[:self.dim], self._vectors, self.ambient_dim) for k in kernel.vectors]
        return Subspace.span(self.ambient_dim, images)

    def is_complement_of(self, other):
        return (self.dim + other.dim == self.ambient_dim
                and self.sum(other).dim == self.ambient_dim)

    def image(self, m):
        return Subspace.span(m.rows, [m.apply(v) for v in self._vectors])

    def is_invariant(self, m):
        return all(self.contains(m.apply(v)) for v in self._vectors)

    def coordinate_complement(self):
        """Standard basis vectors on the non-pivot coordinates of the RREF basis."""
        canonical = Subspace.span(self.ambient_dim, self._vectors)
        pivots = set()
        for v in canonical.vectors:
            pivots.add(next(i for i, x in enumerate(v) if x))
        return Subspace(self.ambient_dim, [unit_vector(self.ambient_dim, k)
                                           for k in range(self.ambient_dim) if k not in pivots])

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.ambient_dim == other.ambient_dim and self.dim == other.dim
                and self.contains_subspace(other))

    __hash__ = None

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"
