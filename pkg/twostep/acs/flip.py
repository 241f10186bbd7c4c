# twostep/acs/flip.py

"""
The J ↦ J⁻ flip: keep J on the center, negate it on the orthogonal
complement of the center. Applying it twice returns J; the same map is
used for the inverse correspondence.
"""

from twostep.core.errors import InvarianceError
from twostep.core.matrices import MatrixExact, mat_kernel
from twostep.core.scalars import ONE
from twostep.acs.structures import AlmostComplexStructure
from twostep.lie.structure import center


def orthogonal_complement(subspace, g):
    """{v : ⟨w, v⟩_g = 0 for all w in the subspace}."""
    n = subspace.ambient_dim
    if subspace.is_zero():
        return mat_kernel(MatrixExact.zeros(0, n))
    rows = [g.transpose().apply(w) for w in subspace.vectors]
    return mat_kernel(MatrixExact(rows, (len(rows), n)))


def j_flip(a, j, ip):
    """J⁻ = J on 𝔷, -J on 𝔷^⊥."""
    j.check_size(a)
    g = getattr(ip, "matrix", ip)
    z = center(a)
    z_perp = orthogonal_complement(z, g)
    if not z.is_invariant(j.matrix):
        raise InvarianceError("center is not J-invariant", subspace=z)
    if not z_perp.is_invariant(j.matrix):
        raise InvarianceError("orthogonal complement of the center is not J-invariant",
                              subspace=z_perp)
    if z_perp.is_zero():
        return j
    frame = MatrixExact.from_columns(list(z.vectors) + list(z_perp.vectors), a.dim)
    signs = [ONE] * z.dim + [-ONE] * z_perp.dim
    reflection = frame @ MatrixExact.diag(signs) @ frame.inverse()
    return AlmostComplexStructure(j.matrix @ reflection)
