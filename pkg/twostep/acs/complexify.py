# twostep/acs/complexify.py

"""
Realification, complexification and anti-complexification.

All three produce a real algebra on the interleaved basis
(X1, iX1, X2, iX2, ...) with J = multiplication by i:

    realify(a)        [X⊗α, Y⊗β] = αβ [X, Y]          (a over QQ_I)
    complexify(h)     realify(h) for h over QQ
    anticomplexify(h) [X⊗α, Y⊗β] = conj(αβ) [X, Y]   (h over QQ, 2-step)
"""

from twostep.core.errors import NotTwoStep
from twostep.core.matrices import MatrixExact
from twostep.core.scalars import I_UNIT, ONE, ZERO, conj, scalar
from twostep.acs.structures import AlmostComplexStructure
from twostep.lie.algebra import LieAlgebra
from twostep.lie.structure import nilpotency_step

_UNITS = (ONE, I_UNIT)


def _extend(a, twist, name):
    n = a.dim
    dim = 2 * n
    brackets = {}
    for (i, j), value in a.constants():
        for s in range(2):
            for t in range(2):
                factor = twist(_UNITS[s] * _UNITS[t])
                coords = [ZERO] * dim
                for k, c in enumerate(value):
                    if not c:
                        continue
                    w = factor * c
                    coords[2 * k] = scalar(w.x)
                    coords[2 * k + 1] = scalar(w.y)
                p, q = 2 * i + s, 2 * j + t
                # p < q always holds since i < j
                brackets[(p, q)] = tuple(coords)
    names = []
    for base in a.basis_names:
        names.extend([base, f"i{base}"])
    algebra = LieAlgebra(dim, brackets, name=name, basis_names=names)
    return algebra, AlmostComplexStructure.standard(dim)


def realify(a, name=None):
    """Real form of a Lie algebra over the Gaussian rationals, with J = i."""
    return _extend(a, lambda z: z, name or _derived_name("real", a))


def complexify(h, name=None):
    if not h.is_rational():
        raise ValueError("complexify expects an algebra with rational structure constants")
    return _extend(h, lambda z: z, name or _derived_name("complexify", h))


def anticomplexify(h, name=None):
    if not h.is_rational():
        raise ValueError("anticomplexify expects an algebra with rational structure constants")
    if nilpotency_step(h) not in (1, 2):
        raise NotTwoStep("anti-complexification is a Lie algebra only for 2-step (or abelian) input")
    return _extend(h, conj, name or _derived_name("anticomplexify", h))


def _derived_name(prefix, a):
    return f"{prefix}({a.name})" if a.name else None


def doubled_metric(g):
    """⟨X⊗α, Y⊗β⟩ = Re(α conj(β)) ⟨X, Y⟩ on the interleaved basis."""
    n = g.rows
    rows = [[ZERO] * (2 * n) for _ in range(2 * n)]
    for a in range(n):
        for b in range(n):
            rows[2 * a][2 * b] = g[a, b]
            rows[2 * a + 1][2 * b + 1] = g[a, b]
    return MatrixExact(rows)
