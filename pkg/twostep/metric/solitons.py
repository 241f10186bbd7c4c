# twostep/metric/solitons.py

"""
Exact nilsoliton and minimal-metric certificates.

A metric is a nilsoliton when Ric = cI + D with D a derivation, and
minimal for J when Ric^J = cI + D. Both are linear feasibility problems in
(c, derivation coordinates) and are decided for the given metric only.
"""

from twostep.core.errors import NotNilpotent
from twostep.core.matrices import MatrixExact, mat_solve_affine
from twostep.core.scalars import ONE, ZERO, format_scalar
from twostep.core.utils import get_logger
from twostep.lie.structure import derivation_basis, is_derivation, is_nilpotent
from twostep.metric.ricci import ricci, ricci_one_one

logger = get_logger("twostep.metric")

NILSOLITON = "nilsoliton"
MINIMAL = "minimal"


class SolitonCertificate:
    """Ric (or Ric^J) = c·I + d with d in Der."""

    __slots__ = ("c", "d", "kind")

    def __init__(self, c, d, kind=NILSOLITON):
        self.c = c
        self.d = d
        self.kind = kind

    def verify(self, a, target):
        """True when target = cI + d exactly and d is a derivation."""
        n = a.dim
        return (target == MatrixExact.identity(n).scale(self.c) + self.d
                and is_derivation(a, self.d))

    def as_dict(self):
        return {
            "kind": self.kind,
            "c": format_scalar(self.c),
            "D": [[format_scalar(x) for x in row] for row in self.d.entries],
        }

    def __eq__(self, other):
        if not isinstance(other, SolitonCertificate):
            return NotImplemented
        return (self.c, self.d) == (other.c, other.d)

    __hash__ = None

    def __repr__(self):
        return f"SolitonCertificate({self.kind}, c={format_scalar(self.c)})"


def solve_soliton(a, target, kind=NILSOLITON):
    """Solve target = cI + Σ x_k D_k over Der(a); None when infeasible."""
    if not is_nilpotent(a):
        raise NotNilpotent("soliton certificates are defined for nilpotent algebras")
    n = a.dim
    basis = derivation_basis(a)
    rows = []
    rhs = []
    for r in range(n):
        for s in range(n):
            rows.append([ONE if r == s else ZERO] + [d[r, s] for d in basis])
            rhs.append(target[r, s])
    solution = mat_solve_affine(MatrixExact(rows, (n * n, 1 + len(basis))), rhs)
    if solution is None:
        logger.debug("%s system infeasible", kind)
        return None
    c = solution.particular[0]
    d = target - MatrixExact.identity(n).scale(c)
    cert = SolitonCertificate(c, d, kind)
    if not cert.verify(a, target):
        raise ArithmeticError("soliton solve produced an invalid certificate")
    return cert


def nilsoliton_check(a, ip):
    return solve_soliton(a, ricci(a, ip), NILSOLITON)


def minimal_check(a, ip, j):
    return solve_soliton(a, ricci_one_one(a, ip, j), MINIMAL)
