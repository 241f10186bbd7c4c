# twostep/acs/classify.py

"""
Membership of a bracket in the five J-subspaces

    V(int):  [JX,JY] = [X,Y] + J[JX,Y] + J[X,JY]
    V(ab):   [JX,JY] = [X,Y]
    V(C):    [JX,Y]  = J[X,Y]
    V(Ch):   [JX,Y]  = [X,JY]
    V(Cbar): [JX,Y]  = -J[X,Y]

and the decomposition V = V(ab) ⊕ V(C) ⊕ V(Cbar).
"""

from twostep.core.matrices import (
    is_zero_vector,
    lincomb,
    vec_add,
    vec_neg,
    vec_scale,
    vec_sub,
    zero_vector,
)
from twostep.core.scalars import HALF
from twostep.lie.algebra import LieAlgebra

FLAG_NAMES = ("in_int", "in_ab", "in_C", "in_Ch", "in_Cbar")


class ClassificationFlags:
    """Truth values of the five identities, with first failing basis pairs."""

    __slots__ = FLAG_NAMES + ("witnesses",)

    def __init__(self, in_int, in_ab, in_C, in_Ch, in_Cbar, witnesses=None):
        self.in_int = in_int
        self.in_ab = in_ab
        self.in_C = in_C
        self.in_Ch = in_Ch
        self.in_Cbar = in_Cbar
        self.witnesses = dict(witnesses or {})

    def as_dict(self):
        return {name: getattr(self, name) for name in FLAG_NAMES}

    def consistent(self):
        return ((not self.in_ab or self.in_int)
                and (not self.in_C or (self.in_int and self.in_Ch))
                and (not self.in_Cbar or self.in_Ch))

    def __eq__(self, other):
        if not isinstance(other, ClassificationFlags):
            return NotImplemented
        return self.as_dict() == other.as_dict()

    __hash__ = None

    def __repr__(self):
        inside = ", ".join(f"{k}={v}" for k, v in self.as_dict().items())
        return f"ClassificationFlags({inside})"


class _JTables:
    """Brackets of basis vectors and their J-images, computed once."""

    def __init__(self, a, j):
        j.check_size(a)
        n = a.dim
        self.n = n
        self.a = a
        self.j = j
        jx = j.images()
        t = a.tensor
        # [JX_i, X_k] for all i, k
        self._jx_x = [[lincomb(jx[i], [t[m][k] for m in range(n)], n) for k in range(n)]
                     for i in range(n)]
        self.jx = jx

    def bracket(self, i, k):
        return self.a.tensor[i][k]

    def jx_x(self, i, k):
        return self._jx_x[i][k]

    def x_jx(self, i, k):
        # [X_i, JX_k] = -[JX_k, X_i]
        return vec_neg(self._jx_x[k][i])

    def jx_jx(self, i, k):
        n = self.n
        return lincomb(self.jx[k], [self._jx_x[i][m] for m in range(n)], n)

    def J(self, v):
        return self.j.apply(v)


def _identity_residuals(tab, i, k):
    b = tab.bracket(i, k)
    p = tab.jx_x(i, k)
    q = tab.x_jx(i, k)
    a = tab.jx_jx(i, k)
    jb = tab.J(b)
    return {
        "in_int": vec_sub(a, vec_add(b, vec_add(tab.J(p), tab.J(q)))),
        "in_ab": vec_sub(a, b),
        "in_C": vec_sub(p, jb),
        "in_Ch": vec_sub(p, q),
        "in_Cbar": vec_add(p, jb),
    }


def classify_acs(a, j):
    """Exact truth of each identity over all ordered basis pairs."""
    tab = _JTables(a, j)
    n = a.dim
    witnesses = {}
    for i in range(n):
        for k in range(n):
            for name, residual in _identity_residuals(tab, i, k).items():
                if name not in witnesses and not is_zero_vector(residual):
                    witnesses[name] = (i, k)
            if len(witnesses) == len(FLAG_NAMES):
                break
    flags = {name: name not in witnesses for name in FLAG_NAMES}
    return ClassificationFlags(witnesses=witnesses, **flags)


def satisfies(a, j, name):
    return getattr(classify_acs(a, j), name)


def _from_table(n, table, name):
    brackets = {}
    for i in range(n):
        for k in range(i + 1, n):
            if not is_zero_vector(table[i][k]):
                brackets[(i, k)] = table[i][k]
    return LieAlgebra(n, brackets, name=name)


def decompose_bracket(a, j):
    """
    (ab_part, C_part, Cbar_part) with

        ab   = ([X,Y] + [JX,JY]) / 2
        ch   = ([X,Y] - [JX,JY]) / 2
        C    = (ch(X,Y) - J ch(JX,Y)) / 2
        Cbar = (ch(X,Y) + J ch(JX,Y)) / 2
    """
    tab = _JTables(a, j)
    n = a.dim
    ab = [[vec_scale(HALF, vec_add(tab.bracket(i, k), tab.jx_jx(i, k))) for k in range(n)]
          for i in range(n)]
    ch = [[vec_scale(HALF, vec_sub(tab.bracket(i, k), tab.jx_jx(i, k))) for k in range(n)]
          for i in range(n)]
    jx = tab.jx
    c_part = [[None] * n for _ in range(n)]
    cbar_part = [[None] * n for _ in range(n)]
    for i in range(n):
        for k in range(n):
            ch_jx = lincomb(jx[i], [ch[m][k] for m in range(n)], n)
            j_ch_jx = tab.J(ch_jx)
            c_part[i][k] = vec_scale(HALF, vec_sub(ch[i][k], j_ch_jx))
            cbar_part[i][k] = vec_scale(HALF, vec_add(ch[i][k], j_ch_jx))
    return (_from_table(n, ab, "ab_part"),
            _from_table(n, c_part, "C_part"),
            _from_table(n, cbar_part, "Cbar_part"))


def bracket_sum(*parts):
    n = parts[0].dim
    total = {}
    for part in parts:
        for key, value in part.constants():
            total[key] = vec_add(total.get(key, zero_vector(n)), value)
    return LieAlgebra(n, total)
