# twostep/metric/hermitian.py

"""
Almost Hermitian checks on (a, g, J): quasi-Kähler, Chern-flat, SKT and the
aggregated report used for the J ↔ J⁻ correspondence.
"""

from twostep.acs.classify import classify_acs
from twostep.acs.flip import j_flip
from twostep.core.errors import HypothesisError, InvarianceError, NotHermitian
from twostep.core.matrices import Subspace, vec_add, vec_scale, vec_sub
from twostep.core.scalars import I_UNIT, ZERO, conj
from twostep.core.utils import get_logger
from twostep.metric.connection import antiholomorphic_frame, holomorphic_frame, levi_civita
from twostep.metric.gray import IDENTITIES, curvature, gray_check
from twostep.metric.inner_product import as_inner_product

logger = get_logger("twostep.metric")

REPORT_FLAGS = ("chern_flat", "quasi_kahler", "skt", "g1", "g2", "g3", "in_CP2", "in_QK0")


def _require_hermitian(ip, j):
    if not j.is_orthogonal_for(ip.matrix):
        raise NotHermitian("J is not orthogonal for the inner product")


def quasi_kahler_check(a, ip, j):
    """
    (holds, witness): the (0,1) part of ∇_{Z̄_a} Z_b vanishes for every
    pair of basis-derived fields, i.e. W + iJW = 0 for W = ∇_{Z̄_a} Z_b.
    """
    ip = as_inner_product(ip)
    j.check_size(a)
    _require_hermitian(ip, j)
    nabla = levi_civita(a, ip)
    zs = holomorphic_frame(j)
    zbars = antiholomorphic_frame(j)
    n = a.dim
    for p in range(n):
        for q in range(n):
            w = nabla.derivative(zbars[p], zs[q])
            if any(vec_add(w, vec_scale(I_UNIT, j.apply(w)))):
                return False, (p, q)
    return True, None


def chern_flat_check(a, j):
    """The bracket satisfies [JX, Y] = [X, JY]."""
    return classify_acs(a, j).in_Ch


def unitary_frame(a, ip, j):
    """
    (1,0) frame for J, orthogonal for h(U, V) = g(U, V̄), and the squared
    norms h(Z_i, Z_i). Built greedily from X_a - iJX_a, then Gram-Schmidt.
    """
    n = a.dim
    chosen = []
    span = Subspace.zero(n)
    for z in holomorphic_frame(j):
        if not span.contains(z):
            chosen.append(z)
            span = span.sum(Subspace(n, [z]))
        if len(chosen) == n // 2:
            break
    frame, norms = [], []
    for z in chosen:
        w = z
        for f, nf in zip(frame, norms):
            w = vec_sub(w, vec_scale(ip.hermitian(z, f) / nf, f))
        frame.append(w)
        norms.append(ip.hermitian(w, w))
    return frame, norms


def skt_check(a, ip, j):
    """
    (holds, witness) for the SKT condition of a Chern-flat Hermitian
    structure: with [Z_r, Z_s] = Σ c_rs^i Z_i in a unitary frame, the
    coefficients K_{rs,ml} = Σ_i h_i c_rs^i conj(c_ml^i) must all vanish.
    """
    ip = as_inner_product(ip)
    j.check_size(a)
    _require_hermitian(ip, j)
    flags = classify_acs(a, j)
    if not (flags.in_int and flags.in_Ch):
        raise HypothesisError("SKT check needs an integrable Chern-flat structure")
    frame, norms = unitary_frame(a, ip, j)
    m = len(frame)
    coeffs = {}
    for r in range(m):
        for s in range(r + 1, m):
            bracket = a.bracket_vec(frame[r], frame[s])
            coeffs[(r, s)] = [ip.hermitian(bracket, frame[i]) / norms[i] for i in range(m)]
    pairs = sorted(coeffs)
    for rs in pairs:
        for ml in pairs:
            total = ZERO
            for i in range(m):
                total += norms[i] * coeffs[rs][i] * conj(coeffs[ml][i])
            if total:
                return False, rs + ml
    return True, None


class HermitianReport:
    """
    Flags of an almost Hermitian structure, witnesses for false flags. skt
    is None when the structure is not integrable and Chern-flat.
    """

    __slots__ = ("flags", "witnesses", "flip_in_QK0")

    def __init__(self, flags, witnesses, flip_in_QK0=None):
        self.flags = dict(flags)
        self.witnesses = dict(witnesses)
        self.flip_in_QK0 = flip_in_QK0

    def __getattr__(self, name):
        if name in REPORT_FLAGS:
            return self.flags[name]
        raise AttributeError(name)

    def as_dict(self):
        out = {"flags": {k: self.flags[k] for k in REPORT_FLAGS},
               "witnesses": {k: list(v) if isinstance(v, tuple) else v
                             for k, v in sorted(self.witnesses.items())}}
        if self.flip_in_QK0 is not None:
            out["flip_in_QK0"] = self.flip_in_QK0
        return out

    def __repr__(self):
        inside = ", ".join(f"{k}={self.flags[k]}" for k in REPORT_FLAGS)
        return f"HermitianReport({inside})"


def _in_qk0(a, ip, j):
    qk, _ = quasi_kahler_check(a, ip, j)
    return chern_flat_check(a, j) and qk


def hermitian_report(a, ip, j, follow_flip=True):
    ip = as_inner_product(ip)
    j.check_size(a)
    _require_hermitian(ip, j)
    classes = classify_acs(a, j)
    flags, witnesses = {}, {}

    flags["chern_flat"] = classes.in_Ch
    if not classes.in_Ch:
        witnesses["chern_flat"] = classes.witnesses["in_Ch"]

    flags["quasi_kahler"], witness = quasi_kahler_check(a, ip, j)
    if witness is not None:
        witnesses["quasi_kahler"] = witness

    if classes.in_int and classes.in_Ch:
        flags["skt"], witness = skt_check(a, ip, j)
        if witness is not None:
            witnesses["skt"] = witness
    else:
        # SKT is only decided for integrable Chern-flat structures
        flags["skt"] = None

    r = curvature(a, ip)
    for name in IDENTITIES:
        key = name.lower()
        flags[key], witness = gray_check(r, j, name)
        if witness is not None:
            witnesses[key] = witness

    flags["in_CP2"] = classes.in_Ch and classes.in_int and flags["g2"]
    flags["in_QK0"] = classes.in_Ch and flags["quasi_kahler"]

    flip_in_QK0 = None
    if follow_flip and flags["in_CP2"]:
        try:
            flipped = j_flip(a, j, ip)
            flip_in_QK0 = _in_qk0(a, ip, flipped)
        except InvarianceError as exc:
            logger.info("J⁻ unavailable: %s", exc)
    return HermitianReport(flags, witnesses, flip_in_QK0)
