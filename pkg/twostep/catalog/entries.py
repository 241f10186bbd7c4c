# twostep/catalog/entries.py

"""
Built-in algebras with their almost complex structures and default metrics.

Bracket tables use 1-based generator names; [X_a, X_b] = combination is
written as ((a, b), {c: coefficient}). Families take a parameter t; the
abelian and Heisenberg series take integer sizes n and r.
"""

from twostep.acs.classify import FLAG_NAMES, classify_acs
from twostep.acs.complexify import anticomplexify, complexify
from twostep.acs.structures import AlmostComplexStructure
from twostep.core.errors import CatalogError
from twostep.core.scalars import ONE, format_scalar, scalar
from twostep.core.utils import get_logger
from twostep.lie.algebra import LieAlgebra, validate_lie
from twostep.metric.inner_product import InnerProduct

logger = get_logger("twostep.catalog")

_BUILDERS = {}


class CatalogEntry:
    """
    A named algebra; j and ip are None where they do not apply (odd
    dimension, or structure constants outside QQ). flags holds the
    declared classify_acs outcome for j.
    """

    __slots__ = ("name", "params", "algebra", "j", "ip", "provenance", "flags")

    def __init__(self, name, params, algebra, j=None, ip=None, provenance="", flags=None):
        self.name = name
        self.params = dict(params)
        self.algebra = algebra
        self.j = j
        self.ip = ip
        self.provenance = provenance
        self.flags = dict(flags) if flags else None

    def as_dict(self):
        return {
            "name": self.name,
            "params": {k: format_scalar(v) if not isinstance(v, int) else v
                       for k, v in sorted(self.params.items())},
            "dim": self.algebra.dim,
            "field": self.algebra.field,
            "has_j": self.j is not None,
            "provenance": self.provenance,
            "flags": self.flags,
        }

    def __repr__(self):
        params = ", ".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return f"CatalogEntry({self.name}{', ' + params if params else ''})"


def _entry(name, params=()):
    def register(builder):
        _BUILDERS[name] = (builder, params)
        return builder
    return register


def _flags(in_int, in_ab, in_C, in_Ch, in_Cbar):
    return dict(zip(FLAG_NAMES, (in_int, in_ab, in_C, in_Ch, in_Cbar)))


def _table(dim, rows, name, basis_names=None):
    raw = {(a - 1, b - 1): {c - 1: coeff for c, coeff in combo.items()}
           for (a, b), combo in rows}
    return validate_lie(raw, dim=dim, name=name, basis_names=basis_names)


def _generators(p, q, central="Z"):
    return tuple(f"X{k + 1}" for k in range(p)) + tuple(f"{central}{k + 1}" for k in range(q))


def _heisenberg3():
    return _table(3, [((1, 2), {3: 1})], "heisenberg3")


@_entry("heisenberg3")
def _build_heisenberg3():
    return CatalogEntry("heisenberg3", {}, _heisenberg3(), ip=InnerProduct.identity(3),
                        provenance="real Heisenberg algebra, [X1, X2] = X3")


@_entry("heisenberg", params=("r",))
def _build_heisenberg(r=1):
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"heisenberg needs an integer r >= 1, got {r!r}")
    n = 2 * r + 1
    rows = [((k, r + k), {n: 1}) for k in range(1, r + 1)]
    a = _table(n, rows, f"heisenberg{n}")
    return CatalogEntry("heisenberg", {"r": r}, a, ip=InnerProduct.identity(n),
                        provenance=f"Heisenberg algebra of dimension {n}, [X_k, X_(r+k)] = X_{n}")


@_entry("abelian", params=("n",))
def _build_abelian(n=4):
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"abelian needs an integer n >= 1, got {n!r}")
    j, flags = None, None
    if n % 2 == 0:
        j = AlmostComplexStructure.standard(n)
        flags = _flags(True, True, True, True, True)
    return CatalogEntry("abelian", {"n": n}, LieAlgebra.abelian(n, name=f"abelian{n}"), j=j,
                        ip=InnerProduct.identity(n), provenance="abelian algebra (torus)",
                        flags=flags)


@_entry("iwasawa")
def _build_iwasawa():
    a, j = complexify(_heisenberg3(), name="iwasawa")
    return CatalogEntry("iwasawa", {}, a, j=j, ip=InnerProduct.identity(6),
                        provenance=("complex Heisenberg algebra [Z1, Z2] = Z3 realified on "
                                    "(X1, iX1, X2, iX2, X3, iX3); Z_k is built from X_(2k-1), "
                                    "J = multiplication by i"),
                        flags=_flags(True, False, True, True, False))


@_entry("anti_iwasawa")
def _build_anti_iwasawa():
    a, j = anticomplexify(_heisenberg3(), name="anti_iwasawa")
    return CatalogEntry("anti_iwasawa", {}, a, j=j, ip=InnerProduct.identity(6),
                        provenance="anti-complexification of heisenberg3, J = multiplication by i",
                        flags=_flags(False, False, False, True, True))


@_entry("iwasawa_coframe")
def _build_iwasawa_coframe():
    # de5 = e13 + e42, de6 = e14 + e23 read with de(X, Y) = -e([X, Y])
    rows = [((1, 3), {5: -1}), ((2, 4), {5: 1}), ((1, 4), {6: -1}), ((2, 3), {6: -1})]
    a = _table(6, rows, "iwasawa_coframe")
    return CatalogEntry("iwasawa_coframe", {}, a, ip=InnerProduct.identity(6),
                        provenance=("Iwasawa algebra from its structure equations "
                                    "de5 = e13 + e42, de6 = e14 + e23, with de(X, Y) = -e([X, Y])"))


@_entry("aff_c")
def _build_aff_c():
    aff = _table(2, [((1, 2), {2: 1})], "aff")
    a, j = complexify(aff, name="aff_c")
    return CatalogEntry("aff_c", {}, a, j=j, ip=InnerProduct.identity(4),
                        provenance="complex affine algebra [X, Y] = Y, realified with J = i",
                        flags=_flags(True, False, True, True, False))


@_entry("h3r")
def _build_h3r():
    a = _table(4, [((1, 2), {3: 1})], "h3r")
    return CatalogEntry("h3r", {}, a, j=AlmostComplexStructure.standard(4),
                        ip=InnerProduct.identity(4),
                        provenance="heisenberg3 + R with JX1 = X2, JX3 = X4 (not Chern-flat)",
                        flags=_flags(True, True, False, False, False))


@_entry("lambda82", params=("t",))
def _build_lambda82(t):
    t = scalar(t)
    rows = [
        ((1, 5), {9: ONE}), ((2, 6), {9: ONE}), ((3, 7), {9: ONE}),
        ((4, 8), {9: ONE}), ((2, 5), {10: ONE}), ((3, 6), {10: ONE}),
        ((4, 7), {10: ONE}), ((1, 8), {10: -ONE}), ((2, 7), {10: -t}),
    ]
    a = _table(10, rows, "lambda82", basis_names=_generators(8, 2))
    ip = InnerProduct.identity(10) if a.is_rational() else None
    return CatalogEntry("lambda82", {"t": t}, a, ip=ip,
                        provenance="complex 2-step family of type (8,2), Pfaffian x^4 + t x^2y^2 + y^4")


@_entry("lambda63", params=("t",))
def _build_lambda63(t):
    t = scalar(t)
    rows = [
        ((1, 2), {7: t}), ((3, 4), {8: t}), ((5, 6), {9: t}),
        ((5, 4), {7: ONE}), ((1, 6), {8: ONE}), ((3, 2), {9: ONE}),
        ((3, 6), {7: ONE}), ((5, 2), {8: ONE}), ((1, 4), {9: ONE}),
    ]
    a = _table(9, rows, "lambda63", basis_names=_generators(6, 3))
    ip = InnerProduct.identity(9) if a.is_rational() else None
    return CatalogEntry("lambda63", {"t": t}, a, ip=ip,
                        provenance=("complex 2-step family of type (6,3), Pfaffian "
                                    "(t^3 + 2)xyz - t(x^3 + y^3 + z^3)"))


@_entry("will63", params=("t",))
def _build_will63(t):
    t = scalar(t)
    if t.y:
        raise ValueError("will63 is a real family; t must be rational")
    rows = [
        ((5, 4), {7: ONE}), ((1, 6), {8: ONE}), ((3, 2), {9: ONE}),
        ((3, 6), {7: t}), ((5, 2), {8: t}), ((1, 4), {9: t}),
        ((1, 2), {7: ONE}),
    ]
    if not t.x > 1:
        logger.info("will63 outside t > 1; no non-existence claim applies")
    a = _table(9, rows, "will63")
    return CatalogEntry("will63", {"t": t}, a, ip=InnerProduct.identity(9),
                        provenance=("real 2-step curve of type (6,3) without nilsoliton metrics "
                                    "for t > 1"))


def catalog_names():
    return sorted(_BUILDERS)


def catalog_params(name):
    if name not in _BUILDERS:
        raise CatalogError(f"unknown catalog entry {name!r}")
    return _BUILDERS[name][1]


def catalog_get(name, **params):
    """Build the named entry; unknown names raise CatalogError, bad params ValueError."""
    if name not in _BUILDERS:
        raise CatalogError(f"unknown catalog entry {name!r}; known: {', '.join(catalog_names())}")
    builder, declared = _BUILDERS[name]
    given = {k: int(v) if k in ("n", "r") and isinstance(v, str) else v
             for k, v in params.items() if v is not None}
    unknown = set(given) - set(declared)
    if unknown:
        raise ValueError(f"{name} takes parameters {list(declared)}, got {sorted(unknown)}")
    if "t" in declared and "t" not in given:
        raise ValueError(f"{name} needs the parameter t")
    entry = builder(**given)
    if entry.flags is not None:
        found = classify_acs(entry.algebra, entry.j).as_dict()
        if found != entry.flags:
            raise CatalogError(f"{name}: declared flags {entry.flags} differ from {found}")
    logger.debug("catalog entry %r", entry)
    return entry
