# twostep/cli/algebra_file.py

"""
Line-oriented algebra documents.

    # comment
    name h3
    field Q
    dim 3
    basis X1 X2 X3
    bracket X1 X2 -> X3
    J X1 -> X2
    metric identity            (or `metric row ...` once per row)
    param t = 1+1i

Linear combinations are `c*ID + c*ID ...`; a coefficient with both a real
and an imaginary part is written in parentheses, `(1+1i)*Z1`. A combination
may also be the single literal 0. Unlisted brackets are zero.
"""

import re

from twostep.acs.structures import AlmostComplexStructure
from twostep.catalog.entries import catalog_get
from twostep.core.errors import AlgebraFileError, NotAlmostComplex, NotPositiveDefinite
from twostep.core.matrices import MatrixExact
from twostep.core.scalars import ONE, ZERO, format_scalar, parse_scalar, scalar
from twostep.core.utils import get_logger
from twostep.lie.algebra import FIELD_GAUSSIAN, FIELD_RATIONAL, validate_lie
from twostep.metric.inner_product import InnerProduct

logger = get_logger("twostep.cli")

CATALOG_PREFIX = "catalog:"
FIELDS = (FIELD_RATIONAL, FIELD_GAUSSIAN)

_ID = r"[A-Za-z_][A-Za-z0-9_']*"
_ID_RE = re.compile(rf"^{_ID}$")
_TERM_RE = re.compile(rf"^(?:(\([^()]*\)|[^*()]+?)\s*\*\s*)?({_ID})$")
_ARROW_RE = re.compile(r"^(.*?)\s*->\s*(.*)$")
_PARAM_RE = re.compile(rf"^({_ID})\s*=\s*(.+)$")


class AlgebraDocument:
    """A parsed document: validated algebra plus optional J, metric and params."""

    __slots__ = ("name", "field", "algebra", "j", "ip", "params")

    def __init__(self, name, field, algebra, j=None, ip=None, params=None):
        self.name = name
        self.field = field
        self.algebra = algebra
        self.j = j
        self.ip = ip if ip is not None else InnerProduct.identity(algebra.dim)
        self.params = dict(params or {})

    @property
    def dim(self):
        return self.algebra.dim

    @property
    def basis_names(self):
        return self.algebra.basis_names

    def __eq__(self, other):
        if not isinstance(other, AlgebraDocument):
            return NotImplemented
        return (self.name == other.name
                and self.field == other.field
                and self.basis_names == other.basis_names
                and self.algebra == other.algebra
                and self.j == other.j
                and self.ip.matrix == other.ip.matrix
                and self.params == other.params)

    __hash__ = None

    def __repr__(self):
        return f"AlgebraDocument({self.name}, dim={self.dim}, field={self.field})"


class _Statement:
    __slots__ = ("line", "keyword", "rest")

    def __init__(self, line, keyword, rest):
        self.line = line
        self.keyword = keyword
        self.rest = rest


def _statements(text):
    out = []
    for number, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        keyword, *rest = body.split(None, 1)
        out.append(_Statement(number, keyword, rest[0].strip() if rest else ""))
    return out


def _single(statements, keyword):
    found = [s for s in statements if s.keyword == keyword]
    if len(found) > 1:
        raise AlgebraFileError(found[1].line, f"'{keyword}' given more than once")
    return found[0] if found else None


def _scalar(line, text):
    try:
        return parse_scalar(text)
    except ValueError as e:
        raise AlgebraFileError(line, str(e)) from e


def _split_terms(line, text):
    """Split at top-level + and -, keeping each sign with its term."""
    terms, current, depth = [], "", 0
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise AlgebraFileError(line, f"unbalanced parentheses in {text!r}")
        if ch in "+-" and depth == 0 and current.strip().lstrip("+-").strip():
            terms.append(current.strip())
            current = ""
        current += ch
    if depth:
        raise AlgebraFileError(line, f"unbalanced parentheses in {text!r}")
    if current.strip():
        terms.append(current.strip())
    return terms


def parse_combination(line, text, index):
    """Coordinates of `c*ID + ...` over the basis given by `index` (name -> position)."""
    coords = [ZERO] * len(index)
    text = text.strip()
    if not text:
        raise AlgebraFileError(line, "empty linear combination")
    if text == "0":
        return tuple(coords)
    for term in _split_terms(line, text):
        sign, body = 1, term
        while body[:1] in ("+", "-"):
            if body[0] == "-":
                sign = -sign
            body = body[1:].strip()
        match = _TERM_RE.match(body)
        if not match:
            raise AlgebraFileError(line, f"cannot read term {term!r}")
        coeff_text, name = match.groups()
        if name not in index:
            raise AlgebraFileError(line, f"unknown basis element {name!r}")
        if coeff_text is None:
            coeff = _scalar(line, "1")
        else:
            coeff = _scalar(line, coeff_text.strip().strip("()"))
        coords[index[name]] += coeff if sign > 0 else -coeff
    return tuple(coords)


def _arrow(statement):
    match = _ARROW_RE.match(statement.rest)
    if not match:
        raise AlgebraFileError(statement.line, f"expected '{statement.keyword} ... -> combination'")
    return match.group(1).split(), match.group(2)


def _header(statements):
    name_stmt = _single(statements, "name")
    name = None
    if name_stmt is not None:
        if not _ID_RE.match(name_stmt.rest):
            raise AlgebraFileError(name_stmt.line, f"invalid name {name_stmt.rest!r}")
        name = name_stmt.rest

    field_stmt = _single(statements, "field")
    field = FIELD_RATIONAL
    if field_stmt is not None:
        if field_stmt.rest not in FIELDS:
            raise AlgebraFileError(field_stmt.line, f"field must be one of {FIELDS}")
        field = field_stmt.rest

    dim_stmt = _single(statements, "dim")
    if dim_stmt is None:
        raise AlgebraFileError(0, "missing 'dim' statement")
    if not dim_stmt.rest.isdigit() or int(dim_stmt.rest) < 1:
        raise AlgebraFileError(dim_stmt.line, f"dim must be a positive integer, got {dim_stmt.rest!r}")
    dim = int(dim_stmt.rest)

    basis_stmt = _single(statements, "basis")
    if basis_stmt is None:
        basis = tuple(f"X{k + 1}" for k in range(dim))
    else:
        basis = tuple(basis_stmt.rest.split())
        if len(basis) != dim:
            raise AlgebraFileError(basis_stmt.line, f"{len(basis)} basis names for dim {dim}")
        for b in basis:
            if not _ID_RE.match(b):
                raise AlgebraFileError(basis_stmt.line, f"invalid basis name {b!r}")
        if len(set(basis)) != dim:
            raise AlgebraFileError(basis_stmt.line, "basis names must be distinct")
    return name, field, dim, basis


def _brackets(statements, index, field):
    raw, seen = {}, {}
    for s in statements:
        if s.keyword != "bracket":
            continue
        names, combo = _arrow(s)
        if len(names) != 2:
            raise AlgebraFileError(s.line, "a bracket needs exactly two generators")
        for b in names:
            if b not in index:
                raise AlgebraFileError(s.line, f"unknown basis element {b!r}")
        if names[0] == names[1]:
            raise AlgebraFileError(s.line, f"bracket of {names[0]} with itself")
        i, k = index[names[0]], index[names[1]]
        pair = (min(i, k), max(i, k))
        if pair in seen:
            raise AlgebraFileError(s.line, f"bracket of {names[0]}, {names[1]} already given "
                                           f"on line {seen[pair]}")
        seen[pair] = s.line
        value = parse_combination(s.line, combo, index)
        if field == FIELD_RATIONAL and any(x.y for x in value):
            raise AlgebraFileError(s.line, "Gaussian coefficient in a field Q document")
        raw[(i, k)] = value
    return raw


def _structure(statements, index, dim):
    lines = [s for s in statements if s.keyword == "J"]
    if not lines:
        return None
    columns = {}
    for s in lines:
        names, combo = _arrow(s)
        if len(names) != 1 or names[0] not in index:
            raise AlgebraFileError(s.line, "expected 'J ID -> combination'")
        k = index[names[0]]
        if k in columns:
            raise AlgebraFileError(s.line, f"J {names[0]} given twice")
        columns[k] = parse_combination(s.line, combo, index)
    missing = [name for name, k in index.items() if k not in columns]
    if missing:
        raise AlgebraFileError(lines[0].line, f"J is not given on {', '.join(missing)}")
    try:
        return AlmostComplexStructure(MatrixExact.from_columns([columns[k] for k in range(dim)], dim))
    except NotAlmostComplex as e:
        raise AlgebraFileError(lines[0].line, str(e)) from e


def _metric(statements, dim):
    lines = [s for s in statements if s.keyword == "metric"]
    if not lines:
        return None
    if len(lines) == 1 and lines[0].rest == "identity":
        return InnerProduct.identity(dim)
    rows = []
    for s in lines:
        word, _, values = s.rest.partition(" ")
        if word != "row":
            raise AlgebraFileError(s.line, "expected 'metric identity' or 'metric row ...'")
        row = [_scalar(s.line, v) for v in values.split()]
        if len(row) != dim:
            raise AlgebraFileError(s.line, f"metric row of length {len(row)} for dim {dim}")
        rows.append(row)
    if len(rows) != dim:
        raise AlgebraFileError(lines[-1].line, f"{len(rows)} metric rows for dim {dim}")
    try:
        return InnerProduct(MatrixExact(rows))
    except NotPositiveDefinite as e:
        raise AlgebraFileError(lines[0].line, str(e)) from e


def _params(statements):
    params = {}
    for s in statements:
        if s.keyword != "param":
            continue
        match = _PARAM_RE.match(s.rest)
        if not match:
            raise AlgebraFileError(s.line, "expected 'param ID = scalar'")
        key, value = match.groups()
        if key in params:
            raise AlgebraFileError(s.line, f"param {key} given twice")
        params[key] = _scalar(s.line, value)
    return params


KEYWORDS = ("name", "field", "dim", "basis", "bracket", "J", "metric", "param")


def parse_algebra_file(text):
    """
    AlgebraDocument from document text. Syntax errors raise AlgebraFileError
    with the offending line; a bracket failing the Jacobi identity raises
    JacobiViolation.
    """
    statements = _statements(text)
    for s in statements:
        if s.keyword not in KEYWORDS:
            raise AlgebraFileError(s.line, f"unknown statement {s.keyword!r}")
    name, field, dim, basis = _header(statements)
    index = {b: k for k, b in enumerate(basis)}
    raw = _brackets(statements, index, field)
    j = _structure(statements, index, dim)
    ip = _metric(statements, dim)
    params = _params(statements)
    algebra = validate_lie(raw, dim=dim, name=name, basis_names=basis)
    logger.debug("parsed %s: %d brackets", name, len(raw))
    return AlgebraDocument(name, field, algebra, j=j, ip=ip, params=params)


def _format_coefficient(c):
    text = format_scalar(c)
    return f"({text})" if c.x and c.y else text


def format_combination(coords, names):
    parts = []
    for c, name in zip(coords, names):
        if not c:
            continue
        negative = c.x < 0 if c.x else c.y < 0
        magnitude = -c if negative else c
        term = name if magnitude == ONE else f"{_format_coefficient(magnitude)}*{name}"
        if not parts:
            parts.append(f"-{term}" if negative else term)
        else:
            parts.append(f"- {term}" if negative else f"+ {term}")
    return " ".join(parts) if parts else "0"


def emit(doc):
    """Document text that parse_algebra_file reads back to an equal document."""
    names = doc.basis_names
    lines = []
    if doc.name:
        lines.append(f"name {doc.name}")
    lines.append(f"field {doc.field}")
    lines.append(f"dim {doc.dim}")
    lines.append("basis " + " ".join(names))
    for (i, k), value in doc.algebra.constants():
        lines.append(f"bracket {names[i]} {names[k]} -> {format_combination(value, names)}")
    if doc.j is not None:
        for k, column in enumerate(doc.j.images()):
            lines.append(f"J {names[k]} -> {format_combination(column, names)}")
    if doc.ip.matrix.is_identity():
        lines.append("metric identity")
    else:
        for row in doc.ip.matrix.entries:
            lines.append("metric row " + " ".join(format_scalar(x) for x in row))
    for key, value in sorted(doc.params.items()):
        lines.append(f"param {key} = {format_scalar(value)}")
    return "\n".join(lines) + "\n"


def document_from_entry(entry):
    algebra = entry.algebra
    name = entry.name
    params = {k: scalar(v) for k, v in entry.params.items()}
    return AlgebraDocument(name, algebra.field, algebra.renamed(name), j=entry.j, ip=entry.ip,
                           params=params)


def load_document(source, params=None):
    """
    Read `catalog:NAME` (built with `params`) or a document file path.
    """
    if source.startswith(CATALOG_PREFIX):
        entry = catalog_get(source[len(CATALOG_PREFIX):], **(params or {}))
        return document_from_entry(entry)
    if params:
        logger.warning(f"Ignoring catalog parameters for document file '{source}'")
    try:
        with open(source, 'r', encoding="utf-8") as file:
            text = file.read()
    except OSError as e:
        raise AlgebraFileError(0, f"cannot read '{source}': {e.strerror}") from e
    return parse_algebra_file(text)


def write_document(doc, path):
    with open(path, 'w', encoding="utf-8") as file:
        file.write(emit(doc))
    logger.info(f"Wrote {doc.name or 'algebra'} to '{path}'")

