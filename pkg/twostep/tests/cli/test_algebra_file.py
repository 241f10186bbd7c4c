import pytest

from twostep.acs import complexify
from twostep.catalog import catalog_get, catalog_names
from twostep.cli import (
    AlgebraDocument,
    document_from_entry,
    emit,
    load_document,
    parse_algebra_file,
)
from twostep.core.errors import AlgebraFileError, CatalogError, JacobiViolation
from twostep.core.matrices import MatrixExact
from twostep.core.scalars import ZERO, gaussian, scalar

H3 = """\
# real Heisenberg algebra
name h3
dim 3
bracket X1 X2 -> X3
"""

SAMPLE_PARAMS = {
    "lambda82": {"t": "1+1i"},
    "lambda63": {"t": 2},
    "will63": {"t": 3},
    "abelian": {"n": 6},
    "heisenberg": {"r": 2},
}


def test_minimal_document():
    doc = parse_algebra_file(H3)
    assert doc.name == "h3"
    assert doc.field == "Q"
    assert doc.basis_names == ("X1", "X2", "X3")
    assert doc.algebra == catalog_get("heisenberg3").algebra
    assert doc.j is None
    assert doc.ip.matrix == MatrixExact.identity(3)
    assert doc.params == {}


def test_reversed_bracket_is_negated():
    doc = parse_algebra_file("dim 3\nbracket X2 X1 -> -X3\n")
    assert doc.algebra == catalog_get("heisenberg3").algebra


def test_gaussian_coefficients():
    text = "field QI\ndim 3\nbasis A B C\nbracket A B -> (1+1i)*C - 2i*C + 1/2*A\n"
    doc = parse_algebra_file(text)
    assert doc.algebra.bracket(0, 1) == (scalar("1/2"), ZERO, gaussian(1, -1))
    assert doc.algebra.field == "QI"


@pytest.mark.parametrize("text, line", [
    ("dim 3\nbracket X1 X1 -> X2\n", 2),
    ("dim 3\nbracket X1 X2 -> X3\nbracket X2 X1 -> X3\n", 3),
    ("dim 3\nbracket X1 X2 -> X3\nbracket X1 X2 -> X3\n", 3),
    ("dim 3\nbracket X1 X4 -> X3\n", 2),
    ("dim 3\nbracket X1 X2 -> 3 X3\n", 2),
    ("dim 3\nbracket X1 X2 -> (1+1i*X3\n", 2),
    ("dim 3\n\nbracket X1 X2 -> 1i*X3\n", 3),
    ("dim 3\nbasis A B\n", 2),
    ("dim 3\nbasis A A B\n", 2),
    ("dim three\n", 1),
    ("dim 3\nfield R\n", 2),
    ("dim 3\nlabel h3\n", 2),
    ("dim 2\nJ X1 -> X2\nJ X2 -> X1\n", 2),
    ("dim 2\nJ X1 -> X2\n", 2),
    ("dim 2\nmetric row 1 0\nmetric row 0 -1\n", 2),
    ("dim 2\nmetric row 1 0\n", 2),
    ("dim 2\nparam t 2\n", 2),
    ("dim 2\ndim 3\n", 2),
])
def test_errors_carry_line_numbers(text, line):
    with pytest.raises(AlgebraFileError) as info:
        parse_algebra_file(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}: ")


def test_missing_dim():
    with pytest.raises(AlgebraFileError):
        parse_algebra_file("name empty\n")


def test_jacobi_failure_is_surfaced():
    with pytest.raises(JacobiViolation) as info:
        parse_algebra_file("dim 3\nbracket X1 X2 -> X3\nbracket X3 X1 -> X1\n")
    assert info.value.triple == (0, 1, 2)


def test_structure_metric_and_params():
    text = """\
name h3r
dim 4
bracket X1 X2 -> X3
J X1 -> X2
J X2 -> -X1
J X3 -> X4
J X4 -> -X3
metric row 2 0 0 0
metric row 0 2 0 0
metric row 0 0 1 0
metric row 0 0 0 1
param t = 1+1i
"""
    doc = parse_algebra_file(text)
    entry = catalog_get("h3r")
    assert doc.algebra == entry.algebra
    assert doc.j == entry.j
    assert doc.ip.matrix == MatrixExact.diag([2, 2, 1, 1])
    assert doc.params == {"t": gaussian(1, 1)}


def test_catalog_documents_round_trip():
    for name in catalog_names():
        entry = catalog_get(name, **SAMPLE_PARAMS.get(name, {}))
        doc = document_from_entry(entry)
        text = emit(doc)
        again = parse_algebra_file(text)
        assert again == doc, name
        assert emit(again) == text


def test_emitted_lambda82_keeps_gaussian_parameter():
    text = emit(document_from_entry(catalog_get("lambda82", t="1+1i")))
    assert "param t = 1+1i" in text
    assert "field QI" in text
    assert "(1+1i)*Z2" in text


def test_emit_complexification():
    a, j = complexify(catalog_get("heisenberg3").algebra, name="h3c")
    doc = parse_algebra_file(emit(AlgebraDocument("h3c", a.field, a, j=j)))
    assert doc.algebra == a and doc.j == j
    assert doc.basis_names[:2] == ("X1", "iX1")


def test_load_document(tmp_path):
    path = tmp_path / "h3.alg"
    path.write_text(H3)
    assert load_document(str(path)).algebra == catalog_get("heisenberg3").algebra
    doc = load_document("catalog:lambda82", {"t": "2"})
    assert doc.name == "lambda82" and doc.params == {"t": scalar(2)}
    with pytest.raises(CatalogError):
        load_document("catalog:nope")
    with pytest.raises(AlgebraFileError):
        load_document(str(tmp_path / "missing.alg"))
