import io
import json

import pytest

from twostep import FORMAT_VERSION, __version__
from twostep.acs import classify_acs, complexify
from twostep.catalog import catalog_get, catalog_names
from twostep.cli import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, load_document, run_command

H3 = "name h3\ndim 3\nbracket X1 X2 -> X3\n"
REPORT_KEYS = {"tool_version", "format_version", "command", "options", "inputs_digest",
               "verdicts", "witnesses", "timings", "results", "exit_code"}


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code, report = run_command(list(argv), out=out, err=err)
    return code, report, out.getvalue(), err.getvalue()


@pytest.fixture
def h3_file(tmp_path):
    path = tmp_path / "h3.alg"
    path.write_text(H3)
    return str(path)


def test_check(h3_file):
    code, report, out, _ = run("check", h3_file)
    assert code == EXIT_OK
    assert "valid Lie algebra, 2-step nilpotent" in out
    assert report.verdicts == {"lie": True, "nilpotent": True, "two_step": True}
    assert report.results["lower_central_series"] == (3, 1, 0)


def test_check_descriptions():
    assert "abelian" in run("check", "catalog:abelian")[2]
    assert "not nilpotent" in run("check", "catalog:aff_c")[2]


def test_check_jacobi_failure(tmp_path):
    path = tmp_path / "bad.alg"
    path.write_text("dim 3\nbracket X1 X2 -> X3\nbracket X3 X1 -> X1\n")
    code, report, out, _ = run("check", str(path))
    assert code == EXIT_CHECK_FAILED
    assert report.verdicts["lie"] is False
    assert report.witnesses["lie"] == [1, 2, 3]
    assert "not a Lie algebra" in out


def test_usage_and_parse_errors(tmp_path):
    assert run()[0] == EXIT_USAGE
    assert run("frobnicate", "catalog:iwasawa")[0] == EXIT_USAGE
    assert run("gray", "catalog:iwasawa", "--identity", "g4")[0] == EXIT_USAGE
    bad = tmp_path / "bad.alg"
    bad.write_text("dim 3\nbracket X1 X1 -> X2\n")
    code, report, _, err = run("check", str(bad))
    assert code == EXIT_USAGE
    assert "line 2" in err and "line 2" in report.results["error"]
    assert run("check", str(tmp_path / "missing.alg"))[0] == EXIT_USAGE
    assert run("check", "catalog:nope")[0] == EXIT_USAGE
    assert run("check", "catalog:lambda82")[0] == EXIT_USAGE
    assert run("check", "catalog:abelian", "--param", "n")[0] == EXIT_USAGE


def test_help_exits_cleanly(capsys):
    code, report = run_command(["--help"])
    assert code == EXIT_OK and report is None
    assert "classify" in capsys.readouterr().out


def test_invariants_lambda82_plain():
    code, report, out, _ = run("invariants", "catalog:lambda82", "--t", "2", "--convention", "plain")
    assert code == EXIT_OK
    assert report.results["invariants"]["S"] == "13"
    assert report.results["invariants"]["T"] == "-6"
    assert report.results["type"] == [8, 2]
    assert "S = 13" in out and "T = -6" in out


def test_obstruction():
    code, report, _, _ = run("obstruction", "catalog:lambda82", "--t", "1+1i")
    assert code == EXIT_OK
    assert report.verdicts["real_form"] == "no-real-form"
    assert run("obstruction", "catalog:lambda82", "--t", "2")[1].verdicts["real_form"] \
        == "inconclusive"
    assert run("obstruction", "catalog:heisenberg3")[0] == EXIT_USAGE


def test_pfaffian():
    code, report, _, _ = run("pfaffian", "catalog:lambda63", "--t", "1")
    assert code == EXIT_OK
    assert report.results["type"] == [6, 3]
    assert report.results["family"] == "ternary-cubic"
    assert run("pfaffian", "catalog:aff_c")[0] == EXIT_USAGE


def test_gray_negative_control():
    code, report, out, _ = run("gray", "catalog:aff_c", "--identity", "g2")
    assert code == EXIT_CHECK_FAILED
    assert report.verdicts == {"g2": False}
    witness = report.witnesses["g2"]
    assert len(witness) == 4
    assert set(witness) <= {"X1", "iX1", "X2", "iX2"}
    assert "G2: fails" in out


def test_gray_iwasawa():
    code, report, out, _ = run("gray", "catalog:iwasawa", "--identity", "g2")
    assert code == EXIT_OK
    assert report.verdicts == {"g2": True}
    assert run("gray", "catalog:heisenberg3")[0] == EXIT_USAGE


def test_classify():
    code, report, _, _ = run("classify", "catalog:iwasawa")
    assert code == EXIT_OK
    assert report.results["flags"] == catalog_get("iwasawa").flags
    assert report.witnesses["in_ab"] and report.witnesses["in_Cbar"]
    assert run("classify", "catalog:heisenberg3")[0] == EXIT_USAGE


def test_decompose():
    code, report, _, _ = run("decompose", "catalog:iwasawa")
    assert code == EXIT_OK
    assert all(report.verdicts.values())
    assert report.results["ab_part"] == [] and report.results["Cbar_part"] == []
    assert report.results["C_part"][0] == "[X1, X2] = X3"


def test_complexify_writes_document(tmp_path):
    target = tmp_path / "h3c.alg"
    code, report, _, _ = run("complexify", "catalog:heisenberg3", "--output", str(target))
    assert code == EXIT_OK
    assert report.results["flags"]["in_C"]
    doc = load_document(str(target))
    a, j = complexify(catalog_get("heisenberg3").algebra)
    assert doc.algebra == a and doc.j == j
    assert doc.name == "heisenberg3_c"


def test_anticomplexify_then_conjugate(tmp_path):
    target = tmp_path / "ac.alg"
    assert run("anticomplexify", "catalog:heisenberg3", "--output", str(target))[0] == EXIT_OK
    code, report, _, _ = run("conjugate", str(target))
    assert code == EXIT_OK
    assert report.verdicts["exchanges_C_Cbar"]
    assert report.results["flags_before"]["in_Cbar"]
    assert report.results["flags_after"]["in_C"]
    assert run("complexify", "catalog:lambda82", "--t", "1+1i")[0] == EXIT_USAGE


def test_realify(tmp_path):
    path = tmp_path / "h3i.alg"
    path.write_text("name h3i\nfield QI\ndim 3\nbracket X1 X2 -> 1i*X3\n")
    code, report, _, _ = run("realify", str(path))
    assert code == EXIT_OK
    assert report.results["flags"]["in_C"]
    assert "dim 6" in report.results["document"]


def test_ricci():
    code, report, out, _ = run("ricci", "catalog:heisenberg3")
    assert code == EXIT_OK
    assert report.results["ricci"] == [["-1/2", "0", "0"], ["0", "-1/2", "0"], ["0", "0", "1/2"]]
    assert report.results["scalar_curvature"] == "-1/2"
    assert report.verdicts["einstein"] is False
    assert "scal = -1/2" in out


def test_soliton_exact():
    code, report, out, _ = run("soliton", "catalog:heisenberg3")
    assert code == EXIT_OK
    assert report.results["nilsoliton"]["c"] == "-3/2"
    assert "c = -3/2" in out
    code, report, _, _ = run("soliton", "catalog:iwasawa")
    assert code == EXIT_OK and report.verdicts["minimal"]
    assert run("soliton", "catalog:will63", "--t", "2")[0] == EXIT_CHECK_FAILED
    assert run("soliton", "catalog:aff_c")[0] == EXIT_USAGE


def test_soliton_search(tmp_path):
    config = tmp_path / "flow.yaml"
    config.write_text("restarts: 4\nmax-iters: 200\nworkers: 1\n")
    code, report, out, _ = run("soliton", "catalog:heisenberg3", "--search", "--config",
                               str(config), "--restarts", "1")
    assert code == EXIT_OK
    assert report.verdicts["search"] == "certificate-found"
    assert report.results["flow_config"]["restarts"] == 1
    assert report.results["flow_config"]["max_iters"] == 200
    assert "certificate-found" in out


def test_catalog_commands(tmp_path):
    code, report, out, _ = run("catalog", "list")
    assert code == EXIT_OK
    assert set(report.results["entries"]) == set(catalog_names())
    assert "lambda82(t)" in out

    target = tmp_path / "l82.alg"
    code, report, out, _ = run("catalog", "show", "lambda82", "--t", "2", "--output", str(target))
    assert code == EXIT_OK
    assert report.results["entry"]["params"] == {"t": "2"}
    assert "param t = 2" in out
    assert load_document(str(target)).algebra == catalog_get("lambda82", t=2).algebra

    assert run("catalog", "show", "abelian", "--param", "n=2")[0] == EXIT_OK
    assert run("catalog", "show")[0] == EXIT_USAGE
    assert run("catalog", "show", "lambda82")[0] == EXIT_USAGE


def test_report_iwasawa_json_is_stable(tmp_path):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    assert run("report", "catalog:iwasawa", "--json", str(first))[0] == EXIT_OK
    assert run("report", "catalog:iwasawa", "--json", str(second))[0] == EXIT_OK
    assert first.read_bytes() == second.read_bytes()
    data = json.loads(first.read_text())
    assert set(data) == REPORT_KEYS
    assert data["tool_version"] == __version__
    assert data["format_version"] == FORMAT_VERSION
    assert data["command"] == "report"
    assert data["timings"] == {}
    assert data["results"]["flags"] == catalog_get("iwasawa").flags
    assert data["results"]["hermitian"]["flags"]["g2"] is True
    assert data["results"]["nilsoliton"]["c"] == "-3"
    assert data["verdicts"]["two_step"] is True


def test_invariants_json_is_stable(tmp_path):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for path in paths:
        run("invariants", "catalog:lambda82", "--t", "2", "--json", str(path))
    assert paths[0].read_bytes() == paths[1].read_bytes()
    data = json.loads(paths[0].read_text())
    assert data["options"] == {"convention": "binomial", "input": "catalog:lambda82", "t": "2"}
    assert len(data["inputs_digest"]) == 64


def test_timings_flag(tmp_path):
    path = tmp_path / "t.json"
    run("report", "catalog:heisenberg3", "--json", str(path), "--timings")
    timings = json.loads(path.read_text())["timings"]
    assert "total" in timings and "structure" in timings


def test_report_on_non_nilpotent():
    code, report, _, _ = run("report", "catalog:aff_c")
    assert code == EXIT_OK
    assert "ricci" not in report.results
    assert report.results["hermitian"]["flags"]["g2"] is False
    flags = classify_acs(catalog_get("aff_c").algebra, catalog_get("aff_c").j)
    assert report.results["flags"] == flags.as_dict()


def test_digest_matches_document(h3_file, tmp_path):
    from_file = run("check", h3_file)[1].digest
    copy = tmp_path / "copy.alg"
    copy.write_text("# same algebra\n" + H3)
    assert run("check", str(copy))[1].digest == from_file


def test_report_marks_skt_not_applicable():
    code, report, out, _ = run("report", "catalog:anti_iwasawa")
    assert code == EXIT_OK
    assert report.results["hermitian"]["flags"]["skt"] is None
    assert "skt" not in report.results["hermitian"]["witnesses"]
    assert "skt=n/a" in out
