# twostep/cli/commands.py

"""
Subcommands of the twostep command line.

run_command(argv) parses, runs one pipeline and returns (exit code, Report).
Exit codes: 0 success, 1 a check failed (including the Jacobi identity),
2 usage, parse or precondition errors.
"""

import argparse
import json
import sys

from twostep.acs import (
    anticomplexify,
    classify_acs,
    complexify,
    conjugation_split,
    conjugate_bracket,
    decompose_bracket,
    doubled_metric,
    realify,
)
from twostep.acs.classify import FLAG_NAMES, bracket_sum
from twostep.catalog import catalog_get, catalog_names, catalog_params
from twostep.cli.algebra_file import (
    AlgebraDocument,
    document_from_entry,
    emit,
    format_combination,
    load_document,
    write_document,
)
from twostep.cli.report import (
    EXIT_CHECK_FAILED,
    EXIT_OK,
    EXIT_USAGE,
    Report,
    inputs_digest,
    matrix_strings,
    name_tuple,
)
from twostep.core.errors import JacobiViolation, TwoStepError
from twostep.core.scalars import format_scalar
from twostep.core.utils import Stopwatch, configure_logging, get_logger
from twostep.invariants import (
    BINOMIAL,
    PLAIN,
    absolute_invariant,
    invariant_pair,
    pfaffian_form,
    real_form_obstruction,
)
from twostep.lie import center, derived_subalgebra, nilpotency_step, two_step_presentation
from twostep.lie.algebra import LieAlgebra
from twostep.lie.structure import series_dims
from twostep.metric import (
    InnerProduct,
    curvature,
    einstein_check,
    gray_check,
    hermitian_report,
    minimal_check,
    nilsoliton_check,
    ricci,
    ricci_one_one,
    scalar_curvature,
)

logger = get_logger("twostep.cli")

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")
NORMALIZATIONS = ("unit-determinant", "fixed-scalar-curvature")

# flags that name files or presentation, left out of the recorded options
_UNRECORDED = {"command", "json", "output", "log_level", "log_json", "timings", "config"}


class UsageError(TwoStepError, ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _common_flags():
    common = _Parser(add_help=False)
    common.add_argument("--t", metavar="SCALAR",
                        help="family parameter t for catalog:NAME inputs")
    common.add_argument("--param", action="append", default=None, metavar="K=V",
                        help="other catalog parameter, e.g. n=6 (repeatable)")
    common.add_argument("--json", metavar="PATH", help="write the JSON report to PATH")
    common.add_argument("--output", metavar="PATH", help="write a produced algebra document to PATH")
    common.add_argument("--log-level", default="WARNING", choices=LOG_LEVELS,
                        help="logging level (stderr)")
    common.add_argument("--log-json", action="store_true", help="log records as JSON lines")
    common.add_argument("--timings", action="store_true",
                        help="include wall-clock timings in the JSON report")
    return common


def build_parser():
    common = _common_flags()
    parser = _Parser(prog="twostep",
                     description="Exact computations on 2-step nilpotent Lie algebras "
                                 "with almost complex structures")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    def command(name, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        if name != "catalog":
            p.add_argument("input", help="algebra document path or catalog:NAME")
        return p

    command("check", "validate the bracket and report nilpotency")
    command("classify", "membership of (bracket, J) in the five classes")
    command("decompose", "split the bracket into its ab, C and Cbar parts")
    command("conjugate", "conjugate bracket of a pair with J-invariant derived algebra")
    command("complexify", "complexification of a rational algebra, with J = i")
    command("anticomplexify", "anti-complexification of a rational 2-step algebra")
    command("realify", "real form of an algebra over the Gaussian rationals, with J = i")
    command("pfaffian", "Pfaffian form of a 2-step algebra")
    p = command("invariants", "S and T of the Pfaffian form")
    p.add_argument("--convention", choices=(PLAIN, BINOMIAL), default=BINOMIAL,
                   help="binary quartic coefficient convention")
    command("obstruction", "real-form obstruction from the absolute invariant")
    command("ricci", "Ricci operator of the document metric")
    p = command("soliton", "exact nilsoliton (and minimal) check, optional float search")
    p.add_argument("--search", action="store_true", help="run the numerical search")
    p.add_argument("--restarts", type=int, help="number of restarts")
    p.add_argument("--seed", type=int, help="random seed")
    p.add_argument("--tol", type=float, help="residual tolerance")
    p.add_argument("--max-iters", type=int, help="iterations per restart")
    p.add_argument("--normalization", choices=NORMALIZATIONS, help="scale normalization")
    p.add_argument("--config", metavar="PATH", help="YAML file with search settings")
    p = command("gray", "Gray identities of the curvature tensor")
    p.add_argument("--identity", choices=("g1", "g2", "g3"),
                   help="check one identity (default: all three)")
    command("report", "everything that applies to the input")
    p = command("catalog", "list or show built-in algebras")
    p.add_argument("action", choices=("list", "show"))
    p.add_argument("name", nargs="?", help="catalog entry for 'show'")
    return parser


def _catalog_params(args):
    params = {}
    for item in args.param or ():
        key, sep, value = item.partition("=")
        if not sep or not key.strip():
            raise UsageError(f"--param expects K=V, got {item!r}")
        params[key.strip()] = value.strip()
    if args.t is not None:
        params["t"] = args.t
    return params


def _options(args):
    return {k: v for k, v in sorted(vars(args).items())
            if k not in _UNRECORDED and v is not None and v is not False}


def _needs_j(doc):
    if doc.j is None:
        raise UsageError(f"{doc.name or 'input'} has no almost complex structure (J lines)")
    return doc.j


def _bracket_lines(algebra):
    names = algebra.basis_names
    return [f"[{names[i]}, {names[k]}] = {format_combination(value, names)}"
            for (i, k), value in algebra.constants()]


def _flag_words(flags):
    def word(v):
        return "n/a" if v is None else ("yes" if v else "no")
    return ", ".join(f"{k}={word(v)}" for k, v in flags.items())


def _derived_name(doc, suffix):
    return f"{doc.name or 'algebra'}_{suffix}"


def _produce(report, args, doc):
    """Record and print a produced document; write it with --output."""
    text = emit(doc)
    report.results["document"] = text
    report.say(text.rstrip("\n"))
    if args.output:
        write_document(doc, args.output)


# --- subcommands ---

def cmd_check(args, doc, report):
    a = doc.algebra
    step = nilpotency_step(a)
    report.verdict("lie", True)
    report.verdict("nilpotent", step is not None)
    report.verdict("two_step", step == 2)
    report.results.update({
        "dim": a.dim,
        "field": a.field,
        "basis": list(a.basis_names),
        "brackets": _bracket_lines(a),
        "nilpotency_step": step,
        "lower_central_series": series_dims(a),
        "center_dim": center(a).dim,
        "derived_dim": derived_subalgebra(a).dim,
    })
    if step is None:
        shape = "not nilpotent"
    elif step == 1:
        shape = "abelian"
    else:
        shape = f"{step}-step nilpotent"
    report.say(f"{doc.name or 'input'}: valid Lie algebra, {shape}")


def cmd_classify(args, doc, report):
    j = _needs_j(doc)
    flags = classify_acs(doc.algebra, j)
    names = doc.basis_names
    for name in FLAG_NAMES:
        witness = flags.witnesses.get(name)
        report.verdict(name, getattr(flags, name),
                       name_tuple(witness, names) if witness is not None else None)
    report.results["flags"] = flags.as_dict()
    report.results["consistent"] = flags.consistent()
    report.say(_flag_words(flags.as_dict()))


def cmd_decompose(args, doc, report):
    j = _needs_j(doc)
    a = doc.algebra
    parts = decompose_bracket(a, j)
    expected = ("in_ab", "in_C", "in_Cbar")
    for label, part, flag in zip(("ab_part", "C_part", "Cbar_part"), parts, expected):
        part = _with_names(part, a.basis_names)
        report.results[label] = _bracket_lines(part)
        if getattr(classify_acs(part, j), flag):
            report.verdict(f"{label}_{flag}", True)
        else:
            report.fail(f"{label}_{flag}")
        report.say(f"{label}:")
        report.say("\n".join("  " + line for line in report.results[label]) or "  0")
    if bracket_sum(*parts) == a:
        report.verdict("resum", True)
    else:
        report.fail("resum")


def cmd_conjugate(args, doc, report):
    j = _needs_j(doc)
    split = conjugation_split(doc.algebra, j)
    conj = conjugate_bracket(split).renamed(_derived_name(doc, "conj"))
    before = classify_acs(doc.algebra, j).as_dict()
    after = classify_acs(conj, j).as_dict()
    report.results.update({
        "phi": matrix_strings(split.phi),
        "flags_before": before,
        "flags_after": after,
    })
    report.verdict("exchanges_C_Cbar", before["in_C"] == after["in_Cbar"]
                   and before["in_Cbar"] == after["in_C"])
    out = AlgebraDocument(conj.name, conj.field, conj, j=j)
    _produce(report, args, out)


def _with_names(algebra, names):
    return LieAlgebra(algebra.dim, dict(algebra.constants()), name=algebra.name,
                      basis_names=names)


def _extension(builder, suffix):
    def run(args, doc, report):
        a, j = builder(doc.algebra, name=_derived_name(doc, suffix))
        ip = InnerProduct(doubled_metric(doc.ip.matrix))
        report.results["flags"] = classify_acs(a, j).as_dict()
        _produce(report, args, AlgebraDocument(a.name, a.field, a, j=j, ip=ip))
    return run


def cmd_realify(args, doc, report):
    a, j = realify(doc.algebra, name=_derived_name(doc, "real"))
    report.results["flags"] = classify_acs(a, j).as_dict()
    _produce(report, args, AlgebraDocument(a.name, a.field, a, j=j))


def _form(doc, report):
    pres = two_step_presentation(doc.algebra)
    form = pfaffian_form(pres)
    report.results["type"] = list(pres.type)
    report.results["pfaffian"] = form.format()
    report.results["family"] = form.family
    return form


def cmd_pfaffian(args, doc, report):
    form = _form(doc, report)
    report.say(f"type ({form.p}, {form.q}): Pf = {form.format()}")


def cmd_invariants(args, doc, report):
    form = _form(doc, report)
    pair = invariant_pair(form, args.convention)
    ratio = absolute_invariant(pair)
    report.results["invariants"] = pair.as_dict()
    report.results["absolute_invariant"] = ratio.format()
    report.say(f"S = {format_scalar(pair.s)}")
    report.say(f"T = {format_scalar(pair.t)}")
    report.say(f"S^3/T^2 = {ratio.format()}")


def cmd_obstruction(args, doc, report):
    form = _form(doc, report)
    pair = invariant_pair(form, BINOMIAL)
    verdict = real_form_obstruction(pair)
    report.results["absolute_invariant"] = absolute_invariant(pair).format()
    report.verdict("real_form", verdict)
    report.say(f"real form: {verdict}")


def cmd_ricci(args, doc, report):
    a, ip = doc.algebra, doc.ip
    ric = ricci(a, ip)
    einstein, c = einstein_check(a, ip)
    report.results["ricci"] = matrix_strings(ric)
    report.results["scalar_curvature"] = format_scalar(scalar_curvature(a, ip))
    report.results["einstein_constant"] = format_scalar(c) if einstein else None
    report.verdict("einstein", einstein)
    if doc.j is not None:
        report.results["ricci_one_one"] = matrix_strings(ricci_one_one(a, ip, doc.j))
    report.say("Ric =")
    for row in report.results["ricci"]:
        report.say("  " + " ".join(row))
    report.say(f"scal = {report.results['scalar_curvature']}")


def _search(args, doc, report):
    try:
        from twostep.soliton import CERTIFICATE_FOUND, FlowConfig, load_flow_config, search
    except ModuleNotFoundError:
        raise UsageError("Soliton search not available in this build.")
    cfg = load_flow_config(args.config) if args.config else FlowConfig()
    cfg = cfg.with_overrides(restarts=args.restarts, seed=args.seed, tol=args.tol,
                             max_iters=args.max_iters, normalization=args.normalization)
    trace = search(doc.algebra, cfg)
    report.results["flow_config"] = cfg.as_dict()
    report.results["search"] = trace.as_dict()
    report.verdict("search", trace.verdict)
    report.say(f"search: {trace.verdict} (residual {trace.residual:.3e}"
               f"{', heuristic' if trace.heuristic else ''})")
    return trace.verdict == CERTIFICATE_FOUND


def cmd_soliton(args, doc, report):
    a, ip, j = doc.algebra, doc.ip, doc.j
    cert = nilsoliton_check(a, ip)
    report.verdict("nilsoliton", cert is not None)
    if cert is not None:
        report.results["nilsoliton"] = cert.as_dict()
        report.say(f"nilsoliton: c = {format_scalar(cert.c)}")
    else:
        report.say("nilsoliton: no certificate at this metric")
    if j is not None and j.is_orthogonal_for(ip.matrix):
        minimal = minimal_check(a, ip, j)
        report.verdict("minimal", minimal is not None)
        if minimal is not None:
            report.results["minimal"] = minimal.as_dict()
    found = cert is not None
    if args.search:
        found = _search(args, doc, report) or found
    if not found:
        report.exit_code = EXIT_CHECK_FAILED


def cmd_gray(args, doc, report):
    j = _needs_j(doc)
    r = curvature(doc.algebra, doc.ip)
    which = [args.identity.upper()] if args.identity else ["G1", "G2", "G3"]
    for name in which:
        holds, witness = gray_check(r, j, name)
        key = name.lower()
        if holds:
            report.verdict(key, True)
            report.say(f"{name}: holds")
        else:
            names = name_tuple(witness, doc.basis_names)
            report.fail(key, names)
            report.say(f"{name}: fails at ({', '.join(names)})")


def _hermitian_section(doc, report):
    a, ip, j = doc.algebra, doc.ip, doc.j
    if not a.is_rational() or not j.is_orthogonal_for(ip.matrix):
        report.results["hermitian"] = None
        return
    info = hermitian_report(a, ip, j).as_dict()
    for key in ("g1", "g2", "g3"):
        witness = info["witnesses"].get(key)
        if witness is not None:
            info["witnesses"][key] = name_tuple(witness, doc.basis_names)
    report.results["hermitian"] = info
    report.say("hermitian: " + _flag_words(info["flags"]))


def cmd_report(args, doc, report):
    a = doc.algebra
    with Stopwatch(report.timings, "structure"):
        cmd_check(args, doc, report)
    step = report.results["nilpotency_step"]
    if doc.j is not None:
        with Stopwatch(report.timings, "classify"):
            flags = classify_acs(a, doc.j)
            report.results["flags"] = flags.as_dict()
            report.say("classes: " + _flag_words(flags.as_dict()))
        with Stopwatch(report.timings, "hermitian"):
            _hermitian_section(doc, report)
    if a.is_rational() and step is not None:
        with Stopwatch(report.timings, "ricci"):
            report.results["ricci"] = matrix_strings(ricci(a, doc.ip))
            cert = nilsoliton_check(a, doc.ip)
            report.verdict("nilsoliton", cert is not None)
            report.results["nilsoliton"] = cert.as_dict() if cert is not None else None
    if step == 2:
        with Stopwatch(report.timings, "pfaffian"):
            form = _form(doc, report)
            report.say(f"type ({form.p}, {form.q}): Pf = {form.format()}")
            if form.family is not None:
                pair = invariant_pair(form, BINOMIAL)
                report.results["invariants"] = pair.as_dict()
                report.verdict("real_form", real_form_obstruction(pair))


def cmd_catalog(args, report):
    if args.action == "list":
        entries = {name: list(catalog_params(name)) for name in catalog_names()}
        report.results["entries"] = entries
        for name, params in entries.items():
            report.say(f"{name}({', '.join(params)})" if params else name)
        report.digest = inputs_digest(json.dumps(entries, sort_keys=True))
        return
    if not args.name:
        raise UsageError("catalog show needs a NAME")
    entry = catalog_get(args.name, **_catalog_params(args))
    doc = document_from_entry(entry)
    report.digest = inputs_digest(emit(doc))
    report.results["entry"] = entry.as_dict()
    report.say(f"# {entry.provenance}")
    _produce(report, args, doc)


COMMANDS = {
    "check": cmd_check,
    "classify": cmd_classify,
    "decompose": cmd_decompose,
    "conjugate": cmd_conjugate,
    "complexify": _extension(complexify, "c"),
    "anticomplexify": _extension(anticomplexify, "ac"),
    "realify": cmd_realify,
    "pfaffian": cmd_pfaffian,
    "invariants": cmd_invariants,
    "obstruction": cmd_obstruction,
    "ricci": cmd_ricci,
    "soliton": cmd_soliton,
    "gray": cmd_gray,
    "report": cmd_report,
}


def _dispatch(args, report):
    if args.command == "catalog":
        cmd_catalog(args, report)
        return
    params = _catalog_params(args)
    doc = load_document(args.input, params)
    report.digest = inputs_digest(emit(doc))
    COMMANDS[args.command](args, doc, report)


def run_command(argv, out=None, err=None):
    """Run one subcommand; returns (exit code, Report or None for --help)."""
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        parser.print_usage(err)
        print(f"twostep: error: {e}", file=err)
        report = Report(None)
        report.results["error"] = str(e)
        report.exit_code = EXIT_USAGE
        return EXIT_USAGE, report
    except SystemExit as e:
        return (e.code or EXIT_OK), None

    configure_logging(args.log_level, args.log_json)
    report = Report(args.command, _options(args))
    try:
        with Stopwatch(report.timings, "total"):
            _dispatch(args, report)
    except JacobiViolation as e:
        report.fail("lie", [k + 1 for k in e.triple])
        report.results["cyclic_sum"] = [format_scalar(x) for x in e.cyclic_sum]
        report.say(f"not a Lie algebra: {e}")
    except (TwoStepError, ValueError, KeyError) as e:
        logger.debug("command failed", exc_info=True)
        report.results["error"] = str(e)
        report.exit_code = EXIT_USAGE
        print(f"twostep: error: {e}", file=err)

    if report.lines:
        out.write(report.render())
    if args.json:
        report.write_json(args.json, with_timings=args.timings)
    return report.exit_code, report
