"""Command line front end.

Exit codes: 0 success, 1 semantic failure or mismatch, 2 usage or parse
error.
"""

import json
import time

import click

from . import __version__
from .autbound import aut_q_bound, detect_exceptions
from .errors import IsoprodError, ParseError, UsageError
from .families import FAMILIES, FAMILY_NAMES, get_family
from .group import center
from .homology import SurfaceHomology
from .invariants import surface_invariants
from .parsing import load_datum
from .presentation import disjoint, validate_vector

SCHEMA = "isoprod-report/1"


class Failure(Exception):
    """A semantic failure: reported, exit code 1."""


def _emit(ctx, command, results, text_lines):
    if ctx.obj["json"]:
        doc = {"schema": SCHEMA, "version": __version__, "command": command, "results": results}
        click.echo(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            click.echo(line)


def _load(family, path):
    if family and path:
        raise click.UsageError("use either --family or --input, not both")
    if path:
        try:
            return load_datum(path), None
        except OSError as exc:
            raise click.UsageError(f"cannot read {path}: {exc.strerror}")
    if not family:
        raise click.UsageError("one of --family or --input is required")
    try:
        rec = get_family(family)
    except UsageError as exc:
        raise click.UsageError(str(exc))
    return rec.datum(), rec


def _vec_names(V):
    return [V.group.element_name(x) for x in V.entries]


def _types(V):
    return "[" + ",".join(map(str, V.orders)) + "]"


def _group_title(datum, rec):
    G = datum.group
    title = rec.title if rec else (G.name or "G")
    return f"{title} (order {G.order})"


def _set_flag(key):
    def callback(ctx, param, value):
        if value:
            ctx.ensure_object(dict)[key] = True
        return value
    return callback


def output_options(f):
    f = click.option("--json", "as_json", is_flag=True, expose_value=False,
                     callback=_set_flag("json"), help="Machine-readable output.")(f)
    f = click.option("--verbose", "-v", is_flag=True, expose_value=False,
                     callback=_set_flag("verbose"), help="Extra detail and timings.")(f)
    return f


def datum_options(f):
    f = output_options(f)
    f = click.option("--family", "family", metavar="NAME",
                     help=f"Built-in family: {', '.join(FAMILY_NAMES)}.")(f)
    f = click.option("--input", "path", metavar="FILE", type=click.Path(dir_okay=False),
                     help="Datum file with [group], [vector1], [vector2] sections.")(f)
    return f


@click.group()
@click.version_option(__version__, prog_name="isoprod")
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")
@click.option("--verbose", "-v", is_flag=True, help="Extra detail and timings.")
@click.pass_context
def cli(ctx, as_json, verbose):
    """Invariants, first homology and automorphism bounds of surfaces
    (C1 x C2)/G."""
    ctx.ensure_object(dict)
    ctx.obj["json"] = ctx.obj.get("json", False) or as_json
    ctx.obj["verbose"] = ctx.obj.get("verbose", False) or verbose


# -- validate -----------------------------------------------------------------


def validate_datum(datum):
    failures = []
    for label, V in (("vector1", datum.V1), ("vector2", datum.V2)):
        for msg in validate_vector(V).failures:
            failures.append(f"{label}: {msg}")
    result = {"valid": False, "failures": failures}
    if failures:
        return result
    if not disjoint(datum.V1, datum.V2):
        failures.append("stabilizer sets meet outside the identity (action not free)")
        return result
    try:
        inv = surface_invariants(datum.group, datum.V1, datum.V2)
    except IsoprodError as exc:
        failures.append(str(exc))
        return result
    result["valid"] = True
    result["invariants"] = inv.as_dict()
    return result


@cli.command()
@datum_options
@click.pass_context
def validate(ctx, family, path):
    """Check generating vectors, freeness and numerical invariants."""
    datum, rec = _load(family, path)
    res = validate_datum(datum)
    res.update(name=datum.name, group_order=datum.group.order,
               types=[list(datum.V1.orders), list(datum.V2.orders)])
    lines = [f"{datum.name}: {'OK' if res['valid'] else 'FAILED'}",
             f"  group: {_group_title(datum, rec)}",
             f"  types: {_types(datum.V1)} {_types(datum.V2)}"]
    if ctx.obj["verbose"]:
        lines.append(f"  V1 = [{', '.join(_vec_names(datum.V1))}]")
        lines.append(f"  V2 = [{', '.join(_vec_names(datum.V2))}]")
    if res["valid"]:
        i = res["invariants"]
        lines.append(f"  g1={i['g1']} g2={i['g2']} chi={i['chi']} q={i['q']} "
                     f"p_g={i['p_g']} K^2={i['Ksq']} e={i['e']}")
    for f in res["failures"]:
        lines.append(f"  failure: {f}")
    _emit(ctx, "validate", [res], lines)
    if not res["valid"]:
        raise Failure()


# -- homology -----------------------------------------------------------------


def homology_result(datum, rec=None, verbose=False):
    t0 = time.perf_counter()
    sh = SurfaceHomology(datum.group, datum.V1, datum.V2)
    t1 = time.perf_counter()
    trivial = sh.trivial_central_set()
    t2 = time.perf_counter()
    G = datum.group
    res = {
        "name": datum.name,
        "h1": {"rank": sh.h1.rank, "torsion": sorted(sh.h1.torsion), "text": str(sh.h1)},
        "trivial_central_set": [G.element_name(z) for z in trivial],
        "center": [G.element_name(z) for z in center(G)],
    }
    ok = True
    if rec is not None:
        h1_ok = sh.h1.rank == 0 and tuple(sh.h1.torsion) == rec.expected_h1
        triv_ok = trivial == rec.expected_trivial_elements()
        res["expected"] = {
            "torsion": list(rec.expected_h1),
            "trivial_central_set": list(rec.expected_trivial),
            "h1_match": h1_ok,
            "trivial_match": triv_ok,
        }
        ok = h1_ok and triv_ok
    if verbose:
        res["details"] = {
            "schreier_generators": len(sh.schreier),
            "relation_rows": sh.relations.nrows,
            "seconds_h1": round(t1 - t0, 3),
            "seconds_central": round(t2 - t1, 3),
        }
    return res, ok


def _homology_lines(res, verbose):
    lines = [f"{res['name']}:",
             f"  H1(S,Z) = {res['h1']['text']}",
             f"  central elements acting trivially on H1: {{{', '.join(res['trivial_central_set'])}}}"]
    exp = res.get("expected")
    if exp:
        lines.append(f"  expected H1 torsion {exp['torsion']}: "
                     f"{'match' if exp['h1_match'] else 'MISMATCH'}")
        lines.append(f"  expected trivial set {{{', '.join(exp['trivial_central_set'])}}}: "
                     f"{'match' if exp['trivial_match'] else 'MISMATCH'}")
    if len(res["trivial_central_set"]) > 1:
        lines.append("  note: triviality is certified on H1 only; the action on H2 is not checked")
    if verbose and "details" in res:
        d = res["details"]
        lines.append(f"  schreier generators: {d['schreier_generators']}, "
                     f"relation rows: {d['relation_rows']}, "
                     f"time: {d['seconds_h1']}s + {d['seconds_central']}s")
    return lines


@cli.command()
@datum_options
@click.pass_context
def homology(ctx, family, path):
    """First homology of S and the central elements acting trivially on it."""
    datum, rec = _load(family, path)
    check = validate_datum(datum)
    if not check["valid"]:
        raise Failure("invalid datum: " + "; ".join(check["failures"]))
    res, ok = homology_result(datum, rec, ctx.obj["verbose"])
    _emit(ctx, "homology", [res], _homology_lines(res, ctx.obj["verbose"]))
    if not ok:
        raise Failure()


# -- autbound -----------------------------------------------------------------


def autbound_result(datum, rec=None):
    G = datum.group
    rep = aut_q_bound(G, datum.V1, datum.V2)
    res = {"name": datum.name, "report": rep.as_dict()}
    res["exceptions"] = [detect_exceptions(V).as_dict() for V in (datum.V1, datum.V2)]
    ok = True
    if rec is not None:
        ref = {}
        if rec.aut_q is not None:
            ref["aut_q"] = rec.aut_q
            ref["match"] = rep.established and rep.lower == rec.aut_q
            ok = ref["match"]
        if rec.aut_q_note:
            ref["annotation"] = rec.aut_q_note
        if ref:
            res["reference"] = ref
    return res, rep, ok


def _autbound_lines(res, rep):
    c = rep.centralizer_certified
    cent = ["=|Z|" if ok else (f"<={b}" if b else "undetermined")
            for ok, b in zip(c, rep.centralizer_orders)]
    lines = [f"{res['name']}:",
             f"  |G|={rep.group_order} |Z(G)|={rep.center_order} |Inn(G)|={rep.inn_order} "
             f"|H|={rep.h_order}{'' if rep.h_exact else ' (combinatorial)'}",
             f"  centralizers: {cent[0]}, {cent[1]}",
             f"  |N'_1| <= {rep.n_prime_bounds[0]}, |N'_2| <= {rep.n_prime_bounds[1]}"]
    if rep.established:
        lines.append(f"  |Aut*(S)| = {rep.lower} (established)")
    else:
        lines.append(f"  |Aut*(S)| >= {rep.lower}")
    lines.append(f"  |Aut*(S)| <= {rep.upper if rep.upper is not None else 'not determined'}")
    ref = res.get("reference", {})
    if "aut_q" in ref:
        lines.append(f"  reference {ref['aut_q']}: {'match' if ref['match'] else 'MISMATCH'}")
    if "annotation" in ref:
        lines.append(f"  reference annotation: {ref['annotation']} "
                     "(geometric refinement outside combinatorial scope)")
    for note in rep.notes:
        lines.append(f"  note: {note}")
    for j, ex in enumerate(res["exceptions"], 1):
        if ex["pattern"]:
            lines.append(f"  vector{j}: exception {ex['pattern']} pattern, "
                         f"witness {'found' if ex['witness'] else 'none'}")
    return lines


@cli.command()
@datum_options
@click.pass_context
def autbound(ctx, family, path):
    """Bounds on the numerically trivial automorphisms (q = 0 only)."""
    datum, rec = _load(family, path)
    check = validate_datum(datum)
    if not check["valid"]:
        raise Failure("invalid datum: " + "; ".join(check["failures"]))
    res, rep, ok = autbound_result(datum, rec)
    _emit(ctx, "autbound", [res], _autbound_lines(res, rep))
    if not ok:
        raise Failure()


# -- report -------------------------------------------------------------------


@cli.command()
@click.option("--family", "family", metavar="NAME", help="Restrict to one family.")
@output_options
@click.pass_context
def report(ctx, family):
    """Regression table over the built-in families."""
    if family:
        try:
            records = [get_family(family)]
        except UsageError as exc:
            raise click.UsageError(str(exc))
    else:
        records = list(FAMILIES)
    verbose = ctx.obj["verbose"]
    rows = []
    lines = []
    all_ok = True
    header = f"{'family':<10} {'G':<10} {'T1':<12} {'T2':<14} chi q p_g  {'H1':<34} {'trivial':<16} Aut*"
    lines.append(header)
    lines.append("-" * len(header))
    for rec in records:
        datum = rec.datum()
        v = validate_datum(datum)
        row = {"name": rec.name, "group": rec.title, "types": [list(t) for t in rec.types],
               "valid": v["valid"], "failures": v["failures"]}
        ok = v["valid"] and (datum.V1.orders, datum.V2.orders) == rec.types
        if v["valid"]:
            inv = v["invariants"]
            row["invariants"] = inv
            ok = ok and (inv["chi"], inv["q"], inv["p_g"], inv["Ksq"]) == (1, 0, 0, 8)
            h, hok = homology_result(datum, rec, verbose)
            a, rep, aok = autbound_result(datum, rec)
            row["homology"] = h
            row["autbound"] = a
            ok = ok and hok and aok
            aut = (f"={rep.lower}" if rep.established
                   else f"{rep.lower}..{rep.upper if rep.upper is not None else '?'}")
            if rec.aut_q_note:
                aut += f" [{rec.aut_q_note}]"
            mark = "" if hok else " !"
            lines.append(
                f"{rec.name:<10} {rec.title:<10} {_types(datum.V1):<12} {_types(datum.V2):<14} "
                f"{inv['chi']:>3} {inv['q']} {inv['p_g']:>3}  {h['h1']['text'] + mark:<34} "
                f"{'{' + ','.join(h['trivial_central_set']) + '}':<16} {aut}"
            )
        else:
            lines.append(f"{rec.name:<10} INVALID: {'; '.join(v['failures'])}")
        row["ok"] = ok
        all_ok = all_ok and ok
        rows.append(row)
    n_ok = sum(r["ok"] for r in rows)
    lines.append(f"{n_ok}/{len(rows)} families match the reference data")
    _emit(ctx, "report", rows, lines)
    if not all_ok:
        raise Failure()


def main(argv=None):
    try:
        cli.main(args=argv, prog_name="isoprod", standalone_mode=False)
    except click.exceptions.Abort:
        click.echo("aborted", err=True)
        return 1
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except ParseError as exc:
        click.echo(f"parse error: {exc}", err=True)
        return 2
    except Failure as exc:
        if exc.args and exc.args[0]:
            click.echo(f"error: {exc.args[0]}", err=True)
        return 1
    except IsoprodError as exc:
        click.echo(f"error: {exc}", err=True)
        return 1
    return 0
