"""Command-line interface: ``leibniz-kit <command>``.

Exit codes are part of the interface:

    0 ok, 1 identity violation or selftest failure, 2 unreadable input,
    3 classification failed, 4 not applicable (dimension or Lie input),
    5 invalid parameter or characteristic, 6 field not supported.

Algebra files are UTF-8 JSON documents::

    {"field": "Fp:5", "dim": 3, "basis": ["a1", "a2", "a3"],
     "brackets": [{"i": 1, "j": 1, "coeffs": ["0", "0", "1"]}]}

Indices are 1-based and omitted pairs are zero.
"""

from __future__ import annotations

import json
import sys
from typing import Optional

import click

from . import catalog as cat
from .algebra import Algebra, check_leibniz, identity_sides
from .classifier import (
    ClassificationFailed,
    ClassificationResult,
    IsLieAlgebra,
    NotDimensionThree,
    NotLeibniz,
    classify,
)
from .field import Field, FieldError, ParseError
from .invariants import (
    InvariantReport,
    derived_series,
    invariant_report,
    lower_central_series,
    upper_central_series,
)
from .linalg import Subspace, render, render_vector, span
from . import oracle

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_PARSE = 2
EXIT_CLASSIFY = 3
EXIT_NOT_APPLICABLE = 4
EXIT_PARAM = 5
EXIT_FIELD = 6

_GREEK_NAMES = {v: k for k, v in cat.GREEK.items()}
_SUBSCRIPTS = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


# -- algebra files ------------------------------------------------------


def parse_algebra(text: str) -> Algebra:
    """Parse an algebra file, raising ParseError on any malformed part."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    for key in ("field", "dim", "brackets"):
        if key not in doc:
            raise ParseError(f"missing key {key!r}")
    F = Field.parse(str(doc["field"]))
    n = doc["dim"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError("dim must be a positive integer")
    labels = doc.get("basis")
    if labels is not None:
        if not isinstance(labels, list) or len(labels) != n:
            raise ParseError(f"basis must list {n} labels")
        labels = [str(x) for x in labels]
    if not isinstance(doc["brackets"], list):
        raise ParseError("brackets must be a list")
    entries = {}
    for k, e in enumerate(doc["brackets"]):
        if not isinstance(e, dict) or not {"i", "j", "coeffs"} <= set(e):
            raise ParseError(f"bracket entry {k + 1} needs i, j and coeffs")
        i, j, coeffs = e["i"], e["j"], e["coeffs"]
        for idx in (i, j):
            if not isinstance(idx, int) or isinstance(idx, bool) or not 1 <= idx <= n:
                raise ParseError(f"bracket entry {k + 1}: index {idx!r} outside 1..{n}")
        if not isinstance(coeffs, list) or len(coeffs) != n:
            raise ParseError(f"bracket entry {k + 1}: expected {n} coefficients")
        if (i - 1, j - 1) in entries:
            raise ParseError(f"bracket [{i},{j}] given twice")
        vals = []
        for c in coeffs:
            if isinstance(c, bool) or not isinstance(c, (str, int)):
                raise ParseError(f"bracket entry {k + 1}: scalar {c!r} is not a string")
            vals.append(F.parse_scalar(str(c)))
        entries[(i - 1, j - 1)] = vals
    return Algebra.from_brackets(F, n, entries, labels)


def algebra_to_doc(L: Algebra, meta: Optional[dict] = None) -> dict:
    F = L.field
    doc = {"field": str(F), "dim": L.dim}
    if L.labels is not None:
        doc["basis"] = list(L.labels)
    doc["brackets"] = [
        {"i": i + 1, "j": j + 1, "coeffs": [F.format(c) for c in v]}
        for (i, j), v in sorted(L.sparse().items())
    ]
    if meta:
        doc["meta"] = meta
    return doc


def write_algebra(L: Algebra, meta: Optional[dict] = None) -> str:
    return json.dumps(algebra_to_doc(L, meta), indent=2, ensure_ascii=False) + "\n"


# -- structured reports -------------------------------------------------------


def subspace_to_dict(S: Subspace) -> dict:
    F = S.field
    return {
        "dim": S.dim,
        "basis": [[F.format(c) for c in v] for v in S.basis],
        "text": render(S),
    }


def subspace_from_dict(d: dict, F: Field, n: int) -> Subspace:
    return span(F, ([F.parse_scalar(c) for c in v] for v in d["basis"]), n)


_REPORT_SPACES = ("leib", "left_center", "right_center", "center", "derived_sub")


def report_to_dict(L: Algebra, rep: InvariantReport) -> dict:
    d = {"field": str(L.field), "dim": L.dim}
    for k in _REPORT_SPACES:
        d[k] = subspace_to_dict(getattr(rep, k))
    d["upper_central_series"] = [subspace_to_dict(t) for t in upper_central_series(L).terms]
    d["lower_central_series"] = [subspace_to_dict(t) for t in lower_central_series(L).terms]
    d["derived_series"] = [subspace_to_dict(t) for t in derived_series(L).terms]
    d["nilpotency"] = rep.nilpotency
    d["soluble_depth"] = rep.soluble_depth
    d["is_lie"] = rep.is_lie
    return d


def report_from_dict(d: dict) -> InvariantReport:
    F, n = Field.parse(d["field"]), d["dim"]
    spaces = {k: subspace_from_dict(d[k], F, n) for k in _REPORT_SPACES}
    return InvariantReport(
        nilpotency=d["nilpotency"], soluble_depth=d["soluble_depth"], is_lie=d["is_lie"], **spaces
    )


def _input_labels(L: Algebra) -> list:
    if L.labels is not None:
        return list(L.labels)
    return [f"e{i + 1}".translate(_SUBSCRIPTS) for i in range(L.dim)]


def result_to_dict(L: Algebra, res: ClassificationResult, with_trace: bool) -> dict:
    F = L.field
    d = {
        "id": res.id,
        "params": {k: F.format(v) for k, v in res.params.items()},
        "witness": [[F.format(c) for c in row] for row in res.witness],
    }
    if with_trace:
        d["trace"] = [_record_to_dict(F, r) for r in res.trace]
    return d


def _fmt_value(F: Field, v):
    if isinstance(v, tuple) and v and isinstance(v[0], tuple):
        return [_fmt_value(F, x) for x in v]
    if isinstance(v, tuple):
        return [F.format(c) for c in v]
    if isinstance(v, bool) or v is None or isinstance(v, int):
        return v
    return F.format(v)


def _record_to_dict(F: Field, r) -> dict:
    return {
        "step": r.step,
        "predicate": r.predicate,
        "text": r.text,
        "args": [_fmt_value(F, a) for a in r.args],
        "outcome": _fmt_value(F, r.outcome),
        "chosen": {name: _fmt_value(F, v) for name, v in r.chosen},
    }


def _trace_lines(L: Algebra, trace) -> list[str]:
    F = L.field
    labels = _input_labels(L)
    out = []
    for r in trace:
        o = r.outcome
        if r.predicate == "transport":
            shown = _table_text(F, o)
        elif isinstance(o, tuple) and o and not isinstance(o[0], tuple):
            shown = render_vector(F, o, labels)
        elif o is None:
            shown = "none"
        else:
            shown = json.dumps(_fmt_value(F, o), ensure_ascii=False)
        args = ", ".join(render_vector(F, a, labels) for a in r.args if _is_vector(a))
        line = f"  [{r.step}] {r.text}"
        if args:
            line += f" at ({args})"
        out.append(f"{line} -> {shown}")
    return out


def _is_vector(a) -> bool:
    return isinstance(a, tuple) and (not a or not isinstance(a[0], tuple))


def _emit(fmt: str, payload: dict, lines: list[str]) -> None:
    if fmt == "json":
        click.echo(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        for line in lines:
            click.echo(line)


def _load(fh) -> Algebra:
    try:
        return parse_algebra(fh.read())
    except (ParseError, FieldError) as exc:
        click.echo(f"parse error: {exc}", err=True)
        sys.exit(EXIT_PARSE)


def _field_option(fn):
    return click.option("--field", "field_text", default="Q", show_default=True,
                        help='Ground field: "Q" or "Fp:<p>".')(fn)


def _format_option(fn):
    return click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text",
                        show_default=True, help="Output format.")(fn)


def _parse_field(text: str) -> Field:
    try:
        return Field.parse(text)
    except (ParseError, FieldError) as exc:
        click.echo(f"parse error: {exc}", err=True)
        sys.exit(EXIT_PARSE)


def _parse_params(pairs) -> dict:
    out = {}
    for item in pairs:
        if "=" not in item:
            click.echo(f"invalid parameter {item!r}: expected name=value", err=True)
            sys.exit(EXIT_PARAM)
        k, v = item.split("=", 1)
        k = _GREEK_NAMES.get(k.strip(), k.strip())
        out[k] = v.strip()
    return out


# -- commands ---------------------------------------------------------------


@click.group()
@click.version_option(package_name="artifact")
def main() -> None:
    """Exact computations with Leibniz algebras of dimension at most 3."""


@main.command()
@click.argument("file", type=click.File("r", encoding="utf-8"))
@_format_option
def verify(file, fmt: str) -> None:
    """Check the left Leibniz identity on every basis triple."""
    L = _load(file)
    bad = check_leibniz(L)
    if bad is None:
        _emit(fmt, {"ok": True}, ["ok: Leibniz identity holds"])
        sys.exit(EXIT_OK)
    F = L.field
    lhs, rhs = identity_sides(L, bad)
    labels = _input_labels(L)
    x, y, z = (labels[t - 1] for t in bad)
    lines = [
        f"violation at {bad}",
        f"  [[{x},{y}],{z}] = {render_vector(F, lhs, labels)}",
        f"  [{x},[{y},{z}]] - [{y},[{x},{z}]] = {render_vector(F, rhs, labels)}",
    ]
    payload = {"ok": False, "triple": list(bad),
               "lhs": [F.format(c) for c in lhs], "rhs": [F.format(c) for c in rhs]}
    _emit(fmt, payload, lines)
    sys.exit(EXIT_VIOLATION)


def _require_leibniz(L: Algebra) -> None:
    bad = check_leibniz(L)
    if bad is not None:
        click.echo(f"not a Leibniz algebra: identity fails at {bad}", err=True)
        sys.exit(EXIT_VIOLATION)


def _series_text(terms) -> str:
    shown = [terms[0]]
    for t in terms[1:]:
        if t != shown[-1]:
            shown.append(t)
    sep = " ⊇ " if terms[0].is_full() else " ⊆ "
    return sep.join(render(t) for t in shown)


def _table_text(F: Field, table) -> str:
    n = len(table)
    a = [f"a{k + 1}".translate(_SUBSCRIPTS) for k in range(n)]
    parts = [
        f"[{a[i]},{a[j]}]={render_vector(F, table[i][j])}"
        for i in range(n) for j in range(n) if any(c != 0 for c in table[i][j])
    ]
    return ", ".join(parts) or "abelian"


@main.command()
@click.argument("file", type=click.File("r", encoding="utf-8"))
@_format_option
def report(file, fmt: str) -> None:
    """Print kernel, centers, product, series and class data."""
    L = _load(file)
    _require_leibniz(L)
    rep = invariant_report(L)
    lines = [
        f"field {L.field}, dimension {L.dim}",
        f"Leib(L)  = {render(rep.leib)}  (dim {rep.leib.dim})",
        f"ζ^left   = {render(rep.left_center)}  (dim {rep.left_center.dim})",
        f"ζ^right  = {render(rep.right_center)}  (dim {rep.right_center.dim})",
        f"ζ        = {render(rep.center)}  (dim {rep.center.dim})",
        f"[L,L]    = {render(rep.derived_sub)}  (dim {rep.derived_sub.dim})",
        f"upper central series: {_series_text(upper_central_series(L).terms)}",
        f"lower central series: {_series_text(lower_central_series(L).terms)}",
        f"derived series: {_series_text(derived_series(L).terms)}",
        f"ncl = {rep.nilpotency}",
        f"soluble depth = {rep.soluble_depth}",
        f"Lie algebra: {'yes' if rep.is_lie else 'no'}",
    ]
    _emit(fmt, report_to_dict(L, rep), lines)


@main.command(name="classify")
@click.argument("file", type=click.File("r", encoding="utf-8"))
@click.option("--trace", is_flag=True, help="Print every recorded decision.")
@_format_option
def classify_cmd(file, trace: bool, fmt: str) -> None:
    """Identify the catalog type of a 3-dimensional non-Lie Leibniz algebra."""
    L = _load(file)
    F = L.field
    try:
        res = classify(L)
    except NotLeibniz as exc:
        click.echo(str(exc), err=True)
        sys.exit(EXIT_VIOLATION)
    except (NotDimensionThree, IsLieAlgebra) as exc:
        _emit(fmt, {"error": type(exc).__name__, "reason": str(exc)},
              [f"not applicable: {exc}"])
        sys.exit(EXIT_NOT_APPLICABLE)
    except ClassificationFailed as exc:
        payload = {"error": "ClassificationFailed", "reason": exc.reason}
        lines = [f"classification failed: {exc.reason}"]
        if trace:
            payload["trace"] = [_record_to_dict(F, r) for r in exc.trace]
            lines += ["trace:"] + _trace_lines(L, exc.trace)
        _emit(fmt, payload, lines)
        sys.exit(EXIT_CLASSIFY)
    labels = _input_labels(L)
    lines = [res.describe(F), "witness (new basis in input coordinates):"]
    for k, row in enumerate(res.witness):
        lines.append(f"  a{k + 1} = {render_vector(F, row, labels)}")
    others = sorted(cat.possible_results(res.id) - {res.id})
    if others:
        lines.append("the same algebra may also reduce to " + ", ".join(others)
                     + " from another basis")
    if trace:
        lines += ["trace:"] + _trace_lines(L, res.trace)
    payload = result_to_dict(L, res, trace)
    payload["overlaps"] = others
    _emit(fmt, payload, lines)


def _status_dict(F: Field, st) -> dict:
    w = None if st.witness is None else [F.format(F(c)) for c in st.witness]
    return {"condition": st.condition, "satisfied": st.satisfied, "witness": w}


def _expected_dict(exp: dict) -> dict:
    return {k: v if k == "nilpotency" else subspace_to_dict(v) for k, v in exp.items()}


@main.command(name="catalog")
@click.argument("type_id", required=False)
@click.option("--param", "params", multiple=True, metavar="NAME=VALUE",
              help="Family parameter, repeatable.")
@_field_option
@click.option("--out", "out_path", type=click.Path(dir_okay=False, writable=True),
              help="Write the algebra file here instead of standard output.")
@click.option("--expect", is_flag=True, help="Include the claimed invariants.")
@_format_option
def catalog_cmd(type_id, params, field_text, out_path, expect, fmt) -> None:
    """Write the structure constants of a catalog type, or list the types."""
    if type_id is None:
        rows, lines = [], []
        for fid, dim, case in cat.list_types():
            spec = cat.param_spec(fid)
            names = ",".join(spec["params"]) or "-"
            rows.append({"id": fid, "dim": dim, "case": case, "params": spec["params"]})
            lines.append(f"{fid:10} {names:14} {case}")
        _emit(fmt, {"types": rows}, lines)
        return
    F = _parse_field(field_text)
    P = _parse_params(params)
    try:
        L, statuses = cat.make(type_id, P, F)
        full = cat.check_params(type_id, P, F)
        exp = cat.expected_report(type_id, P, F) if expect else None
    except (cat.CatalogError, ParseError) as exc:
        click.echo(f"invalid: {exc}", err=True)
        sys.exit(EXIT_PARAM)
    fam = cat.resolve(type_id)
    meta = {
        "id": fam.id,
        "params": {k: F.format(v) for k, v in full.items()},
        "case": fam.case,
        "side_conditions": [_status_dict(F, s) for s in statuses],
    }
    bad = cat.expected_non_leibniz(fam, P, F)
    if bad:
        meta["identity_note"] = bad
    if exp is not None:
        meta["expected"] = _expected_dict(exp)
        notes = cat.KNOWN_DISCREPANCIES.get(fam.id)
        if notes:
            meta["documented_discrepancies"] = dict(notes)
    text = write_algebra(L, meta)
    if out_path is None:
        click.echo(text, nl=False)
        return
    with open(out_path, "w", encoding="utf-8") as fh:
        fh.write(text)
    lines = [f"wrote {fam.id} over {F} to {out_path}"]
    for s in statuses:
        state = {True: "satisfied", False: "unsatisfied"}.get(s.satisfied, str(s.satisfied))
        wit = f", witness {s.witness}" if s.witness is not None else ""
        lines.append(f"side condition {s.condition}: {state}{wit}")
    if bad:
        lines.append(f"note: table violates the identity ({bad})")
    if exp is not None:
        for k, v in exp.items():
            lines.append(f"claimed {k}: {v if k == 'nilpotency' else render(v)}")
    _emit(fmt, {"path": out_path, **meta}, lines)


@main.command()
@click.argument("type_id", required=False)
@click.option("--field", "field_texts", multiple=True, default=("Fp:3",), show_default=True,
              help="Finite field; repeat with --all for several columns.")
@click.option("--all", "all_types", is_flag=True, help="Survey every family.")
@_format_option
def survey(type_id, field_texts, all_types, fmt) -> None:
    """Enumerate valid parameter tuples over a finite field."""
    fields = [_parse_field(t) for t in field_texts]
    infinite = [F for F in fields if not F.is_finite]
    if infinite:
        click.echo(f"unsupported: {infinite[0]} is infinite; survey needs Fp:<p>", err=True)
        sys.exit(EXIT_FIELD)
    if not all_types and type_id is None:
        click.echo("give a type id or --all", err=True)
        sys.exit(EXIT_PARSE)
    ids = [fid for fid, _, _ in cat.list_types()] if all_types else [type_id]
    try:
        table = {fid: {str(F): cat.survey_params(fid, F) for F in fields} for fid in ids}
    except cat.CatalogError as exc:
        click.echo(f"invalid: {exc}", err=True)
        sys.exit(EXIT_PARAM)
    if not all_types:
        fam = cat.resolve(type_id)
        F = fields[0]
        found = table[type_id][str(F)]
        lines = [f"{fam.id} over {F}: {len(found)} valid parameter tuple(s)"]
        lines += ["  " + (cat.format_params(P, F) or "(no parameters)") for P in found]
        payload = {"id": fam.id, "field": str(F), "count": len(found),
                   "params": [{k: F.format(v) for k, v in P.items()} for P in found]}
        _emit(fmt, payload, lines)
        return
    header = f"{'type':10}" + "".join(f"{str(F):>10}" for F in fields)
    lines = [header]
    for fid in ids:
        cells = []
        for F in fields:
            n = len(table[fid][str(F)])
            cells.append(f"{('-' if n == 0 else str(n)):>10}")
        lines.append(f"{fid:10}" + "".join(cells))
    payload = {fid: {f: len(v) for f, v in row.items()} for fid, row in table.items()}
    _emit(fmt, payload, lines)


# -- selftest -----------------------------------------------------------------


SELFTEST_FIELDS = ("Q", "Fp:3", "Fp:5")
ORACLE_FIELDS = ("Fp:2", "Fp:3")


def _check_instance(fid: str, F: Field) -> tuple[bool, str]:
    P = cat.default_params(fid, F)
    if P is None:
        return True, "no valid parameters"
    L, _ = cat.make(fid, P, F)
    notes = []
    bad = check_leibniz(L)
    documented = cat.expected_non_leibniz(fid, P, F)
    if (bad is None) != (documented is None):
        return False, f"identity {'fails at ' + str(bad) if bad else 'holds'} contrary to record"
    if bad:
        notes.append("non-Leibniz (documented)")
    diff = cat.compare_claims(L, fid, P, F)
    undocumented = [k for k in diff if cat.documented_discrepancy(fid, k) is None]
    if undocumented:
        return False, "claim mismatch: " + ", ".join(undocumented)
    if diff:
        notes.append("documented discrepancy: " + ", ".join(sorted(diff)))
    return True, "; ".join(notes) or "ok"


def _check_oracle(fid: str, F: Field) -> tuple[bool, str]:
    from .invariants import center, left_center, leibniz_kernel, right_center
    P = cat.default_params(fid, F)
    if P is None:
        return True, "no valid parameters"
    L, _ = cat.make(fid, P, F)
    pairs = (
        ("kernel", leibniz_kernel, oracle.brute_kernel),
        ("left center", left_center, oracle.brute_left_center),
        ("right center", right_center, oracle.brute_right_center),
        ("center", center, oracle.brute_center),
    )
    for name, fast, slow in pairs:
        if oracle.elements_of(fast(L)) != slow(L):
            return False, f"{name} disagrees with enumeration"
    return True, "ok"


def _guarded(check, fid: str, F: Field) -> tuple[bool, str]:
    try:
        return check(fid, F)
    except Exception as exc:  # a broken table must not stop the sweep
        return False, f"{type(exc).__name__}: {exc}"


def run_selftest() -> tuple[bool, list[str]]:
    ok = True
    lines = []
    for fid, _, _ in cat.list_types():
        cells = []
        for ft in SELFTEST_FIELDS:
            good, note = _guarded(_check_instance, fid, Field.parse(ft))
            ok &= good
            cells.append(f"{ft}: {'pass' if good else 'FAIL'} ({note})")
        for ft in ORACLE_FIELDS:
            good, note = _guarded(_check_oracle, fid, Field.parse(ft))
            ok &= good
            cells.append(f"oracle {ft}: {'pass' if good else 'FAIL'} ({note})")
        status = "pass" if all("FAIL" not in c for c in cells) else "FAIL"
        lines.append(f"{fid:10} {status}  " + "; ".join(cells))
    lines.append("selftest " + ("passed" if ok else "FAILED"))
    return ok, lines


@main.command()
def selftest() -> None:
    """Sweep the catalog against its claims and the enumeration oracle."""
    ok, lines = run_selftest()
    for line in lines:
        click.echo(line)
    sys.exit(EXIT_OK if ok else EXIT_VIOLATION)


if __name__ == "__main__":
    main()
