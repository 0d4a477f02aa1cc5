"""Command-line interface: check, construct, verify, export.

Exit codes: 0 every check passed, 1 a verified failure (a red axiom, a
failed precondition, a failed comparison), 2 an input or usage error.
Reports written with ``--report`` are deterministic: the embedded digest is
computed over the document with wall-time fields removed.
"""

from __future__ import annotations

import hashlib
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import click

from . import __version__
from .catalog import catalog_ex27_expected, get_entry
from .constructions import (
    bicrossproduct,
    cocycle_twist,
    drinfeld_double,
    drinfeld_double_tilde,
    dual,
    dual_pair_double,
    evaluation_pairing,
    heisenberg_double,
    opposite,
    self_bicross,
)
from .errors import HomHopfError, InvalidParameter, PreconditionFailed
from .exactlin import format_scalar
from .fileformat import (
    SCHEMA_VERSION,
    AlgebraFile,
    bundle_of_entry,
    object_record,
    parse,
    serialize,
)
from .structures import (
    CheckReport,
    check_antipode,
    check_hom_algebra,
    check_hom_bialgebra,
    check_hom_coalgebra,
    check_quasitriangular,
    merge_reports,
)
from .verify import (
    SuiteResult,
    verify_cor_2_9,
    verify_dual_pair_route,
    verify_prop_2_19,
    verify_prop_4_7,
    verify_thm_2_6,
    verify_thm_4_5,
)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _load_input(source: str) -> tuple[AlgebraFile, bytes, object]:
    """Resolve a path or catalog name to (bundle, raw-bytes, catalog-entry)."""
    path = Path(source)
    if path.exists():
        raw = path.read_bytes()
        return parse(raw), raw, None
    try:
        entry = get_entry(source)
    except InvalidParameter:
        from .catalog import catalog_names

        raise click.UsageError(
            f"{source!r} is neither an existing file nor a catalog name "
            f"(catalog: {', '.join(catalog_names())})"
        ) from None
    bundle = bundle_of_entry(entry)
    return bundle, serialize(bundle), entry


def _vec_text(v) -> str:
    return "(" + ", ".join(format_scalar(c) for c in v) + ")"


def _print_report(report: CheckReport, indent: str = "") -> None:
    for entry in report.checks:
        if entry.passed:
            click.echo(f"{indent}PASS {entry.axiom_id}")
        else:
            w = entry.witness
            click.echo(f"{indent}FAIL {entry.axiom_id} at index {w.index}")
            click.echo(f"{indent}     lhs = {_vec_text(w.lhs)}")
            click.echo(f"{indent}     rhs = {_vec_text(w.rhs)}")


def _print_suite(result: SuiteResult) -> None:
    click.echo(f"suite {result.suite}")
    for step in result.steps:
        status = "PASS" if step.passed else "FAIL"
        note = f"  [{step.note}]" if step.note else ""
        click.echo(f"  {status} {step.name}{note}")
        if not step.passed:
            _print_report(step.report, indent="    ")
    verdict = "PASS" if result.passed else "FAIL"
    click.echo(f"overall {verdict} ({result.wall_time:.3f}s)")


def _witness_json(w):
    if w is None:
        return None
    return {
        "index": list(w.index),
        "lhs": [format_scalar(c) for c in w.lhs],
        "rhs": [format_scalar(c) for c in w.rhs],
    }


def _report_json(report: CheckReport):
    return {
        "checks": [
            {"axiom": c.axiom_id, "passed": c.passed, "witness": _witness_json(c.witness)}
            for c in report.checks
        ]
    }


def _suite_json(result: SuiteResult):
    return {
        "suite": result.suite,
        "passed": result.passed,
        "wall_time": result.wall_time,
        "steps": [
            {"name": s.name, "note": s.note, "report": _report_json(s.report)}
            for s in result.steps
        ],
    }


def _strip_wall_time(node):
    if isinstance(node, dict):
        return {k: _strip_wall_time(v) for k, v in node.items() if k != "wall_time"}
    if isinstance(node, list):
        return [_strip_wall_time(v) for v in node]
    return node


def _write_report(path, command: str, inputs, results, status: int) -> None:
    if not path:
        return
    doc = {
        "tool": "homhopf",
        "version": __version__,
        "schema": SCHEMA_VERSION,
        "command": command,
        "inputs": [
            {"source": src, "sha256": hashlib.sha256(raw).hexdigest()} for src, raw in inputs
        ],
        "results": results,
        "status": status,
    }
    canonical = json.dumps(_strip_wall_time(doc), sort_keys=True, separators=(",", ":"))
    doc["digest"] = hashlib.sha256(canonical.encode()).hexdigest()
    Path(path).write_text(json.dumps(doc, sort_keys=True, indent=2) + "\n")


def _fail_usage(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(EXIT_USAGE)


@click.group()
@click.version_option(__version__)
def main():
    """Exact axiom checking and constructions for Hom-Hopf algebras."""


LEVELS = ("algebra", "coalgebra", "bialgebra", "hopf", "quasitriangular")


@main.command()
@click.argument("source")
@click.option("--level", type=click.Choice(LEVELS), default="hopf", show_default=True)
@click.option("--report", "report_path", type=click.Path(), default=None)
@click.option("--jobs", type=int, default=1, show_default=True, help="sweep parallelism hint")
def check(source, level, report_path, jobs):
    """Run the axiom checkers for LEVEL on SOURCE (file or catalog name)."""
    try:
        bundle, raw, entry = _load_input(source)
        rec = bundle.object()
        tasks = []
        if level in ("algebra", "bialgebra", "hopf", "quasitriangular"):
            alg = rec.hom_algebra()
            tasks.append(lambda: check_hom_algebra(alg))
        if level in ("coalgebra", "bialgebra", "hopf", "quasitriangular"):
            coa = rec.hom_coalgebra()
            tasks.append(lambda: check_hom_coalgebra(coa))
        if level in ("bialgebra", "hopf", "quasitriangular"):
            bia = rec.hom_bialgebra()
            tasks.append(lambda: check_hom_bialgebra(bia))
        if level in ("hopf", "quasitriangular"):
            hopf = rec.hom_hopf()
            tasks.append(lambda: check_antipode(hopf))
        if level == "quasitriangular":
            blocks = bundle.blocks_of("rmatrix")
            if not blocks:
                _fail_usage("quasitriangular level needs an rmatrix block")
            r = bundle.rmatrix(blocks[0])
            host = rec.hom_bialgebra()
            tasks.append(lambda: check_quasitriangular(host, r))
    except (HomHopfError, click.UsageError) as exc:
        _fail_usage(str(exc))

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(t) for t in tasks]
            reports = [f.result() for f in futures]
    else:
        reports = [t() for t in tasks]
    combined = merge_reports(*reports)
    _print_report(combined)
    status = EXIT_PASS if combined.ok else EXIT_FAIL
    click.echo(("all checks passed" if combined.ok else "some checks failed"))
    _write_report(
        report_path, f"check --level {level}", [(source, raw)], [_report_json(combined)], status
    )
    sys.exit(status)


KINDS = (
    "dual",
    "op",
    "double",
    "double-tilde",
    "heisenberg",
    "bicross",
    "self-bicross",
    "dual-pair-double",
    "twist",
)


@main.command()
@click.argument("kind", type=click.Choice(KINDS))
@click.argument("source")
@click.option("--cocycle", "cocycle_path", type=click.Path(exists=True), default=None)
@click.option("--side", type=click.Choice(("left", "right")), default=None)
@click.option("--out", "out_path", type=click.Path(), default=None)
@click.option("--force", is_flag=True, help="skip precondition verification")
@click.option("--report", "report_path", type=click.Path(), default=None)
def construct(kind, source, cocycle_path, side, out_path, force, report_path):
    """Build the KIND construction from SOURCE and write it in file format."""
    check_flag = not force
    inputs = []
    try:
        bundle, raw, _ = _load_input(source)
        inputs.append((source, raw))
        rec = bundle.object()
        base = rec.name
        if kind == "dual":
            result = object_record(f"dual_{base}", dual(rec.hom_hopf()))
        elif kind == "op":
            result = object_record(f"op_{base}", opposite(rec.hom_hopf()))
        elif kind == "double":
            result = object_record(f"double_{base}", drinfeld_double(rec.hom_hopf()))
        elif kind == "double-tilde":
            result = object_record(f"double_tilde_{base}", drinfeld_double_tilde(rec.hom_hopf()))
        elif kind == "heisenberg":
            result = object_record(f"heisenberg_{base}", heisenberg_double(rec.hom_hopf()))
        elif kind == "self-bicross":
            result = object_record(f"self_bicross_{base}", self_bicross(rec.hom_hopf(), check=check_flag))
        elif kind == "bicross":
            act = bundle.module_action()
            co = bundle.comodule_coaction()
            carrier = act.carrier
            actor = act.actor
            result = object_record(
                f"bicross_{base}", bicrossproduct(carrier, actor, act, co, check=check_flag)
            )
        elif kind == "dual-pair-double":
            pair_blocks = bundle.blocks_of("pairing")
            pairing = bundle.pairing(pair_blocks[0]) if pair_blocks else evaluation_pairing(rec.hom_hopf())
            result = object_record(
                f"pair_double_{base}", dual_pair_double(pairing, check=check_flag).hopf
            )
        elif kind == "twist":
            if cocycle_path is None:
                _fail_usage("twist needs --cocycle <file>")
            craw = Path(cocycle_path).read_bytes()
            inputs.append((cocycle_path, craw))
            cfile = parse(craw)
            cblocks = cfile.blocks_of("cocycle")
            if not cblocks:
                _fail_usage("cocycle file defines no cocycle block")
            block = cblocks[0]
            host = rec.hom_bialgebra()
            if cfile.object(block.refs[0]).dim != host.dim:
                _fail_usage("cocycle host dimension differs from the input algebra")
            from .exactlin import matrix_from_entries
            from .structures import TwoCocycle

            gram = matrix_from_entries(
                host.dim, host.dim, {(i, j): v for (i, j), v in block.entries}
            )
            sigma = TwoCocycle(host, gram, side or block.refs[1])
            result = object_record(f"twist_{base}", cocycle_twist(host, sigma, check=check_flag))
        else:  # pragma: no cover
            raise AssertionError(kind)
    except PreconditionFailed as exc:
        click.echo(f"precondition failed: {exc}", err=True)
        results = []
        if exc.report is not None:
            _print_report(exc.report)
            results = [_report_json(exc.report)]
        _write_report(report_path, f"construct {kind}", inputs, results, EXIT_FAIL)
        sys.exit(EXIT_FAIL)
    except (HomHopfError, click.UsageError, OSError) as exc:
        _fail_usage(str(exc))

    out_file = AlgebraFile(SCHEMA_VERSION, (result,), ())
    data = serialize(out_file)
    if out_path:
        Path(out_path).write_bytes(data)
        click.echo(f"wrote {result.name} (dim {result.dim}) to {out_path}")
    else:
        sys.stdout.write(data.decode())
    _write_report(report_path, f"construct {kind}", inputs, [], EXIT_PASS)
    sys.exit(EXIT_PASS)


SUITES = ("thm2.6", "cor2.9", "prop2.19", "thm4.5", "dual-pair", "prop4.7")


@main.command()
@click.argument("suite", type=click.Choice(SUITES))
@click.option("--algebra", "source", required=True, help="catalog name or definition file")
@click.option("--report", "report_path", type=click.Path(), default=None)
@click.option("--jobs", type=int, default=1, show_default=True, help="sweep parallelism hint")
def verify(suite, source, report_path, jobs):
    """Run a named verification suite on an algebra."""
    del jobs  # sweeps are deterministic and already fast at desk scale
    try:
        bundle, raw, entry = _load_input(source)
        rec = bundle.object()
        hopf = rec.hom_hopf()
        group = entry.group if entry is not None else None
        if suite == "thm2.6":
            act = bundle.module_action()
            co = bundle.comodule_coaction()
            golden = None
            ax1 = get_entry("ax1")
            if (
                act.carrier == ax1.hopf
                and act.actor == ax1.partner
                and act.act == ax1.action.act
                and co.coact == ax1.coaction.coact
            ):
                golden = catalog_ex27_expected()
            result = verify_thm_2_6(act.carrier, act.actor, act, co, golden)
        elif suite == "cor2.9":
            result = verify_cor_2_9(hopf, group)
        elif suite == "prop2.19":
            result = verify_prop_2_19(hopf, group)
        elif suite == "thm4.5":
            result = verify_thm_4_5(hopf)
        elif suite == "dual-pair":
            result = verify_dual_pair_route(hopf)
        else:
            result = verify_prop_4_7(hopf)
    except (HomHopfError, click.UsageError) as exc:
        _fail_usage(str(exc))

    _print_suite(result)
    status = EXIT_PASS if result.passed else EXIT_FAIL
    _write_report(report_path, f"verify {suite}", [(source, raw)], [_suite_json(result)], status)
    sys.exit(status)


@main.command()
@click.argument("name")
@click.option("--out", "out_path", type=click.Path(), default=None)
def export(name, out_path):
    """Write a catalog entry (with its bundled blocks) in file format."""
    try:
        entry = get_entry(name)
    except InvalidParameter as exc:
        _fail_usage(str(exc))
    data = serialize(bundle_of_entry(entry))
    if out_path:
        Path(out_path).write_bytes(data)
        click.echo(f"wrote {name} to {out_path}")
    else:
        sys.stdout.write(data.decode())
    sys.exit(EXIT_PASS)


if __name__ == "__main__":
    main()
