"""Command-line front end.

Every subcommand builds one machine-readable report object; the text
format is rendered from that object and never computed separately.  Exit
codes: 0 success, 1 datum validation failure (the report is still
emitted), 2 parse/schema error, 3 internal consistency or theorem
violation.
"""

from __future__ import annotations

import json
import sys

import click

from . import docio
from .aut0 import aut0 as compute_aut0
from .aut0 import representation_kernel
from .datum import AlgebraicDatum, invariants, rigidity_class, validate_datum
from .errors import (
    ConsistencyError,
    IsoprodError,
    OracleScaleError,
    SchemaError,
    TheoremViolationError,
    UnsupportedDatumError,
)
from .examples import EXAMPLE_NAMES, build_example
from .hodge import hodge_diamond
from .oracle import brute_hodge, brute_kernel, brute_quotient
from .search import SearchSpec, survey

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_SCHEMA = 2
EXIT_INTERNAL = 3


def _validation_section(datum: AlgebraicDatum, report) -> dict:
    return {
        "ok": report.ok,
        "minimality_ok": report.minimality_ok,
        "minimality_witness": list(report.minimality_witness)
        if report.minimality_witness else None,
        "freeness_ok": report.freeness_ok,
        "freeness_witness": list(report.freeness_witness.exponents)
        if report.freeness_witness else None,
        "vectors": [list(v.violations) for v in report.vector_outcomes],
        "genera": list(report.genera),
        "irregularity": report.irregularity,
        "rigidity_class": rigidity_class(datum).value,
    }


def _invariants_section(datum: AlgebraicDatum, report) -> dict:
    section = {"genera": list(report.genera), "irregularity": report.irregularity}
    try:
        inv = invariants(datum)
    except ConsistencyError:
        section.update(chi_structure_sheaf=None, euler_number=None, canonical_cube=None)
    else:
        section.update(chi_structure_sheaf=inv.chi_structure_sheaf,
                       euler_number=inv.euler_number,
                       canonical_cube=inv.canonical_cube)
    return section


def _aut0_section(datum: AlgebraicDatum, report) -> dict:
    try:
        result = compute_aut0(datum, report)
    except UnsupportedDatumError as exc:
        return {"status": "Unsupported", "detail": str(exc)}
    return {
        "status": result.status.value,
        "invariant_factors": list(result.invariant_factors),
        "order": result.order,
        "generators": [list(g.exponents) for g in result.generators],
        "admissible_first": result.admissible_counts[0],
        "admissible_second": result.admissible_counts[1],
    }


def _kernels_section(datum: AlgebraicDatum) -> dict:
    section = {}
    for p, q in ((3, 0), (2, 1), (2, 0), (1, 1)):
        kernel = representation_kernel(datum, p, q)
        section[f"h{p}{q}"] = {"order": kernel.order,
                               "quotient_rank": len(kernel.generators)}
    return section


def _oracle_section(datum: AlgebraicDatum, report) -> dict:
    from .aut0 import _k_delta, admissible_characters
    from .groups import subgroup_quotient

    agreement = {}
    try:
        fast = hodge_diamond(datum)
        slow = brute_hodge(datum)
        agreement["hodge"] = "agree" if fast.h == slow.h else "DISAGREE"
    except OracleScaleError as exc:
        agreement["hodge"] = f"skipped: {exc}"
    try:
        first, second = admissible_characters(datum)
        fast_kernel = representation_kernel(datum, 3, 0)
        slow_kernel = brute_kernel(datum, first + second)
        kernels_match = (fast_kernel.order == len(slow_kernel)
                         and all(fast_kernel.contains(e) for e in slow_kernel.elements()))
        fast_factors = list(subgroup_quotient(fast_kernel, _k_delta(datum))
                            .invariant_factors)
        slow_factors = list(brute_quotient(fast_kernel, _k_delta(datum)))
        agreement["kernel"] = "agree" if kernels_match else "DISAGREE"
        agreement["quotient"] = ("agree" if fast_factors == slow_factors
                                 else "DISAGREE")
    except OracleScaleError as exc:
        agreement.setdefault("kernel", f"skipped: {exc}")
        agreement.setdefault("quotient", f"skipped: {exc}")
    if any(v == "DISAGREE" for v in agreement.values()):
        raise ConsistencyError(f"oracle disagreement: {agreement}")
    return agreement


def build_report(datum: AlgebraicDatum, sections: tuple[str, ...],
                 oracle: bool = False, header: str | None = None) -> dict:
    report = validate_datum(datum)
    out: dict = {}
    if header:
        out["note"] = header
    out["datum"] = docio.datum_document(datum)
    out["validation"] = _validation_section(datum, report)
    if "invariants" in sections:
        out["invariants"] = _invariants_section(datum, report)
    if "hodge" in sections:
        out["hodge"] = hodge_diamond(datum).h
    if "aut0" in sections:
        out["aut0"] = _aut0_section(datum, report)
    if "kernels" in sections:
        out["kernels"] = _kernels_section(datum)
    if oracle:
        out["oracle"] = _oracle_section(datum, report)
    return out


def _render_diamond(h) -> list[str]:
    rows = []
    for k in range(7):
        entries = [str(h[p][k - p]) for p in range(4) if 0 <= k - p <= 3]
        if k > 3:
            entries.reverse()
        rows.append("   ".join(entries).center(34).rstrip())
    return rows


def render_text(report: dict) -> str:
    lines = []
    if "note" in report:
        lines.append(f"note: {report['note']}")
    if "datum" in report:
        doc = report["datum"]
        lines.append("group: " + " x ".join(f"Z{n}" for n in doc["group"]))
    if "validation" in report:
        v = report["validation"]
        lines.append(f"validation: {'ok' if v['ok'] else 'FAILED'}")
        if not v["minimality_ok"]:
            lines.append(f"  minimality fails for kernels {v['minimality_witness']}")
        if not v["freeness_ok"]:
            lines.append(f"  action is not free; witness {v['freeness_witness']}")
        for i, violations in enumerate(v["vectors"]):
            for msg in violations:
                lines.append(f"  vector {i + 1}: {msg}")
        lines.append(f"  genera: {v['genera']}  irregularity: {v['irregularity']}"
                     f"  class: {v['rigidity_class']}")
    if "invariants" in report:
        inv = report["invariants"]
        lines.append(f"invariants: chi(O) = {inv['chi_structure_sheaf']}"
                     f"  e = {inv['euler_number']}  K^3 = {inv['canonical_cube']}")
    if "hodge" in report:
        lines.append("hodge diamond:")
        lines.extend("  " + row for row in _render_diamond(report["hodge"]))
    if "aut0" in report:
        a = report["aut0"]
        lines.append(f"aut0: status {a['status']}")
        if "invariant_factors" in a:
            name = " + ".join(f"Z{d}" for d in a["invariant_factors"]) or "trivial"
            lines.append(f"  group: {name} (order {a['order']})")
            for gen in a["generators"]:
                lines.append(f"  generator coset: {gen}")
            lines.append(f"  admissible characters: {a['admissible_first']} first kind, "
                         f"{a['admissible_second']} second kind")
    if "kernels" in report:
        for key, val in report["kernels"].items():
            lines.append(f"kernel on {key}: order {val['order']}")
    if "oracle" in report:
        for key, val in report["oracle"].items():
            lines.append(f"oracle {key}: {val}")
    if "survey" in report:
        s = report["survey"]
        lines.append(f"survey: {s['count']} data")
        for key, cnt in s["histogram"].items():
            lines.append(f"  {key}: {cnt}")
        for key, cnt in s["statuses"].items():
            lines.append(f"  status {key}: {cnt}")
    return "\n".join(lines) + "\n"


def _emit(report: dict, fmt: str) -> None:
    if fmt == "json":
        click.echo(json.dumps(report, indent=2))
    else:
        click.echo(render_text(report), nl=False)


def _exit_code(report: dict) -> int:
    if "validation" in report and not report["validation"]["ok"]:
        return EXIT_INVALID
    return EXIT_OK


def _run(datum_source, sections: tuple[str, ...], fmt: str, oracle: bool,
         header: str | None = None) -> None:
    try:
        datum = datum_source()
        report = build_report(datum, sections, oracle=oracle, header=header)
    except SchemaError as exc:
        click.echo(f"error [{exc.code}]: {exc}", err=True)
        sys.exit(EXIT_SCHEMA)
    except (ConsistencyError, TheoremViolationError) as exc:
        click.echo(f"error [{exc.code}]: {exc}", err=True)
        sys.exit(EXIT_INTERNAL)
    except IsoprodError as exc:
        click.echo(f"error [{exc.code}]: {exc}", err=True)
        sys.exit(EXIT_SCHEMA)
    _emit(report, fmt)
    sys.exit(_exit_code(report))


format_option = click.option("--format", "fmt", type=click.Choice(["text", "json"]),
                             default="text", show_default=True)
oracle_option = click.option("--oracle", is_flag=True,
                             help="Cross-check against the brute-force oracles.")


@click.group()
def main() -> None:
    """Exact invariants and numerically trivial automorphisms of 3-folds
    isogenous to a product of curves (abelian, unmixed type)."""


def _file_source(path: str):
    def source() -> AlgebraicDatum:
        with open(path, "r", encoding="utf-8") as fh:
            return docio.loads(fh.read())
    return source


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@format_option
def validate(file: str, fmt: str) -> None:
    """Check a datum document and report violations."""
    _run(_file_source(file), (), fmt, oracle=False)


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@format_option
@oracle_option
def report(file: str, fmt: str, oracle: bool) -> None:
    """Full report: validation, invariants, Hodge diamond, Aut_0."""
    _run(_file_source(file), ("invariants", "hodge", "aut0"), fmt, oracle)


@main.command(name="aut0")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@format_option
@oracle_option
def aut0_command(file: str, fmt: str, oracle: bool) -> None:
    """Numerically trivial automorphisms of the datum's 3-fold."""
    _run(_file_source(file), ("aut0",), fmt, oracle)


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@format_option
def kernels(file: str, fmt: str) -> None:
    """Orders of the cohomology representation kernels."""
    _run(_file_source(file), ("kernels",), fmt, oracle=False)


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@format_option
@oracle_option
def hodge(file: str, fmt: str, oracle: bool) -> None:
    """Hodge diamond and numerical invariants."""
    _run(_file_source(file), ("invariants", "hodge"), fmt, oracle)


def _parse_params(text: str | None) -> dict[str, int]:
    if not text:
        return {}
    params = {}
    for part in text.split(","):
        if "=" not in part:
            raise SchemaError(f"malformed parameter {part!r}; expected name=value")
        key, _, value = part.partition("=")
        key = key.strip()
        if key not in {"n", "n1", "n2", "n3"}:
            raise SchemaError(f"unknown parameter {key!r}")
        try:
            params[key] = int(value)
        except ValueError as exc:
            raise SchemaError(f"parameter {key} needs an integer, got {value!r}") from exc
    return params


@main.command()
@click.argument("name", type=click.Choice(EXAMPLE_NAMES))
@click.option("--param", "param", default=None,
              help="Family parameters, e.g. n1=2,n2=1,n3=1 or n=2.")
@format_option
@oracle_option
def example(name: str, param: str | None, fmt: str, oracle: bool) -> None:
    """Run the full report on a built-in example family."""
    header = ("corrected fixture: the third handle pair is (e2, e4); the "
              "originally printed datum does not generate G/K3"
              if name == "example4" else None)

    def source() -> AlgebraicDatum:
        return build_example(name, _parse_params(param))

    _run(source, ("invariants", "hodge", "aut0"), fmt, oracle, header=header)


@main.command()
@click.argument("specfile", type=click.Path(exists=True, dir_okay=False))
@format_option
@click.option("--seed", type=int, default=0, show_default=True,
              help="Reserved for partition shuffling; results are "
                   "seed-independent.")
def search(specfile: str, fmt: str, seed: int) -> None:
    """Survey the automorphism groups over a bounded search space."""
    try:
        with open(specfile, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        spec = SearchSpec.from_document(doc)
        result = survey(spec)
    except (json.JSONDecodeError, SchemaError) as exc:
        click.echo(f"error [document-schema]: {exc}", err=True)
        sys.exit(EXIT_SCHEMA)
    except (ConsistencyError, TheoremViolationError) as exc:
        click.echo(f"error [{exc.code}]: {exc}", err=True)
        sys.exit(EXIT_INTERNAL)
    except IsoprodError as exc:
        click.echo(f"error [{exc.code}]: {exc}", err=True)
        sys.exit(EXIT_SCHEMA)
    _emit({"survey": result.as_document()}, fmt)
    sys.exit(EXIT_OK)


if __name__ == "__main__":
    main()
