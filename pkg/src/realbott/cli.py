"""Command-line surface: classify, table, counterexamples, verify, sw.

Machine-readable output comes in three flavors (csv, json, jsonl) next to
the default human-readable table.  Classification records always carry the
same nine scalar fields, in a fixed order; the CSV header is bit-exact so
downstream ingestion can rely on it.  Exit codes: 0 success, 1 verification
mismatch, 2 usage error.
"""

from __future__ import annotations

import json
import sys
import time
from typing import IO

import click

from .arithmetic import (
    ClassificationVerdict,
    classify as classify_pair,
    cohomology_criterion,
    counterexample_pair,
)
from .cohomology import (
    RingPresentation,
    nonvanishing_check,
    normal_form,
    total_sw_class,
)
from .gf2poly import COMPLEMENT_SUBSTITUTION, substitute_linear
from .oracle import rings_isomorphic_bruteforce

SCHEMA = (
    "a",
    "b",
    "q",
    "q_prime",
    "h",
    "k",
    "cohomology_isomorphic",
    "diffeomorphic",
    "homotopy_equivalent",
)

FORMATS = ("text", "csv", "json", "jsonl")


def record_from_verdict(verdict: ClassificationVerdict) -> dict:
    """Flatten a verdict into the fixed output schema (plus witness)."""
    record = {
        "a": verdict.a,
        "b": verdict.b,
        "q": verdict.q,
        "q_prime": verdict.q_prime,
        "h": verdict.h,
        "k": verdict.k,
        "cohomology_isomorphic": verdict.cohomology_isomorphic,
        "diffeomorphic": verdict.diffeomorphic,
        "homotopy_equivalent": verdict.homotopy_equivalent,
    }
    if verdict.oracle_witness is not None:
        record["witness"] = str(verdict.oracle_witness)
    return record


def dumps_record(record: dict) -> str:
    """The one JSON encoder for records; round-trips byte-identically."""
    return json.dumps(record)


def _cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def emit_records(records: list[dict], fmt: str, out: IO[str]) -> None:
    """Write records in the requested format, schema columns first."""
    if fmt == "jsonl":
        for record in records:
            out.write(dumps_record(record) + "\n")
    elif fmt == "json":
        out.write(json.dumps(records, indent=2) + "\n")
    elif fmt == "csv":
        out.write(",".join(SCHEMA) + "\n")
        for record in records:
            out.write(",".join(_cell(record[key]) for key in SCHEMA) + "\n")
    else:
        extras = [
            key for key in ("witness", "sw_class")
            if any(key in record for record in records)
        ]
        columns = list(SCHEMA) + extras
        table = [columns] + [
            [_cell(record.get(key, "-")) for key in columns] for record in records
        ]
        widths = [max(len(row[c]) for row in table) for c in range(len(columns))]
        for row in table:
            out.write("  ".join(cell.rjust(w) for cell, w in zip(row, widths)) + "\n")


def _validated_verdict(a, b, q, q_prime, with_oracle=False) -> ClassificationVerdict:
    try:
        return classify_pair(a, b, q, q_prime, with_oracle=with_oracle)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc


format_option = click.option(
    "--format", "fmt", type=click.Choice(FORMATS), default="text",
    show_default=True, help="Output format.",
)
out_option = click.option(
    "--out", type=click.File("w"), default="-",
    help="Write output to FILE instead of stdout.",
)


@click.group()
def main() -> None:
    """Classify projectivized sums of line bundles over real projective space.

    Members are indexed by (a, b, q): the base is RP^(a-1), the bundle has
    rank b with q tautological summands.  Classification of a pair (q, q')
    reports whether the mod-2 cohomology rings are isomorphic, and whether
    the manifolds are diffeomorphic / homotopy equivalent.
    """


@main.command()
@click.option("--a", "a", required=True, type=int, help="Base dimension parameter (>= 1).")
@click.option("--b", "b", required=True, type=int, help="Bundle rank (>= 1).")
@click.option("--q", "q", required=True, type=int, help="Tautological summands, first member.")
@click.option("--q-prime", required=True, type=int, help="Tautological summands, second member.")
@click.option("--oracle", is_flag=True, help="Also run the brute-force ring isomorphism search.")
@format_option
@out_option
def classify(a, b, q, q_prime, oracle, fmt, out) -> None:
    """Classify a single pair (q, q') for fixed (a, b)."""
    try:
        verdict = _validated_verdict(a, b, q, q_prime, with_oracle=oracle)
    except RuntimeError as exc:
        click.echo(str(exc), err=True)
        sys.exit(1)
    emit_records([record_from_verdict(verdict)], fmt, out)


@main.command()
@click.option("--a", "a", required=True, type=int)
@click.option("--b", "b", required=True, type=int)
@format_option
@out_option
def table(a, b, fmt, out) -> None:
    """Classify every pair 0 <= q <= q' <= b for fixed (a, b)."""
    records = []
    for q in range(b + 1):
        for q_prime in range(q, b + 1):
            verdict = _validated_verdict(a, b, q, q_prime)
            records.append(record_from_verdict(verdict))
    emit_records(records, fmt, out)


@main.command()
@click.option("--a-max", required=True, type=int)
@click.option("--b-max", required=True, type=int)
@format_option
@out_option
def counterexamples(a_max, b_max, fmt, out) -> None:
    """List, for each (a, b) in range where rigidity fails, a constructed
    pair with isomorphic cohomology but non-diffeomorphic manifolds."""
    if a_max < 1 or b_max < 1:
        raise click.UsageError("bounds must be >= 1")
    records = []
    for a in range(1, a_max + 1):
        for b in range(1, b_max + 1):
            pair = counterexample_pair(a, b)
            if pair is None:
                continue
            q, q_prime = pair
            verdict = _validated_verdict(a, b, q, q_prime)
            if verdict.cohomology_isomorphic and not verdict.diffeomorphic:
                records.append(record_from_verdict(verdict))
            else:  # pragma: no cover - counterexample_pair already asserts
                raise RuntimeError(f"constructed pair fails validation: {verdict}")
    emit_records(records, fmt, out)


def _parse_only(text: str) -> tuple[int, int]:
    try:
        fields = dict(part.split("=", 1) for part in text.split(","))
        return int(fields["a"]), int(fields["b"])
    except (ValueError, KeyError) as exc:
        raise click.UsageError(f"--only expects 'a=<int>,b=<int>', got {text!r}") from exc


@main.command()
@click.option("--a-max", default=6, show_default=True, type=int)
@click.option("--b-max", default=7, show_default=True, type=int)
@click.option("--only", default=None, help="Restrict to one cell, e.g. 'a=10,b=17'.")
@click.option("--extended", is_flag=True,
              help="Also sweep the nonvanishing checks and the Stiefel-Whitney swap symmetry.")
@out_option
def verify(a_max, b_max, only, extended, out) -> None:
    """Machine-check the congruence criterion against the ring oracle on an
    exhaustive (a, b, q, q') grid.  Exits 1 on any mismatch."""
    if a_max < 1 or b_max < 1:
        raise click.UsageError("bounds must be >= 1")
    cells = [_parse_only(only)] if only else [
        (a, b) for a in range(1, a_max + 1) for b in range(1, b_max + 1)
    ]
    start = time.perf_counter()
    cases = 0
    mismatches = 0
    for a, b in cells:
        cell_mismatches = 0
        for q in range(b + 1):
            src = RingPresentation(a, b, q)
            for q_prime in range(b + 1):
                verdict = rings_isomorphic_bruteforce(
                    src, RingPresentation(a, b, q_prime)
                )
                cases += 1
                if verdict.isomorphic != cohomology_criterion(a, b, q, q_prime):
                    cell_mismatches += 1
                    out.write(
                        f"MISMATCH a={a} b={b} q={q} q'={q_prime}: "
                        f"oracle={verdict.isomorphic}\n"
                    )
        mismatches += cell_mismatches
        out.write(f"a={a} b={b}: {(b + 1) ** 2} pairs, {cell_mismatches} mismatches\n")
    if extended:
        out.write(_extended_sweeps())
    elapsed = time.perf_counter() - start
    out.write(f"checked {cases} pairs in {elapsed:.2f}s: mismatches={mismatches}\n")
    if mismatches:
        sys.exit(1)


def _extended_sweeps() -> str:
    lines = []
    bad = [
        (a, b, q)
        for a in range(1, 9)
        for b in range(1, 9)
        for q in range(1, b)
        if nonvanishing_check(RingPresentation(a, b, q)) != (True, True)
    ]
    lines.append(f"nonvanishing sweep a,b<=8: {'ok' if not bad else f'FAILED {bad}'}")
    bad = []
    for a in range(1, 9):
        for b in range(1, 9):
            for q in range(b + 1):
                swapped = RingPresentation(a, b, b - q)
                carried = normal_form(
                    substitute_linear(
                        total_sw_class(RingPresentation(a, b, q)).lift(),
                        COMPLEMENT_SUBSTITUTION,
                    ),
                    swapped,
                )
                if carried != total_sw_class(swapped):
                    bad.append((a, b, q))
    lines.append(f"sw swap symmetry a,b<=8: {'ok' if not bad else f'FAILED {bad}'}")
    return "".join(line + "\n" for line in lines)


@main.command()
@click.option("--a", "a", required=True, type=int)
@click.option("--b", "b", required=True, type=int)
@click.option("--q", "q", required=True, type=int)
@click.option("--format", "fmt", type=click.Choice(("text", "json")), default="text",
              show_default=True)
@out_option
def sw(a, b, q, fmt, out) -> None:
    """Print the total Stiefel-Whitney class of the member (a, b, q)."""
    try:
        pres = RingPresentation(a, b, q)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    cls = str(total_sw_class(pres))
    if fmt == "json":
        out.write(json.dumps({"a": a, "b": b, "q": q, "sw_class": cls}) + "\n")
    else:
        out.write(f"w(a={a}, b={b}, q={q}) = {cls}\n")


if __name__ == "__main__":  # pragma: no cover
    main()
