"""Command-line interface.

Subcommands:

* ``analyze PATH... [--lang ID]`` - metrics for one unit, to stdout or --out
* ``corpus run`` - analyze a whole manifest (bundled one by default) and
  write tables, charts and per-unit JSON into an output directory
* ``corpus ingest ROOT`` - build a manifest for a directory tree
* ``profiles list`` / ``profiles show ID`` - inspect language profiles

Exit codes: 0 success, 1 analysis failure (unreadable or undecodable input,
bad manifest, failed units), 2 usage errors (bad flags, unknown profile id,
ambiguous language detection). Diagnostics go to stderr, data to stdout.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from concurrent.futures import ThreadPoolExecutor, as_completed
from pathlib import Path

from qxpress.charts import default_chart_specs, render_chart
from qxpress.corpus import (
    AlgorithmUnit,
    bundled_corpus,
    ingest_directory,
    load_manifest,
    load_units,
    write_manifest,
)
from qxpress.errors import (
    AmbiguousExtensionError,
    ProfileLookupError,
    QxpressError,
    UnknownExtensionError,
)
from qxpress.lexer import SourceUnit
from qxpress.metrics import MetricsReport, analyze_unit
from qxpress.profiles import (
    ProfileRegistry,
    apply_overrides,
    builtin_profiles,
    load_override_file,
    resolve_profile,
)
from qxpress.report import (
    METRIC_IDS,
    aggregate,
    algorithm_sort_key,
    compare_with_reference,
    render_run_summary,
    render_table,
    render_unit_reports,
)

logger = logging.getLogger(__name__)

OVERRIDES_ENV_VAR = "QXPRESS_PROFILE_OVERRIDES"

_USAGE_ERRORS = (ProfileLookupError, AmbiguousExtensionError, UnknownExtensionError)

_EMIT_CHOICES = ("tables", "charts", "json")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except QxpressError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # noqa: BLE001 - last-resort guard for the CLI
        print(f"internal error: {exc!r}", file=sys.stderr)
        return 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--profiles",
        metavar="FILE",
        help="profile overrides JSON (also read from $" + OVERRIDES_ENV_VAR + ")",
    )
    common.add_argument("-v", "--verbose", action="store_true", help="log details to stderr")

    parser = argparse.ArgumentParser(
        prog="qxpress",
        description="Static expressiveness metrics for quantum program sources.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    analyze = subparsers.add_parser(
        "analyze", parents=[common], help="analyze one unit made of the given files"
    )
    analyze.add_argument("paths", nargs="+", metavar="PATH")
    analyze.add_argument("--lang", default="auto", help="language profile id (default: by extension)")
    analyze.add_argument("--unit", help="unit name (default: first file's stem)")
    analyze.add_argument("--format", choices=("json", "csv", "md"), default="json")
    analyze.add_argument("--out", metavar="FILE", help="write the report here instead of stdout")
    analyze.set_defaults(func=cmd_analyze)

    corpus = subparsers.add_parser("corpus", help="corpus-level operations")
    corpus_sub = corpus.add_subparsers(dest="corpus_command", required=True)

    run = corpus_sub.add_parser(
        "run", parents=[common], help="analyze a manifest and write tables and charts"
    )
    run.add_argument("--manifest", metavar="FILE", help="corpus manifest (default: bundled corpus)")
    run.add_argument("--out", required=True, metavar="DIR", help="output directory")
    run.add_argument(
        "--emit",
        default=",".join(_EMIT_CHOICES),
        metavar="LIST",
        help="comma-separated outputs: tables, charts, json (default: all)",
    )
    run.add_argument("--jobs", type=int, default=1, metavar="N", help="parallel analysis threads")
    run.add_argument("--force", action="store_true", help="overwrite existing output files")
    run.set_defaults(func=cmd_corpus_run)

    ingest = corpus_sub.add_parser(
        "ingest", parents=[common], help="build a manifest for a directory tree"
    )
    ingest.add_argument("root", metavar="DIR")
    ingest.add_argument(
        "--rule",
        dest="rules",
        action="append",
        default=[],
        type=_parse_rule,
        metavar="GLOB=LANG[:NAME]",
        help="group files matching GLOB into one unit of language LANG",
    )
    ingest.add_argument("--out", metavar="FILE", help="write the manifest here instead of stdout")
    ingest.set_defaults(func=cmd_corpus_ingest)

    profiles = subparsers.add_parser("profiles", help="inspect language profiles")
    profiles_sub = profiles.add_subparsers(dest="profiles_command", required=True)
    listing = profiles_sub.add_parser("list", parents=[common], help="list profile ids")
    listing.set_defaults(func=cmd_profiles_list)
    show = profiles_sub.add_parser("show", parents=[common], help="show one profile")
    show.add_argument("profile_id", metavar="ID")
    show.set_defaults(func=cmd_profiles_show)

    return parser


def _parse_rule(text: str) -> tuple[str, str, str | None]:
    glob, sep, rest = text.partition("=")
    if not sep or not glob or not rest:
        raise argparse.ArgumentTypeError(
            f"rule {text!r} must look like GLOB=LANG or GLOB=LANG:NAME"
        )
    language_id, _, name = rest.partition(":")
    if not language_id:
        raise argparse.ArgumentTypeError(f"rule {text!r} names no language")
    return glob, language_id, name or None


def _registry(args) -> ProfileRegistry:
    registry = builtin_profiles()
    path = args.profiles or os.environ.get(OVERRIDES_ENV_VAR)
    if path:
        logger.debug("applying profile overrides from %s", path)
        registry = apply_overrides(registry, load_override_file(path))
    return registry


# --- analyze -------------------------------------------------------------------


def cmd_analyze(args) -> int:
    registry = _registry(args)
    paths = [Path(p) for p in args.paths]
    profile = resolve_profile(registry, args.lang, paths[0])
    unit_name = args.unit or paths[0].stem
    files = []
    for path in paths:
        try:
            files.append((str(path), path.read_bytes()))
        except OSError as exc:
            print(f"error: cannot read {path}: {exc}", file=sys.stderr)
            return 1
    unit = SourceUnit(unit_name, profile.id, tuple(files))
    report = analyze_unit(unit, profile, algorithm_id=unit_name)
    rendered = _render_unit(report, args.format)
    if args.out:
        Path(args.out).write_text(rendered, encoding="utf-8")
    else:
        sys.stdout.write(rendered)
    return 0


_UNIT_FIELDS = (
    "unit_name", "language", "algorithm", "loc", "cc",
    "n1", "n2", "N1", "N2", "vocabulary", "length", "volume", "difficulty", "effort",
)


def _unit_row(report: MetricsReport) -> list[str]:
    return [
        report.unit_name,
        report.language_id,
        report.algorithm_id,
        str(report.loc),
        str(report.cc),
        str(report.counts.n1),
        str(report.counts.n2),
        str(report.counts.N1),
        str(report.counts.N2),
        str(report.vocabulary),
        str(report.length),
        f"{report.volume:.2f}",
        f"{report.difficulty:.2f}",
        f"{report.effort:.2f}",
    ]


def _render_unit(report: MetricsReport, fmt: str) -> str:
    if fmt == "json":
        return render_unit_reports([report])
    row = _unit_row(report)
    if fmt == "csv":
        return ",".join(_UNIT_FIELDS) + "\n" + ",".join(row) + "\n"
    lines = [
        "| " + " | ".join(_UNIT_FIELDS) + " |",
        "| " + " | ".join(["---"] * len(_UNIT_FIELDS)) + " |",
        "| " + " | ".join(row) + " |",
    ]
    return "\n".join(lines) + "\n"


# --- corpus run ------------------------------------------------------------------


def cmd_corpus_run(args) -> int:
    emit = _parse_emit(args.emit)
    if emit is None:
        print(
            f"error: --emit accepts a comma-separated subset of {', '.join(_EMIT_CHOICES)}",
            file=sys.stderr,
        )
        return 2
    if args.jobs < 1:
        print("error: --jobs must be at least 1", file=sys.stderr)
        return 2
    registry = _registry(args)
    manifest = (
        load_manifest(args.manifest, registry) if args.manifest else bundled_corpus()
    )
    units = load_units(manifest)
    reports, failures = _analyze_units(units, registry, args.jobs)

    tables = aggregate(reports)
    provenance = {unit.source.unit_name: unit.provenance for unit in units}
    comparison = compare_with_reference(reports, provenance)
    present = {r.language_id for r in reports}
    notes = {p.id: p.notes for p in registry if p.notes and p.id in present}
    summary = render_run_summary(reports, comparison, failures, notes)

    out_dir = Path(args.out)
    writes: list[tuple[Path, str]] = [(out_dir / "summary.txt", summary)]
    if "tables" in emit:
        for metric_id in METRIC_IDS:
            for fmt in ("csv", "json", "md"):
                writes.append(
                    (out_dir / f"{metric_id}.{fmt}", render_table(tables[metric_id], fmt))
                )
    if "json" in emit:
        writes.append((out_dir / "units.json", render_unit_reports(reports)))
    if "charts" in emit:
        for spec in default_chart_specs():
            writes.append((out_dir / "charts" / f"{spec.name}.svg", render_chart(spec, tables)))

    if not args.force:
        existing = [str(path) for path, _ in writes if path.exists()]
        if existing:
            print(
                "error: output files exist (pass --force to overwrite): "
                + ", ".join(existing[:5]),
                file=sys.stderr,
            )
            return 1
    for path, payload in writes:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(payload, encoding="utf-8")
    sys.stdout.write(summary)
    if failures:
        print(f"error: {len(failures)} unit(s) failed analysis", file=sys.stderr)
        return 1
    return 0


def _parse_emit(text: str) -> set[str] | None:
    chosen = {item.strip() for item in text.split(",") if item.strip()}
    if not chosen or not chosen.issubset(_EMIT_CHOICES):
        return None
    return chosen


def _analyze_units(
    units: list[AlgorithmUnit], registry: ProfileRegistry, jobs: int
) -> tuple[list[MetricsReport], list[tuple[str, str]]]:
    """Analyze units, optionally in parallel; results come back in canonical
    order either way, so output bytes never depend on --jobs."""

    def one(unit: AlgorithmUnit) -> MetricsReport:
        profile = registry.get(unit.source.language_id)
        return analyze_unit(unit.source, profile, unit.algorithm_id)

    reports: list[MetricsReport] = []
    failures: list[tuple[str, str]] = []
    if jobs <= 1 or len(units) <= 1:
        for unit in units:
            try:
                reports.append(one(unit))
            except QxpressError as exc:
                failures.append((unit.source.unit_name, str(exc)))
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            futures = {pool.submit(one, unit): unit for unit in units}
            for future in as_completed(futures):
                unit = futures[future]
                try:
                    reports.append(future.result())
                except QxpressError as exc:
                    failures.append((unit.source.unit_name, str(exc)))
    reports.sort(key=lambda r: (r.language_id, algorithm_sort_key(r.algorithm_id), r.unit_name))
    failures.sort()
    return reports, failures


# --- corpus ingest ----------------------------------------------------------------


def cmd_corpus_ingest(args) -> int:
    registry = _registry(args)
    manifest = ingest_directory(args.root, args.rules, registry)
    if args.out:
        write_manifest(manifest, args.out)
        print(f"wrote manifest with {len(manifest.units)} unit(s) to {args.out}", file=sys.stderr)
    else:
        import json as _json

        document = {"units": [unit.to_json_dict() for unit in manifest.units]}
        sys.stdout.write(_json.dumps(document, indent=2) + "\n")
    return 0


# --- profiles ----------------------------------------------------------------------


def cmd_profiles_list(args) -> int:
    registry = _registry(args)
    for profile in registry:
        print(f"{profile.id}\t{profile.display_name}")
    return 0


def cmd_profiles_show(args) -> int:
    registry = _registry(args)
    profile = registry.get(args.profile_id)
    print(f"id: {profile.id}")
    print(f"display name: {profile.display_name}")
    print(f"file extensions: {', '.join(profile.file_extensions)}")
    print(f"line comments: {', '.join(profile.line_comment_prefixes) or '(none)'}")
    blocks = ", ".join(f"{a} ... {b}" for a, b in profile.block_comment_pairs)
    print(f"block comments: {blocks or '(none)'}")
    strings = ", ".join(
        style.delimiter + (" (multiline)" if style.multiline else "")
        for style in profile.string_styles
    )
    print(f"string styles: {strings}")
    print(f"calls are operators: {'yes' if profile.call_is_operator else 'no'}")
    print(f"docstrings stripped: {'yes' if profile.strip_docstrings else 'no'}")
    print(f"cc constructs: {', '.join(sorted(profile.cc_constructs))}")
    print(f"operator lexemes ({len(profile.operator_lexemes)}): "
          + ", ".join(sorted(profile.operator_lexemes)))
    if profile.notes:
        print(f"notes: {profile.notes}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
