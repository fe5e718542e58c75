"""Aggregation of unit reports into comparison tables, and their rendering.

One ComparisonTable holds a single metric: languages down the side,
algorithms across the top, plus a per-language mean over the table's
algorithm columns (undefined when a language misses a column). Rendering is
deterministic; integers stay integers, reals are rounded to two decimals in
CSV/Markdown and kept at full precision in JSON so a JSON render parses back
to an equal table.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from qxpress import reference
from qxpress.errors import ReportError
from qxpress.metrics import MetricsReport

METRIC_IDS = (
    "loc", "cc", "n1", "n2", "N1", "N2",
    "vocabulary", "length", "volume", "difficulty", "effort",
)

_INTEGER_METRICS = frozenset(["loc", "cc", "n1", "n2", "N1", "N2", "vocabulary", "length"])

_EXTRACTORS = {
    "loc": lambda r: r.loc,
    "cc": lambda r: r.cc,
    "n1": lambda r: r.counts.n1,
    "n2": lambda r: r.counts.n2,
    "N1": lambda r: r.counts.N1,
    "N2": lambda r: r.counts.N2,
    "vocabulary": lambda r: r.vocabulary,
    "length": lambda r: r.length,
    "volume": lambda r: r.volume,
    "difficulty": lambda r: r.difficulty,
    "effort": lambda r: r.effort,
}


@dataclass(frozen=True)
class ComparisonTable:
    metric_id: str
    languages: tuple[str, ...]
    algorithms: tuple[str, ...]
    cells: dict[tuple[str, str], float | int] = field(default_factory=dict)
    means: dict[str, float | None] = field(default_factory=dict)

    def cell(self, language: str, algorithm: str) -> float | int | None:
        return self.cells.get((language, algorithm))


def algorithm_sort_key(algorithm_id: str):
    canonical = ("deutsch-jozsa", "bernstein-vazirani", "simon", "grover")
    try:
        return (canonical.index(algorithm_id), algorithm_id)
    except ValueError:
        return (len(canonical), algorithm_id)


def aggregate(reports: list[MetricsReport]) -> dict[str, ComparisonTable]:
    """Build one table per metric id from per-unit reports.

    Row and column order is canonical (sorted languages; the four benchmark
    algorithms first, extras alphabetically), so the output is independent
    of input order. Two reports for the same (language, algorithm) cell are
    an error."""
    languages = tuple(sorted({r.language_id for r in reports}))
    algorithms = tuple(sorted({r.algorithm_id for r in reports}, key=algorithm_sort_key))
    by_cell: dict[tuple[str, str], MetricsReport] = {}
    for report in reports:
        key = (report.language_id, report.algorithm_id)
        if key in by_cell:
            raise ReportError(
                f"two reports for the same (language, algorithm) cell {key}: "
                f"{by_cell[key].unit_name} and {report.unit_name}"
            )
        by_cell[key] = report

    tables: dict[str, ComparisonTable] = {}
    for metric_id in METRIC_IDS:
        extractor = _EXTRACTORS[metric_id]
        cells = {key: extractor(report) for key, report in by_cell.items()}
        means: dict[str, float | None] = {}
        for language in languages:
            values = [cells.get((language, algorithm)) for algorithm in algorithms]
            if any(v is None for v in values) or not values:
                means[language] = None
            else:
                means[language] = sum(values) / len(values)
        tables[metric_id] = ComparisonTable(metric_id, languages, algorithms, cells, means)
    return tables


# --- rendering ----------------------------------------------------------------


def _format_value(metric_id: str, value: float | int | None) -> str:
    if value is None:
        return ""
    if metric_id in _INTEGER_METRICS:
        return str(int(value))
    return f"{value:.2f}"


def render_table(table: ComparisonTable, fmt: str) -> str:
    """Render one table as "csv", "json" or "md" text."""
    if fmt == "csv":
        return _render_csv(table)
    if fmt == "json":
        return _render_json(table)
    if fmt == "md":
        return _render_md(table)
    raise ReportError(f"unknown table format {fmt!r} (expected csv, json or md)")


def _render_csv(table: ComparisonTable) -> str:
    lines = ["language," + ",".join(table.algorithms) + ",mean"]
    for language in table.languages:
        row = [language]
        for algorithm in table.algorithms:
            row.append(_format_value(table.metric_id, table.cell(language, algorithm)))
        mean = table.means.get(language)
        row.append("" if mean is None else f"{mean:.2f}")
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"


def _render_md(table: ComparisonTable) -> str:
    header = ["language", *table.algorithms, "mean"]
    lines = [
        "| " + " | ".join(header) + " |",
        "| " + " | ".join(["---"] + ["---:"] * (len(header) - 1)) + " |",
    ]
    for language in table.languages:
        row = [language]
        for algorithm in table.algorithms:
            value = _format_value(table.metric_id, table.cell(language, algorithm))
            row.append(value if value else "—")
        mean = table.means.get(language)
        row.append("—" if mean is None else f"{mean:.2f}")
        lines.append("| " + " | ".join(row) + " |")
    return "\n".join(lines) + "\n"


def _render_json(table: ComparisonTable) -> str:
    rows = []
    for language in table.languages:
        values = {
            algorithm: table.cell(language, algorithm)
            for algorithm in table.algorithms
            if table.cell(language, algorithm) is not None
        }
        rows.append({"language": language, "values": values, "mean": table.means.get(language)})
    document = {
        "metric": table.metric_id,
        "algorithms": list(table.algorithms),
        "rows": rows,
    }
    return json.dumps(document, indent=2) + "\n"


def parse_table(text: str) -> ComparisonTable:
    """Parse a JSON table render back into a ComparisonTable."""
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ReportError(f"not a JSON table: {exc}") from exc
    try:
        metric_id = document["metric"]
        algorithms = tuple(document["algorithms"])
        rows = document["rows"]
        languages = tuple(row["language"] for row in rows)
        cells: dict[tuple[str, str], float | int] = {}
        means: dict[str, float | None] = {}
        for row in rows:
            for algorithm, value in row["values"].items():
                cells[(row["language"], algorithm)] = value
            means[row["language"]] = row["mean"]
    except (KeyError, TypeError) as exc:
        raise ReportError(f"not a JSON table: missing field {exc}") from exc
    return ComparisonTable(metric_id, languages, algorithms, cells, means)


def render_unit_reports(reports: list[MetricsReport]) -> str:
    """All per-unit reports as one JSON document (full precision)."""
    return json.dumps([r.to_json_dict() for r in reports], indent=2) + "\n"


# --- comparison against the published reference --------------------------------


@dataclass(frozen=True)
class CellCheck:
    language: str
    algorithm: str
    metric_id: str
    ours: float | int
    expected: float | int
    matches: bool


@dataclass(frozen=True)
class OrderingCheck:
    metric_id: str
    expected: tuple[str, ...]
    ours: tuple[str, ...] | None
    applied: bool

    @property
    def matches(self) -> bool:
        return self.applied and self.ours == self.expected


@dataclass(frozen=True)
class ReferenceComparison:
    cell_checks: tuple[CellCheck, ...]
    mean_checks: tuple[CellCheck, ...]
    ordering_checks: tuple[OrderingCheck, ...]
    excluded_units: tuple[tuple[str, str], ...]  # (unit_name, provenance)

    @property
    def failures(self) -> list[CellCheck]:
        return [c for c in self.cell_checks + self.mean_checks if not c.matches]


def compare_with_reference(
    reports: list[MetricsReport], provenance: dict[str, str]
) -> ReferenceComparison:
    """Compare reports against the published results, by provenance.

    Only units tagged "paper-repo" take part: their loc and cc cells are
    checked exactly. The per-language mean and ordering checks need every
    cell of a language's four-algorithm row to be upstream material, and the
    ordering check needs the full six-language grid."""
    eligible: dict[tuple[str, str], MetricsReport] = {}
    excluded: list[tuple[str, str]] = []
    for report in reports:
        tag = provenance.get(report.unit_name, "unknown")
        if tag == "paper-repo":
            eligible[(report.language_id, report.algorithm_id)] = report
        else:
            excluded.append((report.unit_name, tag))

    cell_checks: list[CellCheck] = []
    for (language, algorithm), report in sorted(eligible.items()):
        for metric_id, table in (("loc", reference.REFERENCE_LOC), ("cc", reference.REFERENCE_CC)):
            expected = table.get((language, algorithm))
            if expected is None:
                continue
            ours = _EXTRACTORS[metric_id](report)
            cell_checks.append(
                CellCheck(language, algorithm, metric_id, ours, expected, ours == expected)
            )

    mean_checks: list[CellCheck] = []
    complete_languages = [
        language
        for language in reference.REFERENCE_LANGUAGES
        if all((language, a) in eligible for a in reference.REFERENCE_ALGORITHMS)
    ]
    for language in complete_languages:
        rows = [eligible[(language, a)] for a in reference.REFERENCE_ALGORITHMS]
        for metric_id, expected in sorted(reference.REFERENCE_HALSTEAD_MEANS[language].items()):
            ours = sum(_EXTRACTORS[metric_id](r) for r in rows) / len(rows)
            matches = abs(ours - expected) <= reference.MEAN_TOLERANCE
            mean_checks.append(CellCheck(language, "mean", metric_id, ours, expected, matches))

    full_grid = len(complete_languages) == len(reference.REFERENCE_LANGUAGES)
    ordering_checks: list[OrderingCheck] = []
    for metric_id, expected_order in (
        ("effort", reference.REFERENCE_EFFORT_ORDER),
        ("volume", reference.REFERENCE_VOLUME_ORDER),
    ):
        if full_grid:
            means = {
                language: sum(
                    _EXTRACTORS[metric_id](eligible[(language, a)])
                    for a in reference.REFERENCE_ALGORITHMS
                ) / len(reference.REFERENCE_ALGORITHMS)
                for language in reference.REFERENCE_LANGUAGES
            }
            ours = tuple(sorted(means, key=lambda lang: -means[lang]))
            ordering_checks.append(OrderingCheck(metric_id, expected_order, ours, True))
        else:
            ordering_checks.append(OrderingCheck(metric_id, expected_order, None, False))

    return ReferenceComparison(
        tuple(cell_checks), tuple(mean_checks), tuple(ordering_checks), tuple(excluded)
    )


def render_run_summary(
    reports: list[MetricsReport],
    comparison: ReferenceComparison,
    failures: list[tuple[str, str]] | None = None,
    profile_notes: dict[str, str] | None = None,
) -> str:
    """Human-readable summary of a corpus run, deterministic line by line."""
    lines: list[str] = []
    lines.append("corpus run summary")
    lines.append("==================")
    lines.append(f"units analyzed: {len(reports)}")
    languages = sorted({r.language_id for r in reports})
    lines.append(f"languages: {', '.join(languages) if languages else '(none)'}")
    degenerate = sorted(r.unit_name for r in reports if r.degenerate)
    lines.append(
        "degenerate units (vocabulary < 2 or no operands): "
        + (", ".join(degenerate) if degenerate else "none")
    )
    if failures:
        lines.append(f"failed units: {len(failures)}")
        for unit_name, message in failures:
            lines.append(f"  {unit_name}: {message}")
    lines.append("")
    lines.append("reference comparison (verbatim upstream units only)")
    lines.append("----------------------------------------------------")
    compared = len(comparison.cell_checks)
    mismatched = [c for c in comparison.cell_checks if not c.matches]
    lines.append(f"loc/cc cells compared: {compared}, mismatches: {len(mismatched)}")
    for check in mismatched:
        lines.append(
            f"  MISMATCH {check.metric_id} {check.language}/{check.algorithm}: "
            f"ours={check.ours} expected={check.expected}"
        )
    mean_mismatched = [c for c in comparison.mean_checks if not c.matches]
    lines.append(
        f"per-language mean cells compared: {len(comparison.mean_checks)}, "
        f"mismatches: {len(mean_mismatched)}"
    )
    for check in mean_mismatched:
        lines.append(
            f"  MISMATCH mean {check.metric_id} {check.language}: "
            f"ours={check.ours:.2f} expected={check.expected:.2f}"
        )
    for ordering in comparison.ordering_checks:
        if not ordering.applied:
            lines.append(
                f"{ordering.metric_id} ordering check: skipped "
                "(needs the full six-language grid with upstream provenance)"
            )
        else:
            verdict = "matches" if ordering.matches else "DIFFERS"
            lines.append(
                f"{ordering.metric_id} ordering check: {verdict} "
                f"(ours: {' > '.join(ordering.ours)})"
            )
    if comparison.excluded_units:
        lines.append(f"units excluded from comparison: {len(comparison.excluded_units)}")
        for unit_name, tag in sorted(comparison.excluded_units):
            lines.append(f"  {unit_name} (provenance: {tag})")
    else:
        lines.append("units excluded from comparison: none")
    if profile_notes:
        lines.append("")
        lines.append("profile notes")
        lines.append("-------------")
        for profile_id, note in sorted(profile_notes.items()):
            lines.append(f"{profile_id}: {note}")
    return "\n".join(lines) + "\n"
