"""Static expressiveness metrics for quantum program sources.

The pipeline: strip non-essential lines, tokenize against a language
profile, then derive lines of code, whole-program cyclomatic complexity,
and the Halstead suite. Corpus helpers aggregate per-unit reports into
cross-language comparison tables and SVG charts.
"""

from qxpress.charts import ChartSpec, default_chart_specs, render_chart
from qxpress.corpus import (
    AlgorithmUnit,
    CorpusManifest,
    ManifestUnit,
    bundled_corpus,
    ingest_directory,
    load_manifest,
    load_units,
    write_manifest,
)
from qxpress.errors import (
    AmbiguousExtensionError,
    ChartError,
    EncodingError,
    LexicalError,
    ManifestError,
    ProfileLookupError,
    ProfileOverrideError,
    QxpressError,
    ReportError,
    UnknownExtensionError,
)
from qxpress.lexer import (
    EffectiveSource,
    HalsteadCounts,
    SourceUnit,
    Token,
    TokenStream,
    classify_counts,
    count_loc,
    strip_non_essential,
    tokenize,
)
from qxpress.metrics import (
    MetricsReport,
    analyze_unit,
    cyclomatic_complexity,
    halstead_difficulty,
    halstead_effort,
    halstead_length,
    halstead_vocabulary,
    halstead_volume,
)
from qxpress.profiles import (
    LanguageProfile,
    ProfileRegistry,
    StringStyle,
    apply_overrides,
    builtin_profiles,
    load_override_file,
    resolve_profile,
)
from qxpress.report import (
    ComparisonTable,
    aggregate,
    compare_with_reference,
    parse_table,
    render_run_summary,
    render_table,
    render_unit_reports,
)

__version__ = "0.1.0"

__all__ = [
    "AlgorithmUnit",
    "AmbiguousExtensionError",
    "ChartError",
    "ChartSpec",
    "ComparisonTable",
    "CorpusManifest",
    "EffectiveSource",
    "EncodingError",
    "HalsteadCounts",
    "LanguageProfile",
    "LexicalError",
    "ManifestError",
    "ManifestUnit",
    "MetricsReport",
    "ProfileLookupError",
    "ProfileOverrideError",
    "ProfileRegistry",
    "QxpressError",
    "ReportError",
    "SourceUnit",
    "StringStyle",
    "Token",
    "TokenStream",
    "UnknownExtensionError",
    "aggregate",
    "analyze_unit",
    "apply_overrides",
    "builtin_profiles",
    "bundled_corpus",
    "classify_counts",
    "compare_with_reference",
    "count_loc",
    "cyclomatic_complexity",
    "default_chart_specs",
    "halstead_difficulty",
    "halstead_effort",
    "halstead_length",
    "halstead_vocabulary",
    "halstead_volume",
    "ingest_directory",
    "load_manifest",
    "load_units",
    "parse_table",
    "render_chart",
    "render_run_summary",
    "render_table",
    "render_unit_reports",
    "resolve_profile",
    "strip_non_essential",
    "tokenize",
    "write_manifest",
    "__version__",
]
