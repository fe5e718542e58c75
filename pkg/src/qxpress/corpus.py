"""Corpus manifests and the bundled six-language benchmark fixtures.

A manifest (``corpus.json``) lists analyzable units: each unit names its
language, its algorithm, and the source files that make it up, plus free-text
provenance. The bundled corpus covers four algorithms in six language
surfaces. Those fixtures were written locally against the canonical problem
parameters below; reference-table comparisons only trust units whose
provenance says they are the verbatim upstream files ("paper-repo").
"""

from __future__ import annotations

import fnmatch
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path

from qxpress.errors import ManifestError
from qxpress.lexer import SourceUnit
from qxpress.profiles import ProfileRegistry, builtin_profiles

logger = logging.getLogger(__name__)

PROVENANCE_UPSTREAM = "paper-repo"
PROVENANCE_REAUTHORED = "reauthored"

CANONICAL_ALGORITHMS = ("deutsch-jozsa", "bernstein-vazirani", "simon", "grover")

CANONICAL_PARAMETERS: dict[str, dict] = {
    "deutsch-jozsa": {"qubits": 3, "ancillas": 1},
    "bernstein-vazirani": {"qubits": 4, "ancillas": 1, "hidden_bitstring": "1101"},
    "simon": {"qubits": 3, "ancillas": 3, "hidden_bitstring": "101"},
    "grover": {"qubits": 3, "iterations": 2, "marked_state": "101"},
}

_UNIT_KEYS = frozenset(
    ["unit_name", "language_id", "algorithm_id", "files", "provenance", "parameters", "notes"]
)


@dataclass(frozen=True)
class ManifestUnit:
    unit_name: str
    language_id: str
    algorithm_id: str
    files: tuple[str, ...]
    provenance: str = PROVENANCE_REAUTHORED
    parameters: dict = field(default_factory=dict)
    notes: str = ""

    def to_json_dict(self) -> dict:
        entry: dict = {
            "unit_name": self.unit_name,
            "language_id": self.language_id,
            "algorithm_id": self.algorithm_id,
            "files": list(self.files),
            "provenance": self.provenance,
        }
        if self.parameters:
            entry["parameters"] = self.parameters
        if self.notes:
            entry["notes"] = self.notes
        return entry


@dataclass(frozen=True)
class CorpusManifest:
    units: tuple[ManifestUnit, ...]
    corpus_root: Path


@dataclass(frozen=True)
class AlgorithmUnit:
    """A loaded unit: its sources plus the manifest metadata."""

    source: SourceUnit
    algorithm_id: str
    provenance: str
    parameters: dict = field(default_factory=dict)


def bundled_corpus() -> CorpusManifest:
    """The manifest for the fixtures shipped inside the package."""
    root = Path(__file__).resolve().parent / "corpus"
    return load_manifest(root / "corpus.json")


def load_manifest(path: str | Path, registry: ProfileRegistry | None = None) -> CorpusManifest:
    """Read and validate a corpus manifest.

    Validation is strict: unknown keys, unknown language ids, duplicate
    (language, algorithm) pairs and missing files are all errors, each
    reported with the offending unit."""
    path = Path(path)
    registry = registry if registry is not None else builtin_profiles()
    try:
        raw = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ManifestError(f"cannot read manifest {path}: {exc}") from exc
    try:
        document = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ManifestError(f"manifest {path} is not valid JSON: {exc}") from exc
    if not isinstance(document, dict) or "units" not in document:
        raise ManifestError(f"manifest {path} must be an object with a 'units' list")
    extra = sorted(set(document) - {"units"})
    if extra:
        raise ManifestError(f"manifest {path} has unknown top-level keys: {', '.join(extra)}")
    if not isinstance(document["units"], list):
        raise ManifestError(f"manifest {path}: 'units' must be a list")

    root = path.resolve().parent
    units: list[ManifestUnit] = []
    seen_pairs: set[tuple[str, str]] = set()
    seen_names: set[str] = set()
    for index, entry in enumerate(document["units"]):
        where = f"manifest {path}, unit #{index}"
        if not isinstance(entry, dict):
            raise ManifestError(f"{where}: unit entries must be objects")
        unknown = sorted(set(entry) - _UNIT_KEYS)
        if unknown:
            raise ManifestError(f"{where}: unknown keys: {', '.join(unknown)}")
        unit = _parse_unit(where, entry)
        if unit.language_id not in registry:
            raise ManifestError(
                f"{where} ({unit.unit_name}): unknown language_id {unit.language_id!r} "
                f"(known: {', '.join(registry.ids())})"
            )
        pair = (unit.language_id, unit.algorithm_id)
        if pair in seen_pairs:
            raise ManifestError(
                f"{where} ({unit.unit_name}): duplicate (language, algorithm) pair {pair}"
            )
        if unit.unit_name in seen_names:
            raise ManifestError(f"{where}: duplicate unit_name {unit.unit_name!r}")
        seen_pairs.add(pair)
        seen_names.add(unit.unit_name)
        for rel in unit.files:
            target = root / rel
            if not target.is_file():
                raise ManifestError(f"{where} ({unit.unit_name}): missing file {target}")
        units.append(unit)
    return CorpusManifest(tuple(units), root)


def _parse_unit(where: str, entry: dict) -> ManifestUnit:
    for key in ("unit_name", "language_id", "algorithm_id"):
        value = entry.get(key)
        if not isinstance(value, str) or not value:
            raise ManifestError(f"{where}: {key} must be a non-empty string")
    files = entry.get("files")
    if (
        not isinstance(files, list)
        or not files
        or not all(isinstance(f, str) and f for f in files)
    ):
        raise ManifestError(f"{where}: files must be a non-empty list of paths")
    for rel in files:
        if Path(rel).is_absolute() or ".." in Path(rel).parts:
            raise ManifestError(f"{where}: file paths must stay inside the corpus root ({rel!r})")
    provenance = entry.get("provenance", PROVENANCE_REAUTHORED)
    if not isinstance(provenance, str) or not provenance:
        raise ManifestError(f"{where}: provenance must be a non-empty string")
    parameters = entry.get("parameters", {})
    if not isinstance(parameters, dict):
        raise ManifestError(f"{where}: parameters must be an object")
    notes = entry.get("notes", "")
    if not isinstance(notes, str):
        raise ManifestError(f"{where}: notes must be a string")
    return ManifestUnit(
        unit_name=entry["unit_name"],
        language_id=entry["language_id"],
        algorithm_id=entry["algorithm_id"],
        files=tuple(files),
        provenance=provenance,
        parameters=parameters,
        notes=notes,
    )


def write_manifest(manifest: CorpusManifest, path: str | Path) -> None:
    document = {"units": [unit.to_json_dict() for unit in manifest.units]}
    Path(path).write_text(json.dumps(document, indent=2) + "\n", encoding="utf-8")


def load_units(manifest: CorpusManifest) -> list[AlgorithmUnit]:
    """Read every unit's files from disk (as bytes; decoding happens later,
    so a bad file is reported with its path by the lexer)."""
    loaded: list[AlgorithmUnit] = []
    for unit in manifest.units:
        files = []
        for rel in unit.files:
            target = manifest.corpus_root / rel
            try:
                files.append((rel, target.read_bytes()))
            except OSError as exc:
                raise ManifestError(f"unit {unit.unit_name}: cannot read {target}: {exc}") from exc
        loaded.append(
            AlgorithmUnit(
                source=SourceUnit(unit.unit_name, unit.language_id, tuple(files)),
                algorithm_id=unit.algorithm_id,
                provenance=unit.provenance,
                parameters=unit.parameters,
            )
        )
    return loaded


def ingest_directory(
    root: str | Path,
    rules: list[tuple[str, str, str | None]] | None = None,
    registry: ProfileRegistry | None = None,
    provenance: str = "ingested",
) -> CorpusManifest:
    """Build a manifest for a directory tree of source files.

    ``rules`` entries are (glob, language_id, unit_name or None); all files a
    glob matches become one unit. Files no rule claims become one unit each,
    with the language detected from the extension; an extension claimed by
    several profiles is an error (pass a rule), an unknown extension is
    skipped with a warning.
    """
    root = Path(root).resolve()
    if not root.is_dir():
        raise ManifestError(f"ingest root {root} is not a directory")
    registry = registry if registry is not None else builtin_profiles()
    rules = rules or []
    for _, language_id, _name in rules:
        registry.get(language_id)  # unknown id -> ProfileLookupError

    all_files = sorted(
        p.relative_to(root).as_posix() for p in root.rglob("*") if p.is_file()
    )
    grouped: dict[int, list[str]] = {i: [] for i in range(len(rules))}
    leftovers: list[str] = []
    for rel in all_files:
        for i, (glob, _lang, _name) in enumerate(rules):
            if fnmatch.fnmatch(rel, glob):
                grouped[i].append(rel)
                break
        else:
            leftovers.append(rel)

    units: list[ManifestUnit] = []
    for i, (glob, language_id, unit_name) in enumerate(rules):
        if not grouped[i]:
            logger.warning("ingest rule %r matched no files", glob)
            continue
        name = unit_name or _slug(glob)
        units.append(
            ManifestUnit(
                unit_name=name,
                language_id=language_id,
                algorithm_id=name,
                files=tuple(grouped[i]),
                provenance=provenance,
            )
        )
    for rel in leftovers:
        ext = Path(rel).suffix.lower()
        candidates = registry.candidates_for_extension(ext)
        if not candidates:
            logger.warning("skipping %s: no profile claims extension %r", rel, ext)
            continue
        if len(candidates) > 1:
            raise ManifestError(
                f"cannot ingest {rel}: extension {ext!r} is ambiguous between "
                f"{', '.join(candidates)}; add an explicit rule"
            )
        stem = Path(rel).stem
        units.append(
            ManifestUnit(
                unit_name=stem,
                language_id=candidates[0],
                algorithm_id=stem,
                files=(rel,),
                provenance=provenance,
            )
        )
    manifest = CorpusManifest(tuple(units), root)
    _check_duplicates(manifest)
    return manifest


def _check_duplicates(manifest: CorpusManifest) -> None:
    seen: set[tuple[str, str]] = set()
    for unit in manifest.units:
        pair = (unit.language_id, unit.algorithm_id)
        if pair in seen:
            raise ManifestError(
                f"ingest produced duplicate (language, algorithm) pair {pair}; "
                "name the colliding units with explicit rules"
            )
        seen.add(pair)


def _slug(glob: str) -> str:
    kept = [ch if ch.isalnum() else "-" for ch in glob]
    slug = "".join(kept).strip("-")
    while "--" in slug:
        slug = slug.replace("--", "-")
    return slug or "unit"
