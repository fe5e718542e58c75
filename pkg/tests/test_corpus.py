import json

import pytest

from qxpress.corpus import (
    CANONICAL_ALGORITHMS,
    CANONICAL_PARAMETERS,
    PROVENANCE_REAUTHORED,
    bundled_corpus,
    ingest_directory,
    load_manifest,
    load_units,
    write_manifest,
)
from qxpress.errors import ManifestError, ProfileLookupError
from qxpress.metrics import analyze_unit

LANGS = ("cirq", "qiskit", "qmod", "qrisp", "qsharp", "quapl")


# --- the bundled corpus ------------------------------------------------------------


def test_bundled_corpus_covers_the_grid():
    manifest = bundled_corpus()
    assert len(manifest.units) == 24
    pairs = {(u.language_id, u.algorithm_id) for u in manifest.units}
    assert pairs == {(l, a) for l in LANGS for a in CANONICAL_ALGORITHMS}


def test_bundled_units_are_marked_reauthored():
    for unit in bundled_corpus().units:
        assert unit.provenance == PROVENANCE_REAUTHORED
        assert unit.notes  # every unit says where it came from


def test_bundled_units_use_canonical_parameters():
    for unit in bundled_corpus().units:
        assert unit.parameters == CANONICAL_PARAMETERS[unit.algorithm_id]


def test_bundled_corpus_analyzes_cleanly(registry):
    for unit in load_units(bundled_corpus()):
        profile = registry.get(unit.source.language_id)
        report = analyze_unit(unit.source, profile, unit.algorithm_id)
        assert report.loc > 0, unit.source.unit_name
        assert report.cc >= 1
        assert not report.degenerate, unit.source.unit_name


def test_bundled_unit_names_follow_language_algorithm():
    for unit in bundled_corpus().units:
        assert unit.unit_name == f"{unit.language_id}-{unit.algorithm_id}"


# --- manifest loading ---------------------------------------------------------------


def write_corpus(tmp_path, units, extra=None):
    (tmp_path / "dj.qmod").write_text("qfunc main() {}\n", encoding="utf-8")
    document = {"units": units}
    if extra:
        document.update(extra)
    path = tmp_path / "corpus.json"
    path.write_text(json.dumps(document), encoding="utf-8")
    return path


GOOD_UNIT = {
    "unit_name": "qmod-dj",
    "language_id": "qmod",
    "algorithm_id": "deutsch-jozsa",
    "files": ["dj.qmod"],
}


def test_load_manifest_minimal(tmp_path):
    manifest = load_manifest(write_corpus(tmp_path, [GOOD_UNIT]))
    (unit,) = manifest.units
    assert unit.provenance == PROVENANCE_REAUTHORED  # the safe default
    assert unit.parameters == {}
    assert manifest.corpus_root == tmp_path


def test_load_manifest_rejects_unknown_unit_key(tmp_path):
    bad = dict(GOOD_UNIT, author="me")
    with pytest.raises(ManifestError) as err:
        load_manifest(write_corpus(tmp_path, [bad]))
    assert "unknown keys: author" in str(err.value)


def test_load_manifest_rejects_unknown_top_level_key(tmp_path):
    with pytest.raises(ManifestError) as err:
        load_manifest(write_corpus(tmp_path, [GOOD_UNIT], extra={"version": 2}))
    assert "unknown top-level keys: version" in str(err.value)


def test_load_manifest_rejects_unknown_language(tmp_path):
    bad = dict(GOOD_UNIT, language_id="scheme")
    with pytest.raises(ManifestError) as err:
        load_manifest(write_corpus(tmp_path, [bad]))
    assert "scheme" in str(err.value) and "qmod-dj" in str(err.value)


def test_load_manifest_rejects_duplicate_pair(tmp_path):
    other = dict(GOOD_UNIT, unit_name="qmod-dj-again")
    with pytest.raises(ManifestError) as err:
        load_manifest(write_corpus(tmp_path, [GOOD_UNIT, other]))
    assert "duplicate (language, algorithm)" in str(err.value)


def test_load_manifest_rejects_duplicate_name(tmp_path):
    other = dict(GOOD_UNIT, algorithm_id="grover")
    with pytest.raises(ManifestError) as err:
        load_manifest(write_corpus(tmp_path, [GOOD_UNIT, other]))
    assert "duplicate unit_name" in str(err.value)


def test_load_manifest_rejects_missing_file(tmp_path):
    bad = dict(GOOD_UNIT, files=["nope.qmod"])
    with pytest.raises(ManifestError) as err:
        load_manifest(write_corpus(tmp_path, [bad]))
    assert "missing file" in str(err.value)


def test_load_manifest_rejects_escaping_paths(tmp_path):
    for rel in ("../dj.qmod", "/etc/passwd"):
        bad = dict(GOOD_UNIT, files=[rel])
        with pytest.raises(ManifestError) as err:
            load_manifest(write_corpus(tmp_path, [bad]))
        assert "inside the corpus root" in str(err.value)


def test_load_manifest_rejects_bad_json(tmp_path):
    path = tmp_path / "corpus.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(ManifestError):
        load_manifest(path)
    with pytest.raises(ManifestError):
        load_manifest(tmp_path / "absent.json")


def test_manifest_round_trip(tmp_path):
    original = bundled_corpus()
    copy_path = tmp_path / "again.json"
    write_manifest(original, copy_path)
    # the files live next to the original manifest, so point the copy there
    reread = json.loads(copy_path.read_text(encoding="utf-8"))
    assert len(reread["units"]) == 24
    rewritten = load_manifest(
        write_corpus_from_document(tmp_path, reread, original.corpus_root)
    )
    assert [u.unit_name for u in rewritten.units] == [u.unit_name for u in original.units]
    assert [u.files for u in rewritten.units] == [u.files for u in original.units]


def write_corpus_from_document(tmp_path, document, source_root):
    # materialize the referenced files so validation passes
    import shutil

    for unit in document["units"]:
        for rel in unit["files"]:
            target = tmp_path / rel
            target.parent.mkdir(parents=True, exist_ok=True)
            shutil.copyfile(source_root / rel, target)
    path = tmp_path / "roundtrip.json"
    path.write_text(json.dumps(document), encoding="utf-8")
    return path


def test_load_units_reads_bytes(tmp_path):
    manifest = load_manifest(write_corpus(tmp_path, [GOOD_UNIT]))
    (unit,) = load_units(manifest)
    assert unit.source.files == (("dj.qmod", b"qfunc main() {}\n"),)
    assert unit.algorithm_id == "deutsch-jozsa"


# --- ingest ------------------------------------------------------------------------


def make_tree(tmp_path):
    (tmp_path / "grover.qs").write_text("namespace G {}\n", encoding="utf-8")
    (tmp_path / "dj.qmod").write_text("qfunc main() {}\n", encoding="utf-8")
    (tmp_path / "sub").mkdir()
    (tmp_path / "sub" / "simon.apl").write_text("r←⍳3\n", encoding="utf-8")
    return tmp_path


def test_ingest_by_extension(tmp_path):
    manifest = ingest_directory(make_tree(tmp_path))
    by_name = {u.unit_name: u for u in manifest.units}
    assert set(by_name) == {"grover", "dj", "simon"}
    assert by_name["grover"].language_id == "qsharp"
    assert by_name["dj"].language_id == "qmod"
    assert by_name["simon"].language_id == "quapl"
    assert by_name["simon"].files == ("sub/simon.apl",)
    assert all(u.provenance == "ingested" for u in manifest.units)


def test_ingest_rule_groups_files(tmp_path):
    tree = make_tree(tmp_path)
    (tree / "helpers.qmod").write_text("qfunc helper() {}\n", encoding="utf-8")
    manifest = ingest_directory(tree, rules=[("*.qmod", "qmod", "qmod-all")])
    by_name = {u.unit_name: u for u in manifest.units}
    assert by_name["qmod-all"].files == ("dj.qmod", "helpers.qmod")
    assert by_name["qmod-all"].algorithm_id == "qmod-all"


def test_ingest_ambiguous_extension_needs_a_rule(tmp_path):
    tree = make_tree(tmp_path)
    (tree / "bell.py").write_text("import cirq\n", encoding="utf-8")
    with pytest.raises(ManifestError) as err:
        ingest_directory(tree)
    assert "ambiguous" in str(err.value)
    manifest = ingest_directory(tree, rules=[("*.py", "cirq", None)])
    languages = {u.language_id for u in manifest.units}
    assert "cirq" in languages


def test_ingest_skips_unknown_extension(tmp_path, caplog):
    tree = make_tree(tmp_path)
    (tree / "README.md").write_text("docs\n", encoding="utf-8")
    with caplog.at_level("WARNING", logger="qxpress.corpus"):
        manifest = ingest_directory(tree)
    assert all("README" not in u.files for u in manifest.units)
    assert any("README.md" in rec.message for rec in caplog.records)


def test_ingest_unknown_rule_language(tmp_path):
    with pytest.raises(ProfileLookupError):
        ingest_directory(make_tree(tmp_path), rules=[("*.qs", "haskell", None)])


def test_ingest_duplicate_stems_collide(tmp_path):
    tree = make_tree(tmp_path)
    (tree / "sub2").mkdir()
    (tree / "sub2" / "simon.apl").write_text("r←⍳4\n", encoding="utf-8")
    with pytest.raises(ManifestError) as err:
        ingest_directory(tree)
    assert "duplicate" in str(err.value)


def test_ingest_missing_root(tmp_path):
    with pytest.raises(ManifestError):
        ingest_directory(tmp_path / "nowhere")
