import json

import pytest

from qxpress.errors import (
    AmbiguousExtensionError,
    ProfileLookupError,
    ProfileOverrideError,
    UnknownExtensionError,
)
from qxpress.lexer import EffectiveSource, tokenize
from qxpress.profiles import (
    LanguageProfile,
    ProfileRegistry,
    StringStyle,
    apply_overrides,
    builtin_profiles,
    load_override_file,
    resolve_profile,
)

BUILTIN_IDS = ("cirq", "qiskit", "qmod", "qrisp", "qsharp", "quapl")


def test_builtin_ids(registry):
    assert registry.ids() == BUILTIN_IDS


def test_python_hosted_profiles_share_surface(registry):
    qiskit = registry.get("qiskit")
    cirq = registry.get("cirq")
    qrisp = registry.get("qrisp")
    for profile in (qiskit, cirq, qrisp):
        assert profile.file_extensions == (".py",)
        assert profile.strip_docstrings
        assert profile.backslash_continues_lines
    assert qiskit.cc_constructs == cirq.cc_constructs == qrisp.cc_constructs


@pytest.mark.parametrize(
    ("profile_id", "present", "absent"),
    [
        ("qiskit", {"if", "elif", "for", "while", "except", "with", "assert",
                    "list", "set", "dict", "and", "or", "on_each"}, {"else", "def"}),
        ("qmod", {"if", "else", "repeat", "within", "apply", "lambda", "and", "or"},
         {"elif", "while"}),
        ("qsharp", {"if", "elif", "for", "ApplyToEachA", "MeasureEachZ",
                    "try", "catch", "repeat", "until"}, {"else", "and"}),
        ("quapl", {":If", ":ElseIf", ":For", ":While", ":Repeat", ":Select",
                   ":Trap", "¨", ":"}, {":EndIf", ":Else"}),
    ],
)
def test_construct_sets(registry, profile_id, present, absent):
    constructs = registry.get(profile_id).cc_constructs
    assert present <= constructs
    assert not (absent & constructs)


def test_construct_lexemes_round_trip_through_lexer(registry):
    """Every construct lexeme must come out of the lexer as exactly one
    countable token, otherwise it could never contribute to cc."""
    for profile in registry:
        for lexeme in sorted(profile.cc_constructs):
            if lexeme in ("list", "set", "dict") and profile.id != "qmod":
                continue  # comprehension kinds, not literal lexemes
            stream = tokenize(EffectiveSource.from_text(lexeme), profile)
            assert [t.lexeme for t in stream.tokens] == [lexeme], (profile.id, lexeme)
            assert stream.tokens[0].kind not in ("number-literal", "string-literal")


def test_get_unknown_profile(registry):
    with pytest.raises(ProfileLookupError) as err:
        registry.get("fortran")
    assert "fortran" in str(err.value)


def test_resolve_by_hint(registry):
    assert resolve_profile(registry, "qmod", "whatever.txt").id == "qmod"


def test_resolve_by_extension(registry):
    assert resolve_profile(registry, None, "grover.qs").id == "qsharp"
    assert resolve_profile(registry, "auto", "x/y/simon.qmod").id == "qmod"
    assert resolve_profile(registry, None, "dj.aplf").id == "quapl"


def test_resolve_ambiguous_py(registry):
    with pytest.raises(AmbiguousExtensionError) as err:
        resolve_profile(registry, "auto", "grover.py")
    assert "is ambiguous between" in str(err.value)


def test_resolve_unknown_extension(registry):
    with pytest.raises(UnknownExtensionError):
        resolve_profile(registry, None, "notes.rst")


def test_register_conflict_and_replace():
    registry = builtin_profiles()
    qmod = registry.get("qmod")
    registry.register(qmod)  # same object again is fine
    altered = LanguageProfile(
        id="qmod",
        display_name="Qmod (altered)",
        file_extensions=qmod.file_extensions,
        line_comment_prefixes=qmod.line_comment_prefixes,
        block_comment_pairs=qmod.block_comment_pairs,
        string_styles=qmod.string_styles,
        cc_constructs=qmod.cc_constructs,
        operator_lexemes=qmod.operator_lexemes,
        identifier_pattern=qmod.identifier_pattern,
        number_pattern=qmod.number_pattern,
    )
    with pytest.raises(ProfileOverrideError):
        registry.register(altered)
    registry.replace(altered)
    assert registry.get("qmod").display_name == "Qmod (altered)"


def test_apply_overrides_changes_cc_set(registry):
    overrides = {"qmod": {"cc_constructs": ["if", "repeat"]}}
    patched = apply_overrides(registry, overrides)
    assert patched.get("qmod").cc_constructs == frozenset({"if", "repeat"})
    # the original registry is untouched
    assert "within" in registry.get("qmod").cc_constructs


def test_apply_overrides_comment_markers(registry):
    overrides = {"qsharp": {"comment_markers": ["//", ["{-", "-}"]]}}
    patched = apply_overrides(registry, overrides)
    profile = patched.get("qsharp")
    assert profile.line_comment_prefixes == ("//",)
    assert profile.block_comment_pairs == (("{-", "-}"),)


def test_apply_overrides_rejects_unknown_profile(registry):
    with pytest.raises(ProfileLookupError):
        apply_overrides(registry, {"cobol": {"cc_constructs": ["if"]}})


def test_apply_overrides_rejects_unknown_key(registry):
    with pytest.raises(ProfileOverrideError) as err:
        apply_overrides(registry, {"qmod": {"keywords": ["if"]}})
    assert "unknown keys" in str(err.value)


def test_apply_overrides_rejects_bad_value_shapes(registry):
    with pytest.raises(ProfileOverrideError):
        apply_overrides(registry, {"qmod": {"cc_constructs": "if"}})
    with pytest.raises(ProfileOverrideError):
        apply_overrides(registry, {"qmod": {"comment_markers": [["only-one"]]}})
    with pytest.raises(ProfileOverrideError):
        apply_overrides(registry, {"qmod": ["not-an-object"]})


def test_load_override_file(tmp_path):
    path = tmp_path / "overrides.json"
    path.write_text(json.dumps({"quapl": {"cc_constructs": [":If"]}}), encoding="utf-8")
    assert load_override_file(path) == {"quapl": {"cc_constructs": [":If"]}}

    bad = tmp_path / "bad.json"
    bad.write_text("[1, 2]", encoding="utf-8")
    with pytest.raises(ProfileOverrideError):
        load_override_file(bad)
    with pytest.raises(ProfileOverrideError):
        load_override_file(tmp_path / "missing.json")


def test_quapl_profile_flags(registry):
    quapl = registry.get("quapl")
    assert not quapl.call_is_operator
    assert quapl.glyph_symbols
    assert quapl.notes.startswith("quAPL constructs: local default.")
    style = quapl.string_styles[0]
    assert style.doubled_quote_escapes and not style.backslash_escapes


def test_keywords_and_symbols_split(registry):
    qsharp = registry.get("qsharp")
    assert "operation" in qsharp.keywords()
    symbols = qsharp.symbols()
    assert "=>" in symbols
    # longest-first ordering so maximal munch works by scanning in order
    lengths = [len(s) for s in symbols]
    assert lengths == sorted(lengths, reverse=True)


def test_string_style_defaults():
    style = StringStyle(delimiter='"')
    assert not style.multiline
    assert style.backslash_escapes
    assert style.prefixes == ()


def test_registry_container_protocol(registry):
    assert "qiskit" in registry
    assert "ada" not in registry
    assert len(registry) == 6
    assert sorted(p.id for p in registry) == list(BUILTIN_IDS)


def test_empty_registry_resolution_fails():
    empty = ProfileRegistry()
    with pytest.raises(UnknownExtensionError):
        resolve_profile(empty, None, "a.py")
