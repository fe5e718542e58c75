"""Language profiles: the per-language lexical knowledge behind all counting.

A profile is pure data. It tells the lexer how comments, strings, numbers and
identifiers look, which lexemes are operators, and which lexemes feed the
cyclomatic complexity count. Adding a language means writing a profile, not
touching the lexer.

Profiles are frozen dataclasses: immutable after construction and safe to
share between threads.
"""

from __future__ import annotations

import json
import logging
import re
from dataclasses import dataclass, replace
from pathlib import Path

from qxpress.errors import (
    AmbiguousExtensionError,
    ProfileLookupError,
    ProfileOverrideError,
    UnknownExtensionError,
)

logger = logging.getLogger(__name__)

AUTO = "auto"

# A lexeme shaped like a word (optionally colon-led, for APL control words)
# is matched as a keyword by the lexer; anything else is matched as a symbol.
_WORD_SHAPED = re.compile(r":?[A-Za-z_]\w*")


@dataclass(frozen=True)
class StringStyle:
    """One string-literal form: a delimiter plus its escaping rules."""

    delimiter: str
    multiline: bool = False
    backslash_escapes: bool = True
    doubled_quote_escapes: bool = False
    prefixes: tuple[str, ...] = ()


@dataclass(frozen=True)
class LanguageProfile:
    """Everything the lexer needs to know about one language surface."""

    id: str
    display_name: str
    file_extensions: tuple[str, ...]
    line_comment_prefixes: tuple[str, ...]
    block_comment_pairs: tuple[tuple[str, str], ...]
    string_styles: tuple[StringStyle, ...]
    cc_constructs: frozenset[str]
    operator_lexemes: frozenset[str]
    identifier_pattern: str
    number_pattern: str
    call_is_operator: bool = True
    strip_docstrings: bool = False
    backslash_continues_lines: bool = False
    glyph_symbols: bool = False
    notes: str = ""

    def keywords(self) -> frozenset[str]:
        """Word-shaped operator lexemes (matched as whole identifiers)."""
        return frozenset(
            lex for lex in self.operator_lexemes if _WORD_SHAPED.fullmatch(lex)
        )

    def symbols(self) -> tuple[str, ...]:
        """Non-word operator lexemes, longest first for maximal-munch."""
        syms = [lex for lex in self.operator_lexemes if not _WORD_SHAPED.fullmatch(lex)]
        return tuple(sorted(syms, key=lambda s: (-len(s), s)))


class ProfileRegistry:
    """Mutable id -> profile map with extension lookup."""

    def __init__(self, profiles: tuple[LanguageProfile, ...] = ()):
        self._profiles: dict[str, LanguageProfile] = {}
        for profile in profiles:
            self.register(profile)

    def register(self, profile: LanguageProfile) -> None:
        existing = self._profiles.get(profile.id)
        if existing is not None and existing != profile:
            raise ProfileOverrideError(
                f"profile id {profile.id!r} is already registered with different data"
            )
        self._profiles[profile.id] = profile

    def replace(self, profile: LanguageProfile) -> None:
        self._profiles[profile.id] = profile

    def get(self, profile_id: str) -> LanguageProfile:
        try:
            return self._profiles[profile_id]
        except KeyError:
            raise ProfileLookupError(profile_id, self.ids()) from None

    def ids(self) -> tuple[str, ...]:
        return tuple(sorted(self._profiles))

    def candidates_for_extension(self, extension: str) -> tuple[str, ...]:
        ext = extension.lower()
        return tuple(
            sorted(p.id for p in self._profiles.values() if ext in p.file_extensions)
        )

    def __contains__(self, profile_id: str) -> bool:
        return profile_id in self._profiles

    def __iter__(self):
        return (self._profiles[pid] for pid in self.ids())

    def __len__(self) -> int:
        return len(self._profiles)


# --- builtin profiles -------------------------------------------------------

_PY_KEYWORDS = frozenset(
    """
    and as assert async await break class continue def del elif else except
    finally for from global if import in is lambda nonlocal not or pass
    raise return try while with yield
    """.split()
)

_PY_SYMBOLS = frozenset(
    [
        "**=", "//=", ">>=", "<<=", "...",
        "!=", "==", "<=", ">=", "->", ":=", "+=", "-=", "*=", "/=", "%=",
        "&=", "|=", "^=", "@=", "**", "//", "<<", ">>",
        "+", "-", "*", "/", "%", "@", "&", "|", "^", "~",
        "<", ">", "=", ".", ",", ":", ";",
    ]
)

_PY_NUMBER = (
    r"(?:0[xX][0-9a-fA-F_]+|0[oO][0-7_]+|0[bB][01_]+"
    r"|(?:\d[\d_]*\.?[\d_]*|\.\d[\d_]*)(?:[eE][+-]?\d[\d_]*)?[jJ]?)"
)

_PY_STRING_PREFIXES = ("rb", "br", "rf", "fr", "r", "b", "f", "u")

_PY_STRINGS = (
    StringStyle('"""', multiline=True, prefixes=_PY_STRING_PREFIXES),
    StringStyle("'''", multiline=True, prefixes=_PY_STRING_PREFIXES),
    StringStyle('"', prefixes=_PY_STRING_PREFIXES),
    StringStyle("'", prefixes=_PY_STRING_PREFIXES),
)

_PY_CC = frozenset(
    ["if", "elif", "for", "while", "except", "with", "assert",
     "list", "set", "dict", "and", "or", "on_each"]
)


def _python_hosted(profile_id: str, display_name: str) -> LanguageProfile:
    return LanguageProfile(
        id=profile_id,
        display_name=display_name,
        file_extensions=(".py",),
        line_comment_prefixes=("#",),
        block_comment_pairs=(),
        string_styles=_PY_STRINGS,
        cc_constructs=_PY_CC,
        operator_lexemes=_PY_KEYWORDS | _PY_SYMBOLS,
        identifier_pattern=r"[A-Za-z_]\w*",
        number_pattern=_PY_NUMBER,
        strip_docstrings=True,
        backslash_continues_lines=True,
    )


_QSHARP_KEYWORDS = frozenset(
    """
    namespace open import operation function body adjoint controlled
    Adjoint Controlled auto distribute intrinsic if elif else for in while
    repeat until fixup within apply return fail let mutable set new use
    using borrow borrowing is not and or internal newtype struct export
    """.split()
)

_QSHARP_SYMBOLS = frozenset(
    [
        "==", "!=", "<=", ">=", "->", "=>", "<-", "...", "..",
        "&&&", "|||", "^^^", "<<<", ">>>", "w/",
        "+", "-", "*", "/", "%", "^", "<", ">", "=",
        ".", ",", ":", ";", "!", "?", "&", "|", "@", "_",
    ]
)

_QMOD_KEYWORDS = frozenset(
    """
    qfunc qstruct qperm struct if else repeat within apply lambda let
    return output input inout const and or not power control invert
    """.split()
)

_QMOD_SYMBOLS = frozenset(
    [
        "==", "!=", "<=", ">=", "->", "=>", "**", "<<", ">>",
        "+", "-", "*", "/", "%", "<", ">", "=",
        ".", ",", ":", ";", "&", "|", "^", "~", "!", "?", "@",
    ]
)

# Dyalog-style structured control words, one token each.
_QUAPL_CONTROL_WORDS = frozenset(
    [
        ":If", ":ElseIf", ":Else", ":EndIf", ":AndIf", ":OrIf",
        ":For", ":In", ":EndFor", ":While", ":EndWhile",
        ":Repeat", ":Until", ":EndRepeat",
        ":Select", ":Case", ":CaseList", ":EndSelect",
        ":Trap", ":EndTrap", ":Hold", ":EndHold", ":With", ":EndWith",
        ":Namespace", ":EndNamespace", ":Return", ":GoTo", ":Continue",
        ":Leave", ":End",
    ]
)

_QUAPL_GLYPHS = frozenset(
    "←→＋+-×÷*⍟⌹○!?|⌈⌊⊥⊤⊣⊢=≠≤<>≥≡≢∨∧⍱⍲↑↓⊂⊃⊆⌷⍋⍒⍳⍸∊⍷∪∩~/\\⌿⍀,⍪⍴⌽⊖⍉"
    "¨⍨⍣.∘⍤⍥@⍞⍠⌸⌺⌶⍎⍕⋄;:∇¯"
)

_QUAPL_CC = frozenset(
    [":If", ":ElseIf", ":For", ":While", ":Repeat", ":Select", ":Trap", "¨", ":"]
)

_QUAPL_NOTE = (
    "quAPL constructs: local default. The upstream cyclomatic construct set "
    "for quAPL is not published; this profile uses structured control words "
    "plus each (¨) and the dfn guard (:). Override via a profile "
    "overrides file if you need a different set."
)


def builtin_profiles() -> ProfileRegistry:
    """Registry with the six built-in language surfaces."""
    qsharp = LanguageProfile(
        id="qsharp",
        display_name="Q#",
        file_extensions=(".qs",),
        line_comment_prefixes=("//",),
        block_comment_pairs=(),
        string_styles=(StringStyle('"', prefixes=("$",)),),
        cc_constructs=frozenset(
            ["if", "elif", "for", "ApplyToEachA", "MeasureEachZ",
             "try", "catch", "repeat", "until"]
        ),
        operator_lexemes=_QSHARP_KEYWORDS | _QSHARP_SYMBOLS,
        identifier_pattern=r"[A-Za-z_]\w*",
        number_pattern=r"\d[\d_]*(?:\.\d[\d_]*)?(?:[eE][+-]?\d+)?[Ll]?",
    )
    qmod = LanguageProfile(
        id="qmod",
        display_name="Qmod",
        file_extensions=(".qmod",),
        line_comment_prefixes=("//",),
        block_comment_pairs=(("/*", "*/"),),
        string_styles=(StringStyle('"'),),
        cc_constructs=frozenset(
            ["if", "else", "repeat", "within", "apply", "lambda",
             "and", "or", "on_each"]
        ),
        operator_lexemes=_QMOD_KEYWORDS | _QMOD_SYMBOLS,
        identifier_pattern=r"[A-Za-z_]\w*",
        number_pattern=r"\d[\d_]*(?:\.\d[\d_]*)?(?:[eE][+-]?\d+)?",
    )
    quapl = LanguageProfile(
        id="quapl",
        display_name="quAPL",
        file_extensions=(".apl", ".aplf", ".apln"),
        line_comment_prefixes=("⍝",),  # ⍝
        block_comment_pairs=(),
        string_styles=(
            StringStyle("'", backslash_escapes=False, doubled_quote_escapes=True),
        ),
        cc_constructs=_QUAPL_CC,
        operator_lexemes=_QUAPL_CONTROL_WORDS | _QUAPL_GLYPHS,
        identifier_pattern=r"(?:⎕[A-Za-z]*|:?[A-Za-z_∆⍙][A-Za-z0-9_∆⍙]*)",
        number_pattern=r"¯?\d[\d_]*(?:\.\d[\d_]*)?(?:[eE]¯?\d+)?",
        call_is_operator=False,
        glyph_symbols=True,
        notes=_QUAPL_NOTE,
    )
    return ProfileRegistry(
        (
            _python_hosted("qiskit", "Qiskit"),
            _python_hosted("cirq", "Cirq"),
            _python_hosted("qrisp", "Qrisp"),
            quapl,
            qmod,
            qsharp,
        )
    )


def resolve_profile(
    registry: ProfileRegistry, hint: str | None, path: str | Path
) -> LanguageProfile:
    """Pick a profile from an explicit id or from the path's extension.

    ``hint`` of None or "auto" means detect by extension. Detection fails
    loudly when the extension is unknown or is claimed by several profiles
    (all three Python-hosted surfaces use ``.py``).
    """
    if hint and hint != AUTO:
        return registry.get(hint)
    ext = Path(path).suffix.lower()
    candidates = registry.candidates_for_extension(ext)
    if not candidates:
        raise UnknownExtensionError(
            f"no language profile claims extension {ext!r} (file {path}); "
            "pass an explicit language id"
        )
    if len(candidates) > 1:
        raise AmbiguousExtensionError(ext, candidates)
    return registry.get(candidates[0])


# --- overrides ---------------------------------------------------------------

_OVERRIDE_KEYS = frozenset(["cc_constructs", "comment_markers", "operator_lexemes"])


def load_override_file(path: str | Path) -> dict:
    """Read a profile overrides JSON document, validating its shape only."""
    path = Path(path)
    try:
        raw = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ProfileOverrideError(f"cannot read overrides file {path}: {exc}") from exc
    try:
        document = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ProfileOverrideError(f"overrides file {path} is not valid JSON: {exc}") from exc
    if not isinstance(document, dict):
        raise ProfileOverrideError(f"overrides file {path} must hold a JSON object")
    return document


def apply_overrides(registry: ProfileRegistry, overrides: dict) -> ProfileRegistry:
    """Return a new registry with per-profile field overrides applied.

    The document maps profile ids to partial updates. Only cc_constructs,
    comment_markers and operator_lexemes may be overridden; anything else is
    rejected so typos cannot silently change semantics.
    """
    result = ProfileRegistry(tuple(registry))
    for profile_id, fields in overrides.items():
        base = result.get(profile_id)  # unknown id -> ProfileLookupError
        if not isinstance(fields, dict):
            raise ProfileOverrideError(
                f"override for profile {profile_id!r} must be an object"
            )
        unknown = sorted(set(fields) - _OVERRIDE_KEYS)
        if unknown:
            raise ProfileOverrideError(
                f"override for profile {profile_id!r} has unknown keys: "
                f"{', '.join(unknown)} (allowed: {', '.join(sorted(_OVERRIDE_KEYS))})"
            )
        updated = base
        if "cc_constructs" in fields:
            updated = replace(
                updated, cc_constructs=frozenset(_string_list(profile_id, "cc_constructs", fields["cc_constructs"]))
            )
        if "operator_lexemes" in fields:
            updated = replace(
                updated, operator_lexemes=frozenset(_string_list(profile_id, "operator_lexemes", fields["operator_lexemes"]))
            )
        if "comment_markers" in fields:
            line_prefixes, block_pairs = _comment_markers(profile_id, fields["comment_markers"])
            updated = replace(
                updated,
                line_comment_prefixes=line_prefixes,
                block_comment_pairs=block_pairs,
            )
        result.replace(updated)
        logger.info("profile %s overridden (%s)", profile_id, ", ".join(sorted(fields)))
    return result


def _string_list(profile_id: str, key: str, value) -> list[str]:
    if not isinstance(value, list) or not all(isinstance(v, str) and v for v in value):
        raise ProfileOverrideError(
            f"override {key} for profile {profile_id!r} must be a list of non-empty strings"
        )
    return value


def _comment_markers(profile_id: str, value) -> tuple[tuple[str, ...], tuple[tuple[str, str], ...]]:
    """comment_markers entries: a string (line prefix) or a [start, end] pair."""
    if not isinstance(value, list):
        raise ProfileOverrideError(
            f"override comment_markers for profile {profile_id!r} must be a list"
        )
    line_prefixes: list[str] = []
    block_pairs: list[tuple[str, str]] = []
    for entry in value:
        if isinstance(entry, str) and entry:
            line_prefixes.append(entry)
        elif (
            isinstance(entry, list)
            and len(entry) == 2
            and all(isinstance(e, str) and e for e in entry)
        ):
            block_pairs.append((entry[0], entry[1]))
        else:
            raise ProfileOverrideError(
                f"comment_markers entry {entry!r} for profile {profile_id!r} must be "
                "a marker string or a [start, end] pair"
            )
    return tuple(line_prefixes), tuple(block_pairs)
