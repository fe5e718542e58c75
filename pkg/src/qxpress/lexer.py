"""Preprocessing and tokenization, driven entirely by a LanguageProfile.

The pipeline has two stages. ``strip_non_essential`` turns raw files into an
EffectiveSource: blank lines, comment lines, trailing comments and (for the
Python-hosted surfaces) docstrings are removed, while every retained line
remembers where it came from. ``tokenize`` then produces a flat TokenStream.

Counting conventions the rest of the package relies on:

* a paired bracket is one operator occurrence, recorded at the opener with
  the pair lexeme "()", "[]" or "{}"; the closer emits nothing
* an identifier directly followed by "(" on the same line is a
  call-identifier and counts as an operator (where the profile says calls
  are operators)
* string and number literals are single operand tokens; nothing inside a
  string or comment is ever tokenized
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from qxpress.errors import EncodingError, LexicalError
from qxpress.profiles import LanguageProfile, StringStyle

KEYWORD = "keyword"
SYMBOL = "symbol"
IDENTIFIER = "identifier"
CALL_IDENTIFIER = "call-identifier"
NUMBER_LITERAL = "number-literal"
STRING_LITERAL = "string-literal"

OPERATOR = "operator"
OPERAND = "operand"

_OPERATOR_KINDS = frozenset([KEYWORD, SYMBOL, CALL_IDENTIFIER])
_LITERAL_KINDS = frozenset([NUMBER_LITERAL, STRING_LITERAL])

_OPENERS = "([{"
_CLOSERS = ")]}"
_PAIR_LEXEME = {"(": "()", "[": "[]", "{": "{}"}
_OPENER_FOR = {")": "(", "]": "[", "}": "{"}


@dataclass(frozen=True)
class SourceUnit:
    """One analyzable program: a name, a language id, and its files.

    File contents may be bytes (decoded as UTF-8 here, so a bad file is
    reported with its path) or already-decoded text.
    """

    unit_name: str
    language_id: str
    files: tuple[tuple[str, bytes | str], ...]


@dataclass(frozen=True)
class EffectiveSource:
    """Retained source lines plus, per line, the (file, line number) origin."""

    lines: tuple[str, ...]
    origin: tuple[tuple[str, int], ...]

    @classmethod
    def from_text(cls, text: str, file: str = "<memory>") -> "EffectiveSource":
        """Wrap raw text verbatim (no stripping); handy for small snippets."""
        lines = tuple(text.replace("\r\n", "\n").replace("\r", "\n").split("\n"))
        if lines and lines[-1] == "":
            lines = lines[:-1]
        return cls(lines, tuple((file, i + 1) for i in range(len(lines))))


@dataclass(frozen=True)
class Token:
    lexeme: str
    kind: str
    file: str
    line: int
    column: int

    @property
    def category(self) -> str:
        return OPERATOR if self.kind in _OPERATOR_KINDS else OPERAND


@dataclass(frozen=True)
class TokenGroup:
    """One bracket group: the opener token index and the exclusive end index.

    Tokens strictly between ``open_index`` and ``end_index`` lie inside the
    brackets; ``parent`` is the index of the enclosing group, or -1.
    """

    bracket: str
    open_index: int
    end_index: int
    parent: int


@dataclass(frozen=True)
class TokenStream:
    tokens: tuple[Token, ...]
    profile_id: str
    groups: tuple[TokenGroup, ...] = ()

    def __len__(self) -> int:
        return len(self.tokens)


@dataclass(frozen=True)
class HalsteadCounts:
    """Distinct and total operator/operand tallies for one unit."""

    n1: int
    n2: int
    N1: int
    N2: int


# --- compiled per-profile machinery ------------------------------------------


class _CompiledProfile:
    def __init__(self, profile: LanguageProfile):
        self.profile = profile
        self.identifier_re = re.compile(profile.identifier_pattern)
        self.number_re = re.compile(profile.number_pattern)
        self.keywords = profile.keywords()
        self.symbols = profile.symbols()
        self.line_comment_prefixes = tuple(
            sorted(profile.line_comment_prefixes, key=len, reverse=True)
        )
        styles = sorted(
            profile.string_styles, key=lambda s: len(s.delimiter), reverse=True
        )
        self.string_styles = tuple(styles)
        self._prefixes = {
            s.delimiter: tuple(sorted((p.lower() for p in s.prefixes), key=len, reverse=True))
            for s in styles
        }

    def match_string_start(self, line: str, i: int):
        """Return (style, consumed length incl. prefix) when a string opens at i."""
        for style in self.string_styles:
            d = style.delimiter
            if line.startswith(d, i):
                return style, len(d)
            for pref in self._prefixes[d]:
                k = len(pref)
                if line[i : i + k].lower() == pref and line.startswith(d, i + k):
                    return style, k + len(d)
        return None


@lru_cache(maxsize=None)
def _compiled(profile: LanguageProfile) -> _CompiledProfile:
    return _CompiledProfile(profile)


def _match_any(line: str, i: int, options: tuple[str, ...]) -> str | None:
    for option in options:
        if line.startswith(option, i):
            return option
    return None


def _match_block_start(
    line: str, i: int, pairs: tuple[tuple[str, str], ...]
) -> tuple[str, str] | None:
    for begin, end in pairs:
        if line.startswith(begin, i):
            return begin, end
    return None


def _string_close_on_line(line: str, i: int, style: StringStyle) -> int | None:
    """Scan a string interior from i; return the position after the closing
    delimiter, or None when the string does not close on this line."""
    d = style.delimiter
    n = len(line)
    while i < n:
        if style.backslash_escapes and line[i] == "\\":
            i += 2
            continue
        if line.startswith(d, i):
            if style.doubled_quote_escapes and line.startswith(d + d, i):
                i += 2 * len(d)
                continue
            return i + len(d)
        i += 1
    return None


def _string_continues(style: StringStyle, line: str) -> bool:
    """An open string survives the line break for multiline styles, or when a
    trailing backslash escapes the newline."""
    return style.multiline or (style.backslash_escapes and line.endswith("\\"))


# --- stage 1: strip -----------------------------------------------------------


class _ScanState:
    """Carries string/comment/nesting state across the lines of one file."""

    __slots__ = ("string_style", "block_end", "depth", "continuation")

    def __init__(self):
        self.string_style: StringStyle | None = None
        self.block_end: str | None = None
        self.depth = 0
        self.continuation = False

    def is_clean(self) -> bool:
        return (
            self.string_style is None
            and self.block_end is None
            and self.depth == 0
            and not self.continuation
        )


def strip_non_essential(unit: SourceUnit, profile: LanguageProfile) -> EffectiveSource:
    """Drop blank lines, comments and (per profile) docstrings.

    Comment markers and construct-like text inside string literals are left
    untouched. Retained lines keep their file and physical line number so
    token locations and error messages stay meaningful.
    """
    cp = _compiled(profile)
    out_lines: list[str] = []
    out_origin: list[tuple[str, int]] = []
    for path, data in unit.files:
        text = _decode(path, data)
        for lineno, content in _strip_file(cp, text):
            out_lines.append(content)
            out_origin.append((path, lineno))
    return EffectiveSource(tuple(out_lines), tuple(out_origin))


def count_loc(src: EffectiveSource) -> int:
    """Lines of code: the number of retained effective lines."""
    return len(src.lines)


def _decode(path: str, data: bytes | str) -> str:
    if isinstance(data, str):
        text = data
    else:
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise EncodingError(f"{path}: not valid UTF-8 ({exc})") from exc
    return text.replace("\r\n", "\n").replace("\r", "\n")


def _strip_file(cp: _CompiledProfile, text: str) -> list[tuple[int, str]]:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    retained: list[tuple[int, str]] = []
    state = _ScanState()
    i = 0
    while i < len(lines):
        if cp.profile.strip_docstrings and state.is_clean():
            span_end = _docstring_span(cp, lines, i)
            if span_end is not None:
                i = span_end + 1
                continue
        has_code, content = _scan_line(cp, lines[i], state)
        if has_code:
            retained.append((i + 1, content))
        i += 1
    return retained


def _scan_line(cp: _CompiledProfile, line: str, state: _ScanState) -> tuple[bool, str]:
    """Classify one line, blanking comment regions out of the content."""
    profile = cp.profile
    n = len(line)
    buf = list(line)
    in_string_at_entry = state.string_style is not None
    i = 0
    while i < n:
        if state.string_style is not None:
            end = _string_close_on_line(line, i, state.string_style)
            if end is None:
                if not _string_continues(state.string_style, line[i:]):
                    # unterminated one-line string: leave it, the tokenizer
                    # reports the location
                    state.string_style = None
                i = n
                break
            state.string_style = None
            i = end
            continue
        if state.block_end is not None:
            idx = line.find(state.block_end, i)
            stop = n if idx < 0 else idx + len(state.block_end)
            for j in range(i, stop):
                buf[j] = " "
            if idx < 0:
                i = n
                break
            state.block_end = None
            i = stop
            continue
        if _match_any(line, i, cp.line_comment_prefixes):
            for j in range(i, n):
                buf[j] = " "
            i = n
            break
        block = _match_block_start(line, i, profile.block_comment_pairs)
        if block:
            begin, endmark = block
            for j in range(i, i + len(begin)):
                buf[j] = " "
            state.block_end = endmark
            i += len(begin)
            continue
        matched = cp.match_string_start(line, i)
        if matched:
            style, consumed = matched
            state.string_style = style
            i += consumed
            continue
        if line[i] in _OPENERS:
            state.depth += 1
        elif line[i] in _CLOSERS:
            state.depth = max(0, state.depth - 1)
        i += 1
    content = "".join(buf)
    if state.string_style is None:
        content = content.rstrip()
        state.continuation = profile.backslash_continues_lines and content.endswith("\\")
    else:
        # the line ends inside a string literal: its text is significant
        state.continuation = False
    has_code = bool(content.strip()) or in_string_at_entry or state.string_style is not None
    return has_code, content


def _docstring_span(cp: _CompiledProfile, lines: list[str], start: int) -> int | None:
    """Index of the last line of a standalone string statement starting at
    ``start``, or None when the line is not a documentation string."""
    line = lines[start]
    stripped = line.lstrip()
    if not stripped:
        return None
    col = len(line) - len(stripped)
    matched = cp.match_string_start(line, col)
    if matched is None:
        return None
    style, consumed = matched
    i = start
    pos = col + consumed
    while True:
        end = _string_close_on_line(lines[i], pos, style)
        if end is not None:
            break
        if not _string_continues(style, lines[i][pos:]):
            return None
        i += 1
        if i >= len(lines):
            return None
        pos = 0
    tail = lines[i][end:]
    state = _ScanState()
    tail_has_code, _ = _scan_line(cp, tail, state)
    if tail_has_code:
        return None
    return i


# --- stage 2: tokenize --------------------------------------------------------


@dataclass
class _PendingString:
    style: StringStyle
    file: str
    line: int
    column: int
    parts: list[str] = field(default_factory=list)


def tokenize(src: EffectiveSource, profile: LanguageProfile) -> TokenStream:
    """Lex an EffectiveSource into a flat token stream with bracket groups.

    The lexer is total over ordinary text: characters it does not recognize
    become one-character symbol tokens. The only fatal condition is a string
    literal that never closes, reported with its opening location.
    """
    cp = _compiled(profile)
    tokens: list[Token] = []
    # group records: [bracket char, open token index, end token index, parent]
    records: list[list] = []
    open_stack: list[int] = []
    pending: _PendingString | None = None
    pending_block: str | None = None

    for line, (path, lineno) in zip(src.lines, src.origin):
        i = 0
        n = len(line)
        if pending is not None:
            pending.parts.append("\n")
            end = _string_close_on_line(line, 0, pending.style)
            if end is None:
                if _string_continues(pending.style, line):
                    pending.parts.append(line)
                    continue
                raise LexicalError(
                    "unterminated string literal",
                    pending.file, pending.line, pending.column,
                )
            pending.parts.append(line[:end])
            tokens.append(
                Token("".join(pending.parts), STRING_LITERAL,
                      pending.file, pending.line, pending.column)
            )
            pending = None
            i = end
        if pending_block is not None:
            idx = line.find(pending_block, i)
            if idx < 0:
                continue
            i = idx + len(pending_block)
            pending_block = None
        while i < n:
            ch = line[i]
            if ch in " \t":
                i += 1
                continue
            if _match_any(line, i, cp.line_comment_prefixes):
                break
            block = _match_block_start(line, i, profile.block_comment_pairs)
            if block:
                begin, endmark = block
                idx = line.find(endmark, i + len(begin))
                if idx < 0:
                    pending_block = endmark
                    break
                i = idx + len(endmark)
                continue
            matched = cp.match_string_start(line, i)
            if matched:
                style, consumed = matched
                end = _string_close_on_line(line, i + consumed, style)
                if end is not None:
                    tokens.append(Token(line[i:end], STRING_LITERAL, path, lineno, i + 1))
                    i = end
                    continue
                if _string_continues(style, line):
                    pending = _PendingString(style, path, lineno, i + 1, [line[i:]])
                    break
                raise LexicalError("unterminated string literal", path, lineno, i + 1)
            if (
                ch.isdigit()
                or (ch == "." and line[i + 1 : i + 2].isdigit())
                or (ch == "¯" and line[i + 1 : i + 2].isdigit())
            ):
                m = cp.number_re.match(line, i)
                if m:
                    tokens.append(Token(m.group(), NUMBER_LITERAL, path, lineno, i + 1))
                    i = m.end()
                    continue
            m = cp.identifier_re.match(line, i)
            if m:
                lexeme = m.group()
                if lexeme.startswith(":") and lexeme not in cp.keywords:
                    # ":" glued to a word that is no control word: the colon
                    # stands alone (quAPL dfn guard), the word is rescanned
                    tokens.append(Token(":", SYMBOL, path, lineno, i + 1))
                    i += 1
                    continue
                if lexeme in cp.keywords:
                    kind = KEYWORD
                elif profile.call_is_operator and _call_paren_follows(line, m.end()):
                    kind = CALL_IDENTIFIER
                else:
                    kind = IDENTIFIER
                tokens.append(Token(lexeme, kind, path, lineno, i + 1))
                i = m.end()
                continue
            if ch in _OPENERS:
                tokens.append(Token(_PAIR_LEXEME[ch], SYMBOL, path, lineno, i + 1))
                parent = open_stack[-1] if open_stack else -1
                records.append([ch, len(tokens) - 1, -1, parent])
                open_stack.append(len(records) - 1)
                i += 1
                continue
            if ch in _CLOSERS:
                if open_stack and records[open_stack[-1]][0] == _OPENER_FOR[ch]:
                    records[open_stack.pop()][2] = len(tokens)
                i += 1
                continue
            if profile.glyph_symbols:
                tokens.append(Token(ch, SYMBOL, path, lineno, i + 1))
                i += 1
                continue
            sym = _match_any(line, i, cp.symbols)
            if sym:
                tokens.append(Token(sym, SYMBOL, path, lineno, i + 1))
                i += len(sym)
                continue
            if (
                ch == "\\"
                and profile.backslash_continues_lines
                and not line[i + 1 :].strip()
            ):
                break
            # unknown character: stay total, one symbol per character
            tokens.append(Token(ch, SYMBOL, path, lineno, i + 1))
            i += 1
    if pending is not None:
        raise LexicalError(
            "unterminated string literal", pending.file, pending.line, pending.column
        )
    for idx in open_stack:
        records[idx][2] = len(tokens)
    groups = tuple(
        TokenGroup(bracket, open_idx, end if end >= 0 else len(tokens), parent)
        for bracket, open_idx, end, parent in records
    )
    return TokenStream(tuple(tokens), profile.id, groups)


def _call_paren_follows(line: str, pos: int) -> bool:
    """True when the next non-blank character on this same line is "("."""
    while pos < len(line) and line[pos] in " \t":
        pos += 1
    return pos < len(line) and line[pos] == "("


def classify_counts(stream: TokenStream) -> HalsteadCounts:
    """Tally distinct and total operators/operands over the stream."""
    operators: Counter[str] = Counter()
    operands: Counter[str] = Counter()
    for token in stream.tokens:
        if token.category == OPERATOR:
            operators[token.lexeme] += 1
        else:
            operands[token.lexeme] += 1
    return HalsteadCounts(
        n1=len(operators),
        n2=len(operands),
        N1=sum(operators.values()),
        N2=sum(operands.values()),
    )
