"""Whole-program cyclomatic complexity and the Halstead family.

Cyclomatic complexity here is lexical and whole-program: one plus the number
of occurrences of the profile's construct lexemes in the token stream. There
is no per-function mode. The Python comprehension entries (``list``, ``set``,
``dict``) are special: a comprehension counts once, and ``for``/``if``
lexemes at its top level are absorbed rather than double-counted.

Halstead values are kept at full float precision; rounding happens only when
tables are rendered.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from qxpress.lexer import (
    KEYWORD,
    SYMBOL,
    HalsteadCounts,
    SourceUnit,
    TokenStream,
    classify_counts,
    count_loc,
    strip_non_essential,
    tokenize,
)
from qxpress.profiles import LanguageProfile

__all__ = [
    "HalsteadCounts",
    "MetricsReport",
    "analyze_unit",
    "cyclomatic_complexity",
    "halstead_difficulty",
    "halstead_effort",
    "halstead_length",
    "halstead_vocabulary",
    "halstead_volume",
]

_COMPREHENSION_KINDS = ("list", "set", "dict")


def halstead_vocabulary(counts: HalsteadCounts) -> int:
    return counts.n1 + counts.n2


def halstead_length(counts: HalsteadCounts) -> int:
    return counts.N1 + counts.N2


def halstead_volume(counts: HalsteadCounts) -> float:
    """Program volume; 0.0 when the vocabulary is too small for a log."""
    vocabulary = halstead_vocabulary(counts)
    if vocabulary < 2:
        return 0.0
    return halstead_length(counts) * math.log2(vocabulary)


def halstead_difficulty(counts: HalsteadCounts) -> float:
    """Difficulty; 0.0 when there are no operands at all."""
    if counts.n2 == 0:
        return 0.0
    return (counts.n1 / 2.0) * (counts.N2 / counts.n2)


def halstead_effort(volume: float, difficulty: float) -> float:
    return difficulty * volume


def cyclomatic_complexity(stream: TokenStream, profile: LanguageProfile) -> int:
    """1 + occurrences of the profile's construct lexemes in the stream.

    Lexemes inside string or number literals never count (they were lexed as
    single literal tokens). For profiles whose construct set names
    comprehensions, each bracket group with a top-level ``for`` counts once
    as its comprehension kind, and the ``for``/``if`` keywords at that
    group's top level are absorbed into that single count.
    """
    constructs = profile.cc_constructs
    tokens = stream.tokens
    absorbed: set[int] = set()
    comprehension_count = 0

    wanted_kinds = [k for k in _COMPREHENSION_KINDS if k in constructs]
    if wanted_kinds:
        children: dict[int, list[int]] = {}
        for idx, group in enumerate(stream.groups):
            children.setdefault(group.parent, []).append(idx)
        for idx, group in enumerate(stream.groups):
            if group.bracket not in "[{":
                continue
            top = _top_level_indices(stream, idx, children.get(idx, []))
            for_indices = [
                i for i in top
                if tokens[i].kind == KEYWORD and tokens[i].lexeme == "for"
            ]
            if not for_indices:
                continue
            first_for = min(for_indices)
            if group.bracket == "[":
                kind = "list"
            elif any(
                tokens[i].kind == SYMBOL and tokens[i].lexeme == ":" and i < first_for
                for i in top
            ):
                kind = "dict"
            else:
                kind = "set"
            if kind not in constructs:
                continue
            comprehension_count += 1
            absorbed.update(
                i for i in top
                if tokens[i].kind == KEYWORD and tokens[i].lexeme in ("for", "if")
            )

    direct = sum(
        1
        for i, token in enumerate(tokens)
        if i not in absorbed
        and token.kind not in ("number-literal", "string-literal")
        and token.lexeme in constructs
        and token.lexeme not in _COMPREHENSION_KINDS
    )
    return 1 + direct + comprehension_count


def _top_level_indices(stream: TokenStream, group_index: int, child_indices: list[int]) -> list[int]:
    """Token indices directly inside a group, skipping nested group interiors.

    A nested group's opener token itself sits at the enclosing group's top
    level (it is never a keyword, so including it is harmless and keeps the
    bookkeeping simple)."""
    group = stream.groups[group_index]
    indices: list[int] = []
    pos = group.open_index + 1
    for child_idx in sorted(child_indices, key=lambda c: stream.groups[c].open_index):
        child = stream.groups[child_idx]
        indices.extend(range(pos, child.open_index + 1))
        pos = child.end_index
    indices.extend(range(pos, group.end_index))
    return indices


@dataclass(frozen=True)
class MetricsReport:
    """All measured values for one unit, at full precision."""

    unit_name: str
    language_id: str
    algorithm_id: str
    loc: int
    cc: int
    counts: HalsteadCounts
    vocabulary: int
    length: int
    volume: float
    difficulty: float
    effort: float

    @property
    def degenerate(self) -> bool:
        """True when the unit was too small for meaningful Halstead values."""
        return halstead_vocabulary(self.counts) < 2 or self.counts.n2 == 0

    def to_json_dict(self) -> dict:
        return {
            "unit_name": self.unit_name,
            "language": self.language_id,
            "algorithm": self.algorithm_id,
            "loc": self.loc,
            "cc": self.cc,
            "halstead": {
                "n1": self.counts.n1,
                "n2": self.counts.n2,
                "N1": self.counts.N1,
                "N2": self.counts.N2,
                "vocabulary": self.vocabulary,
                "length": self.length,
                "volume": self.volume,
                "difficulty": self.difficulty,
                "effort": self.effort,
            },
        }


def analyze_unit(
    unit: SourceUnit, profile: LanguageProfile, algorithm_id: str = ""
) -> MetricsReport:
    """Run the whole pipeline (strip, count, tokenize, classify) on one unit."""
    src = strip_non_essential(unit, profile)
    loc = count_loc(src)
    stream = tokenize(src, profile)
    counts = classify_counts(stream)
    volume = halstead_volume(counts)
    difficulty = halstead_difficulty(counts)
    return MetricsReport(
        unit_name=unit.unit_name,
        language_id=unit.language_id,
        algorithm_id=algorithm_id,
        loc=loc,
        cc=cyclomatic_complexity(stream, profile),
        counts=counts,
        vocabulary=halstead_vocabulary(counts),
        length=halstead_length(counts),
        volume=volume,
        difficulty=difficulty,
        effort=halstead_effort(volume, difficulty),
    )
