import json
from pathlib import Path

import pytest

from qxpress.lexer import SourceUnit, strip_non_essential, tokenize
from qxpress.metrics import analyze_unit
from qxpress.profiles import builtin_profiles

FIXTURES = Path(__file__).parent / "fixtures"
MICRO = FIXTURES / "micro"

_EXT_FOR = {
    "qiskit": ".py",
    "cirq": ".py",
    "qrisp": ".py",
    "qsharp": ".qs",
    "qmod": ".qmod",
    "quapl": ".apl",
}


@pytest.fixture(scope="session")
def registry():
    return builtin_profiles()


@pytest.fixture(scope="session")
def micro_oracles():
    with open(MICRO / "oracles.json", encoding="utf-8") as fh:
        data = json.load(fh)
    data.pop("_comment", None)
    return data


def make_unit(text: str, language_id: str, name: str = "unit") -> SourceUnit:
    file_name = name + _EXT_FOR[language_id]
    return SourceUnit(name, language_id, ((file_name, text),))


@pytest.fixture(scope="session")
def analyze(registry):
    def _analyze(text: str, language_id: str, name: str = "unit"):
        unit = make_unit(text, language_id, name)
        return analyze_unit(unit, registry.get(language_id), algorithm_id=name)

    return _analyze


@pytest.fixture(scope="session")
def lex(registry):
    def _lex(text: str, language_id: str):
        profile = registry.get(language_id)
        unit = make_unit(text, language_id)
        return tokenize(strip_non_essential(unit, profile), profile)

    return _lex
