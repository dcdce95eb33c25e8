"""Symbolic re-encodings of verbalized problems.

Two strengths are provided.  The soft encoding keeps each sentence's
grammatical frame and replaces content words with opaque symbols: the j-th
distinct concept name becomes ``C_j``, roles become ``R_k`` (both the
inflected and base verb forms map to the same symbol), individuals become
``a_i``.  The hard encoding abandons English altogether and prints the
logical form in a bracketed prefix notation with the same symbol table.

Symbol numbering is global and stable: it depends only on the order of the
pools handed to ``build_symbol_table``, never on any particular problem, so
the same word maps to the same symbol across datasets.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from typing import Iterable

from .pools import POOL_A, POOL_B, VocabularyPool
from .syntax import (
    And,
    AtLeast,
    AtMost,
    Atomic,
    Axiom,
    Bottom,
    ConceptAssertion,
    ConceptExpr,
    Exists,
    Forall,
    Not,
    Or,
    RoleAssertion,
    Subsumption,
    Top,
)
from .verbalize import TemplateSet, base_verb, builtin_templates


class UnmappedTokenError(ValueError):
    pass


_SYMBOL_RE = re.compile(r"^(?:a|C|R)_[0-9]+$")


@dataclass(frozen=True)
class SymbolTable:
    individuals: tuple[tuple[str, str], ...]
    concepts: tuple[tuple[str, str], ...]
    roles: tuple[tuple[str, str], ...]
    function_words: frozenset[str]

    def individual(self, name: str) -> str:
        return dict(self.individuals)[name]

    def concept(self, name: str) -> str:
        return dict(self.concepts)[name]

    def role(self, name: str) -> str:
        return dict(self.roles)[name]


def build_symbol_table(
    pools: Iterable[VocabularyPool] | None = None,
    template_sets: Iterable[TemplateSet] | None = None,
) -> SymbolTable:
    if pools is None:
        pools = (POOL_A, POOL_B)
    if template_sets is None:
        template_sets = (builtin_templates("people"), builtin_templates("things"))
    individuals: dict[str, str] = {}
    concepts: dict[str, str] = {}
    roles: dict[str, str] = {}
    for pool in pools:
        for name in pool.individuals:
            if name not in individuals:
                individuals[name] = f"a_{len(individuals) + 1}"
        for name in pool.concepts:
            if name not in concepts:
                concepts[name] = f"C_{len(concepts) + 1}"
        for name in pool.roles:
            if name not in roles:
                symbol = f"R_{len(set(roles.values())) + 1}"
                roles[name] = symbol
                roles.setdefault(base_verb(name), symbol)
    words: set[str] = set()
    for templates in template_sets:
        words.update(templates.words())
    return SymbolTable(
        individuals=tuple(individuals.items()),
        concepts=tuple(concepts.items()),
        roles=tuple(roles.items()),
        function_words=frozenset(words),
    )


def soft_symbolic(sentence: str, table: SymbolTable) -> str:
    """Replace content words by table symbols; idempotent on its output."""
    individuals = dict(table.individuals)
    concepts = dict(table.concepts)
    roles = dict(table.roles)
    out: list[str] = []
    for token in sentence.split():
        if token in individuals:
            out.append(individuals[token])
            continue
        low = token.lower()
        if low in concepts:
            out.append(concepts[low])
        elif low in roles:
            out.append(roles[low])
        elif low in table.function_words or token.isdigit() or _SYMBOL_RE.match(token):
            out.append(token)
        else:
            raise UnmappedTokenError(f"no symbol for token {token!r}")
    return " ".join(out)


_LEXICON_KEYS = (
    "and", "or", "not", "exists", "forall", "atleast", "atmost",
    "top", "bottom", "subsumed", "fact_sep",
)


@dataclass(frozen=True)
class HardLexicon:
    slots: tuple[tuple[str, str], ...]

    def __getitem__(self, key: str) -> str:
        for name, value in self.slots:
            if name == key:
                return value
        raise KeyError(f"hard lexicon is missing slot {key!r}")


def parse_lexicon(text: str, origin: str = "<lexicon>") -> HardLexicon:
    lines = text.splitlines()
    start = None
    for idx, raw in enumerate(lines):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.split() == ["lexicon", "1"]:
            start = idx + 1
        break
    if start is None:
        raise ValueError(f"{origin}:1: expected header 'lexicon 1'")
    slots: list[tuple[str, str]] = []
    for lineno, raw in enumerate(lines[start:], start=start + 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "|" not in line:
            raise ValueError(f"{origin}:{lineno}: expected 'slot | text'")
        key, _, value = line.partition("|")
        slots.append((key.strip(), value.strip()))
    have = {name for name, _ in slots}
    missing = [key for key in _LEXICON_KEYS if key not in have]
    if missing:
        raise ValueError(f"{origin}: missing slots {missing}")
    return HardLexicon(slots=tuple(slots))


def builtin_lexicon() -> HardLexicon:
    text = resources.files("alcqgen.data").joinpath("hard_lexicon.txt").read_text("utf-8")
    return parse_lexicon(text, origin="hard_lexicon.txt")


def _hard_concept(c: ConceptExpr, table: SymbolTable, lex: HardLexicon) -> str:
    if isinstance(c, Atomic):
        return table.concept(c.name)
    if isinstance(c, Top):
        return lex["top"]
    if isinstance(c, Bottom):
        return lex["bottom"]
    if isinstance(c, Not):
        return f"( {lex['not']} {_hard_concept(c.inner, table, lex)} )"
    if isinstance(c, (And, Or)):
        op = lex["and"] if isinstance(c, And) else lex["or"]
        left = _hard_concept(c.left, table, lex)
        right = _hard_concept(c.right, table, lex)
        return f"( {left} {op} {right} )"
    if isinstance(c, (Exists, Forall)):
        op = lex["exists"] if isinstance(c, Exists) else lex["forall"]
        return f"( {op} {table.role(c.role)} {_hard_concept(c.filler, table, lex)} )"
    if isinstance(c, (AtLeast, AtMost)):
        op = lex["atleast"] if isinstance(c, AtLeast) else lex["atmost"]
        return f"( {op} {c.n} {table.role(c.role)} {_hard_concept(c.filler, table, lex)} )"
    raise ValueError(f"no hard form for {type(c).__name__}")


def hard_symbolic(axiom: Axiom, table: SymbolTable, lex: HardLexicon) -> str:
    if isinstance(axiom, ConceptAssertion):
        subject = table.individual(axiom.individual)
        return f"{subject} {lex['fact_sep']} {_hard_concept(axiom.concept, table, lex)}"
    if isinstance(axiom, RoleAssertion):
        return f"{table.individual(axiom.subject)} {table.role(axiom.role)} {table.individual(axiom.object)}"
    if isinstance(axiom, Subsumption):
        left = _hard_concept(axiom.lhs, table, lex)
        right = _hard_concept(axiom.rhs, table, lex)
        return f"{left} {lex['subsumed']} {right}"
    raise ValueError(f"no hard form for {type(axiom).__name__}")
