"""Probabilistic grammar over ALCQ concepts and axioms.

Concepts are sampled top down under three structural guarantees: a concept
for linguistic level L contains exactly L boolean connectives, at most L+1
quantifiers, and quantifier nesting at most two.  The boolean budget is
split between subtree children; the quantifier budget is a shared counter.

Subsumption axioms draw their (LHS level, RHS level) pair from a fixed form
table per level; the LHS is preferentially reused from anchor concepts
(concepts of earlier facts and right-hand sides) so KBs chain into multi-hop
inferences instead of falling apart into islands.

A grammar file is ``production | value`` lines under a versioned header::

    grammar 1
    forall | 0.33
    or | 0.50
"""

from __future__ import annotations

import random
from dataclasses import dataclass, fields, replace

from .analysis import check_shape, linguistic_level
from .syntax import (
    BOTTOM,
    TOP,
    And,
    AtLeast,
    AtMost,
    Atomic,
    ConceptExpr,
    Exists,
    Forall,
    Not,
    Or,
    Subsumption,
)


class ConfigError(ValueError):
    """Bad grammar or run configuration."""


def _header_line(lines: list[str], expected: str, origin: str) -> int:
    """Index just past the header, skipping leading blanks and comments."""
    for idx, raw in enumerate(lines):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.split() == expected.split():
            return idx + 1
        break
    raise ConfigError(f"{origin}:1: expected header {expected!r}")


# (lhs level, rhs level) pairs admissible for an axiom of each level.
FORM_TABLE: dict[int, tuple[tuple[int, int], ...]] = {
    0: ((0, 0),),
    1: ((0, 1), (1, 0), (1, 1)),
    2: ((0, 2), (2, 0), (1, 2), (2, 1)),
    3: ((0, 3), (1, 3), (2, 3), (3, 0), (3, 1), (3, 2)),
}

MAX_LEVEL = max(FORM_TABLE)


@dataclass(frozen=True)
class GrammarConfig:
    prob_forall: float = 0.33
    prob_exists: float = 0.335
    prob_numres: float = 0.335
    prob_and: float = 0.50
    prob_or: float = 0.50
    prob_negate_atom: float = 0.50
    prob_quantify: float = 0.55
    prob_forall_bottom: float = 0.08
    prob_exists_top: float = 0.08
    prob_top_forall: float = 0.06
    anchor_bias: float = 0.80
    numres_min: int = 1
    numres_max: int = 3
    max_quantifier_nesting: int = 2
    max_atoms: int = 7

    def validate(self) -> None:
        quant = self.prob_forall + self.prob_exists + self.prob_numres
        if abs(quant - 1.0) > 1e-9:
            raise ConfigError(f"forall+exists+numres must sum to 1, got {quant}")
        if abs(self.prob_and + self.prob_or - 1.0) > 1e-9:
            raise ConfigError("and+or must sum to 1")
        for name in (
            "prob_forall", "prob_exists", "prob_numres", "prob_and", "prob_or",
            "prob_negate_atom", "prob_quantify", "prob_forall_bottom",
            "prob_exists_top", "prob_top_forall", "anchor_bias",
        ):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ConfigError(f"{name} must lie in [0, 1], got {value}")
        if not 1 <= self.numres_min <= self.numres_max:
            raise ConfigError("need 1 <= numres_min <= numres_max")
        if self.max_quantifier_nesting < 1 or self.max_atoms < 1:
            raise ConfigError("structural bounds must be positive")

    def tweaked(self, forall: float | None = None, or_: float | None = None) -> "GrammarConfig":
        """Override the universal and disjunction probabilities, scaling the
        probabilities they compete with to keep each group summing to 1."""
        config = self
        if forall is not None:
            rest = config.prob_exists + config.prob_numres
            scale = (1.0 - forall) / rest if rest > 0 else 0.0
            config = replace(
                config,
                prob_forall=forall,
                prob_exists=config.prob_exists * scale,
                prob_numres=config.prob_numres * scale,
            )
        if or_ is not None:
            config = replace(config, prob_or=or_, prob_and=1.0 - or_)
        config.validate()
        return config


_INT_FIELDS = {"numres_min", "numres_max", "max_quantifier_nesting", "max_atoms"}
_FIELD_ALIASES = {f.name.removeprefix("prob_"): f.name for f in fields(GrammarConfig)}
_FIELD_ALIASES.update({f.name: f.name for f in fields(GrammarConfig)})


def parse_grammar(text: str, origin: str = "<grammar>") -> GrammarConfig:
    lines = text.splitlines()
    start = _header_line(lines, "grammar 1", origin)
    overrides: dict[str, float | int] = {}
    for lineno, raw in enumerate(lines[start:], start=start + 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "|" not in line:
            raise ConfigError(f"{origin}:{lineno}: expected 'production | value'")
        name, _, value = line.partition("|")
        name, value = name.strip(), value.strip()
        field = _FIELD_ALIASES.get(name)
        if field is None:
            raise ConfigError(f"{origin}:{lineno}: unknown production {name!r}")
        try:
            overrides[field] = int(value) if field in _INT_FIELDS else float(value)
        except ValueError:
            raise ConfigError(f"{origin}:{lineno}: bad value {value!r} for {name}") from None
    config = replace(GrammarConfig(), **overrides)
    try:
        config.validate()
    except ConfigError as exc:
        raise ConfigError(f"{origin}: {exc}") from None
    return config


def load_grammar(path: str) -> GrammarConfig:
    with open(path, encoding="utf-8") as handle:
        return parse_grammar(handle.read(), origin=path)


@dataclass(frozen=True)
class KBVocabulary:
    """The per-KB subset of a pool actually used while sampling."""

    concepts: tuple[str, ...]
    roles: tuple[str, ...]
    individuals: tuple[str, ...]


def _concept(
    booleans: int,
    depth: int,
    quant_budget: list[int],
    vocab: KBVocabulary,
    g: GrammarConfig,
    rng: random.Random,
) -> ConceptExpr:
    can_quantify = quant_budget[0] > 0 and depth < g.max_quantifier_nesting
    if can_quantify and rng.random() < g.prob_quantify:
        quant_budget[0] -= 1
        role = rng.choice(vocab.roles)
        die = rng.random()
        if die < g.prob_forall:
            if booleans == 0 and rng.random() < g.prob_forall_bottom:
                return Forall(role, BOTTOM)
            return Forall(role, _concept(booleans, depth + 1, quant_budget, vocab, g, rng))
        if die < g.prob_forall + g.prob_exists:
            if booleans == 0 and rng.random() < g.prob_exists_top:
                return Exists(role, TOP)
            return Exists(role, _concept(booleans, depth + 1, quant_budget, vocab, g, rng))
        n = rng.randint(g.numres_min, g.numres_max)
        cls = AtLeast if rng.random() < 0.5 else AtMost
        if booleans == 0 and rng.random() < g.prob_exists_top:
            return cls(n, role, TOP)
        return cls(n, role, _concept(booleans, depth + 1, quant_budget, vocab, g, rng))
    if booleans == 0:
        atom = Atomic(rng.choice(vocab.concepts))
        return Not(atom) if rng.random() < g.prob_negate_atom else atom
    use_or = rng.random() < g.prob_or
    left_share = rng.randint(0, booleans - 1)
    left = _concept(left_share, depth, quant_budget, vocab, g, rng)
    right = _concept(booleans - 1 - left_share, depth, quant_budget, vocab, g, rng)
    return Or(left, right) if use_or else And(left, right)


def sample_concept(
    level: int,
    vocab: KBVocabulary,
    g: GrammarConfig,
    rng: random.Random,
    max_tries: int = 50,
) -> ConceptExpr:
    """A concept with exactly ``level`` boolean connectives, within the
    quantifier and atom bounds."""
    for _ in range(max_tries):
        candidate = _concept(level, 0, [level + 1], vocab, g, rng)
        if check_shape(candidate, level, max_nesting=g.max_quantifier_nesting, max_atoms=g.max_atoms):
            return candidate
    raise ConfigError(f"could not sample a level-{level} concept within the structural bounds")


def admissible_forms(level: int) -> tuple[tuple[int, tuple[int, int]], ...]:
    """(axiom level, (lhs level, rhs level)) pairs for levels up to ``level``."""
    out = []
    for lvl in range(min(level, MAX_LEVEL) + 1):
        for form in FORM_TABLE[lvl]:
            out.append((lvl, form))
    return tuple(out)


def sample_axiom(
    level: int,
    vocab: KBVocabulary,
    g: GrammarConfig,
    rng: random.Random,
    anchors: tuple[ConceptExpr, ...] = (),
    form: tuple[int, int] | None = None,
) -> Subsumption:
    """A subsumption whose form comes from the level's form table.

    With probability ``prob_top_forall`` a domain-style axiom
    ``Thing subclassof (R only C)`` is produced instead, so range-shaped
    sentences ("Someone can R only ...") occur in the data.
    """
    if rng.random() < g.prob_top_forall:
        role = rng.choice(vocab.roles)
        filler = sample_concept(0, vocab, g, rng)
        return Subsumption(TOP, Forall(role, filler))
    if form is None:
        form = rng.choice(FORM_TABLE[min(level, MAX_LEVEL)])
    lhs_level, rhs_level = form
    matching = tuple(a for a in anchors if linguistic_level(a) == lhs_level)
    if matching and rng.random() < g.anchor_bias:
        lhs = rng.choice(matching)
    else:
        lhs = sample_concept(lhs_level, vocab, g, rng)
    for _ in range(10):
        rhs = sample_concept(rhs_level, vocab, g, rng)
        if rhs != lhs:
            break
    return Subsumption(lhs, rhs)
