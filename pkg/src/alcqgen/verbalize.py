"""Template verbalization of axioms into English, and its partial inverse.

The realizer is compositional: a concept becomes either a copular predicate
("red and green"), a noun phrase ("kind people", "2 people that like
someone"), or a verb phrase ("likes only quiet people"), and axiom
templates assemble those pieces.  Grammaticality is by construction: verbs
conjugate with their subject (roles are stored as third person singular,
plural subjects take the base form) and counted nouns inflect for number.

Subsumptions choose among three interchangeable sentence frames (an
if-then conditional, a bare generic subject, and an "All ..." generic),
except for two fixed shapes: ``Thing subclassof (R only C)`` renders as
"Someone can R only ..." and ``C subclassof Nothing`` as "No one ...".

Negation is rendered only directly above atoms; other negations are pushed
inward first, so hand-built non-NNF axioms verbalize by their NNF.

``sentence_to_axiom`` inverts the realizer for the sentence shapes that
level 0 and level 1 axioms produce; it returns None on anything it cannot
confidently reconstruct.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from importlib import resources

from .nnf import complement
from .pools import VocabularyPool
from .syntax import (
    BOTTOM,
    TOP,
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


class VerbalizationError(ValueError):
    pass


_SLOT_KEYS = (
    "entity_sg", "entity_pl", "someone", "pronoun", "everyone", "noone",
    "copula_sg", "copula_pl", "that", "only", "none", "at_least", "at_most",
    "and", "or", "not", "if", "then", "can", "all", "anything",
)


@dataclass(frozen=True)
class TemplateSet:
    genre: str
    slots: tuple[tuple[str, str], ...]

    def __getitem__(self, key: str) -> str:
        for name, value in self.slots:
            if name == key:
                return value
        raise KeyError(f"template set for genre {self.genre!r} is missing slot {key!r}")

    def words(self) -> frozenset[str]:
        out: set[str] = set()
        for _, value in self.slots:
            out.update(word.lower() for word in value.split())
        return frozenset(out)


def parse_templates(text: str, origin: str = "<templates>") -> TemplateSet:
    lines = text.splitlines()
    start = None
    for idx, raw in enumerate(lines):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.split() == ["templates", "1"]:
            start = idx + 1
        break
    if start is None:
        raise VerbalizationError(f"{origin}:1: expected header 'templates 1'")
    genre = None
    slots: list[tuple[str, str]] = []
    for lineno, raw in enumerate(lines[start:], start=start + 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "|" not in line:
            raise VerbalizationError(f"{origin}:{lineno}: expected 'slot | text'")
        key, _, value = line.partition("|")
        key, value = key.strip(), value.strip()
        if key == "genre":
            genre = value
        else:
            slots.append((key, value))
    if genre is None:
        raise VerbalizationError(f"{origin}: missing 'genre | ...' line")
    have = {name for name, _ in slots}
    missing = [key for key in _SLOT_KEYS if key not in have]
    if missing:
        raise VerbalizationError(f"{origin}: missing slots {missing}")
    return TemplateSet(genre=genre, slots=tuple(slots))


def load_templates(path: str) -> TemplateSet:
    with open(path, encoding="utf-8") as handle:
        return parse_templates(handle.read(), origin=path)


def builtin_templates(genre: str) -> TemplateSet:
    name = {"people": "templates_people.txt", "things": "templates_things.txt"}.get(genre)
    if name is None:
        raise VerbalizationError(f"no builtin templates for genre {genre!r}")
    text = resources.files("alcqgen.data").joinpath(name).read_text("utf-8")
    return parse_templates(text, origin=name)


def base_verb(verb: str) -> str:
    """Base form of a third person singular verb: likes -> like."""
    if verb.endswith("ies") and len(verb) > 3:
        return verb[:-3] + "y"
    for suffix in ("sses", "ches", "shes", "xes", "zes"):
        if verb.endswith(suffix):
            return verb[:-2]
    if verb.endswith("s") and not verb.endswith("ss"):
        return verb[:-1]
    return verb


def _verb(role: str, number: str) -> str:
    return role if number == "sg" else base_verb(role)


def _copula(t: TemplateSet, number: str) -> str:
    return t["copula_sg"] if number == "sg" else t["copula_pl"]


def _pred(c: ConceptExpr, t: TemplateSet) -> str | None:
    """Copular predicate complement, or None when ``c`` needs a verb."""
    if isinstance(c, Atomic):
        return c.name
    if isinstance(c, Top):
        return t["anything"]
    if isinstance(c, Not):
        if isinstance(c.inner, Atomic):
            return f"{t['not']} {c.inner.name}"
        return _pred(complement(c.inner), t)
    if isinstance(c, (And, Or)):
        left, right = _pred(c.left, t), _pred(c.right, t)
        if left is not None and right is not None:
            op = t["and"] if isinstance(c, And) else t["or"]
            return f"{left} {op} {right}"
    return None


def _np(c: ConceptExpr, t: TemplateSet, count: int | None = None) -> str:
    """Noun phrase for the members of ``c``; counted when ``count`` given."""
    number = "sg" if count == 1 else "pl"
    entity = t["entity_sg"] if number == "sg" else t["entity_pl"]
    prefix = f"{count} " if count is not None else ""
    if isinstance(c, Top):
        return f"{prefix}{entity}"
    if isinstance(c, Atomic):
        return f"{prefix}{c.name} {entity}"
    return f"{prefix}{entity} {t['that']} {_vp(c, t, number)}"


def _vp(c: ConceptExpr, t: TemplateSet, number: str) -> str:
    pred = _pred(c, t)
    if pred is not None:
        return f"{_copula(t, number)} {pred}"
    if isinstance(c, Not):
        return _vp(complement(c.inner), t, number)
    if isinstance(c, (And, Or)):
        op = t["and"] if isinstance(c, And) else t["or"]
        return f"{_vp(c.left, t, number)} {op} {_vp(c.right, t, number)}"
    if isinstance(c, Exists):
        verb = _verb(c.role, number)
        if isinstance(c.filler, Top):
            return f"{verb} {t['someone']}"
        if isinstance(c.filler, Atomic):
            return f"{verb} {t['someone']} {c.filler.name}"
        return f"{verb} {t['someone']} {t['that']} {_vp(c.filler, t, 'sg')}"
    if isinstance(c, Forall):
        verb = _verb(c.role, number)
        if isinstance(c.filler, Bottom):
            return f"{verb} {t['none']}"
        return f"{verb} {t['only']} {_np(c.filler, t)}"
    if isinstance(c, (AtLeast, AtMost)):
        verb = _verb(c.role, number)
        word = t["at_least"] if isinstance(c, AtLeast) else t["at_most"]
        return f"{verb} {word} {_np(c.filler, t, count=c.n)}"
    raise VerbalizationError(f"no verb phrase for {type(c).__name__}")


def _subject_np(c: ConceptExpr, t: TemplateSet) -> str:
    if isinstance(c, Atomic):
        return f"{c.name} {t['entity_pl']}"
    return f"{t['entity_pl']} {t['that']} {_vp(c, t, 'pl')}"


SUBSUMPTION_VARIANTS = ("if", "plain", "all")


def _cap(sentence: str) -> str:
    return sentence[0].upper() + sentence[1:] if sentence else sentence


def verbalize_axiom(
    axiom: Axiom,
    t: TemplateSet,
    rng: random.Random | None = None,
    variant: str | None = None,
) -> str:
    """One English sentence for the axiom.

    Interchangeable subsumption frames are chosen by ``rng`` (or pinned via
    ``variant``); facts and the fixed subsumption shapes have one frame.
    """
    if isinstance(axiom, ConceptAssertion):
        if axiom.concept == BOTTOM:
            raise VerbalizationError("a Nothing fact has no natural phrasing")
        return _cap(f"{axiom.individual} {_vp(axiom.concept, t, 'sg')}")
    if isinstance(axiom, RoleAssertion):
        return _cap(f"{axiom.subject} {axiom.role} {axiom.object}")
    if not isinstance(axiom, Subsumption):
        raise VerbalizationError(f"cannot verbalize {type(axiom).__name__}")
    lhs, rhs = axiom.lhs, axiom.rhs
    if isinstance(lhs, Top) and isinstance(rhs, Forall) and not isinstance(rhs.filler, (Bottom, Top)):
        verb = base_verb(rhs.role)
        return _cap(f"{t['someone']} {t['can']} {verb} {t['only']} {_np(rhs.filler, t)}")
    if isinstance(lhs, Top):
        return _cap(f"{t['everyone']} {_vp(rhs, t, 'sg')}")
    if isinstance(rhs, Bottom):
        return _cap(f"{t['noone']} {_vp(lhs, t, 'sg')}")
    if variant is None:
        variant = rng.choice(SUBSUMPTION_VARIANTS) if rng is not None else "if"
    if variant == "if":
        return _cap(
            f"{t['if']} {t['someone']} {_vp(lhs, t, 'sg')} "
            f"{t['then']} {t['pronoun']} {_vp(rhs, t, 'pl')}"
        )
    if variant == "plain":
        return _cap(f"{_subject_np(lhs, t)} {_vp(rhs, t, 'pl')}")
    if variant == "all":
        return _cap(f"{t['all']} {_subject_np(lhs, t)} {_vp(rhs, t, 'pl')}")
    raise VerbalizationError(f"unknown subsumption variant {variant!r}")


def classify_sentence(sentence: str, t: TemplateSet, is_subsumption: bool) -> str:
    """Which frame produced a sentence; used by the stats report."""
    lower = sentence.lower()
    if not is_subsumption:
        return "fact"
    if lower.startswith(f"{t['if'].lower()} "):
        return "if"
    if lower.startswith(f"{t['all'].lower()} "):
        return "all"
    if lower.startswith(f"{t['someone'].lower()} {t['can'].lower()} "):
        return "can"
    if lower.startswith(f"{t['everyone'].lower()} "):
        return "top"
    if lower.startswith(f"{t['noone'].lower()} "):
        return "bottom"
    return "plain"


# -- inverse matching --------------------------------------------------------


def sentence_to_axiom(
    sentence: str, t: TemplateSet, pool: VocabularyPool
) -> Axiom | None:
    """Reconstruct the axiom behind a sentence, for the shapes produced at
    levels 0 and 1.  None when the sentence does not match."""
    matcher = _Matcher(t, pool)
    return matcher.sentence(sentence.split())


class _Matcher:
    def __init__(self, t: TemplateSet, pool: VocabularyPool):
        self.t = t
        self.adjectives = frozenset(pool.concepts)
        self.individuals = frozenset(pool.individuals)
        self.role_sg = {role: role for role in pool.roles}
        self.role_pl = {base_verb(role): role for role in pool.roles}

    def sentence(self, toks: list[str]) -> Axiom | None:
        if not toks:
            return None
        t = self.t
        low = [w.lower() for w in toks]
        someone = t["someone"].lower()
        if low[:2] == [t["if"].lower(), someone]:
            try:
                then_at = low.index(t["then"].lower())
            except ValueError:
                return None
            if then_at + 1 >= len(toks) or low[then_at + 1] != t["pronoun"].lower():
                return None
            lhs = self.vp(low[2:then_at], "sg")
            rhs = self.vp(low[then_at + 2 :], "pl")
            if lhs is None or rhs is None:
                return None
            return Subsumption(lhs, rhs)
        if low[:2] == [someone, t["can"].lower()]:
            if len(low) < 5 or low[3] != t["only"].lower():
                return None
            role = self.role_pl.get(low[2])
            filler = self.np(low[4:])
            if role is None or filler is None:
                return None
            return Subsumption(TOP, Forall(role, filler))
        everyone = t["everyone"].lower().split()
        if low[: len(everyone)] == everyone:
            rhs = self.vp(low[len(everyone) :], "sg")
            return Subsumption(TOP, rhs) if rhs is not None else None
        noone = t["noone"].lower().split()
        if low[: len(noone)] == noone:
            lhs = self.vp(low[len(noone) :], "sg")
            return Subsumption(lhs, BOTTOM) if lhs is not None else None
        if low[0] == t["all"].lower():
            return self.split_subsumption(low[1:])
        if toks[0] in self.individuals:
            if (
                len(toks) == 3
                and low[1] in self.role_sg
                and toks[2] in self.individuals
            ):
                return RoleAssertion(self.role_sg[low[1]], toks[0], toks[2])
            concept = self.vp(low[1:], "sg")
            if concept is None:
                return None
            return ConceptAssertion(concept, toks[0])
        return self.split_subsumption(low)

    def split_subsumption(self, low: list[str]) -> Subsumption | None:
        for cut in range(1, len(low)):
            lhs = self.np(low[:cut])
            if lhs is None:
                continue
            rhs = self.vp(low[cut:], "pl")
            if rhs is not None:
                return Subsumption(lhs, rhs)
        return None

    def vp(self, toks: list[str], number: str) -> ConceptExpr | None:
        if not toks:
            return None
        parsed = self.vp_copular(toks, number)
        if parsed is None:
            parsed = self.vp_verb(toks, number)
        if parsed is not None:
            return parsed
        t = self.t
        for cut, word in enumerate(toks):
            if word not in (t["and"].lower(), t["or"].lower()):
                continue
            left = self.vp(toks[:cut], number)
            right = self.vp(toks[cut + 1 :], number)
            if left is not None and right is not None:
                cls = And if word == t["and"].lower() else Or
                return cls(left, right)
        return None

    def vp_copular(self, toks: list[str], number: str) -> ConceptExpr | None:
        if toks[0] != _copula(self.t, number).lower():
            return None
        return self.pred_seq(toks[1:])

    def pred_seq(self, toks: list[str]) -> ConceptExpr | None:
        parsed, rest = self.pred(toks)
        if parsed is None:
            return None
        t = self.t
        while rest:
            if rest[0] == t["and"].lower():
                cls = And
            elif rest[0] == t["or"].lower():
                cls = Or
            else:
                return None
            nxt, rest = self.pred(rest[1:])
            if nxt is None:
                return None
            parsed = cls(parsed, nxt)
        return parsed

    def pred(self, toks: list[str]) -> tuple[ConceptExpr | None, list[str]]:
        if not toks:
            return None, toks
        if toks[0] == self.t["not"].lower():
            if len(toks) >= 2 and toks[1] in self.adjectives:
                return Not(Atomic(toks[1])), toks[2:]
            return None, toks
        if toks[0] in self.adjectives:
            return Atomic(toks[0]), toks[1:]
        return None, toks

    def vp_verb(self, toks: list[str], number: str) -> ConceptExpr | None:
        roles = self.role_sg if number == "sg" else self.role_pl
        role = roles.get(toks[0])
        if role is None:
            return None
        rest = toks[1:]
        t = self.t
        someone = t["someone"].lower()
        if rest == [t["none"].lower()]:
            return Forall(role, BOTTOM)
        if rest == [someone]:
            return Exists(role, TOP)
        if rest and rest[0] == someone:
            if len(rest) == 2 and rest[1] in self.adjectives:
                return Exists(role, Atomic(rest[1]))
            if len(rest) >= 2 and rest[1] == t["that"].lower():
                filler = self.vp(rest[2:], "sg")
                if filler is not None:
                    return Exists(role, filler)
            return None
        if rest and rest[0] == t["only"].lower():
            filler = self.np(rest[1:])
            if filler is not None:
                return Forall(role, filler)
            return None
        for word, cls in ((t["at_least"], AtLeast), (t["at_most"], AtMost)):
            parts = word.lower().split()
            if rest[: len(parts)] == parts and len(rest) > len(parts) and rest[len(parts)].isdigit():
                n = int(rest[len(parts)])
                filler = self.np(rest[len(parts) + 1 :], count=n)
                if filler is not None and (cls is AtMost or n >= 1):
                    return cls(n, role, filler)
                return None
        return None

    def np(self, toks: list[str], count: int | None = None) -> ConceptExpr | None:
        if not toks:
            return None
        t = self.t
        entity = (t["entity_sg"] if count == 1 else t["entity_pl"]).lower()
        clause_number = "sg" if count == 1 else "pl"
        if toks == [entity]:
            return TOP
        if len(toks) == 2 and toks[0] in self.adjectives and toks[1] == entity:
            return Atomic(toks[0])
        if len(toks) >= 3 and toks[0] == entity and toks[1] == t["that"].lower():
            return self.vp(toks[2:], clause_number)
        return None
