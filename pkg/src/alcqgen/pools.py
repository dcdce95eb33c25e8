"""Vocabulary pools: the lexical raw material for sampled knowledge bases.

A pool fixes the atomic concept names (adjectives), role names (third person
singular verbs), individual names, and a genre that selects the sentence
templates ("people" or "things").  Two pools ship builtin, A and B; custom
pools load from text files of ``kind: identifier`` lines under a versioned
header::

    pool 1
    id: mypool
    genre: people
    concept: red
    role: likes
    individual: Anne
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources


@dataclass(frozen=True)
class VocabularyPool:
    pool_id: str
    genre: str
    concepts: tuple[str, ...]
    roles: tuple[str, ...]
    individuals: tuple[str, ...]

    def validate(self) -> None:
        if not self.concepts or not self.roles or not self.individuals:
            raise ValueError(f"pool {self.pool_id!r} must have concepts, roles, and individuals")
        if self.genre not in ("people", "things"):
            raise ValueError(f"pool {self.pool_id!r} has unknown genre {self.genre!r}")
        for group in (self.concepts, self.roles, self.individuals):
            if len(set(group)) != len(group):
                raise ValueError(f"pool {self.pool_id!r} contains duplicate names")


POOL_A = VocabularyPool(
    pool_id="A",
    genre="people",
    concepts=(
        "red", "blue", "green", "kind", "nice", "big", "cold",
        "young", "round", "rough", "orange", "smart", "quiet", "furry",
    ),
    roles=("likes", "loves", "eats", "chases", "admires"),
    individuals=("Anne", "Bob", "Charlie", "Dave", "Erin", "Fiona", "Gary", "Harry"),
)

POOL_B = VocabularyPool(
    pool_id="B",
    genre="people",
    concepts=(
        "ambitious", "confident", "creative", "determined",
        "enthusiastic", "innovative", "logical", "persevering",
    ),
    roles=(
        "admires", "consults", "guides", "instructs",
        "leads", "mentors", "supervises", "supports",
    ),
    individuals=(
        "Ioanna", "Dimitrios", "Eleni", "Maria",
        "Manolis", "Angelos", "Panos", "Anna",
    ),
)

_BUILTIN = {"A": POOL_A, "B": POOL_B}


def builtin_pool(name: str) -> VocabularyPool:
    try:
        return _BUILTIN[name.upper()]
    except KeyError:
        raise ValueError(f"no builtin pool named {name!r}; choose from {sorted(_BUILTIN)}") from None


def parse_pool(text: str, origin: str = "<pool>") -> VocabularyPool:
    lines = text.splitlines()
    start = None
    for idx, raw in enumerate(lines):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.split() == ["pool", "1"]:
            start = idx + 1
        break
    if start is None:
        raise ValueError(f"{origin}:1: expected header 'pool 1'")
    fields: dict[str, str] = {}
    concepts: list[str] = []
    roles: list[str] = []
    individuals: list[str] = []
    buckets = {"concept": concepts, "role": roles, "individual": individuals}
    for lineno, raw in enumerate(lines[start:], start=start + 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if ":" not in line:
            raise ValueError(f"{origin}:{lineno}: expected 'kind: identifier'")
        kind, _, value = line.partition(":")
        kind, value = kind.strip(), value.strip()
        if kind in ("id", "genre"):
            fields[kind] = value
        elif kind in buckets:
            if not value.replace("_", "").isalnum():
                raise ValueError(f"{origin}:{lineno}: invalid identifier {value!r}")
            buckets[kind].append(value)
        else:
            raise ValueError(f"{origin}:{lineno}: unknown entry kind {kind!r}")
    pool = VocabularyPool(
        pool_id=fields.get("id", origin),
        genre=fields.get("genre", "people"),
        concepts=tuple(concepts),
        roles=tuple(roles),
        individuals=tuple(individuals),
    )
    pool.validate()
    return pool


def load_pool(path: str) -> VocabularyPool:
    with open(path, encoding="utf-8") as handle:
        return parse_pool(handle.read(), origin=path)


def resolve_pool(spec: str) -> VocabularyPool:
    """A builtin pool name (case insensitive), or a path to a pool file."""
    if spec.upper() in _BUILTIN:
        return _BUILTIN[spec.upper()]
    return load_pool(spec)


def builtin_pool_text(name: str) -> str:
    """The packaged pool file matching a builtin pool (for reference)."""
    return resources.files("alcqgen.data").joinpath(f"pool_{name.lower()}.txt").read_text("utf-8")
