"""End-to-end dataset assembly: cells to examples to JSONL.

A cell is one (pool, sentence level, depth preset, ordinal) combination and
yields exactly one knowledge base with its query set, or exhausts its
attempt budget.  Every cell derives an independent child seed from the run
seed, so cells can be generated in any order or in parallel and the output
bytes never change.

Each example records the shuffled verbalized context, one question, the
answer, the inference depth (or "na" for unknowns), the logical forms of
context and query, and the indices of the justifying context sentences.
"""

from __future__ import annotations

import hashlib
import json
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, fields

from .closure import ClosureBudgetError, delta_closure
from .grammar import GrammarConfig
from .kbgen import sample_kb, size_range_for
from .pools import VocabularyPool, resolve_pool
from .queries import Query, SamplingExhaustedError, build_query_set
from .reasoner import (
    BudgetExceededError,
    EntailmentChecker,
    Verdict,
    budget_from_secs,
)
from .syntax import Subsumption, render
from .verbalize import TemplateSet, builtin_templates, verbalize_axiom

ANSWER_LABEL = {Verdict.TRUE: "True", Verdict.FALSE: "False", Verdict.UNKNOWN: "Unknown"}

SPLIT_NAMES = ("train", "dev", "test")
SPLIT_RATIOS = (0.7, 0.1, 0.2)

DATASET_VERSION = 1


@dataclass(frozen=True)
class Example:
    context: tuple[str, ...]
    question: str
    answer: str
    depth: int | str
    level: int
    justification: tuple[int, ...]
    kb_lf: tuple[str, ...]
    query_lf: str
    pool: str
    seed: str

    def to_json(self) -> str:
        record = {
            "context": list(self.context),
            "question": self.question,
            "answer": self.answer,
            "depth": self.depth,
            "level": self.level,
            "justification": list(self.justification),
            "kb_lf": list(self.kb_lf),
            "query_lf": self.query_lf,
            "pool": self.pool,
            "seed": self.seed,
        }
        return json.dumps(record, ensure_ascii=False)

    @staticmethod
    def from_json(line: str) -> "Example":
        record = json.loads(line)
        return Example(
            context=tuple(record["context"]),
            question=record["question"],
            answer=record["answer"],
            depth=record["depth"],
            level=record["level"],
            justification=tuple(record["justification"]),
            kb_lf=tuple(record["kb_lf"]),
            query_lf=record["query_lf"],
            pool=record["pool"],
            seed=record["seed"],
        )


@dataclass(frozen=True)
class GenerationConfig:
    seed: str = "0"
    pools: tuple[str, ...] = ("A", "B")
    levels: tuple[int, ...] = (0, 1, 2, 3)
    depth_limits: tuple[int, ...] = (0, 1, 2, 3, 5)
    depth_slots: tuple[int, ...] | None = None
    # 10 KBs per (level, preset) once the two pools are merged.
    kbs_per_cell: int = 5
    budget_secs: float = 5.0
    # Draws whose consistency gate alone overruns gate_secs are hopeless for
    # the closure stage too; failing them fast buys more attempts.
    gate_secs: float = 1.0
    max_attempts: int = 200
    role_assertions: bool = False
    grammar: GrammarConfig = field(default_factory=GrammarConfig)
    jobs: int = 1

    def validate(self) -> None:
        self.grammar.validate()
        if self.kbs_per_cell < 1 or self.max_attempts < 1 or self.jobs < 1:
            raise ValueError("kbs_per_cell, max_attempts and jobs must be positive")
        if self.budget_secs <= 0 or self.gate_secs <= 0:
            raise ValueError("budget_secs and gate_secs must be positive")
        if not self.pools or not self.levels:
            raise ValueError("need at least one pool and one level")
        if self.depth_slots is not None:
            if not self.depth_slots or any(d < 0 for d in self.depth_slots):
                raise ValueError("depth_slots must be nonempty and nonnegative")
        elif not self.depth_limits or any(d < 0 for d in self.depth_limits):
            raise ValueError("depth_limits must be nonempty and nonnegative")

    def presets(self) -> tuple[tuple[str, tuple[int, ...]], ...]:
        """(name, slots) pairs; a preset with limit d covers depths 0..d."""
        if self.depth_slots is not None:
            slots = tuple(sorted(set(self.depth_slots)))
            name = "s" + "-".join(str(d) for d in slots)
            return ((name, slots),)
        return tuple(
            (f"d{limit}", tuple(range(limit + 1))) for limit in self.depth_limits
        )

    def header(self) -> dict:
        record: dict = {"version": DATASET_VERSION, "config": {}}
        for f in fields(self):
            if f.name in ("jobs", "grammar"):
                continue
            value = getattr(self, f.name)
            record["config"][f.name] = list(value) if isinstance(value, tuple) else value
        record["config"]["grammar"] = {
            f.name: getattr(self.grammar, f.name) for f in fields(self.grammar)
        }
        return record


def derive_seed(seed: str, pool: str, level: int, preset: str, ordinal: int, attempt: int) -> str:
    key = f"{seed}/{pool}/{level}/{preset}/{ordinal}/{attempt}"
    return hashlib.sha256(key.encode("utf-8")).hexdigest()[:8]


class CellExhaustedError(RuntimeError):
    """A cell burned through max_attempts without producing a KB that
    serves every depth slot."""


def _verbalize_query(query: Query, templates: TemplateSet, rng: random.Random) -> str:
    return verbalize_axiom(query.axiom, templates, rng=rng)


def generate_cell(
    config: GenerationConfig,
    pool: VocabularyPool,
    level: int,
    preset: str,
    slots: tuple[int, ...],
    ordinal: int,
) -> list[Example]:
    """All examples for one knowledge base; raises CellExhaustedError when
    no attempt survives the rejection gates."""
    templates = builtin_templates(pool.genre)
    size = size_range_for(max(slots))
    for attempt in range(config.max_attempts):
        child = derive_seed(config.seed, pool.pool_id, level, preset, ordinal, attempt)
        rng = random.Random(child)
        kb = sample_kb(
            level, size, pool, config.grammar, rng,
            role_assertions=config.role_assertions,
            budget=budget_from_secs(config.gate_secs),
        )
        if kb is None:
            continue
        checker = EntailmentChecker(kb, budget_from_secs(config.budget_secs))
        try:
            entries = delta_closure(kb, checker=checker)
            queries = build_query_set(kb, entries, slots, pool, config.grammar, rng, checker)
        except (ClosureBudgetError, BudgetExceededError, SamplingExhaustedError):
            continue
        if queries is None:
            continue
        order = list(range(len(kb.axioms)))
        rng.shuffle(order)
        context = tuple(verbalize_axiom(kb.axioms[i], templates, rng=rng) for i in order)
        kb_lf = tuple(render(kb.axioms[i]) for i in order)
        position = {original: shuffled for shuffled, original in enumerate(order)}
        examples = []
        for query in queries:
            examples.append(
                Example(
                    context=context,
                    question=_verbalize_query(query, templates, rng),
                    answer=ANSWER_LABEL[query.answer],
                    depth=query.depth if query.depth is not None else "na",
                    level=level,
                    justification=tuple(sorted(position[i] for i in query.justification)),
                    kb_lf=kb_lf,
                    query_lf=render(query.axiom),
                    pool=kb.pool_id,
                    seed=child,
                )
            )
        return examples
    raise CellExhaustedError(
        f"no usable KB after {config.max_attempts} attempts "
        f"(pool={pool.pool_id} level={level} preset={preset} ordinal={ordinal})"
    )


def _cells(config: GenerationConfig) -> list[tuple[str, int, str, tuple[int, ...], int]]:
    cells = []
    for pool_spec in config.pools:
        for level in config.levels:
            for preset, slots in config.presets():
                for ordinal in range(config.kbs_per_cell):
                    cells.append((pool_spec, level, preset, slots, ordinal))
    return cells


def _run_cell(args: tuple[GenerationConfig, str, int, str, tuple[int, ...], int]) -> list[Example]:
    config, pool_spec, level, preset, slots, ordinal = args
    pool = resolve_pool(pool_spec)
    return generate_cell(config, pool, level, preset, slots, ordinal)


def generate_dataset(config: GenerationConfig) -> list[Example]:
    """Examples for every cell, in deterministic cell order.

    The output is byte-identical for any ``jobs`` value because each cell is
    seeded independently.
    """
    config.validate()
    tasks = [(config,) + cell for cell in _cells(config)]
    if config.jobs == 1:
        batches = [_run_cell(task) for task in tasks]
    else:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            batches = list(pool.map(_run_cell, tasks))
    return [example for batch in batches for example in batch]


def write_dataset(path: str, config: GenerationConfig, examples: list[Example]) -> None:
    header = config.header()
    header["count"] = len(examples)
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(json.dumps(header, ensure_ascii=False) + "\n")
        for example in examples:
            handle.write(example.to_json() + "\n")


def read_dataset(path: str) -> tuple[dict, list[Example]]:
    with open(path, encoding="utf-8") as handle:
        first = handle.readline()
        if not first.strip():
            raise ValueError(f"{path}: empty dataset file")
        header = json.loads(first)
        if "config" not in header:
            raise ValueError(f"{path}: first line is not a dataset header")
        examples = [Example.from_json(line) for line in handle if line.strip()]
    return header, examples


def split_dataset(
    examples: list[Example],
    ratios: tuple[float, float, float] = SPLIT_RATIOS,
    seed: str = "0",
) -> dict[str, list[Example]]:
    """Grouped split: all examples sharing a (pool, seed) pair, i.e. one
    knowledge base, land in the same split.  Quotas come from largest
    remainder over example counts; whole groups then fill the neediest
    split, so sizes can drift from quota by at most one group."""
    if abs(sum(ratios) - 1.0) > 1e-9 or any(r < 0 for r in ratios):
        raise ValueError("split ratios must be nonnegative and sum to 1")
    groups: dict[tuple[str, str], list[Example]] = {}
    for example in examples:
        groups.setdefault((example.pool, example.seed), []).append(example)
    keys = sorted(groups)
    random.Random(f"{seed}/split").shuffle(keys)
    total = len(examples)
    quotas = [math.floor(r * total) for r in ratios]
    remainders = [r * total - q for r, q in zip(ratios, quotas)]
    for _ in range(total - sum(quotas)):
        best = max(range(3), key=lambda i: (remainders[i], -i))
        quotas[best] += 1
        remainders[best] = -1.0
    out: dict[str, list[Example]] = {name: [] for name in SPLIT_NAMES}
    filled = [0, 0, 0]
    for key in keys:
        group = groups[key]
        best = max(range(3), key=lambda i: (quotas[i] - filled[i], -i))
        out[SPLIT_NAMES[best]].extend(group)
        filled[best] += len(group)
    return out


def _chi_square_p(statistic: float, df: int) -> float:
    """Upper tail of the chi-square distribution, Wilson-Hilferty cube-root
    normal approximation."""
    if df <= 0:
        return 1.0
    if statistic <= 0:
        return 1.0
    z = ((statistic / df) ** (1.0 / 3.0) - (1.0 - 2.0 / (9.0 * df))) / math.sqrt(
        2.0 / (9.0 * df)
    )
    return 0.5 * math.erfc(z / math.sqrt(2.0))


def _mean(values: list[float]) -> float:
    return sum(values) / len(values) if values else 0.0


def compute_stats(examples: list[Example]) -> dict:
    """Cue-balance report: label mix, negation frequency per label, token
    lengths, and a chi-square independence check of label vs the presence
    of negation in the question."""
    by_answer: dict[str, int] = {}
    by_depth: dict[str, int] = {}
    by_level: dict[str, int] = {}
    not_counts: dict[str, int] = {}
    question_tokens: dict[str, list[float]] = {}
    context_sentences: list[float] = []
    context_tokens: list[float] = []
    for example in examples:
        by_answer[example.answer] = by_answer.get(example.answer, 0) + 1
        by_depth[str(example.depth)] = by_depth.get(str(example.depth), 0) + 1
        by_level[str(example.level)] = by_level.get(str(example.level), 0) + 1
        tokens = example.question.lower().split()
        if "not" in tokens:
            not_counts[example.answer] = not_counts.get(example.answer, 0) + 1
        question_tokens.setdefault(example.answer, []).append(float(len(tokens)))
        context_sentences.append(float(len(example.context)))
        for sentence in example.context:
            context_tokens.append(float(len(sentence.split())))
    answers = sorted(by_answer)
    not_frequency = {
        answer: not_counts.get(answer, 0) / by_answer[answer] for answer in answers
    }
    spread = (
        max(not_frequency.values()) - min(not_frequency.values()) if not_frequency else 0.0
    )
    statistic = 0.0
    total = len(examples)
    total_not = sum(not_counts.values())
    df = 0
    if total and 0 < total_not < total and len(answers) > 1:
        for answer in answers:
            for observed, margin in (
                (not_counts.get(answer, 0), total_not),
                (by_answer[answer] - not_counts.get(answer, 0), total - total_not),
            ):
                expected = by_answer[answer] * margin / total
                statistic += (observed - expected) ** 2 / expected
        df = len(answers) - 1
    return {
        "count": total,
        "by_answer": by_answer,
        "by_depth": by_depth,
        "by_level": by_level,
        "not_frequency": not_frequency,
        "not_spread": spread,
        "question_tokens_mean": {
            answer: _mean(question_tokens[answer]) for answer in answers
        },
        "context_sentences_mean": _mean(context_sentences),
        "context_tokens_mean": _mean(context_tokens),
        "chi2_not": {
            "statistic": statistic,
            "df": df,
            "p": _chi_square_p(statistic, df),
        },
    }


def mean_sentence_length(examples: list[Example]) -> float:
    """Mean context-sentence token count over a set of examples."""
    lengths = [
        float(len(sentence.split())) for example in examples for sentence in example.context
    ]
    return _mean(lengths)


def unique_kbs(examples: list[Example]) -> list[tuple[str, ...]]:
    """One kb_lf tuple per distinct knowledge base in the examples."""
    seen: dict[tuple[str, str], tuple[str, ...]] = {}
    for example in examples:
        seen.setdefault((example.pool, example.seed), example.kb_lf)
    return [seen[key] for key in sorted(seen)]


def connective_shares(examples: list[Example]) -> dict[str, float]:
    """Distribution of grammar choices over the distinct KBs' logical
    forms: the share of binary connectives that are disjunctions and the
    share of subsumptions mentioning a universal restriction."""
    from .analysis import subterm_counts
    from .parser import parse_axiom

    and_count = or_count = 0
    subsumptions = with_forall = 0
    for kb_lf in unique_kbs(examples):
        for lf in kb_lf:
            axiom = parse_axiom(lf)
            counts = subterm_counts(axiom)
            and_count += counts["and"]
            or_count += counts["or"]
            if isinstance(axiom, Subsumption):
                subsumptions += 1
                if counts["forall"]:
                    with_forall += 1
    booleans = and_count + or_count
    return {
        "or_share": or_count / booleans if booleans else 0.0,
        "forall_subsumption_share": with_forall / subsumptions if subsumptions else 0.0,
    }
