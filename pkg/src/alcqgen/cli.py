"""Command line interface.

Exit codes: 0 success, 2 bad input or configuration, 3 resource or
sampling exhaustion, 4 soundness failure (failed audit or quality case).

``generate`` accepts a key=value config file via --config; explicit flags
win over file entries.  The output location falls back to the directory
named by ALCQGEN_OUT_DIR when --out is omitted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import replace

from .closure import (
    INDUCES_INCONSISTENCY,
    SUPPORTS_TRUE,
    DepthCapError,
    min_justification,
)
from .dataset import (
    ANSWER_LABEL,
    CellExhaustedError,
    Example,
    GenerationConfig,
    compute_stats,
    connective_shares,
    generate_dataset,
    read_dataset,
    split_dataset,
    write_dataset,
)
from .grammar import MAX_LEVEL, ConfigError, GrammarConfig, load_grammar
from .owl_export import to_owl_functional
from .parser import ParseError, parse_axiom
from .pools import resolve_pool
from .quality import run_quality
from .reasoner import (
    BudgetExceededError,
    EntailmentChecker,
    InternalSoundnessError,
    Verdict,
    budget_from_secs,
)
from .symbolic import build_symbol_table, builtin_lexicon, hard_symbolic, soft_symbolic
from .syntax import KnowledgeBase, Subsumption

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_EXHAUSTED = 3
EXIT_SOUNDNESS = 4

OUT_DIR_ENV = "ALCQGEN_OUT_DIR"



def _csv_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _csv_strs(text: str) -> tuple[str, ...]:
    return tuple(part.strip() for part in text.split(",") if part.strip())


def _flag_bool(text: str) -> bool:
    lowered = text.strip().lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise ConfigError(f"expected a boolean, got {text!r}")


# Config-file entries reuse the flag converters so file and command line
# accept the same spellings; flags win over file entries.
_GENERATE_KEYS = {
    "out": str,
    "seed": str,
    "pools": _csv_strs,
    "levels": _csv_ints,
    "level": _csv_ints,
    "depth_limits": _csv_ints,
    "depths": _csv_ints,
    "kbs": int,
    "budget_secs": float,
    "gate_secs": float,
    "max_attempts": int,
    "role_facts": _flag_bool,
    "grammar": str,
    "tweak_forall": float,
    "tweak_or": float,
    "jobs": int,
    "export_owl": str,
}


def _read_config_file(path: str) -> dict:
    values: dict = {}
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{lineno}: expected key=value, got {line!r}")
            key, _, value = line.partition("=")
            dest = key.strip().replace("-", "_")
            if dest == "level":
                dest = "levels"
            if dest not in _GENERATE_KEYS:
                raise ConfigError(f"{path}:{lineno}: unknown key {key.strip()!r}")
            try:
                values[dest] = _GENERATE_KEYS[dest](value.strip())
            except (argparse.ArgumentTypeError, ValueError) as exc:
                raise ConfigError(f"{path}:{lineno}: {exc}")
    return values


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alcqgen",
        description="Generate and inspect entailment benchmarks over ALCQ knowledge bases.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="sample KBs and write a dataset",
                         argument_default=argparse.SUPPRESS)
    gen.add_argument("-o", "--out",
                     help="output JSONL path or directory; "
                          f"defaults to ${OUT_DIR_ENV} when set")
    gen.add_argument("--config", help="key=value config file; flags win")
    gen.add_argument("--seed")
    gen.add_argument("--pools", type=_csv_strs,
                     help="builtin pool names or pool file paths, comma separated")
    gen.add_argument("--level", "--levels", dest="levels", type=_csv_ints,
                     help="sentence complexity levels, comma separated")
    gen.add_argument("--depth-limits", type=_csv_ints,
                     help="one preset per limit d, covering depths 0..d")
    gen.add_argument("--depths", type=_csv_ints,
                     help="explicit depth slots; overrides --depth-limits")
    gen.add_argument("--kbs", type=int,
                     help="KBs per (level, preset) cell, split evenly across pools")
    gen.add_argument("--budget-secs", type=float,
                     help="deterministic work budget per phase, in budget seconds")
    gen.add_argument("--gate-secs", type=float,
                     help="smaller budget for the per-draw consistency gate")
    gen.add_argument("--max-attempts", type=int)
    gen.add_argument("--role-facts", action="store_true",
                     help="mix role assertions into the facts")
    gen.add_argument("--grammar", help="grammar config file")
    gen.add_argument("--tweak-forall", type=float,
                     help="override the universal-restriction probability")
    gen.add_argument("--tweak-or", type=float,
                     help="override the disjunction probability")
    gen.add_argument("--jobs", type=int)
    gen.add_argument("--export-owl", metavar="DIR",
                     help="also write each KB as an OWL functional-syntax file")

    check = sub.add_parser("check", help="re-derive every answer and depth in a dataset")
    check.add_argument("--in", dest="input", required=True)
    check.add_argument("--budget-secs", type=float, default=5.0)
    check.add_argument("--limit", type=int, default=None,
                       help="audit only the first N examples")

    entail = sub.add_parser("entail", help="decide one query against a KB file")
    entail.add_argument("--kb", required=True, help="file of axioms, one per line")
    entail.add_argument("--query", required=True, help="axiom text")
    entail.add_argument("--budget-secs", type=float, default=5.0)

    translate = sub.add_parser("translate", help="re-encode a dataset symbolically")
    translate.add_argument("--in", dest="input", required=True)
    translate.add_argument("--out", required=True)
    translate.add_argument("--mode", choices=("soft", "hard"), required=True)

    sub.add_parser("quality", help="run the golden reasoning cases")

    stats = sub.add_parser("stats", help="print cue-balance statistics for a dataset")
    stats.add_argument("--in", dest="input", required=True)

    split = sub.add_parser("split", help="write grouped train/dev/test files")
    split.add_argument("--in", dest="input", required=True)
    split.add_argument("--out-dir", required=True)
    split.add_argument("--seed", default="0")

    return parser


def _resolve_out(out: str | None) -> tuple[str, str]:
    """(dataset path, stats path) from --out or the env fallback."""
    if out is None:
        out = os.environ.get(OUT_DIR_ENV)
        if not out:
            raise ConfigError(f"--out is required when {OUT_DIR_ENV} is unset")
    if out.endswith(os.sep) or os.path.isdir(out):
        os.makedirs(out, exist_ok=True)
        dataset_path = os.path.join(out, "dataset.jsonl")
    else:
        parent = os.path.dirname(out)
        if parent:
            os.makedirs(parent, exist_ok=True)
        dataset_path = out
    stem = dataset_path[:-6] if dataset_path.endswith(".jsonl") else dataset_path
    return dataset_path, stem + ".stats.json"


def _kb_from_example(example: Example) -> KnowledgeBase:
    tbox = []
    abox = []
    for lf in example.kb_lf:
        axiom = parse_axiom(lf)
        if isinstance(axiom, Subsumption):
            tbox.append(axiom)
        else:
            abox.append(axiom)
    return KnowledgeBase(tuple(tbox), tuple(abox), pool_id=example.pool, level=example.level)


_GENERATE_DEFAULTS = {
    "out": None,
    "seed": "0",
    "pools": ("A", "B"),
    "levels": (0, 1, 2, 3),
    "depth_limits": (0, 1, 2, 3, 5),
    "depths": None,
    "kbs": 10,
    "budget_secs": 5.0,
    "gate_secs": 1.0,
    "max_attempts": 200,
    "role_facts": False,
    "grammar": None,
    "tweak_forall": None,
    "tweak_or": None,
    "jobs": 1,
    "export_owl": None,
}


def _cmd_generate(args: argparse.Namespace) -> int:
    provided = {k: v for k, v in vars(args).items() if k in _GENERATE_DEFAULTS}
    file_values = _read_config_file(args.config) if hasattr(args, "config") else {}
    opt = {**_GENERATE_DEFAULTS, **file_values, **provided}
    grammar = load_grammar(opt["grammar"]) if opt["grammar"] else GrammarConfig()
    if opt["tweak_forall"] is not None or opt["tweak_or"] is not None:
        grammar = grammar.tweaked(forall=opt["tweak_forall"], or_=opt["tweak_or"])
    for level in opt["levels"]:
        if not 0 <= level <= MAX_LEVEL:
            raise ConfigError(f"levels must lie in 0..{MAX_LEVEL}, got {level}")
    for spec in opt["pools"]:
        resolve_pool(spec)
    if opt["kbs"] % len(opt["pools"]):
        raise ConfigError(
            f"--kbs {opt['kbs']} does not divide evenly across {len(opt['pools'])} pools"
        )
    dataset_path, stats_path = _resolve_out(opt["out"])
    config = GenerationConfig(
        seed=opt["seed"],
        pools=tuple(opt["pools"]),
        levels=tuple(opt["levels"]),
        depth_limits=tuple(opt["depth_limits"]),
        depth_slots=tuple(opt["depths"]) if opt["depths"] is not None else None,
        kbs_per_cell=opt["kbs"] // len(opt["pools"]),
        budget_secs=opt["budget_secs"],
        gate_secs=opt["gate_secs"],
        max_attempts=opt["max_attempts"],
        role_assertions=bool(opt["role_facts"]),
        grammar=grammar,
        jobs=opt["jobs"],
    )
    examples = generate_dataset(config)
    write_dataset(dataset_path, config, examples)
    stats = compute_stats(examples)
    stats["connectives"] = connective_shares(examples)
    with open(stats_path, "w", encoding="utf-8") as handle:
        handle.write(json.dumps(stats, indent=2, sort_keys=True, ensure_ascii=False) + "\n")
    if opt["export_owl"]:
        count = _export_owl(opt["export_owl"], examples)
        print(f"wrote {count} ontologies to {opt['export_owl']}")
    print(f"wrote {len(examples)} examples to {dataset_path}")
    print(f"answers: {stats['by_answer']}")
    print(f"depths: {stats['by_depth']}")
    return EXIT_OK


def _export_owl(out_dir: str, examples: list[Example]) -> int:
    os.makedirs(out_dir, exist_ok=True)
    seen: set[str] = set()
    for example in examples:
        if example.seed in seen:
            continue
        seen.add(example.seed)
        kb = _kb_from_example(example)
        path = os.path.join(out_dir, f"{example.seed}.ofn")
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(to_owl_functional(kb))
    return len(seen)


def _load_kb_file(path: str) -> KnowledgeBase:
    tbox = []
    abox = []
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                axiom = parse_axiom(line)
            except ParseError as exc:
                raise ParseError(f"{path}:{lineno}: {exc}", getattr(exc, "offset", 0))
            if isinstance(axiom, Subsumption):
                tbox.append(axiom)
            else:
                abox.append(axiom)
    return KnowledgeBase(tuple(tbox), tuple(abox), pool_id=path)


def _audit_example(example: Example, budget_secs: float) -> str | None:
    """None when answer and depth replay cleanly, else a description."""
    kb = _kb_from_example(example)
    checker = EntailmentChecker(kb, budget_from_secs(budget_secs))
    query = parse_axiom(example.query_lf)
    verdict = checker.entails(query)
    if ANSWER_LABEL[verdict] != example.answer:
        return f"answer: stored {example.answer}, rederived {ANSWER_LABEL[verdict]}"
    if verdict is Verdict.UNKNOWN:
        return None if example.depth == "na" else f"depth: stored {example.depth}, expected na"
    mode = SUPPORTS_TRUE if verdict is Verdict.TRUE else INDUCES_INCONSISTENCY
    try:
        just = min_justification(kb, query, mode, cap=int(example.depth) + 1, checker=checker)
        depth = len(just) - 1
    except DepthCapError:
        depth = None
    if depth != example.depth:
        return f"depth: stored {example.depth}, rederived {depth}"
    return None


def _cmd_check(args: argparse.Namespace) -> int:
    _, examples = read_dataset(args.input)
    if args.limit is not None:
        examples = examples[: args.limit]
    mismatches = 0
    for offset, example in enumerate(examples):
        problem = _audit_example(example, args.budget_secs)
        if problem is not None:
            # Line 1 of the file is the header.
            print(f"{args.input}:{offset + 2}: {problem}")
            mismatches += 1
    print(f"audited {len(examples)} examples: {mismatches} mismatches")
    return EXIT_OK if mismatches == 0 else EXIT_SOUNDNESS


def _cmd_entail(args: argparse.Namespace) -> int:
    kb = _load_kb_file(args.kb)
    query = parse_axiom(args.query)
    checker = EntailmentChecker(kb, budget_from_secs(args.budget_secs))
    verdict = checker.entails(query)
    print({Verdict.TRUE: "True", Verdict.FALSE: "False", Verdict.UNKNOWN: "Unknown"}[verdict])
    return EXIT_OK


def _cmd_translate(args: argparse.Namespace) -> int:
    header, examples = read_dataset(args.input)
    pool_specs = header.get("config", {}).get("pools", ("a", "b"))
    pools = [resolve_pool(spec) for spec in pool_specs]
    table = build_symbol_table(pools=pools)
    translated: list[Example] = []
    if args.mode == "soft":
        for example in examples:
            translated.append(
                replace(
                    example,
                    context=tuple(soft_symbolic(s, table) for s in example.context),
                    question=soft_symbolic(example.question, table),
                )
            )
    else:
        lexicon = builtin_lexicon()
        for example in examples:
            context = tuple(
                hard_symbolic(parse_axiom(lf), table, lexicon) for lf in example.kb_lf
            )
            question = hard_symbolic(parse_axiom(example.query_lf), table, lexicon)
            translated.append(replace(example, context=context, question=question))
    header = dict(header)
    header["encoding"] = args.mode
    with open(args.out, "w", encoding="utf-8") as handle:
        handle.write(json.dumps(header, ensure_ascii=False) + "\n")
        for example in translated:
            handle.write(example.to_json() + "\n")
    print(f"wrote {len(translated)} {args.mode}-encoded examples to {args.out}")
    return EXIT_OK


def _cmd_quality(_: argparse.Namespace) -> int:
    results = run_quality()
    failures = 0
    for result in results:
        status = "ok" if result.ok else "FAIL"
        line = f"{status:4s} {result.case.name}: got {result.observed}"
        if not result.ok:
            line += f", expected {result.case.expected}"
            failures += 1
        print(line)
    print(f"{len(results) - failures}/{len(results)} cases passed")
    return EXIT_OK if failures == 0 else EXIT_SOUNDNESS


def _cmd_stats(args: argparse.Namespace) -> int:
    _, examples = read_dataset(args.input)
    report = compute_stats(examples)
    report["connectives"] = connective_shares(examples)
    print(json.dumps(report, indent=2, sort_keys=True))
    return EXIT_OK


def _cmd_split(args: argparse.Namespace) -> int:
    header, examples = read_dataset(args.input)
    parts = split_dataset(examples, seed=args.seed)
    os.makedirs(args.out_dir, exist_ok=True)
    for name, part in parts.items():
        path = os.path.join(args.out_dir, f"{name}.jsonl")
        part_header = dict(header)
        part_header["split"] = name
        part_header["count"] = len(part)
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(json.dumps(part_header, ensure_ascii=False) + "\n")
            for example in part:
                handle.write(example.to_json() + "\n")
        print(f"wrote {len(part)} examples to {path}")
    return EXIT_OK


_COMMANDS = {
    "generate": _cmd_generate,
    "check": _cmd_check,
    "entail": _cmd_entail,
    "translate": _cmd_translate,
    "quality": _cmd_quality,
    "stats": _cmd_stats,
    "split": _cmd_split,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ConfigError, ParseError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CellExhaustedError, BudgetExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EXHAUSTED
    except InternalSoundnessError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SOUNDNESS


if __name__ == "__main__":
    sys.exit(main())
