"""Entailment benchmarks over ALCQ knowledge bases.

The pipeline: sample a knowledge base from a probabilistic grammar over a
vocabulary pool, close it under entailed statements, grade each entailment
by minimum justification size, pick balanced True/False/Unknown queries per
inference depth, and verbalize everything through templates into JSONL.
"""

from .analysis import axiom_level, linguistic_level
from .closure import (
    INDUCES_INCONSISTENCY,
    SUPPORTS_TRUE,
    ClosureEntry,
    delta_closure,
    inference_depth,
    min_justification,
)
from .dataset import (
    Example,
    GenerationConfig,
    compute_stats,
    generate_dataset,
    read_dataset,
    split_dataset,
    write_dataset,
)
from .grammar import FORM_TABLE, GrammarConfig, sample_axiom, sample_concept
from .kbgen import sample_kb
from .nnf import complement, negate_fact, nnf
from .owl_export import to_owl_functional
from .parser import ParseError, parse_axiom, parse_concept
from .pools import POOL_A, POOL_B, VocabularyPool, load_pool, resolve_pool
from .quality import CASES as QUALITY_CASES
from .quality import run_quality
from .reasoner import (
    Budget,
    BudgetExceededError,
    EntailmentChecker,
    InternalSoundnessError,
    Verdict,
    budget_from_secs,
    entails,
    is_consistent,
    satisfiable,
)
from .symbolic import SymbolTable, build_symbol_table, hard_symbolic, soft_symbolic
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
    KnowledgeBase,
    Not,
    Or,
    RoleAssertion,
    Subsumption,
    Top,
    render,
)
from .verbalize import (
    TemplateSet,
    builtin_templates,
    sentence_to_axiom,
    verbalize_axiom,
)

__version__ = "0.1.0"

__all__ = [
    "And",
    "AtLeast",
    "AtMost",
    "Atomic",
    "Axiom",
    "BOTTOM",
    "Bottom",
    "Budget",
    "BudgetExceededError",
    "ClosureEntry",
    "ConceptAssertion",
    "ConceptExpr",
    "EntailmentChecker",
    "Example",
    "Exists",
    "FORM_TABLE",
    "Forall",
    "GenerationConfig",
    "GrammarConfig",
    "INDUCES_INCONSISTENCY",
    "InternalSoundnessError",
    "KnowledgeBase",
    "Not",
    "Or",
    "POOL_A",
    "POOL_B",
    "ParseError",
    "QUALITY_CASES",
    "RoleAssertion",
    "Subsumption",
    "SUPPORTS_TRUE",
    "SymbolTable",
    "TOP",
    "TemplateSet",
    "Top",
    "Verdict",
    "VocabularyPool",
    "axiom_level",
    "budget_from_secs",
    "build_symbol_table",
    "builtin_templates",
    "complement",
    "compute_stats",
    "delta_closure",
    "entails",
    "generate_dataset",
    "hard_symbolic",
    "inference_depth",
    "is_consistent",
    "linguistic_level",
    "load_pool",
    "min_justification",
    "negate_fact",
    "nnf",
    "parse_axiom",
    "parse_concept",
    "read_dataset",
    "render",
    "resolve_pool",
    "run_quality",
    "sample_axiom",
    "sample_concept",
    "sample_kb",
    "satisfiable",
    "sentence_to_axiom",
    "soft_symbolic",
    "split_dataset",
    "to_owl_functional",
    "verbalize_axiom",
    "write_dataset",
]
