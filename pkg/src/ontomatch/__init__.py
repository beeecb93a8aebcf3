"""Ontology matching: string and lexical similarity, Kuhn-Munkres assignment, evaluation."""
from ._accel import backend_name
from .alignment import Alignment, Correspondence, assemble_alignment, parse_alignment, serialize_alignment
from .assignment import Assignment, filter_assignment, kuhn_munkres
from .engine import EngineConfig, ScoreMatrix, build_all_blocks, build_matrix
from .evaluation import EvalReport, batch_evaluate, evaluate
from .lexicon import (
    LexicalResource,
    are_synonyms,
    fixture_lexicon,
    is_hypernym_related,
    load_lexicon,
    semantic_score,
)
from .metrics import MetricId, jaccard_sim, levenshtein_sim, qgram_sim, similarity, smith_waterman_sim
from .ontology import (
    Entity,
    EntityKind,
    Ontology,
    display_name,
    entities_by_kind,
    load_ontology,
    normalize_label,
    parse_native,
    parse_rdfxml,
)

__version__ = "0.1.0"
