"""Cause-effect phrase extraction from dependency trees via path patterns."""

from .deptree import (ConlluError, DepEdge, DepTree, Token, ancestors, candidate_nodes,
                      descendants, parse_conllu, serialize_conllu, shortest_path)
from .evaluation import (EvalReport, GoldTriplet, PredTriplet, edit_similarity,
                         levenshtein, match_triplets, report)
from .extender import Extraction, clean, extend_phrase, extract_causal_phrases, load_stopwords
from .matcher import CandidateMatch, edge_matches, find_candidates, match_ratio
from .patterns import (DependencyPattern, PatternEdge, PatternEndpoint, PatternError,
                       PatternLibrary, compile_from_templates, compile_with_report,
                       default_patterns_path, generalize, load_library, save_library)

__version__ = "0.1.0"

__all__ = [
    "ConlluError", "DepEdge", "DepTree", "Token", "ancestors", "candidate_nodes",
    "descendants", "parse_conllu", "serialize_conllu", "shortest_path",
    "EvalReport", "GoldTriplet", "PredTriplet", "edit_similarity", "levenshtein",
    "match_triplets", "report",
    "Extraction", "clean", "extend_phrase", "extract_causal_phrases", "load_stopwords",
    "CandidateMatch", "edge_matches", "find_candidates", "match_ratio",
    "DependencyPattern", "PatternEdge", "PatternEndpoint", "PatternError",
    "PatternLibrary", "compile_from_templates", "compile_with_report",
    "default_patterns_path", "generalize", "load_library", "save_library",
    "__version__",
]
