"""Match dependency patterns against shortest paths between candidate pairs.

For an ordered candidate pair (u, v), u plays the cause role (binds X) and v
the effect role (binds Y).  The match ratio is the fraction of a pattern's
edges that can be paired with distinct path edges; a pair is emitted when its
best pattern reaches the threshold.
"""

from __future__ import annotations

from dataclasses import dataclass

from .deptree import DepEdge, DepTree, candidate_nodes, shortest_path
from .patterns import LEXICAL, X, PatternEdge, PatternLibrary


@dataclass(frozen=True)
class CandidateMatch:
    sentence_id: str
    cause_id: int
    effect_id: int
    pattern_id: str
    ratio: float

    def __post_init__(self):
        if self.cause_id == self.effect_id:
            raise ValueError("cause and effect are the same token %d" % self.cause_id)
        if not 0.0 <= self.ratio <= 1.0:
            raise ValueError("ratio %r out of [0, 1]" % self.ratio)


def _endpoint_ok(endpoint, lemma: str, u_lemma: str, v_lemma: str) -> bool:
    if endpoint.kind == LEXICAL:
        return lemma == endpoint.lemma
    if endpoint.kind == X:
        return lemma == u_lemma
    return lemma == v_lemma


def edge_matches(pe: PatternEdge, de: DepEdge, u_lemma: str, v_lemma: str) -> bool:
    """Does a path edge satisfy a pattern edge under the X=u, Y=v binding?"""
    return (pe.deprel == de.deprel
            and pe.parent_pos == de.parent_pos.lower()
            and _endpoint_ok(pe.parent, de.parent_lemma, u_lemma, v_lemma)
            and _endpoint_ok(pe.child, de.child_lemma, u_lemma, v_lemma))


def match_ratio(pattern, path: list[DepEdge], u_lemma: str, v_lemma: str) -> float:
    """Fraction of pattern edges matched to distinct path edges.

    Computed as a maximum bipartite matching so repeated edges on either side
    are consumed at most once and the result does not depend on edge order.
    """
    pedges = list(pattern.edges)
    options = [[j for j, de in enumerate(path) if edge_matches(pe, de, u_lemma, v_lemma)]
               for pe in pedges]
    taken: dict[int, int] = {}

    def augment(i: int, seen: set[int]) -> bool:
        for j in options[i]:
            if j in seen:
                continue
            seen.add(j)
            if j not in taken or augment(taken[j], seen):
                taken[j] = i
                return True
        return False

    matched = sum(1 for i in range(len(pedges)) if augment(i, set()))
    return matched / len(pedges)


def find_candidates(tree: DepTree, library: PatternLibrary,
                    min_threshold: float = 1.0) -> list[CandidateMatch]:
    """All ordered candidate pairs whose best pattern reaches min_threshold.

    One match per (cause, effect) pair: the highest-ratio pattern, ties
    broken by lexicographically smallest pattern id.
    """
    if not 0.5 <= min_threshold <= 1.0:
        raise ValueError("min_threshold must be within [0.5, 1.0], got %r" % min_threshold)
    out = []
    nodes = candidate_nodes(tree)
    for u in nodes:
        u_lemma = tree.token(u).lemma
        for v in nodes:
            if u == v:
                continue
            v_lemma = tree.token(v).lemma
            path = shortest_path(tree, u, v)
            best = None
            for pattern in library:
                ratio = match_ratio(pattern, path, u_lemma, v_lemma)
                key = (-ratio, pattern.id)
                if best is None or key < best[0]:
                    best = (key, pattern, ratio)
            if best is not None and best[2] >= min_threshold:
                out.append(CandidateMatch(sentence_id=tree.sentence_id, cause_id=u,
                                          effect_id=v, pattern_id=best[1].id, ratio=best[2]))
    return out
