"""Scoring extracted cause-effect pairs against gold triplets.

Similarity between two phrases is a percentage derived from character-level
edit distance.  Predictions and gold rows pair up one-to-one within each
sentence, greedily by best similarity, and the usual precision/recall/F1
fall out of the matched count.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class GoldTriplet:
    sentence_id: str
    cause: str
    effect: str


@dataclass(frozen=True)
class PredTriplet:
    """A prediction as read back from the extraction wire format."""
    sentence_id: str
    cause: str
    effect: str
    pattern_id: str | None = None


def levenshtein(s1: str, s2: str) -> int:
    """Character-level edit distance (insert, delete, substitute all cost 1)."""
    if len(s1) < len(s2):
        s1, s2 = s2, s1
    prev = list(range(len(s2) + 1))
    for i, a in enumerate(s1, start=1):
        cur = [i]
        for j, b in enumerate(s2, start=1):
            cur.append(min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a != b)))
        prev = cur
    return prev[-1]


def edit_similarity(s1: str, s2: str) -> float:
    """Percent similarity: (maxlen - distance) / maxlen * 100.

    Two empty strings count as identical (100.0).  Always within [0, 100].
    """
    mx = max(len(s1), len(s2))
    if mx == 0:
        return 100.0
    return (mx - levenshtein(s1, s2)) / mx * 100.0


def _norm(s: str) -> str:
    return " ".join(s.split()).casefold()


def _check_min_sim(min_sim: float):
    if not 0.0 < min_sim <= 100.0:
        raise ValueError("min_sim must be within (0, 100], got %r" % min_sim)


def _match_pairs(pred, gold, min_sim: float) -> list[tuple[int, int]]:
    """Greedy one-to-one pairing of prediction and gold indices.

    Only rows sharing a sentence_id can pair.  Both the cause and the effect
    similarity must reach min_sim; candidates are taken by descending
    min(cause similarity, effect similarity), ties by input order.  At
    min_sim = 100 this degrades to exact equality of normalized strings.
    """
    _check_min_sim(min_sim)
    candidates = []
    for pi, p in enumerate(pred):
        for gi, g in enumerate(gold):
            if p.sentence_id != g.sentence_id:
                continue
            sim_c = edit_similarity(_norm(p.cause), _norm(g.cause))
            if sim_c < min_sim:
                continue
            sim_e = edit_similarity(_norm(p.effect), _norm(g.effect))
            if sim_e < min_sim:
                continue
            candidates.append((min(sim_c, sim_e), pi, gi))
    candidates.sort(key=lambda t: (-t[0], t[1], t[2]))
    used_p: set[int] = set()
    used_g: set[int] = set()
    pairs = []
    for _, pi, gi in candidates:
        if pi in used_p or gi in used_g:
            continue
        used_p.add(pi)
        used_g.add(gi)
        pairs.append((pi, gi))
    return pairs


def match_triplets(pred, gold, min_sim: float = 100.0) -> int:
    """How many predictions pair up with gold rows at the given similarity."""
    return len(_match_pairs(pred, gold, min_sim))


def _f1(precision: float, recall: float) -> float:
    if precision + recall == 0.0:
        return 0.0
    return 2.0 * precision * recall / (precision + recall)


@dataclass(frozen=True)
class EvalReport:
    min_sim: float
    n_pred: int
    n_gold: int
    n_matched: int
    precision: float
    recall: float
    f1: float
    per_pattern: dict = field(default_factory=dict)   # pattern_id -> precision
    per_length: dict = field(default_factory=dict)    # phrase word count -> F1

    def to_json_dict(self) -> dict:
        return {
            "min_sim": self.min_sim,
            "n_pred": self.n_pred,
            "n_gold": self.n_gold,
            "n_matched": self.n_matched,
            "precision": round(self.precision, 6),
            "recall": round(self.recall, 6),
            "f1": round(self.f1, 6),
            "per_pattern": {k: round(v, 6) for k, v in sorted(self.per_pattern.items())},
            "per_length": {str(k): round(v, 6) for k, v in sorted(self.per_length.items())},
        }

    def format_table(self) -> str:
        lines = ["minSim  n_pred  n_gold  matched   Prec    Rec     F1",
                 "%6.1f  %6d  %6d  %7d  %5.3f  %5.3f  %5.3f" % (
                     self.min_sim, self.n_pred, self.n_gold, self.n_matched,
                     self.precision, self.recall, self.f1)]
        if self.per_pattern:
            lines.append("")
            lines.append("pattern     Prec")
            for pid, prec in sorted(self.per_pattern.items()):
                lines.append("%-9s  %5.3f" % (pid, prec))
        if self.per_length:
            lines.append("")
            lines.append("length     F1")
            for length, f1 in sorted(self.per_length.items()):
                lines.append("%-6d  %5.3f" % (length, f1))
        return "\n".join(lines) + "\n"


def _longer_side(cause: str, effect: str) -> int:
    return max(len(cause.split()), len(effect.split()))


def report(pred, gold, min_sim: float = 100.0) -> EvalReport:
    """Score predictions against gold and break results down.

    Breakdowns: precision per pattern id (predictions carrying one), and F1
    per phrase-length bucket, keyed by the word count of the longer of a gold
    row's cause/effect (matched predictions land in their gold's bucket,
    unmatched ones in their own).
    """
    pred = list(pred)
    gold = list(gold)
    pairs = _match_pairs(pred, gold, min_sim)
    matched_p = {pi for pi, _ in pairs}
    matched_g = {gi for _, gi in pairs}
    gold_of = dict(pairs)
    if not pred:
        log.warning("no predictions: precision defined as 0.0")
    precision = len(pairs) / len(pred) if pred else 0.0
    recall = len(pairs) / len(gold) if gold else 0.0

    pattern_total: dict[str, int] = {}
    pattern_correct: dict[str, int] = {}
    for pi, p in enumerate(pred):
        pid = getattr(p, "pattern_id", None)
        if pid is None:
            continue
        pattern_total[pid] = pattern_total.get(pid, 0) + 1
        if pi in matched_p:
            pattern_correct[pid] = pattern_correct.get(pid, 0) + 1
    per_pattern = {pid: pattern_correct.get(pid, 0) / total
                   for pid, total in pattern_total.items()}

    bucket_pred: dict[int, int] = {}
    bucket_gold: dict[int, int] = {}
    bucket_matched: dict[int, int] = {}
    for gi, g in enumerate(gold):
        b = _longer_side(g.cause, g.effect)
        bucket_gold[b] = bucket_gold.get(b, 0) + 1
        if gi in matched_g:
            bucket_matched[b] = bucket_matched.get(b, 0) + 1
    for pi, p in enumerate(pred):
        g = gold[gold_of[pi]] if pi in matched_p else p
        b = _longer_side(g.cause, g.effect)
        bucket_pred[b] = bucket_pred.get(b, 0) + 1
    per_length = {}
    for b in set(bucket_gold) | set(bucket_pred):
        bp = bucket_matched.get(b, 0) / bucket_pred[b] if bucket_pred.get(b) else 0.0
        br = bucket_matched.get(b, 0) / bucket_gold[b] if bucket_gold.get(b) else 0.0
        per_length[b] = _f1(bp, br)

    return EvalReport(min_sim=min_sim, n_pred=len(pred), n_gold=len(gold),
                      n_matched=len(pairs), precision=precision, recall=recall,
                      f1=_f1(precision, recall), per_pattern=per_pattern,
                      per_length=per_length)
