"""Grow matched head tokens into phrases and clean the boundaries.

A candidate head usually stands for a larger noun phrase.  Extension pulls in
the head's subtree as far as it stays contiguous in the sentence, then walks
the ancestor chain nearest-first while each ancestor stays sentence-adjacent
to the span.  Cleaning then strips pattern lexemes and stopwords from the
span boundaries only; interior tokens are never touched, so phrases like
"deficiency in Vitamin D" survive intact.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from . import matcher
from .deptree import DepTree, Token, ancestors, descendants
from .patterns import PatternLibrary


@dataclass(frozen=True)
class Extraction:
    sentence_id: str
    cause: str
    effect: str
    pattern_id: str
    ratio: float
    cause_head: int
    effect_head: int

    def __post_init__(self):
        if not self.cause or not self.effect:
            raise ValueError("empty cause or effect phrase")
        if self.cause_head == self.effect_head:
            raise ValueError("cause and effect share head token %d" % self.cause_head)


def load_stopwords(path: str | None = None) -> frozenset[str]:
    """Stopword lemmas from a config file, one per line, # comments allowed.

    With no path, the packaged default list of English function words is used.
    """
    if path is None:
        text = resources.files("causalspan").joinpath("data/stopwords.txt").read_text("utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    words = set()
    for line in text.splitlines():
        word = line.strip()
        if word and not word.startswith("#"):
            words.add(word.lower())
    return frozenset(words)


def extend_phrase(tree: DepTree, head: int) -> list[Token]:
    """The contiguous token span a head stands for.

    Grows the maximal contiguous interval around the head inside its own
    subtree, merges ancestors nearest-first while each one is adjacent to the
    current span (the first gap ends the walk), then sweeps the subtree once
    more in case a merged ancestor bridged to further descendants.  The result
    always contains the head and is always a contiguous id interval.
    """
    tree.token(head)
    desc = set(descendants(tree, head))
    lo = hi = head

    def sweep(pool: set[int]):
        nonlocal lo, hi
        while lo - 1 in pool:
            lo -= 1
        while hi + 1 in pool:
            hi += 1

    sweep(desc)
    for anc in ancestors(tree, head):
        if anc == lo - 1:
            lo = anc
        elif anc == hi + 1:
            hi = anc
        else:
            break
    sweep(desc)
    return [tree.token(i) for i in range(lo, hi + 1)]


def clean(span: list[Token], pattern_lexemes: frozenset[str],
          stopwords: frozenset[str]) -> str:
    """Join a span into a phrase, stripping boundary noise.

    Tokens whose lemma is a pattern lexeme or a stopword are dropped from the
    leading and trailing ends, repeatedly; interior tokens stay.  Returns ""
    when nothing survives.
    """
    drop = {w.lower() for w in pattern_lexemes} | stopwords
    toks = list(span)
    while toks and toks[0].lemma.lower() in drop:
        toks.pop(0)
    while toks and toks[-1].lemma.lower() in drop:
        toks.pop()
    return " ".join(t.form for t in toks)


def extract_causal_phrases(tree: DepTree, library: PatternLibrary,
                           min_threshold: float = 1.0,
                           stopwords: frozenset[str] | None = None) -> list[Extraction]:
    """Full per-sentence pipeline: match, extend both heads, clean, dedupe.

    Extractions with an empty side after cleaning are dropped; duplicate
    (cause, effect) string pairs within the sentence are collapsed, first
    match wins.
    """
    if stopwords is None:
        stopwords = load_stopwords()
    out: list[Extraction] = []
    seen: set[tuple[str, str]] = set()
    for cm in matcher.find_candidates(tree, library, min_threshold):
        lexemes = library.get(cm.pattern_id).lexemes
        cause = clean(extend_phrase(tree, cm.cause_id), lexemes, stopwords)
        effect = clean(extend_phrase(tree, cm.effect_id), lexemes, stopwords)
        if not cause or not effect or (cause, effect) in seen:
            continue
        seen.add((cause, effect))
        out.append(Extraction(sentence_id=tree.sentence_id, cause=cause, effect=effect,
                              pattern_id=cm.pattern_id, ratio=cm.ratio,
                              cause_head=cm.cause_id, effect_head=cm.effect_id))
    return out
