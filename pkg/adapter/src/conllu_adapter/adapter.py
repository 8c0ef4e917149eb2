"""Turn raw sentences into CoNLL-U through a pinned spaCy model.

The parser is an optional dependency: everything here degrades to a clear
error message when it is missing, and template instantiation works without
it.  Output is plain CoNLL-U text with noun-chunk root tokens marked
``NPHead=Yes`` in MISC; the downstream engine only ever sees these files,
never this package.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from importlib import resources

log = logging.getLogger(__name__)


class AdapterError(ValueError):
    """Bad template, bad input, or an unusable parser installation."""


@dataclass(frozen=True)
class RawSentence:
    sentence_id: str
    text: str

    def __post_init__(self):
        if not self.sentence_id:
            raise AdapterError("sentence needs an id")
        if not self.text.strip():
            raise AdapterError("sentence %r has empty text" % self.sentence_id)


def pinned_model() -> tuple[str, str | None]:
    """Model name and version from the packaged lock file."""
    text = resources.files("conllu_adapter").joinpath("model.lock").read_text("utf-8")
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            name, _, version = line.partition("==")
            return name, version or None
    raise AdapterError("model.lock pins no model")


def load_parser(model: str | None = None):
    """Load the pinned spaCy pipeline; explain how to get it when absent."""
    name, version = pinned_model()
    if model is not None:
        name, version = model, None
    try:
        import spacy
    except ImportError:
        raise AdapterError(
            "spaCy is not installed; install the parser extra "
            "(pip install 'conllu-adapter[parser]') and the %s model" % name) from None
    try:
        nlp = spacy.load(name)
    except OSError:
        raise AdapterError(
            "model %r is not installed; python -m spacy download %s" % (name, name)) from None
    got = nlp.meta.get("version")
    if version and got != version:
        log.warning("model %s version %s differs from pinned %s; "
                    "trees may not be comparable", name, got, version)
    return nlp


_PLACEHOLDER = re.compile(r"\b[XY]\b")


def instantiate_templates(templates: list[str],
                          seed_pairs: list[tuple[str, str]]) -> list[RawSentence]:
    """Cross-product instantiation, X -> cause and Y -> effect.

    Sentence ids encode the zero-based template and pair indices as
    ``t<i>_p<j>``.  The sentence-initial character is uppercased.
    """
    for t in templates:
        found = [m.group() for m in _PLACEHOLDER.finditer(t)]
        if found.count("X") != 1 or found.count("Y") != 1:
            raise AdapterError("template %r must contain X and Y exactly once" % t)
    out = []
    for i, template in enumerate(templates):
        for j, (cause, effect) in enumerate(seed_pairs):
            text = _PLACEHOLDER.sub(lambda m: cause if m.group() == "X" else effect, template)
            text = text[0].upper() + text[1:]
            out.append(RawSentence(sentence_id="t%d_p%d" % (i, j), text=text))
    return out


def _doc_rows(doc) -> list[str]:
    np_roots = {chunk.root.i for chunk in doc.noun_chunks}
    sents = list(doc.sents)
    primary = sents[0].root
    extra_roots = {s.root.i for s in sents[1:]}
    rows = []
    for tok in doc:
        if tok.i == primary.i:
            head, deprel = 0, "ROOT"
        elif tok.i in extra_roots:
            head, deprel = primary.i + 1, "dep"
        else:
            head, deprel = tok.head.i + 1, tok.dep_ or "dep"
        misc = "NPHead=Yes" if tok.i in np_roots else "_"
        rows.append("\t".join([str(tok.i + 1), tok.text, tok.lemma_ or tok.text,
                               tok.pos_ or "X", "_", "_", str(head), deprel, "_", misc]))
    return rows


def parse_to_conllu(inputs: list[RawSentence], nlp=None, model: str | None = None) -> str:
    """Parse sentences and render them as CoNLL-U blocks.

    Each input yields one block whose ``# text`` comment is the input text
    unchanged.  When the parser splits an input into several sentences they
    are rejoined under the one id, secondary roots attached to the first.
    """
    if nlp is None and inputs:
        nlp = load_parser(model)
    blocks = []
    for rs in inputs:
        doc = nlp(rs.text)
        if len(list(doc.sents)) > 1:
            log.warning("parser split %r into %d sentences; rejoining under one tree",
                        rs.sentence_id, len(list(doc.sents)))
        lines = ["# sent_id = %s" % rs.sentence_id, "# text = %s" % rs.text]
        lines.extend(_doc_rows(doc))
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + ("\n" if blocks else "")
