"""Dependency-tree data model and CoNLL-U ingestion.

Trees arrive as CoNLL-U: ten tab-separated columns per token, blank line
between sentences, ``# sent_id`` / ``# text`` comment lines carried along.
The MISC column may mark noun-chunk heads with ``NPHead=Yes``; those tokens
are the candidate endpoints for matching.  Tokens and trees are frozen so
they can be shared across worker threads without copying.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class ConlluError(ValueError):
    """Malformed CoNLL-U input or an invalid tree, with sentence/line context."""


@dataclass(frozen=True)
class Token:
    id: int
    form: str
    lemma: str
    upos: str
    head: int
    deprel: str
    is_np_candidate: bool = False

    def __post_init__(self):
        if self.id < 1:
            raise ValueError("token id must be >= 1, got %d" % self.id)
        if self.head < 0:
            raise ValueError("token %d: head must be >= 0, got %d" % (self.id, self.head))
        if self.head == self.id:
            raise ValueError("token %d: head points at itself" % self.id)
        for name in ("form", "lemma", "upos", "deprel"):
            if not getattr(self, name):
                raise ValueError("token %d: empty %s" % (self.id, name))


@dataclass(frozen=True)
class DepEdge:
    """One dependency edge: (parent lemma, parent POS, relation, child lemma).

    Child POS is deliberately not carried; matching compares exactly these
    four fields.
    """

    parent_lemma: str
    parent_pos: str
    deprel: str
    child_lemma: str

    def __post_init__(self):
        for name in ("parent_lemma", "parent_pos", "deprel", "child_lemma"):
            if not getattr(self, name):
                raise ValueError("DepEdge: empty %s" % name)


@dataclass(frozen=True)
class DepTree:
    sentence_id: str
    text: str
    tokens: tuple[Token, ...]
    _by_id: dict = field(init=False, repr=False, compare=False)
    _children: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.tokens:
            raise ValueError("tree has no tokens")
        for pos, tok in enumerate(self.tokens, start=1):
            if tok.id != pos:
                raise ValueError("token ids not contiguous: expected %d, got %d" % (pos, tok.id))
        n = len(self.tokens)
        roots = [t.id for t in self.tokens if t.head == 0]
        if len(roots) != 1:
            raise ValueError("expected exactly one root, found %d" % len(roots))
        by_id = {t.id: t for t in self.tokens}
        children: dict[int, list[int]] = {t.id: [] for t in self.tokens}
        for t in self.tokens:
            if t.head > n:
                raise ValueError("token %d: head %d out of range 1..%d" % (t.id, t.head, n))
            if t.head:
                children[t.head].append(t.id)
        # Single root + every node reaching it within n steps rules out cycles.
        for t in self.tokens:
            cur, steps = t.id, 0
            while cur != 0:
                cur = by_id[cur].head
                steps += 1
                if steps > n:
                    raise ValueError("cycle through token %d" % t.id)
        object.__setattr__(self, "_by_id", by_id)
        object.__setattr__(self, "_children", {k: tuple(v) for k, v in children.items()})

    def __len__(self):
        return len(self.tokens)

    def token(self, tid: int) -> Token:
        try:
            return self._by_id[tid]
        except KeyError:
            raise ValueError("sentence %r has no token id %d" % (self.sentence_id, tid)) from None

    @property
    def root(self) -> Token:
        return next(t for t in self.tokens if t.head == 0)

    def children(self, tid: int) -> tuple[int, ...]:
        self.token(tid)
        return self._children[tid]


def _parse_misc(misc: str) -> bool:
    if misc == "_":
        return False
    for part in misc.split("|"):
        if part == "NPHead=Yes":
            return True
    return False


def parse_conllu(stream) -> list[DepTree]:
    """Parse CoNLL-U text (a string or file-like object) into a list of trees.

    Multiword-token ranges and empty nodes are rejected: ids must be plain
    integers, contiguous from 1.  Errors name the offending sentence and line.
    """
    if hasattr(stream, "read"):
        text = stream.read()
    else:
        text = stream
    trees: list[DepTree] = []
    comments: dict[str, str] = {}
    rows: list[tuple[int, str]] = []
    ordinal = 0

    def flush(last_line: int):
        nonlocal ordinal, comments, rows
        if not rows:
            comments = {}
            return
        ordinal += 1
        sid = comments.get("sent_id", "s%d" % ordinal)
        tokens = []
        for lineno, line in rows:
            cols = line.split("\t")
            if len(cols) != 10:
                raise ConlluError(
                    "sentence %r, line %d: expected 10 columns, got %d" % (sid, lineno, len(cols)))
            try:
                tid = int(cols[0])
                head = int(cols[6])
            except ValueError:
                raise ConlluError(
                    "sentence %r, line %d: non-integer id or head (%r, %r)"
                    % (sid, lineno, cols[0], cols[6])) from None
            try:
                tokens.append(Token(
                    id=tid, form=cols[1], lemma=cols[2], upos=cols[3],
                    head=head, deprel=cols[7], is_np_candidate=_parse_misc(cols[9])))
            except ValueError as e:
                raise ConlluError("sentence %r, line %d: %s" % (sid, lineno, e)) from None
        sent_text = comments.get("text") or " ".join(t.form for t in tokens)
        try:
            trees.append(DepTree(sentence_id=sid, text=sent_text, tokens=tuple(tokens)))
        except ValueError as e:
            raise ConlluError("sentence %r (ending line %d): %s" % (sid, last_line, e)) from None
        comments = {}
        rows = []

    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\r")
        if not line.strip():
            flush(lineno)
        elif line.startswith("#"):
            # Comments precede a sentence's rows, so one arriving mid-block
            # starts a new sentence (files concatenated without blank lines).
            if rows:
                flush(rows[-1][0])
            body = line[1:].strip()
            if "=" in body:
                key, _, value = body.partition("=")
                comments[key.strip()] = value.strip()
        else:
            rows.append((lineno, line))
    flush(lineno)
    return trees


def serialize_conllu(trees: list[DepTree]) -> str:
    """Inverse of parse_conllu for the fields the engine uses."""
    blocks = []
    for tree in trees:
        lines = ["# sent_id = %s" % tree.sentence_id, "# text = %s" % tree.text]
        for t in tree.tokens:
            misc = "NPHead=Yes" if t.is_np_candidate else "_"
            lines.append("\t".join(
                [str(t.id), t.form, t.lemma, t.upos, "_", "_", str(t.head), t.deprel, "_", misc]))
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + ("\n" if blocks else "")


def ancestors(tree: DepTree, tid: int) -> list[int]:
    """Ids on the chain from tid's parent up to the root, nearest first."""
    out = []
    cur = tree.token(tid).head
    while cur != 0:
        out.append(cur)
        cur = tree.token(cur).head
    return out


def descendants(tree: DepTree, tid: int) -> list[int]:
    """All ids in the subtree under tid (tid excluded), in sentence order."""
    out = []
    stack = list(tree.children(tid))
    while stack:
        cur = stack.pop()
        out.append(cur)
        stack.extend(tree.children(cur))
    return sorted(out)


def shortest_path(tree: DepTree, u: int, v: int) -> list[DepEdge]:
    """Edges on the unique undirected path from u to v.

    Each edge keeps its stored parent->child orientation; the list is ordered
    along the walk from u toward v.  Empty when u == v.
    """
    tree.token(u)
    tree.token(v)
    if u == v:
        return []
    chain_u = [u] + ancestors(tree, u)
    depth_u = {tid: i for i, tid in enumerate(chain_u)}
    cur = v
    chain_v = [cur]
    while cur not in depth_u:
        cur = tree.token(cur).head
        chain_v.append(cur)
    lca = chain_v[-1]

    def edge_for(child_id: int) -> DepEdge:
        child = tree.token(child_id)
        parent = tree.token(child.head)
        return DepEdge(parent.lemma, parent.upos, child.deprel, child.lemma)

    edges = [edge_for(tid) for tid in chain_u[:depth_u[lca]]]
    down = [edge_for(tid) for tid in chain_v[:-1]]
    edges.extend(reversed(down))
    return edges


def candidate_nodes(tree: DepTree) -> list[int]:
    """Noun-chunk head ids in sentence order.

    Falls back to every NOUN/PROPN/PRON token when the input carries no
    NPHead marks at all, so plain CoNLL-U without MISC annotations still
    yields candidates.
    """
    flagged = [t.id for t in tree.tokens if t.is_np_candidate]
    if flagged:
        return flagged
    return [t.id for t in tree.tokens if t.upos.upper() in ("NOUN", "PROPN", "PRON")]
