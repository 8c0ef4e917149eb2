"""Dependency patterns: edge sets with cause/effect placeholders.

A pattern is what remains of a shortest dependency path once the two seed
term heads are replaced by the placeholders X (cause) and Y (effect).  The
remaining lexical endpoints anchor the pattern and later drive boundary
cleaning of extracted phrases.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from importlib import resources

from .deptree import DepEdge, DepTree, shortest_path

LEXICAL = "LEXICAL"
X = "X"
Y = "Y"
_KINDS = (LEXICAL, X, Y)


class PatternError(ValueError):
    """Invalid pattern data, on construction or on library load."""


@dataclass(frozen=True)
class PatternEndpoint:
    kind: str
    lemma: str | None = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise PatternError("endpoint kind must be one of %s, got %r" % (_KINDS, self.kind))
        if self.kind == LEXICAL and not self.lemma:
            raise PatternError("lexical endpoint needs a lemma")
        if self.kind != LEXICAL and self.lemma is not None:
            raise PatternError("%s endpoint must not carry a lemma" % self.kind)


def lexical(lemma: str) -> PatternEndpoint:
    return PatternEndpoint(LEXICAL, lemma)


@dataclass(frozen=True)
class PatternEdge:
    parent: PatternEndpoint
    parent_pos: str
    deprel: str
    child: PatternEndpoint

    def __post_init__(self):
        if not self.parent_pos or not self.deprel:
            raise PatternError("pattern edge needs parent_pos and deprel")
        if self.parent.kind != LEXICAL and self.child.kind != LEXICAL:
            raise PatternError("at most one endpoint of an edge may be a placeholder")
        # POS comparison is case-insensitive everywhere; store the normal form.
        object.__setattr__(self, "parent_pos", self.parent_pos.lower())


@dataclass(frozen=True)
class DependencyPattern:
    id: str
    template: str
    edges: frozenset[PatternEdge]
    lexemes: frozenset[str] = field(init=False, compare=False)

    def __post_init__(self):
        if not self.id:
            raise PatternError("pattern needs an id")
        if not self.edges:
            raise PatternError("pattern %r has no edges" % self.id)
        counts = {X: 0, Y: 0}
        lexemes = set()
        for edge in self.edges:
            for ep in (edge.parent, edge.child):
                if ep.kind == LEXICAL:
                    lexemes.add(ep.lemma)
                else:
                    counts[ep.kind] += 1
        if counts[X] != 1 or counts[Y] != 1:
            raise PatternError(
                "pattern %r must have exactly one X and one Y endpoint, got %d/%d"
                % (self.id, counts[X], counts[Y]))
        if not lexemes:
            raise PatternError("pattern %r has no lexical anchor" % self.id)
        object.__setattr__(self, "lexemes", frozenset(lexemes))


@dataclass(frozen=True)
class PatternLibrary:
    patterns: tuple[DependencyPattern, ...]
    version: str
    _by_id: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        by_id = {}
        for p in self.patterns:
            if p.id in by_id:
                raise PatternError("duplicate pattern id %r" % p.id)
            by_id[p.id] = p
        object.__setattr__(self, "_by_id", by_id)

    def __len__(self):
        return len(self.patterns)

    def __iter__(self):
        return iter(self.patterns)

    def get(self, pattern_id: str) -> DependencyPattern:
        try:
            return self._by_id[pattern_id]
        except KeyError:
            raise PatternError("no pattern with id %r" % pattern_id) from None


def generalize(path: list[DepEdge], u_lemma: str, v_lemma: str, template: str,
               pattern_id: str = "adhoc") -> DependencyPattern:
    """Turn a shortest path into a pattern: u_lemma becomes X, v_lemma becomes Y.

    Every endpoint equal to the cause lemma u_lemma is replaced by X, every
    endpoint equal to the effect lemma v_lemma by Y; everything else stays
    lexical.  Both lemmas must occur somewhere on the path.
    """
    if not path:
        raise PatternError("cannot generalize an empty path")
    if u_lemma == v_lemma:
        raise PatternError("cause and effect lemmas are both %r" % u_lemma)
    seen_u = seen_v = False

    def endpoint(lemma: str) -> PatternEndpoint:
        nonlocal seen_u, seen_v
        if lemma == u_lemma:
            seen_u = True
            return PatternEndpoint(X)
        if lemma == v_lemma:
            seen_v = True
            return PatternEndpoint(Y)
        return lexical(lemma)

    edges = [PatternEdge(endpoint(e.parent_lemma), e.parent_pos, e.deprel,
                         endpoint(e.child_lemma)) for e in path]
    if not seen_u:
        raise PatternError("cause lemma %r not on the path" % u_lemma)
    if not seen_v:
        raise PatternError("effect lemma %r not on the path" % v_lemma)
    return DependencyPattern(id=pattern_id, template=template, edges=frozenset(edges))


@dataclass(frozen=True)
class CompileInstance:
    sentence_id: str
    status: str            # "ok" | "duplicate" | "skipped"
    pattern_id: str | None
    detail: str


@dataclass(frozen=True)
class CompileReport:
    instances: tuple[CompileInstance, ...]

    @property
    def skipped(self) -> tuple[CompileInstance, ...]:
        return tuple(i for i in self.instances if i.status == "skipped")


_SENT_ID = re.compile(r"^t(\d+)_p(\d+)$")


def _find_head(tree: DepTree, phrase: str) -> int | None:
    """Id of the syntactic head of the first token span matching phrase."""
    words = [w.lower() for w in phrase.split()]
    forms = [t.form.lower() for t in tree.tokens]
    for start in range(len(forms) - len(words) + 1):
        if forms[start:start + len(words)] == words:
            ids = {t.id for t in tree.tokens[start:start + len(words)]}
            heads = [tid for tid in ids if tree.token(tid).head not in ids]
            if len(heads) == 1:
                return heads[0]
    return None


def compile_with_report(templates: list[str], seed_pairs: list[tuple[str, str]],
                        parsed_dummies: list[DepTree], *,
                        version: str = "starter-1") -> tuple[PatternLibrary, CompileReport]:
    """Compile a pattern library from parsed dummy sentences.

    Each dummy's sentence_id encodes which template and seed pair produced it
    (``t<i>_p<j>``, both zero-based).  Instances whose seed terms cannot be
    located are skipped and reported, not fatal.  Structurally identical
    patterns are deduplicated; the first occurrence names the pattern.
    """
    by_edges: dict[frozenset, DependencyPattern] = {}
    ordered: list[DependencyPattern] = []
    instances: list[CompileInstance] = []

    def skip(sid: str, why: str):
        instances.append(CompileInstance(sid, "skipped", None, why))

    for tree in parsed_dummies:
        sid = tree.sentence_id
        m = _SENT_ID.match(sid)
        if not m:
            skip(sid, "sentence id does not encode template/pair indices")
            continue
        ti, pi = int(m.group(1)), int(m.group(2))
        if ti >= len(templates) or pi >= len(seed_pairs):
            skip(sid, "template or pair index out of range")
            continue
        cause, effect = seed_pairs[pi]
        u = _find_head(tree, cause)
        v = _find_head(tree, effect)
        if u is None or v is None:
            skip(sid, "seed term %r not found" % (cause if u is None else effect))
            continue
        try:
            proto = generalize(shortest_path(tree, u, v),
                               tree.token(u).lemma, tree.token(v).lemma, templates[ti])
        except PatternError as e:
            skip(sid, str(e))
            continue
        known = by_edges.get(proto.edges)
        if known is not None:
            instances.append(CompileInstance(sid, "duplicate", known.id, "same edge set as %s" % known.id))
            continue
        pattern = DependencyPattern(id="p%02d" % (len(ordered) + 1),
                                    template=templates[ti], edges=proto.edges)
        by_edges[pattern.edges] = pattern
        ordered.append(pattern)
        instances.append(CompileInstance(sid, "ok", pattern.id, "new pattern"))
    library = PatternLibrary(patterns=tuple(ordered), version=version)
    return library, CompileReport(instances=tuple(instances))


def compile_from_templates(templates: list[str], seed_pairs: list[tuple[str, str]],
                           parsed_dummies: list[DepTree], *,
                           version: str = "starter-1") -> PatternLibrary:
    return compile_with_report(templates, seed_pairs, parsed_dummies, version=version)[0]


def _endpoint_to_json(ep: PatternEndpoint) -> dict:
    if ep.kind == LEXICAL:
        return {"kind": LEXICAL, "lemma": ep.lemma}
    return {"kind": ep.kind}


def _endpoint_from_json(obj, where: str) -> PatternEndpoint:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise PatternError("%s: endpoint must be an object with a kind" % where)
    try:
        return PatternEndpoint(obj["kind"], obj.get("lemma"))
    except PatternError as e:
        raise PatternError("%s: %s" % (where, e)) from None


def _edge_sort_key(edge: PatternEdge):
    return (edge.deprel, edge.parent_pos, edge.parent.kind, edge.parent.lemma or "",
            edge.child.kind, edge.child.lemma or "")


def save_library(library: PatternLibrary, path: str) -> None:
    doc = {"version": library.version, "patterns": []}
    for p in library.patterns:
        doc["patterns"].append({
            "id": p.id,
            "template": p.template,
            "edges": [{
                "parent": _endpoint_to_json(e.parent),
                "parent_pos": e.parent_pos,
                "deprel": e.deprel,
                "child": _endpoint_to_json(e.child),
            } for e in sorted(p.edges, key=_edge_sort_key)],
        })
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2, ensure_ascii=False)
        fh.write("\n")


def default_patterns_path() -> str:
    """Filesystem path of the starter library shipped inside the package."""
    return str(resources.files("causalspan").joinpath("data/patterns.json"))


def load_library(path: str | None = None) -> PatternLibrary:
    """Load and re-validate a pattern library; errors name the pattern id.

    Without a path the packaged starter library is loaded.
    """
    if path is None:
        path = default_patterns_path()
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as e:
            raise PatternError("%s: not valid JSON (%s)" % (path, e)) from None
    if not isinstance(doc, dict) or not isinstance(doc.get("patterns"), list):
        raise PatternError("%s: expected an object with a patterns list" % path)
    patterns = []
    for i, obj in enumerate(doc["patterns"]):
        pid = obj.get("id") if isinstance(obj, dict) else None
        where = "pattern %r" % (pid if pid else "#%d" % i)
        if not isinstance(obj, dict) or not pid or not isinstance(obj.get("edges"), list):
            raise PatternError("%s: needs id and an edges list" % where)
        edges = []
        for e in obj["edges"]:
            if not isinstance(e, dict):
                raise PatternError("%s: edge must be an object" % where)
            parent = _endpoint_from_json(e.get("parent"), where)
            child = _endpoint_from_json(e.get("child"), where)
            try:
                edges.append(PatternEdge(parent=parent, parent_pos=e.get("parent_pos") or "",
                                         deprel=e.get("deprel") or "", child=child))
            except PatternError as err:
                raise PatternError("%s: %s" % (where, err)) from None
        try:
            patterns.append(DependencyPattern(
                id=pid, template=obj.get("template", ""), edges=frozenset(edges)))
        except PatternError as err:
            raise PatternError("%s: %s" % (where, err)) from None
    return PatternLibrary(patterns=tuple(patterns), version=str(doc.get("version", "")))
