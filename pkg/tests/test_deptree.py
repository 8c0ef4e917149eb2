import io
import random

import pytest

from causalspan.deptree import (
    ConlluError,
    DepEdge,
    DepTree,
    Token,
    ancestors,
    candidate_nodes,
    descendants,
    parse_conllu,
    serialize_conllu,
    shortest_path,
)

GOOD = """\
# sent_id = s1
# text = Fire causes damage
1\tFire\tfire\tNOUN\t_\t_\t2\tnsubj\t_\tNPHead=Yes
2\tcauses\tcause\tVERB\t_\t_\t0\tROOT\t_\t_
3\tdamage\tdamage\tNOUN\t_\t_\t2\tdobj\t_\tNPHead=Yes
"""


def chain(n):
    # 1 <- 2 <- ... <- n, token i hangs off i-1
    toks = [Token(id=1, form="w1", lemma="w1", upos="NOUN", head=0, deprel="ROOT")]
    for i in range(2, n + 1):
        toks.append(Token(id=i, form="w%d" % i, lemma="w%d" % i, upos="NOUN",
                          head=i - 1, deprel="dep"))
    return DepTree(sentence_id="chain", text="chain", tokens=tuple(toks))


def test_parse_basic():
    trees = parse_conllu(GOOD)
    assert len(trees) == 1
    t = trees[0]
    assert t.sentence_id == "s1"
    assert t.text == "Fire causes damage"
    assert [tok.lemma for tok in t.tokens] == ["fire", "cause", "damage"]
    assert t.token(2).head == 0
    assert t.children(2) == (1, 3)
    assert t.token(1).is_np_candidate and not t.token(2).is_np_candidate


def test_parse_accepts_file_objects():
    assert parse_conllu(io.StringIO(GOOD))[0].sentence_id == "s1"


def test_parse_defaults_sent_id_and_text():
    bare = GOOD.splitlines()[2:]
    trees = parse_conllu("\n".join(bare) + "\n")
    assert trees[0].sentence_id == "s1"
    assert trees[0].text == "Fire causes damage"


def test_parse_multiple_sentences_and_blank_lines():
    trees = parse_conllu(GOOD + "\n\n" + GOOD.replace("s1", "s2") + "\n")
    assert [t.sentence_id for t in trees] == ["s1", "s2"]


def test_parse_concatenated_without_blank_line():
    # cat a.conllu b.conllu with no separating blank line
    trees = parse_conllu(GOOD + GOOD.replace("s1", "s2"))
    assert [t.sentence_id for t in trees] == ["s1", "s2"]


def test_parse_misc_multi_field():
    text = GOOD.replace("NPHead=Yes", "SpaceAfter=No|NPHead=Yes", 1)
    assert parse_conllu(text)[0].token(1).is_np_candidate


def test_parse_error_names_sentence_and_line():
    bad = GOOD.replace("2\tcauses\tcause\tVERB\t_\t_\t0\tROOT\t_\t_",
                       "2\tcauses\tcause\tVERB\t_\t0\tROOT\t_\t_")
    with pytest.raises(ConlluError, match=r"sentence 's1', line 4: expected 10 columns"):
        parse_conllu(bad)


def test_parse_error_non_integer_head():
    bad = GOOD.replace("\t2\tnsubj", "\tx\tnsubj")
    with pytest.raises(ConlluError, match=r"line 3: non-integer"):
        parse_conllu(bad)


def test_parse_rejects_multiword_ranges():
    bad = GOOD + "3-4\tfoo\tfoo\tX\t_\t_\t_\t_\t_\t_\n"
    with pytest.raises(ConlluError, match="non-integer"):
        parse_conllu(bad)


def test_parse_rejects_gap_in_ids():
    bad = GOOD.replace("3\tdamage", "4\tdamage")
    with pytest.raises(ConlluError, match="not contiguous"):
        parse_conllu(bad)


def test_parse_rejects_two_roots():
    bad = GOOD.replace("2\tdobj", "0\tROOT")
    with pytest.raises(ConlluError, match="exactly one root"):
        parse_conllu(bad)


def test_parse_rejects_cycle():
    text = """\
1\ta\ta\tNOUN\t_\t_\t0\tROOT\t_\t_
2\tb\tb\tNOUN\t_\t_\t3\tdep\t_\t_
3\tc\tc\tNOUN\t_\t_\t2\tdep\t_\t_
"""
    with pytest.raises(ConlluError, match="cycle"):
        parse_conllu(text)


def test_parse_rejects_head_out_of_range():
    bad = GOOD.replace("\t2\tdobj", "\t9\tdobj")
    with pytest.raises(ConlluError, match="out of range"):
        parse_conllu(bad)


def test_token_validation():
    with pytest.raises(ValueError):
        Token(id=0, form="x", lemma="x", upos="NOUN", head=1, deprel="dep")
    with pytest.raises(ValueError):
        Token(id=2, form="x", lemma="x", upos="NOUN", head=2, deprel="dep")
    with pytest.raises(ValueError):
        Token(id=1, form="", lemma="x", upos="NOUN", head=0, deprel="ROOT")


def test_roundtrip(fig1, casestudy):
    text = serialize_conllu([fig1, casestudy])
    again = parse_conllu(text)
    assert again == [fig1, casestudy]
    assert serialize_conllu(again) == text


def test_ancestors_and_descendants(fig1):
    assert ancestors(fig1, 17) == [16, 15, 13, 6, 5]
    assert ancestors(fig1, 5) == []
    assert descendants(fig1, 15) == [14, 16, 17]
    assert descendants(fig1, 6) == [7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17]
    assert descendants(fig1, 1) == []


def test_shortest_path_same_node(fig1):
    assert shortest_path(fig1, 11, 11) == []


def test_shortest_path_fig1_conjunct(fig1):
    # types -> cases climbs through both prepositions
    assert shortest_path(fig1, 15, 3) == [
        DepEdge("to", "ADP", "pobj", "type"),
        DepEdge("to", "ADP", "conj", "to"),
        DepEdge("attribute", "VERB", "prep", "to"),
        DepEdge("attribute", "VERB", "nsubjpass", "case"),
    ]


def test_shortest_path_fig1_direct(fig1):
    assert shortest_path(fig1, 11, 3) == [
        DepEdge("to", "ADP", "pobj", "infection"),
        DepEdge("attribute", "VERB", "prep", "to"),
        DepEdge("attribute", "VERB", "nsubjpass", "case"),
    ]


def test_shortest_path_reversal(fig1, casestudy):
    for tree in (fig1, casestudy):
        ids = [t.id for t in tree.tokens]
        for u in ids:
            for v in ids:
                fwd = shortest_path(tree, u, v)
                assert fwd == list(reversed(shortest_path(tree, v, u)))
                assert len(fwd) == (0 if u == v else len(fwd))


def test_shortest_path_unknown_token(fig1):
    with pytest.raises(ValueError, match="no token id 99"):
        shortest_path(fig1, 1, 99)


def bfs_path_len(tree, u, v):
    # independent oracle: unweighted BFS over the undirected edge set
    adj = {t.id: set() for t in tree.tokens}
    for t in tree.tokens:
        if t.head:
            adj[t.id].add(t.head)
            adj[t.head].add(t.id)
    dist = {u: 0}
    frontier = [u]
    while frontier:
        nxt = []
        for node in frontier:
            for nb in adj[node]:
                if nb not in dist:
                    dist[nb] = dist[node] + 1
                    nxt.append(nb)
        frontier = nxt
    return dist[v]


def random_tree(rng, n):
    toks = [Token(id=1, form="w1", lemma="w1", upos="NOUN", head=0, deprel="ROOT")]
    for i in range(2, n + 1):
        toks.append(Token(id=i, form="w%d" % i, lemma="w%d" % i, upos="NOUN",
                          head=rng.randint(1, i - 1), deprel="dep"))
    return DepTree(sentence_id="r", text="r", tokens=tuple(toks))


def test_shortest_path_length_matches_bfs_oracle():
    rng = random.Random(71)
    for _ in range(60):
        tree = random_tree(rng, rng.randint(2, 12))
        for u in range(1, len(tree) + 1):
            for v in range(1, len(tree) + 1):
                assert len(shortest_path(tree, u, v)) == bfs_path_len(tree, u, v)


def test_shortest_path_deep_chain():
    tree = chain(600)
    assert len(shortest_path(tree, 600, 1)) == 599


def test_candidate_nodes_flagged(fig1):
    assert candidate_nodes(fig1) == [3, 11, 15, 17]


def test_candidate_nodes_fallback():
    text = GOOD.replace("NPHead=Yes", "_")
    tree = parse_conllu(text)[0]
    assert candidate_nodes(tree) == [1, 3]
