"""Independent reference implementations the tests score the engine against.

Deliberately naive: exhaustive subset search for matching, textbook recursion
for edit distance.  Keep these free of imports from the modules they check,
apart from pure data types.
"""

import itertools

from causalspan.deptree import DepTree, Token, candidate_nodes, shortest_path
from causalspan.matcher import edge_matches


def brute_lev(s1, s2):
    if not s1:
        return len(s2)
    if not s2:
        return len(s1)
    return min(brute_lev(s1[1:], s2) + 1,
               brute_lev(s1, s2[1:]) + 1,
               brute_lev(s1[1:], s2[1:]) + (s1[0] != s2[0]))


def subset_match_exists(pedges, path, u_lemma, v_lemma, k):
    """Can some k of the pattern edges be injectively assigned to path edges?"""
    if k == 0:
        return True
    for combo in itertools.combinations(range(len(pedges)), k):
        free = set(range(len(path)))

        def assign(pos):
            if pos == len(combo):
                return True
            for j in list(free):
                if edge_matches(pedges[combo[pos]], path[j], u_lemma, v_lemma):
                    free.remove(j)
                    if assign(pos + 1):
                        return True
                    free.add(j)
            return False

        if assign(0):
            return True
    return False


def oracle_ratio(pattern, path, u_lemma, v_lemma):
    pedges = list(pattern.edges)
    for k in range(len(pedges), -1, -1):
        if subset_match_exists(pedges, path, u_lemma, v_lemma, k):
            return k / len(pedges)
    return 0.0


def oracle_find(tree, library, min_threshold):
    """Reference find_candidates: same contract, exhaustive scoring."""
    out = []
    nodes = candidate_nodes(tree)
    for u in nodes:
        for v in nodes:
            if u == v:
                continue
            path = shortest_path(tree, u, v)
            scored = sorted(
                ((oracle_ratio(p, path, tree.token(u).lemma, tree.token(v).lemma), p.id)
                 for p in library),
                key=lambda s: (-s[0], s[1]))
            if scored and scored[0][0] >= min_threshold:
                out.append((u, v, scored[0][1], scored[0][0]))
    return out


VOCAB = ["attribute", "cause", "lead", "to", "by", "case", "infection", "type",
         "damage", "fire", "stress", "fall", "parasite"]
POSES = ["NOUN", "VERB", "ADP", "PROPN"]
RELS = ["nsubj", "nsubjpass", "dobj", "pobj", "prep", "agent", "conj", "acl", "amod"]


def random_tree(rng, sid, max_tokens=10):
    """Random tree over lemmas that overlap the starter library's lexemes."""
    n = rng.randint(2, max_tokens)
    toks = [Token(id=1, form="w1", lemma=rng.choice(VOCAB), upos=rng.choice(POSES),
                  head=0, deprel="ROOT", is_np_candidate=rng.random() < 0.5)]
    for i in range(2, n + 1):
        toks.append(Token(id=i, form="w%d" % i, lemma=rng.choice(VOCAB),
                          upos=rng.choice(POSES), head=rng.randint(1, i - 1),
                          deprel=rng.choice(RELS), is_np_candidate=rng.random() < 0.5))
    return DepTree(sentence_id=sid, text=sid, tokens=tuple(toks))
