"""Command line front end.

Subcommands: compile (templates + parsed dummies -> pattern library),
extract (CoNLL-U -> extraction JSONL), eval (extractions vs gold -> metrics),
inspect (per-sentence matching trace).  Diagnostics go to stderr, data to
files or stdout, and outputs are byte-identical across reruns on the same
inputs.  Flags fall back to CAUSALSPAN_* environment variables, then to
built-in defaults.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .deptree import ConlluError, parse_conllu, candidate_nodes, shortest_path
from .evaluation import GoldTriplet, PredTriplet, report
from .extender import extract_causal_phrases, load_stopwords
from .matcher import match_ratio
from .patterns import (PatternError, compile_with_report, default_patterns_path,
                       load_library, save_library)

ENV_PREFIX = "CAUSALSPAN_"
DEFAULT_MIN_THRESHOLD = 1.0
DEFAULT_MIN_SIM = 100.0


class UsageError(ValueError):
    """Bad flag or config value; maps to exit status 2."""


@dataclass(frozen=True)
class RunConfig:
    min_threshold: float = DEFAULT_MIN_THRESHOLD
    min_sim: float = DEFAULT_MIN_SIM
    patterns_path: str | None = None
    stopwords_path: str | None = None
    jobs: int = 4

    def __post_init__(self):
        if not 0.5 <= self.min_threshold <= 1.0:
            raise UsageError(
                "--min-threshold must be within [0.5, 1.0], got %s" % self.min_threshold)
        if not 0.0 < self.min_sim <= 100.0:
            raise UsageError("--min-sim must be within (0, 100], got %s" % self.min_sim)
        if self.jobs < 1:
            raise UsageError("--jobs must be >= 1")


def _env(name: str) -> str | None:
    return os.environ.get(ENV_PREFIX + name)


def _pick_float(flag_value, env_name: str, fallback: float) -> float:
    if flag_value is not None:
        return flag_value
    raw = _env(env_name)
    if raw is None:
        return fallback
    try:
        return float(raw)
    except ValueError:
        raise UsageError("%s%s is not a number: %r" % (ENV_PREFIX, env_name, raw)) from None


def _pick_path(flag_value, env_name: str) -> str | None:
    return flag_value if flag_value is not None else _env(env_name)


def _read_text(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def load_templates(path: str) -> list[str]:
    out = []
    for line in _read_text(path).splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


def load_seeds(path: str) -> list[tuple[str, str]]:
    out = []
    for lineno, line in enumerate(_read_text(path).splitlines(), start=1):
        if not line.strip():
            continue
        try:
            row = json.loads(line)
            out.append((row["cause"], row["effect"]))
        except (json.JSONDecodeError, KeyError, TypeError):
            raise UsageError("%s line %d: expected {\"cause\": ..., \"effect\": ...}"
                             % (path, lineno)) from None
    return out


def _write_out(text: str, out_path: str | None):
    if out_path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_compile(templates_path: str, seeds_path: str, dummies_path: str,
                out_path: str, version: str = "starter-1") -> int:
    templates = load_templates(templates_path)
    seeds = load_seeds(seeds_path)
    dummies = parse_conllu(_read_text(dummies_path))
    library, rep = compile_with_report(templates, seeds, dummies, version=version)
    save_library(library, out_path)

    per_template: dict[str, list] = {t: [] for t in templates}
    for inst in rep.instances:
        if inst.status != "skipped" and inst.sentence_id.startswith("t"):
            ti = int(inst.sentence_id[1:].split("_")[0])
            per_template[templates[ti]].append(inst)
    err = sys.stderr
    print("compiled %d patterns from %d dummy parses (%d duplicates collapsed, %d skipped)"
          % (len(library), len(dummies),
             sum(1 for i in rep.instances if i.status == "duplicate"), len(rep.skipped)),
          file=err)
    for template in templates:
        insts = per_template.get(template, [])
        pids = sorted({i.pattern_id for i in insts})
        print("  %-40s %d instances -> %s" % (template, len(insts), ", ".join(pids) or "-"),
              file=err)
    for inst in rep.skipped:
        print("  skipped %s: %s" % (inst.sentence_id, inst.detail), file=err)
    return 0


def _extraction_rows(trees, library, config: RunConfig) -> list[str]:
    stopwords = load_stopwords(config.stopwords_path)

    def one(tree):
        return extract_causal_phrases(tree, library, config.min_threshold, stopwords)

    rows = []
    with ThreadPoolExecutor(max_workers=min(config.jobs, max(len(trees), 1))) as pool:
        for extractions in pool.map(one, trees):
            for ex in extractions:
                rows.append(json.dumps({
                    "sentence_id": ex.sentence_id, "cause": ex.cause, "effect": ex.effect,
                    "pattern_id": ex.pattern_id, "ratio": ex.ratio}, ensure_ascii=False))
    return rows


def cmd_extract(input_path: str, config: RunConfig, out_path: str | None = None) -> int:
    trees = parse_conllu(_read_text(input_path))
    library = load_library(config.patterns_path or default_patterns_path())
    rows = _extraction_rows(trees, library, config)
    _write_out("".join(r + "\n" for r in rows), out_path)
    with_hits = len({json.loads(r)["sentence_id"] for r in rows})
    print("%d sentences read, %d with extractions, %d pairs total"
          % (len(trees), with_hits, len(rows)), file=sys.stderr)
    return 0


def _load_jsonl(path: str, required: tuple, factory):
    out = []
    for lineno, line in enumerate(_read_text(path).splitlines(), start=1):
        if not line.strip():
            continue
        try:
            row = json.loads(line)
            out.append(factory(row))
        except (json.JSONDecodeError, KeyError, TypeError):
            raise UsageError("%s line %d: expected JSONL with fields %s"
                             % (path, lineno, ", ".join(required))) from None
    return out


def read_gold(path: str) -> list[GoldTriplet]:
    return _load_jsonl(path, ("sentence_id", "cause", "effect"),
                       lambda r: GoldTriplet(r["sentence_id"], r["cause"], r["effect"]))


def read_extractions(path: str) -> list[PredTriplet]:
    return _load_jsonl(path, ("sentence_id", "cause", "effect"),
                       lambda r: PredTriplet(r["sentence_id"], r["cause"], r["effect"],
                                             r.get("pattern_id")))


def cmd_eval(pred_path: str, gold_path: str, min_sim: float = DEFAULT_MIN_SIM,
             out_path: str | None = None) -> int:
    if not 0.0 < min_sim <= 100.0:
        raise UsageError("--min-sim must be within (0, 100], got %s" % min_sim)
    rep = report(read_extractions(pred_path), read_gold(gold_path), min_sim)
    sys.stdout.write(rep.format_table())
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            json.dump(rep.to_json_dict(), fh, indent=2)
            fh.write("\n")
    return 0


def cmd_inspect(sentence_id: str, input_path: str, patterns_path: str | None = None,
                min_threshold: float = DEFAULT_MIN_THRESHOLD) -> int:
    trees = [t for t in parse_conllu(_read_text(input_path)) if t.sentence_id == sentence_id]
    if not trees:
        print("no sentence with id %r in %s" % (sentence_id, input_path), file=sys.stderr)
        return 1
    tree = trees[0]
    library = load_library(patterns_path or default_patterns_path())
    out = sys.stdout
    print("sentence %s: %s" % (tree.sentence_id, tree.text), file=out)
    print("edges:", file=out)
    for t in tree.tokens:
        head = "ROOT" if t.head == 0 else "%d:%s" % (t.head, tree.token(t.head).form)
        mark = " [NP]" if t.is_np_candidate else ""
        print("  %2d %-18s %-14s %-6s <-%s- %s%s"
              % (t.id, t.form, t.lemma, t.upos, t.deprel, head, mark), file=out)
    nodes = candidate_nodes(tree)
    if not nodes:
        print("no candidates", file=out)
        return 0
    print("candidates: %s" % ", ".join("%d (%s)" % (i, tree.token(i).form) for i in nodes),
          file=out)
    for u in nodes:
        for v in nodes:
            if u == v:
                continue
            path = shortest_path(tree, u, v)
            ratios = [(p.id, match_ratio(p, path, tree.token(u).lemma, tree.token(v).lemma))
                      for p in library]
            hits = ["%s=%.3f" % (pid, r) for pid, r in ratios if r > 0.0]
            flag = " *" if any(r >= min_threshold for _, r in ratios) else ""
            print("pair (%d %s -> %d %s): %d path edges; %s%s"
                  % (u, tree.token(u).form, v, tree.token(v).form, len(path),
                     " ".join(hits) or "no partial matches", flag), file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="causalspan",
        description="Extract cause-effect phrase pairs from dependency-parsed text.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compile", help="compile a pattern library from parsed dummies")
    p.add_argument("--templates", required=True)
    p.add_argument("--seeds", required=True)
    p.add_argument("--dummies", required=True, help="CoNLL-U parses of the instantiated templates")
    p.add_argument("--out", required=True)
    p.add_argument("--library-version", default="starter-1")

    p = sub.add_parser("extract", help="extract cause-effect pairs from CoNLL-U input")
    p.add_argument("input", help="CoNLL-U file")
    p.add_argument("--patterns", default=None)
    p.add_argument("--min-threshold", type=float, default=None)
    p.add_argument("--stopwords", default=None)
    p.add_argument("--jobs", type=int, default=4)
    p.add_argument("--out", default=None, help="extraction JSONL (default stdout)")

    p = sub.add_parser("eval", help="score extractions against gold triplets")
    p.add_argument("--pred", required=True, help="extraction JSONL")
    p.add_argument("--gold", required=True, help="gold JSONL")
    p.add_argument("--min-sim", type=float, default=None)
    p.add_argument("--out", default=None, help="JSON report path")

    p = sub.add_parser("inspect", help="trace matching for one sentence")
    p.add_argument("input", help="CoNLL-U file")
    p.add_argument("--sentence-id", required=True)
    p.add_argument("--patterns", default=None)
    p.add_argument("--min-threshold", type=float, default=None)
    return parser


def _dispatch(args) -> int:
    if args.command == "compile":
        return cmd_compile(args.templates, args.seeds, args.dummies, args.out,
                           version=args.library_version)
    if args.command == "extract":
        config = RunConfig(
            min_threshold=_pick_float(args.min_threshold, "MIN_THRESHOLD", DEFAULT_MIN_THRESHOLD),
            patterns_path=_pick_path(args.patterns, "PATTERNS"),
            stopwords_path=_pick_path(args.stopwords, "STOPWORDS"),
            jobs=args.jobs)
        return cmd_extract(args.input, config, args.out)
    if args.command == "eval":
        return cmd_eval(args.pred, args.gold,
                        _pick_float(args.min_sim, "MIN_SIM", DEFAULT_MIN_SIM), args.out)
    if args.command == "inspect":
        threshold = _pick_float(args.min_threshold, "MIN_THRESHOLD", DEFAULT_MIN_THRESHOLD)
        if not 0.5 <= threshold <= 1.0:
            raise UsageError("--min-threshold must be within [0.5, 1.0], got %s" % threshold)
        return cmd_inspect(args.sentence_id, args.input, _pick_path(args.patterns, "PATTERNS"),
                           threshold)
    raise UsageError("unknown command %r" % args.command)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except UsageError as e:
        print("usage error: %s" % e, file=sys.stderr)
        return 2
    except (ConlluError, PatternError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 1
    except OSError as e:
        print("error: %s" % e, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
