"""Command line front end: instantiate templates, parse sentences.

Input for `parse` is JSONL ({"sentence_id", "text"}) or plain text with one
sentence per line; the format is sniffed from the first non-blank line
unless forced.  CoNLL-U goes to stdout or --out, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from .adapter import AdapterError, RawSentence, instantiate_templates, parse_to_conllu


def _read_text(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def load_templates(path: str) -> list[str]:
    return [line.strip() for line in _read_text(path).splitlines()
            if line.strip() and not line.lstrip().startswith("#")]


def load_seeds(path: str) -> list[tuple[str, str]]:
    out = []
    for lineno, line in enumerate(_read_text(path).splitlines(), start=1):
        if not line.strip():
            continue
        try:
            row = json.loads(line)
            out.append((row["cause"], row["effect"]))
        except (json.JSONDecodeError, KeyError, TypeError):
            raise AdapterError("%s line %d: expected {\"cause\": ..., \"effect\": ...}"
                               % (path, lineno)) from None
    return out


def read_sentences(path: str, fmt: str = "auto") -> list[RawSentence]:
    text = _read_text(path)
    if fmt == "auto":
        first = next((line for line in text.splitlines() if line.strip()), "")
        fmt = "jsonl" if first.lstrip().startswith("{") else "text"
    out = []
    if fmt == "jsonl":
        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                row = json.loads(line)
                out.append(RawSentence(row["sentence_id"], row["text"]))
            except (json.JSONDecodeError, KeyError, TypeError):
                raise AdapterError("%s line %d: expected {\"sentence_id\": ..., \"text\": ...}"
                                   % (path, lineno)) from None
    else:
        n = 0
        for line in text.splitlines():
            if line.strip():
                n += 1
                out.append(RawSentence("s%d" % n, line.strip()))
    return out


def _write_out(text: str, out_path: str | None):
    if out_path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conllu-adapter",
        description="Parse sentences to CoNLL-U with noun-chunk head marks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("instantiate", help="expand templates with seed pairs to JSONL")
    p.add_argument("--templates", required=True)
    p.add_argument("--seeds", required=True)
    p.add_argument("--out", default=None)

    p = sub.add_parser("parse", help="parse sentences to CoNLL-U")
    p.add_argument("input", help="JSONL or plain-text sentences")
    p.add_argument("--format", choices=("auto", "jsonl", "text"), default="auto")
    p.add_argument("--model", default=None, help="override the pinned parser model")
    p.add_argument("--out", default=None)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "instantiate":
            rows = instantiate_templates(load_templates(args.templates),
                                         load_seeds(args.seeds))
            _write_out("".join(json.dumps(
                {"sentence_id": r.sentence_id, "text": r.text}, ensure_ascii=False) + "\n"
                for r in rows), args.out)
            print("%d sentences" % len(rows), file=sys.stderr)
            return 0
        if args.command == "parse":
            sentences = read_sentences(args.input, args.format)
            _write_out(parse_to_conllu(sentences, model=args.model), args.out)
            print("%d sentences parsed" % len(sentences), file=sys.stderr)
            return 0
        raise AdapterError("unknown command %r" % args.command)
    except AdapterError as e:
        print("error: %s" % e, file=sys.stderr)
        return 1
    except OSError as e:
        print("error: %s" % e, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
