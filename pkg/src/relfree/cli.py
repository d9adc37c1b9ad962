"""Command-line interface: presentation files, JSON reports, oracles.

File format (one directive per line, ``#`` starts a comment)::

    coeff Z | Z^r | F r
    tpart Z | Z^r | F r
    relator <tokens>

Exit codes: 0 success, 1 malformed input, 2 out-of-scope presentation,
3 counterexample found by ``verify``.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .backends import Backend, ABELIAN, FREE
from .words import ParseError, RelativeWord
from .classify import (OUT_OF_SCOPE, RelativePresentation, classify,
                       computable_model)
from .engines import ModelPair, bounded_no_relation_check
from .oracles import brute_complexity, brute_proper_power, \
    gcd_minors_invariants

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_SCOPE = 2
EXIT_COUNTEREXAMPLE = 3

_VERBOSE_KEYS = ("cyclically_reduced", "form1", "coefficient_erasure")

_GROUP_RE = re.compile(r"^(Z(\^(\d+))?|F\s+(\d+))$")


class FileFormatError(ValueError):
    pass


def parse_group_spec(spec):
    m = _GROUP_RE.match(spec.strip())
    if not m:
        raise FileFormatError("bad group spec %r (expected Z, Z^r, or F r)"
                              % spec)
    if m.group(4) is not None:
        return Backend(FREE, int(m.group(4)))
    rank = int(m.group(3)) if m.group(3) is not None else 1
    return Backend(ABELIAN, rank)


def load_presentation(path):
    fields = {}
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            key, rest = line.split(None, 1)
        except ValueError:
            raise FileFormatError("line %d: missing value" % lineno)
        if key not in ("coeff", "tpart", "relator"):
            raise FileFormatError("line %d: unknown directive %r"
                                  % (lineno, key))
        if key in fields:
            raise FileFormatError("line %d: duplicate %r directive"
                                  % (lineno, key))
        fields[key] = rest
    for key in ("coeff", "tpart", "relator"):
        if key not in fields:
            raise FileFormatError("missing %r directive" % key)
    G = parse_group_spec(fields["coeff"])
    T = parse_group_spec(fields["tpart"])
    w = RelativeWord.parse(fields["relator"], G, T)
    if w.is_identity:
        raise FileFormatError("relator reduces to the empty word")
    return RelativePresentation(G, T, w)


def classification_report(result, verbose=False):
    diagnostics = {k: v for k, v in result.diagnostics.items()
                   if verbose or k not in _VERBOSE_KEYS}
    report = {
        "verdict": result.verdict,
        "trace": [step.as_dict() for step in result.trace],
        "diagnostics": diagnostics,
        "witnesses": [w.as_dict() for w in result.witnesses],
    }
    if result.reason is not None:
        report["reason"] = result.reason
    return report


def render_json(report):
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def render_text(report):
    lines = ["verdict: %s" % report["verdict"]]
    if "reason" in report:
        lines.append("reason: %s" % report["reason"])
    lines.append("trace:")
    for step in report["trace"]:
        lines.append("  - %s: %s" % (step["rule"], step["citation"]))
        for key in sorted(step["evidence"]):
            lines.append("      %s = %s" % (key, step["evidence"][key]))
    if report["witnesses"]:
        lines.append("witnesses:")
        for wit in report["witnesses"]:
            extra = ""
            if "depth" in wit:
                extra += " depth=%d" % wit["depth"]
            if "d" in wit:
                extra += " d=%d" % wit["d"]
            lines.append("  - (%s, %s) [%s%s] via %s"
                         % (wit["u"], wit["v"], wit["status"], extra,
                            wit["provenance"]))
    if report["diagnostics"]:
        lines.append("diagnostics:")
        for key in sorted(report["diagnostics"]):
            lines.append("  %s = %s" % (key, report["diagnostics"][key]))
    return "\n".join(lines) + "\n"


def _analyze_file(path, as_json, verbose, out=None):
    out = out if out is not None else sys.stdout
    presentation = load_presentation(path)
    result = classify(presentation)
    report = classification_report(result, verbose=verbose)
    out.write(render_json(report) if as_json else render_text(report))
    return EXIT_SCOPE if result.verdict == OUT_OF_SCOPE else EXIT_OK


def cmd_analyze(args):
    target = Path(args.path)
    if target.is_dir():
        files = sorted(target.glob("*.pres"))
        if not files:
            print("no .pres files in %s" % target, file=sys.stderr)
            return EXIT_PARSE

        def run(path):
            presentation = load_presentation(path)
            result = classify(presentation)
            report = classification_report(result, verbose=args.trace_verbose)
            path.with_suffix(".report.json").write_text(render_json(report))
            return EXIT_SCOPE if result.verdict == OUT_OF_SCOPE else EXIT_OK

        with ThreadPoolExecutor() as pool:
            codes = list(pool.map(run, files))
        return max(codes)
    return _analyze_file(target, args.json, args.trace_verbose)


def cmd_verify(args):
    presentation = load_presentation(args.path)
    model_data = computable_model(presentation)
    if model_data is None:
        print("no computable model for this presentation", file=sys.stderr)
        return EXIT_SCOPE
    model, image, description = model_data
    u = RelativeWord.parse(args.u, presentation.G, presentation.T)
    v = RelativeWord.parse(args.v, presentation.G, presentation.T)
    pair = ModelPair(model, image(u), image(v))
    ok, counterexample = bounded_no_relation_check(pair, args.depth)
    report = {
        "model": description,
        "u": u.to_string(),
        "v": v.to_string(),
        "depth": args.depth,
        "result": "pass" if ok else "counterexample",
    }
    if counterexample is not None:
        report["counterexample"] = " ".join(counterexample)
    print(json.dumps(report, sort_keys=True, indent=2))
    return EXIT_OK if ok else EXIT_COUNTEREXAMPLE


def _parse_sign_sequence(text):
    seq = []
    for ch in text.strip():
        if ch == "+":
            seq.append(1)
        elif ch == "-":
            seq.append(-1)
        else:
            raise FileFormatError("bad sign character %r" % ch)
    if not seq:
        raise FileFormatError("empty sign sequence")
    return seq


def _parse_free_word(text):
    word = []
    for tok in text.split():
        m = re.match(r"^x(\d+)(\^(-?\d+))?$", tok)
        if not m:
            raise FileFormatError("bad free-word token %r" % tok)
        idx = int(m.group(1))
        exp = int(m.group(3)) if m.group(3) is not None else 1
        word.extend([idx if exp > 0 else -idx] * abs(exp))
    return tuple(word)


def _format_free_word(word):
    return " ".join("x%d" % x if x > 0 else "x%d^-1" % -x for x in word)


def cmd_oracle(args):
    if args.oracle == "complexity":
        print(brute_complexity(_parse_sign_sequence(args.seq)))
        return EXIT_OK
    if args.oracle == "power":
        result = brute_proper_power(_parse_free_word(args.word))
        if result is None:
            print("none")
        else:
            root, k = result
            print("root %s, k=%d" % (_format_free_word(root), k))
        return EXIT_OK
    rows = []
    for chunk in args.matrix.split(";"):
        row = [int(x) for x in chunk.split()]
        if row:
            rows.append(row)
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise FileFormatError("ragged matrix")
    print(" ".join(str(d) for d in gcd_minors_invariants(rows)))
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="relfree",
        description="Free-subgroup classification for one-relator relative "
                    "presentations over torsion-free coefficient groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser("analyze", help="classify a presentation file "
                          "(or every .pres file in a directory)")
    p_an.add_argument("path")
    p_an.add_argument("--json", action="store_true",
                      help="emit the JSON report instead of text")
    p_an.add_argument("--trace-verbose", action="store_true",
                      help="include intermediate words in the diagnostics")
    p_an.set_defaults(func=cmd_analyze)

    p_ver = sub.add_parser("verify", help="bounded relation search for a "
                           "witness pair in a computable model")
    p_ver.add_argument("path")
    p_ver.add_argument("--u", required=True)
    p_ver.add_argument("--v", required=True)
    p_ver.add_argument("--depth", type=int, default=10)
    p_ver.set_defaults(func=cmd_verify)

    p_or = sub.add_parser("oracle", help="run a brute-force oracle")
    or_sub = p_or.add_subparsers(dest="oracle", required=True)
    p_cx = or_sub.add_parser("complexity")
    p_cx.add_argument("--seq", required=True,
                      help="cyclic sign sequence, e.g. ++-")
    p_pw = or_sub.add_parser("power")
    p_pw.add_argument("word", help="free-group word, e.g. 'x1 x2 x1 x2'")
    p_sn = or_sub.add_parser("snf")
    p_sn.add_argument("matrix", help="integer matrix, e.g. '2 0; 0 3'")
    p_or.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (FileFormatError, ParseError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE
    except FileNotFoundError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
