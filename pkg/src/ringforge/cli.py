"""ringforge command line.

Exit codes: 0 success / all checks pass, 1 input error, 2 a verifier found a
counterexample.
"""
import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import config
from .blocks import theorem_report
from .corpus import DEFAULT_CORPUS, corpus_names, corpus_ring, resolve
from .errors import RingError
from .oracle import oracle_report
from .qf import nakayama, verify_propqf
from .report import analyze, quiver_dot
from .ring import dump_ring, ring_to_dict
from .simples import ext_quiver

EXIT_OK, EXIT_INPUT, EXIT_COUNTEREXAMPLE = 0, 1, 2


def _parse_caps(pairs):
    caps = {}
    for pair in pairs or ():
        key, eq, value = pair.partition("=")
        if not eq:
            raise argparse.ArgumentTypeError(f"--caps expects KEY=VALUE, got {pair!r}")
        caps[key] = int(value)
    return caps


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _describe(exc):
    msg = f"{type(exc).__name__}: {exc}"
    witness = getattr(exc, "witness", None)
    if witness is not None:
        msg += f" [witness {witness}]"
    return msg


def cmd_analyze(args):
    report = analyze(resolve(args.input), timing=not args.no_timing)
    _emit(report.to_json(), args.out)
    return EXIT_OK if report.passed else EXIT_COUNTEREXAMPLE


def cmd_quiver(args):
    r = resolve(args.input)
    if args.dot:
        _emit(quiver_dot(r, args.side), args.out)
    else:
        q = ext_quiver(r, args.side)
        data = {"side": q.side, "vertices": q.vertices, "matrix": q.matrix,
                "arrows": [list(a) for a in q.arrows]}
        _emit(json.dumps(data, indent=2) + "\n", args.out)
    return EXIT_OK


def check_ring(label, source, caps=None):
    """Verifiers plus oracle equivalences for one ring; never raises."""
    if caps:
        config.set_caps(**caps)
    entry = {"ring": label}
    try:
        r = corpus_ring(source) if source in DEFAULT_CORPUS else resolve(source)
        verdicts = list(theorem_report(r).verdicts)
        if nakayama(r).is_qf:
            verdicts.append(verify_propqf(r))
        verdicts += oracle_report(r)
    except RingError as exc:
        entry.update(status="error", error=_describe(exc))
        return entry
    entry["verdicts"] = [v.to_dict() for v in verdicts]
    failed = [v for v in verdicts if not v.passed]
    entry["status"] = "fail" if failed else "pass"
    if failed:
        entry["certificate"] = {"ring_spec": ring_to_dict(r),
                                "witnesses": {v.name: v.to_dict()["witness"] for v in failed}}
    return entry


def cmd_check(args):
    caps = _parse_caps(args.caps)
    if args.ring:
        jobs = [(text, text) for text in args.ring]
    else:
        if args.corpus != "default":
            raise RingError(f"unknown corpus {args.corpus!r}; only 'default' exists")
        jobs = [(name, name) for name in corpus_names()]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            futures = [pool.submit(check_ring, label, src, caps) for label, src in jobs]
            entries = [f.result() for f in futures]
    else:
        config.set_caps(**caps)
        entries = [check_ring(label, src) for label, src in jobs]
    counts = {s: sum(e["status"] == s for e in entries) for s in ("pass", "fail", "error")}
    summary = {"rings": entries, **counts}
    _emit(json.dumps(summary, indent=2) + "\n", args.out)
    if counts["fail"]:
        return EXIT_COUNTEREXAMPLE
    return EXIT_INPUT if counts["error"] else EXIT_OK


def cmd_corpus(args):
    if args.action == "list":
        width = max(map(len, DEFAULT_CORPUS))
        _emit("".join(f"{n:<{width}}  {e}\n" for n, e in DEFAULT_CORPUS.items()), args.out)
        return EXIT_OK
    if not args.name:
        raise RingError("corpus emit needs a ring name")
    _emit(dump_ring(corpus_ring(args.name)) + "\n", args.out)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="ringforge", description="Structure of finite rings.")
    sub = parser.add_subparsers(dest="command", required=True)
    caps_help = f"override size caps ({', '.join(config.DEFAULT_CAPS)})"

    p = sub.add_parser("analyze", help="full analysis report as JSON")
    p.add_argument("input", help="corpus name, constructor expression or ring-spec JSON path")
    p.add_argument("--out")
    p.add_argument("--no-timing", action="store_true")
    p.add_argument("--caps", nargs="*", metavar="KEY=VALUE", help=caps_help)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("quiver", help="Ext quiver as JSON or DOT")
    p.add_argument("input")
    p.add_argument("--dot", action="store_true")
    p.add_argument("--side", choices=("right", "left"), default="right")
    p.add_argument("--out")
    p.add_argument("--caps", nargs="*", metavar="KEY=VALUE", help=caps_help)
    p.set_defaults(func=cmd_quiver)

    p = sub.add_parser("check", help="verifiers and oracle equivalences")
    p.add_argument("--corpus", default="default")
    p.add_argument("--ring", action="append", help="check this ring instead of the corpus (repeatable)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    p.add_argument("--caps", nargs="*", metavar="KEY=VALUE", help=caps_help)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("corpus", help="list or emit built-in rings")
    p.add_argument("action", choices=("list", "emit"))
    p.add_argument("name", nargs="?")
    p.add_argument("--out")
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "caps", None) and args.command != "check":
            config.set_caps(**_parse_caps(args.caps))
        return args.func(args)
    except (RingError, KeyError, OSError, argparse.ArgumentTypeError) as exc:
        print(f"error: {_describe(exc)}", file=sys.stderr)
        return EXIT_INPUT
    finally:
        config.reset_caps()


if __name__ == "__main__":
    sys.exit(main())
