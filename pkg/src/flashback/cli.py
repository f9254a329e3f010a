"""
Command-line front end.

Exit codes: 0 success or valid, 1 semantic failure (invalid sequence,
DISAGREE or FAIL verdict), 2 parse, usage or I/O error.
"""

import argparse
import itertools
import json
import os
import sys

from . import image, textformat
from .codec import decompose, reconstruct
from .errors import (
    FlashbackError,
    MalformedSequenceError,
    ParamOutOfRangeError,
    ParseError,
    SearchTooLargeError,
    SkeletonMismatchError,
)
from .locality import RunLengthEdit, diff_tokens, predict_changed_depths
from .peeling import DEFAULT_LIMIT, check_optimality
from .runs import is_palindrome_by_rle, kernel, rle, run_count
from . import stats

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _read(path):
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _input_bytes(args):
    if getattr(args, "text", None) is not None:
        return os.fsencode(args.text)
    return _read(args.input)


def _write_text(text):
    sys.stdout.write(text)
    sys.stdout.flush()


def _emit(fields, as_json):
    if as_json:
        _write_text(json.dumps(fields, sort_keys=False) + "\n")
        return
    lines = []
    for key, value in fields.items():
        if isinstance(value, bool):
            value = "true" if value else "false"
        elif isinstance(value, (list, tuple)):
            value = ",".join(str(v) for v in value) if value else "none"
        elif isinstance(value, dict):
            value = json.dumps(value)
        lines.append(f"{key}={value}")
    _write_text("\n".join(lines) + "\n")


def cmd_encode(args):
    _write_text(textformat.render(decompose(_input_bytes(args))))
    return EXIT_OK


def cmd_decode(args):
    tokens = textformat.parse(_read(args.input))
    data = reconstruct(tokens)
    sys.stdout.buffer.write(data)
    sys.stdout.buffer.flush()
    return EXIT_OK


def cmd_validate(args):
    tokens = textformat.parse(_read(args.input))
    report = image.validate(tokens)
    if args.json:
        _write_text(json.dumps(report.to_dict()) + "\n")
    else:
        lines = [f"valid={'true' if report.valid else 'false'}"]
        for v in report.violations:
            lines.append(f"violation={v.condition} depth={v.depth} message={v.message}")
        _write_text("\n".join(lines) + "\n")
    return EXIT_OK if report.valid else EXIT_FAIL


def analyze(data):
    """Structural summary of ``data`` as an ordered dict of report fields."""
    tokens = decompose(data)
    if not data:
        return {
            "n": 0, "r": 0, "k": len(tokens), "rle": [], "kernel": "@$",
            "kernel_alphabet_size": 0, "palindrome": True, "pairs": [],
            "kernel_runs": [], "empty_input": True,
        }
    enc = rle(data)
    r = enc.r
    h = (r + 1) // 2
    ker = kernel(data)
    return {
        "n": len(data),
        "r": r,
        "k": len(tokens),
        "rle": [f"{textformat.escape_symbol(a)}{m}" for a, m in zip(enc.symbols.tolist(), enc.lengths.tolist())],
        "kernel": textformat.escape_bytes(ker.symbols),
        "kernel_alphabet_size": ker.distinct_symbol_count,
        "palindrome": is_palindrome_by_rle(data),
        "pairs": [f"{j}-{r + 1 - j}" for j in range(1, h)],
        "kernel_runs": [h] if r % 2 else [h, h + 1],
        "empty_input": False,
    }


def cmd_analyze(args):
    _emit(analyze(_input_bytes(args)), args.json)
    return EXIT_OK


def cmd_diff(args):
    if args.text:
        a, b = os.fsencode(args.a), os.fsencode(args.b)
    else:
        a, b = _read(args.a), _read(args.b)
    changed = diff_tokens(decompose(a), decompose(b))
    fields = {"changed": sorted(changed)}
    status = EXIT_OK
    try:
        if not a or not b:
            raise SkeletonMismatchError("empty input has no skeleton")
        predicted = predict_changed_depths(RunLengthEdit.between(a, b))
    except SkeletonMismatchError:
        fields["skeleton"] = "mismatch"
    else:
        fields["skeleton"] = "match"
        fields["predicted"] = sorted(predicted)
        fields["verdict"] = "AGREE" if predicted == changed else "DISAGREE"
        if predicted != changed:
            status = EXIT_FAIL
    _emit(fields, args.json)
    return status


def cmd_stats(args):
    params = stats.StatParams(args.n, args.sigma)
    sample = stats.monte_carlo(params, args.trials, args.seed)
    ok, rows = stats.agreement(params, sample)
    fields = {
        "n": params.n,
        "sigma": params.sigma,
        "trials": sample.trials,
        "seed": sample.seed,
        "expected_k": stats.expected_k(params),
        "variance_k": stats.variance_k(params),
        "kernel_singleton_prob": stats.kernel_singleton_prob(params),
        "mc_mean_k": sample.mean_k,
        "mc_var_k": sample.var_k,
        "mc_frac_kernel_singleton": sample.frac_kernel_singleton,
    }
    for name, _, _, se in rows:
        fields[f"se_{name}"] = se
    fields["identity_failures"] = sample.identity_failures
    fields["verdict"] = "PASS" if ok else "FAIL"
    _emit(fields, args.json)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_search(args):
    alphabet = os.fsencode(args.alphabet)
    if not alphabet or len(set(alphabet)) != len(alphabet):
        raise ParamOutOfRangeError("alphabet must be non-empty with distinct symbols")
    if args.max_len < 1:
        raise ParamOutOfRangeError("--max-len must be >= 1")
    checked = even = 0
    failures = []
    for length in range(1, args.max_len + 1):
        for tup in itertools.product(alphabet, repeat=length):
            s = bytes(tup)
            failures.extend(check_optimality(s, args.limit))
            checked += 1
            even += run_count(s) % 2 == 0
    fields = {
        "strings_checked": checked,
        "even_r_strings": even,
        "failures": len(failures),
        "verdict": "PASS" if not failures else "FAIL",
    }
    if failures:
        fields["counterexamples"] = failures[:20]
    _emit(fields, args.json)
    return EXIT_OK if not failures else EXIT_FAIL


def build_parser():
    parser = argparse.ArgumentParser(prog="flashback", description="Bilateral run-peeling toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p, text_flag=True):
        p.add_argument("input", nargs="?", default="-", help="input file, '-' for stdin")
        if text_flag:
            p.add_argument("-t", "--text", help="use this literal text as input instead")

    p = sub.add_parser("encode", help="decompose bytes into a token document")
    add_input(p)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="rebuild bytes from a token document")
    add_input(p, text_flag=False)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("validate", help="check a token document against the image conditions")
    add_input(p, text_flag=False)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("analyze", help="run structure, kernel and pairing table")
    add_input(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("diff", help="token depths that differ between two inputs")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--text", action="store_true", help="treat A and B as literal strings")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_diff)

    p = sub.add_parser("stats", help="closed-form vs Monte Carlo token statistics")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--sigma", type=int, required=True)
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("search", help="exhaustive check of peeling optimality")
    p.add_argument("--max-len", type=int, default=8)
    p.add_argument("--alphabet", default="AB")
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_search)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MalformedSequenceError as exc:
        print(f"flashback: {exc.code}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (ParseError, ParamOutOfRangeError, SearchTooLargeError) as exc:
        print(f"flashback: {exc.code}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FlashbackError as exc:
        print(f"flashback: {exc.code}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except OSError as exc:
        print(f"flashback: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
