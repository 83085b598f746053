"""Command-line interface.

Every subcommand builds a :class:`Result` (a JSON payload plus a table for
CSV/text output) so formatting is handled in one place.  Exit codes: 0 on
success, 1 when a verification fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import __version__
from .coeff import DeltaMode
from .diagram import enumerate_oriented_tl, identity
from .freeprod import realization_verify, sigma0_enumerate
from .freext import Projection, SingularityError, compressed_rank, f_vv, jones_wenzl, simple_objects
from .gram import GramReport, gram_matrix
from .ustl import embedding_check, iso_certificate, is_minimal_ustl, ustl_dim, ustl_simples
from .verify import SuiteConfig, run_suites
from .word import Sign, Word, all_words

MAX_LEN_LIMIT = 12
CACHE_ENV = "FREETL_CACHE_DIR"

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    delta_mode: DeltaMode | None
    max_len: int | None
    format: str = "json"
    seed: int = 0
    output_path: Path | None = None

    def delta_or(self, default: DeltaMode) -> DeltaMode:
        return self.delta_mode if self.delta_mode is not None else default

    def length_or(self, default: int) -> int:
        return self.max_len if self.max_len is not None else default


@dataclass
class Result:
    payload: dict
    header: list[str] = field(default_factory=list)
    rows: list[list] = field(default_factory=list)
    text: str | None = None
    exit_code: int = EXIT_OK


# --- argument types --------------------------------------------------------


def _word(text: str) -> Word:
    try:
        return Word.parse("" if text in ("", "()", "∅", "empty") else text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _delta(text: str) -> DeltaMode:
    try:
        return DeltaMode.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _max_len(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 0 <= n <= MAX_LEN_LIMIT:
        raise argparse.ArgumentTypeError(f"--max-len must be between 0 and {MAX_LEN_LIMIT}")
    return n


def _sign(text: str) -> Sign:
    try:
        return Sign.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _fixed(mode: DeltaMode, command: str) -> Fraction:
    if mode.is_symbolic:
        raise UsageError(f"{command} needs a rational --delta")
    return mode.value


# --- commands --------------------------------------------------------------


def cmd_dims(cfg: RunConfig) -> Result:
    mode = cfg.delta_or(DeltaMode.fixed(3))
    rows = []
    for n in range(cfg.length_or(6) + 1):
        for w in all_words(n):
            oriented = len(enumerate_oriented_tl(w))
            quotient = gram_matrix(w, mode=mode).rank if oriented else 0
            rows.append([str(w), oriented, ustl_dim(w), quotient])
    payload = {
        "delta": str(mode),
        "rows": [dict(zip(("word", "oriented_dim", "unshaded_dim", "quotient_dim"), r)) for r in rows],
    }
    return Result(payload, ["word", "oriented_dim", "unshaded_dim", "quotient_dim"], rows)


def _cache_path(w: Word, mode: DeltaMode) -> Path | None:
    root = os.environ.get(CACHE_ENV)
    if not root:
        return None
    name = "".join("p" if s > 0 else "m" for s in w) or "empty"
    tag = str(mode).replace("/", "_")
    return Path(root) / f"gram-v{__version__}-{name}-{tag}.json"


def _gram_report(w: Word, mode: DeltaMode) -> GramReport:
    path = _cache_path(w, mode)
    if path is not None and path.exists():
        try:
            return GramReport.from_json(json.loads(path.read_text()))
        except (ValueError, KeyError, TypeError):
            pass  # unreadable cache entries are simply recomputed
    report = gram_matrix(w, mode=mode)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(report.to_json(), sort_keys=True))
    return report


def cmd_gram(word: Word, cfg: RunConfig) -> Result:
    mode = cfg.delta_or(DeltaMode.symbolic())
    if cfg.format == "csv":
        _fixed(mode, "gram --format csv")
    report = _gram_report(word, mode)
    rows = [[str(x) for x in row] for row in report.matrix]
    return Result(report.to_json(), [], rows, report.to_text())


def _element_rows(element) -> list[list]:
    return [[json.dumps([list(a) for a in d.arcs]), str(c)] for d, c in element.terms.items()]


def cmd_jw(n: int, sign: Sign, cfg: RunConfig) -> Result:
    mode = cfg.delta_or(DeltaMode.symbolic())
    try:
        p = jones_wenzl(n, sign, mode.delta)
    except SingularityError as exc:
        raise UsageError(str(exc)) from None
    payload = {
        "n": n,
        "sign": sign.char,
        "delta": str(mode),
        "element": p.element.to_json(),
        "idempotent": p.is_idempotent(),
        "self_adjoint": p.is_self_adjoint(),
    }
    lines = [f"JW_{n} on {p.word or '()'}  delta={mode}"]
    lines += [f"  {c}  *  {[list(a) for a in d.arcs]}" for d, c in p.element.terms.items()]
    return Result(payload, ["arcs", "coeff"], _element_rows(p.element), "\n".join(lines))


def cmd_minimal(v: Word, cfg: RunConfig) -> Result:
    mode = cfg.delta_or(DeltaMode.fixed(3))
    d = _fixed(mode, "minimal")
    try:
        p = f_vv(v, d) if len(v) else Projection(v, identity(v, d))
    except SingularityError as exc:
        raise UsageError(str(exc)) from None
    r = compressed_rank(p.element, p.element, d)
    payload = {"word": str(v), "delta": str(d), "compressed_rank": r, "minimal": r == 1}
    return Result(payload, ["word", "delta", "compressed_rank", "minimal"], [[str(v), str(d), r, r == 1]])


def cmd_simples(cfg: RunConfig) -> Result:
    mode = cfg.delta_or(DeltaMode.fixed(3))
    d = _fixed(mode, "simples")
    L = cfg.length_or(1)
    try:
        words = simple_objects(L, d, verify_upto=min(L, 3))
    except AssertionError as exc:
        return Result({"pass": False, "witness": str(exc)}, ["error"], [[str(exc)]], exit_code=EXIT_FAIL)
    labels = [str(w) for w in words]
    payload = {"max_len": L, "delta": str(d), "verified_upto": min(L, 3), "simples": labels}
    return Result(payload, ["word"], [[w] for w in labels], "\n".join(w or "()" for w in labels))


def cmd_ustl_embed(cfg: RunConfig) -> Result:
    mode = cfg.delta_or(DeltaMode.fixed(3))
    d = _fixed(mode, "ustl-embed")
    L = cfg.length_or(6)
    emb = embedding_check(min(L, 6), samples=100, seed=cfg.seed)
    cert = iso_certificate(d)
    dims = {w: ustl_dim(w) for w in ("++", "--")}
    ff_minimal = is_minimal_ustl(f_vv("++", d), d)
    try:
        simples = ustl_simples(L, d, verify_upto=min(L, 2))
    except AssertionError as exc:
        simples = {"error": str(exc)}
    ok = isinstance(simples, list) and emb["pass"] and cert["pass"] and all(v == 1 for v in dims.values()) and not ff_minimal
    payload = {
        "pass": ok,
        "embedding": emb,
        "iso_certificate": cert,
        "ustl_dims": dims,
        "f_vv_pp_minimal_in_ustl": ff_minimal,
        "ustl_simples": simples,
    }
    rows = [
        ["embedding", emb["pass"]],
        ["iso_certificate", cert["pass"]],
        ["ustl_dim(++)", dims["++"]],
        ["ustl_dim(--)", dims["--"]],
        ["f_vv(++) minimal in USTL", ff_minimal],
    ]
    return Result(payload, ["check", "value"], rows, exit_code=EXIT_OK if ok else EXIT_FAIL)


def cmd_freeprod(cfg: RunConfig, gram: bool = False, labels: tuple[int, int] | None = None) -> Result:
    d = _fixed(cfg.delta_or(DeltaMode.fixed(3)), "freeprod-count") if gram else 3
    L = cfg.length_or(8)
    report = realization_verify(L, gram=gram, delta=d)
    if labels is not None:
        m, n = labels
        words = sigma0_enumerate([f"a{i}" for i in range(m)], [f"b{j}" for j in range(n)], L)
        counts = [0] * (L + 1)
        for w in words:
            counts[len(w)] += 1
        report["sigma0_counts"] = counts
    header = ["word", "ncp_count", "tl_count", "match"] + (["gram_rank"] if gram else [])
    rows = [[r[k] for k in header] for r in report["words"]]
    return Result(report, header, rows, exit_code=EXIT_OK if report["pass"] else EXIT_FAIL)


def cmd_verify(cfg: RunConfig, samples: int = 100, inject_fault: str | None = None) -> Result:
    delta = None if cfg.delta_mode is None else _fixed(cfg.delta_mode, "verify")
    suite_cfg = SuiteConfig(cfg.length_or(8), cfg.seed, delta, samples, inject_fault)
    report = run_suites(suite_cfg)
    rows = [[r["suite"], r["status"], r["checks"]] for r in report["suites"]]
    lines = [f"{r['suite']:<20} {r['status']:<8} {r['checks']}" for r in report["suites"]]
    lines.append("PASS" if report["pass"] else "FAIL")
    for r in report["suites"]:
        if "witness" in r:
            lines.append(f"witness ({r['suite']}): {json.dumps(r['witness'], sort_keys=True)}")
    return Result(report, ["suite", "status", "checks"], rows, "\n".join(lines), EXIT_OK if report["pass"] else EXIT_FAIL)


# --- output ----------------------------------------------------------------


def render(result: Result, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(result.payload, indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if result.header:
            writer.writerow(result.header)
        writer.writerows(result.rows)
        return buf.getvalue()
    if result.text is not None:
        return result.text + "\n"
    cells = ([result.header] if result.header else []) + [[str(c) for c in r] for r in result.rows]
    if not cells:
        return ""
    widths = [max(len(str(row[i])) for row in cells) for i in range(len(cells[0]))]
    return "\n".join("  ".join(str(c).ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--delta", type=_delta, default=None, help='loop value: "symbolic" or a rational "p/q"')
    common.add_argument("--max-len", type=_max_len, default=None, help=f"word length bound (<= {MAX_LEN_LIMIT})")
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized sampling")
    common.add_argument("--output", type=Path, default=None, help="write to this file instead of stdout")

    parser = argparse.ArgumentParser(prog="freetl", description="Exact Temperley-Lieb diagrammatics.")
    parser.add_argument("--version", action="version", version=f"freetl {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("dims", parents=[common], help="dimension table for all words up to --max-len")
    p = sub.add_parser("gram", parents=[common], help="Gram matrix report for one word")
    p.add_argument("word", type=_word)
    p = sub.add_parser("jw", parents=[common], help="Jones-Wenzl idempotent")
    p.add_argument("n", type=int)
    p.add_argument("--sign", type=_sign, default=Sign.PLUS)
    p = sub.add_parser("minimal", parents=[common], help="minimality of the block projection of a word")
    p.add_argument("word", type=_word)
    sub.add_parser("simples", parents=[common], help="simple objects up to --max-len")
    sub.add_parser("ustl-embed", parents=[common], help="checks of the unshaded embedding")
    p = sub.add_parser("freeprod-count", parents=[common], help="free-product realization counts")
    p.add_argument("--gram", action="store_true", help="also compare Gram ranks at the fixed delta")
    p.add_argument("--labels", type=int, nargs=2, metavar=("M", "N"), help="also count alternating words over M and N labels")
    p = sub.add_parser("verify", parents=[common], help="run every invariant suite")
    p.add_argument("--samples", type=int, default=100, help="random samples per randomized suite")
    p.add_argument("--inject-fault", choices=("gram",), default=None, help=argparse.SUPPRESS)
    return parser


def dispatch(args: argparse.Namespace) -> Result:
    cfg = RunConfig(args.delta, args.max_len, args.format, args.seed, args.output)
    if args.command == "dims":
        return cmd_dims(cfg)
    if args.command == "gram":
        return cmd_gram(args.word, cfg)
    if args.command == "jw":
        if args.n < 0:
            raise UsageError("n must be >= 0")
        return cmd_jw(args.n, args.sign, cfg)
    if args.command == "minimal":
        return cmd_minimal(args.word, cfg)
    if args.command == "simples":
        return cmd_simples(cfg)
    if args.command == "ustl-embed":
        return cmd_ustl_embed(cfg)
    if args.command == "freeprod-count":
        if args.labels and min(args.labels) < 0:
            raise UsageError("label counts must be >= 0")
        return cmd_freeprod(cfg, args.gram, tuple(args.labels) if args.labels else None)
    if args.command == "verify":
        if args.samples < 0:
            raise UsageError("--samples must be >= 0")
        return cmd_verify(cfg, args.samples, args.inject_fault)
    raise UsageError(f"unknown command {args.command}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = dispatch(args)
    except (UsageError, SingularityError) as exc:
        print(f"freetl {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = render(result, args.format)
    if args.output is not None:
        args.output.write_text(text)
    else:
        sys.stdout.write(text)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
