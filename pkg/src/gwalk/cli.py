"""Command-line front end: ``gwalk <command> ...``.

Exit codes: 0 success, 2 usage, 3 formula mismatch, 4 not avoidable,
5 search budget exhausted, 6 fixture mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .analytics import cardinality_breakdown, q2_classify, q4_classify, q5_classify
from .arith import balanced_division
from .construction import avoiding_walk
from .errors import BudgetExceeded, DomainError, FixtureMismatch, FormulaMismatch, NotAvoidable
from .membership import is_unavoidable, obstruction_set
from .oracle import SearchBox, budget_from_env, default_box, run_search, theorem_agrees
from .render import render
from .walks import FIXTURE_DIFFERENCES, FIXTURE_INTERSECTION, FIXTURES, positive_real_differences, walk_to_json

EXIT_OK, EXIT_USAGE, EXIT_FORMULA, EXIT_NOT_AVOIDABLE, EXIT_BUDGET, EXIT_FIXTURE = 0, 2, 3, 4, 5, 6

TABLE_COLUMNS = ["d", "k", "r", "member", "k_minus_abs_r"]
FORMATS = ("text", "json", "csv", "svg", "ascii")
PICTURE_COMMANDS = {"walk", "oracle"}


class UsageError(Exception):
    pass


def _flag(b: bool) -> str:
    return "true" if b else "false"


def parse_range(text: str) -> range:
    """``"a..b"`` (inclusive) or a single integer."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            a, b = int(lo), int(hi)
        else:
            a = b = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}") from None
    if a < 1 or b < a:
        raise argparse.ArgumentTypeError(f"range {text!r} must satisfy 1 <= A <= B")
    return range(a, b + 1)


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def parse_box(text: str) -> SearchBox:
    try:
        x0, x1, y0, y1 = (int(v) for v in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected x0:x1:y0:y1, got {text!r}") from None
    return SearchBox(x0, x1, y0, y1)


def _csv(rows: list[list], header: list[str]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json(doc) -> str:
    return json.dumps(doc) + "\n"


def _member_row(n: int, d: int) -> list:
    bd = balanced_division(n, d)
    return [d, bd.k, bd.r, _flag(bd.margin >= 1), bd.margin]


# ------------------------------------------------------------------ commands


def cmd_member(args) -> str:
    d, k, r, member, margin = _member_row(args.n, args.d)
    if args.format == "json":
        return _json({"n": args.n, "d": d, "k": k, "r": r, "member": member == "true", "k_minus_abs_r": margin})
    if args.format == "csv":
        return _csv([[d, k, r, member, margin]], TABLE_COLUMNS)
    return f"{args.n} {d} k={k} r={r} member={member} k-|r|={margin}\n"


def cmd_table(args) -> str:
    rows = [_member_row(args.n, d) for d in range(1, args.n + 1)]
    if args.format == "csv":
        return _csv(rows, TABLE_COLUMNS)
    if args.format == "json":
        return _json([dict(zip(TABLE_COLUMNS, [d, k, r, m == "true", g])) for d, k, r, m, g in rows])
    lines = [f"{'d':>5} {'k':>5} {'r':>5} {'member':>7} {'k-|r|':>6}"]
    lines += [f"{d:>5} {k:>5} {r:>5} {m:>7} {g:>6}" for d, k, r, m, g in rows]
    return "\n".join(lines) + "\n"


def cmd_set(args) -> str:
    members = list(obstruction_set(args.n).members)
    if args.format == "json":
        return _json({"n": args.n, "members": members, "size": len(members)})
    if args.format == "csv":
        return _csv([[d] for d in members], ["d"])
    return "{" + ",".join(map(str, members)) + "}\n"


def cmd_card(args) -> str:
    b = cardinality_breakdown(args.n)  # raises FormulaMismatch on disagreement
    if args.format == "json":
        return _json({
            "n": b.n, "floor_sqrt2n": b.floor_sqrt2n, "twice_floor_ratio": b.twice_floor_ratio,
            "small_divisor_count": b.small_divisor_count, "theta": b.theta, "total": b.total,
            "cross_check": True,
        })
    if args.format == "csv":
        header = ["n", "floor_sqrt2n", "twice_floor_ratio", "small_divisor_count", "theta", "total"]
        return _csv([[b.n, *b.as_tuple()]], header)
    return f"|A_{b.n}| = {b.expression()} (theta={b.theta}, cross-check ok)\n"


def cmd_walk(args) -> str:
    cert = avoiding_walk(args.n, args.d)
    anchors = (cert.anchor_a, cert.anchor_b)
    if args.format in ("svg", "ascii"):
        return render(cert.walk, args.format, anchors)
    if args.format == "json":
        return _json(cert.to_json())
    if args.format == "csv":
        return _csv([[i, p.x, p.y] for i, p in enumerate(cert.walk)], ["index", "x", "y"])
    a, b = cert.walk[cert.anchor_a], cert.walk[cert.anchor_b]
    return (
        f"{cert.path_id}({cert.d}): {len(cert.walk)} points, "
        f"anchors {tuple(a)} - {tuple(b)} = {cert.n}, no difference {cert.d}\n"
    )


def cmd_oracle(args) -> str:
    box = args.box or default_box(args.n, args.d)
    budget = args.budget if args.budget is not None else budget_from_env()
    outcome = run_search(args.n, args.d, box, budget)
    if outcome.status == "budget-exceeded":
        raise BudgetExceeded(outcome.expansions)
    predicted = not is_unavoidable(args.n, args.d)
    agree = "AGREE" if theorem_agrees(args.n, args.d, outcome) else "DISAGREE"
    if args.format in ("svg", "ascii"):
        if outcome.path is None:
            raise UsageError(f"no path to render: the search found none for n={args.n}, d={args.d}")
        return render(outcome.path, args.format, (len(outcome.path) - 1, 0))
    if args.format == "json":
        return _json({
            "n": args.n, "d": args.d, "status": outcome.status, "expansions": outcome.expansions,
            "box": [box.x_min, box.x_max, box.y_min, box.y_max],
            "theorem_avoidable": predicted, "agree": agree == "AGREE",
            "path": walk_to_json(outcome.path)["points"] if outcome.path else None,
        })
    if args.format == "csv":
        return _csv([[args.n, args.d, outcome.status, outcome.expansions, _flag(predicted), agree]],
                    ["n", "d", "status", "expansions", "theorem_avoidable", "agree"])
    lines = [
        f"oracle {args.n} {args.d}: {outcome.status} after {outcome.expansions} expansions; "
        f"theorem says {'avoidable' if predicted else 'unavoidable'}; {agree}"
    ]
    if outcome.path is not None:
        lines.append("path: " + " ".join(f"({p.x},{p.y})" for p in outcome.path))
    return "\n".join(lines) + "\n"


def _classify_one(question: str, n: int, k: int | None, resolve: bool) -> dict:
    if question == "q2":
        return q2_classify(n).to_json()
    if question == "q4":
        return q4_classify(n).to_json()
    return q5_classify(n, k, resolve=resolve).to_json()


def cmd_classify(args) -> str:
    if args.question == "q5" and args.k is None:
        raise UsageError("classify q5 needs --k K")
    reports = [_classify_one(args.question, n, args.k, args.resolve) for n in args.target]
    members = [r["n"] for r in reports if r["verdict"] == "member"]
    if args.format == "json":
        return _json({"reports": reports, "members": members})
    if args.format == "csv":
        rows = [[r["n"], r["verdict"], r.get("case") or ""] for r in reports]
        return _csv(rows, ["n", "verdict", "case"])
    lines = []
    for r in reports:
        extra = ""
        if r.get("case") is not None:
            extra += f" case={r['case']}"
        if r.get("failed_thresholds"):
            extra += " failed=" + ",".join(r["failed_thresholds"])
        if r.get("obstruction"):
            extra += f" obstruction d={r['obstruction']['divisor']}"
        if r.get("witness"):
            w = r["witness"]
            extra += f" witness={w['path']}" + (f" avoiding {w['d']}" if "d" in w else "")
        lines.append(f"{r['question']} n={r['n']} {r['verdict']}{extra}")
    lines.append("members: {" + ",".join(map(str, members)) + "}")
    return "\n".join(lines) + "\n"


def cmd_fixtures(args) -> str:
    diffs = {name: positive_real_differences(w) for name, w in FIXTURES.items()}
    common = sorted(set.intersection(*(set(v) for v in diffs.values())))
    problems = [name for name, v in diffs.items() if v != FIXTURE_DIFFERENCES[name]]
    if common != FIXTURE_INTERSECTION:
        problems.append("intersection")
    if args.format == "json":
        out = _json({
            "fixtures": {n: {"points": len(FIXTURES[n]), "differences": v} for n, v in diffs.items()},
            "intersection": common, "ok": not problems,
        })
    else:
        lines = [f"{n}: {len(FIXTURES[n])} points, differences {{{','.join(map(str, v))}}}" for n, v in diffs.items()]
        lines.append("intersection {" + ",".join(map(str, common)) + "}")
        out = "\n".join(lines) + "\n"
    if problems:
        sys.stdout.write(out)
        raise FixtureMismatch("fixture differences disagree with the listed sets: " + ", ".join(problems))
    return out


# -------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gwalk", description="Unavoidable differences in Gaussian-integer walks")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    p = add("member", cmd_member, "is d in A_n?")
    p.add_argument("n", type=positive_int)
    p.add_argument("d", type=positive_int)
    p = add("table", cmd_table, "balanced division table for d = 1..n")
    p.add_argument("n", type=positive_int)
    p = add("set", cmd_set, "list A_n")
    p.add_argument("n", type=positive_int)
    p = add("card", cmd_card, "closed-form |A_n| with cross-check")
    p.add_argument("n", type=positive_int)
    p = add("walk", cmd_walk, "walk realising n while avoiding d")
    p.add_argument("n", type=positive_int)
    p.add_argument("d", type=positive_int)
    p = add("oracle", cmd_oracle, "brute-force search for an avoiding path")
    p.add_argument("n", type=positive_int)
    p.add_argument("d", type=positive_int)
    p.add_argument("--box", type=parse_box, metavar="x0:x1:y0:y1",
                   help="search box (write --box=-3:9:-2:2 when x0 is negative)")
    p.add_argument("--budget", type=positive_int, help="node expansion limit (default: $GW_BUDGET or 5e7)")
    p = add("classify", cmd_classify, "Question 2/4/5 verdicts over a range")
    p.add_argument("question", choices=("q2", "q4", "q5"))
    p.add_argument("target", type=parse_range, metavar="N|A..B")
    p.add_argument("--k", type=positive_int, help="window half-width for q5")
    p.add_argument("--resolve", action="store_true", help="search witnesses for Case-3 values of q5")
    add("fixtures", cmd_fixtures, "check the three n = 20 sequences")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # argparse exits with status 2 on usage errors
    if args.format in ("svg", "ascii") and args.command not in PICTURE_COMMANDS:
        parser.error(f"--format {args.format} only applies to walk and oracle")
    try:
        out = args.func(args)
    except (DomainError, UsageError) as exc:
        print(f"gwalk: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FormulaMismatch as exc:
        print(f"gwalk: formula mismatch: {exc}", file=sys.stderr)
        return EXIT_FORMULA
    except NotAvoidable as exc:
        print(f"gwalk: {exc}", file=sys.stderr)
        return EXIT_NOT_AVOIDABLE
    except BudgetExceeded as exc:
        print(f"gwalk: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except FixtureMismatch as exc:
        print(f"gwalk: {exc}", file=sys.stderr)
        return EXIT_FIXTURE
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
