"""Command-line interface.

Exit status is 0 on success, 2 on invalid input and 1 when an internal
consistency check fails. ``mcd decide`` reports infeasibility as data and
still exits 0.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .chains import sagan_report
from .enumerate import Rectangle, compositions_in_rect, ideal_elements_K, ideal_elements_Y, partitions_in_rect, rank_counts
from .mcdsearch import conjecture_scan, mcd_decide, modal_ranks
from .poset import build_K, build_Y, label_str, rank_sequence
from .qpoly import Poly, parse_coeff, profile

FORMATS = ("text", "json", "csv")


class InputError(ValueError):
    pass


def parse_parts(text: str, decreasing: bool = False) -> tuple[int, ...]:
    """``"3,1,4,1"`` -> ``(3, 1, 4, 1)``; the empty string is the empty composition."""
    if text in ("", "e", "()"):
        return ()
    parts = []
    for token in text.split(","):
        if not (token.isascii() and token.isdigit()) or int(token) < 1:
            raise InputError(f"bad part {token!r} in {text!r}: parts are positive integers separated by ','")
        parts.append(int(token))
    if decreasing:
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise InputError(f"partition {text!r} is not weakly decreasing at {b!r}")
    return tuple(parts)


def parse_polyspec(text: str) -> Poly:
    coeffs = []
    for token in text.split(","):
        try:
            coeffs.append(parse_coeff(token))
        except ValueError:
            raise InputError(f"bad coefficient {token!r} in {text!r}") from None
    return Poly(coeffs)


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"{text!r} must be positive")
    return v


def _csv(header: list[str], rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _dump(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _seq_output(fmt: str, kind: str, source: str, counts: list[int]) -> str:
    prof = profile(counts)
    if fmt == "json":
        return _dump({"kind": kind, "source": source, "counts": counts,
                      "total": sum(counts), "profile": prof.to_json()})
    if fmt == "csv":
        return _csv(["n", "count"], enumerate(counts))
    lines = [f"{kind} {source}", " ".join(map(str, counts)), f"total {sum(counts)}"]
    lines += _profile_lines(prof)
    return "\n".join(lines) + "\n"


def _profile_lines(prof) -> list[str]:
    lower = lambda b: str(b).lower()
    return [
        f"unimodal={lower(prof.unimodal)} log_concave={lower(prof.log_concave)} "
        f"symmetric={lower(prof.symmetric)}",
        f"modes {' '.join(map(str, sorted(prof.mode_indices))) or '-'}",
    ]


def cmd_seq(args) -> str:
    if args.what == "partitions":
        k, l = _box(args.spec)
        return _seq_output(args.format, "partitions", f"{k}x{l}", partitions_in_rect(Rectangle(k, l)))
    if args.what == "compositions":
        k, l = _box(args.spec)
        return _seq_output(args.format, "compositions", f"{k}x{l}", compositions_in_rect(Rectangle(k, l)))
    if len(args.spec) != 1:
        raise InputError(f"seq {args.what} takes one argument")
    if args.what == "ideal":
        kappa = parse_parts(args.spec[0])
        return _seq_output(args.format, "comp-ideal", label_str(kappa), rank_counts(ideal_elements_K(kappa)))
    lam = parse_parts(args.spec[0], decreasing=True)
    return _seq_output(args.format, "young-ideal", label_str(lam), rank_counts(ideal_elements_Y(lam)))


def _box(spec: list[str]) -> tuple[int, int]:
    if len(spec) != 2:
        raise InputError("expected K L")
    try:
        k, l = (_positive(s) for s in spec)
    except argparse.ArgumentTypeError as exc:
        raise InputError(str(exc)) from None
    return k, l


def cmd_check(args) -> str:
    p = parse_polyspec(args.polyspec)
    prof = profile(p)
    if args.format == "json":
        return _dump({"coeffs": p.to_json(), "profile": prof.to_json()})
    if args.format == "csv":
        d = prof.to_json()
        d["mode_indices"] = " ".join(map(str, d["mode_indices"]))
        return _csv(["property", "value"], [(k, str(v).lower() if isinstance(v, bool) else v) for k, v in d.items()])
    return "\n".join([" ".join(p.to_json()) or "0"] + _profile_lines(prof)) + "\n"


def cmd_export(args) -> str:
    if args.family == "young":
        P = build_Y(parse_parts(args.spec, decreasing=True))
    else:
        P = build_K(parse_parts(args.spec))
    if args.format == "json":
        return _dump(P.to_json())
    if args.format == "csv":
        return _csv(["id", "label", "rank", "covered_by"],
                    [(i, label_str(P.labels[i]), P.ranks[i], " ".join(map(str, P.up[i])))
                     for i in range(len(P))])
    return P.to_text()


def _decide_poset(args):
    spec = args.spec
    if args.family == "rect":
        k, l = _box(spec)
        return build_K((l,) * k), f"rect {k}x{l}"
    if len(spec) != 1:
        raise InputError(f"mcd decide {args.family} takes one argument")
    if args.family == "ideal":
        kappa = parse_parts(spec[0])
        return build_K(kappa), f"ideal {label_str(kappa)}"
    lam = parse_parts(spec[0], decreasing=True)
    return build_Y(lam), f"young {label_str(lam)}"


def cmd_decide(args) -> str:
    P, name = _decide_poset(args)
    if args.rank is not None:
        if not 0 <= args.rank <= P.rank:
            raise InputError(f"--rank {args.rank} outside 0..{P.rank}")
        results = [mcd_decide(P, args.rank)]
        feasible = sorted(m.rank for m in results if m.exists)
    else:
        feasible = sorted(modal_ranks(P))
        results = [mcd_decide(P, m) for m in range(P.rank + 1)]
    seq = rank_sequence(P)
    if args.format == "json":
        return _dump({"poset": name, "rank_sequence": seq, "feasible_ranks": feasible,
                      "results": [r.to_json(P) for r in results]})
    if args.format == "csv":
        rows = []
        for r in results:
            if r.exists:
                rows.append((r.rank, "true", "", len(r.decomposition)))
            else:
                rows.append((r.rank, "false", r.failing_level, ""))
        return _csv(["rank", "exists", "failing_level", "chains"], rows)
    lines = [f"{name}: rank sequence {' '.join(map(str, seq))}",
             f"feasible modal ranks: {' '.join(map(str, feasible)) or 'none'}"]
    for r in results:
        if r.exists:
            lines.append(f"m={r.rank}: MCD with {len(r.decomposition)} chains")
        else:
            v = r.violator
            lines.append(
                f"m={r.rank}: impossible at level {r.failing_level} ({v.direction}); "
                f"{len(v.subset)} elements have only {len(v.neighbours)} neighbours"
            )
    return "\n".join(lines) + "\n"


def cmd_sagan(args) -> str:
    rep = sagan_report(args.k)
    if args.format == "json":
        doc = rep.to_json()
        if args.report:
            doc["decomposition"] = rep.decomposition.to_json(rep.poset)
        return _dump(doc)
    if args.format == "csv":
        return _csv(["low", "high", "count"],
                    [(a, b, c) for (a, b), c in sorted(rep.span_counts.items())])
    lower = lambda b: str(b).lower()
    lines = [
        f"K(2^{args.k}): {len(rep.poset)} elements, {len(rep.decomposition)} chains",
        f"valid CD={lower(rep.valid)}",
        f"modal ranks: {' '.join(map(str, sorted(rep.modal_ranks))) or 'none'}",
        f"MCD={lower(rep.is_mcd_at_prediction)} at predicted rank {rep.predicted_rank}",
    ]
    if args.report:
        lines.append(f"dropped chains per step: {' '.join(map(str, rep.dropped)) or '-'}")
        for (a, b), c in sorted(rep.span_counts.items()):
            lines.append(f"span {a}-{b}: {c}")
        for a, b in rep.missing_chains():
            lines.append(f"misses predicted rank: chain spanning {a}-{b}")
    return "\n".join(lines) + "\n"


def cmd_scan(args) -> str:
    rows = conjecture_scan(args.kmax, args.lmax)
    if args.format == "json":
        return _dump({"rows": [r.to_json() for r in rows]})
    if args.format == "csv":
        return _csv(["k", "l", "predicted_rank", "feasible_ranks", "agree", "unimodal"],
                    [(r.k, r.l, r.predicted, " ".join(map(str, r.feasible)),
                      str(r.agree).lower(), str(r.unimodal).lower()) for r in rows])
    lines = [f"{'k':>3} {'l':>3} {'pred':>5}  agree  feasible"]
    for r in rows:
        lines.append(f"{r.k:>3} {r.l:>3} {r.predicted:>5}  {'yes' if r.agree else 'NO ':<5}  "
                     f"{' '.join(map(str, r.feasible)) or 'none'}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    common.add_argument("--out", metavar="FILE", default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="rectcomp", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=FORMATS, default="text")
    parser.add_argument("--out", metavar="FILE", default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", parents=[common], help="rank sequences")
    p.add_argument("what", choices=["partitions", "compositions", "ideal", "young"])
    p.add_argument("spec", nargs="+", help="K L, or a comma-separated composition/partition")
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("check", parents=[common], help="profile a coefficient list")
    p.add_argument("polyspec", help="comma-separated coefficients, e.g. 1,1,1,23/10,2")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("poset", parents=[common], help="poset utilities")
    psub = p.add_subparsers(dest="action", required=True)
    e = psub.add_parser("export", parents=[common])
    e.add_argument("family", choices=["young", "comp"])
    e.add_argument("spec")
    e.set_defaults(func=cmd_export)

    p = sub.add_parser("mcd", parents=[common], help="modal chain decompositions")
    msub = p.add_subparsers(dest="action", required=True)
    d = msub.add_parser("decide", parents=[common])
    d.add_argument("family", choices=["rect", "ideal", "young"])
    d.add_argument("spec", nargs="+")
    d.add_argument("--rank", type=int, default=None)
    d.set_defaults(func=cmd_decide)
    s = msub.add_parser("sagan", parents=[common])
    s.add_argument("k", type=_positive)
    s.add_argument("--report", action="store_true")
    s.set_defaults(func=cmd_sagan)

    p = sub.add_parser("scan", parents=[common], help="modal rank conjecture table")
    p.add_argument("--kmax", type=_positive, required=True)
    p.add_argument("--lmax", type=_positive, required=True)
    p.set_defaults(func=cmd_scan)
    return parser


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text = args.func(args)
    except (InputError, ValueError) as exc:
        print(f"rectcomp: error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"rectcomp: internal check failed: {exc}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
