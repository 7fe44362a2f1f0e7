"""Command-line front end: ``repstab <subcommand> [--format json|csv|table]``.

Exit status is 0 on success, 1 on a domain error (one line on stderr)
and 2 on a usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from typing import Any, Sequence

from . import RepstabError
from .arc_ss import (
    DEFAULT_Q_MAX,
    diagonal_position,
    diagonal_vanishing_report,
    e2_page,
    vanishing_line_report,
    w1_generation_report,
)
from .betti_tables import Surface, betti
from .binom_poly import evaluate
from .checks import run_checks
from .combinatorics import matchings_count
from .fi_decomp import DimAnswer, generator_table, secondary_generators
from .fim_plus import certify_not_free, free_fim_dim
from .partitions import d_family

FORMATS = ("json", "csv", "table")

CITE_TORUS = "b_k(F_n(T)): closed forms for k <= 5 (Pagaria)"
CITE_PUNCTURED = "b_k(F_n(T°)) = sum_m (-1)^(k-m) (k+1-m) b_m(F_(n+1)(T)), from F_n(T) ~ T x F_(n-1)(T°)"
CITE_FREE_FI = "dim M(W_d)_n = dim(W_d) * C(n,d); generator dims are binomial-basis coefficients"
CITE_SUPPORT = "H_k(F(T°)) is generated in degrees <= 2k-2 (k >= 3), <= 0,1,3 (k = 0,1,2)"
CITE_WSEQ = "W_i(n) = H_0^FI(H_((n+i)/2))_n, zero when n+i is odd"
CITE_FIM = "dim M^FIM+(W_d)_N = C(N,d) dim(W_d) (N-d-1)!!"
CITE_HOOK = "f^lam = |lam|! / prod(hook lengths)"
CITE_D = "lam in D_2n iff Frobenius coordinates satisfy a_i = b_i + 1"
CITE_E2 = "dim E2_(p,q)(n) = C(n,p+1) * D(p+1) * dim H_0^FI(H_q)_(n-p-1), D = derangement number"
CITE_VANISH = "E^infinity_(p,q)(n) = 0 for p + q + 2 <= n"


@dataclass
class Result:
    command: str
    inputs: dict[str, Any]
    columns: list[str]
    rows: list[dict[str, Any]]
    citations: list[str] = field(default_factory=list)
    grid: list[list[str]] | None = None


def _cell(value: Any) -> Any:
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, DimAnswer):
        return str(value)
    return value


def _text(value: Any) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if value is None:
        return ""
    return str(value)


def render(result: Result, fmt: str) -> str:
    if fmt == "json":
        payload = {
            "command": result.command,
            "inputs": {k: _cell(v) for k, v in result.inputs.items()},
            "rows": [{c: _cell(row.get(c)) for c in result.columns} for row in result.rows],
            "citations": result.citations,
        }
        return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(result.columns)
        for row in result.rows:
            writer.writerow([_text(row.get(c)) for c in result.columns])
        return buf.getvalue()
    lines = result.grid if result.grid is not None else (
        [result.columns] + [[_text(row.get(c)) for c in result.columns] for row in result.rows]
    )
    widths = [max(len(line[i]) for line in lines) for i in range(len(lines[0]))]
    numeric = [all(_numeric(line[i]) for line in lines[1:]) for i in range(len(widths))]
    out = [
        "  ".join(cell.rjust(w) if num else cell.ljust(w) for cell, w, num in zip(line, widths, numeric)).rstrip()
        for line in lines
    ]
    if result.grid is None:
        out.insert(1, "  ".join("-" * w for w in widths))
    out.extend(f"# {c}" for c in result.citations)
    return "\n".join(out) + "\n"


def _numeric(cell: str) -> bool:
    return cell.rstrip("*").lstrip("-").isdigit() or cell in ("", "?")


def _dim_row(answer: DimAnswer) -> dict[str, Any]:
    return {"kind": answer.kind, "dim": answer.value}


# -- subcommands ------------------------------------------------------------

def cmd_betti(args: argparse.Namespace) -> Result:
    surface = Surface(args.surface)
    poly = betti(surface, args.k)
    cites = [CITE_TORUS] if surface is Surface.TORUS else [CITE_TORUS, CITE_PUNCTURED]
    inputs = {"surface": surface.value, "k": args.k}
    if args.n is None and args.n_max is None:
        rows = [{"d": d, "coefficient": c} for d, c in enumerate(poly.coeffs)]
        inputs["polynomial"] = str(poly)
        return Result("betti", inputs, ["d", "coefficient"], rows, cites)
    ns = [args.n] if args.n is not None else list(range(args.n_max + 1))
    inputs.update({"n": args.n} if args.n is not None else {"n_max": args.n_max})
    rows = [{"n": n, "betti": evaluate(poly, n)} for n in ns]
    return Result("betti", inputs, ["n", "betti"], rows, cites)


def cmd_generators(args: argparse.Namespace) -> Result:
    table = generator_table(args.k)
    rows = [{"d": d, "dim_W": dim} for d, dim in enumerate(table.dims)]
    inputs = {"k": args.k, "support_bound": table.support_bound}
    return Result("generators", inputs, ["d", "dim_W"], rows, [CITE_PUNCTURED, CITE_FREE_FI, CITE_SUPPORT])


def cmd_wseq(args: argparse.Namespace) -> Result:
    rows = []
    for n in range(args.n_max + 1):
        answer = secondary_generators(args.i, n)
        rows.append({"n": n, **_dim_row(answer)})
    return Result("wseq", {"i": args.i, "n_max": args.n_max}, ["n", "kind", "dim"], rows,
                  [CITE_WSEQ, CITE_FREE_FI, CITE_SUPPORT])


def cmd_fim_dim(args: argparse.Namespace) -> Result:
    gens = args.gens
    rows = [{"N": args.N, "dim": free_fim_dim(gens, args.N)}]
    inputs = {"gens": ",".join(f"{d}:{v}" for d, v in sorted(gens.items())), "N": args.N}
    return Result("fim-dim", inputs, ["N", "dim"], rows, [CITE_FIM])


def cmd_certify(args: argparse.Namespace) -> Result:
    verdict = certify_not_free(args.actual, args.cap)
    w = verdict.witness
    row = {
        "verdict": verdict.verdict,
        "witness_degree": w.degree if w else None,
        "required_dim": w.required_dim if w else None,
        "actual_dim": w.actual_dim if w else None,
        "forced_generators": ",".join(f"{d}:{g}" for d, g in verdict.generators),
    }
    inputs = {"actual": ",".join(f"{d}:{v}" for d, v in sorted(args.actual.items())), "cap": args.cap}
    cites = [CITE_FIM, "NotFree is conclusive; FreeCompatible only rules out a dimension obstruction"]
    return Result("certify-nonfree", inputs, list(row), [row], cites)


def cmd_d_family(args: argparse.Namespace) -> Result:
    family = d_family(args.size)
    total = sum(dim for _, dim in family)
    cites = [CITE_D, CITE_HOOK, "sum of f^lam over D_2n equals (2n-1)!!"]
    inputs = {"size": args.size}
    if args.list:
        rows = [{"partition": str(lam), "frobenius": str(lam.frobenius()), "dim": dim} for lam, dim in family]
        rows.append({"partition": "total", "frobenius": "", "dim": total})
        return Result("d-family", inputs, ["partition", "frobenius", "dim"], rows, cites)
    row = {"size": args.size, "members": len(family), "total_dim": total,
           "matchings": matchings_count(args.size)}
    return Result("d-family", inputs, list(row), [row], cites)


def cmd_e2_page(args: argparse.Namespace) -> Result:
    page = e2_page(args.n, args.q_max)
    rows = []
    for q in range(page.q_max + 1):
        for p in page.columns:
            rows.append({"p": p, "q": q, **_dim_row(page[p, q]), "must_vanish": (p, q) in page.vanish_flags})
    grid = [["q\\p"] + [str(p) for p in page.columns]]
    for q in range(page.q_max, -1, -1):
        grid.append([str(q)] + [str(page[p, q]) + ("*" if (p, q) in page.vanish_flags else "")
                                for p in page.columns])
    cites = [CITE_E2, CITE_VANISH + " (marked *)", CITE_SUPPORT]
    return Result("e2-page", {"n": args.n, "q_max": args.q_max},
                  ["p", "q", "kind", "dim", "must_vanish"], rows, cites, grid)


def cmd_report_diagonal(args: argparse.Namespace) -> Result:
    rows = []
    for q, answer in diagonal_vanishing_report(args.n):
        p, m = diagonal_position(args.n, q)
        rows.append({"q": q, "p": p, "generator_degree": m, **_dim_row(answer)})
    cites = [CITE_E2, CITE_SUPPORT, "p + q = (n+2)/2, 0 <= q <= (n-2)/2: every entry vanishes by the degree bound"]
    return Result("reports diagonal", {"n": args.n}, ["q", "p", "generator_degree", "kind", "dim"], rows, cites)


def cmd_report_vanishing(args: argparse.Namespace) -> Result:
    rows = [{"p": p, "q": q} for p, q in vanishing_line_report(args.n, args.q_max)]
    return Result("reports vanishing-line", {"n": args.n, "q_max": args.q_max}, ["p", "q"], rows, [CITE_VANISH])


def cmd_report_w1(args: argparse.Namespace) -> Result:
    report = w1_generation_report()
    rows = []
    for (p, q), answer in sorted(report.entries.items(), key=lambda kv: (-kv[0][1], kv[0][0])):
        factors = f"C(3,{p + 1})*D({p + 1})*dim H_0^FI(H_{q})_{2 - p}"
        rows.append({"p": p, "q": q, **_dim_row(answer), "factors": factors,
                     "must_vanish": (p, q) in report.vanishing})
    cites = [CITE_E2, CITE_VANISH, *(f"assumption: {a}" for a in report.assumptions),
             f"d2: E2_(1,1)(3) (dim {report.d2_source_dim}) -> E2_(-1,2)(3) = W_1(3) (dim {report.d2_target_dim}) is onto"]
    return Result("reports w1", {"n": report.n}, ["p", "q", "kind", "dim", "factors", "must_vanish"], rows, cites)


def cmd_selfcheck(args: argparse.Namespace) -> Result:
    rows = [{"criterion": r.number, "name": r.name, "status": "PASS" if r.passed else "FAIL", "detail": r.detail}
            for r in run_checks()]
    return Result("selfcheck", {}, ["criterion", "status", "name", "detail"], rows, [])


# -- argument parsing -------------------------------------------------------

def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def _positive(text: str) -> int:
    value = _nonneg(text)
    if value == 0:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return value


def _degree_map(text: str) -> dict[int, int]:
    out: dict[int, int] = {}
    for item in filter(None, (s.strip() for s in text.split(","))):
        degree, sep, dim = item.partition(":")
        if not sep:
            raise argparse.ArgumentTypeError(f"expected 'degree:dim', got {item!r}")
        d, v = _nonneg(degree.strip()), _nonneg(dim.strip())
        if d in out:
            raise argparse.ArgumentTypeError(f"degree {d} given twice")
        out[d] = v
    if not out:
        raise argparse.ArgumentTypeError("empty degree map")
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="repstab", description=__doc__.splitlines()[0])
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=FORMATS, default="table")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("betti", parents=[fmt], help="Betti polynomials of F_n(T) and F_n(T°)")
    p.add_argument("--surface", choices=[s.value for s in Surface], required=True)
    p.add_argument("--k", type=_nonneg, required=True)
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--n", type=_nonneg)
    grp.add_argument("--n-max", type=_nonneg)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("generators", parents=[fmt], help="FI#-generator dimensions dim W_d of H_k(F(T°))")
    p.add_argument("--k", type=_nonneg, required=True)
    p.set_defaults(func=cmd_generators)

    p = sub.add_parser("wseq", parents=[fmt], help="secondary generator sequence W_i(n)")
    p.add_argument("--i", type=_nonneg, required=True)
    p.add_argument("--n-max", type=_nonneg, required=True)
    p.set_defaults(func=cmd_wseq)

    p = sub.add_parser("fim-dim", parents=[fmt], help="dimension of a free FIM+-module")
    p.add_argument("--gens", type=_degree_map, required=True, help="'d:dim,...'")
    p.add_argument("--N", type=_nonneg, required=True)
    p.set_defaults(func=cmd_fim_dim)

    p = sub.add_parser("certify-nonfree", parents=[fmt], help="dimension obstruction to FIM+-freeness")
    p.add_argument("--actual", type=_degree_map, required=True, help="'d:dim,...'")
    p.add_argument("--cap", type=_nonneg, required=True)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("d-family", parents=[fmt], help="partitions in D_2n with their dimensions")
    p.add_argument("--size", type=_positive, required=True)
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_d_family)

    p = sub.add_parser("e2-page", parents=[fmt], help="E2 page dimensions for T° at n points")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--q-max", type=_nonneg, default=DEFAULT_Q_MAX)
    p.set_defaults(func=cmd_e2_page)

    p = sub.add_parser("reports", help="vanishing reports")
    rsub = p.add_subparsers(dest="report", required=True)
    r = rsub.add_parser("diagonal", parents=[fmt])
    r.add_argument("--n", type=_positive, required=True)
    r.set_defaults(func=cmd_report_diagonal)
    r = rsub.add_parser("vanishing-line", parents=[fmt])
    r.add_argument("--n", type=_positive, required=True)
    r.add_argument("--q-max", type=_nonneg, default=DEFAULT_Q_MAX)
    r.set_defaults(func=cmd_report_vanishing)
    r = rsub.add_parser("w1", parents=[fmt])
    r.set_defaults(func=cmd_report_w1)

    p = sub.add_parser("selfcheck", parents=[fmt], help="run every acceptance identity")
    p.set_defaults(func=cmd_selfcheck)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except (RepstabError, ValueError) as exc:
        print(f"repstab: error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(render(result, args.format))
    if result.command == "selfcheck" and any(row["status"] != "PASS" for row in result.rows):
        return 1
    return 0


def run(argv: Sequence[str]) -> int:
    """Like :func:`main` but returns 2 on usage errors instead of raising SystemExit."""
    try:
        return main(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2


if __name__ == "__main__":
    sys.exit(main())
