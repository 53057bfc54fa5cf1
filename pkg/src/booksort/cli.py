"""Command-line front end.

Subcommands: solve, count, validate, mixing, bench, export-dot.  Results
are printed as JSON documents with exact rationals as strings; repeated
runs on the same input produce byte-identical output (timing is only
included on request, via --timing).

Exit codes: 0 success, 2 parse or parameter error, 3 capacity exceeded,
4 semantic failure (invalid plan, unsorted final state, not mixed when
asserted).
"""

import argparse
import json
import sys
import time
from fractions import Fraction

from .density import (
    is_kappa_mixed,
    mass_bounds_check,
    proof_lower_bound,
    total_mass,
    series_to_density,
)
from .errors import BooksortError, CapacityError, NotMixedError, PlanError
from .files import ParseError, load_document
from .graphio import build_graph, to_dot
from .rational import format_rational, parse_rational
from .report import bench_csv_text, render_bench_figure, write_bench_csv
from .series import replay_steps
from .solver import scaling_experiment, solve_bruteforce, solve_dp
from .trees import catalan, enumerate_admissible, generation, plan_to_tree

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_CAPACITY = 3
EXIT_SEMANTIC = 4

COUNT_ENUMERATION_LIMIT = 14


def _emit(document: dict) -> None:
    sys.stdout.write(json.dumps(document, indent=2) + "\n")


def _fail(code: int, message: str) -> int:
    sys.stderr.write(f"booksort: error: {message}\n")
    return code


def _solve(inst, method: str, force: bool):
    if method == "brute":
        return solve_bruteforce(inst, force=force)
    return solve_dp(inst)


def _with_timing(document: dict, args, started: float) -> dict:
    if getattr(args, "timing", False):
        document["timing_ms"] = round((time.perf_counter() - started) * 1000.0, 3)
    return document


def cmd_solve(args) -> int:
    started = time.perf_counter()
    doc = load_document(args.path)
    inst = doc.to_instance()
    solution = _solve(inst, args.method, args.force)
    if args.export_dot:
        graph = build_graph(solution.p, inst)
        with open(args.export_dot, "w", encoding="utf-8") as fh:
            fh.write(to_dot(graph))
    result = {
        "cost": format_rational(solution.cost),
        "parent": list(solution.p.p),
        "depth": list(generation(solution.p).d),
        "method": solution.method,
        "counts": {"nodes_explored": solution.nodes_explored},
    }
    _emit(_with_timing(result, args, started))
    return EXIT_OK


def cmd_count(args) -> int:
    started = time.perf_counter()
    n = args.n
    if n < 1:
        raise ParseError("N", "must be at least 1")
    formula = catalan(n - 1)
    result = {"n": n, "formula": formula}
    if n <= COUNT_ENUMERATION_LIMIT:
        enumerated = sum(1 for _ in enumerate_admissible(n))
        result["enumerated"] = enumerated
        if enumerated != formula:
            raise BooksortError(
                f"enumerated {enumerated} trees but the formula gives {formula}"
            )
    elif args.verify_recurrence:
        raise CapacityError(
            f"--verify-recurrence needs enumeration, which refuses "
            f"N={n} > {COUNT_ENUMERATION_LIMIT}"
        )
    if args.verify_recurrence:
        counts = {m: sum(1 for _ in enumerate_admissible(m)) for m in range(1, n + 1)}
        convolution = sum(counts[j - 1] * counts[n - j + 1] for j in range(2, n + 1))
        result["recurrence_ok"] = convolution == counts[n] if n >= 2 else True
        if not result["recurrence_ok"]:
            raise BooksortError("enumerated counts violate the Catalan recurrence")
    _emit(_with_timing(result, args, started))
    return EXIT_OK


def cmd_validate(args) -> int:
    started = time.perf_counter()
    doc = load_document(args.path)
    if doc.kind not in ("series", "plan"):
        raise ParseError("kind", "validate needs a series or plan document")
    plan = doc.to_series_plan()
    costs, final = replay_steps(plan)
    if not final.is_terminal:
        raise PlanError(None, f"final state {final} is not fully sorted")
    parent = plan_to_tree(plan)
    result = {
        "move_costs": [format_rational(c) for c in costs],
        "cost": format_rational(sum(costs, Fraction(0))),
        "parent": list(parent.p),
        "depth": list(generation(parent).d),
        "moves": len(costs),
    }
    _emit(_with_timing(result, args, started))
    return EXIT_OK


def cmd_mixing(args) -> int:
    started = time.perf_counter()
    doc = load_document(args.path)
    kappa = parse_rational(args.kappa) if args.kappa else doc.kappa
    eps = parse_rational(args.eps) if args.eps else doc.eps
    if kappa is None:
        raise ParseError("kappa", "missing (give --kappa or a kappa field)")
    if eps is None:
        raise ParseError("eps", "missing (give --eps or an eps field)")
    if not 0 < kappa < 1:
        raise ParseError("kappa", f"{kappa} outside (0, 1)")
    if kappa > Fraction(1, 2):
        raise ParseError(
            "kappa",
            f"{kappa} > 1/2 leaves no admissible white-mass window "
            f"(the bracket [kappa*eps, (1-kappa)*eps] is empty)",
        )
    if not 0 < eps <= 1:
        raise ParseError("eps", f"{eps} outside (0, 1]")
    layout = doc.to_series()
    total = layout.total
    rho = series_to_density(layout, total)
    mixed = is_kappa_mixed(rho, kappa, eps)
    m = total_mass(rho)
    s = 1 - m
    inv = Fraction(1) / eps
    floor_inv = inv.numerator // inv.denominator
    result = {
        "mixed": mixed,
        "kappa": format_rational(kappa),
        "eps": format_rational(eps),
        "scale": format_rational(total),
        "m": format_rational(m),
        "mass_lower": format_rational(kappa * eps * floor_inv),
        "mass_upper": format_rational((1 - kappa) * eps * (floor_inv + 1)),
        "mass_bounds_ok": mass_bounds_check(rho, kappa, eps) if mixed else None,
        "lower_bound": format_rational(proof_lower_bound(kappa, eps, s))
        if 0 < eps <= s
        else None,
    }
    _emit(_with_timing(result, args, started))
    if args.assert_mixed and not mixed:
        raise NotMixedError(f"not {kappa}-mixed at scale {eps}")
    return EXIT_OK


def cmd_bench(args) -> int:
    started = time.perf_counter()
    try:
        k_list = [int(part) for part in args.k.split(",") if part.strip()]
    except ValueError as exc:
        raise ParseError("k", f"expected comma-separated integers: {exc}") from exc
    if not k_list or any(k < 1 for k in k_list):
        raise ParseError("k", "need at least one k >= 1")
    rows = scaling_experiment(k_list)
    if args.out:
        write_bench_csv(rows, args.out)
        plot_path = args.plot
        if plot_path:
            render_bench_figure(rows, plot_path)
        result = {
            "k": k_list,
            "rows": len(rows),
            "out": args.out,
            "plot": plot_path,
            "ratio_band": [
                format(min(r.ratio for r in rows), ".12g"),
                format(max(r.ratio for r in rows), ".12g"),
            ],
        }
        _emit(_with_timing(result, args, started))
    else:
        if args.plot:
            render_bench_figure(rows, args.plot)
        sys.stdout.write(bench_csv_text(rows))
    return EXIT_OK


def cmd_export_dot(args) -> int:
    doc = load_document(args.path)
    inst = doc.to_instance()
    solution = _solve(inst, args.method, args.force)
    text = to_dot(build_graph(solution.p, inst))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="booksort",
        description="Exact solver and toolkit for the 1D book-shifting problem.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="minimize sorting cost for an instance")
    solve.add_argument("path", help="instance document (JSON)")
    solve.add_argument("--method", choices=("dp", "brute"), default="dp")
    solve.add_argument("--export-dot", metavar="PATH", default=None)
    solve.add_argument("--force", action="store_true", help="override the brute-force size guard")
    solve.add_argument("--timing", action="store_true")
    solve.set_defaults(handler=cmd_solve)

    count = sub.add_parser("count", help="count admissible trees")
    count.add_argument("n", type=int, metavar="N")
    count.add_argument("--verify-recurrence", action="store_true")
    count.add_argument("--timing", action="store_true")
    count.set_defaults(handler=cmd_count)

    validate = sub.add_parser("validate", help="replay a series plan")
    validate.add_argument("path", help="series/plan document (JSON)")
    validate.add_argument("--timing", action="store_true")
    validate.set_defaults(handler=cmd_validate)

    mixing = sub.add_parser("mixing", help="mixing-scale checks and the lower bound")
    mixing.add_argument("path", help="instance or series document (JSON)")
    mixing.add_argument("--kappa", default=None)
    mixing.add_argument("--eps", default=None)
    mixing.add_argument("--assert-mixed", action="store_true")
    mixing.add_argument("--timing", action="store_true")
    mixing.set_defaults(handler=cmd_mixing)

    bench = sub.add_parser("bench", help="alternating-stack scaling experiment")
    bench.add_argument("--k", default="2,4,8,16,32,64", metavar="K1,K2,...")
    bench.add_argument("--out", metavar="CSV", default=None)
    bench.add_argument("--plot", metavar="FIG", default=None)
    bench.add_argument("--timing", action="store_true")
    bench.set_defaults(handler=cmd_bench)

    export = sub.add_parser("export-dot", help="solve and export the transport graph")
    export.add_argument("path", help="instance document (JSON)")
    export.add_argument("--out", metavar="PATH", default=None)
    export.add_argument("--method", choices=("dp", "brute"), default="dp")
    export.add_argument("--force", action="store_true")
    export.set_defaults(handler=cmd_export_dot)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ParseError as exc:
        return _fail(EXIT_PARSE, str(exc))
    except CapacityError as exc:
        return _fail(EXIT_CAPACITY, str(exc))
    except (PlanError, NotMixedError) as exc:
        return _fail(EXIT_SEMANTIC, str(exc))
    except ValueError as exc:
        return _fail(EXIT_PARSE, str(exc))
    except BooksortError as exc:
        return _fail(EXIT_SEMANTIC, str(exc))
    except OSError as exc:
        return _fail(1, str(exc))


if __name__ == "__main__":
    sys.exit(main())
