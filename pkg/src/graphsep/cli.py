"""Command-line front end.

Subcommands: norms (tensor-norm table), bounds (k-separability bounds),
sweep (noise sweeps as CSV), detect (verdict for a state file), settings
(sufficient local observables), appendix (permutation-count identity),
graph (complete graph as DOT text).

Output is CSV on stdout unless --out is given; comment lines start with
"#"; numeric fields carry 12 significant digits.  Exit codes: 0 success,
1 usage or input error, 2 resource or output error.  Verdicts are
payload, never exit status.
"""

from __future__ import annotations

import argparse
import json
import sys

from .separability import k_sep_bound, threshold_p, xi_noise
from .stabilizer import permutation_count, permutation_terms
from .statefile import StateFileError, load_state_file
from .states import complete_graph
from .tensor import FAMILIES, DenseLimitError, full_tensor, measurement_settings, norm_table, tensor_norm

NON_K_SEPARABLE = "NonKSeparable"
INCONCLUSIVE = "Inconclusive"


def _fmt(v) -> str:
    if isinstance(v, bool):
        raise TypeError("no boolean fields in output")
    if isinstance(v, int):
        return str(v)
    return f"{v:.12g}"


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; remap to 1 per the exit-code contract."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _parse_families(raw: str) -> list[str]:
    families = [f.strip() for f in raw.split(",") if f.strip()]
    if not families:
        raise ValueError("no families given")
    for f in families:
        if f not in FAMILIES:
            raise ValueError(f"unknown family {f!r}; expected one of {FAMILIES}")
    return families


def cmd_norms(args) -> int:
    rows = norm_table(_parse_families(args.families), args.n_min, args.n_max)
    if args.format == "json":
        payload = [
            {"family": fam, "n": n, "norm_sq": norm * norm, "norm": norm}
            for fam, n, norm in rows
        ]
        print(json.dumps(payload, indent=2))
        return 0
    print("family,n,norm_sq,norm")
    for fam, n, norm in rows:
        print(f"{fam},{n},{_fmt(norm * norm)},{_fmt(norm)}")
    return 0


def cmd_bounds(args) -> int:
    n = args.n
    if n < 3:
        raise ValueError(f"bounds table needs n >= 3, got {n}")
    k_min = args.k_min
    k_max = args.k_max if args.k_max is not None else n
    if not 2 <= k_min <= k_max <= n:
        raise ValueError(f"need 2 <= k-min <= k-max <= n, got {k_min}..{k_max} for n={n}")
    print("n,k,bound,partition")
    for k in range(k_min, k_max + 1):
        pb = k_sep_bound(n, k)
        print(f"{n},{k},{_fmt(pb.bound)},{pb.partition_label()}")
    return 0


def cmd_sweep(args) -> int:
    if args.p_steps < 2:
        raise ValueError(f"p-steps must be at least 2, got {args.p_steps}")
    if not 2 <= args.k <= args.n:
        raise ValueError(f"need 2 <= k <= n, got k={args.k}, n={args.n}")
    steps = args.p_steps
    lines = [f"# sweep family={args.family} n={args.n} k={args.k}"]
    thr = threshold_p(args.n, args.k, args.family)
    lines.append(f"# threshold_p={'NA' if thr is None else _fmt(thr)}")
    lines.append("p,norm_sq,bound_sq,xi,verdict")
    for i in range(steps):
        p = i / (steps - 1)
        res = xi_noise(args.n, args.k, p, args.family)
        verdict = NON_K_SEPARABLE if res.xi > 1.0 else INCONCLUSIVE
        lines.append(
            f"{_fmt(p)},{_fmt(res.numerator)},{_fmt(res.denominator)},{_fmt(res.xi)},{verdict}"
        )
    text = "\n".join(lines) + "\n"
    if args.out is None:
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return 0


def cmd_detect(args) -> int:
    try:
        loaded = load_state_file(args.state_file)
    except OSError as exc:
        raise StateFileError(f"cannot read {args.state_file}: {exc}") from None
    n = loaded.n
    if not 2 <= args.k <= n:
        raise ValueError(f"need 2 <= k <= n, got k={args.k} for an n={n} state")
    norm = tensor_norm(full_tensor(loaded.ensemble, args.zero_tol))
    pb = k_sep_bound(n, args.k)
    verdict = NON_K_SEPARABLE if norm > pb.bound else INCONCLUSIVE
    if args.format == "json":
        payload = {
            "n": n,
            "k": args.k,
            "norm": norm,
            "bound": pb.bound,
            "partition": pb.partition_label(),
            "xi": (norm * norm) / (pb.bound * pb.bound),
            "verdict": verdict,
            "p": loaded.p,
        }
        print(json.dumps(payload, indent=2))
        return 0
    print(f"n={n}")
    print(f"k={args.k}")
    print(f"norm={_fmt(norm)}")
    print(f"bound={_fmt(pb.bound)}")
    print(f"partition={pb.partition_label()}")
    print(f"verdict={verdict}")
    return 0


def cmd_settings(args) -> int:
    words = measurement_settings(args.n, args.family, noise=args.noise)
    for word in words:
        print(word.ops)
    print(f"# count={len(words)}")
    return 0


def cmd_appendix(args) -> int:
    n = args.n
    terms = permutation_terms(n)
    total = sum(c for _, c in terms)
    for x, c in terms:
        print(f"C({n},{x}) = {c}")
    s = 1 if n % 2 == 0 else 0
    if s:
        print("all-Y word = 1")
        total += 1
    closed = 2 ** (n - 1) + s
    print(f"sum = {total}")
    print(f"closed form 2^{n - 1} + {s} = {closed}")
    if total != closed or total != permutation_count(n):
        print("MISMATCH", file=sys.stderr)
        return 1
    print("OK")
    return 0


def cmd_graph(args) -> int:
    spec = complete_graph(args.n)
    lines = [f"graph complete_{args.n} {{"]
    for v in range(1, args.n + 1):
        lines.append(f"  {v};")
    for a, b in spec.edges:
        lines.append(f"  {a} -- {b};")
    lines.append("}")
    print("\n".join(lines))
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="graphsep", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("norms", help="tensor-norm table per family and qubit count")
    p.add_argument("--families", default="cg,ghz,w,cluster", help="comma list of cg,ghz,w,cluster")
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_norms)

    p = sub.add_parser("bounds", help="k-separability bounds for one qubit count")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k-min", type=int, default=2)
    p.add_argument("--k-max", type=int, default=None)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("sweep", help="noise sweep of the squared norm against the bound")
    p.add_argument("--family", choices=("cg", "ghz"), default="cg")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--p-steps", type=int, default=11)
    p.add_argument("--out", default=None, help="CSV output path (default stdout)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("detect", help="verdict for a state file against the k-sep bound")
    p.add_argument("--state-file", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--zero-tol", type=float, default=1e-9)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("settings", help="local observables sufficient for the criterion")
    p.add_argument("--family", default="cg")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--noise", action="store_true", help="include the all-Z noise observable")
    p.set_defaults(func=cmd_settings)

    p = sub.add_parser("appendix", help="permutation-count identity check")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_appendix)

    p = sub.add_parser("graph", help="complete graph as DOT text")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("dot",), default="dot")
    p.set_defaults(func=cmd_graph)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (StateFileError, ValueError) as exc:
        print(f"graphsep: error: {exc}", file=sys.stderr)
        return 1
    except (DenseLimitError, OSError, MemoryError) as exc:
        print(f"graphsep: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
