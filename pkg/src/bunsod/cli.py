"""Command-line front end: ``bunsod <subcommand> [options] [--json] [--out FILE]``.

Every subcommand prints a plain table by default. With ``--json`` it emits
one canonical object ``{"command", "params", "result"}`` (sorted keys, so
re-serialising parsed output is byte-identical). Integers beyond 2**53 are
written as decimal strings; the only floats are the trigonometric
cross-check values, which sit next to ``"approx": true``.

Exit codes: 0 success, 1 a check subcommand reported failure, 2 usage or
range error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import alcove, bwb, checks, coinv, fusion, liecore, sod

_SAFE_INT = 2**53


class UsageError(Exception):
    pass


def _weight(text: str) -> int | tuple[int, ...]:
    parts = [int(p) for p in text.split(",")]
    return parts[0] if len(parts) == 1 else tuple(parts)


def _exact(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, float)):
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) > _SAFE_INT else obj
    if isinstance(obj, dict):
        return {str(k): _exact(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_exact(v) for v in obj]
    return str(obj)


def dumps(payload: dict) -> str:
    return json.dumps(_exact(payload), sort_keys=True, indent=2, ensure_ascii=False)


def _table(result: Any, indent: str = "") -> list[str]:
    lines = []
    if isinstance(result, dict):
        width = max((len(str(k)) for k in result), default=0)
        for key, value in result.items():
            if isinstance(value, (dict, list)) and value and not _flat(value):
                lines.append(f"{indent}{key}:")
                lines.extend(_table(value, indent + "  "))
            else:
                lines.append(f"{indent}{str(key).ljust(width)}  {_cell(value)}")
    elif isinstance(result, list):
        for item in result:
            if isinstance(item, dict) and _flat(item):
                lines.append(indent + "  ".join(f"{k}={_cell(v)}" for k, v in item.items()))
            else:
                lines.extend(_table(item, indent) if isinstance(item, (dict, list)) else [indent + _cell(item)])
    else:
        lines.append(indent + _cell(result))
    return lines


def _flat(value) -> bool:
    items = value.values() if isinstance(value, dict) else value
    return all(not isinstance(v, (dict, list)) or (isinstance(v, list) and _flat(v)) for v in items)


def _cell(value) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, list):
        return "[" + ", ".join(_cell(v) for v in value) + "]"
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {_cell(v)}" for k, v in value.items()) + "}"
    return str(value)


def cmd_alcove(args) -> tuple[dict, bool]:
    lam = args.weight
    rank = 1 if isinstance(lam, int) else len(lam)
    if args.rank is not None and args.rank != rank:
        raise UsageError(f"--rank {args.rank} but the weight has {rank} Dynkin labels")
    method = args.method or ("closed" if rank == 1 else "residue")
    t = liecore.GroupType("A", rank)
    if method == "closed":
        if rank != 1:
            raise UsageError("the closed form only covers SL2 (rank 1)")
        res = alcove.classify_sl2(args.level, lam)
    elif method == "residue":
        res = alcove.classify_typeA(rank, args.level, lam)
    else:
        res = alcove.classify_bfs(t, args.level, lam, args.radius)
    out = res.to_dict()
    out["method"] = method
    if method == "bfs" and res.regular:
        out["word"] = list(res.word)
    return out, True


def cmd_bwb(args) -> tuple[dict, bool]:
    ans = bwb.cohomology(args.level, args.genus, args.insert, args.xi)
    return ans.to_dict(), True


def cmd_verlinde(args) -> tuple[dict, bool]:
    out: dict = {"dim": fusion.verlinde_dim(args.level, args.genus, args.insert)}
    if args.trig:
        out["trig"] = {
            "value": fusion.verlinde_dim_trig(args.level, args.genus, args.insert),
            "approx": True,
        }
    return out, True


def cmd_fusion(args) -> tuple[dict, bool]:
    k = args.level
    if args.coefficient:
        a, b, c = args.coefficient
        return {"coefficient": fusion.fusion_coefficient(k, a, b, c)}, True
    ring = fusion.fusion_ring(k)
    labels = [args.label] if args.label is not None else list(ring.labels)
    mats = {str(a): [[int(x) for x in row] for row in ring.N(a)] for a in labels}
    return {"level": k, "matrices": mats}, True


def cmd_tensor(args) -> tuple[dict, bool]:
    if args.power is not None:
        if args.power < 0:
            raise UsageError("--power must be nonnegative")
        parts = liecore.tensor_power_multiplicities(args.power)
        ch = liecore.tensor_power_character(args.power)
    else:
        if args.a is None or args.b is None:
            raise UsageError("give both --a and --b, or --power")
        ca, cb = liecore.irrep_character(args.a), liecore.irrep_character(args.b)
        parts = liecore.tensor_decompose(ca, cb)
        ch = ca * cb
    return {
        "decomposition": {str(m): k for m, k in parts.items()},
        "dim": ch.dim,
        "central_parity": liecore.central_parity(ch),
    }, True


def cmd_coinv(args) -> tuple[dict, bool]:
    m = args.m
    if args.what == "hilbert":
        return {"hilbert": coinv.coinvariant_hilbert(m), "q_factorial": coinv.q_factorial(m)}, True
    if args.what == "R":
        module = coinv.graded_character_R(m, args.grading)
        return {"grading": args.grading, "pieces": module.to_dict()}, True
    if args.what == "S":
        ch = coinv.character_S(m, args.model)
        return {
            "model": args.model,
            "decomposition": {str(k): v for k, v in liecore.decompose(ch).items()},
            "dim": ch.dim,
        }, True
    return {"generated": coinv.gtgen_check(m)}, True


def _linear_predicate(spec: str):
    # "a,b,c,d": keep (l, nvec) with a*l + b*sum(nvec) + c*g + d > 0
    try:
        a, b, c, d = (int(x) for x in spec.split(","))
    except ValueError:
        raise UsageError("--inequality takes four integers a,b,c,d") from None
    return lambda l, nvec, g: a * l + b * sum(nvec) + c * g + d > 0


def cmd_blocks(args) -> tuple[dict, bool]:
    t = liecore.GroupType.parse(args.group)
    predicate = _linear_predicate(args.inequality) if args.inequality else None
    table = sod.enumerate_blocks(
        args.variant, t, args.genus, n_cap=args.n_cap, xi=args.xi, predicate=predicate
    )
    out = table.to_dict()
    out["dual_coxeter"] = liecore.dual_coxeter(t)
    return out, True


def cmd_hh_check(args) -> tuple[dict, bool]:
    report = sod.hh_additivity_check(args.genus)
    return report.to_dict(), report.passed


def cmd_homs(args) -> tuple[dict, bool]:
    m, n = args.m, args.n
    out: dict = {"parity_obstruction": bwb.hom_parity_obstruction(m, n)}
    if not out["parity_obstruction"]:
        lo, hi = bwb.hom_amplitude(m, n)
        out["amplitude"] = [lo, hi]
        out["enumerated_max_length"] = bwb.max_regular_length(m, n)
        if m > n:
            out["certificate"] = bwb.semiorthogonality_certificate(m, n).to_dict()
    return out, True


def cmd_verify_all(args) -> tuple[dict, bool]:
    results = checks.run_all()
    ok = all(r.passed for r in results)
    if not args.json:
        for r in results:
            print(r.line())
        return {"pass": ok}, ok
    return {"criteria": [r.to_dict() for r in results], "pass": ok}, ok


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bunsod",
        description="Exact computations around the derived category of Bun_2^L: alcoves, "
        "loop-group Borel-Weil-Bott, Verlinde numbers, coinvariants and SOD blocks.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit canonical JSON")
    common.add_argument("--out", metavar="FILE", help="also write the output to FILE")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        p.set_defaults(func=func)
        return p

    p = add(
        "alcove",
        cmd_alcove,
        "Affine Weyl alcove class of lambda+rho at shifted level c+h^vee: "
        "singular, or regular with length l(V) and reduced weight V^sm.",
    )
    p.add_argument("--level", type=int, required=True, help="level c >= 0")
    p.add_argument("--weight", type=_weight, required=True, help="highest weight; comma-separated Dynkin labels for SL_{r+1}")
    p.add_argument("--rank", type=int, help="rank r of SL_{r+1} (inferred from --weight)")
    p.add_argument("--method", choices=("closed", "residue", "bfs"), help="closed form (SL2), residue algorithm or reflection search")
    p.add_argument("--radius", type=int, help=f"search radius for bfs (default ${alcove.BFS_RADIUS_ENV} or 64)")

    p = add(
        "bwb",
        cmd_bwb,
        "Borel-Weil-Bott for loop groups: cohomology of L^c (x) V on Bun_SL2^xi "
        "(vanishing, or degree sum l(V_i) with Verlinde dimension).",
    )
    p.add_argument("--level", type=int, required=True, help="level c > -2h^vee = -4")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--insert", type=int, nargs="*", default=[], help="insertion highest weights")
    p.add_argument("--xi", type=int, default=0, choices=(0, 1), help="parity of the twisting gerbe")

    p = add("verlinde", cmd_verlinde, "Verlinde dimension of level-k SL2 conformal blocks on a genus-g curve.")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--insert", type=int, nargs="*", default=[], help="integrable labels 0..k")
    p.add_argument("--trig", action="store_true", help="add the S-matrix cross-check value")

    p = add("fusion", cmd_fusion, "Level-k SL2 fusion ring: fusion matrices N_a or single coefficients.")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--label", type=int, help="only print N_a for this label")
    p.add_argument("--coefficient", type=int, nargs=3, metavar=("A", "B", "C"))

    p = add("tensor", cmd_tensor, "Clebsch-Gordan decomposition of SL2 tensor products, e.g. R_m = V^{(x)m}.")
    p.add_argument("--a", type=int, help="highest weight of the first factor")
    p.add_argument("--b", type=int, help="highest weight of the second factor")
    p.add_argument("--power", type=int, help="decompose V^{(x)m} instead")

    p = add(
        "coinv",
        cmd_coinv,
        "Coinvariant algebra of S_m and the graded modules R_m, S_n built from V[t].",
    )
    p.add_argument("--m", type=int, required=True, help="number of tensor factors (m or n)")
    p.add_argument("--what", choices=("hilbert", "R", "S", "gen"), default="hilbert")
    p.add_argument("--grading", choices=("coinvariant", "filtration"), default="coinvariant")
    p.add_argument("--model", choices=coinv.S_MODELS, default="quotient-by-t")

    p = add(
        "blocks",
        cmd_blocks,
        "Blocks L^k (x) D^b(Sym^n X) of the semiorthogonal decompositions of Bun_G^xi, "
        "its stable locus and coarse moduli.",
    )
    p.add_argument("--variant", choices=sod.VARIANTS, required=True)
    p.add_argument("--group", default="A1", help="Cartan type such as A1, A2, G2")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--n-cap", type=int, help="largest n for the infinite variants")
    p.add_argument("--xi", type=int, help="twisting class (defaults to 1 on stable loci)")
    p.add_argument(
        "--inequality",
        metavar="A,B,C,D",
        help="conjecture variant: keep a*l + b*|n| + c*g + d > 0 (coarse version)",
    )

    p = add(
        "hh-check",
        cmd_hh_check,
        "Hochschild homology of the coarse moduli of rank-2 odd bundles vs. the sum over "
        "its Sym^n X blocks.",
    )
    p.add_argument("--genus", type=int, required=True, help=f"genus {sod.MODULI_GENUS[0]}..{sod.MODULI_GENUS[1]}")

    p = add(
        "homs",
        cmd_homs,
        "Hom(E_m, E_n) bookkeeping: central-character parity, amplitude [0,(m+n)/2] and "
        "the diagonal-codimension certificate.",
    )
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    add("verify-all", cmd_verify_all, "Run every acceptance criterion; nonzero exit on any failure.")
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    params = {
        k: v
        for k, v in vars(args).items()
        if k not in ("func", "command", "json", "out") and v is not None
    }
    try:
        result, ok = args.func(args)
    except (UsageError, ValueError, NotImplementedError, alcove.SearchBoundExceeded) as exc:
        print(f"bunsod {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        text = dumps({"command": args.command, "params": params, "result": result})
    else:
        text = "\n".join(_table(_exact(result)))
    print(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    return 0 if ok else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
