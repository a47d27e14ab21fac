"""Command-line front end.

Subcommands: field-info, code, search, tables.  Output is deterministic
byte for byte for a fixed configuration, at any parallelism degree: sweep
results are computed per tower, then emitted in canonical tower order.

Exit codes: 0 success; 1 property failure (A != B, a dichotomy violation, or
--expect-conforming on a nonconforming instance); 2 usage or parameter
errors; 3 budget exhaustion; 4 I/O errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor

from . import checks, codes
from .characters import gauss_sum_table
from .digitsums import digit_expansion
from .errors import BudgetExceededError, TwoWeightError
from .singer import expected_multipliers, multipliers, singer_set
from .tower import build_field_tower

USAGE_EXIT = 2
FAIL_EXIT = 1
BUDGET_EXIT = 3
IO_EXIT = 4


def _json_line(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), sort_keys=False)


def _add_tower_args(p: argparse.ArgumentParser):
    p.add_argument("-p", dest="p", type=int, required=True, help="characteristic (prime)")
    p.add_argument("-m", dest="m0", type=int, default=1, help="degree of F_q over F_p")
    p.add_argument("-k", dest="k", type=int, required=True, help="degree of F_r over F_q")


def _load_config(path: str | None) -> dict:
    if not path:
        return {}
    with open(path) as fh:
        return json.load(fh)


def _merged(args: argparse.Namespace, cfg: dict, name: str, default=None):
    """Flags win over the config file; the file wins over defaults."""
    val = getattr(args, name, None)
    if val is not None:
        return val
    if name in cfg:
        return cfg[name]
    return default


def cmd_field_info(args, cfg) -> int:
    tower = build_field_tower(args.p, args.m0, args.k)
    desc = tower.descriptor()
    desc["gamma_order"] = tower.n1
    if args.format == "json":
        print(_json_line(desc))
    else:
        for key, val in desc.items():
            print(f"{key}: {val}")
    return 0


def cmd_code(args, cfg) -> int:
    tower = build_field_tower(args.p, args.m0, args.k)
    budget = _merged(args, cfg, "budget")
    rpt = checks.check_main(tower, args.a1, args.a2)
    spec = codes.TwoZeroCodeSpec(tower, args.a1, args.a2, rpt.n)
    dist = codes.weight_distribution(spec, budget=budget)
    projective, witness = codes.is_projective(spec)
    rpt.weights = dist.to_json_dict()
    rpt.projective = projective
    rpt.projective_witness = witness
    rpt.two_weight = dist.is_two_weight()
    rpt.in_a = bool(projective and rpt.two_weight)
    rpt.in_b = rpt.verdict == "conforming"

    g = math.gcd(math.gcd(rpt.a1, rpt.a2), tower.q - 1)
    vega = []
    for ell in range(1, g + 1):
        if g % ell == 0:
            vega.append(checks.check_vega(tower, args.a1, args.a2, ell))

    if args.format == "json":
        out = rpt.to_json_dict()
        out["vega"] = [v.to_json_dict() for v in vega]
        print(_json_line(out))
    elif args.format == "csv":
        print("q,k,a1,a2,n,verdict,projective,two_weight,weights")
        wstr = "|".join(f"{w}:{c}" for w, c in sorted(dist.counts.items()))
        print(
            f"{tower.q},{tower.k},{rpt.a1},{rpt.a2},{rpt.n},{rpt.verdict},"
            f"{projective},{rpt.two_weight},{wstr}"
        )
    else:
        print(f"tower: q={tower.q} r={tower.r} delta={tower.delta}")
        print(f"pair: a1={rpt.a1} a2={rpt.a2} n={rpt.n}")
        print(f"verdict: {rpt.verdict}")
        for name, ok in rpt.conditions.items():
            print(f"  {name}: {ok}")
        print(f"derived: {rpt.derived}")
        print(f"weights: {dist.to_json_dict()['weights']}")
        print(f"projective: {projective}  witness: {witness}")
        for v in vega:
            print(f"vega ell={v.derived['ell']}: {v.verdict}")
    if args.expect_conforming and rpt.verdict != "conforming":
        return FAIL_EXIT
    return 0


def _search_one_tower(params) -> tuple[tuple, list[str], bool]:
    p, m0, k, budget = params
    tower = build_field_tower(p, m0, k)
    res = checks.search_second_type(tower, budget=budget)
    lines = [_json_line(r.to_json_dict()) for r in res.reports]
    return (tower.q, k, p, m0), lines, res.a_equals_b


def sweep_towers(q_max: int, k_max: int, r_cap: int) -> list[tuple[int, int, int]]:
    """(p, m0, k) with 2 < q <= q_max prime power, 2 <= k <= k_max, r <= r_cap."""
    out = []
    for q in range(3, q_max + 1):
        fac = _prime_power(q)
        if fac is None:
            continue
        p, m0 = fac
        for k in range(2, k_max + 1):
            if q**k <= r_cap:
                out.append((p, m0, k))
    return out


def _prime_power(q: int) -> tuple[int, int] | None:
    for p in range(2, q + 1):
        if q % p == 0:
            m0 = 0
            x = q
            while x % p == 0:
                x //= p
                m0 += 1
            return (p, m0) if x == 1 else None
    return None


def cmd_search(args, cfg) -> int:
    budget = _merged(args, cfg, "budget")
    if args.dichotomy:
        if args.p is None or args.k is None or args.n is None:
            print("search --dichotomy requires -p, -k, -n", file=sys.stderr)
            return USAGE_EXIT
        tower = build_field_tower(args.p, args.m0, args.k)
        if tower.n1 % args.n:
            print(f"n = {args.n} does not divide r - 1 = {tower.n1}", file=sys.stderr)
            return USAGE_EXIT
        rep = checks.wolfmann_dichotomy(tower, args.n, args.dim_cap, budget=budget)
        payload = {
            "tower": rep.tower,
            "n": rep.n,
            "dim_cap": rep.dim_cap,
            "codes_checked": rep.codes_checked,
            "findings": [f.to_json_dict() for f in rep.findings],
            "violations": [f.to_json_dict() for f in rep.violations],
        }
        if args.format == "json":
            print(_json_line(payload))
        else:
            print(f"dichotomy q={tower.q} n={rep.n}: {rep.codes_checked} codes checked")
            for f in rep.findings:
                print(f"  {f.coset_reps} -> {f.classification}")
            print(f"violations: {len(rep.violations)}")
        return 0 if rep.ok else FAIL_EXIT

    q_max = _merged(args, cfg, "q_max", 9)
    k_max = _merged(args, cfg, "k_max", 3)
    r_cap = _merged(args, cfg, "r_cap", 1 << 13)
    jobs = _merged(args, cfg, "jobs", 1)
    towers = sweep_towers(q_max, k_max, r_cap)
    params = [(p, m0, k, budget) for (p, m0, k) in towers]
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_search_one_tower, params))
    else:
        results = [_search_one_tower(prm) for prm in params]
    results.sort(key=lambda item: item[0])
    all_ok = True
    counts = []
    for key, lines, ok in results:
        all_ok &= ok
        counts.append((key, len(lines), ok))
        if args.format == "json":
            for line in lines:
                print(line)
    if args.format != "json":
        for (q, k, p, m0), npairs, ok in counts:
            print(f"q={q} k={k}: {npairs} pairs, A=B: {ok}")
    print(
        f"# A=B on all towers: {all_ok}",
        file=sys.stderr if args.format == "json" else sys.stdout,
    )
    return 0 if all_ok else FAIL_EXIT


def cmd_tables(args, cfg) -> int:
    tower = build_field_tower(args.p, args.m0, args.k)
    lines: list[str] = []
    if args.what == "gauss":
        G = gauss_sum_table(tower)
        lines.append("index,re,im,modulus")
        for i, z in enumerate(G):
            lines.append(f"{i},{z.real:.12e},{z.imag:.12e},{abs(z):.12e}")
    elif args.what == "singer":
        D = singer_set(tower)
        payload = {
            "delta": tower.delta,
            "D": list(D.indices),
            "multipliers": list(multipliers(tower)),
            "expected_multipliers": list(expected_multipliers(tower)),
        }
        lines.append(_json_line(payload))
    elif args.what == "digits":
        if args.a is None:
            print("tables digits requires --a", file=sys.stderr)
            return USAGE_EXIT
        de = digit_expansion(tower, args.a)
        lines.append("a,L,digits,s")
        lines.append(f"{de.a},{de.L},{'|'.join(map(str, de.digits))},{de.s}")
    text = "\n".join(lines) + "\n"
    if args.out:
        try:
            with open(args.out, "w") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"cannot write {args.out}: {exc}", file=sys.stderr)
            return IO_EXIT
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="twoweight",
        description="Two-weight projective cyclic codes: checkers, searches, tables",
    )
    ap.add_argument("--config", help="JSON config file; flags win over file values")
    sub = ap.add_subparsers(dest="command", required=True)

    p_info = sub.add_parser("field-info", help="print tower parameters")
    _add_tower_args(p_info)
    p_info.add_argument("--format", choices=["table", "json"], default="table")

    p_code = sub.add_parser("code", help="full report for one (a1, a2) pair")
    _add_tower_args(p_code)
    p_code.add_argument("--a1", type=int, required=True)
    p_code.add_argument("--a2", type=int, required=True)
    p_code.add_argument("--format", choices=["table", "json", "csv"], default="table")
    p_code.add_argument("--expect-conforming", action="store_true")
    p_code.add_argument("--budget", type=int)

    p_search = sub.add_parser("search", help="exhaustive searches")
    p_search.add_argument("-p", dest="p", type=int)
    p_search.add_argument("-m", dest="m0", type=int, default=1)
    p_search.add_argument("-k", dest="k", type=int)
    p_search.add_argument("-n", dest="n", type=int)
    p_search.add_argument("--dichotomy", action="store_true")
    p_search.add_argument("--dim-cap", type=int)
    p_search.add_argument("--q-max", dest="q_max", type=int)
    p_search.add_argument("--k-max", dest="k_max", type=int)
    p_search.add_argument("--r-cap", dest="r_cap", type=int)
    p_search.add_argument("--jobs", type=int)
    p_search.add_argument("--budget", type=int)
    p_search.add_argument("--format", choices=["table", "json"], default="table")

    p_tab = sub.add_parser("tables", help="emit Gauss-sum, Singer, digit tables")
    p_tab.add_argument("what", choices=["gauss", "singer", "digits"])
    _add_tower_args(p_tab)
    p_tab.add_argument("--a", type=int)
    p_tab.add_argument("-o", "--out", help="output path (default stdout)")
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return USAGE_EXIT if exc.code else 0
    try:
        cfg = _load_config(args.config)
    except OSError as exc:
        print(f"cannot read config: {exc}", file=sys.stderr)
        return IO_EXIT
    try:
        if args.command == "field-info":
            return cmd_field_info(args, cfg)
        if args.command == "code":
            return cmd_code(args, cfg)
        if args.command == "search":
            return cmd_search(args, cfg)
        if args.command == "tables":
            return cmd_tables(args, cfg)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return BUDGET_EXIT
    except TwoWeightError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    print("unknown command", file=sys.stderr)
    return USAGE_EXIT


if __name__ == "__main__":
    sys.exit(main())
