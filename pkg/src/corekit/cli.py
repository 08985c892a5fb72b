"""Command-line front end: diagram and abacus rendering, traces, verification
sweeps, and core enumeration.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 refusal
because the requested family is infinite.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import abacus as ab
from . import bijection as bj
from . import catalan as ct
from . import simulcores as sc
from .partitions import Partition, format_exponential
from .render import DEFAULT_GLYPHS, RenderConfig, abacus_lines, labeled_lines, young_lines

DEFAULT_SEED = 12345
SUITES = ("theorem3", "theorem6", "remarks", "bijection", "eq1", "maximal")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="corekit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kappa", help="render a maximal core for level k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--family", choices=("pair", "triple"), required=True)
    p.add_argument("--format", choices=("ascii", "json"), default="ascii")

    p = sub.add_parser("abacus", help="render the triple-core abacus for level k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", choices=("ascii", "json"), default="ascii")

    p = sub.add_parser("bijection", help="labeled dissection diagram or cell-map trace")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=("labels", "trace"), default="labels")
    p.add_argument("--unicode", action="store_true", help="draw the first region with a bullet")

    p = sub.add_parser("verify", help="run verification sweeps")
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--suites", nargs="+", choices=SUITES, default=list(SUITES))
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)

    p = sub.add_parser("enumerate", help="list all simultaneous cores for the given moduli")
    p.add_argument("moduli", type=int, nargs="+")
    p.add_argument("--all", action="store_true", help="print every core, one per line")
    p.add_argument("--format", choices=("ascii", "json"), default="ascii")

    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handlers = {
        "kappa": _cmd_kappa,
        "abacus": _cmd_abacus,
        "bijection": _cmd_bijection,
        "verify": _cmd_verify,
        "enumerate": _cmd_enumerate,
    }
    return handlers[args.command](args)


def entry() -> None:
    sys.exit(main())


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _print_diagram(lines: list[str]) -> None:
    if not lines:
        print("(empty)")
    else:
        for line in lines:
            print(line)


def _cmd_kappa(args) -> int:
    if args.k < 1:
        return _usage_error(f"k must be >= 1, got {args.k}")
    lam = ct.kappa_pair(args.k) if args.family == "pair" else ct.kappa_triple(args.k)
    if args.format == "json":
        print(json.dumps(lam.to_json(), separators=(",", ":")))
        return 0
    _print_diagram(young_lines(lam))
    print(f"size={lam.size}")
    return 0


def _cmd_abacus(args) -> int:
    if args.k < 2:
        return _usage_error(f"k must be >= 2, got {args.k}")
    abacus = ct.kappa_triple_abacus(args.k)
    if args.format == "json":
        print(json.dumps(abacus.to_json(), separators=(",", ":")))
        return 0
    for line in abacus_lines(abacus):
        print(line)
    return 0


def _cmd_bijection(args) -> int:
    if args.k < 1:
        return _usage_error(f"k must be >= 1, got {args.k}")
    if args.mode == "trace":
        print(json.dumps(bj.build_bijection(args.k).to_json(), separators=(",", ":")))
        return 0
    glyphs = dict(DEFAULT_GLYPHS)
    if args.unicode:
        glyphs[bj.PART1] = "•"
    config = RenderConfig(glyphs=glyphs)
    lam = ct.kappa_triple(args.k)
    labels = bj.label_rows(args.k).labels
    _print_diagram(labeled_lines(lam, labels, config.glyphs))
    return 0


def _cmd_enumerate(args) -> int:
    try:
        spec = sc.CoreFamilySpec(args.moduli)
    except ValueError as exc:
        return _usage_error(str(exc))
    if not sc.has_finitely_many(spec):
        print(f"infinitely many simultaneous cores (gcd={spec.gcd})", file=sys.stderr)
        return 3
    try:
        report = sc.enumeration_report(spec)
    except (sc.EnumerationBoundError, ValueError) as exc:
        return _usage_error(str(exc))
    if args.format == "json":
        print(json.dumps(report, separators=(",", ":")))
        return 0
    cores = sc.enumerate_cores(spec)
    maxima = [c for c in cores if c.size == report["max_size"]]
    rendered = ",".join(format_exponential(c) for c in maxima)
    key = "max_core" if len(maxima) == 1 else "max_cores"
    print(f"count={report['count']} max_size={report['max_size']} {key}={rendered}")
    if args.all:
        for core in cores:
            print(format_exponential(core))
    return 0


def _cmd_verify(args) -> int:
    if args.k_max < 1:
        return _usage_error(f"k-max must be >= 1, got {args.k_max}")
    runners = {
        "theorem3": lambda: _suite_theorem3(args.k_max),
        "theorem6": lambda: _suite_theorem6(args.k_max),
        "remarks": lambda: _suite_remarks(args.k_max),
        "bijection": lambda: _suite_bijection(args.k_max),
        "eq1": lambda: _suite_eq1(args.seed),
        "maximal": lambda: _suite_maximal(args.k_max),
    }
    all_ok = True
    for name in SUITES:
        if name not in args.suites:
            continue
        passed, total = runners[name]()
        ok = passed == total
        all_ok &= ok
        print(f"{name}: {passed}/{total} {'PASS' if ok else 'FAIL'}")
    return 0 if all_ok else 1


def _suite_theorem3(k_max: int) -> tuple[int, int]:
    passed = sum(1 for k in range(1, k_max + 1) if ct.factor_four_check(k))
    return passed, k_max


def _suite_theorem6(k_max: int) -> tuple[int, int]:
    passed = total = 0
    for k in range(2, k_max + 1):
        total += 1
        ok = ct.kappa_triple_abacus(k).partition() == ct.kappa_triple(k)
        if k >= 3:
            ok &= ct.append_step(ct.kappa_triple_abacus(k - 1)) == ct.kappa_triple_abacus(k)
        passed += ok
    return passed, total


def _suite_remarks(k_max: int) -> tuple[int, int]:
    passed = total = 0
    for k in range(2, k_max + 1):
        total += 1
        lam = ct.kappa_pair(k)
        ok = ab.t_core(lam, 2 * k) == Partition(())
        ok &= ab.t_quotient(lam, 2 * k) == ct.pair_quotient(k)
        ok &= lam.size == 2 * k * sum(2 * ct.triangular(j) for j in range(k))
        passed += ok
    return passed, total


def _suite_bijection(k_max: int) -> tuple[int, int]:
    passed = 0
    for k in range(1, k_max + 1):
        report = bj.verify_bijection(bj.build_bijection(k), k)
        ok = report.ok
        ok &= report.region_counts[bj.PART1] == (k - 1) * ct.triangular(k - 1)
        ok &= report.region_counts[bj.PART2] == sum(ct.triangular(j) for j in range(1, k))
        ok &= report.region_counts[bj.PART3] == (ct.kappa_triple_size(k - 1) if k >= 2 else 0)
        passed += ok
    return passed, k_max


def _random_partition(rng: random.Random, max_size: int) -> Partition:
    n = rng.randint(0, max_size)
    parts, prev = [], n
    while n > 0:
        p = rng.randint(1, min(prev, n))
        parts.append(p)
        n -= p
        prev = p
    return Partition(parts)


def _suite_eq1(seed: int) -> tuple[int, int]:
    rng = random.Random(seed)
    passed = total = 0
    for _ in range(200):
        total += 1
        lam = _random_partition(rng, 120)
        t = rng.randint(2, 12)
        core, quotient = ab.t_core(lam, t), ab.t_quotient(lam, t)
        ok = lam.size == core.size + t * sum(q.size for q in quotient)
        ok &= ab.reconstruct(core, quotient, t) == lam
        passed += ok
    for _ in range(40):
        total += 1
        lam = _random_partition(rng, 40)
        t = rng.randint(2, 12)
        expected = ab.t_core(lam, t)
        ok = True
        for _ in range(5):
            ok &= _random_hook_removal(rng, lam, t) == expected
        passed += ok
    return passed, total


def _random_hook_removal(rng: random.Random, lam: Partition, t: int) -> Partition:
    while True:
        cells = [c for c in lam.cells() if lam.hook_length(c) == t]
        if not cells:
            return lam
        lam = ab.remove_one_hook(lam, rng.choice(cells))


def _suite_maximal(k_max: int) -> tuple[int, int]:
    passed = total = 0
    for k in range(2, min(k_max, 12) + 1):
        total += 1
        ok = ct.kappa_pair(k) == sc.maximal_core(2 * k - 1, 2 * k + 1)
        if k <= 4:
            cores = sc.enumerate_cores([2 * k - 1, 2 * k, 2 * k + 1])
            top = max(c.size for c in cores)
            maxima = [c for c in cores if c.size == top]
            ok &= top == ct.kappa_triple_size(k)
            ok &= ct.kappa_triple(k) in maxima
            ok &= len(maxima) == 2 and maxima[0].conjugate() == maxima[1]
        if k == 2:
            bound = sc.enumeration_bound([2 * k - 1, 2 * k, 2 * k + 1])
            ok &= sc.brute_force_cores([2 * k - 1, 2 * k, 2 * k + 1], bound) == cores
        passed += ok
    return passed, total
