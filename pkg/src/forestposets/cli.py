"""Command-line front end.

Subcommands:

* invariants LOWER UPPER  - chi (factored and expanded), exponents,
  Mobius number, M, Z and Card of the interval; --method picks the
  fast decomposition engine, brute force, or both with agreement.
* hasse LOWER UPPER       - DOT rendering of the interval.
* verify                  - run the self-verification suites.
* enumerate               - list trees or forests on given labels.

Exit codes: 0 success, 1 usage or input error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field

from .decomposition import chi_fast, exponents, m_fast, mobius_fast, z_fast
from .forests import enumerate_forests, enumerate_trees, format_forest, format_tree, parse_forest
from .invariants import (cardinal_polynomial, characteristic_polynomial,
                         m_polynomial, mobius_number, z_polynomial)
from .order import interval, leq, marked_pair
from .polynomials import UnivariatePolynomial
from .verification import run_verification

USAGE_ERROR, VERIFICATION_ERROR = 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


@dataclass
class RunReport:
    """Deterministic record of one command run (timings excepted)."""

    subject: dict
    invariants: dict = field(default_factory=dict)
    agreement: dict | None = None
    timings: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"subject": self.subject, **self.invariants,
                "agreement": self.agreement, "timings": self.timings}


def factored_chi(exps) -> str:
    """Rendered root factorization, e.g. (y - 1)^2(y - 4)."""
    if not exps:
        return "1"
    out = []
    for root in sorted(set(exps)):
        mult = exps.count(root)
        out.append(f"(y - {root})" + (f"^{mult}" if mult > 1 else ""))
    return "".join(out)


def _invariants_report(lower, upper, method) -> RunReport:
    pair = marked_pair(lower, upper)
    exps = list(exponents(pair))
    values = {}
    timings = {}
    if method in ("fast", "both"):
        start = time.perf_counter()
        values["fast"] = {
            "chi": chi_fast(pair), "mobius": mobius_fast(pair),
            "m": m_fast(pair), "z": z_fast(pair),
        }
        timings["fast_ms"] = round((time.perf_counter() - start) * 1000, 3)
    if method in ("brute", "both"):
        start = time.perf_counter()
        poset = interval(lower, upper)
        values["brute"] = {
            "chi": characteristic_polynomial(poset), "mobius": mobius_number(poset),
            "m": m_polynomial(poset), "z": z_polynomial(poset),
            "card": cardinal_polynomial(poset),
        }
        timings["brute_ms"] = round((time.perf_counter() - start) * 1000, 3)
    shown = values.get("fast", values.get("brute"))
    card = (values["brute"]["card"] if "brute" in values
            else _card_from_z(values["fast"]["z"]))
    agreement = None
    if method == "both":
        agreement = {key: values["fast"][key] == values["brute"][key]
                     for key in ("m", "z", "chi", "mobius")}
    report = RunReport(
        subject={"lower": format_forest(lower), "upper": format_forest(upper),
                 "degree": pair.degree, "method": method},
        invariants={
            "chi_factored": factored_chi(exps),
            "chi_coeffs": shown["chi"].to_pairs(),
            "exponents": exps,
            "mobius": shown["mobius"],
            "m_poly": shown["m"].to_triples(),
            "z_poly": shown["z"].to_triples(),
            "card": card.to_pairs(),
        },
        agreement=agreement,
        timings=timings)
    report.invariants["_display"] = {
        "chi": str(shown["chi"]), "m": str(shown["m"]),
        "z": str(shown["z"]), "card": str(card)}
    return report


def _card_from_z(z):
    """Card(x) = Z(x, 0): the pairs (a, top) enumerate every element once."""
    return UnivariatePolynomial(
        {i: c for (i, j), c in z.coeffs.items() if j == 0}, var="x")


def cmd_invariants(args) -> int:
    lower = parse_forest(args.lower)
    upper = parse_forest(args.upper)
    if not leq(lower, upper):
        print(f"error: {args.lower} is not below {args.upper}", file=sys.stderr)
        return USAGE_ERROR
    report = _invariants_report(lower, upper, args.method)
    if args.json:
        payload = report.to_json()
        payload.pop("_display", None)
        print(json.dumps(payload, sort_keys=True))
        return 0
    display = report.invariants["_display"]
    print(f"lower:     {report.subject['lower']}")
    print(f"upper:     {report.subject['upper']}")
    print(f"degree:    {report.subject['degree']}")
    print(f"chi:       {report.invariants['chi_factored']} = {display['chi']}")
    exps = report.invariants["exponents"]
    print(f"exponents: {', '.join(map(str, exps)) if exps else '(none)'}")
    print(f"mobius:    {report.invariants['mobius']}")
    print(f"M:         {display['m']}")
    print(f"Z:         {display['z']}")
    print(f"Card:      {display['card']}")
    if report.agreement is not None:
        verdict = ("fast and brute force agree" if all(report.agreement.values())
                   else "DISAGREEMENT: " + ", ".join(
                       k for k, ok in report.agreement.items() if not ok))
        print(f"agreement: {verdict}")
    timing = ", ".join(f"{k[:-3]} {v} ms" for k, v in report.timings.items())
    print(f"timings:   {timing}")
    return 0 if report.agreement is None or all(report.agreement.values()) else VERIFICATION_ERROR


def cmd_hasse(args) -> int:
    lower = parse_forest(args.lower)
    upper = parse_forest(args.upper)
    if not leq(lower, upper):
        print(f"error: {args.lower} is not below {args.upper}", file=sys.stderr)
        return USAGE_ERROR
    print(interval(lower, upper).to_dot())
    return 0


def cmd_verify(args) -> int:
    results = run_verification(max_labels=args.max_labels, seed=args.seed)
    all_passed = all(r.passed for r in results)
    if args.json:
        payload = {
            "subject": {"max_labels": args.max_labels, "seed": args.seed},
            "checks": [{"name": r.name, "passed": r.passed, "detail": r.detail,
                        "millis": round(r.millis, 3)} for r in results],
            "passed": all_passed,
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"verification up to {args.max_labels} labels (seed {args.seed})")
        for r in results:
            mark = "PASS" if r.passed else "FAIL"
            print(f"  [{mark}] {r.name}: {r.detail} ({r.millis:.0f} ms)")
        print("all checks passed" if all_passed else "verification FAILED")
    return 0 if all_passed else VERIFICATION_ERROR


def cmd_enumerate(args) -> int:
    labels = [lab for lab in args.labels.split(",") if lab]
    if len(set(labels)) != len(labels):
        print("error: duplicate labels", file=sys.stderr)
        return USAGE_ERROR
    if args.what == "trees":
        lines = [format_tree(t) for t in enumerate_trees(labels)]
    else:
        lines = [format_forest(f) for f in enumerate_forests(labels)]
    for line in lines:
        print(line)
    print(f"count: {len(lines)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="forestposets",
                     description="Posets of leaf-labeled rooted binary forests.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="interval invariants for lower <= upper")
    p.add_argument("lower")
    p.add_argument("upper")
    p.add_argument("--method", choices=("fast", "brute", "both"), default="both")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_invariants)

    p = sub.add_parser("hasse", help="DOT Hasse diagram of an interval")
    p.add_argument("lower")
    p.add_argument("upper")
    p.add_argument("--format", choices=("dot",), default="dot")
    p.set_defaults(fn=cmd_hasse)

    p = sub.add_parser("verify", help="run the self-verification suites")
    p.add_argument("--max-labels", type=int, default=4, choices=range(2, 7),
                   metavar="N")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("enumerate", help="list all trees or forests on labels")
    p.add_argument("--labels", required=True, help="comma-separated labels")
    p.add_argument("--what", choices=("trees", "forests"), default="forests")
    p.set_defaults(fn=cmd_enumerate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        return args.fn(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
