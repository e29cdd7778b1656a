"""Batch driver exposing generation and every verification as subcommands.

Output is JSON (CSV only for quadrature tables) and deterministic byte for
byte for identical flags.  Exit codes: 0 all checks passed, 1 at least one
verification failed, 2 usage error.  Verification failures never abort a
sweep; they are collected into the report.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional

from . import diffops, oracle, ortho, reference
from .cocycle import (
    cocycle as cocycle_of,
    t_pow,
    t_pow_u,
    uu_central_term,
    verify_psi_table,
)
from .exact import RationalPoly
from .families import (
    FamilyId,
    IndexView,
    VIEW_START,
    generate,
    get_family,
    verify_gegenbauer_link,
)

GEN_FAMILIES = {
    "P-4": (FamilyId.P4, IndexView.SHIFTED),
    "P-3": (FamilyId.P3, IndexView.ORIGINAL),
    "P-2": (FamilyId.P2, IndexView.SHIFTED),
    "P-1": (FamilyId.P1, IndexView.ORIGINAL),
    "q": (FamilyId.P4, IndexView.Q),
    "qbar": (FamilyId.P2, IndexView.QBAR),
}

_C = RationalPoly.variable()


class UsageError(SystemExit):
    """Domain-level usage error; exits with the argparse convention code 2."""

    def __init__(self, message: str):
        print(f"error: {message}", file=sys.stderr)
        super().__init__(2)


@dataclass
class RunReport:
    command: str
    parameters: dict
    status: str = "pass"
    items: List[dict] = field(default_factory=list)
    wall_time_ms: int = 0

    def add(self, item: dict) -> None:
        self.items.append(item)

    def finish(self, started: float) -> "RunReport":
        self.wall_time_ms = int((time.perf_counter() - started) * 1000)
        if any(i.get("status") == "fail" for i in self.items):
            self.status = "fail"
        return self

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "parameters": self.parameters,
            "status": self.status,
            "items": self.items,
            "wall_time_ms": self.wall_time_ms,
        }


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _emit_report(report: RunReport, out: Optional[str]) -> int:
    _emit(json.dumps(report.to_json(), indent=2), out)
    return 0 if report.status == "pass" else 1


def _default_threads() -> int:
    try:
        return max(1, int(os.environ.get("DJKM_THREADS", "1")))
    except ValueError:
        return 1


# -- subcommands -------------------------------------------------------------


def _cmd_gen(args) -> int:
    family_id, view = GEN_FAMILIES[args.family]
    if args.view is not None:
        if args.family in ("q", "qbar"):
            raise UsageError(f"--view conflicts with family {args.family}")
        view = IndexView(args.view)
    polys = generate(family_id, view, args.max_n)
    start = VIEW_START[view]
    payload = {
        "family": family_id.value,
        "view": view.value,
        "entries": [
            {"n": start + offset, "poly": poly.to_json()}
            for offset, poly in enumerate(polys)
        ],
    }
    _emit(json.dumps(payload, indent=2), args.out)
    return 0


def _verify_ode_items(family: str, max_n: int, threads: int) -> List[dict]:
    """Per-index residual status; failures carry the residual polynomial."""
    if family in ("P-4", "P-2"):
        fid = FamilyId(family)
        fam = get_family(fid)
        fam.shifted(max_n)  # sequential generation up front
        build = (
            diffops.build_elliptic1_op
            if fid is FamilyId.P4
            else diffops.build_elliptic2_op
        )

        def one(n: int) -> dict:
            member = fam.shifted(n)
            residual = build(n).apply(member)
            item = {
                "n": n,
                "member_zero": member.is_zero(),
                "status": "pass" if residual.is_zero() else "fail",
            }
            if not residual.is_zero():
                item["residual"] = residual.to_json()
            return item

        indices = range(max_n + 1)
    elif family in ("P-1", "P-3"):
        fid = FamilyId(family)
        fam = get_family(fid)
        fam.original(max(2 * max_n - 3, -4))
        build = diffops.build_case3_op if fid is FamilyId.P1 else diffops.build_case4_op
        p3 = get_family(FamilyId.P3)

        def one(n: int) -> dict:
            member = fam.original(2 * n - 3)
            residual = build(n).apply(member)
            ok = residual.is_zero()
            item = {"n": n}
            if fid is FamilyId.P1:
                # the closed forms force P_{-1,2n-3} = c P_{-3,2n-3}
                identity_ok = member == _C * p3.original(2 * n - 3)
                item["identity"] = "pass" if identity_ok else "fail"
                ok = ok and identity_ok
            item["status"] = "pass" if ok else "fail"
            if not residual.is_zero():
                item["residual"] = residual.to_json()
            return item

        indices = range(2, max_n + 1)
    else:
        raise UsageError(f"verify-ode does not apply to family {family}")
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            items = list(pool.map(one, indices))
    else:
        items = [one(n) for n in indices]
    return sorted(items, key=lambda item: item["n"])


def _cmd_verify_ode(args) -> int:
    started = time.perf_counter()
    report = RunReport(
        command="verify-ode",
        parameters={"family": args.family, "max_n": args.max_n, "threads": args.threads},
    )
    for item in _verify_ode_items(args.family, args.max_n, args.threads):
        report.add(item)
    return _emit_report(report.finish(started), args.out)


def _cmd_oracle_compare(args) -> int:
    started = time.perf_counter()
    report = RunReport(
        command="oracle-compare",
        parameters={"family": args.family, "order": args.order},
    )
    if args.family == "P-4":
        pairs = (
            ("elliptic-integral", oracle.expand_elliptic1(args.order)),
            ("gegenbauer-sum", oracle.expand_gegenbauer_sum(args.order)),
        )
    else:
        pairs = (("elliptic-integral", oracle.expand_elliptic2(args.order)),)
    for name, res in pairs:
        item = res.to_json()
        item["oracle"] = name
        item["status"] = "pass" if res.matched else "fail"
        report.add(item)
    return _emit_report(report.finish(started), args.out)


def _cocycle_verify_items(bound: int) -> List[dict]:
    items = []
    psi_report = verify_psi_table(bound)
    item = psi_report.to_json()
    item["check"] = "psi-table"
    item["status"] = "pass" if psi_report.passed else "fail"
    items.append(item)
    uu_ok = True
    anti_ok = True
    for i in range(-bound, bound + 1):
        for j in range(-bound, bound + 1):
            uu = cocycle_of(t_pow_u(i - 1), t_pow_u(j - 1))
            if not (uu - uu_central_term(i, j)).is_zero():
                uu_ok = False
            for f, g in (
                (t_pow(i), t_pow(j)),
                (t_pow_u(i), t_pow(j)),
                (t_pow_u(i), t_pow_u(j)),
            ):
                if not (cocycle_of(f, g) + cocycle_of(g, f)).is_zero():
                    anti_ok = False
    items.append({"check": "uu-central-terms", "status": "pass" if uu_ok else "fail"})
    items.append({"check": "antisymmetry", "status": "pass" if anti_ok else "fail"})
    return items


def _cmd_cocycle(args) -> int:
    started = time.perf_counter()
    if args.verify:
        report = RunReport(command="cocycle", parameters={"verify": True, "bound": args.bound})
        for item in _cocycle_verify_items(args.bound):
            report.add(item)
        return _emit_report(report.finish(started), args.out)
    if args.i is None or args.j is None:
        raise UsageError("cocycle requires --i and --j (or --verify)")
    vec = cocycle_of(t_pow_u(args.i - 1), t_pow(args.j))
    _emit(json.dumps(vec.to_json(), indent=2), args.out)
    return 0


def _cmd_orthogonality(args) -> int:
    started = time.perf_counter()
    report = RunReport(
        command="orthogonality",
        parameters={"family": args.family, "hankel": args.hankel, "gram": args.gram},
    )
    lambdas = ortho.favard_lambdas(max(args.hankel, 8))
    report.add(
        {
            "check": "favard-lambdas",
            "lambda1_sq": str(lambdas[1]),
            "status": "pass"
            if lambdas[1] == Fraction(2, 7) and all(x > 0 for x in lambdas)
            else "fail",
        }
    )
    dets = ortho.hankel(args.family, args.hankel)
    report.add(
        {
            "check": "hankel-positivity",
            "determinants": [str(d) for d in dets],
            "status": "pass" if all(d > 0 for d in dets) else "fail",
        }
    )
    ok = ortho.gram_check(args.family, args.gram)
    report.add({"check": "gram-diagonal", "status": "pass" if ok else "fail"})
    return _emit_report(report.finish(started), args.out)


def _cmd_quadrature(args) -> int:
    nodes, weights = ortho.golub_welsch(args.family, args.nodes)
    if args.json:
        payload = {
            "family": args.family,
            "nodes": [f"{x:.17g}" for x in nodes],
            "weights": [f"{w:.17g}" for w in weights],
        }
        _emit(json.dumps(payload, indent=2), args.out)
    else:
        lines = ["node,weight"]
        lines += [f"{x:.17g},{w:.17g}" for x, w in zip(nodes, weights)]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_nonclassical(args) -> int:
    started = time.perf_counter()
    witness = ortho.nonclassical_check(args.family, args.max_n)
    report = RunReport(
        command="nonclassical",
        parameters={"family": args.family, "max_n": args.max_n},
    )
    item = witness.to_json()
    item["status"] = "pass" if witness.verified else "fail"
    report.add(item)
    return _emit_report(report.finish(started), args.out)


_PROFILES = {
    "desk": {
        "table_n": 12,
        "oracle_order": 120,
        "funde_order": 40,
        "fourth_max": 400,
        "second_max": 200,
        "link_max": 50,
        "cocycle_bound": 12,
        "hankel": 14,
        "gram": 8,
        "nonclassical_max": 6,
        "assoc_max": 50,
        "quad_nodes": 20,
        "quad_deg": 8,
    },
    "quick": {
        "table_n": 12,
        "oracle_order": 40,
        "funde_order": 20,
        "fourth_max": 60,
        "second_max": 40,
        "link_max": 12,
        "cocycle_bound": 6,
        "hankel": 8,
        "gram": 6,
        "nonclassical_max": 6,
        "assoc_max": 12,
        "quad_nodes": 12,
        "quad_deg": 6,
    },
}


def _cmd_all(args) -> int:
    started = time.perf_counter()
    prof = _PROFILES[args.profile]
    report = RunReport(command="all", parameters={"profile": args.profile})

    def record(name: str, ok: bool, **extra) -> None:
        item = {"check": name, "status": "pass" if ok else "fail"}
        item.update(extra)
        report.add(item)

    record(
        "family-tables",
        tuple(generate(FamilyId.P4, IndexView.SHIFTED, prof["table_n"]))
        == reference.P4_SHIFTED_TABLE
        and tuple(generate(FamilyId.P2, IndexView.SHIFTED, prof["table_n"]))
        == reference.P2_SHIFTED_TABLE
        and tuple(generate(FamilyId.P4, IndexView.Q, 3)) == reference.Q_BOX
        and tuple(generate(FamilyId.P2, IndexView.QBAR, 4))[1:] == reference.QBAR_BOX,
    )
    for name, res in (
        ("oracle-elliptic-1", oracle.expand_elliptic1(prof["oracle_order"])),
        ("oracle-elliptic-2", oracle.expand_elliptic2(prof["oracle_order"])),
        ("oracle-gegenbauer-sum", oracle.expand_gegenbauer_sum(prof["oracle_order"])),
    ):
        record(name, res.matched, first_mismatch=res.first_mismatch)
    record(
        "generating-function-ode",
        oracle.check_funde(prof["funde_order"], FamilyId.P4)
        and oracle.check_funde(prof["funde_order"], FamilyId.P2),
    )
    for fam in ("P-4", "P-2", "P-1", "P-3"):
        bound = prof["fourth_max"] if fam in ("P-4", "P-2") else prof["second_max"]
        items = _verify_ode_items(fam, bound, args.threads)
        record(f"ode-{fam}", all(i["status"] == "pass" for i in items), cases=len(items))
    record(
        "gegenbauer-link",
        all(verify_gegenbauer_link(n) for n in range(2, prof["link_max"] + 1)),
    )
    q2 = get_family(FamilyId.P4).q(2)
    wimp_residual = diffops.build_wimp_op(2, -1, -1, Fraction(3, 2)).apply(q2)
    record(
        "wimp-discrepancy",
        (not wimp_residual.is_zero()) and diffops.build_qform_op(2).apply(q2).is_zero(),
    )
    for item in _cocycle_verify_items(prof["cocycle_bound"]):
        record(f"cocycle-{item['check']}", item["status"] == "pass")
    lambdas = ortho.favard_lambdas(200)
    record(
        "favard-lambdas",
        lambdas[1] == Fraction(2, 7) and all(x > 0 for x in lambdas),
    )
    for fam in ("q", "qbar"):
        dets = ortho.hankel(fam, prof["hankel"])
        record(f"hankel-{fam}", all(d > 0 for d in dets))
        record(f"gram-{fam}", ortho.gram_check(fam, prof["gram"]))
        record(
            f"nonclassical-{fam}",
            ortho.nonclassical_check(fam, prof["nonclassical_max"]).verified,
        )
    ultra = ortho.assoc_ultraspherical(Fraction(-1, 2), Fraction(3, 2), prof["assoc_max"])
    p4 = get_family(FamilyId.P4)
    record(
        "assoc-ultraspherical-identification",
        all(ultra[n] == p4.q(n) for n in range(prof["assoc_max"] + 1)),
    )
    for fam in ("q", "qbar"):
        err = ortho.quad_orthogonality(fam, prof["quad_nodes"], prof["quad_deg"])
        record(f"quadrature-{fam}", err <= 1e-10, max_offdiag=f"{err:.3e}")
    value = ortho.hyp2f1(1, 1, 2, 0.5, tol=1e-15)
    record("hyp2f1-log-identity", abs(value - 2 * math.log(2)) <= 1e-12)
    try:
        ortho.hyp2f1(1, 1, 2, 1.5)
    except ortho.NoConvergenceError:
        record("hyp2f1-domain-guard", True)
    else:
        record("hyp2f1-domain-guard", False)
    return _emit_report(report.finish(started), args.out)


# -- argument parsing ---------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="djkm",
        description="Exact DJKM polynomial families, identities, and quadrature",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p):
        p.add_argument("--out", metavar="FILE", default=None)
        p.add_argument("--threads", type=int, default=_default_threads())

    p = sub.add_parser("gen", help="generate family members")
    p.add_argument("--family", required=True, choices=sorted(GEN_FAMILIES))
    p.add_argument("--view", choices=[v.value for v in IndexView], default=None)
    p.add_argument("--max-n", "--max", dest="max_n", type=int, required=True)
    add_common(p)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("verify-ode", help="exact ODE residual sweeps")
    p.add_argument("--family", required=True, choices=["P-4", "P-3", "P-2", "P-1"])
    p.add_argument("--max-n", type=int, default=100)
    p.add_argument("--report", choices=["json"], default="json")
    add_common(p)
    p.set_defaults(func=_cmd_verify_ode)

    p = sub.add_parser("oracle-compare", help="generating-function reconstruction")
    p.add_argument("--family", required=True, choices=["P-4", "P-2"])
    p.add_argument("--order", type=int, default=120)
    p.add_argument("--json", action="store_true")
    add_common(p)
    p.set_defaults(func=_cmd_oracle_compare)

    p = sub.add_parser("cocycle", help="central-extension cocycle values/checks")
    p.add_argument("--i", type=int, default=None)
    p.add_argument("--j", type=int, default=None)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--bound", type=int, default=12)
    add_common(p)
    p.set_defaults(func=_cmd_cocycle)

    p = sub.add_parser("orthogonality", help="Favard data, Hankel, Gram checks")
    p.add_argument("--family", required=True, choices=["q", "qbar"])
    p.add_argument("--hankel", type=int, default=14)
    p.add_argument("--gram", type=int, default=8)
    p.add_argument("--json", action="store_true")
    add_common(p)
    p.set_defaults(func=_cmd_orthogonality)

    p = sub.add_parser("quadrature", help="Gauss nodes and weights")
    p.add_argument("--family", required=True, choices=["q", "qbar"])
    p.add_argument("--nodes", type=int, default=20)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--csv", action="store_true")
    group.add_argument("--json", action="store_true")
    add_common(p)
    p.set_defaults(func=_cmd_quadrature)

    p = sub.add_parser("nonclassical", help="order <= 2 eigenoperator system")
    p.add_argument("--family", required=True, choices=["q", "qbar"])
    p.add_argument("--max-n", type=int, default=6)
    add_common(p)
    p.set_defaults(func=_cmd_nonclassical)

    p = sub.add_parser("all", help="run the full verification battery")
    p.add_argument("--profile", choices=sorted(_PROFILES), default="desk")
    add_common(p)
    p.set_defaults(func=_cmd_all)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
