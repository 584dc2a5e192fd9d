"""Command-line front end.

Exit codes: 0 success, 1 an internal check failed, 2 the input is not
Fuchsian, 64 usage error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys

from . import coxeter, fuchsian
from .coxeter import AlmostRootBasis
from .errors import (FuchsianError, InternalCheckFailed, InvalidAlpha, InvalidBasis,
                     InvalidLattice, ValidationFailed)
from .exactmath import DEFAULT_ORDER, format_terms
from .fuchsian import FuchsianData

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INVALID = 2
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _alpha_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(a) for a in text.replace(" ", "").split(",") if a)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fuchsian-poincare",
                     description="Poincaré series of Fuchsian singularities via Coxeter elements.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def data_args(p):
        p.add_argument("-g", "--genus", type=int, required=False, default=None)
        p.add_argument("-a", "--alpha", type=_alpha_list, default=())
        p.add_argument("--json", action="store_true", help="machine-readable output")

    for name, help_ in (("compute", "full report for (g; alpha)"),
                        ("verify", "check flags only")):
        p = sub.add_parser(name, help=help_)
        data_args(p)
        p.add_argument("-N", "--order", type=_nonneg, default=DEFAULT_ORDER)
        p.add_argument("--force", action="store_true",
                       help="compute lattice-side data even if the input is not Fuchsian")
        p.add_argument("--lattice-file", default=None,
                       help="almost-root basis JSON; checks the general series identity instead")

    p = sub.add_parser("gram", help="Gram matrices of V_-, V_0, V_+")
    data_args(p)
    p.add_argument("-o", "--output", default=None, help="write the V_- basis file here")

    p = sub.add_parser("random", help="seeded random check on almost-root bases")
    p.add_argument("--cases", type=_positive, default=200)
    p.add_argument("--max-rank", type=_positive, default=6)
    p.add_argument("-N", "--order", type=_nonneg, default=32)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("catalog", help="run every built-in catalog entry")
    p.add_argument("-N", "--order", type=_nonneg, default=DEFAULT_ORDER)
    p.add_argument("--json", action="store_true")
    return parser


def _data(args) -> FuchsianData:
    if args.genus is None:
        raise UsageError("-g/--genus is required")
    return FuchsianData(args.genus, args.alpha)


def _emit_json(obj, out) -> None:
    out.write(json.dumps(obj, indent=2) + "\n")


def _flag(value) -> str:
    return {True: "ok", False: "FAILED", None: "n/a"}[value]


def _text_report(report: fuchsian.FuchsianReport, out, full: bool = True) -> None:
    d = report.data
    w = out.write
    w(f"Fuchsian data {d}: {'valid' if report.valid else 'NOT valid'}\n")
    for v in report.violations:
        w(f"  violation: {v}\n")
    if full:
        w(f"smoothability hint (sum alpha <= 19 + r): {'yes' if report.smoothable_hint else 'no'}\n")
        r = report.ranks
        w(f"ranks: V- {r['vminus']}, V0 {r['v0']}, V+ {r['vplus']}\n")
        w(f"Delta_0(t) = {report.delta0}\n")
        w(f"Delta_+(t) = {report.delta_plus}\n")
        w(f"psi_A(t)   = {report.psi_a}\n")
        w(f"p_A(t)     = {report.theorem}\n")
    for name, value in report.checks.items():
        w(f"check {name}: {_flag(value)}\n")


def _report_exit(report: fuchsian.FuchsianReport) -> int:
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def _lp_json(basis: AlmostRootBasis, rep: coxeter.LPReport) -> dict:
    mm = rep.mismatch
    return {
        "lattice": basis.to_json(),
        "g": str(basis.g),
        "delta0": rep.delta0.to_json(),
        "delta_plus": rep.delta_plus.to_json(),
        "order": str(rep.lhs.order),
        "lhs": rep.lhs.to_json()["coeffs"],
        "rhs": rep.rhs.to_json()["coeffs"],
        "holds": rep.holds,
        "first_mismatch": None if mm.equal else str(mm.index),
    }


def _lattice_mode(args, out, verify_only: bool) -> int:
    try:
        basis = AlmostRootBasis.load(args.lattice_file)
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot load {args.lattice_file}: {exc}") from None
    rep = coxeter.lp_identity_check(basis, args.order)
    if args.json:
        data = _lp_json(basis, rep)
        if verify_only:
            data = {"holds": rep.holds, "first_mismatch": data["first_mismatch"]}
        _emit_json(data, out)
    else:
        if not verify_only:
            out.write(f"almost-root basis of rank {basis.n}, g = {basis.g}\n")
            out.write(f"Delta_0(t) = {rep.delta0}\n")
            out.write(f"Delta_+(t) = {rep.delta_plus}\n")
            out.write(f"expansion  = {rep.lhs}\n")
        out.write(f"check lp_identity: {_flag(rep.holds)}\n")
        if not rep.holds:
            mm = rep.mismatch
            out.write(f"  first mismatch at t^{mm.index}: {mm.left} != {mm.right}\n")
    return EXIT_OK if rep.holds else EXIT_CHECK_FAILED


def cmd_compute(args, out, verify_only: bool = False) -> int:
    if args.lattice_file:
        return _lattice_mode(args, out, verify_only)
    data = _data(args)
    try:
        report = fuchsian.full_report(data, args.order, force=args.force)
    except ValidationFailed as exc:
        if args.json:
            try:
                payload = fuchsian.full_report(data, args.order, force=True).to_json()
            except InvalidAlpha:
                payload = {"input": {"g": str(data.g), "alpha": [str(a) for a in data.alphas]},
                           "valid": False}
            payload["violations"] = exc.violations
            if verify_only:
                payload = fuchsian.verify_payload(payload)
            _emit_json(payload, out)
        else:
            out.write(f"Fuchsian data {data}: NOT valid\n")
            for v in exc.violations:
                out.write(f"  violation: {v}\n")
        return EXIT_INVALID
    if args.json:
        payload = report.to_json()
        if verify_only:
            payload = fuchsian.verify_payload(payload)
        _emit_json(payload, out)
    else:
        _text_report(report, out, full=not verify_only)
    return _report_exit(report)


def cmd_gram(args, out) -> int:
    data = _data(args)
    try:
        basis = fuchsian.star_lattice(data)
    except InvalidAlpha as exc:
        raise UsageError(str(exc)) from None
    v0 = coxeter.extend(basis, coxeter.V0).lattice
    vplus = coxeter.extend(basis, coxeter.VPLUS).lattice
    if args.output:
        with open(args.output, "w") as fh:
            _emit_json(basis.to_json(), fh)
    if args.json:
        _emit_json({"vminus": basis.to_json(), "v0": v0.to_json(), "vplus": vplus.to_json()}, out)
    else:
        for name, lat in (("V_-", basis.vminus), ("V_0", v0), ("V_+", vplus)):
            out.write(f"{name} (rank {lat.rank}):\n{lat}\n\n")
    return EXIT_OK


def cmd_random(args, out) -> int:
    rng = random.Random(args.seed)
    digest = hashlib.sha256()
    failures = []
    cases = []
    for i in range(args.cases):
        basis = coxeter.random_basis(rng, args.max_rank)
        digest.update(json.dumps(basis.vminus.gram).encode())
        rep = coxeter.lp_identity_check(basis, args.order)
        cases.append({"case": i, "rank": basis.n, "g": basis.g, "holds": rep.holds})
        if not rep.holds:
            failures.append((i, basis, rep))
    passed = args.cases - len(failures)
    if args.json:
        _emit_json({
            "seed": str(args.seed), "cases": str(args.cases), "max_rank": str(args.max_rank),
            "order": str(args.order), "passed": str(passed), "digest": digest.hexdigest(),
            "results": [{k: (str(v) if isinstance(v, int) and not isinstance(v, bool) else v)
                         for k, v in c.items()} for c in cases],
            "failures": [_lp_json(b, r) for _, b, r in failures],
        }, out)
    else:
        for i, basis, rep in failures:
            mm = rep.mismatch
            out.write(f"case {i} FAILED at t^{mm.index}: {mm.left} != {mm.right}\n")
            out.write(f"  gram = {json.dumps(basis.vminus.gram)}\n")
        out.write(f"seed {args.seed}, max-rank {args.max_rank}, order {args.order}: "
                  f"{passed}/{args.cases} pass\n")
        out.write(f"cases digest {digest.hexdigest()}\n")
    return EXIT_OK if not failures else EXIT_CHECK_FAILED


def cmd_catalog(args, out) -> int:
    reports = fuchsian.catalog_reports(args.order)
    if args.json:
        _emit_json([r.to_json() for r in reports], out)
    else:
        for r in reports:
            flags = "  ".join(f"{k}={_flag(v)}" for k, v in r.checks.items())
            out.write(f"{str(r.data):<18} {format_terms(r.theorem.coeffs[:25])} + ...\n    {flags}\n")
    return EXIT_OK if all(r.ok for r in reports) else EXIT_CHECK_FAILED


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command in ("compute", "verify"):
            return cmd_compute(args, out, verify_only=args.command == "verify")
        if args.command == "gram":
            return cmd_gram(args, out)
        if args.command == "random":
            return cmd_random(args, out)
        return cmd_catalog(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"{parser.prog}: error: {exc}\n")
        return EXIT_USAGE
    except (InvalidLattice, InvalidBasis) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except InternalCheckFailed as exc:
        sys.stderr.write(f"internal check failed: {exc}\n")
        return EXIT_CHECK_FAILED
    except FuchsianError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
