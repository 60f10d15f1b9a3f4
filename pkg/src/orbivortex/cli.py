"""Command-line front end.

Exit status is 0 on success, 1 when the input is rejected, and 2 when an
internal identity check fails.
"""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction

from . import __version__
from .errors import InvariantViolation, OrbifoldError
from .index import chi_line, chi_u2, h1_vanishes, serre_dual, verify_zeta_sums
from .moduli import OrbifoldU2Bundle, classification_report, enumerate_u2_bundles
from .orbifold import (
    OrbifoldLineBundle,
    OrbifoldSurface,
    canonical_bundle,
    euler_characteristic,
    fundamental_line_bundle,
    picard_power,
)
from .render import dumps, fmt_q, report_table, seifert_table
from .seifert import SeifertManifold, s1_times_sigma_report, seifert_monopole_report, u2_critical_parameters


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


_SHORTHAND = re.compile(r"^L0\^(-?\d+)$")


def parse_cone(text: str) -> tuple[int, ...]:
    if text is None or not text.strip():
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise UsageError(f"malformed --cone value {text!r}: expected comma-separated integers") from None


def parse_surface(args) -> OrbifoldSurface:
    return OrbifoldSurface(args.genus, parse_cone(args.cone))


def parse_bundle(S: OrbifoldSurface, text: str) -> OrbifoldLineBundle:
    """Parse ``L0^k`` or an explicit ``degB,b1,...,bn``."""
    text = text.strip()
    m = _SHORTHAND.match(text)
    if m:
        return picard_power(S, int(m.group(1)))
    try:
        values = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise UsageError(f"malformed bundle spec {text!r}: expected 'L0^k' or 'degB,b1,...,bn'") from None
    if len(values) != S.n + 1:
        raise UsageError(f"bundle spec {text!r} has {len(values) - 1} isotropy entries, "
                         f"surface has {S.n} cone points")
    return OrbifoldLineBundle(S, values[0], tuple(values[1:]))


def parse_pairs(S: OrbifoldSurface, text: str) -> tuple[tuple[int, int], ...]:
    values = [int(tok) for tok in re.findall(r"-?\d+", text)]
    if len(values) != 2 * S.n:
        raise UsageError(f"isotropy pairs {text!r} give {len(values)} integers, expected {2 * S.n}")
    return tuple(tuple(sorted(values[i:i + 2])) for i in range(0, len(values), 2))


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_surface(args, out):
    S = parse_surface(args)
    K = canonical_bundle(S)
    out.write(f"surface: {S}\n")
    out.write(f"euler_characteristic: {fmt_q(euler_characteristic(S))}\n")
    out.write(f"canonical: {K}  c1 = {fmt_q(K.c1)}\n")
    out.write(f"coprime: {_yes(S.coprime)}\n")
    if S.n and S.coprime:
        L0 = fundamental_line_bundle(S)
        out.write(f"fundamental: {L0}  c1 = {fmt_q(L0.c1)}\n")


def cmd_picard(args, out):
    S = parse_surface(args)
    L = picard_power(S, args.power)
    if args.format == "json":
        out.write(dumps({"surface": S.to_json(), "power": args.power, "bundle": L.to_json(),
                         "c1": {"num": L.c1.numerator, "den": L.c1.denominator}}))
        return
    out.write(f"L0^{args.power} on {S}\n")
    out.write(f"deg_b: {L.deg_b}\n")
    out.write("isotropy: [" + ", ".join(map(str, L.isotropy)) + "]\n")
    out.write(f"c1: {fmt_q(L.c1)}\n")


def cmd_rr(args, out):
    S = parse_surface(args)
    L = parse_bundle(S, args.line)
    D = serre_dual(L)
    out.write(f"line: {L}  c1 = {fmt_q(L.c1)}\n")
    out.write(f"chi(L): {chi_line(L)}\n")
    out.write(f"serre dual: {D}  chi = {chi_line(D)}\n")
    out.write(f"h1 vanishes: {_yes(h1_vanishes(L))}\n")
    if args.u2 is not None:
        if args.det is None:
            raise UsageError("--u2 needs --det")
        det = parse_bundle(S, args.det)
        E = OrbifoldU2Bundle(S, parse_pairs(S, args.u2), det)
        out.write(f"u2: {E}  det {det}\n")
        out.write(f"chi(E): {chi_u2(E)}\n")


def cmd_bundles(args, out):
    S = parse_surface(args)
    det = parse_bundle(S, args.det)
    bundles = enumerate_u2_bundles(det)
    out.write(f"{len(bundles)} bundles on {S} with determinant {det}\n")
    for E in bundles:
        out.write(f"{E}  n0={E.n0}\n")


def cmd_report(args, out):
    S = parse_surface(args)
    report = classification_report(parse_bundle(S, args.det))
    if args.format == "json":
        out.write(dumps(report))
    else:
        out.write(report_table(report, args.post_quotient))


def cmd_seifert(args, out):
    S = parse_surface(args)
    try:
        volume = Fraction(args.volume)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"malformed --volume value {args.volume!r}") from None
    Y = SeifertManifold(S, parse_bundle(S, args.euler), volume)
    report = seifert_monopole_report(Y, parse_bundle(S, args.det))
    out.write(dumps(report) if args.format == "json" else seifert_table(report, args.post_quotient))


def cmd_s1sigma(args, out):
    report = s1_times_sigma_report(OrbifoldSurface(args.genus), args.deg_e)
    out.write(dumps(report) if args.format == "json" else seifert_table(report, args.post_quotient))


def cmd_verify_zeta(args, out):
    if args.max_a < 2:
        raise UsageError(f"--max-a must be >= 2, got {args.max_a}")
    passed, failures = verify_zeta_sums(args.max_a, args.tol)
    total = passed + len(failures)
    if failures:
        out.write(f"FAIL {passed}/{total}\n")
        for res in failures[:10]:
            out.write(f"  a={res.a} b={res.b} closed={fmt_q(res.closed_form)} numeric={res.numeric!r}\n")
        return 2
    out.write(f"PASS {passed}/{total}\n")


def cmd_critical_tau(args, out):
    params = u2_critical_parameters(args.bound)
    if args.format == "json":
        out.write(dumps(params))
        return
    out.write(f"flat: tau = {fmt_q(params.flat_tau)} pi\n")
    for v in params.sw_taus:
        out.write(f"sw n={v.n}: tau = {fmt_q(v.tau)} pi  c1(L1) = {v.multiplier} c1(E)\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="orbivortex", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, func, help_, surface=True, fmt=False, quotient=False):
        p = sub.add_parser(name, help=help_)
        if surface:
            p.add_argument("--genus", type=int, required=True)
            p.add_argument("--cone", default="", help="comma-separated cone multiplicities")
        if fmt:
            p.add_argument("--format", choices=("table", "json"), default="table")
        if quotient:
            p.add_argument("--post-quotient", action="store_true",
                           help="subtract 1 from positive irreducible dimensions")
        p.set_defaults(func=func)
        return p

    add("surface", cmd_surface, "orbifold Euler characteristic and canonical bundle")
    add("picard", cmd_picard, "powers of the fundamental line bundle", fmt=True).add_argument(
        "--power", type=int, required=True)
    p = add("rr", cmd_rr, "Riemann-Roch Euler characteristics")
    p.add_argument("--line", required=True)
    p.add_argument("--u2")
    p.add_argument("--det")
    add("bundles", cmd_bundles, "rank-two bundles with a given determinant").add_argument(
        "--det", required=True)
    add("report", cmd_report, "moduli classification table", fmt=True, quotient=True).add_argument(
        "--det", required=True)
    p = add("seifert", cmd_seifert, "monopole classification on a Seifert manifold", fmt=True, quotient=True)
    p.add_argument("--euler", required=True)
    p.add_argument("--det", required=True)
    p.add_argument("--volume", default="1")
    p = add("s1sigma", cmd_s1sigma, "monopoles on S^1 x Sigma", surface=False, fmt=True, quotient=True)
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--deg-e", type=int, required=True)
    p = add("verify-zeta", cmd_verify_zeta, "check the root-of-unity sum identity", surface=False)
    p.add_argument("--max-a", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-8)
    add("critical-tau", cmd_critical_tau, "critical values of tau", surface=False, fmt=True).add_argument(
        "--bound", type=int, required=True)
    return parser


def run(argv, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("missing subcommand")
        return args.func(args, out) or 0
    except (UsageError, OrbifoldError) as exc:
        err.write(f"orbivortex: error: {exc}\n")
        return 1
    except InvariantViolation as exc:
        err.write(f"orbivortex: internal error: {exc}\n")
        return 2


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
