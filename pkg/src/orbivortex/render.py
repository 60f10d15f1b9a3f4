"""Fixed-width text tables and JSON dumps for reports."""

from __future__ import annotations

import json
from fractions import Fraction

from .moduli import FlatStatus, FlatTag, ModuliReport, ModuliRow
from .seifert import SeifertMonopoleReport, c_eta, dirac_shift

ISOTROPY_WIDTH = 28
DIM_WIDTH = 8
FLAT_WIDTH = 22


def fmt_q(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def fmt_flat(flat: FlatStatus) -> str:
    if flat.tag is FlatTag.NON_EMPTY:
        return "one"
    if flat.tag is FlatTag.EMPTY_BY_GENUS_COUNT:
        return "empty (g=0, n-n0<=2)"
    return "empty (eps=" + ",".join(f"{e:+d}" for e in flat.witness) + ")"


def fmt_abelian(row: ModuliRow) -> str:
    if not row.abelian:
        return "none"
    parts = []
    for s in row.abelian:
        text = f"{s.line} index {s.morse_index}"
        if s.stratum_dimension:
            text += f" dim {s.stratum_dimension}"
        if s.on_wall:
            text += " (on wall)"
        parts.append(text)
    return "; ".join(parts)


def report_table(report: ModuliReport, post_quotient: bool = False) -> str:
    det = report.determinant
    iso_w = max([ISOTROPY_WIDTH] + [len(str(r.bundle)) for r in report.rows])
    lines = [
        f"surface: {report.surface}",
        f"determinant: {det}  c1 = {fmt_q(det.c1)}",
        "dimensions: " + ("after circle quotient" if post_quotient else "before circle quotient"),
        f"{'Isotropy':<{iso_w}} | {'IrredDim':>{DIM_WIDTH}} | {'Flat':<{FLAT_WIDTH}} | AbelianVortices(index)",
        f"{'-' * iso_w}-+-{'-' * DIM_WIDTH}-+-{'-' * FLAT_WIDTH}-+-{'-' * 22}",
    ]
    for row in report.rows:
        dim = row.post_quotient_dim() if post_quotient else row.irreducible_dim
        lines.append(f"{str(row.bundle):<{iso_w}} | {dim:>{DIM_WIDTH}} | "
                     f"{fmt_flat(row.flat):<{FLAT_WIDTH}} | {fmt_abelian(row)}")
    return "\n".join(lines) + "\n"


def seifert_table(report: SeifertMonopoleReport, post_quotient: bool = False) -> str:
    out = []
    Y = report.manifold
    if Y is not None:
        out.append(f"seifert manifold: S({Y.euler_bundle}) over {Y.base}, volume {fmt_q(Y.volume)}")
        out.append(f"c_eta: {fmt_q(c_eta(Y))} pi  dirac shift: {fmt_q(dirac_shift(Y))} pi")
    out.append("[type a] vortices on E' with det E' = det E")
    out.append(report_table(report.type_a, post_quotient).rstrip("\n"))
    if report.type_b_vanishes:
        out.append(f"[type b] det = {report.type_b_det}: vanishes since c1(det E) > 2 c1(K)")
    else:
        out.append(f"[type b] vortices on K (x) E^* with det = {report.type_b_det}")
        out.append(report_table(report.type_b, post_quotient).rstrip("\n"))
    return "\n".join(out) + "\n"


def dumps(obj) -> str:
    return json.dumps(obj.to_json() if hasattr(obj, "to_json") else obj, indent=2, sort_keys=True) + "\n"
