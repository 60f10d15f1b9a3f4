"""SO(3) vortex moduli over an orbifold Riemann surface.

Given a determinant line bundle, :func:`classification_report` enumerates
every rank-two orbifold bundle with that determinant and records, per
bundle, the expected dimension of the irreducible vortex moduli, whether
irreducible projectively flat connections exist, and the abelian vortex
strata (circle-action fixed points) together with their Morse-Bott
indices.  All dimensions are real and taken before dividing out the
residual circle action.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Optional

from .errors import InvariantViolation, OrbifoldError
from .orbifold import (
    OrbifoldLineBundle,
    OrbifoldSurface,
    canonical_bundle,
    dual,
    picard_exponent,
    rational_from_json,
    rational_to_json,
    tensor,
)


def format_pairs(pairs) -> str:
    return "(" + ",".join(f"({lo},{hi})" for lo, hi in pairs) + ")"


@dataclass(frozen=True)
class OrbifoldU2Bundle:
    """Rank-two orbifold bundle given by isotropy pairs and its determinant.

    Pairs are normalised so that ``lo <= hi``; each pair must sum to the
    determinant's isotropy modulo the multiplicity.
    """

    surface: OrbifoldSurface
    pairs: tuple[tuple[int, int], ...]
    determinant: OrbifoldLineBundle

    def __post_init__(self):
        pairs = tuple((int(lo), int(hi)) for lo, hi in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        S = self.surface
        if self.determinant.surface != S:
            raise OrbifoldError("determinant lives on a different surface")
        if len(pairs) != S.n:
            raise OrbifoldError(f"{len(pairs)} isotropy pairs given for {S.n} cone points")
        for (lo, hi), a, b in zip(pairs, S.multiplicities, self.determinant.isotropy):
            if not 0 <= lo <= hi < a:
                raise OrbifoldError(f"isotropy pair ({lo},{hi}) violates 0 <= lo <= hi < {a}")
            if (lo + hi) % a != b:
                raise OrbifoldError(
                    f"pair ({lo},{hi}) sums to {(lo + hi) % a} mod {a}, determinant has {b}")

    @property
    def isotropy_pairs(self):
        return self.pairs

    @property
    def n0(self) -> int:
        return sum(1 for lo, hi in self.pairs if lo == hi)

    def pair_sum(self) -> Fraction:
        """sum_i (b_i^- + b_i^+) / a_i"""
        return self.surface.cone_sum([lo + hi for lo, hi in self.pairs])

    def __str__(self):
        return format_pairs(self.pairs)


def split_bundle(L_minus: OrbifoldLineBundle, L_plus: OrbifoldLineBundle) -> OrbifoldU2Bundle:
    """The direct sum of two line bundles, with pairs put in lo <= hi order."""
    pairs = tuple((min(x, y), max(x, y)) for x, y in zip(L_minus.isotropy, L_plus.isotropy))
    return OrbifoldU2Bundle(L_minus.surface, pairs, tensor(L_minus, L_plus))


def _pair_options(a: int, b: int) -> list[tuple[int, int]]:
    # sums lo + hi range over [0, 2a-2]; only b and b + a can be congruent to b
    opts = []
    for total in (b, b + a):
        for lo in range(0, total // 2 + 1):
            hi = total - lo
            if hi < a:
                opts.append((lo, hi))
    return sorted(opts)


def enumerate_u2_bundles(det: OrbifoldLineBundle) -> list[OrbifoldU2Bundle]:
    S = det.surface
    per_slot = [_pair_options(a, b) for a, b in zip(S.multiplicities, det.isotropy)]
    return [OrbifoldU2Bundle(S, pairs, det) for pairs in product(*per_slot)]


def irreducible_dim(E: OrbifoldU2Bundle) -> int:
    """Expected real dimension of the irreducible SO(3) vortex moduli."""
    S = E.surface
    val = 2 * (S.genus - 1 + E.determinant.c1 + (S.n - E.n0) - E.pair_sum())
    if val.denominator != 1 or val.numerator % 2:
        raise InvariantViolation(f"dimension {val} of {E} is not an even integer")
    return int(val)


def flat_expected_dim(E: OrbifoldU2Bundle) -> int:
    """Minus twice chi(su(E) tensor C), i.e. 6(g-1) + 2(n - n0)."""
    S = E.surface
    return 6 * (S.genus - 1) + 2 * (S.n - E.n0)


@dataclass(frozen=True)
class LineReduction:
    """A splitting E = L + (L^* det E), recorded through the line L.

    ``epsilon[i]`` is 0 when the pair is degenerate, -1 when L takes the
    smaller residue and +1 when it takes the larger one.
    """

    bundle: OrbifoldU2Bundle
    line: OrbifoldLineBundle
    epsilon: tuple[int, ...] = field(default=None)

    def __post_init__(self):
        E, L = self.bundle, self.line
        if L.surface != E.surface:
            raise OrbifoldError("line bundle lives on a different surface")
        eps = []
        for b, (lo, hi) in zip(L.isotropy, E.pairs):
            if lo == hi == b:
                eps.append(0)
            elif b == lo:
                eps.append(-1)
            elif b == hi:
                eps.append(1)
            else:
                raise OrbifoldError(f"line isotropy {b} not in the pair ({lo},{hi})")
        eps = tuple(eps)
        if self.epsilon is not None and tuple(self.epsilon) != eps:
            raise OrbifoldError(f"epsilon {tuple(self.epsilon)} inconsistent with line isotropy; expected {eps}")
        object.__setattr__(self, "epsilon", eps)
        frac = L.c1 - E.surface.cone_sum([e * (hi - lo) + hi + lo for e, (lo, hi) in zip(eps, E.pairs)]) / 2
        if frac.denominator != 1:
            raise InvariantViolation(f"reduction {L} of {E} breaks the integrality constraint")

    @property
    def n0(self) -> int:
        return self.epsilon.count(0)

    @property
    def n_plus(self) -> int:
        return self.epsilon.count(1)

    @property
    def n_minus(self) -> int:
        return self.epsilon.count(-1)

    @property
    def complement(self) -> OrbifoldLineBundle:
        return tensor(dual(self.line), self.bundle.determinant)


def compatible_reductions(E: OrbifoldU2Bundle, max_degB: int) -> list[LineReduction]:
    """Reductions with background degree in ``[0, max_degB]``.

    Ordered by epsilon (lexicographic, -1 before +1), then by degree.
    """
    choices = [(lo,) if lo == hi else (lo, hi) for lo, hi in E.pairs]
    out = []
    for iso in product(*choices):
        for d in range(0, max_degB + 1):
            out.append(LineReduction(E, OrbifoldLineBundle(E.surface, d, iso)))
    return out


def morse_index(r: LineReduction) -> int:
    E, S = r.bundle, r.bundle.surface
    # both signed sums are sum_i eps_i (hi - lo) / a_i over the non-degenerate slots
    signed = S.cone_sum([e * (hi - lo) for e, (lo, hi) in zip(r.epsilon, E.pairs)])
    val = 2 * (S.genus - 1 + E.determinant.c1 - 2 * r.line.c1 + signed + r.n_minus)
    if val.denominator != 1 or val.numerator % 2:
        raise InvariantViolation(f"Morse-Bott index {val} at {r.line} is not an even integer")
    return int(val)


@dataclass(frozen=True)
class AbelianStratum:
    reduction: LineReduction
    stratum_dimension: int
    morse_index: int
    moment_map_value: Fraction  # coefficient of pi

    @property
    def line(self) -> OrbifoldLineBundle:
        return self.reduction.line

    @property
    def on_wall(self) -> bool:
        """c1(L) equals half of c1(det E); never happens for odd determinants."""
        return self.moment_map_value == 0

    def to_json(self) -> dict:
        return {
            "line": self.line.to_json(),
            "epsilon": list(self.reduction.epsilon),
            "stratum_dimension": self.stratum_dimension,
            "morse_index": self.morse_index,
            "moment_map_value": rational_to_json(self.moment_map_value),
        }

    @classmethod
    def from_json(cls, E: OrbifoldU2Bundle, obj) -> "AbelianStratum":
        line = OrbifoldLineBundle.from_json(E.surface, obj["line"])
        return cls(LineReduction(E, line, tuple(obj["epsilon"])), int(obj["stratum_dimension"]),
                   int(obj["morse_index"]), rational_from_json(obj["moment_map_value"]))


def abelian_strata(E: OrbifoldU2Bundle) -> list[AbelianStratum]:
    """Non-empty abelian vortex strata of E.

    A reduction L contributes when deg_B(L) >= 0 (the stratum is a
    symmetric product of the surface) and c1(L) <= c1(det E)/2.
    """
    S = E.surface
    half = E.determinant.c1 / 2
    min_frac = S.cone_sum([lo for lo, _ in E.pairs])
    cap = math.floor(half - min_frac)
    out = []
    for r in compatible_reductions(E, cap):
        if r.line.c1 > half:
            continue
        out.append(AbelianStratum(r, 2 * r.line.deg_b, morse_index(r), E.determinant.c1 - 2 * r.line.c1))
    return out


class FlatTag(str, enum.Enum):
    EMPTY_BY_GENUS_COUNT = "EmptyByGenusCount"
    EMPTY_BY_WITNESS = "EmptyByWitness"
    NON_EMPTY = "NonEmpty"


@dataclass(frozen=True)
class FlatStatus:
    tag: FlatTag
    witness: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "tag", FlatTag(self.tag))
        if self.witness is not None:
            object.__setattr__(self, "witness", tuple(self.witness))
        if (self.witness is not None) != (self.tag is FlatTag.EMPTY_BY_WITNESS):
            raise OrbifoldError("a witness is present exactly for EmptyByWitness")

    @property
    def empty(self) -> bool:
        return self.tag is not FlatTag.NON_EMPTY

    def to_json(self) -> dict:
        return {"tag": self.tag.value, "witness": None if self.witness is None else list(self.witness)}

    @classmethod
    def from_json(cls, obj) -> "FlatStatus":
        return cls(FlatTag(obj["tag"]), obj.get("witness"))


def flat_witness_holds(E: OrbifoldU2Bundle, eps) -> bool:
    """Both emptiness conditions for a sign vector eps in {-1, +1}^n."""
    S = E.surface
    n_plus = sum(1 for e in eps if e == 1)
    if (n_plus + E.determinant.deg_b) % 2 != 1:
        return False
    lhs = n_plus - S.cone_sum([e * (hi - lo) for e, (lo, hi) in zip(eps, E.pairs)])
    return lhs < 1 - S.genus


def flat_status(E: OrbifoldU2Bundle) -> FlatStatus:
    """Whether E carries irreducible projectively flat connections.

    Genus zero with at most two non-degenerate pairs is empty outright;
    otherwise emptiness holds exactly when some sign vector is a witness.
    """
    S = E.surface
    if S.genus == 0 and S.n - E.n0 <= 2:
        return FlatStatus(FlatTag.EMPTY_BY_GENUS_COUNT)
    for eps in product((-1, 1), repeat=S.n):
        if flat_witness_holds(E, eps):
            return FlatStatus(FlatTag.EMPTY_BY_WITNESS, eps)
    return FlatStatus(FlatTag.NON_EMPTY)


def determinant_condition(det: OrbifoldLineBundle) -> bool:
    return det.c1 > 2 * canonical_bundle(det.surface).c1


def degree_condition(E: OrbifoldU2Bundle) -> bool:
    """c1(det E) > 2 c1(K): the regime where only one solution type survives."""
    return determinant_condition(E.determinant)


def odd_determinant(E: OrbifoldU2Bundle) -> bool:
    return picard_exponent(E.determinant) % 2 == 1


@dataclass(frozen=True)
class ModuliRow:
    bundle: OrbifoldU2Bundle
    irreducible_dim: int
    flat: FlatStatus
    flat_expected_dim: int
    abelian: tuple[AbelianStratum, ...]
    degree_condition: bool

    def post_quotient_dim(self) -> int:
        return self.irreducible_dim - 1 if self.irreducible_dim > 0 else self.irreducible_dim

    def to_json(self) -> dict:
        return {
            "isotropy": [list(p) for p in self.bundle.pairs],
            "irreducible_dim": self.irreducible_dim,
            "flat": self.flat.to_json(),
            "flat_expected_dim": self.flat_expected_dim,
            "abelian": [s.to_json() for s in self.abelian],
            "degree_condition": self.degree_condition,
        }

    @classmethod
    def from_json(cls, det: OrbifoldLineBundle, obj) -> "ModuliRow":
        E = OrbifoldU2Bundle(det.surface, tuple(tuple(p) for p in obj["isotropy"]), det)
        return cls(E, int(obj["irreducible_dim"]), FlatStatus.from_json(obj["flat"]),
                   int(obj["flat_expected_dim"]),
                   tuple(AbelianStratum.from_json(E, s) for s in obj["abelian"]),
                   bool(obj["degree_condition"]))


@dataclass(frozen=True)
class ModuliReport:
    determinant: OrbifoldLineBundle
    rows: tuple[ModuliRow, ...]

    @property
    def surface(self) -> OrbifoldSurface:
        return self.determinant.surface

    def to_json(self) -> dict:
        return {
            "surface": self.surface.to_json(),
            "determinant": self.determinant.to_json(),
            "rows": [r.to_json() for r in self.rows],
        }

    @classmethod
    def from_json(cls, obj) -> "ModuliReport":
        S = OrbifoldSurface.from_json(obj["surface"])
        det = OrbifoldLineBundle.from_json(S, obj["determinant"])
        return cls(det, tuple(ModuliRow.from_json(det, r) for r in obj["rows"]))


def classify_bundle(E: OrbifoldU2Bundle) -> ModuliRow:
    return ModuliRow(E, irreducible_dim(E), flat_status(E), flat_expected_dim(E),
                     tuple(abelian_strata(E)), degree_condition(E))


def classification_report(det: OrbifoldLineBundle) -> ModuliReport:
    rows = [classify_bundle(E) for E in enumerate_u2_bundles(det)]
    rows.sort(key=lambda r: r.bundle.pairs)
    return ModuliReport(det, tuple(rows))
