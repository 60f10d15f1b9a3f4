"""Seifert fibered 3-manifolds as circle bundles over orbifold surfaces.

Quantities proportional to pi (the adiabatic constant, critical values of
the perturbation parameter) are stored as exact rational coefficients of pi.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import NotSmooth, OrbifoldError
from .moduli import ModuliReport, classification_report, determinant_condition
from .orbifold import (
    OrbifoldLineBundle,
    OrbifoldSurface,
    canonical_bundle,
    dual,
    power,
    rational_from_json,
    rational_to_json,
    tensor,
    trivial_bundle,
)


@dataclass(frozen=True)
class SeifertManifold:
    """Unit circle bundle of ``euler_bundle`` over ``base``.

    ``volume`` is the area of the base; no normalisation is implied, so
    it defaults to 1.
    """

    base: OrbifoldSurface
    euler_bundle: OrbifoldLineBundle
    volume: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "volume", Fraction(self.volume))
        if self.euler_bundle.surface != self.base:
            raise OrbifoldError("euler bundle lives on a different surface")
        if self.volume <= 0:
            raise OrbifoldError(f"volume must be positive, got {self.volume}")

    def to_json(self) -> dict:
        return {
            "base": self.base.to_json(),
            "euler_bundle": self.euler_bundle.to_json(),
            "volume": rational_to_json(self.volume),
        }

    @classmethod
    def from_json(cls, obj) -> "SeifertManifold":
        base = OrbifoldSurface.from_json(obj["base"])
        return cls(base, OrbifoldLineBundle.from_json(base, obj["euler_bundle"]),
                   rational_from_json(obj["volume"]))


def c_eta(Y: SeifertManifold) -> Fraction:
    """Adiabatic constant -pi c1(euler bundle) / vol, as a multiple of pi."""
    return -Y.euler_bundle.c1 / Y.volume


def dirac_shift(Y: SeifertManifold) -> Fraction:
    """Coefficient of pi in D_LC - D_adiabatic, i.e. -c_eta/2."""
    return -c_eta(Y) / 2


def type_b_determinant(det: OrbifoldLineBundle) -> OrbifoldLineBundle:
    """Determinant of K tensor E^*, namely K^2 tensor det^-1."""
    return tensor(power(canonical_bundle(det.surface), 2), dual(det))


@dataclass(frozen=True)
class SeifertMonopoleReport:
    type_a: ModuliReport
    type_b_det: OrbifoldLineBundle
    type_b: Optional[ModuliReport]
    type_b_vanishes: bool
    manifold: Optional[SeifertManifold] = None

    def to_json(self) -> dict:
        return {
            "manifold": None if self.manifold is None else self.manifold.to_json(),
            "type_a": self.type_a.to_json(),
            "type_b_det": self.type_b_det.to_json(),
            "type_b_vanishes": self.type_b_vanishes,
            "type_b": None if self.type_b is None else self.type_b.to_json(),
        }

    @classmethod
    def from_json(cls, obj) -> "SeifertMonopoleReport":
        type_a = ModuliReport.from_json(obj["type_a"])
        manifold = None if obj.get("manifold") is None else SeifertManifold.from_json(obj["manifold"])
        type_b = None if obj.get("type_b") is None else ModuliReport.from_json(obj["type_b"])
        return cls(type_a, OrbifoldLineBundle.from_json(type_a.surface, obj["type_b_det"]),
                   type_b, bool(obj["type_b_vanishes"]), manifold)


def seifert_monopole_report(Y: SeifertManifold, det: OrbifoldLineBundle) -> SeifertMonopoleReport:
    """Classify SO(3) monopoles on Y through vortex data on the base.

    Type (a) solutions are vortices on bundles with determinant ``det``;
    type (b) live on K tensor E^* and are only computed when the degree
    condition fails to rule them out.
    """
    if det.surface != Y.base:
        raise OrbifoldError("determinant lives on a different surface than the Seifert base")
    vanishes = determinant_condition(det)
    b_det = type_b_determinant(det)
    type_b = None if vanishes else classification_report(b_det)
    return SeifertMonopoleReport(classification_report(det), b_det, type_b, vanishes, Y)


def s1_times_sigma_report(surface: OrbifoldSurface, deg_E: int) -> SeifertMonopoleReport:
    if not surface.is_smooth:
        raise NotSmooth(f"S^1 x Sigma needs a smooth base, got cone points {surface.multiplicities}")
    Y = SeifertManifold(surface, trivial_bundle(surface))
    return seifert_monopole_report(Y, OrbifoldLineBundle(surface, deg_E, ()))


@dataclass(frozen=True)
class SWCriticalValue:
    n: int
    tau: Fraction  # coefficient of pi, equal to 2n
    multiplier: int  # c1(L_1) = multiplier * c1(E)


@dataclass(frozen=True)
class CriticalParameters:
    flat_tau: Fraction
    sw_taus: tuple[SWCriticalValue, ...]

    def to_json(self) -> dict:
        return {
            "flat_tau": rational_to_json(self.flat_tau),
            "sw_taus": [{"n": v.n, "tau": rational_to_json(v.tau), "multiplier": v.multiplier}
                        for v in self.sw_taus],
        }


def u2_critical_parameters(bound: int) -> CriticalParameters:
    """Values of tau where flat or reducible (Seiberg-Witten) solutions occur.

    Flat solutions need tau = pi; reducible ones need tau = 2 pi n, and then
    the first summand has c1(L_1) = (1 - n) c1(E).
    """
    if bound < 1:
        raise OrbifoldError(f"bound must be >= 1, got {bound}")
    sw = tuple(SWCriticalValue(n, Fraction(2 * n), 1 - n) for n in range(-bound, bound + 1))
    return CriticalParameters(Fraction(1), sw)
