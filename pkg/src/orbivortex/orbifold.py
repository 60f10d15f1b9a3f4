"""Orbifold Riemann surfaces, orbifold line bundles and divisors.

A line bundle is stored as its background degree together with the
isotropy residues at the cone points.  The orbifold first Chern class is
always derived from those two pieces, so it is rational with the right
fractional part by construction::

    >>> S = OrbifoldSurface(0, (2, 3, 5))
    >>> L0 = fundamental_line_bundle(S)
    >>> L0.deg_b, L0.isotropy, L0.c1
    (-1, (1, 1, 1), Fraction(1, 30))
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Mapping, Union

from .errors import InvariantViolation, NoConePoints, NotCoprime, OrbifoldError, SurfaceMismatch


def rational_to_json(q) -> dict:
    q = Fraction(q)
    return {"num": q.numerator, "den": q.denominator}


def rational_from_json(obj) -> Fraction:
    den = int(obj["den"])
    if den < 1:
        raise OrbifoldError(f"rational denominator must be positive, got {den}")
    return Fraction(int(obj["num"]), den)


def pairwise_coprime(values) -> bool:
    return all(math.gcd(x, y) == 1 for x, y in combinations(values, 2))


@dataclass(frozen=True)
class OrbifoldSurface:
    """Closed Riemann surface of genus ``genus`` with ordered cone points.

    ``multiplicities[i]`` is the order of the local isotropy group at the
    i-th cone point; every entry must be at least 2.
    """

    genus: int
    multiplicities: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "multiplicities", tuple(int(a) for a in self.multiplicities))
        if int(self.genus) != self.genus or self.genus < 0:
            raise OrbifoldError(f"genus must be a non-negative integer, got {self.genus!r}")
        object.__setattr__(self, "genus", int(self.genus))
        for a in self.multiplicities:
            if a < 2:
                raise OrbifoldError(f"cone multiplicity must be >= 2, got {a}")

    @property
    def n(self) -> int:
        return len(self.multiplicities)

    @property
    def is_smooth(self) -> bool:
        return not self.multiplicities

    @cached_property
    def order(self) -> int:
        """Product of the multiplicities (1 for a smooth surface)."""
        return math.prod(self.multiplicities)

    @cached_property
    def _cofactors(self) -> tuple[int, ...]:
        return tuple(self.order // a for a in self.multiplicities)

    def cone_sum(self, values) -> Fraction:
        """Exact ``sum_i values[i] / a_i`` over the common denominator."""
        return Fraction(sum(v * c for v, c in zip(values, self._cofactors)), self.order)

    @property
    def coprime(self) -> bool:
        return pairwise_coprime(self.multiplicities)

    def to_json(self) -> dict:
        return {"genus": self.genus, "cone": list(self.multiplicities)}

    @classmethod
    def from_json(cls, obj) -> "OrbifoldSurface":
        return cls(int(obj["genus"]), tuple(obj.get("cone", ())))

    def __str__(self):
        if self.is_smooth:
            return f"Sigma_{self.genus}"
        cone = ",".join(map(str, self.multiplicities))
        return f"Sigma_{self.genus}({cone})"


def euler_characteristic(S: OrbifoldSurface) -> Fraction:
    return Fraction(2 - 2 * S.genus) - sum((1 - Fraction(1, a) for a in S.multiplicities), Fraction(0))


@dataclass(frozen=True)
class OrbifoldLineBundle:
    surface: OrbifoldSurface
    deg_b: int
    isotropy: tuple[int, ...] = field(default=())

    def __post_init__(self):
        iso = tuple(int(b) for b in self.isotropy)
        object.__setattr__(self, "isotropy", iso)
        object.__setattr__(self, "deg_b", int(self.deg_b))
        if len(iso) != self.surface.n:
            raise OrbifoldError(
                f"isotropy has {len(iso)} entries but the surface has {self.surface.n} cone points")
        for b, a in zip(iso, self.surface.multiplicities):
            if not 0 <= b < a:
                raise OrbifoldError(f"isotropy {b} outside [0, {a})")

    @cached_property
    def c1(self) -> Fraction:
        return self.deg_b + self.surface.cone_sum(self.isotropy)

    @property
    def is_trivial(self) -> bool:
        return self.deg_b == 0 and not any(self.isotropy)

    def to_json(self) -> dict:
        return {"deg_b": self.deg_b, "isotropy": list(self.isotropy)}

    @classmethod
    def from_json(cls, surface: OrbifoldSurface, obj) -> "OrbifoldLineBundle":
        return cls(surface, int(obj["deg_b"]), tuple(obj.get("isotropy", ())))

    def __str__(self):
        iso = ",".join(map(str, self.isotropy))
        return f"L[{self.deg_b};{iso}]"


def trivial_bundle(S: OrbifoldSurface) -> OrbifoldLineBundle:
    return OrbifoldLineBundle(S, 0, (0,) * S.n)


def c1(L: OrbifoldLineBundle) -> Fraction:
    return L.c1


def canonical_bundle(S: OrbifoldSurface) -> OrbifoldLineBundle:
    return OrbifoldLineBundle(S, 2 * S.genus - 2, tuple(a - 1 for a in S.multiplicities))


def tensor(L1: OrbifoldLineBundle, L2: OrbifoldLineBundle) -> OrbifoldLineBundle:
    if L1.surface != L2.surface:
        raise SurfaceMismatch(f"cannot tensor bundles over {L1.surface} and {L2.surface}")
    deg = L1.deg_b + L2.deg_b
    iso = []
    for b1, b2, a in zip(L1.isotropy, L2.isotropy, L1.surface.multiplicities):
        carry, b = divmod(b1 + b2, a)
        deg += carry
        iso.append(b)
    return OrbifoldLineBundle(L1.surface, deg, tuple(iso))


def dual(L: OrbifoldLineBundle) -> OrbifoldLineBundle:
    iso = tuple((-b) % a for b, a in zip(L.isotropy, L.surface.multiplicities))
    return OrbifoldLineBundle(L.surface, -L.deg_b - sum(1 for b in L.isotropy if b), iso)


def power(L: OrbifoldLineBundle, k: int) -> OrbifoldLineBundle:
    """``L`` tensored with itself ``k`` times; negative ``k`` goes through the dual.

    Uses the closed form ``b -> k*b mod a`` with the carries folded into the
    background degree, which equals iterated :func:`tensor`.
    """
    k = int(k)
    deg = k * L.deg_b
    iso = []
    for b, a in zip(L.isotropy, L.surface.multiplicities):
        carry, r = divmod(k * b, a)
        deg += carry
        iso.append(r)
    return OrbifoldLineBundle(L.surface, deg, tuple(iso))


def fundamental_line_bundle(S: OrbifoldSurface) -> OrbifoldLineBundle:
    """Generator of the topological Picard group, with c1 = 1/(a_1...a_n).

    Needs pairwise coprime multiplicities.  Each residue is the inverse of
    the product of the other multiplicities modulo a_i.
    """
    if S.is_smooth:
        raise NoConePoints("the fundamental line bundle needs at least one cone point")
    if not S.coprime:
        raise NotCoprime(f"multiplicities {S.multiplicities} are not pairwise coprime")
    order = S.order
    iso = tuple(pow(order // a, -1, a) for a in S.multiplicities)
    deg = Fraction(1, order) - sum(Fraction(b, a) for b, a in zip(iso, S.multiplicities))
    if deg.denominator != 1:
        raise InvariantViolation("CRT residues failed to give an integral background degree")
    return OrbifoldLineBundle(S, int(deg), iso)


def picard_power(S: OrbifoldSurface, k: int) -> OrbifoldLineBundle:
    return power(fundamental_line_bundle(S), k)


def picard_exponent(L: OrbifoldLineBundle) -> int:
    """The integer ``k`` with ``L`` isomorphic to ``L0^k``.

    For a smooth surface this is just the degree.
    """
    S = L.surface
    if S.n >= 2 and not S.coprime:
        raise NotCoprime(f"multiplicities {S.multiplicities} are not pairwise coprime")
    k = L.c1 * S.order
    if k.denominator != 1:
        raise InvariantViolation(f"c1 {L.c1} is not a multiple of 1/{S.order}")
    return int(k)


Label = Union[int, str]


@dataclass(frozen=True)
class DivisorClass:
    """Finite rational combination of points.

    Integer keys refer to cone points by index; string keys name smooth
    points.  Each value is ``(n_p, a_p)`` meaning ``(n_p / a_p) * p``.
    """

    surface: OrbifoldSurface
    coefficients: Mapping[Label, tuple[int, int]] = field(default_factory=dict)

    def __post_init__(self):
        coeffs = {}
        for label, (num, a) in dict(self.coefficients).items():
            if isinstance(label, int):
                if not 0 <= label < self.surface.n:
                    raise OrbifoldError(f"no cone point with index {label}")
                expected = self.surface.multiplicities[label]
            else:
                expected = 1
            if a != expected:
                raise OrbifoldError(f"point {label!r} has multiplicity {expected}, got {a}")
            coeffs[label] = (int(num), int(a))
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> Fraction:
        return sum((Fraction(num, a) for num, a in self.coefficients.values()), Fraction(0))


def line_bundle_from_divisor(D: DivisorClass) -> OrbifoldLineBundle:
    S = D.surface
    iso = [0] * S.n
    for label, (num, a) in D.coefficients.items():
        if isinstance(label, int):
            iso[label] = num % a
    deg = D.degree - sum((Fraction(b, a) for b, a in zip(iso, S.multiplicities)), Fraction(0))
    return OrbifoldLineBundle(S, int(deg), tuple(iso))
