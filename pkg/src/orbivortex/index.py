"""Orbifold Riemann-Roch on curves, Serre duality and H^1 vanishing.

The root-of-unity weight sum

    sum_{k=1}^{a-1} zeta^(k b) / (1 - zeta^k),   zeta = exp(2 pi i / a)

is what the equivariant index theorem contributes at a cone point.  It has
the closed form ``b - (a + 1)/2`` for ``0 < b < a``; the literal
floating-point sum is kept alongside as an independent check.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, InvariantViolation
from .orbifold import OrbifoldLineBundle, canonical_bundle, dual, tensor


def _check_weight_args(a, b):
    if a < 2:
        raise DomainError(f"root of unity order must be >= 2, got a={a}")
    if not 0 < b < a:
        raise DomainError(f"weight b={b} outside the open range (0, {a})")


def zeta_weight_sum_closed(a: int, b: int) -> Fraction:
    _check_weight_args(a, b)
    return b - Fraction(a + 1, 2)


def zeta_weight_sum_numeric(a: int, b: int) -> complex:
    _check_weight_args(a, b)
    total = 0j
    for k in range(1, a):
        total += cmath.exp(2j * cmath.pi * k * b / a) / (1 - cmath.exp(2j * cmath.pi * k / a))
    return total


@dataclass(frozen=True)
class ZetaSumResult:
    a: int
    b: int
    closed_form: Fraction
    numeric: complex

    @property
    def error(self) -> float:
        return abs(self.numeric - complex(self.closed_form))

    def within(self, tol: float = 1e-8) -> bool:
        return (abs(self.numeric.real - float(self.closed_form)) <= tol
                and abs(self.numeric.imag) <= tol)


def zeta_weight_sum(a: int, b: int) -> ZetaSumResult:
    return ZetaSumResult(a, b, zeta_weight_sum_closed(a, b), zeta_weight_sum_numeric(a, b))


def verify_zeta_sums(max_a: int, tol: float = 1e-8):
    """Compare closed form and literal sum for every 2 <= a <= max_a, 0 < b < a.

    Returns ``(passed, failures)`` where ``failures`` lists the offending
    :class:`ZetaSumResult` objects.
    """
    passed, failures = 0, []
    for a in range(2, max_a + 1):
        for b in range(1, a):
            res = zeta_weight_sum(a, b)
            if res.within(tol):
                passed += 1
            else:
                failures.append(res)
    return passed, failures


def chi_line(L: OrbifoldLineBundle) -> int:
    """Holomorphic Euler characteristic h0 - h1 of an orbifold line bundle.

    Equals ``(1 - g) + c1(L) - sum b_i/a_i``, i.e. ``1 - g + deg_B(L)``.
    """
    return 1 - L.surface.genus + L.deg_b


def riemann_roch_assembly(L: OrbifoldLineBundle) -> Fraction:
    """Rebuild chi_line from the smooth term plus the cone-point weight sums.

    Only valid when every isotropy entry is non-zero, since the weight sum
    is undefined at b = 0.
    """
    S = L.surface
    total = Fraction(1 - S.genus)
    total -= sum((Fraction(a - 1, 2 * a) for a in S.multiplicities), Fraction(0))
    total += L.c1
    for b, a in zip(L.isotropy, S.multiplicities):
        total += Fraction(1, a) * zeta_weight_sum_closed(a, a - b)
    return total


def chi_u2(E) -> int:
    """Euler characteristic of a rank-two orbifold bundle.

    ``2(1-g) + c1(det E) - sum (b_i^- + b_i^+)/a_i``.
    """
    S = E.surface
    val = 2 * (1 - S.genus) + E.determinant.c1 - S.cone_sum([lo + hi for lo, hi in E.pairs])
    if val.denominator != 1:
        raise InvariantViolation(f"non-integral Euler characteristic {val} for {E}")
    return int(val)


def serre_dual(L: OrbifoldLineBundle) -> OrbifoldLineBundle:
    """K tensor L^*, the bundle whose H^0 is dual to H^1(L)."""
    return tensor(canonical_bundle(L.surface), dual(L))


def serre_dual_isotropy(L: OrbifoldLineBundle) -> tuple[int, ...]:
    # case split: b = 0 -> a-1; b < a-1 -> a-1-b; b = a-1 -> 0
    out = []
    for b, a in zip(L.isotropy, L.surface.multiplicities):
        if b == 0:
            out.append(a - 1)
        elif b < a - 1:
            out.append(a - 1 - b)
        else:
            out.append(0)
    return tuple(out)


def h1_vanishes(L: OrbifoldLineBundle) -> bool:
    """True when one of the sufficient criteria forces H^1(L) = 0.

    False only means neither criterion applies; it does not assert that
    H^1 is non-zero.
    """
    S = L.surface
    if L.deg_b > 2 * S.genus - 2:
        return True
    return L.c1 > canonical_bundle(S).c1
