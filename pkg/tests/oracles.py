"""Brute-force reference computations used by the tests.

Nothing here calls into the closed forms it is meant to check.
"""

import cmath
import math
from fractions import Fraction
from itertools import product


def surfaces_up_to(max_order, max_n=3):
    """Non-decreasing multiplicity tuples with product <= max_order, including ()."""
    out = [()]

    def grow(prefix, start, prod_, depth):
        if depth == 0:
            return
        a = start
        while prod_ * a <= max_order:
            t = prefix + (a,)
            out.append(t)
            grow(t, a, prod_ * a, depth - 1)
            a += 1

    grow((), 2, 1, max_n)
    return out


def coprime_tuples(max_order):
    """Pairwise coprime pairs and triples (non-decreasing) with product <= max_order."""
    return [t for t in surfaces_up_to(max_order, 3)
            if len(t) >= 2 and all(math.gcd(x, y) == 1 for i, x in enumerate(t) for y in t[i + 1:])]


def fundamental_by_search(cone):
    """All (deg_B, isotropy) with c1 = 1/prod(a) and integral background degree."""
    order = math.prod(cone)
    hits = []
    for iso in product(*(range(a) for a in cone)):
        deg = Fraction(1, order) - sum(Fraction(b, a) for b, a in zip(iso, cone))
        if deg.denominator == 1:
            hits.append((int(deg), iso))
    return hits


def zeta_sum_direct(a, b):
    """The literal root-of-unity sum, written independently of the library."""
    zeta = cmath.exp(2j * math.pi / a)
    return sum(zeta ** (k * b) / (1 - zeta ** k) for k in range(1, a))


def dim_by_hand(genus, cone, det_c1, pairs):
    """2(g - 1 + c1(det) + (n - n0) - sum (lo + hi)/a) with plain Fractions."""
    n0 = sum(1 for lo, hi in pairs if lo == hi)
    s = sum(Fraction(lo + hi, a) for (lo, hi), a in zip(pairs, cone))
    return 2 * (genus - 1 + Fraction(det_c1) + len(cone) - n0 - s)


def pair_lists_by_search(cone, det_iso):
    """Every list of pairs 0 <= lo <= hi < a with lo + hi = det_iso mod a, lexicographic."""
    per = []
    for a, b in zip(cone, det_iso):
        per.append([(lo, hi) for lo in range(a) for hi in range(lo, a) if (lo + hi) % a == b])
    return [tuple(p) for p in product(*per)]
