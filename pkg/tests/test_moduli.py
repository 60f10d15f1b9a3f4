from fractions import Fraction
from itertools import product

import pytest

from orbivortex import (
    FlatTag,
    LineReduction,
    ModuliReport,
    NotCoprime,
    OrbifoldError,
    OrbifoldLineBundle,
    OrbifoldSurface,
    OrbifoldU2Bundle,
    abelian_strata,
    classification_report,
    compatible_reductions,
    degree_condition,
    enumerate_u2_bundles,
    flat_expected_dim,
    flat_status,
    irreducible_dim,
    morse_index,
    odd_determinant,
    picard_power,
    trivial_bundle,
)
from orbivortex.moduli import flat_witness_holds

from oracles import dim_by_hand, pair_lists_by_search

POINCARE_BUNDLES = [
    ((0, 1), (0, 1), (0, 1)),
    ((0, 1), (0, 1), (2, 4)),
    ((0, 1), (0, 1), (3, 3)),
    ((0, 1), (2, 2), (0, 1)),
    ((0, 1), (2, 2), (2, 4)),
    ((0, 1), (2, 2), (3, 3)),
]

BRIESKORN_BUNDLES = [
    ((0, 1), (0, 1), (0, 2)),
    ((0, 1), (0, 1), (1, 1)),
    ((0, 1), (0, 1), (3, 6)),
    ((0, 1), (0, 1), (4, 5)),
    ((0, 1), (2, 2), (0, 2)),
    ((0, 1), (2, 2), (1, 1)),
    ((0, 1), (2, 2), (3, 6)),
    ((0, 1), (2, 2), (4, 5)),
]


def bundle(det, pairs):
    return OrbifoldU2Bundle(det.surface, pairs, det)


def smooth_det(g, d):
    return OrbifoldLineBundle(OrbifoldSurface(g), d)


class TestU2Bundle:
    def test_rejects_unordered_pair(self, poincare_det):
        with pytest.raises(OrbifoldError):
            bundle(poincare_det, ((1, 0), (0, 1), (0, 1)))

    def test_rejects_wrong_sum(self, poincare_det):
        with pytest.raises(OrbifoldError):
            bundle(poincare_det, ((0, 1), (0, 2), (0, 1)))

    def test_n0(self, poincare_det):
        assert bundle(poincare_det, ((0, 1), (2, 2), (3, 3))).n0 == 2


class TestEnumeration:
    def test_poincare(self, poincare_det):
        assert [E.pairs for E in enumerate_u2_bundles(poincare_det)] == POINCARE_BUNDLES

    def test_brieskorn(self, brieskorn_det):
        assert [E.pairs for E in enumerate_u2_bundles(brieskorn_det)] == BRIESKORN_BUNDLES

    def test_smooth_single_bundle(self):
        bundles = enumerate_u2_bundles(smooth_det(3, 7))
        assert len(bundles) == 1 and bundles[0].pairs == ()

    @pytest.mark.parametrize("cone", [(2, 3, 5), (4, 6), (2, 2, 2), (9,), (3, 5, 7)])
    def test_matches_search(self, cone):
        S = OrbifoldSurface(1, cone)
        for iso in product(*(range(a) for a in cone)):
            det = OrbifoldLineBundle(S, 0, iso)
            assert [E.pairs for E in enumerate_u2_bundles(det)] == pair_lists_by_search(cone, iso)


class TestDimensions:
    @pytest.mark.parametrize("pairs, expected", list(zip(POINCARE_BUNDLES, [2, 0, -2, -2, -4, -6])))
    def test_poincare(self, poincare_det, pairs, expected):
        # -6 in the last row: n0 = 2 there
        assert dim_by_hand(0, (2, 3, 5), Fraction(1, 30), pairs) == expected
        assert irreducible_dim(bundle(poincare_det, pairs)) == expected

    @pytest.mark.parametrize("pairs, expected", list(zip(BRIESKORN_BUNDLES, [2, 0, 0, 0, -2, -4, -4, -4])))
    def test_brieskorn(self, brieskorn_det, pairs, expected):
        assert irreducible_dim(bundle(brieskorn_det, pairs)) == expected

    def test_torus_degree_one(self):
        E = enumerate_u2_bundles(smooth_det(1, 1))[0]
        assert irreducible_dim(E) == 2

    @pytest.mark.parametrize("g, cone, pairs, expected", [
        (0, (2, 3, 5), ((0, 1), (0, 1), (0, 1)), 0),
        (2, (), (), 6),
        (0, (2, 3, 5), ((0, 1), (0, 1), (3, 3)), -2),
    ])
    def test_flat_expected_dim(self, g, cone, pairs, expected):
        S = OrbifoldSurface(g, cone)
        iso = tuple((lo + hi) % a for (lo, hi), a in zip(pairs, cone))
        E = OrbifoldU2Bundle(S, pairs, OrbifoldLineBundle(S, 0, iso))
        assert flat_expected_dim(E) == expected


class TestReductions:
    def test_count_all_branching(self, poincare_det):
        rs = compatible_reductions(bundle(poincare_det, POINCARE_BUNDLES[0]), 0)
        assert len(rs) == 8
        assert {r.epsilon for r in rs} == set(product((-1, 1), repeat=3))
        assert all(r.line.deg_b == 0 for r in rs)

    def test_count_degenerate_slots(self, s235):
        det = OrbifoldLineBundle(s235, 0, (1, 1, 1))
        E = OrbifoldU2Bundle(s235, ((0, 1), (2, 2), (3, 3)), det)
        rs = compatible_reductions(E, 0)
        assert len(rs) == 2
        assert all(r.n0 == 2 for r in rs)

    def test_smooth(self):
        rs = compatible_reductions(enumerate_u2_bundles(smooth_det(1, 5))[0], 3)
        assert [r.line.deg_b for r in rs] == [0, 1, 2, 3]
        assert all(r.epsilon == () for r in rs)

    def test_negative_cap(self, poincare_det):
        assert compatible_reductions(bundle(poincare_det, POINCARE_BUNDLES[0]), -1) == []

    def test_epsilon_and_counts(self, brieskorn_det):
        E = bundle(brieskorn_det, ((0, 1), (0, 1), (1, 1)))
        r = LineReduction(E, OrbifoldLineBundle(E.surface, 0, (1, 0, 1)))
        assert r.epsilon == (1, -1, 0)
        assert (r.n_plus, r.n_minus, r.n0) == (1, 1, 1)
        with pytest.raises(OrbifoldError):
            LineReduction(E, OrbifoldLineBundle(E.surface, 0, (1, 0, 2)))
        with pytest.raises(OrbifoldError):
            LineReduction(E, r.line, (1, 1, 0))

    def test_complement_completes_splitting(self, brieskorn_det):
        E = bundle(brieskorn_det, BRIESKORN_BUNDLES[0])
        for r in compatible_reductions(E, 2):
            comp = r.complement
            assert comp.c1 + r.line.c1 == brieskorn_det.c1
            for b1, b2, (lo, hi) in zip(r.line.isotropy, comp.isotropy, E.pairs):
                assert sorted((b1, b2)) == [lo, hi]


class TestMorseIndex:
    def test_poincare_trivial(self, poincare_det):
        r = LineReduction(bundle(poincare_det, POINCARE_BUNDLES[0]), trivial_bundle(poincare_det.surface))
        assert r.epsilon == (-1, -1, -1)
        assert morse_index(r) == 2

    def test_brieskorn_trivial(self, brieskorn_det):
        r = LineReduction(bundle(brieskorn_det, BRIESKORN_BUNDLES[0]), trivial_bundle(brieskorn_det.surface))
        assert morse_index(r) == 2

    def test_torus(self):
        E = enumerate_u2_bundles(smooth_det(1, 1))[0]
        assert morse_index(LineReduction(E, trivial_bundle(E.surface))) == 2

    @pytest.mark.parametrize("g", range(4))
    @pytest.mark.parametrize("deg_e", range(-3, 8))
    def test_smooth_reduces(self, g, deg_e):
        E = enumerate_u2_bundles(smooth_det(g, deg_e))[0]
        for r in compatible_reductions(E, 5):
            assert morse_index(r) == 2 * (g - 1 + deg_e - 2 * r.line.deg_b)

    def test_trivial_reduction_is_dimension(self):
        S = OrbifoldSurface(1, (3, 4, 5))
        for iso in product(range(3), range(4), range(5)):
            for E in enumerate_u2_bundles(OrbifoldLineBundle(S, 2, iso)):
                if all(lo == 0 for lo, _ in E.pairs):
                    assert morse_index(LineReduction(E, trivial_bundle(S))) == irreducible_dim(E)


class TestAbelianStrata:
    def test_poincare_first_row(self, poincare_det):
        strata = abelian_strata(bundle(poincare_det, POINCARE_BUNDLES[0]))
        assert len(strata) == 1
        s = strata[0]
        assert s.line.is_trivial
        assert (s.stratum_dimension, s.morse_index) == (0, 2)
        assert s.moment_map_value == Fraction(1, 30)
        assert not s.on_wall

    def test_wrong_isotropy(self, poincare_det):
        assert abelian_strata(bundle(poincare_det, POINCARE_BUNDLES[1])) == []

    def test_brieskorn_only_trivial_line(self, brieskorn_det):
        S = brieskorn_det.surface
        for pairs in BRIESKORN_BUNDLES:
            for s in abelian_strata(bundle(brieskorn_det, pairs)):
                assert s.line == trivial_bundle(S)
        # the other candidate lines sit at negative background degree
        assert picard_power(S, 1).deg_b == -2
        assert picard_power(S, 2).deg_b == -1
        assert picard_power(S, 2).isotropy == (0, 1, 5)

    def test_smooth_higher_strata(self):
        E = enumerate_u2_bundles(smooth_det(2, 5))[0]
        strata = abelian_strata(E)
        assert [(s.line.deg_b, s.stratum_dimension, s.morse_index) for s in strata] == [
            (0, 0, 12), (1, 2, 8), (2, 4, 4)]

    def test_even_determinant_hits_wall(self):
        E = enumerate_u2_bundles(smooth_det(1, 2))[0]
        walls = [s for s in abelian_strata(E) if s.on_wall]
        assert [s.line.deg_b for s in walls] == [1]

    def test_filter_matches_brute_force(self):
        S = OrbifoldSurface(1, (2, 3, 5))
        for k in range(-3, 12):
            det = picard_power(S, k)
            for E in enumerate_u2_bundles(det):
                expected = [r.line for r in compatible_reductions(E, 6)
                            if r.line.c1 <= det.c1 / 2]
                assert [s.line for s in abelian_strata(E)] == expected


class TestFlatStatus:
    def test_genus_count(self, poincare_det):
        st = flat_status(bundle(poincare_det, ((0, 1), (2, 2), (0, 1))))
        assert st.tag is FlatTag.EMPTY_BY_GENUS_COUNT and st.witness is None

    def test_witness(self, brieskorn_det):
        E = bundle(brieskorn_det, ((0, 1), (0, 1), (4, 5)))
        st = flat_status(E)
        assert st.tag is FlatTag.EMPTY_BY_WITNESS
        assert st.witness == (-1, -1, -1)
        assert flat_witness_holds(E, st.witness)
        # the sign vector (1, -1, -1) fails the parity condition as stated
        assert not flat_witness_holds(E, (1, -1, -1))

    def test_non_empty(self, poincare_det):
        assert flat_status(bundle(poincare_det, POINCARE_BUNDLES[0])).tag is FlatTag.NON_EMPTY

    @pytest.mark.parametrize("pairs, tag", list(zip(BRIESKORN_BUNDLES, [
        FlatTag.NON_EMPTY, FlatTag.EMPTY_BY_GENUS_COUNT, FlatTag.NON_EMPTY, FlatTag.EMPTY_BY_WITNESS,
        FlatTag.EMPTY_BY_GENUS_COUNT, FlatTag.EMPTY_BY_GENUS_COUNT, FlatTag.EMPTY_BY_GENUS_COUNT,
        FlatTag.EMPTY_BY_GENUS_COUNT])))
    def test_brieskorn_column(self, brieskorn_det, pairs, tag):
        assert flat_status(bundle(brieskorn_det, pairs)).tag is tag

    def test_witness_is_first_in_order(self):
        S = OrbifoldSurface(1, (3, 5, 7, 11))
        for k in range(1, 40, 3):
            for E in enumerate_u2_bundles(picard_power(S, k)):
                st = flat_status(E)
                hits = [e for e in product((-1, 1), repeat=4) if flat_witness_holds(E, e)]
                if hits:
                    assert st.witness == hits[0]
                else:
                    assert st.tag is FlatTag.NON_EMPTY


class TestConditions:
    def test_degree_condition_examples(self, poincare_det, s237):
        assert degree_condition(enumerate_u2_bundles(poincare_det)[0])
        assert degree_condition(enumerate_u2_bundles(picard_power(s237, 3))[0])
        assert degree_condition(enumerate_u2_bundles(smooth_det(1, 1))[0])
        assert not degree_condition(enumerate_u2_bundles(picard_power(s237, 2))[0])

    def test_odd_determinant(self, s237):
        assert odd_determinant(enumerate_u2_bundles(smooth_det(2, 1))[0])
        assert odd_determinant(enumerate_u2_bundles(picard_power(s237, 5))[0])
        assert not odd_determinant(enumerate_u2_bundles(picard_power(s237, 2))[0])
        S = OrbifoldSurface(0, (2, 4))
        with pytest.raises(NotCoprime):
            odd_determinant(enumerate_u2_bundles(OrbifoldLineBundle(S, 0, (1, 1)))[0])

    def test_moment_map_positive_for_odd_determinants(self):
        S = OrbifoldSurface(0, (2, 3, 7))
        for k in range(1, 30, 2):
            for E in enumerate_u2_bundles(picard_power(S, k)):
                assert all(s.moment_map_value > 0 for s in abelian_strata(E))


class TestReport:
    def test_poincare(self, poincare_det):
        report = classification_report(poincare_det)
        assert [r.bundle.pairs for r in report.rows] == POINCARE_BUNDLES
        assert [r.irreducible_dim for r in report.rows] == [2, 0, -2, -2, -4, -6]
        assert [len(r.abelian) for r in report.rows] == [1, 0, 0, 0, 0, 0]
        assert [r.post_quotient_dim() for r in report.rows] == [1, 0, -2, -2, -4, -6]

    def test_discarded_determinant(self, s237):
        report = classification_report(picard_power(s237, 3))
        assert len(report.rows) == 8
        assert all(r.irreducible_dim <= 0 for r in report.rows)

    def test_json_roundtrip(self, brieskorn_det):
        report = classification_report(brieskorn_det)
        assert ModuliReport.from_json(report.to_json()) == report

    def test_rows_sorted(self):
        S = OrbifoldSurface(0, (4, 6, 9))
        report = classification_report(OrbifoldLineBundle(S, 0, (3, 1, 4)))
        keys = [r.bundle.pairs for r in report.rows]
        assert keys == sorted(keys)
