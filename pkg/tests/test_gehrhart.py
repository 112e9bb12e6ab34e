"""The analytic core: graded counts, quantum Ehrhart polynomials, series."""

import random

import pytest

from conftest import DIAMOND
from zonoq import (
    NotUnimodular,
    QIVP,
    bar_eval,
    ehr_poly,
    ehr_tpower,
    eval_qivp,
    expand,
    from_matrix,
    graded_count,
    interior_series,
    lattice_count,
    qivp_bar_series,
    qivp_series,
    reciprocity_check,
    series,
)
from zonoq.exact import LaurentQ, PolyTQ

HEX_COUNT_M1 = LaurentQ({0: 1, 1: 2, 2: 3, 3: 1})
HEX_NUMERATOR = PolyTQ({
    0: LaurentQ.one(),
    1: LaurentQ({1: 1, 2: 2}),
    2: LaurentQ({2: -2, 3: -1}),
    3: LaurentQ({4: -1}),
})


def rand_laurent(rng: random.Random) -> LaurentQ:
    return LaurentQ({rng.randint(-3, 4): rng.randint(-5, 5)
                     for _ in range(rng.randint(0, 4))})


def rand_qivp(rng: random.Random, max_degree: int = 4) -> QIVP:
    deg = rng.randint(0, max_degree)
    return QIVP(tuple(rand_laurent(rng) for _ in range(deg + 1)), deg)


class TestGradedCount:
    def test_hexagon_m1(self, hexagon):
        assert graded_count(hexagon, 1).value == HEX_COUNT_M1

    def test_hexagon_m1_interior(self, hexagon):
        assert graded_count(hexagon, 1, interior=True).value == LaurentQ.one()

    def test_hexagon_m2(self, hexagon):
        # cross-checked against the zonotopal Hilbert oracle in test_zonalg
        assert graded_count(hexagon, 2).value == \
            LaurentQ({0: 1, 1: 2, 2: 3, 3: 4, 4: 5, 5: 3, 6: 1})

    def test_m0(self, hexagon):
        assert graded_count(hexagon, 0).value == LaurentQ.one()
        with pytest.raises(ValueError):
            graded_count(hexagon, 0, interior=True)

    def test_non_unimodular_rejected(self):
        with pytest.raises(NotUnimodular):
            graded_count(from_matrix(DIAMOND), 1)

    def test_q1_specializes_to_lattice_counts(self, corpus):
        for name, M in corpus.items():
            for m in (1, 2, 3):
                for interior in (False, True):
                    assert graded_count(M, m, interior).value.eval_at_one() == \
                        lattice_count(M, m, interior)[1], (name, m, interior)

    def test_coefficients_non_negative(self, corpus):
        for M in corpus.values():
            for m in (1, 2):
                gc = graded_count(M, m)
                assert gc.value.is_polynomial()
                assert all(c > 0 for c in gc.value.terms.values())

    def test_boolean_is_qint_power(self, corpus):
        for name in ("boolean1", "boolean2", "boolean3"):
            M = corpus[name]
            for m in (1, 2, 3):
                assert graded_count(M, m).value == LaurentQ.q_int(m + 1) ** M.n

    def test_symmetry_under_column_ops(self, hexagon):
        rng = random.Random(5)
        cols = [hexagon.realization.column(j) for j in range(3)]
        rng.shuffle(cols)
        cols[1] = tuple(-x for x in cols[1])
        M2 = from_matrix([[col[i] for col in cols] for i in range(2)])
        for m in (1, 2):
            assert graded_count(M2, m).value == graded_count(hexagon, m).value


class TestEhrPoly:
    def test_hexagon_tpower(self, hexagon):
        assert ehr_tpower(hexagon) == PolyTQ({
            3: LaurentQ({3: 1, 1: -1}),
            2: LaurentQ({2: 3}),
            1: LaurentQ({1: 3}),
            0: LaurentQ.one(),
        })

    def test_hexagon_basis_coeffs(self, hexagon):
        P = ehr_poly(hexagon)
        assert P.degree == 3
        assert P.basis_coeffs[0] == LaurentQ.one()
        assert P.basis_coeffs[1] == LaurentQ({3: 1, 2: 3, 1: 2})
        assert P.basis_coeffs[2] == LaurentQ({6: 1, 5: 3, 4: 4, 2: -2})
        assert P.basis_coeffs[3] == \
            LaurentQ({9: 1, 8: 2, 7: 1, 6: -1, 5: -2, 4: -1})

    def test_unit_segment(self):
        P = ehr_poly(from_matrix([[1]]))
        assert P.basis_coeffs == (LaurentQ.one(), LaurentQ.q_power(1))
        for m in range(5):
            assert eval_qivp(P, m) == LaurentQ.q_int(m + 1)

    def test_basis_coeffs_are_polynomials(self, corpus):
        # membership in the positive part: every f_k lies in Z[q]
        for name, M in corpus.items():
            assert all(f.is_polynomial()
                       for f in ehr_poly(M).basis_coeffs), name

    def test_values_match_graded_counts(self, corpus):
        for name, M in corpus.items():
            P = ehr_poly(M)
            for m in range(4):
                assert eval_qivp(P, m) == graded_count(M, m).value, (name, m)


class TestEvalQivp:
    def test_m0_gives_f0(self):
        P = QIVP((LaurentQ({2: 5}), LaurentQ.one()), 1)
        assert eval_qivp(P, 0) == LaurentQ({2: 5})

    def test_hexagon_m1(self, hexagon):
        assert eval_qivp(ehr_poly(hexagon), 1) == HEX_COUNT_M1


class TestBarEval:
    def test_bar_of_t_is_minus_qt(self):
        # the degree-1 basis polynomial evaluates under bar to -q [m]_q
        P = QIVP((LaurentQ.zero(), LaurentQ.one()), 1)
        for m in range(1, 6):
            assert bar_eval(P, m) == -LaurentQ.q_int(m).shift(1)

    def test_hexagon_reciprocity_m1(self, hexagon):
        P = ehr_poly(hexagon)
        assert bar_eval(P, 1).shift(-2) == LaurentQ.one()

    def test_hexagon_reciprocity_m2(self, hexagon):
        P = ehr_poly(hexagon)
        assert bar_eval(P, 2).shift(-2) == \
            graded_count(hexagon, 2, interior=True).value

    def test_m0_rejected(self, hexagon):
        with pytest.raises(ValueError):
            bar_eval(ehr_poly(hexagon), 0)


class TestSeries:
    def test_hexagon_numerator(self, hexagon):
        s = series(hexagon)
        assert s.order == 3 and s.numerator == HEX_NUMERATOR

    def test_unit_segment(self):
        s = series(from_matrix([[1]]))
        assert s.order == 1 and s.numerator == PolyTQ.one()

    def test_boolean2(self, corpus):
        # S_2 descent/major-index statistics give 1 + qt
        s = series(corpus["boolean2"])
        assert s.numerator == PolyTQ({0: LaurentQ.one(), 1: LaurentQ.q_power(1)})

    def test_expansion_matches_counts(self, corpus):
        for name, M in corpus.items():
            coeffs = expand(series(M), 4)
            for m in range(5):
                assert coeffs[m] == graded_count(M, m).value, (name, m)


class TestInteriorSeries:
    def test_hexagon_is_t_times_numerator(self, hexagon):
        assert interior_series(hexagon).numerator == \
            PolyTQ.t_power(1) * HEX_NUMERATOR

    def test_unit_segment(self):
        s = interior_series(from_matrix([[1]]))
        assert s.numerator == PolyTQ.t_power(2)
        coeffs = expand(s, 5)
        assert coeffs[0] == LaurentQ.zero()
        for m in range(1, 6):
            assert coeffs[m] == LaurentQ.q_int(m - 1)

    def test_expansion_matches_interior_counts(self, corpus):
        for name, M in corpus.items():
            coeffs = expand(interior_series(M), 4)
            assert coeffs[0] == LaurentQ.zero()
            for m in range(1, 5):
                assert coeffs[m] == \
                    graded_count(M, m, interior=True).value, (name, m)

    def test_hexagon_expansion_prefix(self, hexagon):
        coeffs = expand(interior_series(hexagon), 2)
        assert coeffs == [LaurentQ.zero(), LaurentQ.one(), HEX_COUNT_M1]


class TestReciprocity:
    def test_examples(self, corpus):
        assert reciprocity_check(corpus["hexagon"], 3)
        assert reciprocity_check(corpus["u12"], 4)
        assert reciprocity_check(corpus["boolean3"], 2)

    def test_corpus(self, corpus):
        for name, M in corpus.items():
            assert reciprocity_check(M, 3), name


class TestQuantumReciprocityFormal:
    """Formal reciprocity for arbitrary quantum integer-valued polynomials:
    the bar generating function equals -E(1/t, 1/q), checked at the
    numerator level and by series expansion."""

    def test_random_qivps(self):
        rng = random.Random(41)
        for _ in range(30):
            P = rand_qivp(rng)
            D = P.degree
            N = qivp_series(P).numerator
            Nbar = qivp_bar_series(P).numerator
            sign = -1 if D % 2 else 1
            flipped = N.t_reverse_bar(D + 1)
            expected = PolyTQ({k: g.shift(D * (D + 1) // 2) * sign
                               for k, g in flipped.coeffs.items()})
            assert Nbar == expected

    def test_expansions_match_values(self):
        rng = random.Random(43)
        for _ in range(10):
            P = rand_qivp(rng)
            coeffs = expand(qivp_series(P), 6)
            for m in range(7):
                assert coeffs[m] == eval_qivp(P, m)
            bar_coeffs = expand(qivp_bar_series(P), 6)
            assert bar_coeffs[0] == LaurentQ.zero()
            for m in range(1, 7):
                assert bar_coeffs[m] == bar_eval(P, m)
