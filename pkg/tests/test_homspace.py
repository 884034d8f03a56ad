"""Tests for kernel spaces: goldens, invariants, shifts, identity suite."""

import pytest

from oracle import kernel_nullity, m_nullity
from powker.ffpoly import BiPoly, PrimeModulus, parse_poly, poly_pow
from powker.homspace import (
    FpMatrix,
    HomProblem,
    HomSpace,
    _generic_columns,
    _graded_columns,
    contains,
    div_r_shift,
    family_element,
    hom_space,
    ma_space,
    mul_r_shift,
    verify_k_lemma,
    verify_qr_identity,
    verify_substitution_identity,
)
from powker.reps import f_of, filtration_rep, r_poly
from powker.steenrod import h_poly, parameters

P3 = PrimeModulus(3)
P5 = PrimeModulus(5)
P7 = PrimeModulus(7)


class TestHomProblem:
    def test_validation(self):
        r = r_poly(P3)
        h = h_poly(P3, 2)
        with pytest.raises(ValueError):
            HomProblem(P3, BiPoly(P3, {(0, 2): 2}), 3, h)  # not monic
        with pytest.raises(ValueError):
            HomProblem(P3, r, -1, h)
        with pytest.raises(ValueError):
            HomProblem(P3, r, 3, BiPoly.x(P3))  # twist must be in t alone
        with pytest.raises(ValueError):
            HomProblem(P3, r, 3, BiPoly.tau(P3))  # twist needs a constant term
        with pytest.raises(ValueError):
            HomProblem(P3, r_poly(P5), 3, h)

    def test_domain_order_and_truncation(self):
        # delta below the divisor degree: no truncation
        prob = HomProblem(P3, poly_pow(r_poly(P3), 2), 3, h_poly(P3, 2))
        assert prob.domain_monomials() == ((0, 3), (1, 2), (2, 1), (3, 0))
        # delta above: x-exponent capped at deg_x f - 1
        prob = HomProblem(P3, r_poly(P3), 3, h_poly(P3, 2))
        assert prob.domain_monomials() == ((1, 2), (2, 1), (3, 0))


class TestGoldenSpaces:
    def test_level_space_p3(self):
        space = ma_space(P3, 2)
        assert [b.text() for b in space.basis] == ["x^3", "t^3"]

    def test_level_space_p5(self):
        space = ma_space(P5, 2)
        assert [b.text() for b in space.basis] == [
            "x^6 + 2*t^4*x^2",
            "t*x^5",
            "t^2*x^4 + t^3*x^3 + 4*t^4*x^2",
            "t^6",
        ]

    def test_level_space_dims(self):
        for q in (3, 5, 7, 11):
            assert ma_space(PrimeModulus(q), 2).dim == q - 1

    def test_level_divisor_shape(self):
        # r^(a-1) times the lower half of the weights, level data attached
        for q, a in ((3, 2), (5, 2), (5, 3)):
            mod = PrimeModulus(q)
            space = ma_space(mod, a)
            expected = poly_pow(r_poly(mod), a - 1)
            for w in range((q - 1) // 2 + 1):
                expected = expected * BiPoly(mod, {(0, 1): 1, (1, 0): -w})
            assert space.problem.f == expected
            assert space.problem.delta == parameters(mod, a).delta
            assert space.problem.h == h_poly(mod, a)

    def test_full_regular_divisor_cuts_to_family_span(self):
        # demanding divisibility by r^a instead keeps only the family span
        prob = HomProblem(P5, poly_pow(r_poly(P5), 2), 6, h_poly(P5, 2))
        space = hom_space(prob)
        assert space.dim == 3
        for k in range(3):
            assert contains(space, family_element(P5, k))

    def test_single_regular_block_p3(self):
        prob = HomProblem(P3, r_poly(P3), 3, h_poly(P3, 2))
        assert hom_space(prob).dim == 3

    def test_shifted_level_is_r_times_lower(self):
        lower = ma_space(P3, 2)
        upper = ma_space(P3, 3)
        r = r_poly(P3)
        assert [b.text() for b in upper.basis] == [(m * r).text() for m in lower.basis]

    def test_to_json(self):
        data = ma_space(P3, 2).to_json(a=2)
        assert data == {
            "p": 3,
            "a": 2,
            "f": "x^5 + 2*t*x^4 + 2*t^2*x^3 + t^3*x^2",
            "delta": 3,
            "dim": 2,
            "basis": ["x^3", "t^3"],
        }
        assert "basis" not in ma_space(P3, 2).to_json(include_basis=False)


def _in_span(space: HomSpace, m: BiPoly) -> bool:
    domain = space.problem.domain_monomials()
    index = {key: i for i, key in enumerate(domain)}
    rows = []
    for b in space.basis:
        vec = [0] * len(domain)
        for i, j, c in b.iterterms():
            vec[index[(i, j)]] = c
        rows.append(vec)
    vec = [0] * len(domain)
    for i, j, c in m.iterterms():
        if (i, j) not in index:
            return False
        vec[index[(i, j)]] = c
    with_m = FpMatrix(space.problem.p, rows + [vec], len(domain))
    return with_m.rank() == len(rows)


class TestKernelCorrectness:
    # dual route: membership is decided by divisibility, never via the basis

    @pytest.mark.parametrize("q,a", [(3, 2), (5, 2), (5, 3), (7, 2)])
    def test_every_basis_element_divides(self, q, a):
        space = ma_space(PrimeModulus(q), a)
        for b in space.basis:
            assert contains(space, b)

    @pytest.mark.parametrize("q,a", [(3, 2), (5, 2)])
    def test_non_members_fail(self, q, a):
        import random

        rng = random.Random(20260816)
        space = ma_space(PrimeModulus(q), a)
        domain = space.problem.domain_monomials()
        checked = 0
        while checked < len(domain) - space.dim:
            coeffs = {key: rng.randrange(q) for key in domain}
            m = BiPoly(space.problem.p, coeffs)
            if m.is_zero() or _in_span(space, m):
                continue
            assert not contains(space, m)
            checked += 1

    def test_membership_is_linear(self):
        space = ma_space(P5, 2)
        a, b = space.basis[0], space.basis[1]
        assert contains(space, a + b)
        assert contains(space, a * 3 - b)

    def test_contains_rejects_wrong_degree(self):
        space = ma_space(P3, 2)
        with pytest.raises(ValueError):
            contains(space, BiPoly.x(P3))
        with pytest.raises(ValueError):
            contains(space, BiPoly(P3, {(0, 3): 1, (0, 1): 1}))
        assert contains(space, BiPoly.zero(P3))


class TestFamily:
    def test_explicit_form(self):
        # t^((p-1)/2-k) x^k (k x^(p-1) + (1-k) t^(p-1))
        assert family_element(P5, 0) == parse_poly(P5, "t^6")
        assert family_element(P5, 1) == parse_poly(P5, "t*x^5")
        assert family_element(P5, 2) == parse_poly(P5, "2*x^6 + 4*t^4*x^2")

    @pytest.mark.parametrize("q", [3, 5, 7])
    def test_membership_and_independence(self, q):
        mod = PrimeModulus(q)
        space = ma_space(mod, 2)
        count = (q + 1) // 2
        elems = [family_element(mod, k) for k in range(count)]
        for m in elems:
            assert contains(space, m)
        domain = space.problem.domain_monomials()
        index = {key: i for i, key in enumerate(domain)}
        rows = []
        for m in elems:
            vec = [0] * len(domain)
            for i, j, c in m.iterterms():
                vec[index[(i, j)]] = c
            rows.append(vec)
        assert FpMatrix(mod, rows, len(domain)).rank() == count

    def test_range_checks(self):
        for bad in (-1, 3, True):
            with pytest.raises(ValueError):
                family_element(P5, bad)


class TestShifts:
    @pytest.mark.parametrize("q", [3, 5])
    def test_round_trips(self, q):
        mod = PrimeModulus(q)
        for a in range(2, q):
            for m in ma_space(mod, a).basis:
                lifted = mul_r_shift(mod, a, a + 1, m)
                assert div_r_shift(mod, a + 1, lifted) == m

    def test_multi_step(self):
        m = ma_space(P3, 2).basis[0]
        lifted = mul_r_shift(P3, 2, 3, m)
        assert lifted == m * r_poly(P3)
        again = mul_r_shift(P3, 2, 2, m)
        assert again == m

    def test_rejects_non_members(self):
        outside = BiPoly.monomial(P3, 2, 1)  # t^2 x, not in the level-2 space
        with pytest.raises(ValueError):
            mul_r_shift(P3, 2, 3, outside)
        with pytest.raises(ValueError):
            div_r_shift(P3, 3, BiPoly.monomial(P3, 3, 3))

    def test_level_range_checks(self):
        m = ma_space(P3, 2).basis[0]
        with pytest.raises(ValueError):
            mul_r_shift(P3, 1, 2, m)
        with pytest.raises(ValueError):
            mul_r_shift(P3, 2, 1, m)
        with pytest.raises(ValueError):
            div_r_shift(P3, 2, m)


class TestIdentitySuite:
    @pytest.mark.parametrize("q", [3, 5, 7])
    def test_qr_identity(self, q):
        assert verify_qr_identity(PrimeModulus(q))

    @pytest.mark.parametrize("q", [3, 5, 7])
    def test_substitution_identity(self, q):
        assert verify_substitution_identity(PrimeModulus(q))

    @pytest.mark.parametrize("q", [3, 5])
    def test_k_lemma(self, q):
        assert verify_k_lemma(PrimeModulus(q))


class TestEchelonForm:
    @pytest.mark.parametrize("q,a", [(3, 2), (5, 2), (7, 2), (5, 3)])
    def test_reduced_echelon_basis(self, q, a):
        space = ma_space(PrimeModulus(q), a)
        leads = []
        for b in space.basis:
            lead = b.terms()[0]
            assert lead[2] == 1  # leading coefficient normalized
            leads.append((lead[0], lead[1]))
        assert len(set(leads)) == len(leads)
        # no basis element mentions another one's leading monomial
        for b in space.basis:
            own = b.terms()[0][:2]
            for i, j in leads:
                if (i, j) != own:
                    assert not b.coefficient(i, j)


class TestColumnAssembly:
    @pytest.mark.parametrize("q,a,k", [(3, 2, 2), (5, 2, 3), (5, 2, 5), (5, 3, 1)])
    def test_graded_matches_generic(self, q, a, k):
        mod = PrimeModulus(q)
        prob = HomProblem(mod, f_of(filtration_rep(mod, a, k)), parameters(mod, a).delta, h_poly(mod, a))
        assert _graded_columns(prob) == _generic_columns(prob)

    def test_inhomogeneous_divisor_uses_generic_path(self):
        f = BiPoly(P3, {(0, 3): 1, (1, 0): -1})  # x^3 - t, monic, not homogeneous
        prob = HomProblem(P3, f, 3, h_poly(P3, 2))
        space = hom_space(prob)
        for b in space.basis:
            assert contains(space, b)


class TestOracleAgreement:
    @pytest.mark.parametrize("q,a", [(3, 2), (5, 2), (3, 3)])
    def test_level_dims(self, q, a):
        assert ma_space(PrimeModulus(q), a).dim == m_nullity(q, a)

    @pytest.mark.parametrize("q,a,k", [(3, 2, 0), (3, 2, 3), (5, 2, 4)])
    def test_flag_dims(self, q, a, k):
        mod = PrimeModulus(q)
        pars = parameters(mod, a)
        prob = HomProblem(mod, f_of(filtration_rep(mod, a, k)), pars.delta, h_poly(mod, a))
        f_dict = {(i, j): c for i, j, c in prob.f.iterterms()}
        h_dict = {(i, j): c for i, j, c in prob.h.iterterms()}
        assert hom_space(prob).dim == kernel_nullity(q, f_dict, pars.delta, h_dict)
