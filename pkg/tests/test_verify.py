"""The verification layer: closed forms, reports, witnesses, suites."""

import json

import pytest

from heckeb.combinat import enumerate_good
from heckeb.hecke import HeckeElement, mult, t_of, trivial_quotient, z_coefficient
from heckeb.poly import BivarPoly, ONE, P, Q, cyclotomic, reduce_mod_cyclotomic
from heckeb.signedperm import generator, identity, make_cycle, make_w_nk
from heckeb import verify as V


class TestClosedForm:
    def test_k1(self):
        t = generator(0, 1)
        assert V.closed_form_w0k_square(1) == HeckeElement(
            1, {identity(1): P, t: ONE - P}
        )

    def test_k2_longest_coefficient(self):
        closed = V.closed_form_w0k_square(2)
        assert closed.coefficient(identity(2).negate()) == (ONE - P) ** 2

    @pytest.mark.parametrize("k", range(1, 7))
    def test_support_is_good_involutions(self, k):
        closed = V.closed_form_w0k_square(k)
        assert set(closed.support()) == {g.perm for g in enumerate_good(k)}


class TestW0k:
    @pytest.mark.parametrize("k", range(1, 6))
    def test_pass(self, k):
        report = V.verify_w0k(k)
        assert report.passed and report.witness is None

    def test_mutation_detected(self, monkeypatch):
        # perturbing one exponent in the closed form must fail with a witness
        original = V.closed_form_w0k_square

        def broken(k):
            closed = original(k)
            w0 = identity(k).negate()
            terms = dict(closed.sorted_terms())
            terms[w0] = terms[w0] * P
            return HeckeElement(k, terms)

        monkeypatch.setattr(V, "closed_form_w0k_square", broken)
        report = V.verify_w0k(3)
        assert not report.passed
        assert report.witness
        assert all({"where", "lhs", "rhs"} <= set(item) for item in report.witness)


class TestFk:
    def test_f1_f2_values(self):
        assert V.f_k_direct(1) == ONE - P
        assert V.f_k_direct(2) == ONE - (ONE + Q) * P + P * P

    @pytest.mark.parametrize("k", range(1, 7))
    def test_triple_agreement(self, k):
        assert V.f_k_direct(k) == V.f_k_recurrence(k) == V.f_k_separated(k)

    def test_k2_separated_expansion_sign(self):
        # the separated 2-set sum expands to 1 - (1+q)p + p^2, minus sign included
        expansion = (ONE - P) ** 2 + P * (ONE - Q)
        assert expansion == V.f_k_separated(2) == V.f_k_direct(2)
        assert expansion.coefficient(1, 0) == -1

    def test_verify_fk_report(self):
        assert V.verify_fk(3).passed

    @pytest.mark.parametrize("k", range(1, 9))
    def test_palindromic_coefficients(self, k):
        # reversing the p-coefficient list and scaling by (-1)^k restores f_k
        rows = V.f_k_recurrence(k).p_coefficients()
        assert len(rows) == k + 1
        sign = -1 if k % 2 else 1
        for lo, hi in zip(rows, reversed(rows)):
            assert lo == sign * hi


class TestBaseCase:
    def test_k2_value(self):
        mod = cyclotomic(2)
        assert reduce_mod_cyclotomic(V.f_k_direct(2), mod) == ONE + P**2

    def test_k3_value(self):
        mod = cyclotomic(3)
        assert reduce_mod_cyclotomic(V.f_k_direct(3), mod) == ONE - P**3

    @pytest.mark.parametrize("k", range(2, 7))
    def test_pass_with_engine(self, k):
        assert V.verify_base_case(k, engine_max=6).passed

    def test_unreduced_f2_differs(self):
        # before cyclotomic reduction the trivial quotient is f_2, not 1 + p^2
        z = z_coefficient(0, 2)
        scalar = trivial_quotient(z, 0, 2).coefficient(identity(0))
        assert scalar == V.f_k_direct(2)
        assert scalar != ONE + P**2


class TestConj:
    @pytest.mark.parametrize("k", range(1, 5))
    def test_pass(self, k):
        assert V.verify_conj_lemma(k).passed

    def test_k1_identity_has_three_successor_terms(self):
        from heckeb.combinat import conjugator

        x = conjugator(1)
        lhs = mult(mult(t_of(x), t_of(identity(2))), t_of(x.inverse()))
        assert len(lhs.support()) == 3


class TestTc:
    @pytest.mark.parametrize("n,k", [(0, 2), (1, 2), (0, 3)])
    def test_pass(self, n, k):
        assert V.verify_tc_identity(n, k).passed

    def test_group_algebra_degeneration(self):
        c = make_cycle(1, 2)
        product = mult(t_of(c.inverse()), t_of(c))
        assert product.specialize(1, 1) == {identity(4): 1}


class TestBaby:
    @pytest.mark.parametrize("n,k", [(0, 2), (1, 2), (0, 3)])
    def test_pass(self, n, k):
        assert V.verify_baby_succ(n, k).passed


class TestMain:
    @pytest.mark.parametrize("n,k", [(0, 2), (1, 2), (0, 3), (2, 2)])
    def test_pass(self, n, k):
        assert V.verify_main(n, k).passed

    def test_witness_on_forced_mismatch(self, monkeypatch):
        monkeypatch.setattr(V, "hecke_parameter", lambda k: P**k)
        report = V.verify_matrix(2)
        assert not report.passed and report.witness


class TestParameter:
    def test_values(self):
        assert V.hecke_parameter(2) == -(P**2)
        assert V.hecke_parameter(3) == P**3

    @pytest.mark.parametrize("k", range(2, 9))
    def test_matrix_relation(self, k):
        assert V.verify_matrix(k).passed

    def test_printed_matrix_entry_would_fail(self):
        # with the top-right entry read as -(-p^k) = p^k the relation breaks for even k
        qq = V.hecke_parameter(2)
        mat = ((BivarPoly(0), P**2), (ONE, ONE + (-P) ** 2))
        entry = (mat[0][0] - ONE) * (mat[0][0] + qq) + mat[0][1] * mat[1][0]
        assert entry != BivarPoly(0)


class TestCounts:
    @pytest.mark.parametrize("k", [1, 2, 7, 12])
    def test_separated(self, k):
        assert V.verify_separated_count(k).passed

    @pytest.mark.parametrize("k", [0, 1, 17, 30])
    def test_binom(self, k):
        assert V.verify_binom(k).passed


class TestReports:
    def test_json_schema(self):
        report = V.verify_fk(2)
        data = report.to_json()
        assert set(data) == {"statement", "params", "status", "witness", "ms"}
        assert data["status"] == "pass" and data["witness"] is None
        json.dumps(data)  # serializable

    def test_str_contains_status(self):
        assert "[PASS]" in str(V.verify_binom(3))

    def test_suite_sorted_and_passing(self):
        reports = V.run_suite(["tc", "baby"], max_rank=5)
        keys = [r.sort_key() for r in reports]
        assert keys == sorted(keys)
        assert all(r.passed for r in reports)

    def test_unknown_suite(self):
        with pytest.raises(ValueError):
            V.build_checks("nonsense")
