import json
import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quatlef.errors import ExternalFieldError, ValidationError
from quatlef.numberfield import (
    Ideal,
    TotallyRealField,
    dedekind_zeta_neg,
    factorize,
    gen_bernoulli,
    ideal_from_integer,
    is_fundamental_discriminant,
    is_prime,
    kronecker,
    kronecker_symbol,
    split_prime,
    zeta_f_positive_even_numeric,
    zeta_truncation_bound,
)

Q = TotallyRealField.rationals()
Q5 = TotallyRealField.real_quadratic(5)
Q2 = TotallyRealField.real_quadratic(2)

SMALL_PRIMES = [p for p in range(2, 120) if is_prime(p)]


def test_kronecker_examples():
    assert kronecker(5, 2) == -1
    assert kronecker(5, 4) == 1
    assert kronecker(5, 10) == 0


def test_kronecker_rejects_non_fundamental():
    with pytest.raises(ValidationError):
        kronecker(6, 5)
    with pytest.raises(ValidationError):
        kronecker(9, 2)


def test_fundamental_discriminants():
    assert is_fundamental_discriminant(5)
    assert is_fundamental_discriminant(8)
    assert is_fundamental_discriminant(12)
    assert is_fundamental_discriminant(-4)
    assert not is_fundamental_discriminant(6)
    assert not is_fundamental_discriminant(4)


@given(
    st.sampled_from([5, 8, 12, 13, 17, 21]),
    st.integers(min_value=1, max_value=500),
    st.integers(min_value=1, max_value=500),
)
def test_kronecker_multiplicative_and_periodic(disc, m, k):
    assert kronecker_symbol(disc, m * k) == kronecker_symbol(
        disc, m
    ) * kronecker_symbol(disc, k)
    assert kronecker_symbol(disc, m) == kronecker_symbol(disc, m + abs(disc))


class TestSplitting:
    def test_rationals(self):
        (prime,) = split_prime(Q, 7)
        assert (prime.p, prime.f, prime.e, prime.norm) == (7, 1, 1, 7)

    def test_split_prime_11(self):
        primes = split_prime(Q5, 11)
        assert len(primes) == 2
        assert all(p.norm == 11 for p in primes)
        assert {p.label for p in primes} == {"a", "b"}

    def test_inert_prime_2(self):
        (prime,) = split_prime(Q5, 2)
        assert (prime.f, prime.e, prime.norm) == (2, 1, 4)

    def test_ramified_prime_5(self):
        (prime,) = split_prime(Q5, 5)
        assert (prime.f, prime.e, prime.norm) == (1, 2, 5)

    def test_non_prime_rejected(self):
        with pytest.raises(ValidationError):
            split_prime(Q5, 6)

    @given(st.sampled_from(SMALL_PRIMES), st.sampled_from([2, 3, 5, 7, 13]))
    def test_quadratic_ef_sums_to_two(self, p, d):
        field = TotallyRealField.real_quadratic(d)
        assert sum(q.e * q.f for q in split_prime(field, p)) == 2


class TestIdeals:
    def test_norms(self):
        assert Ideal(Q).norm() == 1
        assert ideal_from_integer(Q, 12).norm() == 12
        assert ideal_from_integer(Q5, 5).norm() == 25
        assert ideal_from_integer(Q5, 3).norm() == 9

    def test_ideal_from_integer_structure(self):
        ideal = ideal_from_integer(Q, 12)
        exps = {prime.p: exp for prime, exp in ideal.factors}
        assert exps == {2: 2, 3: 1}
        ram = ideal_from_integer(Q5, 5)
        ((prime, exp),) = ram.factors
        assert exp == 2 and prime.e == 2

    def test_small_integer_rejected(self):
        with pytest.raises(ValidationError):
            ideal_from_integer(Q, 1)

    def test_divides(self):
        p2 = split_prime(Q, 2)[0]
        p3 = split_prime(Q, 3)[0]
        one = Ideal(Q, ((p2, 1),))
        two = Ideal(Q, ((p2, 2),))
        other = Ideal(Q, ((p3, 1),))
        assert one.divides(two)
        assert not two.divides(one)
        assert not one.divides(other)

    def test_divides_requires_common_field(self):
        a = ideal_from_integer(Q, 3)
        b = ideal_from_integer(Q5, 3)
        with pytest.raises(ValidationError):
            a.divides(b)

    def test_factors_merge_and_sort(self):
        p2 = split_prime(Q, 2)[0]
        ideal = Ideal(Q, ((p2, 1), (p2, 2)))
        assert ideal.factors == ((p2, 3),)

    @given(st.integers(min_value=2, max_value=400), st.integers(min_value=2, max_value=400))
    def test_norm_multiplicative(self, a, b):
        assert (
            ideal_from_integer(Q5, a * b).norm()
            == ideal_from_integer(Q5, a).norm() * ideal_from_integer(Q5, b).norm()
        )


class TestGenBernoulli:
    def test_k2(self):
        assert gen_bernoulli(2, Q5.character()) == Fraction(4, 5)

    def test_k4(self):
        assert gen_bernoulli(4, Q5.character()) == Fraction(-8)

    def test_k1_vanishes_for_even_character(self):
        assert gen_bernoulli(1, Q5.character()) == 0


class TestDedekindZeta:
    def test_rationals(self):
        assert dedekind_zeta_neg(Q, 1) == Fraction(-1, 12)

    def test_quadratic_5(self):
        assert dedekind_zeta_neg(Q5, 1) == Fraction(1, 30)
        assert dedekind_zeta_neg(Q5, 2) == Fraction(1, 60)

    def test_quadratic_2(self):
        assert dedekind_zeta_neg(Q2, 1) == Fraction(1, 12)

    def test_sign_law(self):
        for field in (Q, Q5, Q2):
            for j in range(1, 9):
                value = dedekind_zeta_neg(field, j)
                assert value != 0
                assert (value > 0) == (j * field.degree % 2 == 0)


class TestNumericZeta:
    def test_riemann_pi_squared_over_six(self):
        got = zeta_f_positive_even_numeric(Q, 1, 10**6)
        assert abs(got - math.pi**2 / 6) < 1e-6

    def test_riemann_zeta_4(self):
        got = zeta_f_positive_even_numeric(Q, 2, 10**4)
        assert got == pytest.approx(1.0823232337, abs=1e-9)

    def test_truncation_bound_honest(self):
        for terms in (10**3, 10**4):
            got = zeta_f_positive_even_numeric(Q, 1, terms)
            assert abs(got - math.pi**2 / 6) <= zeta_truncation_bound(Q, 1, terms)

    def test_functional_equation_two_sided(self):
        # exact negative values against the independent series at 2j
        for field in (Q, Q5, Q2):
            for j in (1, 2):
                lhs = zeta_f_positive_even_numeric(field, j, 10**6)
                lhs *= float(field.abs_discriminant) ** ((4 * j - 1) / 2)
                lhs *= (
                    2 * math.factorial(2 * j - 1) / (2 * math.pi) ** (2 * j)
                ) ** field.degree
                rhs = (-1) ** (j * field.degree) * float(dedekind_zeta_neg(field, j))
                assert abs(lhs - rhs) <= 1e-6 * abs(rhs)

    def test_external_rejected(self):
        ext = TotallyRealField.external(2, 5, 2, (Fraction(1, 30),), {2: [(2, 1)]})
        with pytest.raises(ValidationError):
            zeta_f_positive_even_numeric(ext, 1, 10**4)

    def test_too_few_terms_rejected(self):
        with pytest.raises(ValidationError):
            zeta_f_positive_even_numeric(Q, 1, 50)


class TestExternalField:
    DESCRIPTOR = {
        "degree": 2,
        "abs_discriminant": 5,
        "num_real_places": 2,
        "zeta_neg": ["1/30", "1/60"],
        "splitting": {"2": [[2, 1]], "5": [[1, 2]], "11": [[1, 1], [1, 1]]},
    }

    def test_round_trip_from_file(self, tmp_path):
        path = tmp_path / "field.json"
        path.write_text(json.dumps(self.DESCRIPTOR), encoding="utf-8")
        ext = TotallyRealField.from_json_file(path)
        assert dedekind_zeta_neg(ext, 1) == Fraction(1, 30)
        assert dedekind_zeta_neg(ext, 2) == Fraction(1, 60)
        assert [p.norm for p in split_prime(ext, 11)] == [11, 11]
        assert split_prime(ext, 2)[0].norm == 4

    def test_matches_native_splitting(self):
        ext = TotallyRealField.from_descriptor(self.DESCRIPTOR)
        for p in (2, 5, 11):
            assert [
                (q.f, q.e) for q in split_prime(ext, p)
            ] == [(q.f, q.e) for q in split_prime(Q5, p)]

    def test_missing_prime_raises(self):
        ext = TotallyRealField.from_descriptor(self.DESCRIPTOR)
        with pytest.raises(ExternalFieldError):
            split_prime(ext, 7)

    def test_missing_zeta_entry_raises(self):
        ext = TotallyRealField.from_descriptor(self.DESCRIPTOR)
        with pytest.raises(ExternalFieldError):
            dedekind_zeta_neg(ext, 3)

    def test_unknown_key_rejected(self):
        bad = dict(self.DESCRIPTOR, surprise=1)
        with pytest.raises(ValidationError):
            TotallyRealField.from_descriptor(bad)

    def test_bad_ef_sum_rejected(self):
        bad = dict(self.DESCRIPTOR, splitting={"3": [[1, 1]]})
        with pytest.raises(ValidationError):
            TotallyRealField.from_descriptor(bad)

    def test_bad_zeta_sign_rejected(self):
        bad = dict(self.DESCRIPTOR, zeta_neg=["-1/30"])
        with pytest.raises(ValidationError):
            TotallyRealField.from_descriptor(bad)

    def test_complex_places_allowed_without_sign_check(self):
        field = TotallyRealField.external(4, 725, 2, (), {2: [(4, 1)]})
        assert not field.is_totally_real


def test_real_quadratic_validation():
    with pytest.raises(ValidationError):
        TotallyRealField.real_quadratic(12)
    with pytest.raises(ValidationError):
        TotallyRealField.real_quadratic(1)
    assert Q5.abs_discriminant == 5
    assert Q2.abs_discriminant == 8
    assert TotallyRealField.real_quadratic(3).abs_discriminant == 12


def test_factorize():
    assert factorize(360) == [(2, 3), (3, 2), (5, 1)]
    assert factorize(1) == []
