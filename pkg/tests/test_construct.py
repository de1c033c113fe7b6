"""Family builders against hand values, the slow reference, and the closed forms."""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles as orc
from cubespec import (
    ParamSeq,
    ParameterError,
    ResourceLimitError,
    build_pq,
    clamped_sum_l2_norm,
    closed_form,
    evaluate_at,
    four_variants,
    neeman_function,
    normalized_closed_form,
    normalized_real,
    normalized_sum,
    remark3_params,
    stats,
    subset_products,
    theorem_params,
    unimodular_complex,
    walsh_transform,
)

RNG = np.random.default_rng(2025)

weight_lists = st.lists(
    st.floats(min_value=0.05, max_value=1.0, allow_nan=False), min_size=1, max_size=6
)


def brute(params):
    """Slow reference stats of the first recursion table."""
    p, _ = orc.pair_tables(list(params.a))
    co = orc.transform(p)
    return orc.l2(p), orc.linf(p), orc.influence(co), orc.entropy(co)


class TestRecursionTables:
    def test_base_case_is_two_constants(self):
        pair = build_pq(ParamSeq([]))
        assert pair.p.values.tolist() == [1.0]
        assert pair.q.values.tolist() == [1.0]

    def test_single_step_hand_values(self):
        pair = build_pq(ParamSeq([1.0]))
        assert pair.p.values.tolist() == [2.0, 0.0]
        assert pair.q.values.tolist() == [0.0, -2.0]

    def test_two_step_hand_values(self):
        pair = build_pq(ParamSeq([1.0, 0.5]))
        assert pair.p.values.tolist() == [2.0, -1.0, 2.0, 1.0]
        assert pair.q.values.tolist() == [1.0, 2.0, -1.0, 2.0]
        squares = pair.p.values**2 + pair.q.values**2
        assert np.array_equal(squares, np.full(4, 5.0))

    def test_tables_match_reference_bit_for_bit(self):
        for n in range(1, 9):
            a = RNG.uniform(0.05, 1.0, n)
            pair = build_pq(ParamSeq(a))
            p, q = orc.pair_tables(list(a))
            assert pair.p.values.tolist() == p
            assert pair.q.values.tolist() == q

    def test_squared_sum_constant_over_random_draws(self):
        # |P|^2 + |Q|^2 must be flat at 2 * prod(1 + a_i^2)
        for trial in range(100):
            n = int(RNG.integers(1, 13))
            a = RNG.uniform(0.05, 1.0, n)
            pair = build_pq(ParamSeq(a))
            squares = pair.p.values**2 + pair.q.values**2
            target = 2.0 * np.prod(1.0 + a * a)
            assert np.max(np.abs(squares - target)) <= 1e-12 * target

    def test_cap_enforced_before_allocation(self):
        with pytest.raises(ResourceLimitError):
            build_pq(ParamSeq([0.5] * 27))
        with pytest.raises(ResourceLimitError):
            build_pq(ParamSeq([0.5] * 6), max_table_n=5)


class TestStreamingEvaluator:
    def test_base_case(self):
        p, q = evaluate_at(ParamSeq([]), 0)
        assert (p, q) == (1.0, 1.0)

    def test_single_step_positive_point(self):
        p, q = evaluate_at(ParamSeq([1.0]), 0)
        assert (p, q) == (2.0, 0.0)

    def test_matches_tables_on_every_point(self):
        for n in range(1, 11):
            a = ParamSeq(RNG.uniform(0.05, 1.0, n))
            pair = build_pq(a)
            for x in range(1 << n):
                p, q = evaluate_at(a, x)
                ref = max(1.0, abs(pair.p.values[x]), abs(pair.q.values[x]))
                assert abs(p - pair.p.values[x]) <= 1e-12 * ref
                assert abs(q - pair.q.values[x]) <= 1e-12 * ref

    def test_second_evaluation_order_at_n30(self):
        # rebuild each point value through a left-to-right 2x2 matrix
        # product, a different rounding order than the scalar recursion
        a = ParamSeq(RNG.uniform(0.05, 1.0, 30))
        for point in RNG.integers(0, 1 << 30, size=50):
            m = np.eye(2)
            for i, ai in enumerate(a.a):
                eps = -1.0 if (int(point) >> i) & 1 else 1.0
                m = np.array([[1.0, ai * eps], [ai * eps, -1.0]]) @ m
            pref, qref = m @ np.array([1.0, 1.0])
            p, q = evaluate_at(a, int(point))
            ref = max(1.0, abs(pref), abs(qref))
            assert abs(p - pref) <= 1e-12 * ref
            assert abs(q - qref) <= 1e-12 * ref

    def test_point_out_of_range_rejected(self):
        with pytest.raises(ParameterError):
            evaluate_at(ParamSeq([0.5]), 2)
        with pytest.raises(ParameterError):
            evaluate_at(ParamSeq([0.5]), -1)


class TestClosedForm:
    def test_matches_reference_on_random_sequences(self):
        for _ in range(25):
            n = int(RNG.integers(1, 9))
            params = ParamSeq(RNG.uniform(0.05, 1.0, n))
            rep = closed_form(params)
            l2, linf, infl, ent = brute(params)
            assert abs(rep.l2_norm - l2) <= 1e-12 * l2
            assert rep.linf_lower * (1 - 1e-12) <= linf <= rep.linf_upper * (1 + 1e-12)
            assert abs(rep.influence - infl) <= 1e-12 * infl
            assert abs(rep.entropy - ent) <= 1e-11 * max(1.0, abs(ent))

    def test_coefficient_log_magnitudes(self):
        params = ParamSeq(RNG.uniform(0.1, 1.0, 6))
        rep = closed_form(params)
        coeffs = walsh_transform(build_pq(params).p).coeffs
        for mask in range(64):
            want = sum(rep.coeff_log_magnitude[i] for i in range(6) if mask >> i & 1)
            got = 2.0 * math.log2(abs(coeffs[mask]))
            assert abs(got - want) <= 1e-10 * max(1.0, abs(want))

    def test_influence_stays_under_exponential_bound(self):
        for _ in range(20):
            params = ParamSeq(RNG.uniform(0.05, 1.0, int(RNG.integers(1, 14))))
            rep = closed_form(params)
            k = params.total_mass
            assert rep.remark1_bound == k * math.exp(k)
            assert rep.influence < rep.remark1_bound

    def test_unit_weights_limit(self):
        # log2(1) = 0 empties the entropy sum; influence is n * 2^(n-1)
        for n in (1, 4, 7):
            rep = closed_form(ParamSeq([1.0] * n))
            assert rep.entropy == 0.0
            assert rep.influence == n * 2.0 ** (n - 1)

    def test_empty_sequence(self):
        rep = closed_form(ParamSeq([]))
        assert (rep.l2_norm, rep.influence, rep.entropy) == (1.0, 0.0, 0.0)

    def test_huge_n_runs_fast_without_tables(self):
        rep = closed_form(remark3_params(2**20, 32.0))
        assert rep.influence > 0.0 and math.isfinite(rep.entropy)


class TestNormalizedClosedForm:
    def test_frozen_quarter_weights(self):
        ncf = normalized_closed_form(ParamSeq([0.5] * 4))
        assert abs(ncf.influence - 0.8) <= 1e-12
        assert abs(ncf.entropy - 2.8877123795494493) <= 1e-12
        assert abs(ncf.entropy_lower_bound - 1.6) <= 1e-12
        assert ncf.entropy > ncf.entropy_lower_bound

    def test_matches_brute_on_normalized_table(self):
        for _ in range(15):
            n = int(RNG.integers(1, 9))
            params = ParamSeq(RNG.uniform(0.05, 1.0, n))
            ncf = normalized_closed_form(params)
            vals = normalized_real(params).values
            co = orc.transform(list(vals))
            assert abs(orc.influence(co) - ncf.influence) <= 1e-11 * max(1.0, ncf.influence)
            assert abs(orc.entropy(co) - ncf.entropy) <= 1e-11 * max(1.0, ncf.entropy)

    def test_unit_weights_give_half_n_and_n(self):
        for n in (2, 8, 12):
            ncf = normalized_closed_form(ParamSeq([1.0] * n))
            assert ncf.influence == n / 2.0
            assert ncf.entropy == float(n)


class TestParamFamilies:
    def test_theorem_params_values(self):
        assert theorem_params(1).a.tolist() == [1.0]
        assert theorem_params(4).a.tolist() == [0.5, 0.5, 0.5, 0.5]
        nine = theorem_params(9)
        assert np.allclose(nine.a, 1.0 / 3.0, rtol=0, atol=0)
        assert abs(normalized_closed_form(nine).influence - 0.9) <= 1e-12

    def test_theorem_params_normalized_summary(self):
        for n in (2, 5, 16):
            ncf = normalized_closed_form(theorem_params(n))
            assert abs(ncf.influence - n / (n + 1.0)) <= 1e-12
            want_h = (n / (n + 1.0)) * math.log2(n) + n * math.log2(1.0 + 1.0 / n)
            assert abs(ncf.entropy - want_h) <= 1e-12 * max(1.0, want_h)

    def test_scaled_family_values_and_bracket(self):
        params = remark3_params(16, 4.0)
        assert params.a.tolist() == [0.5] * 16
        ncf = normalized_closed_form(params)
        assert abs(ncf.influence - 3.2) <= 1e-12
        assert 2.0 < ncf.influence < 4.0

    def test_scaled_family_mid_case(self):
        ncf = normalized_closed_form(remark3_params(4, 2.0))
        assert abs(ncf.influence - 4.0 / 3.0) <= 1e-12

    def test_scaled_family_large(self):
        ncf = normalized_closed_form(remark3_params(256, 16.0))
        assert 8.0 < ncf.influence < 16.0
        assert ncf.entropy > 8.0 * (8.0 - 4.0)

    def test_scaled_family_open_interval(self):
        for bad in (1.0, 4.0, 0.5, 5.0, 0.0, -2.0):
            with pytest.raises(ParameterError):
                remark3_params(4, bad)

    def test_weight_range_validation(self):
        with pytest.raises(ParameterError):
            ParamSeq([0.5, 1.5])
        with pytest.raises(ParameterError):
            ParamSeq([0.0])
        with pytest.raises(ParameterError):
            ParamSeq([float("nan")])

    def test_subset_products_hand_case(self):
        got = subset_products([2.0, 3.0, 5.0])
        assert got.tolist() == [1.0, 2.0, 3.0, 6.0, 5.0, 10.0, 15.0, 30.0]


class TestNormalizedBuilders:
    def test_real_builder_unit_norm_and_bounded(self):
        for n in range(1, 9):
            f = normalized_real(theorem_params(n))
            vals = list(f.values)
            assert abs(orc.l2(vals) - 1.0) <= 1e-12
            assert orc.linf(vals) <= math.sqrt(2.0) + 1e-12

    def test_complex_builder_lands_on_unit_circle(self):
        for n in range(1, 9):
            f = unimodular_complex(ParamSeq(RNG.uniform(0.05, 1.0, n)))
            assert np.max(np.abs(np.abs(f.values) - 1.0)) <= 1e-12

    def test_real_and_complex_share_weight_distribution(self):
        params = theorem_params(6)
        a = stats(normalized_real(params))
        b = stats(unimodular_complex(params))
        assert abs(a.influence - b.influence) <= 1e-12
        assert abs(a.entropy - b.entropy) <= 1e-12

    def test_four_variants_base_case(self):
        variants = four_variants(ParamSeq([]))
        assert variants[0].values.tolist() == [1 + 1j]
        co = orc.transform([1 + 1j])
        assert abs(abs(co[0]) - math.sqrt(2.0)) <= 1e-15

    def test_four_variants_equal_magnitude_tables(self):
        params = ParamSeq(RNG.uniform(0.1, 1.0, 3))
        mags = [np.abs(walsh_transform(v).coeffs) for v in four_variants(params)]
        for other in mags[1:]:
            assert np.max(np.abs(other - mags[0])) <= 1e-13

    def test_four_variants_magnitude_formula(self):
        variants = four_variants(ParamSeq([0.5] * 5))
        for v in variants:
            mags = np.abs(walsh_transform(v).coeffs)
            for mask in range(32):
                want = math.sqrt(2.0) * 0.5 ** bin(mask).count("1")
                assert abs(mags[mask] - want) <= 1e-13


class TestSumFamilies:
    def test_normalized_sum_single_coordinate(self):
        f = normalized_sum(1)
        assert f.values.tolist() == [1.0, -1.0]

    def test_normalized_sum_stats(self):
        st4 = stats(normalized_sum(4))
        assert abs(st4.influence - 1.0) <= 1e-12
        assert abs(st4.entropy - 2.0) <= 1e-12
        st16 = stats(normalized_sum(16))
        assert abs(st16.influence - 1.0) <= 1e-12
        assert abs(st16.entropy - 4.0) <= 1e-12

    def test_clamped_raw_hand_values(self):
        f = neeman_function(2, 1.0, normalize=False)
        assert f.values.tolist() == [1.0, 0.0, 0.0, -1.0]

    def test_clamped_normalized_small_case(self):
        st_ = stats(neeman_function(2, 1.0, normalize=True))
        assert abs(st_.l2_norm - 1.0) <= 1e-12
        assert abs(st_.influence - 1.0) <= 1e-12
        assert abs(st_.entropy - 1.0) <= 1e-12

    def test_inactive_clamp_matches_plain_sum(self):
        a = neeman_function(16, 10.0, normalize=True)
        b = normalized_sum(16)
        assert np.array_equal(a.values, b.values)
        a2 = neeman_function(16, 10.0, normalize=False)
        assert np.array_equal(a2.values, b.values)

    def test_l2_normalizer_matches_enumeration(self):
        for n in range(1, 9):
            for c in (0.5, 1.0, 2.0, 3.9):
                want = orc.l2(orc.clamped_sum(n, c))
                got = clamped_sum_l2_norm(n, c)
                assert abs(got - want) <= 1e-13 * want

    def test_clamp_must_be_positive(self):
        for bad in (0.0, -1.0):
            with pytest.raises(ParameterError):
                neeman_function(4, bad)
        with pytest.raises(ParameterError):
            clamped_sum_l2_norm(4, 0.0)


@given(weight_lists)
@settings(max_examples=50, deadline=None)
def test_closed_form_influence_entropy_property(a):
    params = ParamSeq(a)
    rep = closed_form(params)
    _, _, infl, ent = brute(params)
    assert abs(rep.influence - infl) <= 1e-10 * max(1.0, infl)
    assert abs(rep.entropy - ent) <= 1e-10 * max(1.0, abs(ent))


@given(weight_lists)
@settings(max_examples=50, deadline=None)
def test_constancy_property(a):
    pair = build_pq(ParamSeq(a))
    squares = pair.p.values**2 + pair.q.values**2
    target = 2.0 * float(np.prod(1.0 + np.asarray(a) ** 2))
    assert np.max(np.abs(squares - target)) <= 1e-12 * target
