import math

from hypothesis import given, settings
from hypothesis import strategies as st

from rverify.contfrac import (
    CFGenerator,
    cubes_cf,
    evaluate_backward,
    evaluate_cf,
    golden_cf,
    squares_cf,
)


def test_golden_ratio_fixed_point():
    res = evaluate_cf(golden_cf())
    assert res.converged
    assert abs(res.real - (math.sqrt(5) - 1) / 2) < 1e-15


def test_term_patterns_are_transcribed_exactly():
    sq = [squares_cf().terms(n) for n in range(1, 8)]
    # a_1 is the leading numerator, then 1^2, 1^2, 2^2, 2^2, ...
    assert [a for a, _ in sq] == [1, 1, 1, 4, 4, 9, 9]
    assert all(b == 1 for _, b in sq)
    cu = [cubes_cf().terms(n) for n in range(1, 8)]
    assert [a for a, _ in cu] == [1, 1, 1, 8, 8, 27, 27]
    assert [b for _, b in cu] == [1, 1, 3, 1, 5, 1, 7]


def test_iteration_cap_flags_nonconvergence():
    res = evaluate_cf(squares_cf(), tol=1e-15, max_terms=100)
    assert not res.converged and res.evaluations == 100


def test_zero_b0_and_zero_denominators_are_safe():
    # 0 + 1/(0 + 1/(0 + ...)) hits the tiny-pivot path without dividing by zero
    res = evaluate_cf(CFGenerator(0.0, lambda n: (1.0, 0.0)), max_terms=20)
    assert math.isfinite(res.real) or not res.converged


def test_error_bound_brackets_truth_for_positive_terms():
    res = evaluate_cf(squares_cf(), tol=1e-8)
    reference = evaluate_cf(squares_cf(), tol=1e-10)
    assert abs(res.real - reference.real) <= res.error_estimate + reference.error_estimate


positive_terms = st.lists(
    st.tuples(st.floats(0.05, 5.0), st.floats(0.5, 5.0)), min_size=4, max_size=12
)


@settings(max_examples=100, deadline=None)
@given(st.floats(0.0, 3.0), positive_terms)
def test_lentz_matches_backward_evaluation(b0, cycle):
    def terms(n):
        return cycle[(n - 1) % len(cycle)]

    gen = CFGenerator(b0, terms)
    forward = evaluate_cf(gen, tol=1e-16, max_terms=200)
    backward = evaluate_backward(gen, 200)
    assert abs(forward.real - backward) <= 1e-12 * max(1.0, abs(backward))
