import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from spinsqueeze.errors import ArgumentError, EvaluationError, ParseError
from spinsqueeze.fnl import NonlinearFunction, builtin, evaluate, parse


@pytest.mark.parametrize(
    "expr,n,expected",
    [
        ("N^2-N", 3, 6),
        ("sin(2*N)", 0, 0),
        ("N^4", 2, 16),
        ("3", 7, 3),
        ("2*N^2", 3, 18),
        ("(2*N)^2", 3, 36),
        ("1 + 2 * N - 3", 4, 6),
        ("-N", 5, -5),
        ("-N^2", 3, 9),  # '-' is part of base, so this is (-N)^2
        ("-(N^2)", 3, -9),
        ("cos(0*N) + .5", 9, 1.5),
        ("N^0", 4, 1),
        ("2*-N", 3, -6),
        ("((N))", 2, 2),
        ("N - N - N", 1, -1),
    ],
)
def test_evaluation(expr, n, expected):
    assert evaluate(parse(expr), n) == expected


def test_sin_value():
    assert parse("sin(2*N)")(1) == pytest.approx(0.9092974268, abs=1e-10)
    assert parse("sin(2*N)")(1) == math.sin(2)


@pytest.mark.parametrize(
    "expr,pos",
    [
        ("N^^2", 2),
        ("N^2.5", 2),
        ("x", 0),
        ("N + exp(N)", 4),
        ("N +", 3),
        ("(N", 2),
        ("N)", 1),
        ("", 0),
        ("N $ 2", 2),
        ("sin N", 4),
        ("N^-1", 2),
        ("2 N", 2),
    ],
)
def test_syntax_errors_report_offset(expr, pos):
    with pytest.raises(ParseError) as info:
        parse(expr)
    assert info.value.position == pos
    assert f"offset {pos}" in str(info.value)


def test_error_kinds():
    with pytest.raises(ParseError, match="unknown identifier 'n'"):
        parse("n^2")
    with pytest.raises(ParseError, match="non-integer exponent"):
        parse("N^1.5")
    with pytest.raises(ArgumentError):
        parse(None)


def test_non_finite_value_names_n():
    f = parse("N^400")
    assert evaluate(f, 1) == 1.0
    with pytest.raises(EvaluationError) as info:
        evaluate(f, 10)
    assert info.value.n == 10
    with pytest.raises(EvaluationError):
        evaluate(parse("sin(N^200*N^200)"), 20)


def test_negative_n_rejected():
    with pytest.raises(ArgumentError):
        evaluate(parse("N"), -1)


def test_standard_families_total_on_large_spaces():
    for expr in ("N^2", "N^3", "N^4", "N^2-N", "sin(2*N)"):
        values = parse(expr).values(100)
        assert len(values) == 101
        assert all(math.isfinite(v) for v in values)


def test_round_trip_determinism():
    for expr in ("N^2-N", "sin(2*N)", "cos(N)*N^3 - 0.25"):
        first = [parse(expr)(n) for n in range(101)]
        second = [parse(expr)(n) for n in range(101)]
        assert first == second


def test_builtins_and_polynomial():
    assert builtin("parity")(4) == 12
    assert builtin("sin2").source == "sin(2*N)"
    p = NonlinearFunction.polynomial([1, -2, 0, 3])
    assert p(2) == 1 - 4 + 24
    assert parse(p.source)(2) == p(2)


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=5), st.integers(0, 50))
def test_polynomial_source_reparses(coeffs, n):
    p = NonlinearFunction.polynomial(coeffs)
    assert parse(p.source)(n) == pytest.approx(p(n), rel=1e-12, abs=1e-9)
