from fractions import Fraction

import pytest

from bernstir.bernoulli import (
    Method,
    UnsupportedIndexError,
    alternating_double_sum,
    bernoulli,
    bernoulli_alternating,
    bernoulli_bell,
    bernoulli_double_stirling,
    bernoulli_guo_qi,
    bernoulli_logan,
    bernoulli_oracle,
    bernoulli_theorem,
    power_sum_coeffs,
    supported_methods,
    supports,
)
from bernstir.series import bernoulli_series
from bernstir.stirling import StirlingTable


@pytest.fixture(scope="module")
def table():
    return StirlingTable(40)


def test_theorem_known_values(table):
    assert bernoulli_theorem(0, table) == 1
    assert bernoulli_theorem(1, table) == Fraction(-1, 2)
    assert bernoulli_theorem(2, table) == Fraction(1, 6)  # 0 - 1 + 7/6
    assert bernoulli_theorem(3, table) == 0  # -3/2 + 6 - 9/2


def test_theorem_table_too_small():
    with pytest.raises(ValueError):
        bernoulli_theorem(4, StirlingTable(7))


def test_bell_sum_known_values():
    assert bernoulli_bell(1) == Fraction(-1, 2)
    assert bernoulli_bell(2) == Fraction(1, 6)  # -1/3 + 2*(1/4)
    assert bernoulli_bell(5) == 0
    with pytest.raises(ValueError):
        bernoulli_bell(0)


def test_logan_known_values(table):
    assert bernoulli_logan(1, table) == Fraction(-1, 2)
    assert bernoulli_logan(2, table) == Fraction(1, 6)  # -1/2 + 2/3
    assert bernoulli_logan(4, table) == Fraction(-1, 30)
    with pytest.raises(ValueError):
        bernoulli_logan(5, StirlingTable(4))


def test_power_sum_known_coefficients():
    assert power_sum_coeffs(0).coeffs == (0, 1)
    assert power_sum_coeffs(2).coeffs == (
        0,
        Fraction(1, 6),
        Fraction(1, 2),
        Fraction(1, 3),
    )
    assert power_sum_coeffs(3).coeffs == (0, 0, Fraction(1, 4), Fraction(1, 2), Fraction(1, 4))


def test_power_sum_polynomial_identity():
    for p in range(13):
        coeffs = power_sum_coeffs(p).coeffs
        assert coeffs[0] == 0
        assert len(coeffs) == p + 2
        for n in range(1, p + 4):
            direct = sum(m**p for m in range(1, n + 1))
            poly = sum(a * n**m for m, a in enumerate(coeffs))
            assert poly == direct, (p, n)


def test_guo_qi_known_values():
    assert bernoulli_guo_qi(1) == Fraction(1, 6)  # 1/2 - 1/3, empty sum
    assert bernoulli_guo_qi(2) == Fraction(-1, 30)
    assert bernoulli_guo_qi(3) == Fraction(1, 42)
    with pytest.raises(ValueError):
        bernoulli_guo_qi(0)


def test_double_stirling_known_values(table):
    # k=1 by hand: 1 + 3/2 - (2/3)*(3 + 1/2)
    assert bernoulli_double_stirling(1, table) == Fraction(1, 6)
    assert bernoulli_double_stirling(2, table) == Fraction(-1, 30)
    assert bernoulli_double_stirling(5, table) == Fraction(5, 66)
    with pytest.raises(ValueError):
        bernoulli_double_stirling(4, StirlingTable(8))


def test_alternating_evaluates_verbatim():
    assert alternating_double_sum(1) == 1  # single term C(2,0)*1^1
    assert alternating_double_sum(2) == 3  # 8 - 4 - 1
    assert bernoulli_alternating(1) == Fraction(1, 3)  # disagrees with B_2 = 1/6
    assert bernoulli_alternating(1) != bernoulli_oracle(2)


def test_oracle_known_values():
    assert bernoulli_oracle(0) == 1
    assert bernoulli_oracle(12) == Fraction(-691, 2730)


def test_dispatcher_values(table):
    assert bernoulli(12, Method.THEOREM) == Fraction(-691, 2730)
    assert bernoulli(0, "oracle") == 1
    assert bernoulli(7, Method.LOGAN) == 0
    assert bernoulli(40, Method.THEOREM, table=StirlingTable(80)) == bernoulli_series(40)[40]


def test_dispatcher_rejects_unsupported_index():
    with pytest.raises(UnsupportedIndexError) as info:
        bernoulli(3, "guo-qi")
    message = str(info.value)
    assert "even n >= 2" in message
    # the error names the methods that do support the index
    for name in ("oracle", "theorem", "bell", "logan"):
        assert name in message
    with pytest.raises(UnsupportedIndexError):
        bernoulli(0, Method.BELL)
    with pytest.raises(ValueError):
        bernoulli(-1, Method.ORACLE)
    with pytest.raises(ValueError):
        bernoulli(2, "no-such-method")


def test_supports_and_domains():
    assert supports(Method.ORACLE, 0)
    assert supports(Method.THEOREM, 0)
    assert not supports(Method.BELL, 0)
    assert not supports(Method.GUO_QI, 3)
    assert supports(Method.GUO_QI, 4)
    assert supported_methods(0) == [Method.ORACLE, Method.THEOREM]
    assert len(supported_methods(2)) == 7


def test_methods_agree_at_small_scale():
    # full-depth agreement to n=40 lives in the acceptance suite
    series = bernoulli_series(16)
    table = StirlingTable(32)
    for n in range(17):
        for method in supported_methods(n):
            if method is Method.ALTERNATING:
                continue
            assert bernoulli(n, method, table=table) == series[n], (n, method)


def test_even_only_methods_never_return_zero_for_odd():
    for method in (Method.GUO_QI, Method.DOUBLE_STIRLING, Method.ALTERNATING):
        for n in (1, 3, 9):
            with pytest.raises(UnsupportedIndexError):
                bernoulli(n, method)
