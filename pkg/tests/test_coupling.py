from fractions import Fraction

import pytest

from coupledrpp import coupling as C
from coupledrpp import partitions as P
from coupledrpp import rpp_core as R
from coupledrpp import vertex_model as V
from coupledrpp.qt_series import hook_product_pair
from coupledrpp.vertex_model import GRAY, Monomial, WHITE

X, T = Fraction(3, 5), Fraction(2, 7)

WORKED_BLUE = R.validate((3, 2, 1), [[0, 1, 1], [1, 3], [2]])
WORKED_RED = R.validate((3, 2, 1), [[1, 2, 3], [1, 2], [2]])
WORKED_PAIR = C.make_pair(WORKED_BLUE, WORKED_RED)


def test_colored_white_weight_examples():
    assert C.colored_white_weight(V.HORIZONTAL, V.HORIZONTAL, X, T) == X * X * T
    assert C.colored_white_weight(V.EMPTY, V.EMPTY, X, T) == 1
    assert C.colored_white_weight(V.BOTTOM_RIGHT, V.VERTICAL, X, T) == X * T


def test_colored_white_t1_factors():
    for vb in V.ALLOWED_STATES:
        for vr in V.ALLOWED_STATES:
            assert C.colored_white_weight(vb, vr, X, Fraction(1)) == \
                V.white_weight(vb, X) * V.white_weight(vr, X)


def test_colored_gray_weight_examples():
    assert C.colored_gray_weight(V.EMPTY, V.EMPTY, X, T) == X * X * T
    assert C.colored_gray_weight(V.HORIZONTAL, V.HORIZONTAL, X, T) == 1
    assert C.colored_gray_weight(V.HORIZONTAL, V.VERTICAL, X, T) == X * T


def test_colored_gray_table_vs_formula():
    # published table against the per-color factorization, symbolically
    x, t = Monomial(1, 0), Monomial(0, 1)
    for (vb, vr), (xe, te) in C._GRAY_TABLE_VERBATIM.items():
        assert C.colored_gray_weight(vb, vr, x, t) == Monomial(xe, te)
    C._check_gray_table()


def test_colored_gray_change_of_variable():
    # (L')_{x;t} = x^2 t L_{1/(xt);t} on all 25 state pairs
    for vb in V.ALLOWED_STATES:
        for vr in V.ALLOWED_STATES:
            assert C.colored_gray_weight(vb, vr, X, T) == \
                X * X * T * C.colored_white_weight(vb, vr, 1 / (X * T), T)


def test_colored_cross_examples():
    z = Fraction(2, 9)
    assert C.colored_cross_weight(V.CROSS_EMPTY, V.CROSS_EMPTY, z, T) == 1
    assert C.colored_cross_weight(V.CROSS_EMPTY, V.CROSS_NWSE, z, T) == 1 - z
    with pytest.raises(ValueError):
        C.colored_cross_weight(V.CrossState(0, 1, 1, 0), V.CROSS_EMPTY, z, T)


def test_colored_cross_worked_identity():
    # the displayed two-white-row crossing computation
    x, y, t = Fraction(1, 2), Fraction(1, 3), Fraction(2, 5)
    z = y / x
    lhs = C.colored_cross_weight(V.CROSS_NWSE, V.CROSS_EMPTY, z, t) * \
        C.colored_white_weight(V.HORIZONTAL, V.BOTTOM_RIGHT, x, t)
    term1 = C.colored_cross_weight(V.CROSS_NWSE, V.CROSS_BOTTOM, z, t) * \
        C.colored_white_weight(V.EMPTY, V.BOTTOM_RIGHT, y, t) * \
        C.colored_white_weight(V.HORIZONTAL, V.EMPTY, x, t)
    term2 = C.colored_cross_weight(V.CROSS_NWSE, V.CROSS_NWSE, z, t) * \
        C.colored_white_weight(V.EMPTY, V.VERTICAL, y, t) * \
        C.colored_white_weight(V.HORIZONTAL, V.BOTTOM_RIGHT, x, t)
    assert lhs == x * x * t * (1 - y / x)
    assert term1 == x * y * (1 - y / x)
    assert term2 == x * x * t * (1 - y / x) * (1 - y / (x * t))
    assert lhs == term1 + term2


def test_colored_row_weights_worked_examples():
    # white row x^7 t^3 (= x^3 x^4 per color); gray row x^8 t^3, whose
    # x-part factors as x^5 * x^3 through the per-color closed forms
    w = C.colored_row_weight_explicit(
        WHITE, ((2, 1), (1,)), ((4, 2), (4, 1)), X, T, ell=2, window=10)
    assert w == X ** 7 * T ** 3
    g = C.colored_row_weight_explicit(
        GRAY, ((3, 1, 1), (2, 1)), ((1, 1), (1, 1)), X, T, ell=2, window=10)
    assert g == X ** 8 * T ** 3
    assert C.colored_row_weight_explicit(
        WHITE, ((2,), (0,)), ((1,), (1,)), X, T, ell=1, window=8) is None


def test_colored_ybe_full_sweep():
    report = C.verify_colored_ybe()
    assert report["passed"], report["violations"][:3]
    assert report["checked"] == 3 * 4 ** 6


def test_colored_ybe_t1_matches_one_color():
    report = C.verify_colored_ybe([(Fraction(1, 2), Fraction(1, 3), Fraction(1))])
    assert report["passed"]


def test_make_pair_shape_mismatch():
    with pytest.raises(ValueError):
        C.make_pair(R.zero_rpp((2,)), R.zero_rpp((1, 1)))


def test_worked_pair_statistic():
    assert WORKED_BLUE.volume == 8 and WORKED_RED.volume == 11
    assert C.g_via_vertex(WORKED_PAIR) == 6
    assert C.g_via_lozenges(WORKED_PAIR) == 6
    assert len(C.coupled_pairs(WORKED_PAIR)) == 6


def test_worked_pair_weight():
    w = C.pair_config_weight(WORKED_PAIR)
    A2 = V.A_lambda((3, 2, 1)) ** 2
    assert w * A2 == Monomial(8 + 11, 6 + C.trivial_t_exponent((3, 2, 1)))


def test_coupled_pair_locations_single_cell():
    # blue [1] on red [1]: coinciding faces give one type-2 pair in the hole
    # slice and one type-3 pair in the particle slice
    one = R.validate((1,), [[1]])
    pair = C.make_pair(one, one)
    assert sorted(C.coupled_pairs(pair)) == [(2, 1, 0), (3, 2, 0)]
    # blue above red is the asymmetric case: a single type-1 pair
    pair = C.make_pair(one, R.zero_rpp((1,)))
    assert C.coupled_pairs(pair) == [(1, 1, 0)]
    # red above blue couples nothing
    pair = C.make_pair(R.zero_rpp((1,)), one)
    assert C.coupled_pairs(pair) == []


def test_zero_pair_statistics():
    for lam in [(1,), (2, 1), (4, 4, 3, 3, 1)]:
        z = R.zero_rpp(lam)
        pair = C.make_pair(z, z)
        assert C.g_via_lozenges(pair) == 0
        assert C.g_via_vertex(pair) == 0
    assert C.pair_config_weight(C.make_pair(R.RPP((), ()), R.RPP((), ()))) == Monomial(0)


def test_g_oracles_agree_exhaustively():
    for lam in P.all_partitions(4):
        if not lam:
            continue
        for blue, red in R.enumerate_pairs(lam, 6):
            pair = C.make_pair(blue, red)
            assert C.g_via_vertex(pair) == C.g_via_lozenges(pair), pair


def test_pair_weight_bijection_exhaustively():
    for lam in P.all_partitions(4):
        if not lam:
            continue
        A2 = V.A_lambda(lam) ** 2
        triv = C.trivial_t_exponent(lam)
        for blue, red in R.enumerate_pairs(lam, 6):
            pair = C.make_pair(blue, red)
            want = Monomial(blue.volume + red.volume,
                            C.g_via_lozenges(pair) + triv)
            assert C.pair_config_weight(pair) * A2 == want


def test_pair_genfun_single_cell():
    series = C.pair_genfun_bruteforce((1,), 2)
    assert series.terms() == [(0, 0, 1), (1, 0, 1), (1, 1, 1),
                              (2, 0, 1), (2, 1, 1), (2, 2, 1)]
    assert series == hook_product_pair((1,), 2)


def test_pair_genfun_matches_hook_product():
    for lam in [(2,), (1, 1), (2, 1)]:
        assert C.pair_genfun_bruteforce(lam, 6) == hook_product_pair(lam, 6)
    assert C.pair_genfun_bruteforce((), 4) == hook_product_pair((), 4)


def test_pair_genfun_parallel_matches_serial():
    assert C.pair_genfun_bruteforce((2, 1), 5, jobs=2) == \
        C.pair_genfun_bruteforce((2, 1), 5)


def test_pair_json_roundtrip():
    text = C.pair_to_json(WORKED_PAIR)
    assert C.pair_from_json(text) == WORKED_PAIR
