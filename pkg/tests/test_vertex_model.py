from fractions import Fraction

import pytest

from coupledrpp import partitions as P
from coupledrpp import rpp_core as R
from coupledrpp import vertex_model as V
from coupledrpp.vertex_model import GRAY, Monomial, WHITE

X = Fraction(3, 7)


def test_white_weight_table():
    assert V.white_weight(V.EMPTY, X) == 1
    assert V.white_weight(V.BOTTOM_RIGHT, X) == X
    assert V.white_weight(V.HORIZONTAL, X) == X
    assert V.white_weight(V.VERTICAL, X) == 1
    assert V.white_weight(V.LEFT_TOP, X) == 1


def test_gray_weight_table():
    assert V.gray_weight(V.EMPTY, X) == X
    assert V.gray_weight(V.BOTTOM_RIGHT, X) == 1
    assert V.gray_weight(V.HORIZONTAL, X) == 1
    assert V.gray_weight(V.VERTICAL, X) == X
    assert V.gray_weight(V.LEFT_TOP, X) == X


def test_gray_is_white_after_inversion():
    # L'_x(v) = x L_{1/x}(v), checked at several exact points and symbolically
    for x in [Fraction(2, 3), Fraction(1, 5), Fraction(7, 2), Fraction(9, 4), Fraction(1, 9)]:
        for v in V.ALLOWED_STATES:
            assert V.gray_weight(v, x) == x * V.white_weight(v, 1 / x)
    q = Monomial(1)
    for v in V.ALLOWED_STATES:
        assert V.gray_weight(v, q) == q * V.white_weight(v, Monomial(-1))


def test_disallowed_state_raises():
    bad = V.VertexState(1, 1, 1, 1)
    with pytest.raises(ValueError):
        V.white_weight(bad, X)
    with pytest.raises(ValueError):
        V.gray_weight(bad, X)
    assert V.vertex_state(1, 1, 1, 1) is None
    assert V.vertex_state(1, 1, 0, 1) is None


def test_cross_weight_table():
    z = Fraction(2, 5)
    assert V.cross_weight(V.CROSS_NWSE, z) == 1 - z
    assert V.cross_weight(V.CROSS_TOP, z) == z
    assert V.cross_weight(V.CROSS_BOTTOM, z) == 1
    assert V.cross_weight(V.CROSS_BOTH, z) == z
    assert V.cross_weight(V.CROSS_EMPTY, z) == 1
    with pytest.raises(ValueError):
        V.cross_weight(V.CrossState(0, 1, 1, 0), z)


def test_row_weight_closed_examples():
    assert V.row_weight_closed(WHITE, (1, 1), (3, 1, 1), X) == X ** 3
    assert V.row_weight_closed(GRAY, (3, 1, 1), (2, 1), X, ell=4) == X ** 6
    assert V.row_weight_closed(WHITE, (2, 1), (2, 1), X) == 1
    assert V.row_weight_closed(WHITE, (2,), (1,), X) is None
    assert V.row_weight_closed(GRAY, (1,), (2,), X, ell=3) is None


def test_row_weight_explicit_examples():
    assert V.row_weight_explicit(WHITE, (1, 1), (3, 1, 1), X, ell=3, window=12) == X ** 3
    assert V.row_weight_explicit(GRAY, (3, 1, 1), (2, 1), X, ell=4, window=12) == X ** 6
    assert V.row_weight_explicit(WHITE, (2, 1), (2, 1), X, ell=2, window=8) == 1


def test_row_weight_explicit_window_too_narrow():
    with pytest.raises(ValueError, match="window"):
        V.row_weight_explicit(WHITE, (1, 1), (3, 1, 1), X, ell=3, window=4)


def test_row_weight_explicit_matches_closed_exhaustively():
    for mu in P.all_partitions(6):
        for lam in P.all_partitions(6):
            ell = max(len(mu), len(lam), 1) + 1
            window = ell + max(mu[0] if mu else 0, lam[0] if lam else 0) + 3
            assert V.row_weight_explicit(WHITE, mu, lam, X, ell, window) == \
                V.row_weight_closed(WHITE, mu, lam, X)
            if len(mu) <= ell:  # gray rows hold ell+1 entering paths
                assert V.row_weight_explicit(GRAY, mu, lam, X, ell - 1, window) == \
                    V.row_weight_closed(GRAY, mu, lam, X, ell - 1)


EX_RPP = R.validate((4, 3, 1), [[0, 1, 3, 4], [1, 1, 4], [3]])


def test_config_rows_of_worked_example():
    config = V.rpp_to_config((4, 3, 1), EX_RPP)
    assert config.pattern == R.interaction_pattern((4, 3, 1))
    assert config.zetas == (3, 3, 2, 2, 2, 1, 1, 0)
    # per-row x-degree profile forced by the closed row weights on the chain
    profile = []
    for k, row in enumerate(config.states, start=1):
        weigh = V.white_weight if config.kind(k) == WHITE else V.gray_weight
        profile.append(sum(1 for v in row if weigh(v, Fraction(2)) == Fraction(2)))
    assert profile == [3, 4, 0, 4, 3, 1, 4]


def test_config_to_json():
    import json
    data = json.loads(V.config_to_json(V.rpp_to_config((4, 3, 1), EX_RPP)))
    assert [row["kind"] for row in data["rows"]] == \
        ["white", "gray", "white", "white", "gray", "white", "gray"]
    assert data["interfaces"] == [[], [3], [1], [1], [4, 1], [3], [4], []]
    assert data["window"] >= 7


def test_a_lambda_examples():
    assert V.A_lambda(()) == Monomial(0)
    assert V.A_lambda((1,)) == Monomial(0)
    assert V.A_lambda((4, 3, 1)) == Monomial(-9)


def test_zero_config_weight_is_inverse_a():
    for lam in P.all_partitions(5):
        w = V.config_weight_q(lam, R.zero_rpp(lam))
        assert w * V.A_lambda(lam) == Monomial(0), lam


def test_single_column_weight():
    for n in range(5):
        rpp = R.validate((1,), [[n]])
        assert V.config_weight_q((1,), rpp) == Monomial(n)


def test_weight_bijection_small():
    for lam in P.all_partitions(4):
        A = V.A_lambda(lam)
        for rpp in R.enumerate_rpps(lam, 6):
            assert V.config_weight_q(lam, rpp) * A == Monomial(rpp.volume)


def neighbors_up(rpp):
    """Fillings reachable by adding one to a single cell."""
    for r in range(1, len(rpp.shape) + 1):
        for c in range(1, rpp.shape[r - 1] + 1):
            rows = [list(row) for row in rpp.rows]
            rows[r - 1][c - 1] += 1
            try:
                yield R.validate(rpp.shape, rows)
            except ValueError:
                continue


def test_corner_flip_changes_weight_by_q():
    # volume-increment moves multiply the configuration weight by exactly q
    for lam in [(2, 1), (2, 2), (3, 1)]:
        for rpp in R.enumerate_rpps(lam, 4):
            w = V.config_weight_q(lam, rpp)
            for up in neighbors_up(rpp):
                wu = V.config_weight_q(lam, up)
                assert wu.q_exp - w.q_exp == 1, (rpp.rows, up.rows)


def test_ybe_worked_boundary():
    x, y = Fraction(2, 3), Fraction(1, 5)
    lhs, rhs = V._ybe_sides(V.WHITE_WHITE, x, y, (1, 0, 0, 0, 1, 0))
    assert lhs == rhs == y


def test_ybe_empty_boundary():
    x, y = Fraction(1, 2), Fraction(1, 3)
    lhs, rhs = V._ybe_sides(V.WHITE_WHITE, x, y, (0,) * 6)
    assert lhs == rhs == 1
    lhs, rhs = V._ybe_sides(V.WHITE_GRAY, x, y, (0,) * 6)
    assert lhs == rhs == x


def test_ybe_full_sweeps():
    assert V.verify_ybe(V.WHITE_WHITE)["passed"]
    assert V.verify_ybe(V.WHITE_GRAY)["passed"]


def test_commutation_trivial_and_small():
    x, y = Fraction(1, 2), Fraction(1, 3)
    assert V.verify_commutation((), (), x, y, window=4)["passed"]
    assert V.verify_commutation((1,), (1,), x, y, window=4)["passed"]


def test_commutation_exhaustive_small():
    points = [(Fraction(1, 2), Fraction(1, 3)), (Fraction(2, 7), Fraction(3, 5))]
    for mu in P.all_partitions(4):
        for lam in P.all_partitions(4):
            for x, y in points:
                assert V.verify_commutation(mu, lam, x, y, window=4)["passed"], (mu, lam)


def test_commutation_rejects_degenerate_point():
    with pytest.raises(ValueError, match="xy"):
        V.verify_commutation((1,), (), Fraction(2), Fraction(1, 2), window=3)
