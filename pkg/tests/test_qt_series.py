import random

import pytest

from coupledrpp import partitions as P
from coupledrpp.qt_series import (
    QTSeries,
    geometric_inverse,
    hook_product_pair,
    hook_product_single,
)


def series(trunc, terms):
    return QTSeries(trunc, {(n, k): c for n, k, c in terms})


def test_mul_examples():
    a = series(2, [(0, 0, 1), (1, 0, 1)])               # 1 + q
    assert (a * a).terms() == [(0, 0, 1), (1, 0, 2), (2, 0, 1)]
    assert a * QTSeries.one(2) == a
    qt = series(2, [(0, 0, 1), (1, 1, 1)])              # 1 + q t
    assert (qt * qt).terms() == [(0, 0, 1), (1, 1, 2), (2, 2, 1)]


def test_mul_truncation_mismatch():
    with pytest.raises(ValueError):
        QTSeries.one(3) * QTSeries.one(4)


def test_constructor_rejects_bad_terms():
    with pytest.raises(ValueError):
        QTSeries(3, {(0, 0): -1})
    with pytest.raises(ValueError):
        QTSeries(3, {(-1, 0): 1})
    # over-truncation terms are silently dropped
    assert QTSeries(2, {(5, 0): 7}).terms() == []


def random_series(rng, trunc):
    coeffs = {}
    for _ in range(rng.randrange(1, 6)):
        coeffs[(rng.randrange(trunc + 1), rng.randrange(3))] = rng.randrange(1, 9)
    return QTSeries(trunc, coeffs)


def test_mul_commutative_associative():
    rng = random.Random(20240811)
    for _ in range(60):
        a, b, c = (random_series(rng, 6) for _ in range(3))
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)


def test_geometric_inverse_examples():
    assert geometric_inverse(1, 0, 3).terms() == [(0, 0, 1), (1, 0, 1), (2, 0, 1), (3, 0, 1)]
    assert geometric_inverse(3, 1, 7).terms() == [(0, 0, 1), (3, 1, 1), (6, 2, 1)]
    assert geometric_inverse(2, 0, 5).terms() == [(0, 0, 1), (2, 0, 1), (4, 0, 1)]
    with pytest.raises(ValueError):
        geometric_inverse(0, 0, 4)


def test_hook_product_single_examples():
    assert hook_product_single((1,), 4).terms() == [(n, 0, 1) for n in range(5)]
    # (2,1) has hooks {3,1,1}: expand 1/((1-q)^2 (1-q^3)) by convolution
    want = geometric_inverse(1, 0, 6) * geometric_inverse(1, 0, 6) * geometric_inverse(3, 0, 6)
    assert hook_product_single((2, 1), 6) == want
    assert hook_product_single((), 9) == QTSeries.one(9)


def test_hook_product_pair_examples():
    assert hook_product_pair((), 5) == QTSeries.one(5)
    want = geometric_inverse(1, 0, 2) * geometric_inverse(1, 1, 2)
    assert hook_product_pair((1,), 2) == want
    assert hook_product_pair((1,), 2).t_zero_slice().terms() == \
        [(0, 0, 1), (1, 0, 1), (2, 0, 1)]


def test_pair_t_zero_slice_is_single_product():
    for lam in P.all_partitions(6):
        assert hook_product_pair(lam, 8).t_zero_slice() == hook_product_single(lam, 8)


def test_json_roundtrip():
    s = series(5, [(0, 0, 1), (2, 3, 4), (5, 0, 2)])
    assert QTSeries.from_json(s.to_json()) == s
    assert s.to_json() == QTSeries.from_json(s.to_json()).to_json()


def test_repr_is_readable():
    assert repr(QTSeries.one(3)) == "1"
    assert repr(series(3, [(1, 1, 2), (0, 0, 1)])) == "1 + 2*q*t"
