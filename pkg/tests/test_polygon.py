"""Vertex and diagonal arithmetic."""

import pytest

from negcluster import (
    Diagonal,
    ParameterError,
    ar_translate,
    crosses,
    enumerate_indecomposables,
    is_admissible,
    make_category,
    normalize,
    shares_endpoint,
    suspend,
)


def test_make_category_sizes():
    assert make_category(3, 2).polygon_size == 10
    assert make_category(2, 3).polygon_size == 10
    assert make_category(1, 1).polygon_size == 2


@pytest.mark.parametrize("rank,weight", [(0, 2), (-1, 2), (3, 0), (2, -5)])
def test_make_category_rejects_bad_params(rank, weight):
    with pytest.raises(ParameterError):
        make_category(rank, weight)


def test_normalize_reduces_and_sorts(p32):
    assert normalize(12, 3, p32) == Diagonal(2, 3)
    assert normalize(5, 3, p32) == Diagonal(3, 5)
    assert normalize(-1, 4, p32) == Diagonal(4, 9)


def test_normalize_rejects_degenerate(p32):
    with pytest.raises(ParameterError):
        normalize(7, 7, p32)
    with pytest.raises(ParameterError):
        normalize(3, 13, p32)


def test_admissibility_examples(p32, p23):
    assert is_admissible(Diagonal(3, 5), p32)
    assert not is_admissible(Diagonal(0, 4), p32)
    assert is_admissible(Diagonal(0, 3), p23)


def subpolygon_admissible(d, params):
    """Independent formulation: both subpolygon vertex counts divide by w+1."""
    side = d.hi - d.lo + 1
    other = params.polygon_size - (d.hi - d.lo) + 1
    return side % (params.weight + 1) == 0 and other % (params.weight + 1) == 0


def test_admissibility_matches_subpolygon_count_formulation():
    for rank in range(1, 8):
        for weight in range(1, 8):
            params = make_category(rank, weight)
            if params.polygon_size > 30:
                continue
            n = params.polygon_size
            for lo in range(n):
                for hi in range(lo + 1, n):
                    d = Diagonal(lo, hi)
                    assert is_admissible(d, params) == subpolygon_admissible(d, params)


def test_admissible_counts(p32, p23):
    assert len(enumerate_indecomposables(p32)) == 15
    assert len(enumerate_indecomposables(p23)) == 10


def test_crossing_examples():
    assert crosses(Diagonal(0, 9), Diagonal(6, 15))
    assert not crosses(Diagonal(1, 6), Diagonal(3, 5))
    assert not crosses(Diagonal(3, 5), Diagonal(3, 8))


def test_crossing_is_symmetric_irreflexive_and_rotation_invariant(p32):
    objects = enumerate_indecomposables(p32)
    for d1 in objects:
        assert not crosses(d1, d1)
        for d2 in objects:
            assert crosses(d1, d2) == crosses(d2, d1)
            for k in range(p32.polygon_size):
                assert crosses(d1, d2) == crosses(
                    suspend(d1, k, p32), suspend(d2, k, p32)
                )


def test_shares_endpoint():
    assert shares_endpoint(Diagonal(1, 6), Diagonal(1, 9))
    assert not shares_endpoint(Diagonal(3, 5), Diagonal(1, 6))
    assert shares_endpoint(Diagonal(2, 4), Diagonal(2, 4))


def test_suspend(p32):
    assert suspend(Diagonal(3, 5), 1, p32) == Diagonal(4, 6)
    assert suspend(Diagonal(3, 5), p32.polygon_size, p32) == Diagonal(3, 5)
    assert suspend(Diagonal(1, 6), -1, p32) == Diagonal(0, 5)


def test_admissibility_is_suspension_invariant(desk_params):
    for d in enumerate_indecomposables(desk_params):
        for k in range(desk_params.polygon_size):
            assert is_admissible(suspend(d, k, desk_params), desk_params)


def test_ar_translate(p32):
    assert ar_translate(Diagonal(0, 8), p32) == Diagonal(5, 7)
    # translate composed with (w+1)-fold suspension is the identity
    for d in enumerate_indecomposables(p32):
        assert suspend(ar_translate(d, p32), p32.weight + 1, p32) == d


def test_ar_translate_rotation_order(p32):
    import math

    n = p32.polygon_size
    order = n // math.gcd(n, p32.weight + 1)
    for d in enumerate_indecomposables(p32):
        current = d
        for _ in range(order):
            current = ar_translate(current, p32)
        assert current == d
