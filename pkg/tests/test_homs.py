"""Hom dimensions, extension cases, and middle terms."""

import pytest

from negcluster import (
    Diagonal,
    NoExtensionError,
    NotAdmissibleError,
    crosses,
    cy_pairing_dims,
    enumerate_indecomposables,
    ext_case,
    ext_triangle,
    hom_dim,
    hom_dim_neg1,
    is_admissible,
    make_category,
    middle_term,
    suspend,
)

D = Diagonal


def test_ext_case_adjacent(p32):
    case = ext_case(D(1, 6), D(3, 5), p32)
    assert case.tag == "adjacent"
    assert case.abutment == 6 and case.replaced == 5 and case.replacement == 1


def test_ext_case_shift(p32):
    assert ext_case(D(4, 6), D(3, 5), p32).tag == "shift"


def test_ext_case_none_on_shared_endpoint(p32):
    assert ext_case(D(1, 6), D(1, 9), p32).tag == "none"


def test_ext_case_crossing_needs_admissible_resolution(p32):
    # crossing pairs without an admissible reconnection carry no extension
    assert crosses(D(1, 3), D(2, 7))
    assert ext_case(D(2, 7), D(1, 3), p32).tag == "none"
    # shift configurations also cross; the shift case must win
    assert crosses(D(0, 5), D(1, 6))
    assert ext_case(D(1, 6), D(0, 5), p32).tag == "shift"
    # crossing pair whose reconnection is admissible
    case = ext_case(D(4, 9), D(1, 6), p32)
    assert case.tag == "crossing"
    assert case.pairing == ((1, 4), (6, 9))


def test_ext_case_rejects_inadmissible_input(p32):
    with pytest.raises(NotAdmissibleError):
        ext_case(D(0, 4), D(3, 5), p32)


def test_hom_dim_neg1_examples(p32):
    assert hom_dim_neg1(D(1, 6), D(3, 5), p32) == 1
    assert hom_dim_neg1(D(3, 5), D(3, 5), p32) == 0
    assert hom_dim_neg1(D(7, 9), D(1, 6), p32) == 1


def test_hom_dim_examples(p32):
    assert hom_dim(D(3, 5), 0, D(3, 5), p32) == 1  # endomorphisms
    assert hom_dim(D(1, 6), 1, D(3, 5), p32) == 1  # the alpha arrow
    for s in (D(3, 5), D(1, 6), D(7, 9)):
        for t in (D(3, 5), D(1, 6), D(7, 9)):
            assert hom_dim(s, -1, t, p32) == 0  # negative-shift vanishing


def test_middle_term_examples(p32):
    assert middle_term(D(1, 6), D(3, 5), p32) == [D(1, 3)]
    assert middle_term(D(7, 9), D(1, 6), p32) == [D(1, 9)]
    assert middle_term(D(4, 6), D(3, 5), p32) == []


def test_middle_term_crossing_two_summands(p32):
    assert middle_term(D(4, 9), D(1, 6), p32) == [D(1, 9), D(4, 6)]


def test_middle_term_raises_without_extension(p32):
    with pytest.raises(NoExtensionError):
        middle_term(D(1, 6), D(1, 9), p32)


def test_ext_triangle_shape(p32):
    tri = ext_triangle(D(1, 6), D(3, 5), p32)
    assert tri.shifted_source == D(0, 5)
    assert tri.through == D(3, 5)
    assert tri.middle == (D(1, 3),)
    assert tri.target == D(1, 6)


def test_middle_summand_count_matches_case(desk_params):
    objects = enumerate_indecomposables(desk_params)
    expected = {"shift": 0, "adjacent": 1, "crossing": 2}
    for s_prime in objects:
        for s in objects:
            case = ext_case(s_prime, s, desk_params)
            if case.tag == "none":
                continue
            summands = middle_term(s_prime, s, desk_params)
            assert len(summands) == expected[case.tag]
            assert all(is_admissible(m, desk_params) for m in summands)
            if case.tag == "crossing":
                assert not crosses(summands[0], summands[1])


def test_hom_dim_rotation_invariance(p32):
    objects = enumerate_indecomposables(p32)
    for x in objects:
        for y in objects:
            base = [hom_dim(x, ell, y, p32) for ell in range(-3, 4)]
            for k in (1, 3, 7):
                xs, ys = suspend(x, k, p32), suspend(y, k, p32)
                assert base == [hom_dim(xs, ell, ys, p32) for ell in range(-3, 4)]


def test_cy_pairing_dims(desk_params):
    objects = enumerate_indecomposables(desk_params)
    for x in objects:
        for y in objects:
            d1, d2 = cy_pairing_dims(x, y, desk_params)
            assert d1 == d2
