"""Scheme generation, wrongness classification, and counting identities."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from signschemes import (
    MINUS,
    PLUS,
    DimensionError,
    DomainError,
    Scheme,
    TriangleIndexError,
    WrongCounts,
    all_sign_vectors,
    as_sign_vector,
    format_signs,
    generate_scheme,
    horizontal_sum,
    is_reference,
    parse_signs,
    reference_scheme,
    reference_sign,
    sign_char,
    square_sign_product,
    vertical_sum,
    wrong_counts,
    wrong_set,
)

TEST_SETTINGS = settings(max_examples=200, deadline=None)

# five-entry worked vector and its generated rows, frozen by hand
FIVE = (1, 1, -1, 1, -1)
FIVE_ROWS = (
    (1, 1, -1, -1, 1),
    (1, -1, -1, 1),
    (-1, -1, 1),
    (1, -1),
    (-1,),
)
FIVE_WRONG = frozenset(
    {(1, 1), (1, 4), (1, 5), (2, 2), (2, 3), (3, 4), (3, 5), (4, 4), (4, 5)}
)

sign_vectors = st.lists(st.sampled_from((PLUS, MINUS)), min_size=1, max_size=12).map(
    tuple
)


def test_generate_five_matches_hand_expansion():
    assert generate_scheme(FIVE).rows == FIVE_ROWS


def test_generate_single_minus():
    assert generate_scheme((-1,)).rows == ((-1,),)


def test_generate_all_minus_alternates():
    scheme = generate_scheme((-1, -1, -1, -1))
    assert scheme.rows == ((-1, 1, -1, 1), (-1, 1, -1), (-1, 1), (-1,))
    assert is_reference(scheme)


def test_generate_rejects_empty():
    with pytest.raises(DimensionError):
        generate_scheme(())


def test_generate_rejects_non_sign_entries():
    with pytest.raises(DomainError):
        generate_scheme((1, 2))


def test_as_sign_vector_freezes():
    assert as_sign_vector([1, -1]) == (1, -1)


def test_scheme_shape_validation():
    with pytest.raises(DimensionError):
        Scheme(((1,), (1,)))
    with pytest.raises(DimensionError):
        Scheme(())
    with pytest.raises(DomainError):
        Scheme(((0,),))


def test_sign_lookup_and_bounds():
    scheme = generate_scheme(FIVE)
    assert scheme.sign(1, 5) == PLUS
    assert scheme.sign(3, 4) == MINUS
    for i, j in ((0, 1), (2, 1), (1, 6), (6, 6)):
        with pytest.raises(TriangleIndexError):
            scheme.sign(i, j)


def test_positions_enumerates_triangle():
    scheme = generate_scheme(FIVE)
    pos = list(scheme.positions())
    assert len(pos) == 15
    assert pos[0] == (1, 1) and pos[-1] == (5, 5)


def test_with_flipped_returns_new_scheme():
    scheme = generate_scheme(FIVE)
    flipped = scheme.with_flipped(((1, 1), (2, 3)))
    assert flipped.sign(1, 1) == -scheme.sign(1, 1)
    assert flipped.sign(2, 3) == -scheme.sign(2, 3)
    assert scheme.rows == FIVE_ROWS


def test_render_golden():
    expected = "+ + - - +\n  + - - +\n    - - +\n      + -\n        -"
    assert generate_scheme(FIVE).render() == expected
    assert str(generate_scheme(FIVE)) == expected


def test_sign_char():
    assert sign_char(PLUS) == "+" and sign_char(MINUS) == "-"
    with pytest.raises(DomainError):
        sign_char(0)


@pytest.mark.parametrize(
    "text,expected",
    [
        ("+,-,+", (1, -1, 1)),
        ("+ - +", (1, -1, 1)),
        ("+-+", (1, -1, 1)),
        ("1,-1,1", (1, -1, 1)),
        ("+1,-1", (1, -1)),
        ("-", (-1,)),
    ],
)
def test_parse_signs(text, expected):
    assert parse_signs(text) == expected


def test_parse_signs_errors():
    with pytest.raises(DimensionError):
        parse_signs("")
    with pytest.raises(DomainError):
        parse_signs("+,x")


def test_format_signs_roundtrip():
    assert format_signs(FIVE) == "+ + - + -"
    assert parse_signs(format_signs(FIVE)) == FIVE


def test_reference_sign_parity():
    assert reference_sign(1, 1) == MINUS
    assert reference_sign(1, 2) == PLUS
    assert reference_sign(3, 7) == MINUS
    # written as a parity of j - i; the equivalent i - j parity must agree
    for i in range(1, 8):
        for j in range(i, 8):
            assert reference_sign(i, j) == (-1) ** (j - i + 1)
            assert reference_sign(i, j) == (-1) ** (i - j + 1)


def test_reference_scheme_has_empty_wrong_set():
    scheme = reference_scheme(6)
    assert is_reference(scheme)
    assert wrong_set(scheme) == frozenset()


def test_wrong_set_five():
    assert wrong_set(generate_scheme(FIVE)) == FIVE_WRONG


def test_row_and_column_sums_five():
    scheme = generate_scheme(FIVE)
    assert horizontal_sum(scheme, 1, 3) == 2
    assert vertical_sum(scheme, 1, 3) == -2
    assert vertical_sum(scheme, 2, 3) == -1
    assert horizontal_sum(scheme, 1, 1) == 0
    assert vertical_sum(scheme, 5, 5) == 0
    assert horizontal_sum(reference_scheme(4), 1, 4) == -1


def test_wrong_counts_five():
    scheme = generate_scheme(FIVE)
    assert wrong_counts(scheme, 2, 3) == WrongCounts(1, 0, 0, 0, 1, 0)
    w = wrong_counts(scheme, 1, 5)
    assert (w.h_plus, w.h_minus) == (1, 1)
    assert (w.v_plus, w.v_minus) == (1, 1)
    assert w.h == 0 and w.v == 0


def test_square_sign_product_requires_strict_corners():
    scheme = generate_scheme(FIVE)
    assert square_sign_product(scheme, 1, 2, 3, 4) == PLUS
    with pytest.raises(TriangleIndexError):
        square_sign_product(scheme, 1, 2, 2, 3)
    with pytest.raises(TriangleIndexError):
        square_sign_product(scheme, 2, 1, 3, 4)


def test_square_sign_product_distinguishes_non_generated():
    # not generated by any sign vector; one corner product is -1
    scheme = Scheme(((1, 1, -1, -1), (1, -1, 1), (1, 1), (1,)))
    assert square_sign_product(scheme, 1, 2, 3, 4) == MINUS


def test_all_sign_vectors_small():
    assert list(all_sign_vectors(2)) == [(1, 1), (1, -1), (-1, 1), (-1, -1)]
    assert sum(1 for _ in all_sign_vectors(8)) == 256
    with pytest.raises(DimensionError):
        all_sign_vectors(0)


@TEST_SETTINGS
@given(sign_vectors)
def test_diagonal_equals_generator(eps):
    scheme = generate_scheme(eps)
    for i, e in enumerate(eps, start=1):
        assert scheme.sign(i, i) == e


@TEST_SETTINGS
@given(sign_vectors)
def test_entries_are_consecutive_products(eps):
    scheme = generate_scheme(eps)
    for i, j in scheme.positions():
        prod = 1
        for k in range(i, j + 1):
            prod *= eps[k - 1]
        assert scheme.sign(i, j) == prod


@TEST_SETTINGS
@given(sign_vectors)
def test_square_products_always_plus(eps):
    scheme = generate_scheme(eps)
    n = len(eps)
    for i, i2, j, j2 in itertools.combinations(range(1, n + 1), 4):
        assert square_sign_product(scheme, i, i2, j, j2) == PLUS


@TEST_SETTINGS
@given(sign_vectors)
def test_row_sum_opposes_column_sum_at_minus(eps):
    scheme = generate_scheme(eps)
    for i, j in scheme.positions():
        if scheme.sign(i, j) == MINUS:
            assert horizontal_sum(scheme, i, j) == -vertical_sum(scheme, i, j)


@TEST_SETTINGS
@given(sign_vectors)
def test_parity_identities_at_odd_minus(eps):
    scheme = generate_scheme(eps)
    for i, j in scheme.positions():
        if scheme.sign(i, j) == MINUS and (i + j) % 2 == 1:
            w = wrong_counts(scheme, i, j)
            hw = w.h_plus - w.h_minus
            vw = w.v_plus - w.v_minus
            assert vertical_sum(scheme, i, j) == 2 * vw - 1
            assert horizontal_sum(scheme, i, j) == 2 * hw - 1
            assert hw + vw == 1


@TEST_SETTINGS
@given(sign_vectors)
def test_only_all_minus_generates_the_target(eps):
    assert is_reference(generate_scheme(eps)) == all(e == MINUS for e in eps)
