"""Move validation, application, and certificate serialization."""

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from signschemes import (
    MINUS,
    PLUS,
    Certificate,
    DimensionError,
    DomainError,
    InvalidMoveError,
    Move,
    TriangleIndexError,
    apply_move,
    certificate_from_json,
    certificate_from_obj,
    certificate_to_json,
    certificate_to_obj,
    flipped_positions,
    generate_scheme,
    pattern_mismatch,
    preconditions_hold,
)

TEST_SETTINGS = settings(max_examples=200, deadline=None)

FIVE = (1, 1, -1, 1, -1)

WORKED = (1, -1, 1, 1, -1, 1, 1)
WORKED_MOVES = (
    Move.horizontal(1, 1, 2),
    Move.square(2, 3, 3, 6),
    Move.square(1, 4, 4, 5),
    Move.vertical(5, 6, 6),
    Move.vertical(4, 7, 7),
    Move.point(1, 7),
)
WORKED_JSON = (
    '{"n":7,"eps":[1,-1,1,1,-1,1,1],"moves":['
    '{"kind":"H","i":1,"j":1,"j2":2},'
    '{"kind":"S","i":2,"i2":3,"j":3,"j2":6},'
    '{"kind":"S","i":1,"i2":4,"j":4,"j2":5},'
    '{"kind":"V","i":5,"i2":6,"j":6},'
    '{"kind":"V","i":4,"i2":7,"j":7},'
    '{"kind":"P","i":1,"j":7}]}'
)


def test_move_str_forms():
    assert str(Move.point(1, 7)) == "Point(1;7)"
    assert str(Move.horizontal(1, 1, 2)) == "Horizontal(1;1,2)"
    assert str(Move.vertical(5, 6, 6)) == "Vertical(5,6;6)"
    assert str(Move.square(1, 4, 4, 5)) == "Square(1,4;4,5)"


@pytest.mark.parametrize(
    "bad",
    [
        lambda: Move.point(2, 1),
        lambda: Move.horizontal(1, 3, 2),
        lambda: Move.horizontal(1, 3, 3),
        lambda: Move.vertical(2, 2, 3),
        lambda: Move.vertical(1, 4, 3),
        lambda: Move.square(2, 2, 3, 4),
        lambda: Move.square(1, 3, 2, 4),
        lambda: Move.square(1, 2, 4, 4),
        lambda: Move("P", 1, 2, i2=3),
        lambda: Move("H", 1, 2),
    ],
)
def test_invalid_indices_rejected(bad):
    with pytest.raises(TriangleIndexError):
        bad()


def test_unknown_kind_rejected():
    with pytest.raises(DomainError):
        Move("X", 1, 1)


def test_touched_positions_and_required_signs():
    assert Move.point(2, 4).touched_positions() == ((2, 4),)
    assert Move.point(2, 4).required_signs() == (PLUS,)
    assert Move.horizontal(1, 2, 5).touched_positions() == ((1, 2), (1, 5))
    assert Move.horizontal(1, 2, 5).required_signs() == (PLUS, MINUS)
    assert Move.vertical(1, 3, 4).touched_positions() == ((1, 4), (3, 4))
    assert Move.vertical(1, 3, 4).required_signs() == (MINUS, PLUS)
    sq = Move.square(1, 2, 3, 4)
    assert sq.touched_positions() == ((1, 3), (1, 4), (2, 3), (2, 4))
    assert sq.required_signs() == (MINUS, PLUS, PLUS, MINUS)
    assert flipped_positions(sq) == frozenset({(1, 3), (1, 4), (2, 3), (2, 4)})


def test_apply_point():
    scheme = generate_scheme(FIVE)
    assert preconditions_hold(scheme, Move.point(1, 1))
    out = apply_move(scheme, Move.point(1, 1))
    assert out.sign(1, 1) == MINUS
    # only the touched position changed
    diffs = [p for p in scheme.positions() if out.sign(*p) != scheme.sign(*p)]
    assert diffs == [(1, 1)]


def test_apply_horizontal_two_dim():
    scheme = generate_scheme((1, -1))
    assert scheme.rows == ((1, -1), (-1,))
    out = apply_move(scheme, Move.horizontal(1, 1, 2))
    assert out.rows == ((-1, 1), (-1,))


def test_apply_square():
    # this generator shows the square pattern at rows (1,2), columns (3,4)
    scheme = generate_scheme((-1, 1, 1, -1))
    mv = Move.square(1, 2, 3, 4)
    assert pattern_mismatch(scheme, mv) is None
    out = apply_move(scheme, mv)
    assert out.rows == ((-1, -1, 1, -1), (1, -1, 1), (1, -1), (-1,))


def test_apply_square_on_five():
    scheme = generate_scheme(FIVE)
    mv = Move.square(3, 4, 4, 5)
    assert preconditions_hold(scheme, mv)
    out = apply_move(scheme, mv)
    for pos in mv.touched_positions():
        assert out.sign(*pos) == -scheme.sign(*pos)


def test_apply_rejects_pattern_mismatch():
    scheme = generate_scheme(FIVE)
    with pytest.raises(InvalidMoveError) as exc:
        apply_move(scheme, Move.point(1, 3))
    assert exc.value.position == (1, 3)
    assert exc.value.expected == "+"
    assert exc.value.found == "-"
    assert "Point(1;3) requires '+' at (1, 3), found '-'" in str(exc.value)


def test_pattern_mismatch_reports_first_bad_position():
    scheme = generate_scheme(FIVE)
    pos, req, found = pattern_mismatch(scheme, Move.horizontal(1, 2, 5))
    assert pos == (1, 5) and req == MINUS and found == PLUS


def test_double_flip_is_identity():
    scheme = generate_scheme(FIVE)
    mv = Move.square(3, 4, 4, 5)
    assert scheme.with_flipped(mv.touched_positions()).with_flipped(
        mv.touched_positions()
    ) == scheme


def test_certificate_json_golden():
    cert = Certificate(WORKED, WORKED_MOVES)
    assert certificate_to_json(cert) == WORKED_JSON
    assert certificate_from_json(WORKED_JSON) == cert


def test_certificate_obj_field_order():
    obj = certificate_to_obj(Certificate(WORKED, WORKED_MOVES))
    assert list(obj) == ["n", "eps", "moves"]
    assert list(obj["moves"][0]) == ["kind", "i", "j", "j2"]
    assert list(obj["moves"][1]) == ["kind", "i", "i2", "j", "j2"]
    assert list(obj["moves"][5]) == ["kind", "i", "j"]


def test_certificate_obj_errors():
    with pytest.raises(DomainError):
        certificate_from_obj([])
    with pytest.raises(DomainError):
        certificate_from_obj({"eps": [1]})
    with pytest.raises(DimensionError):
        certificate_from_obj({"n": 3, "eps": [1, -1], "moves": []})
    with pytest.raises(DomainError):
        certificate_from_obj({"eps": [1], "moves": [{"kind": "P", "i": 1}]})
    with pytest.raises(DomainError):
        certificate_from_obj(
            {"eps": [1], "moves": [{"kind": "P", "i": 1, "j": 1, "extra": 0}]}
        )
    with pytest.raises(DomainError):
        certificate_from_obj({"eps": [1], "moves": [{"kind": "P", "i": "1", "j": 1}]})
    with pytest.raises(DomainError):
        certificate_from_obj({"eps": [1], "moves": [{"kind": "P", "i": True, "j": 1}]})
    with pytest.raises(DomainError):
        certificate_from_obj({"eps": [1], "moves": [{"kind": "Q", "i": 1, "j": 1}]})


def test_certificate_requires_moves():
    with pytest.raises(DomainError):
        Certificate((1,), ("not a move",))


def test_touched_disjoint():
    assert Certificate(WORKED, WORKED_MOVES).touched_disjoint()
    clashing = Certificate((1, 1), (Move.point(1, 1), Move.point(1, 1)))
    assert not clashing.touched_disjoint()


@TEST_SETTINGS
@given(
    st.sampled_from(WORKED_MOVES),
)
def test_move_obj_roundtrip(move):
    assert Move.from_obj(move.to_obj()) == move


@TEST_SETTINGS
@given(st.data())
def test_applied_move_flips_exactly_touched(data):
    eps = data.draw(
        st.lists(st.sampled_from((PLUS, MINUS)), min_size=2, max_size=8).map(tuple)
    )
    scheme = generate_scheme(eps)
    n = len(eps)
    # enumerate applicable moves and apply one
    candidates = []
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            candidates.append(Move.point(i, j))
            for j2 in range(j + 1, n + 1):
                candidates.append(Move.horizontal(i, j, j2))
            for i2 in range(i + 1, j + 1):
                candidates.append(Move.vertical(i, i2, j))
                for j2 in range(j + 1, n + 1):
                    candidates.append(Move.square(i, i2, j, j2))
    applicable = [m for m in candidates if preconditions_hold(scheme, m)]
    if not applicable:
        return
    mv = data.draw(st.sampled_from(applicable))
    out = apply_move(scheme, mv)
    touched = set(mv.touched_positions())
    for pos in scheme.positions():
        if pos in touched:
            assert out.sign(*pos) == -scheme.sign(*pos)
        else:
            assert out.sign(*pos) == scheme.sign(*pos)


def test_worked_json_parses_as_plain_json():
    obj = json.loads(WORKED_JSON)
    assert obj["n"] == 7 and len(obj["moves"]) == 6
