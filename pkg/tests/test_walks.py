import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gwalk.errors import EmptyWalk, NonUnitStep, WalkError
from gwalk.walks import (
    FIXTURE_DIFFERENCES,
    FIXTURE_INTERSECTION,
    FIXTURES,
    S1,
    S2,
    S3,
    Point,
    Walk,
    contains_forbidden,
    difference_set,
    parse_gaussian_sequence,
    positive_real_differences,
    validate_walk,
    walk_from_json,
    walk_to_json,
)
from independent import complex_differences, real_differences

STEPS = [(1, 0), (0, 1), (-1, 0), (0, -1)]


@st.composite
def walks(draw, max_len=40):
    steps = draw(st.lists(st.sampled_from(STEPS), max_size=max_len))
    pts = [(0, 0)]
    for dx, dy in steps:
        x, y = pts[-1]
        pts.append((x + dx, y + dy))
    return Walk.of(pts)


def test_fixture_lengths():
    assert (len(S1), len(S2), len(S3)) == (25, 33, 33)


@pytest.mark.parametrize("name", ["S1", "S2", "S3"])
def test_fixture_differences(name):
    w = FIXTURES[name]
    assert w[0] == (0, 0) and w[-1] == (20, 0)
    assert positive_real_differences(w) == FIXTURE_DIFFERENCES[name]


def test_fixture_intersection():
    common = set.intersection(*(set(positive_real_differences(w)) for w in FIXTURES.values()))
    assert sorted(common) == FIXTURE_INTERSECTION


def test_validate_rejects_bad_walks():
    with pytest.raises(EmptyWalk):
        validate_walk([])
    with pytest.raises(NonUnitStep) as info:
        Walk.of([(0, 0), (1, 1)])
    assert info.value.index == 0
    with pytest.raises(NonUnitStep):
        Walk.of([(0, 0), (0, 0)])


def test_revisits_are_allowed():
    w = Walk.of([(0, 0), (1, 0), (0, 0)])
    assert len(w) == 3 and len(w.visited) == 2


def test_point_arithmetic():
    assert Point(3, 1) - Point(1, 2) == (2, -1)
    assert Point(3, 1) + (1, 1) == (4, 2)
    assert -Point(1, -2) == (-1, 2)


def test_parse_gaussian_sequence():
    assert parse_gaussian_sequence("0, i, -i, 1+2i, 7-i, 3") == [(0, 0), (0, 1), (0, -1), (1, 2), (7, -1), (3, 0)]


@given(walks())
def test_differences_match_reference(w):
    assert set(positive_real_differences(w)) == real_differences(w.points)
    assert difference_set(w) == complex_differences(w.points)


@given(walks(), st.integers(1, 12))
def test_contains_forbidden_matches_reference(w, d):
    assert contains_forbidden(w, d) == (d in real_differences(w.points))


@given(walks())
def test_difference_set_is_symmetric(w):
    ds = difference_set(w)
    assert all(-p in ds for p in ds)
    assert (0, 0) in ds


@given(walks())
def test_json_round_trip(w):
    anchors = (len(w) - 1, 0)
    doc = json.loads(json.dumps(walk_to_json(w, anchors, n=1)))
    back, got = walk_from_json(doc)
    assert back == w and got == anchors
    assert doc["n"] == 1


def test_json_errors():
    with pytest.raises(WalkError):
        walk_from_json({"anchors": [0, 0]})
    with pytest.raises(WalkError):
        walk_from_json('{"points": [[0, 0], [1, 0]], "anchors": [0, 5]}')
    with pytest.raises(NonUnitStep):
        walk_from_json('{"points": [[0, 0], [2, 0]]}')
