import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gwalk.arith import balanced_division
from gwalk.construction import (
    KINDS,
    SegmentSpec,
    avoiding_walk,
    build_p1,
    build_p2,
    chain,
    segment_bound,
    segment_points,
    select_anchors,
)
from gwalk.errors import DomainError, IndexOutOfRange, NotAvoidable
from gwalk.membership import is_unavoidable
from gwalk.walks import contains_forbidden, positive_real_differences
from independent import real_differences


def grid_inclusions(d: int) -> tuple[set, set]:
    """Axis points the construction promises to P1 and P2."""
    if d % 2:
        p1 = {(m * (d + 1), 0) for m in range((d - 1) // 2 + 1)} | {(i * (d - 1), 0) for i in range((d + 1) // 2 + 1)}
        p2 = {(m * (d + 1), 0) for m in range((d - 3) // 2 + 1)} | {(i * (d - 1) - 1, 0) for i in range((d - 1) // 2 + 1)}
    else:
        p1 = {(m * (d + 1), 0) for m in range(d // 2)} | {(i * (d - 1), 0) for i in range(d // 2 + 1)}
        p2 = {(m * (d + 1), 0) for m in range(d // 2)} | {(i * (d - 1) - 1, 0) for i in range(d // 2)}
    return p1, p2


def test_segment_examples():
    assert segment_points(SegmentSpec("R", 0, 3)) == [(0, 0), (0, 1), (0, 2), (0, 3), (0, 4)]
    assert segment_points(SegmentSpec("U", 0, 3)) == [(2, -1), (3, -1), (4, -1)]
    assert segment_points(SegmentSpec("S'", 0, 3)) == [(0, 4), (1, 4)]
    assert segment_points(SegmentSpec("T", 0, 3)) == [(2, 4), (2, 3), (2, 2), (2, 1), (2, 0), (2, -1)]


def test_segment_bounds_enforced():
    with pytest.raises(IndexOutOfRange):
        SegmentSpec("R", 2, 3)
    with pytest.raises(IndexOutOfRange):
        SegmentSpec("U'", 0, 3)
    with pytest.raises(IndexOutOfRange):
        SegmentSpec("S", -1, 5)
    with pytest.raises(ValueError):
        segment_bound("Q", 5)
    with pytest.raises(DomainError):
        SegmentSpec("R", 0, 1)


def test_p1_d3():
    w = build_p1(3)
    assert {s.kind + str(s.m) for s in chain(3, False)} == {"R0", "S0", "T0", "U0", "R1"}
    assert len(w.visited) == 18
    assert {(0, 0), (2, 0), (4, 0)} <= w.visited
    assert not contains_forbidden(w, 3)


def test_p1_d2_ends_with_t0():
    specs = chain(2, False)
    assert [s.kind for s in specs] == ["R", "S", "T"]
    assert build_p1(2).visited == {p for s in specs for p in segment_points(s)}


def test_p2_small():
    w = build_p2(3)
    assert w[0] == (-1, 0) and w[1] == (0, 0)
    assert [s.kind for s in chain(3, True)] == ["R'", "S'", "T'"]
    assert {(-1, 0), (0, 0), (1, 0)} <= w.visited
    assert not contains_forbidden(w, 3)
    assert [(s.kind, s.m) for s in chain(4, True)] == [("R'", 0), ("S'", 0), ("T'", 0), ("U'", 0), ("R'", 1)]
    assert [s.kind for s in chain(2, True)] == ["R'"]


@pytest.mark.parametrize("d", range(2, 61))
def test_paths_conflict_free_and_cover_the_grids(d):
    p1, p2 = build_p1(d), build_p2(d)
    assert not contains_forbidden(p1, d)
    assert not contains_forbidden(p2, d)
    g1, g2 = grid_inclusions(d)
    assert g1 <= p1.visited
    assert g2 <= p2.visited


@pytest.mark.parametrize("d", range(2, 40))
def test_visited_set_is_the_segment_union(d):
    for primed, walk in ((False, build_p1(d)), (True, build_p2(d))):
        union = {p for s in chain(d, primed) for p in segment_points(s)}
        if primed:
            union.add((-1, 0))
        assert walk.visited == union


def test_segment_kinds_cover_all_eight():
    used = {s.kind for d in (5, 6) for primed in (False, True) for s in chain(d, primed)}
    assert used == set(KINDS)


def test_anchor_examples():
    assert select_anchors(4, 3) == ((4, 0), (0, 0), "P1")
    assert select_anchors(2, 3) == ((0, 0), (2, 0), "P1")
    # 6 = 2*4 - 2 under balanced division, so this pair uses P1 as well
    assert select_anchors(6, 4) == ((0, 0), (6, 0), "P1")
    assert select_anchors(5, 4) == ((5, 0), (0, 0), "P1")
    assert select_anchors(2, 4) == ((0, 0), (2, 0), "P2")


def test_not_avoidable():
    with pytest.raises(NotAvoidable) as info:
        avoiding_walk(20, 7)
    assert (info.value.k, info.value.r) == (3, -1)
    assert "k=3 >= |r|+1=2" in str(info.value)


def test_certificate_examples():
    cert = avoiding_walk(4, 3)
    assert cert.path_id == "P1"
    assert cert.walk[cert.anchor_a] == (4, 0) and cert.walk[cert.anchor_b] == (0, 0)
    assert 3 not in positive_real_differences(cert.walk)
    doc = cert.to_json()
    assert (doc["n"], doc["d"], doc["path"]) == (4, 3, "P1")
    assert avoiding_walk(20, 9).path_id in ("P1", "P2")


@pytest.mark.parametrize("d", range(2, 16))
def test_every_avoidable_pair_gets_a_certificate(d):
    for n in range(1, 2 * d * d + 1):
        if is_unavoidable(n, d):
            continue
        cert = avoiding_walk(n, d)
        a, b = cert.walk[cert.anchor_a], cert.walk[cert.anchor_b]
        assert (a.x - b.x, a.y - b.y) == (n, 0)
        assert d not in real_differences(cert.walk.points)


@given(st.integers(2, 300), st.integers(1, 10**5))
@settings(deadline=None)
def test_trimmed_certificate(d, n):
    if is_unavoidable(n, d):
        return
    cert = avoiding_walk(n, d, trim=True)
    assert {cert.anchor_a, cert.anchor_b} == {0, len(cert.walk) - 1}
    assert cert.walk[cert.anchor_a].x - cert.walk[cert.anchor_b].x == n
    assert not contains_forbidden(cert.walk, d)


@given(st.integers(2, 60), st.integers(1, 7200))
def test_anchor_identity(d, n):
    bd = balanced_division(n, d)
    if bd.k > abs(bd.r):
        return
    a, b, path = select_anchors(n, d)
    assert abs(a.x - b.x) == n and a.y == b.y == 0
    assert path == ("P1" if (bd.k - bd.r) % 2 == 0 else "P2")
