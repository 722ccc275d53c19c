import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import canonical_walk, crossing_walk

from knotwidth.constructions import connect_sum, trefoil
from knotwidth.errors import IllegalMove
from knotwidth.model import Kind, cap, cross, cup, validate
from knotwidth.sampling import random_presentation
from knotwidth.search import CANCEL, COMMUTE, Move, apply_move, legal_moves, search_min_width, successors
from knotwidth.width import width_direct

# a minimum sitting just below a maximum it does not interact with
PUSHABLE = validate([cup(1), cup(3), cross(2), cup(5), cap(2), cross(2), cap(1), cap(1)])


def moved_ids(p, m):
    ids = list(range(len(p.events)))
    i = m.i
    if m.kind == COMMUTE:
        ids[i], ids[i + 1] = ids[i + 1], ids[i]
    else:
        del ids[i:i + 2]
    return ids


def assert_move_is_isotopy(p, m, q):
    before = canonical_walk(crossing_walk(p.events))
    after = canonical_walk(crossing_walk(q.events, moved_ids(p, m)))
    assert before == after, f"{m} changed the crossing walk"


def test_pushing_min_above_max_saves_four():
    assert width_direct(PUSHABLE) == 18
    q = apply_move(PUSHABLE, Move(COMMUTE, 3))
    assert width_direct(q) == 14
    assert [e.kind for e in q.events[3:5]] == [Kind.CAP, Kind.CUP]
    assert_move_is_isotopy(PUSHABLE, Move(COMMUTE, 3), q)


def test_cancel_zigzag():
    p = validate([cup(1), cup(2), cap(3), cap(1)])
    q = apply_move(p, Move(CANCEL, 1))
    assert q.events == (cup(1), cap(1))


def test_cancel_needs_adjacent_positions():
    # cup 5 then cap 2 touch different strands: a commute, not a cancellation
    assert Move(CANCEL, 3) not in legal_moves(PUSHABLE)
    with pytest.raises(IllegalMove):
        apply_move(PUSHABLE, Move(CANCEL, 3))


def test_illegal_index_and_kind():
    p = trefoil()
    with pytest.raises(IllegalMove):
        apply_move(p, Move(COMMUTE, 99))
    with pytest.raises(IllegalMove):
        apply_move(p, Move("Flip", 0))


def test_crossing_cannot_pass_a_cap_on_its_strands():
    p = trefoil()
    with pytest.raises(IllegalMove):
        apply_move(p, Move(COMMUTE, 4))  # x 2 then cap 2


@settings(max_examples=120, deadline=None)
@given(st.randoms(use_true_random=False))
def test_every_move_is_an_isotopy(rng):
    p = random_presentation(rng, max_events=16)
    for m, q in successors(p):
        assert_move_is_isotopy(p, m, q)
        dw = width_direct(q) - width_direct(p)
        if m.kind == COMMUTE:
            a, b = p.events[m.i], p.events[m.i + 1]
            expected = {(Kind.CUP, Kind.CAP): -4, (Kind.CAP, Kind.CUP): 4}.get((a.kind, b.kind), 0)
            assert dw == expected
        else:
            assert dw < 0


@settings(max_examples=60, deadline=None)
@given(st.randoms(use_true_random=False))
def test_commute_is_reversible(rng):
    p = random_presentation(rng, max_events=16)
    for m, q in successors(p):
        if m.kind != COMMUTE:
            continue
        back = apply_move(q, Move(COMMUTE, m.i))
        lo, hi = q.events[m.i], q.events[m.i + 1]
        if lo.kind is Kind.CAP and hi.kind is Kind.CUP and lo.pos == hi.pos:
            # the cup sits in the cap's hole: either side was possible before,
            # and undoing always reopens it on the left
            assert back.events[m.i] == cup(lo.pos)
            assert canonical_walk(crossing_walk(back.events)) == canonical_walk(crossing_walk(p.events))
            assert width_direct(back) == width_direct(p)
        else:
            assert back == p


def test_commute_tie_reopens_on_the_left():
    p = validate([cup(1), cup(2), cup(3), cap(1), cap(2), cap(1)])
    q = apply_move(p, Move(COMMUTE, 2))
    assert q.events[2:4] == (cap(1), cup(1))
    back = apply_move(q, Move(COMMUTE, 2))
    assert back.events[2:4] == (cup(1), cap(3))
    assert back != p and width_direct(back) == width_direct(p)


def test_legal_moves_agree_with_successors():
    p = PUSHABLE
    assert legal_moves(p) == [m for m, _ in successors(p)]


def test_trefoil_stays_at_eight():
    res = search_min_width(trefoil(), budget=100_000)
    assert res.best_width == 8 and not res.exhausted


def test_padded_unknot_reaches_two():
    p = validate([cup(1), cup(2), cap(3), cap(1)])
    res = search_min_width(p, budget=10_000)
    assert res.best_width == 2 and res.start_width == 8
    assert res.best.events == (cup(1), cap(1))


@pytest.mark.parametrize(
    "events,start",
    [
        ([cup(1), cup(2), cap(1), cup(2), cap(3), cap(1)], 14),
        ([cup(1), cup(2), cup(3), cap(2), cap(1), cap(1)], 18),
        ([cup(1), cross(1), cup(3), cap(2), cup(1), cap(2), cross(1, -1), cap(1)], 14),
    ],
)
def test_deeper_paddings_reach_two(events, start):
    p = validate(events)
    assert width_direct(p) == start
    res = search_min_width(p, budget=100_000)
    assert res.best_width == 2


def test_search_never_leaves_valid_states():
    # successors are constructed as Presentation objects, which validate; an
    # explicit walk over the reachable set double-checks the walk oracle too
    start = connect_sum(validate([cup(1), cup(2), cap(3), cap(1)]), trefoil())
    seen = {start.events}
    frontier = [start]
    while frontier and len(seen) < 2000:
        nxt = []
        for p in frontier:
            for m, q in successors(p):
                assert_move_is_isotopy(p, m, q)
                if q.events not in seen and width_direct(q) <= width_direct(p):
                    seen.add(q.events)
                    nxt.append(q)
        frontier = nxt
    assert min(width_direct(validate(e)) for e in seen) == search_min_width(start).best_width == 8


def test_budget_exhaustion_reports_partial_result():
    p = validate([cup(1), cup(2), cup(3), cap(2), cap(1), cap(1)])
    res = search_min_width(p, budget=2)
    assert res.exhausted
    assert res.states == 2
    assert res.best_width <= 18
    with pytest.raises(ValueError):
        search_min_width(p, budget=0)


def test_search_is_deterministic():
    p = connect_sum(trefoil(), validate([cup(1), cup(2), cup(3), cap(2), cap(1), cap(1)]))
    a, b = search_min_width(p), search_min_width(p)
    assert a.best.events == b.best.events and a.states == b.states and a.memo_hits == b.memo_hits


def test_memo_hits_counted():
    res = search_min_width(trefoil())
    assert res.memo_hits >= 1
    assert 0 < res.hit_rate < 1


def test_random_search_results_are_valid():
    rng = random.Random(2)
    for _ in range(20):
        p = random_presentation(rng, max_events=14)
        res = search_min_width(p, budget=5_000)
        assert res.best_width <= width_direct(p)
        assert width_direct(res.best) == res.best_width
        validate(res.best.events)
