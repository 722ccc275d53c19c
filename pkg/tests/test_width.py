import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import width_by_hand

from knotwidth.errors import OddResult, ValidationError
from knotwidth.model import MAX, MIN, Profile, cap, cross, cup, validate
from knotwidth.sampling import random_presentation, random_profile
from knotwidth.width import Decomposition, bridge_number, decompose, width_direct, width_lemma

TREFOIL = [cup(1), cup(3), cross(2), cross(2), cross(2), cap(2), cap(1)]


def test_unknot():
    p = validate([cup(1), cap(1)])
    assert width_direct(p) == 2
    assert decompose(p) == Decomposition((2,), ())
    assert bridge_number(p) == 1


def test_trefoil():
    p = validate(TREFOIL)
    assert width_direct(p) == 8
    d = decompose(p)
    assert d.thick == (4,) and d.thin == ()
    assert width_lemma(d) == 8
    assert bridge_number(p) == 2


def test_width_ignores_crossings():
    bare = validate([cup(1), cup(3), cap(2), cap(1)])
    assert width_direct(bare) == width_direct(validate(TREFOIL))


def test_profile_input():
    prof = Profile.from_runs((MIN, 2), (MAX, 1), (MIN, 1), (MAX, 2))
    assert width_direct(prof) == 2 + 4 + 2 + 4 + 2
    d = decompose(prof)
    assert d.thick == (4, 4) and d.thin == (2,)
    assert d.levels() == [4, 2, 4]


def test_decomposition_invariants():
    with pytest.raises(ValidationError):
        Decomposition((4, 4), (4,))
    with pytest.raises(ValidationError):
        Decomposition((4,), (2,))


def test_odd_lemma_input():
    with pytest.raises(OddResult):
        width_lemma(Decomposition((3,), ()))


@settings(max_examples=300, deadline=None)
@given(st.randoms(use_true_random=False))
def test_lemma_matches_direct(rng):
    p = random_presentation(rng, max_events=30)
    assert width_lemma(decompose(p)) == width_direct(p) == width_by_hand(p.events)


@settings(max_examples=200, deadline=None)
@given(st.randoms(use_true_random=False), st.integers(1, 12))
def test_profile_decomposition_properties(rng, pairs):
    prof = random_profile(rng, pairs)
    d = decompose(prof)
    # thick levels are local maxima of the count, thin levels local minima
    assert len(d.thick) == len(d.thin) + 1
    assert all(a % 2 == 0 and a >= 2 for a in d.thick)
    assert all(b % 2 == 0 and b >= 2 for b in d.thin)
    assert max(d.thick) == max(prof.counts)
    assert width_lemma(d) == width_direct(prof)
    assert bridge_number(prof) == pairs


@settings(max_examples=100, deadline=None)
@given(st.randoms(use_true_random=False))
def test_width_lower_bound_by_bridge_number(rng):
    # 2b extrema leave 2b - 1 gaps, each with at least 2 strands
    p = random_presentation(rng, max_events=30)
    assert width_direct(p) >= 2 * (2 * bridge_number(p) - 1)
