"""Builders for the counterexample family, its rival presentation, and the sum operations.

Wiring of the K1 family
-----------------------
The extrema skeleton of K1(r) is fixed by its thick/thin structure
``[2r+2, 10, 2r+2] / [4, 4]``.  The wiring table used here is::

    bottom   cup 1  x (r+1)         2r+2 strands, r+1 side-by-side arcs
             cap 2  x (r-1)         chain them: 4 strands paired (1,2)(3,4)
    middle   cup 2, cup 7, cup 9    10 strands
             box 1 on strands 1-5, box 2 on strands 6-10
             box 3 on strands 1-5, box 4 on strands 6-10
             cap 4  x 3             4 strands; joins lower 2~3, upper 2~3
    top      cup 2  x (r-1)         mirror of the bottom
             cap 1  x (r+1)

With empty boxes this is one component.  Box contents permute strands and
may split the diagram; :func:`join_components` then adds crossings at the
upper thin level (falling back to the first level where two adjacent strands
lie on different components).  Crossings never change width.
"""

from dataclasses import dataclass

from .errors import DomainViolation, IllegalBraid, MultiComponent, ValidationError
from .model import MAX, MIN, Kind, Presentation, Profile, cap, component_labels, cross, cup, profile_of, trace_components
from .symbolic import Domain, SymbolicProfile, at_least, var

BOX_STRANDS = 5


@dataclass(frozen=True)
class BraidWord:
    """A braid on ``strands`` strands, as ``(pos, sign)`` letters for sigma_pos^sign."""

    strands: int
    letters: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple((int(p), int(s)) for p, s in self.letters))
        if self.strands < 1:
            raise IllegalBraid(f"braid needs at least one strand, got {self.strands}")
        for p, s in self.letters:
            if not 1 <= p <= self.strands - 1 or s not in (1, -1):
                raise IllegalBraid(f"letter sigma_{p}^{s} out of range for {self.strands} strands")

    @classmethod
    def parse(cls, text, strands=BOX_STRANDS):
        """Read ``s<k>`` / ``S<k>`` tokens (sigma_k and its inverse)."""
        letters = []
        for tok in text.replace(",", " ").split():
            if len(tok) < 2 or tok[0] not in "sS" or not tok[1:].isdigit():
                raise IllegalBraid(f"bad braid token {tok!r}; use s<k> or S<k>")
            letters.append((int(tok[1:]), 1 if tok[0] == "s" else -1))
        return cls(strands, tuple(letters))

    def events(self, offset=0):
        return [cross(p + offset, s) for p, s in self.letters]

    def __str__(self):
        return " ".join(f"{'s' if s > 0 else 'S'}{p}" for p, s in self.letters)


TRIVIAL_BOX = BraidWord(BOX_STRANDS)


@dataclass(frozen=True)
class FourPlat:
    """A 2-bridge knot as alternating twist regions of a 4-strand plat.

    Odd-numbered regions twist strands (2,3), even-numbered ones (1,2).
    ``FourPlat((3,))`` is the trefoil.
    """

    twists: tuple

    def __post_init__(self):
        object.__setattr__(self, "twists", tuple(int(t) for t in self.twists))
        if not self.twists or any(t == 0 for t in self.twists):
            raise ValidationError(f"twist word must be nonempty and nonzero: {self.twists}")
        if trace_components(self.events()) != 1:
            raise MultiComponent(trace_components(self.events()))

    def braid(self):
        out = []
        for i, t in enumerate(self.twists):
            pos = 2 if i % 2 == 0 else 1
            sign = 1 if t > 0 else -1
            out += [cross(pos, sign)] * abs(t)
        return out

    def events(self):
        return [cup(1), cup(3)] + self.braid() + [cap(2), cap(1)]

    def presentation(self):
        return Presentation(tuple(self.events()))


def trefoil():
    return FourPlat((3,)).presentation()


def unknot():
    return Presentation((cup(1), cap(1)))


def join_components(events, preferred=()):
    """Insert crossings until the diagram is a single component.

    ``preferred`` lists event indices; a crossing is placed just after the
    first preferred index whose level has two adjacent strands on different
    components, else after the first such index anywhere.  Crossing two
    strands of distinct components fuses them, so each insertion removes one
    component and the loop ends.  Returns the new event list.
    """
    events = list(events)
    while True:
        labels = component_labels(events)
        if len({c for row in labels for c in row}) <= 1:
            return events
        order = list(preferred) + [i for i in range(len(events)) if i not in preferred]
        for i in order:
            row = labels[i]
            j = next((j for j in range(len(row) - 1) if row[j] != row[j + 1]), None)
            if j is not None:
                events.insert(i + 1, cross(j + 1))
                preferred = [k + 1 if k > i else k for k in preferred]
                break
        else:  # pragma: no cover - cannot happen for closed diagrams with no empty level
            raise MultiComponent(trace_components(events))


def realize_profile(profile):
    """A concrete single-component presentation with the given extrema sequence.

    Minima become ``cup 1``; maxima become ``cap 2`` (``cap 1`` at two
    strands).  Components are then fused with crossings placed at thin levels.
    """
    profile = Profile(profile.extrema) if not isinstance(profile, Profile) else profile
    events = []
    thin = []
    n = 0
    prev = None
    for x in profile.extrema:
        if x is MIN:
            if prev is MAX:
                thin.append(len(events) - 1)
            events.append(cup(1))
            n += 2
        else:
            events.append(cap(2 if n > 2 else 1))
            n -= 2
        prev = x
    return Presentation(tuple(join_components(events, thin)))


def _check_r(r, name="r"):
    if not isinstance(r, int) or r < 2:
        raise DomainViolation(f"{name} >= 2", {name: r})


def _boxes(boxes):
    boxes = list(boxes) if boxes is not None else []
    if len(boxes) > 4:
        raise IllegalBraid(f"K1 has four braid boxes, got {len(boxes)}")
    boxes += [TRIVIAL_BOX] * (4 - len(boxes))
    for b in boxes:
        if b.strands > BOX_STRANDS:
            raise IllegalBraid(f"box braids act on at most {BOX_STRANDS} strands, got {b.strands}")
    return boxes


def _k1_parts(r, boxes):
    """Bottom, middle and top event blocks of the K1 skeleton."""
    b1, b2, b3, b4 = _boxes(boxes)
    bottom = [cup(1)] * (r + 1) + [cap(2)] * (r - 1)
    middle = [cup(2), cup(7), cup(9)]
    middle += b1.events(0) + b2.events(BOX_STRANDS) + b3.events(0) + b4.events(BOX_STRANDS)
    middle += [cap(4)] * 3
    top = [cup(2)] * (r - 1) + [cap(1)] * (r + 1)
    return bottom, middle, top


def family_k1(r, boxes=None):
    """K1(r): width 2(2r^2 + 4r + 19), decomposition ``[2r+2, 10, 2r+2] / [4, 4]``.

    ``boxes`` holds up to four :class:`BraidWord` fillings (missing ones are
    empty), each acting on at most five of the ten middle strands.
    """
    _check_r(r)
    bottom, middle, top = _k1_parts(r, boxes)
    events = bottom + middle + top
    upper_thin = len(bottom) + len(middle) - 1
    return Presentation(tuple(join_components(events, [upper_thin])))


def family_fig4(r):
    """Profile of the rival presentation with fewer maxima: ``[2r+4, 2r+4] / [4]``."""
    _check_r(r)
    return Profile.from_runs((MIN, r + 2), (MAX, r), (MIN, r), (MAX, r + 2))


def fig4_presentation(r):
    return realize_profile(family_fig4(r))


def connect_sum(lower, upper):
    """Stack ``lower`` below ``upper`` and join them by a vertical band.

    A closed presentation always starts with ``cup 1`` and ends with
    ``cap 1`` (they are the only legal positions at zero and two strands),
    so the band is the deletion of the lower final cap and the upper initial cup.
    """
    lo, up = lower.events, upper.events
    assert lo[-1].kind is Kind.CAP and lo[-1].pos == 1
    assert up[0].kind is Kind.CUP and up[0].pos == 1
    return Presentation(lo[:-1] + up[1:])


def satellite_sum_2bridge(r, boxes=None, companion=FourPlat((3,))):
    """Reimbed K1(r) level-preservingly as a satellite of a 2-bridge companion.

    The four strands crossing the lower thin level are threaded through the
    companion's twist regions, which adds crossings only: the profile,
    extremum positions included, is exactly that of ``family_k1(r, boxes)``.
    If the twist parity splits the diagram, the final strand joining is
    adjusted with crossings at the upper thin level (see :func:`join_components`).
    """
    _check_r(r)
    if not isinstance(companion, FourPlat):
        companion = FourPlat(tuple(companion))
    bottom, middle, top = _k1_parts(r, boxes)
    events = bottom + companion.braid() + middle + top
    upper_thin = len(events) - len(top) - 1
    out = Presentation(tuple(join_components(events, [upper_thin])))
    assert profile_of(out) == profile_of(family_k1(r, boxes))
    return out


def k1_symbolic():
    """K1 as a symbolic profile in ``r``: thick ``2r+2, 10, 2r+2``, thin ``4, 4``."""
    r = var("r")
    dom = Domain((at_least(r, 2, "r >= 2"),))
    return SymbolicProfile((2 * r + 2, 4, 10, 4, 2 * r + 2), dom, name="k1")


def fig4_symbolic():
    """The rival presentation of K1 as a symbolic profile: thick ``2r+4`` twice, thin ``4``."""
    r = var("r")
    dom = Domain((at_least(r, 2, "r >= 2"),))
    return SymbolicProfile((2 * r + 4, 4, 2 * r + 4), dom, name="fig4")
