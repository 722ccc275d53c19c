"""Morse presentations of knots as bottom-to-top event sequences.

A presentation is read from the bottom up.  Each event is a cup (a minimum),
a cap (a maximum) or a crossing, and acts on the strands of the level below
it.  Positions are 1-based:

* ``cup p`` inserts two new strands at positions ``p, p+1`` (legal for
  ``1 <= p <= n+1``); strands formerly at ``p..n`` move up by two.
* ``cap p`` joins strands ``p, p+1`` (legal for ``1 <= p <= n-1``).
* ``x p +/-`` crosses strands ``p, p+1``; the sign is kept for fidelity of
  the diagram but never affects width.
"""

from dataclasses import dataclass, field
from enum import Enum

from .errors import IllegalPosition, MultiComponent, UnbalancedCounts, ValidationError


class Kind(Enum):
    CUP = "cup"
    CAP = "cap"
    CROSSING = "x"


class Extremum(Enum):
    MIN = "min"
    MAX = "max"

    def __repr__(self):
        return self.name.capitalize()


MIN = Extremum.MIN
MAX = Extremum.MAX


@dataclass(frozen=True)
class Event:
    kind: Kind
    pos: int
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"crossing sign must be +1 or -1, got {self.sign}")
        if self.kind is not Kind.CROSSING and self.sign != 1:
            object.__setattr__(self, "sign", 1)

    @property
    def delta(self):
        return {Kind.CUP: 2, Kind.CAP: -2, Kind.CROSSING: 0}[self.kind]

    @property
    def is_extremum(self):
        return self.kind is not Kind.CROSSING

    def shifted(self, offset):
        return Event(self.kind, self.pos + offset, self.sign)

    def __str__(self):
        if self.kind is Kind.CROSSING:
            return f"x {self.pos} {'+' if self.sign > 0 else '-'}"
        return f"{self.kind.value} {self.pos}"

    def __repr__(self):
        if self.kind is Kind.CROSSING:
            return f"X@{self.pos}{'+' if self.sign > 0 else '-'}"
        return f"{self.kind.value.capitalize()}@{self.pos}"


def cup(pos):
    return Event(Kind.CUP, pos)


def cap(pos):
    return Event(Kind.CAP, pos)


def cross(pos, sign=1):
    return Event(Kind.CROSSING, pos, sign)


def is_legal(event, strands):
    """Whether `event` may act on a level with `strands` strands."""
    if event.kind is Kind.CUP:
        return 1 <= event.pos <= strands + 1
    return 1 <= event.pos <= strands - 1


def level_counts(events):
    """Strand count after each event, checking positional legality only."""
    counts = []
    n = 0
    for i, e in enumerate(events):
        if not is_legal(e, n):
            raise IllegalPosition(i, e, n)
        n += e.delta
        counts.append(n)
    return counts


def _arcs(events):
    """Follow strands through the diagram.

    Returns ``(parent, levels)`` where ``parent`` is a union-find forest over
    arc ids (one id per cup) and ``levels[i]`` lists the arc id of every strand
    on the level just above event ``i``.
    """
    parent = []

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    strands = []
    levels = []
    for e in events:
        k = e.pos - 1
        if e.kind is Kind.CUP:
            arc = len(parent)
            parent.append(arc)
            strands[k:k] = [arc, arc]
        elif e.kind is Kind.CAP:
            a, b = find(strands[k]), find(strands[k + 1])
            if a != b:
                parent[a] = b
            del strands[k:k + 2]
        else:
            strands[k], strands[k + 1] = strands[k + 1], strands[k]
        levels.append(list(strands))
    return parent, levels, find


def trace_components(events):
    """Number of closed components of a legal, closed event sequence."""
    parent, _, find = _arcs(events)
    return len({find(a) for a in range(len(parent))})


def component_labels(events):
    """Per-level component labels: ``labels[i][j]`` for strand j above event i.

    Labels are canonical small integers, numbered by first appearance.
    """
    parent, levels, find = _arcs(events)
    names = {}
    out = []
    for level in levels:
        row = []
        for arc in level:
            root = find(arc)
            row.append(names.setdefault(root, len(names)))
        out.append(tuple(row))
    return out


def check_closure(events):
    """Counting checks shared by presentations; returns the level counts."""
    if not events:
        raise UnbalancedCounts("empty presentation: a knot needs at least two critical points")
    counts = level_counts(events)
    for i, n in enumerate(counts[:-1]):
        if n == 0:
            raise UnbalancedCounts(f"diagram empties after event {i}; presentation splits", i)
    if counts[-1] != 0:
        raise UnbalancedCounts(f"diagram ends with {counts[-1]} open strands", len(events) - 1)
    return counts


@dataclass(frozen=True)
class Presentation:
    """A validated single-component Morse presentation."""

    events: tuple
    counts: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        events = tuple(self.events)
        for i, e in enumerate(events):
            if not isinstance(e, Event):
                raise ValidationError(f"event {i} is not an Event: {e!r}", i)
        object.__setattr__(self, "events", events)
        counts = check_closure(events)
        k = trace_components(events)
        if k != 1:
            raise MultiComponent(k)
        object.__setattr__(self, "counts", tuple(counts))

    def __len__(self):
        return len(self.events)

    def __iter__(self):
        return iter(self.events)

    @property
    def extrema(self):
        return [e for e in self.events if e.is_extremum]

    def level_before(self, i):
        return self.counts[i - 1] if i > 0 else 0


def validate(events):
    """Check an event list and wrap it as a :class:`Presentation`.

    Raises :class:`IllegalPosition`, :class:`UnbalancedCounts` or
    :class:`MultiComponent`, whichever violation is met first.
    """
    return Presentation(tuple(events))


@dataclass(frozen=True)
class Profile:
    """Extrema sequence of a presentation, with crossings forgotten.

    ``positions`` keeps the cup/cap positions when the profile came from a
    concrete presentation; abstract profiles leave it as ``None``.
    """

    extrema: tuple
    positions: tuple = None

    def __post_init__(self):
        extrema = tuple(Extremum(x) if isinstance(x, str) else x for x in self.extrema)
        object.__setattr__(self, "extrema", extrema)
        if self.positions is not None:
            object.__setattr__(self, "positions", tuple(self.positions))
            if len(self.positions) != len(extrema):
                raise ValidationError("positions and extrema differ in length")
        if not extrema:
            raise UnbalancedCounts("empty profile")
        n = 0
        for i, x in enumerate(extrema):
            n += 2 if x is MIN else -2
            if n < 0 or (n == 0 and i != len(extrema) - 1):
                raise UnbalancedCounts(f"profile count reaches {n} after extremum {i}", i)
        if n != 0:
            raise UnbalancedCounts(f"profile ends with {n} open strands")

    @property
    def counts(self):
        out = []
        n = 0
        for x in self.extrema:
            n += 2 if x is MIN else -2
            out.append(n)
        return out

    def __len__(self):
        return len(self.extrema)

    @classmethod
    def from_runs(cls, *runs):
        """Build from ``(Extremum, length)`` pairs."""
        return cls(tuple(x for kind, k in runs for x in [kind] * k))

    def __str__(self):
        return "".join("m" if x is MIN else "M" for x in self.extrema)


def profile_of(p):
    """Erase crossings, keeping extremum order and positions."""
    if isinstance(p, Profile):
        return p
    ex = p.extrema
    return Profile(
        tuple(MIN if e.kind is Kind.CUP else MAX for e in ex),
        tuple(e.pos for e in ex),
    )
