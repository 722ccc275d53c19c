"""Local moves on presentations and a width-nonincreasing breadth-first search.

Two moves are supported:

``Commute(i)``
    swap the heights of events ``i`` and ``i+1``.  Legal when the strands the
    lower event produces and the strands the upper event consumes are
    disjoint and neither event sits inside the other (a cap under a cap that
    straddles it, a cup inside a cup, a cup between the strands of a crossing,
    ...).  A cap below meeting a cup above in the same gap is legal; the cup
    is then placed to the left of the cap's strands.

``CancelZigzag(i)``
    delete a cup ``i`` followed by a cap ``i+1`` that consumes exactly one of
    the cup's new strands (Morse cancellation).

Pushing a minimum above a maximum lowers width by 4; commuting two minima,
two maxima, or anything with a crossing leaves width unchanged.

The search explores only moves that do not raise width, so its result is an
upper bound for width within a restricted class and says nothing about
thin position in general.
"""

from dataclasses import dataclass

from .errors import IllegalMove, ValidationError
from .model import Event, Kind, Presentation
from .width import width_direct

COMMUTE = "Commute"
CANCEL = "CancelZigzag"


@dataclass(frozen=True)
class Move:
    kind: str
    i: int

    def __str__(self):
        return f"{self.kind}({self.i})"


def _act(tokens, e, fresh):
    """Apply ``e`` to a token list.

    Returns ``(new_tokens, touched, gap)``: ``touched`` are the tokens the event
    produces (cup) or consumes/crosses (cap, crossing); ``gap`` is the index in
    ``new_tokens`` where a cap left its hole, else ``None``.
    """
    k = e.pos - 1
    out = list(tokens)
    if e.kind is Kind.CUP:
        out[k:k] = [fresh, fresh + 1]
        return out, (fresh, fresh + 1), None
    if e.kind is Kind.CAP:
        touched = (out[k], out[k + 1])
        del out[k:k + 2]
        return out, touched, k
    out[k], out[k + 1] = out[k + 1], out[k]
    return out, (out[k], out[k + 1]), None


def _adjacent_pos(tokens, a, b):
    """1-based position of the pair ``a, b`` (in either order), or None if not adjacent."""
    if a not in tokens or b not in tokens:
        return None
    ia, ib = tokens.index(a), tokens.index(b)
    if abs(ia - ib) != 1:
        return None
    return min(ia, ib) + 1


def _commute(events, i, n_bottom):
    """Swapped pair ``(lower', upper')`` for events ``i, i+1``, or None if illegal."""
    e1, e2 = events[i], events[i + 1]
    bottom = list(range(n_bottom))
    middle, t1, gap1 = _act(bottom, e1, n_bottom)
    _, t2, _ = _act(middle, e2, n_bottom + 2)
    out1 = set(t1) if e1.kind is not Kind.CAP else set()
    in2 = set(t2) if e2.kind is not Kind.CUP else set()
    if out1 & in2:
        return None

    # nesting: a hole or insertion point strictly between two strands of the other event
    if e1.kind is Kind.CAP and e2.kind is not Kind.CUP:
        j = min(middle.index(t) for t in t2)
        if gap1 == j + 1:
            return None
    insert2 = e2.pos - 1 if e2.kind is Kind.CUP else None
    if insert2 is not None and e1.kind is not Kind.CAP:
        k = min(middle.index(t) for t in t1)
        if insert2 == k + 1:
            return None

    # lower' = e2 acting on the bottom level
    if e2.kind is Kind.CUP:
        left = sum(1 for t in bottom if t in middle and middle.index(t) < insert2)
        if e1.kind is Kind.CAP and gap1 < insert2:
            left += 2
        new2 = Event(Kind.CUP, left + 1)
    else:
        pos = _adjacent_pos(bottom, *t2)
        if pos is None:
            return None
        new2 = Event(e2.kind, pos, e2.sign)
    lower, _, _ = _act(bottom, new2, n_bottom + 2)

    # upper' = e1 acting on the new middle level
    if e1.kind is Kind.CUP:
        start = min(middle.index(t) for t in t1)
        left = 0
        for t in lower:
            if t in middle:
                left += middle.index(t) < start
            else:  # a token born in the upper cup
                left += insert2 <= start
        new1 = Event(Kind.CUP, left + 1)
    else:
        pos = _adjacent_pos(lower, *t1)
        if pos is None:
            return None
        new1 = Event(e1.kind, pos, e1.sign)
    return new2, new1


def _is_zigzag(e1, e2):
    return e1.kind is Kind.CUP and e2.kind is Kind.CAP and e2.pos in (e1.pos - 1, e1.pos + 1)


def _try(p, m):
    events = p.events
    i = m.i
    if not 0 <= i < len(events) - 1:
        return None
    if m.kind == COMMUTE:
        swapped = _commute(events, i, p.level_before(i))
        if swapped is None:
            return None
        new = events[:i] + swapped + events[i + 2:]
    elif m.kind == CANCEL:
        if not _is_zigzag(events[i], events[i + 1]) or len(events) <= 2:
            return None
        new = events[:i] + events[i + 2:]
    else:
        raise IllegalMove(f"unknown move kind {m.kind!r}")
    try:
        return Presentation(new)
    except ValidationError:
        return None


def legal_moves(p):
    """Every legal move on ``p``, in index order, commutes before cancellations."""
    out = []
    for i in range(len(p.events) - 1):
        for kind in (COMMUTE, CANCEL):
            m = Move(kind, i)
            if _try(p, m) is not None:
                out.append(m)
    return out


def apply_move(p, m):
    q = _try(p, m)
    if q is None:
        raise IllegalMove(f"{m} is not legal on this presentation")
    return q


def successors(p):
    """``(move, presentation)`` for each legal move."""
    out = []
    for i in range(len(p.events) - 1):
        for kind in (COMMUTE, CANCEL):
            m = Move(kind, i)
            q = _try(p, m)
            if q is not None:
                out.append((m, q))
    return out


def state_key(p):
    return " ".join(map(str, p.events))


@dataclass
class SearchResult:
    best_width: int
    best: Presentation
    states: int
    exhausted: bool
    memo_hits: int
    start_width: int

    @property
    def hit_rate(self):
        seen = self.states + self.memo_hits
        return self.memo_hits / seen if seen else 0.0


def search_min_width(p, budget=100_000):
    """Breadth-first search over width-nonincreasing moves.

    ``budget`` caps the number of distinct presentations admitted to the
    visited set.  Each layer is expanded in ``(width, serialization)`` order,
    so the result is deterministic.  When the cap is hit the best presentation
    found so far is returned with ``exhausted=True``.
    """
    if budget < 1:
        raise ValueError("budget must be at least 1")
    w0 = width_direct(p)
    visited = {p.events}
    best = (w0, state_key(p), p)
    frontier = [p]
    hits = 0
    exhausted = False
    while frontier and not exhausted:
        layer = []
        for state in frontier:
            w = width_direct(state)
            for _, q in successors(state):
                wq = width_direct(q)
                if wq > w:
                    continue
                if q.events in visited:
                    hits += 1
                    continue
                if len(visited) >= budget:
                    exhausted = True
                    break
                visited.add(q.events)
                layer.append((wq, state_key(q), q))
            if exhausted:
                break
        layer.sort(key=lambda t: (t[0], t[1]))
        if layer and layer[0][:2] < best[:2]:
            best = layer[0]
        frontier = [q for _, _, q in layer]
    return SearchResult(best[0], best[2], len(visited), exhausted, hits, w0)
