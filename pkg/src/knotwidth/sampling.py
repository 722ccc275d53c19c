"""Random profiles and presentations for property tests and benchmarks."""

import random

from .errors import MultiComponent
from .model import MAX, MIN, Presentation, Profile, cap, cross, cup, trace_components


def random_extrema(rng, pairs):
    """A uniform-ish walk of ``pairs`` minima and maxima that stays >= 2 until the end."""
    out = []
    c = 0
    steps = 2 * pairs
    for done in range(steps):
        left = steps - done
        options = []
        if c + 2 <= 2 * (left - 1):
            options.append(MIN)
        if c - 2 >= 2 or (c == 2 and left == 1):
            options.append(MAX)
        x = rng.choice(options)
        out.append(x)
        c += 2 if x is MIN else -2
    return out


def random_profile(rng, pairs):
    return Profile(tuple(random_extrema(rng, pairs)))


def random_events(rng, pairs, crossings):
    """Random legal event list with the given numbers of extremum pairs and crossings.

    Not necessarily a single component.
    """
    extrema = random_extrema(rng, pairs)
    # crossings can only sit after the first extremum and before the last
    slots = [rng.randrange(1, len(extrema)) for _ in range(crossings)]
    slots.sort()
    events = []
    n = 0
    j = 0
    for i, x in enumerate(extrema):
        while j < len(slots) and slots[j] == i:
            events.append(cross(rng.randint(1, n - 1), rng.choice((1, -1))))
            j += 1
        if x is MIN:
            events.append(cup(rng.randint(1, n + 1)))
            n += 2
        else:
            events.append(cap(rng.randint(1, n - 1)))
            n -= 2
    return events


def random_presentation(rng=None, max_events=30, max_tries=10_000):
    """Rejection-sample a single-component presentation with at most ``max_events`` events."""
    rng = rng or random.Random()
    for _ in range(max_tries):
        pairs = rng.randint(1, max(1, max_events // 4))
        crossings = rng.randint(0, max_events - 2 * pairs)
        events = random_events(rng, pairs, crossings)
        if trace_components(events) == 1:
            return Presentation(tuple(events))
    raise MultiComponent(-1)


def random_fourplat(rng=None, max_regions=4, max_twist=5, max_tries=1000):
    """A random single-component 4-plat (a 2-bridge knot)."""
    from .constructions import FourPlat

    rng = rng or random.Random()
    for _ in range(max_tries):
        k = rng.randint(1, max_regions)
        twists = tuple(rng.choice((1, -1)) * rng.randint(1, max_twist) for _ in range(k))
        try:
            return FourPlat(twists)
        except MultiComponent:
            continue
    raise MultiComponent(-1)


def random_symbolic_profile(rng=None, names=("a", "b", "c"), max_thin=3):
    """A random symbolic profile over nonnegative parameters ``names``.

    Thin counts are ``2 + 2 * (nonnegative combination)`` and each thick
    count exceeds the sum of its thin neighbours, so every point of the
    domain (all parameters >= 0) gives a valid profile.
    """
    from .symbolic import AffineCount, Domain, SymbolicProfile, at_least, var

    rng = rng or random.Random()

    def combo(base):
        out = AffineCount(base)
        for n in names:
            if rng.random() < 0.5:
                out = out + 2 * rng.randint(1, 3) * var(n)
        return out

    thin = [combo(2) for _ in range(rng.randint(0, max_thin))]
    levels = []
    for i in range(len(thin) + 1):
        below = thin[i - 1] if i > 0 else AffineCount()
        above = thin[i] if i < len(thin) else AffineCount()
        levels.append(below + above + combo(2))
        if i < len(thin):
            levels.append(thin[i])
    dom = Domain(tuple(at_least(var(n), 0, f"{n} >= 0") for n in names))
    return SymbolicProfile(tuple(levels), dom, name="random")
