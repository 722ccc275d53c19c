"""Width, bridge number and the thick/thin decomposition of a presentation."""

from dataclasses import dataclass

from .errors import OddResult, ValidationError
from .model import MAX, MIN, profile_of


@dataclass(frozen=True)
class Decomposition:
    """Strand counts at thick levels (``thick``) and thin levels (``thin``).

    Thick and thin levels alternate, starting and ending with a thick one.
    """

    thick: tuple
    thin: tuple

    def __post_init__(self):
        object.__setattr__(self, "thick", tuple(self.thick))
        object.__setattr__(self, "thin", tuple(self.thin))
        if len(self.thick) != len(self.thin) + 1:
            raise ValidationError(
                f"need one more thick level than thin, got {len(self.thick)} and {len(self.thin)}"
            )
        for l, b in enumerate(self.thin):
            if not b < min(self.thick[l], self.thick[l + 1]):
                raise ValidationError(f"thin level {l} ({b}) is not below its neighbours")

    def levels(self):
        """Thick and thin counts interleaved bottom to top."""
        out = [self.thick[0]]
        for b, a in zip(self.thin, self.thick[1:]):
            out += [b, a]
        return out


def width_direct(p):
    """Sum of strand counts over the gaps between consecutive critical levels."""
    counts = profile_of(p).counts
    return sum(counts[:-1])


def decompose(p):
    prof = profile_of(p)
    extrema, counts = prof.extrema, prof.counts
    thick, thin = [], []
    for i in range(len(extrema) - 1):
        pair = (extrema[i], extrema[i + 1])
        if pair == (MIN, MAX):
            thick.append(counts[i])
        elif pair == (MAX, MIN):
            thin.append(counts[i])
    return Decomposition(thick, thin)


def width_lemma(d):
    """Width from a decomposition: half of (sum of thick squares - sum of thin squares)."""
    twice = sum(a * a for a in d.thick) - sum(b * b for b in d.thin)
    if twice % 2:
        raise OddResult(f"sum of squares is odd ({twice}) for {d}")
    return twice // 2


def bridge_number(p):
    return sum(1 for x in profile_of(p).extrema if x is MAX)
