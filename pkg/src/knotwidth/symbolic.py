"""Width as an exact polynomial in named integer parameters.

Strand counts at thick and thin levels are affine in the parameters, so the
width ``(sum thick^2 - sum thin^2) / 2`` is a quadratic polynomial.  All
arithmetic is on ``int`` and ``fractions.Fraction``; nothing here touches
floating point.
"""

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainViolation, EmptyDomain, ParityError, ValidationError
from .model import MAX, MIN, Profile


def _mono(items):
    """Canonical monomial key: sorted ``(name, exponent)`` pairs."""
    c = Counter()
    for name, exp in items:
        c[name] += exp
    return tuple(sorted((n, e) for n, e in c.items() if e))


class Poly:
    """Sparse multivariate polynomial with exact rational coefficients."""

    __slots__ = ("terms", "_scaled")

    def __init__(self, terms=None):
        self._scaled = None
        out = {}
        for mono, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff:
                out[_mono(mono)] = out.get(_mono(mono), 0) + coeff
        self.terms = {m: c for m, c in out.items() if c}

    @classmethod
    def const(cls, c):
        return cls({(): c})

    @classmethod
    def var(cls, name):
        return cls({((name, 1),): 1})

    @staticmethod
    def _lift(x):
        return x if isinstance(x, Poly) else Poly.const(x)

    def __add__(self, other):
        other = self._lift(other)
        t = dict(self.terms)
        for m, c in other.terms.items():
            t[m] = t.get(m, 0) + c
        return Poly(t)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + -self._lift(other)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        t = {}
        for (m1, c1), (m2, c2) in itertools.product(self.terms.items(), other.terms.items()):
            m = _mono(m1 + m2)
            t[m] = t.get(m, 0) + c1 * c2
        return Poly(t)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = Poly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, Poly):
            try:
                other = Poly.const(other)
            except TypeError:
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    @property
    def variables(self):
        return sorted({n for m in self.terms for n, _ in m})

    @property
    def degree(self):
        return max((sum(e for _, e in m) for m in self.terms), default=0)

    def coefficient(self, *mono):
        """Coefficient of a monomial given as ``("r", 2)`` pairs or bare names."""
        items = [(x, 1) if isinstance(x, str) else x for x in mono]
        return self.terms.get(_mono(items), Fraction(0))

    def evaluate(self, point):
        if self._scaled is None:
            den = math.lcm(*(c.denominator for c in self.terms.values())) if self.terms else 1
            self._scaled = den, [(m, int(c * den)) for m, c in self.terms.items()]
        den, terms = self._scaled
        total = 0
        for m, c in terms:
            for name, e in m:
                c *= point[name] ** e
            total += c
        if total % den == 0:
            return total // den
        return Fraction(total, den)

    def is_integral(self):
        return all(c.denominator == 1 for c in self.terms.values())

    def monomials(self):
        """Single-term polynomials, highest degree first, then by name."""
        keys = sorted(self.terms, key=lambda m: (-sum(e for _, e in m), m))
        return [Poly({m: self.terms[m]}) for m in keys]

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for t in self.monomials():
            (m, c), = t.terms.items()
            body = "*".join(n if e == 1 else f"{n}^{e}" for n, e in m)
            mag = abs(c)
            if not body:
                s = str(mag)
            elif mag == 1:
                s = body
            else:
                s = f"{mag}*{body}"
            parts.append(("-" if c < 0 else "+", s))
        sign, s = parts[0]
        out = ("-" if sign == "-" else "") + s
        for sign, s in parts[1:]:
            out += f" {sign} {s}"
        return out

    def __repr__(self):
        return f"Poly({self})"


@dataclass(frozen=True)
class AffineCount:
    """``constant + sum coeffs[name] * name`` with integer coefficients."""

    constant: int = 0
    coeffs: tuple = ()

    def __post_init__(self):
        items = dict(self.coeffs) if not isinstance(self.coeffs, dict) else self.coeffs
        object.__setattr__(self, "coeffs", tuple(sorted((n, int(c)) for n, c in items.items() if c)))
        object.__setattr__(self, "constant", int(self.constant))

    @classmethod
    def var(cls, name, coeff=1):
        return cls(0, {name: coeff})

    @staticmethod
    def _lift(x):
        return x if isinstance(x, AffineCount) else AffineCount(x)

    def __add__(self, other):
        other = self._lift(other)
        c = dict(self.coeffs)
        for n, k in other.coeffs:
            c[n] = c.get(n, 0) + k
        return AffineCount(self.constant + other.constant, c)

    __radd__ = __add__

    def __neg__(self):
        return AffineCount(-self.constant, {n: -k for n, k in self.coeffs})

    def __sub__(self, other):
        return self + -self._lift(other)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return AffineCount(self.constant * k, {n: c * k for n, c in self.coeffs})

    __rmul__ = __mul__

    @property
    def params(self):
        return [n for n, _ in self.coeffs]

    def evaluate(self, point):
        return self.constant + sum(c * point[n] for n, c in self.coeffs)

    def poly(self):
        return Poly({(): self.constant, **{((n, 1),): c for n, c in self.coeffs}})

    def even_for(self, even_params=()):
        """Even at every integer point where ``even_params`` take even values."""
        return self.constant % 2 == 0 and all(c % 2 == 0 or n in even_params for n, c in self.coeffs)

    def __str__(self):
        return str(self.poly())


def var(name):
    return AffineCount.var(name)


@dataclass(frozen=True)
class Constraint:
    """``expr >= 0`` (or ``expr == 0`` when ``equality``), named for diagnostics."""

    expr: AffineCount
    label: str
    equality: bool = False

    def holds(self, point):
        v = self.expr.evaluate(point)
        return v == 0 if self.equality else v >= 0


def at_least(lhs, rhs, label=None):
    lhs, rhs = AffineCount._lift(lhs), AffineCount._lift(rhs)
    return Constraint(lhs - rhs, label or f"{lhs} >= {rhs}")


def equal(lhs, rhs, label=None):
    lhs, rhs = AffineCount._lift(lhs), AffineCount._lift(rhs)
    return Constraint(lhs - rhs, label or f"{lhs} == {rhs}", equality=True)


@dataclass(frozen=True)
class Domain:
    """A conjunction of linear integer constraints, plus parameters forced even."""

    constraints: tuple = ()
    even: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "constraints", tuple(self.constraints))
        object.__setattr__(self, "even", frozenset(self.even))

    def violation(self, point):
        for n in sorted(self.even):
            if n in point and point[n] % 2:
                return f"{n} even"
        for c in self.constraints:
            if not c.holds(point):
                return c.label
        return None

    def contains(self, point):
        return self.violation(point) is None

    def check(self, point):
        v = self.violation(point)
        if v is not None:
            raise DomainViolation(v, dict(point))

    def __and__(self, other):
        return Domain(self.constraints + other.constraints, self.even | other.even)


@dataclass(frozen=True)
class SymbolicProfile:
    """An extrema profile described by affine counts at its thick and thin levels.

    ``levels`` alternates thick, thin, thick, ..., thick, bottom to top.  The
    profile climbs from 0 to each thick count with minima and descends to
    each thin count (finally to 0) with maxima.
    """

    levels: tuple
    domain: Domain = field(default_factory=Domain)
    name: str = ""
    speculative: bool = False
    note: str = ""

    def __post_init__(self):
        levels = tuple(AffineCount._lift(x) for x in self.levels)
        object.__setattr__(self, "levels", levels)
        if len(levels) % 2 == 0:
            raise ValidationError("levels must alternate thick/thin and start and end thick")
        for x in levels:
            if not x.even_for(self.domain.even):
                raise ParityError(f"level count {x} can be odd on the domain")

    @property
    def thick(self):
        return self.levels[0::2]

    @property
    def thin(self):
        return self.levels[1::2]

    @property
    def params(self):
        return sorted({n for x in self.levels for n in x.params})

    def level_values(self, point):
        self.domain.check(point)
        vals = [x.evaluate(point) for x in self.levels]
        for i, v in enumerate(vals):
            if v < 2 or v % 2:
                raise DomainViolation(f"level {i} = {self.levels[i]} must be even and >= 2", dict(point))
        for i in range(1, len(vals), 2):
            if not vals[i] < min(vals[i - 1], vals[i + 1]):
                raise DomainViolation(f"thin level {self.levels[i]} must lie below its neighbours", dict(point))
        return vals

    def instantiate(self, point):
        vals = self.level_values(point)
        runs = []
        prev = 0
        for i, v in enumerate(vals + [0]):
            kind = MIN if i % 2 == 0 else MAX
            runs.append((kind, abs(v - prev) // 2))
            prev = v
        return Profile.from_runs(*runs)


def symbolic_width(sp):
    """Exact width polynomial of a symbolic profile.

    Raises :class:`ParityError` when twice the width can be odd at some point
    of the parameter lattice (parity depends only on parameter residues mod 2).
    """
    twice = Poly()
    for a in sp.thick:
        twice = twice + a.poly() ** 2
    for b in sp.thin:
        twice = twice - b.poly() ** 2
    free = [n for n in twice.variables if n not in sp.domain.even]
    for bits in itertools.product((0, 1), repeat=len(free)):
        point = dict.fromkeys(twice.variables, 0)
        point.update(zip(free, bits))
        if twice.evaluate(point) % 2:
            raise ParityError(f"2w = {twice} is odd at parity class {point}")
    return twice * Fraction(1, 2)


def coefficient_check(w, param):
    """Monomials of ``w`` involving ``param``; an empty list certifies independence."""
    return [t for t in w.monomials() if any(n == param for m in t.terms for n, _ in m)]


LESS = "AlwaysLess"
GREATER = "AlwaysGreater"
EQUAL = "AlwaysEqual"
MIXED = "Mixed"


def grid_points(grid, domain=None):
    """Deterministic enumeration of the grid points that satisfy ``domain``."""
    names = sorted(grid)
    for values in itertools.product(*(sorted(set(grid[n])) for n in names)):
        point = dict(zip(names, values))
        if domain is None or domain.contains(point):
            yield point


@dataclass
class Comparison:
    difference: Poly
    verdict: str
    witnesses: dict
    points: int

    def __str__(self):
        s = f"{self.verdict}\tdiff\t{self.difference}\tpoints\t{self.points}"
        for sign in sorted(self.witnesses):
            s += f"\t{sign}\t{self.witnesses[sign]}"
        return s


def compare(w1, w2, domain, grid):
    """Sign of ``w1 - w2`` over a bounded grid within ``domain``.

    The verdict is ``AlwaysLess`` (w1 thinner everywhere), ``AlwaysGreater``,
    ``AlwaysEqual`` or ``Mixed``; ``witnesses`` maps each observed sign
    (``"<"``, ``"="``, ``">"``) to the first grid point showing it.
    """
    diff = w1 - w2
    witnesses = {}
    n = 0
    for point in grid_points(grid, domain):
        n += 1
        v = diff.evaluate(point)
        sign = "<" if v < 0 else ">" if v > 0 else "="
        witnesses.setdefault(sign, point)
    if n == 0:
        raise EmptyDomain("no grid point satisfies the domain")
    if len(witnesses) > 1:
        verdict = MIXED
    else:
        verdict = {"<": LESS, ">": GREATER, "=": EQUAL}[next(iter(witnesses))]
    return Comparison(diff, verdict, witnesses, n)


def bullet_constraints():
    """The parameter choices under which the first 3-bridge presentation should win.

    ``r1`` only minimally larger than ``s1 + s2`` (the next even value),
    ``s1 > s3``, and ``r2 > s2 + s3``; "sufficiently large" is left to the grid.
    """
    r1, r2, s1, s2, s3 = (var(n) for n in ("r1", "r2", "s1", "s2", "s3"))
    return Domain(
        (
            equal(r1, s1 + s2 + 2, "r1 = s1 + s2 + 2"),
            at_least(s1, s3 + 1, "s1 > s3"),
            at_least(r2, s2 + s3 + 1, "r2 > s2 + s3"),
        )
    )


def default_k3_grid():
    evens = lambda lo, hi: range(lo, hi + 1, 2)
    return {
        "s1": evens(2, 8),
        "s2": evens(2, 8),
        "s3": evens(2, 8),
        "r1": evens(4, 20),
        # r2 up to s2 + s3 + 40 for the largest s2, s3
        "r2": evens(4, 56),
        "r3": (20, 24, 32, 40),
    }


@dataclass
class K3Report:
    first_vs_second: Comparison
    unconstrained: Comparison
    r3_terms: list
    growth_points: int
    growth_increasing: int
    speculative: bool = True

    @property
    def second_wider(self):
        return self.first_vs_second.verdict == LESS

    @property
    def fig7_increasing(self):
        return self.growth_points > 0 and self.growth_points == self.growth_increasing

    def lines(self):
        fvs = self.first_vs_second
        out = [
            f"speculative\t{'yes' if self.speculative else 'no'}",
            f"fig5_minus_fig6\t{fvs.difference}",
            f"r3_terms\t{', '.join(map(str, self.r3_terms)) or 'none'}",
            f"bullet_region\t{fvs.verdict}\tpoints\t{fvs.points}",
            f"fig6_wider_than_fig5\t{'yes' if self.second_wider else 'no'}",
            f"without_bullets\t{self.unconstrained.verdict}\tpoints\t{self.unconstrained.points}",
        ]
        for sign in sorted(self.unconstrained.witnesses):
            point = self.unconstrained.witnesses[sign]
            out.append(f"witness\t{sign}\t" + ",".join(f"{k}={v}" for k, v in point.items()))
        out.append(
            f"fig7_increasing_in_r3\t{'yes' if self.fig7_increasing else 'no'}"
            f"\t{self.growth_increasing}/{self.growth_points}"
        )
        return out


def scan_claims_k3(candidates, grid=None):
    """Grid report on the fig5/fig6 comparison and fig7 growth in ``r3``.

    ``candidates`` maps ``"fig5"``, ``"fig6"``, ``"fig7"`` to symbolic profiles.
    """
    grid = default_k3_grid() if grid is None else grid
    if not grid or any(len(list(v)) == 0 for v in grid.values()):
        raise EmptyDomain("empty grid")
    grid = {k: sorted(set(v)) for k, v in grid.items()}
    f5, f6, f7 = (candidates[k] for k in ("fig5", "fig6", "fig7"))
    w5, w6, w7 = (symbolic_width(sp) for sp in (f5, f6, f7))
    base = f5.domain & f6.domain
    region = compare(w5, w6, base & bullet_constraints(), grid)
    free = compare(w5, w6, base, grid)
    r3_terms = coefficient_check(w5 - w6, "r3")

    rest = {k: v for k, v in grid.items() if k != "r3"}
    total = increasing = 0
    for point in grid_points(rest):
        ws = []
        for r3 in grid["r3"]:
            full = dict(point, r3=r3)
            if f7.domain.contains(full):
                ws.append(w7.evaluate(full))
        if len(ws) >= 2:
            total += 1
            increasing += all(a < b for a, b in zip(ws, ws[1:]))
    if total == 0:
        raise EmptyDomain("no grid line along r3 lies in the fig7 domain")
    return K3Report(region, free, r3_terms, total, increasing, any(sp.speculative for sp in (f5, f6, f7)))
