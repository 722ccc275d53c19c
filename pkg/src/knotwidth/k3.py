"""Speculative reconstructions of the 3-bridge family and two rival presentations.

The diagrams are only known through their labels, so every profile here is
a *candidate* and carries ``speculative=True``.  The model:

* six braid boxes, lower ``L1 L2 L3`` and upper ``U1 U2 U3``; box ``i`` has
  ``r_i`` strands, closed off by ``r_i / 2`` minima below a lower box and
  ``r_i / 2`` maxima above an upper box;
* parallel bundles run from lower to upper boxes::

      L1 -> U3  (s1)     L1 -> U2  (s2)
      L2 -> U1  (s2)     L2 -> U3  (s3)
      L3 -> U1  (s3)     L3 -> U2  (2)

  The last bundle is the unmarked single strand together with the strand
  that closes it up, so it contributes 2 to every level it crosses.

A presentation is an order in which a horizontal sweep meets the six boxes.
Meeting a box sends the count from the bundles currently alive up to
``alive + r_i`` (a thick level) and then down to the bundles alive after the
box (a thin level).  The shipped orders:

    fig5   L2 L1 U3 L3 U1 U2
    fig6   L1 L2 U3 L3 U1 U2     (lower boxes 1 and 2 met in the other order)
    fig7   L2 L1 L3 U3 U1 U2     (box 3 met while every bundle is alive)
"""

from .errors import DomainViolation
from .symbolic import AffineCount, Domain, SymbolicProfile, at_least, var

PARAMS = ("r1", "r2", "r3", "s1", "s2", "s3")
SINGLE_STRAND = 2

r1, r2, r3, s1, s2, s3 = (var(n) for n in PARAMS)
BOX_SIZE = {"L1": r1, "L2": r2, "L3": r3, "U1": r1, "U2": r2, "U3": r3}
BUNDLES = (
    ("L1", "U3", s1),
    ("L1", "U2", s2),
    ("L2", "U1", s2),
    ("L2", "U3", s3),
    ("L3", "U1", s3),
    ("L3", "U2", AffineCount(SINGLE_STRAND)),
)

SCHEDULES = {
    "fig5": ("L2", "L1", "U3", "L3", "U1", "U2"),
    "fig6": ("L1", "L2", "U3", "L3", "U1", "U2"),
    "fig7": ("L2", "L1", "L3", "U3", "U1", "U2"),
}
VARIANTS = tuple(SCHEDULES)


def _total(bundles):
    return sum((b[2] for b in bundles), AffineCount())


def box_degree(box):
    """Strands a box exchanges with bundles (outgoing for lower, incoming for upper)."""
    end = 0 if box[0] == "L" else 1
    return _total(b for b in BUNDLES if b[end] == box)


def k3_domain():
    """Every box strictly wider than the bundles it feeds or absorbs; all counts even."""
    cons = [at_least(var(n), 2, f"{n} >= 2") for n in ("s1", "s2", "s3")]
    for box, size in BOX_SIZE.items():
        need = box_degree(box) + 2
        cons.append(at_least(size, need, f"{size} >= {need} ({box})"))
    return Domain(tuple(cons), even=frozenset(PARAMS))


def schedule_levels(order):
    """Alternating thick/thin affine counts met by a sweep visiting boxes in ``order``."""
    seen = set()
    levels = []
    for box in order:
        if box[0] == "U":
            missing = [b[0] for b in BUNDLES if b[1] == box and b[0] not in seen]
            if missing:
                raise ValueError(f"{box} met before its source boxes {missing}")
        alive = _total(b for b in BUNDLES if b[0] in seen and b[1] not in seen)
        if box[0] == "L":
            levels += [alive + BOX_SIZE[box], alive + box_degree(box)]
        else:
            rest = alive - box_degree(box)
            levels += [rest + BOX_SIZE[box], rest]
        seen.add(box)
    return tuple(levels[:-1])


def family_k3_candidate(variant, **params):
    """Candidate profile for ``variant`` in ``{"fig5", "fig6", "fig7"}``.

    With no parameters the :class:`SymbolicProfile` is returned; with all six
    (``r1 .. s3``) the concrete :class:`~knotwidth.model.Profile`.
    """
    if variant not in SCHEDULES:
        raise ValueError(f"unknown K3 variant {variant!r}; choose from {', '.join(VARIANTS)}")
    order = SCHEDULES[variant]
    sp = SymbolicProfile(
        schedule_levels(order),
        k3_domain(),
        name=f"k3-{variant}",
        speculative=True,
        note="box order " + " ".join(order),
    )
    if not params:
        return sp
    missing = [n for n in PARAMS if n not in params]
    if missing:
        raise DomainViolation(f"missing parameters {', '.join(missing)}")
    return sp.instantiate({n: int(params[n]) for n in PARAMS})


def candidates():
    return {v: family_k3_candidate(v) for v in VARIANTS}
