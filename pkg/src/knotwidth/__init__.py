"""Width of knots from Morse presentations.

A presentation is a bottom-to-top list of events (minima, maxima and
crossings).  The package computes width two ways, builds the K1 family and
its relatives, handles widths symbolically, and searches for thinner
presentations by local moves.
"""

from .constructions import (
    BraidWord,
    FourPlat,
    connect_sum,
    family_fig4,
    family_k1,
    fig4_presentation,
    fig4_symbolic,
    k1_symbolic,
    realize_profile,
    satellite_sum_2bridge,
    trefoil,
    unknot,
)
from .dsl import parse, serialize
from .errors import (
    DomainViolation,
    DslSyntaxError,
    EmptyDomain,
    IllegalMove,
    IllegalPosition,
    KnotWidthError,
    MultiComponent,
    OddResult,
    ParityError,
    UnbalancedCounts,
    ValidationError,
)
from .k3 import family_k3_candidate
from .model import MAX, MIN, Event, Kind, Presentation, Profile, cap, cross, cup, profile_of, trace_components, validate
from .search import Move, apply_move, legal_moves, search_min_width
from .symbolic import AffineCount, Poly, SymbolicProfile, coefficient_check, compare, scan_claims_k3, symbolic_width
from .width import Decomposition, bridge_number, decompose, width_direct, width_lemma
