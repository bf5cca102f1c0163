"""Intersection lattices, Betti numbers and blow-up graphs of line arrangements in CP^2."""
from .blowup import (
    NotBlowupShaped,
    WeightedIncidenceGraph,
    blow_down,
    blow_up,
    graph_certificate,
    theorem5_check,
)
from .compare import ComparisonVerdict, compare, self_witness
from .geometry import (
    Arrangement,
    DuplicateLine,
    IdenticalLines,
    ProjLine,
    ProjPoint,
    ZeroVector,
    build_arrangement,
    intersect,
    normalize_line,
)
from .lattice import (
    ArrangementClass,
    IntersectionLattice,
    PoincareData,
    betti,
    build_lattice,
    canonical_form,
    classify,
    is_pencil,
    lattice_isomorphic,
    poincare,
)

__version__ = "0.1.0"
