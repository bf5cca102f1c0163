"""Intersection lattices of line arrangements and their invariants.

The lattice of a projective arrangement has three ranks: the whole plane at
the bottom, the lines as atoms, and the intersection points on top.  Points
are stored as sorted tuples of incident line indices, so the structure is
purely combinatorial once built.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence

from .canon import canonical_labeling
from .geometry import Arrangement


class IndexOutOfRange(IndexError):
    pass


class InvalidLattice(ValueError):
    pass


@dataclass(frozen=True)
class IntersectionLattice:
    n_lines: int
    points: tuple[tuple[int, ...], ...]
    line_weights: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        pts = tuple(sorted(tuple(sorted(p)) for p in self.points))
        object.__setattr__(self, "points", pts)
        _check_points(self.n_lines, pts)
        heavy = [0] * self.n_lines
        for p in pts:
            if len(p) >= 3:
                for i in p:
                    heavy[i] += 1
        object.__setattr__(self, "line_weights", tuple(1 - h for h in heavy))

    @property
    def multiplicities(self) -> list[int]:
        return [len(p) for p in self.points]

    @property
    def multiple_points(self) -> list[int]:
        """Indices of points where at least three lines meet."""
        return [k for k, p in enumerate(self.points) if len(p) >= 3]

    def mobius(self) -> dict:
        """Mobius values keyed by ``"bottom"``, ``("line", i)`` and ``("point", k)``."""
        mu: dict = {"bottom": 1}
        for i in range(self.n_lines):
            mu[("line", i)] = -1
        for k, p in enumerate(self.points):
            mu[("point", k)] = len(p) - 1
        return mu

    def points_on_line(self, i: int) -> list[int]:
        return [k for k, p in enumerate(self.points) if i in p]

    def relabel(self, perm: Sequence[int]) -> "IntersectionLattice":
        """Lattice in which old line ``i`` is called ``perm[i]``."""
        return IntersectionLattice(self.n_lines, tuple(tuple(perm[i] for i in p) for p in self.points))


def _check_points(n: int, points) -> None:
    if n < 1:
        raise InvalidLattice("a lattice needs at least one line")
    covered: set[tuple[int, int]] = set()
    for p in points:
        if len(p) < 2 or len(set(p)) != len(p):
            raise InvalidLattice(f"point {p} must carry at least two distinct lines")
        if p[0] < 0 or p[-1] >= n:
            raise InvalidLattice(f"point {p} names a line outside 0..{n - 1}")
        for pair in combinations(p, 2):
            if pair in covered:
                raise InvalidLattice(f"lines {pair} meet in more than one point")
            covered.add(pair)
    if len(covered) != n * (n - 1) // 2:
        raise InvalidLattice("some pair of lines has no intersection point")


def build_lattice(arr: Arrangement) -> IntersectionLattice:
    return IntersectionLattice(arr.n, tuple(inc for _, inc in arr.points))


# ---------------------------------------------------------------- Poincare


@dataclass(frozen=True)
class PoincareData:
    central_poincare: tuple[int, int, int, int]
    projective_poincare: tuple[int, int, int]


def divide_by_one_plus_t(coeffs: Sequence[int]) -> list[int]:
    """Exact quotient of a polynomial (ascending coefficients) by 1 + t."""
    q = []
    carry = 0
    for c in coeffs[:-1]:
        carry = c - carry
        q.append(carry)
    assert coeffs[-1] == q[-1], f"NotDivisible: {list(coeffs)} is not a multiple of 1+t"
    return q


def poincare(lat: IntersectionLattice) -> PoincareData:
    n = lat.n_lines
    b2 = sum(m - 1 for m in lat.multiplicities)
    # the cone lattice has an extra top (the origin of C^3) once the rank is 3;
    # Mobius values must sum to zero, which fixes |mu(top)|
    b3 = b2 - n + 1
    central = (1, n, b2, b3)
    proj = divide_by_one_plus_t(central)
    return PoincareData(central, tuple(proj))


def betti(lat: IntersectionLattice, k: int) -> int:
    if k not in (0, 1, 2, 3):
        raise IndexOutOfRange(f"Betti index {k} outside 0..3")
    return poincare(lat).central_poincare[k]


# ---------------------------------------------------------- classification

TOO_SMALL = "TooSmall"
PENCIL = "Pencil"
NEAR_PENCIL = "NearPencil"
TWO_MULTIPLE_POINTS = "TwoMultiplePoints"
OTHER_EXCEPTIONAL = "OtherExceptional"
NONEXCEPTIONAL = "Nonexceptional"


@dataclass(frozen=True)
class ArrangementClass:
    tag: str
    witness: Optional[int] = None
    p: Optional[int] = None
    q: Optional[int] = None

    def __str__(self):
        if self.tag == TWO_MULTIPLE_POINTS:
            return f"{self.tag} p={self.p} q={self.q}"
        return self.tag

    @property
    def exceptional(self) -> bool:
        return self.tag != NONEXCEPTIONAL


def is_pencil(lat: IntersectionLattice) -> bool:
    if lat.n_lines == 1:
        return True
    return len(lat.points) == 1 and len(lat.points[0]) == lat.n_lines


def classify(lat: IntersectionLattice) -> ArrangementClass:
    n = lat.n_lines
    on_line = [lat.points_on_line(i) for i in range(n)]
    thin = [i for i in range(n) if len(on_line[i]) <= 2]
    witness = thin[0] if thin else None
    if n <= 3:
        return ArrangementClass(TOO_SMALL, witness)
    if is_pencil(lat):
        return ArrangementClass(PENCIL, witness)
    mult = lat.multiplicities
    heavy = lat.multiple_points
    if len(heavy) == 1 and mult[heavy[0]] == n - 1:
        return ArrangementClass(NEAR_PENCIL, witness)
    for h0 in thin:
        if len(on_line[h0]) == 2 and all(mult[k] >= 3 for k in on_line[h0]):
            # every other line meets h0 at one of these two points
            p, q = sorted(mult[k] - 1 for k in on_line[h0])
            return ArrangementClass(TWO_MULTIPLE_POINTS, h0, p, q)
    if thin:
        return ArrangementClass(OTHER_EXCEPTIONAL, witness)
    return ArrangementClass(NONEXCEPTIONAL)


# ------------------------------------------------------------- isomorphism


@dataclass(frozen=True)
class CanonicalForm:
    certificate: bytes
    labels: tuple[int, ...] = field(compare=False, repr=False)


def _incidence_graph(lat: IntersectionLattice):
    n = lat.n_lines
    colors = [(0, w) for w in lat.line_weights] + [(1, len(p)) for p in lat.points]
    adj: list[list[int]] = [[] for _ in colors]
    for k, p in enumerate(lat.points):
        for i in p:
            adj[i].append(n + k)
            adj[n + k].append(i)
    return colors, adj


def canonical_form(lat: IntersectionLattice) -> CanonicalForm:
    """Relabeling-invariant certificate of the weighted line/point incidence graph."""
    cert, labels = canonical_labeling(*_incidence_graph(lat))
    return CanonicalForm(cert, tuple(labels))


def is_lattice_isomorphism(a: IntersectionLattice, b: IntersectionLattice, perm: Sequence[int]) -> bool:
    """Whether line map ``i -> perm[i]`` carries the points of ``a`` exactly onto those of ``b``."""
    if a.n_lines != b.n_lines or sorted(perm) != list(range(a.n_lines)):
        return False
    image = {frozenset(perm[i] for i in p) for p in a.points}
    return image == {frozenset(p) for p in b.points}


def lattice_isomorphic(a: IntersectionLattice, b: IntersectionLattice) -> Optional[tuple[int, ...]]:
    """A line bijection inducing an isomorphism ``a -> b``, or ``None``."""
    if a.n_lines != b.n_lines or len(a.points) != len(b.points):
        return None
    fa, fb = canonical_form(a), canonical_form(b)
    if fa.certificate != fb.certificate:
        return None
    by_label = {lab: v for v, lab in enumerate(fb.labels)}
    perm = tuple(by_label[fa.labels[i]] for i in range(a.n_lines))
    assert is_lattice_isomorphism(a, b, perm), "certificate match without a valid bijection"
    assert all(a.line_weights[i] == b.line_weights[perm[i]] for i in range(a.n_lines))
    return perm
