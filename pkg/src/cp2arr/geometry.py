"""Exact incidence geometry of lines in the complex projective plane.

Lines and points are integer triples up to nonzero scaling.  Every value is
kept in a canonical form (gcd 1, first nonzero entry positive) so that two
objects describe the same projective element iff their tuples are equal.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence


class ArrangementError(ValueError):
    """Base class for invalid arrangement input."""


class ZeroVector(ArrangementError):
    pass


class IdenticalLines(ArrangementError):
    pass


class DuplicateLine(ArrangementError):
    def __init__(self, first: int, second: int):
        self.first = first
        self.second = second
        super().__init__(f"input lines {first} and {second} are the same projective line")


def _normalize(raw: Sequence[int]) -> tuple[int, int, int]:
    if len(raw) != 3:
        raise ValueError(f"expected three coordinates, got {len(raw)}")
    a, b, c = (int(x) for x in raw)
    g = gcd(a, b, c)
    if g == 0:
        raise ZeroVector("the zero triple is not a projective element")
    lead = next(x for x in (a, b, c) if x)
    if lead < 0:
        g = -g
    return (a // g, b // g, c // g)


@dataclass(frozen=True, order=True)
class ProjLine:
    """The line a*x + b*y + c*z = 0."""

    coeffs: tuple[int, int, int]

    def __post_init__(self):
        if _normalize(self.coeffs) != tuple(self.coeffs):
            raise ValueError(f"{self.coeffs} is not normalized; use normalize_line")

    def contains(self, p: ProjPoint) -> bool:
        return dot(self.coeffs, p.coords) == 0

    def __str__(self):
        return "({},{},{})".format(*self.coeffs)


@dataclass(frozen=True, order=True)
class ProjPoint:
    coords: tuple[int, int, int]

    def __post_init__(self):
        if _normalize(self.coords) != tuple(self.coords):
            raise ValueError(f"{self.coords} is not normalized; use normalize_point")

    def __str__(self):
        return "[{}:{}:{}]".format(*self.coords)


def normalize_line(raw: Sequence[int]) -> ProjLine:
    return ProjLine(_normalize(raw))


def normalize_point(raw: Sequence[int]) -> ProjPoint:
    return ProjPoint(_normalize(raw))


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def cross(u: Sequence[int], v: Sequence[int]) -> tuple[int, int, int]:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def intersect(l1: ProjLine, l2: ProjLine) -> ProjPoint:
    """Common point of two distinct lines (normalized cross product)."""
    if l1 == l2:
        raise IdenticalLines(f"{l1} and {l2} are the same line")
    return normalize_point(cross(l1.coeffs, l2.coeffs))


@dataclass(frozen=True)
class Arrangement:
    """Distinct lines together with every intersection point.

    ``points`` holds ``(point, incident line indices)`` pairs sorted by the
    incidence tuple; each unordered pair of lines appears in exactly one of them.
    """

    lines: tuple[ProjLine, ...]
    points: tuple[tuple[ProjPoint, tuple[int, ...]], ...]

    @property
    def n(self) -> int:
        return len(self.lines)

    def multiplicities(self) -> list[int]:
        return [len(inc) for _, inc in self.points]

    def raw(self) -> list[tuple[int, int, int]]:
        return [l.coeffs for l in self.lines]


def build_arrangement(raw_lines: Iterable[Sequence[int]]) -> Arrangement:
    lines = [normalize_line(r) for r in raw_lines]
    if not lines:
        raise ArrangementError("an arrangement needs at least one line")
    seen: dict[ProjLine, int] = {}
    for i, l in enumerate(lines):
        if l in seen:
            raise DuplicateLine(seen[l], i)
        seen[l] = i

    groups: dict[ProjPoint, set[int]] = {}
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            p = intersect(lines[i], lines[j])
            groups.setdefault(p, set()).update((i, j))
    points = sorted(((p, tuple(sorted(inc))) for p, inc in groups.items()), key=lambda t: (t[1], t[0]))
    return Arrangement(tuple(lines), tuple(points))


def _clear_denominators(matrix: Sequence[Sequence]) -> list[list[int]]:
    rows = [[Fraction(x) for x in row] for row in matrix]
    if len(rows) != 3 or any(len(r) != 3 for r in rows):
        raise ValueError("expected a 3x3 matrix")
    m = lcm(*(x.denominator for row in rows for x in row))
    return [[int(x * m) for x in row] for row in rows]


def det3(m: Sequence[Sequence[int]]) -> int:
    return dot(m[0], cross(m[1], m[2]))


def adjugate3(m: Sequence[Sequence[int]]) -> list[list[int]]:
    # columns of the adjugate are cross products of rows
    c0 = cross(m[1], m[2])
    c1 = cross(m[2], m[0])
    c2 = cross(m[0], m[1])
    return [[c0[i], c1[i], c2[i]] for i in range(3)]


def transform_line(line: ProjLine, matrix: Sequence[Sequence]) -> ProjLine:
    """Image of ``line`` when points move by p -> matrix @ p.

    A row vector l with l.p = 0 goes to l @ matrix^-1, which is projectively
    l @ adj(matrix).  Rational matrices are scaled to integers first.
    """
    m = _clear_denominators(matrix)
    if det3(m) == 0:
        raise ValueError("transformation matrix is singular")
    adj = adjugate3(m)
    l = line.coeffs
    return normalize_line([sum(l[k] * adj[k][j] for k in range(3)) for j in range(3)])


def transform_point(point: ProjPoint, matrix: Sequence[Sequence]) -> ProjPoint:
    m = _clear_denominators(matrix)
    if det3(m) == 0:
        raise ValueError("transformation matrix is singular")
    return normalize_point([dot(row, point.coords) for row in m])


def transform_arrangement(arr: Arrangement, matrix: Sequence[Sequence]) -> Arrangement:
    return build_arrangement([transform_line(l, matrix).coeffs for l in arr.lines])


def permute_arrangement(arr: Arrangement, perm: Sequence[int]) -> Arrangement:
    """New arrangement whose line ``perm[i]`` is the old line ``i``."""
    out = [None] * arr.n
    for i, j in enumerate(perm):
        out[j] = arr.lines[i].coeffs
    return build_arrangement(out)
