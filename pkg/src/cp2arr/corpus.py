"""Generators for the standard families of arrangements."""
from __future__ import annotations

import random
from fractions import Fraction

from .geometry import (
    Arrangement,
    build_arrangement,
    det3,
    normalize_line,
    permute_arrangement,
    transform_arrangement,
)

Triple = tuple[int, int, int]


def pencil(n: int) -> list[Triple]:
    """n lines through [0:0:1]: x, y, x+y, x+2y, ..."""
    if n < 1:
        raise ValueError("pencil needs n >= 1")
    lines = [(1, 0, 0), (0, 1, 0)] + [(1, k, 0) for k in range(1, n - 1)]
    return lines[:n]


def near_pencil(n: int) -> list[Triple]:
    """Pencil of n-1 lines plus the line z = 0."""
    if n < 3:
        raise ValueError("near-pencil needs n >= 3")
    return pencil(n - 1) + [(0, 0, 1)]


def generic(n: int) -> list[Triple]:
    """Lines a + k*b + k^2*c = 0, k = 0..n-1; no three concurrent (Vandermonde)."""
    if n < 1:
        raise ValueError("generic needs n >= 1")
    return [(1, k, k * k) for k in range(n)]


def case_d(p: int, q: int) -> list[Triple]:
    """H0 = {x=0}, p lines through [0:0:1] and q lines through [0:1:0].

    The remaining crossings are the points [1:i:j], all double.
    """
    if p < 1 or q < 1:
        raise ValueError("case_d needs p, q >= 1")
    return [(1, 0, 0)] + [(i, -1, 0) for i in range(1, p + 1)] + [(j, 0, -1) for j in range(1, q + 1)]


def random_generic(rng: random.Random, n: int, bound: int = 9) -> list[Triple]:
    while True:
        lines = random_lines(rng, n, bound)
        arr = build_arrangement(lines)
        if all(len(inc) == 2 for _, inc in arr.points):
            return lines


def random_lines(rng: random.Random, n: int, bound: int = 9) -> list[Triple]:
    """n distinct projective lines with coefficients in [-bound, bound]."""
    seen = set()
    out: list[Triple] = []
    while len(out) < n:
        raw = tuple(rng.randint(-bound, bound) for _ in range(3))
        if raw == (0, 0, 0):
            continue
        key = normalize_line(raw)
        if key in seen:
            continue
        seen.add(key)
        out.append(raw)
    return out


def random_arrangement(rng: random.Random, n: int, bound: int = 9) -> Arrangement:
    return build_arrangement(random_lines(rng, n, bound))


def random_matrix(rng: random.Random, bound: int = 5) -> list[list[Fraction]]:
    """Random invertible 3x3 matrix with small rational entries."""
    while True:
        m = [[Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(3)] for _ in range(3)]
        scale = 1
        for row in m:
            for x in row:
                scale = scale * x.denominator
        if det3([[int(x * scale) for x in row] for row in m]) != 0:
            return m


def random_permutation(rng: random.Random, n: int) -> list[int]:
    perm = list(range(n))
    rng.shuffle(perm)
    return perm


def standard_corpus() -> dict[str, list[Triple]]:
    """Named corpus: pencils, near-pencils, generic and Case-d families."""
    corpus: dict[str, list[Triple]] = {}
    for n in range(3, 9):
        corpus[f"pencil{n}"] = pencil(n)
    for n in range(4, 9):
        corpus[f"nearpencil{n}"] = near_pencil(n)
    for n in range(3, 9):
        corpus[f"generic{n}"] = generic(n)
    for p in range(2, 5):
        for q in range(p, 5):
            corpus[f"cased_{p}{q}"] = case_d(p, q)
    for p, q in [(3, 2), (4, 2), (4, 3)]:
        corpus[f"cased_{p}{q}"] = case_d(p, q)
    # recoordinatized copies give nontrivial isomorphic pairs
    rng = random.Random(1993)
    for name in ["pencil5", "nearpencil6", "generic5", "cased_23", "cased_33", "generic7"]:
        arr = build_arrangement(corpus[name])
        arr = transform_arrangement(arr, random_matrix(rng))
        arr = permute_arrangement(arr, random_permutation(rng, arr.n))
        corpus[f"{name}_moved"] = arr.raw()
    return corpus


