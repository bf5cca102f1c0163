import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import arrangements
from cp2arr.corpus import random_matrix, random_permutation
from cp2arr.geometry import (
    DuplicateLine,
    IdenticalLines,
    ProjLine,
    ZeroVector,
    build_arrangement,
    dot,
    intersect,
    normalize_line,
    permute_arrangement,
    transform_arrangement,
    transform_line,
    transform_point,
)

triples = st.tuples(*[st.integers(-50, 50)] * 3).filter(lambda t: t != (0, 0, 0))


@pytest.mark.parametrize("raw, expected", [
    ((2, -4, 6), (1, -2, 3)),
    ((0, -3, 3), (0, 1, -1)),
    ((1, 0, 0), (1, 0, 0)),
    ((0, 0, -7), (0, 0, 1)),
])
def test_normalize_line(raw, expected):
    assert normalize_line(raw).coeffs == expected


def test_zero_vector():
    with pytest.raises(ZeroVector):
        normalize_line((0, 0, 0))


def test_unnormalized_construction_rejected():
    with pytest.raises(ValueError):
        ProjLine((2, 0, 0))


@given(triples, st.integers(-20, 20).filter(bool))
def test_normalize_scale_invariant(v, k):
    assert normalize_line([k * x for x in v]) == normalize_line(v)


@pytest.mark.parametrize("l1, l2, point", [
    ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
    ((1, 0, 0), (1, 1, 1), (0, 1, -1)),
    ((1, 1, 0), (1, -1, 0), (0, 0, 1)),
])
def test_intersect(l1, l2, point):
    assert intersect(normalize_line(l1), normalize_line(l2)).coords == point


def test_intersect_identical():
    with pytest.raises(IdenticalLines):
        intersect(normalize_line((1, 2, 3)), normalize_line((-2, -4, -6)))


@given(triples, triples)
def test_intersect_symmetric_and_incident(a, b):
    l1, l2 = normalize_line(a), normalize_line(b)
    if l1 == l2:
        return
    p = intersect(l1, l2)
    assert p == intersect(l2, l1)
    assert dot(l1.coeffs, p.coords) == 0 and dot(l2.coeffs, p.coords) == 0


def test_build_pencil():
    arr = build_arrangement([(1, 0, 0), (0, 1, 0), (1, 1, 0)])
    assert [(p.coords, inc) for p, inc in arr.points] == [((0, 0, 1), (0, 1, 2))]


def test_build_triangle():
    arr = build_arrangement([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert arr.multiplicities() == [2, 2, 2]


def test_build_near_pencil():
    arr = build_arrangement([(1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)])
    pts = {p.coords: inc for p, inc in arr.points}
    assert pts == {(0, 0, 1): (0, 1, 2), (0, 1, 0): (0, 3), (1, 0, 0): (1, 3), (1, -1, 0): (2, 3)}


def test_duplicate_line_reports_indices():
    with pytest.raises(DuplicateLine) as exc:
        build_arrangement([(1, 2, 3), (0, 1, 0), (-2, -4, -6)])
    assert (exc.value.first, exc.value.second) == (0, 2)


@settings(max_examples=60)
@given(arrangements(min_n=2))
def test_pair_count(raw):
    arr = build_arrangement(raw)
    n = arr.n
    assert sum(m * (m - 1) // 2 for m in arr.multiplicities()) == n * (n - 1) // 2
    assert all(m >= 2 for m in arr.multiplicities())


@settings(max_examples=40)
@given(arrangements(min_n=2), st.randoms(use_true_random=False))
def test_permutation_relabels(raw, rnd):
    arr = build_arrangement(raw)
    perm = random_permutation(rnd, arr.n)
    moved = permute_arrangement(arr, perm)
    expect = sorted(tuple(sorted(perm[i] for i in inc)) for _, inc in arr.points)
    assert sorted(inc for _, inc in moved.points) == expect


@settings(max_examples=40)
@given(arrangements(min_n=2), st.integers(0, 10**6))
def test_projective_transform_preserves_incidences(raw, seed):
    arr = build_arrangement(raw)
    m = random_matrix(random.Random(seed))
    moved = transform_arrangement(arr, m)
    assert [inc for _, inc in moved.points] == [inc for _, inc in arr.points]
    for line in arr.lines:
        for p, inc in arr.points:
            assert transform_line(line, m).contains(transform_point(p, m)) == line.contains(p)


def test_rational_matrix_scaling():
    m = [[Fraction(1, 2), 0, 0], [0, Fraction(1, 3), 0], [0, 0, 1]]
    # x = 0 stays x = 0; x + y + z = 0 becomes 2x + 3y + z = 0
    assert transform_line(normalize_line((1, 0, 0)), m).coeffs == (1, 0, 0)
    assert transform_line(normalize_line((1, 1, 1)), m).coeffs == (2, 3, 1)


def test_singular_matrix():
    with pytest.raises(ValueError):
        transform_line(normalize_line((1, 0, 0)), [[1, 0, 0], [1, 0, 0], [0, 0, 1]])
