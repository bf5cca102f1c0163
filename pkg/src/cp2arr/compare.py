"""Decide lattice isomorphism of two arrangements, stage by stage.

The stages follow the case analysis for exceptional and nonexceptional
arrangements: first Betti number, the pencil test on the third Betti number,
the arrangement class, the Poincare polynomial, and finally the weighted
canonical form.  The first stage that separates the inputs decides; the
trace lists every stage that was reached.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from .corpus import random_matrix, random_permutation
from .geometry import Arrangement, permute_arrangement, transform_arrangement
from .lattice import (
    build_lattice,
    classify,
    is_lattice_isomorphism,
    lattice_isomorphic,
    poincare,
)

ISOMORPHIC = "Isomorphic"
DISTINCT = "Distinct"


@dataclass(frozen=True)
class Reason:
    kind: str  # B1Mismatch | B3PencilTest | ClassMismatch | PoincareMismatch | CertificateMismatch
    left: object = None
    right: object = None

    def __str__(self):
        if self.kind == "CertificateMismatch":
            return self.kind
        return f"{self.kind}({self.left}, {self.right})"

    def to_json(self) -> dict:
        return {"kind": self.kind, "left": _plain(self.left), "right": _plain(self.right)}


def _plain(x):
    if x is None or isinstance(x, int):
        return x
    if isinstance(x, tuple):
        return list(x)
    return str(x)


@dataclass(frozen=True)
class ComparisonVerdict:
    outcome: str
    bijection: Optional[tuple[int, ...]] = None
    reason: Optional[Reason] = None
    trace: tuple[str, ...] = field(default=())

    @property
    def isomorphic(self) -> bool:
        return self.outcome == ISOMORPHIC

    def __str__(self):
        if self.isomorphic:
            return ISOMORPHIC
        return f"{DISTINCT}: {self.reason}"


def compare(a: Arrangement, b: Arrangement) -> ComparisonVerdict:
    la, lb = build_lattice(a), build_lattice(b)
    trace: list[str] = []

    def distinct(kind, left=None, right=None):
        return ComparisonVerdict(DISTINCT, reason=Reason(kind, left, right), trace=tuple(trace))

    pa, pb = poincare(la), poincare(lb)
    b1a, b1b = pa.central_poincare[1], pb.central_poincare[1]
    trace.append(f"b1 {b1a} {b1b}")
    if b1a != b1b:
        return distinct("B1Mismatch", b1a, b1b)

    b3a, b3b = pa.central_poincare[3], pb.central_poincare[3]
    trace.append(f"b3 {b3a} {b3b}")
    if (b3a == 0) != (b3b == 0):
        return distinct("B3PencilTest", b3a, b3b)

    ca, cb = classify(la), classify(lb)
    trace.append(f"class {ca.tag} {cb.tag}")
    if ca.tag != cb.tag:
        return distinct("ClassMismatch", ca.tag, cb.tag)

    trace.append("poincare {} {}".format(
        " ".join(map(str, pa.central_poincare)), " ".join(map(str, pb.central_poincare))))
    if pa.central_poincare != pb.central_poincare:
        return distinct("PoincareMismatch", pa.central_poincare, pb.central_poincare)

    perm = lattice_isomorphic(la, lb)
    trace.append("certificate " + ("equal" if perm is not None else "different"))
    if perm is None:
        return distinct("CertificateMismatch")
    assert is_lattice_isomorphism(la, lb, perm)
    return ComparisonVerdict(ISOMORPHIC, bijection=perm, trace=tuple(trace))


def self_witness(a: Arrangement, seed: int = 0) -> ComparisonVerdict:
    """Compare ``a`` with a randomly permuted, re-coordinatized copy of itself."""
    rng = random.Random(seed)
    moved = transform_arrangement(a, random_matrix(rng))
    moved = permute_arrangement(moved, random_permutation(rng, a.n))
    return compare(a, moved)
