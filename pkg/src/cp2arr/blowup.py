"""Blowing up multiple points and the weighted graph of the result.

Blowing up every point of multiplicity >= 3 turns the arrangement into a
configuration of curves meeting pairwise at most once: the strict
transforms of the lines plus one exceptional curve per blown-up point.  The
graph records each curve with its self-intersection number and each
crossing as an edge.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from .canon import canonical_labeling
from .lattice import IntersectionLattice, canonical_form, lattice_isomorphic

log = logging.getLogger(__name__)

STRICT = "strict"
EXCEPTIONAL = "exceptional"


class NotBlowupShaped(ValueError):
    """The graph is not the blow-up graph of any line arrangement."""


@dataclass(frozen=True)
class Vertex:
    kind: str  # STRICT (ref = line index) or EXCEPTIONAL (ref = point index)
    ref: int
    weight: int

    @property
    def name(self) -> str:
        return f"L{self.ref}" if self.kind == STRICT else f"E{self.ref}"


@dataclass(frozen=True)
class WeightedIncidenceGraph:
    vertices: tuple[Vertex, ...]
    # (u, v, point index) with u < v
    edges: tuple[tuple[int, int, int], ...]

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.vertices]
        for u, v, _ in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def degree(self, v: int) -> int:
        return sum(v in (a, b) for a, b, _ in self.edges)

    @property
    def weights(self) -> list[int]:
        return [v.weight for v in self.vertices]


def blow_up(lat: IntersectionLattice) -> WeightedIncidenceGraph:
    n = lat.n_lines
    verts = [Vertex(STRICT, i, w) for i, w in enumerate(lat.line_weights)]
    edges = []
    for k, p in enumerate(lat.points):
        if len(p) >= 3:
            e = len(verts)
            verts.append(Vertex(EXCEPTIONAL, k, -1))
            edges.extend((i, e, k) for i in p)
        else:
            edges.append((p[0], p[1], k))
    assert all(u < v < len(verts) for u, v, _ in edges) and n <= len(verts)
    return WeightedIncidenceGraph(tuple(verts), tuple(sorted(edges)))


@dataclass(frozen=True)
class GraphCertificate:
    certificate: bytes


def graph_certificate(g: WeightedIncidenceGraph) -> GraphCertificate:
    # vertex kinds are deliberately forgotten: only weights and adjacency count
    cert, _ = canonical_labeling([(v.weight,) for v in g.vertices], g.adjacency())
    return GraphCertificate(cert)


def _exceptional_sets(g: WeightedIncidenceGraph):
    """Yield vertex sets that could be the exceptional curves of ``g``.

    A set S qualifies when it is independent, each member has weight -1 and
    degree >= 3, and every other vertex has exactly ``1 - weight`` neighbours
    in S.
    """
    adj = g.adjacency()
    w = g.weights
    nv = len(w)
    cands = [v for v in range(nv) if w[v] == -1 and len(adj[v]) >= 3 and all(w[u] <= 0 for u in adj[v])]
    cand_set = set(cands)
    need = [1 - x for x in w]
    if any(x < 0 for x in need):
        return
    chosen: set[int] = set()
    decided: set[int] = set()

    def feasible(v: int) -> bool:
        if v in chosen:
            return not any(u in chosen for u in adj[v])
        have = sum(u in chosen for u in adj[v])
        open_ = sum(u in cand_set and u not in decided for u in adj[v])
        if v in cand_set and v not in decided:
            return have <= need[v] or have == 0
        return have <= need[v] <= have + open_

    def rec(i: int):
        if i == len(cands):
            yield frozenset(chosen)
            return
        c = cands[i]
        for take in (True, False):
            decided.add(c)
            if take:
                chosen.add(c)
            if all(feasible(u) for u in [c, *adj[c]]):
                yield from rec(i + 1)
            chosen.discard(c)
            decided.discard(c)

    if all(feasible(v) for v in range(nv)):
        yield from rec(0)


def _contract(g: WeightedIncidenceGraph, exc: frozenset) -> Optional[IntersectionLattice]:
    line_vs = [v for v in range(len(g.vertices)) if v not in exc]
    index = {v: i for i, v in enumerate(line_vs)}
    adj = g.adjacency()
    points = []
    for e in sorted(exc):
        if any(u in exc for u in adj[e]):
            return None
        points.append(tuple(sorted(index[u] for u in adj[e])))
    for u, v, _ in g.edges:
        if u not in exc and v not in exc:
            points.append(tuple(sorted((index[u], index[v]))))
    try:
        lat = IntersectionLattice(len(line_vs), tuple(points))
    except ValueError:
        return None
    if any(lat.line_weights[index[v]] != g.vertices[v].weight for v in line_vs):
        return None
    return lat


def blow_down(g: WeightedIncidenceGraph) -> IntersectionLattice:
    """Contract the exceptional curves of ``g`` back to multiple points.

    Exceptional curves are recognised from weights and adjacency alone; vertex
    kinds stored in ``g`` are ignored.  Raises ``NotBlowupShaped`` when no
    choice of exceptional curves reproduces a line arrangement.
    """
    if not g.vertices:
        raise NotBlowupShaped("empty graph")
    for exc in _exceptional_sets(g):
        lat = _contract(g, exc)
        if lat is not None:
            return lat
    raise NotBlowupShaped("no set of weight -1 vertices contracts to a line arrangement")


def theorem5_sides(a: IntersectionLattice, b: IntersectionLattice) -> tuple[bool, bool]:
    """(weight-preserving lattice isomorphism?, blow-up graphs isomorphic?)"""
    lattice_side = lattice_isomorphic(a, b) is not None
    graph_side = graph_certificate(blow_up(a)) == graph_certificate(blow_up(b))
    return lattice_side, graph_side


def theorem5_check(a: IntersectionLattice, b: IntersectionLattice) -> bool:
    """True when lattice isomorphism and blow-up graph isomorphism agree."""
    lattice_side, graph_side = theorem5_sides(a, b)
    if lattice_side != graph_side:
        log.error(
            "lattice/graph disagreement: lattice_iso=%s graph_iso=%s\n a=%r\n b=%r\n"
            " cert_a=%r\n cert_b=%r\n graph_a=%r\n graph_b=%r",
            lattice_side, graph_side, a, b,
            canonical_form(a).certificate, canonical_form(b).certificate,
            blow_up(a), blow_up(b),
        )
        return False
    return True
