"""Canonical labeling of vertex-colored simple graphs.

Individualization-refinement: colour refinement to an equitable partition,
then a depth-first search that individualizes one vertex of the first
smallest non-singleton cell at a time.  Leaves are discrete partitions; the
certificate is the lexicographically smallest leaf encoding.  Two pruning
rules keep the search polynomial on highly symmetric inputs:

* a leaf whose encoding equals an earlier one yields an automorphism, and the
  search jumps back to the level where the two leaf paths diverge;
* children lying in one orbit of the automorphisms that fix the current path
  pointwise are explored once.
"""
from __future__ import annotations

import json
from typing import Hashable, Sequence

Code = tuple


def _rank(values: Sequence) -> list[int]:
    order = {v: i for i, v in enumerate(sorted(set(values)))}
    return [order[v] for v in values]


def refine(cells: list[int], adj: Sequence[Sequence[int]]) -> list[int]:
    """Coarsest equitable refinement of ``cells``; cell ids stay label-invariant."""
    count = len(set(cells))
    while True:
        sigs = [(cells[v], tuple(sorted(cells[u] for u in adj[v]))) for v in range(len(cells))]
        new = _rank(sigs)
        new_count = len(set(new))
        if new_count == count:
            return new
        cells, count = new, new_count


def _individualize(cells: list[int], v: int) -> list[int]:
    out = [2 * c + 1 for c in cells]
    out[v] = 2 * cells[v]
    return out


def _orbits(perms: list[list[int]], n: int) -> list[int]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in perms:
        for v in range(n):
            a, b = find(v), find(p[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


class _Search:
    def __init__(self, colors: Sequence[Hashable], adj: Sequence[Sequence[int]]):
        self.colors = list(colors)
        self.adj = [sorted(set(a)) for a in adj]
        self.n = len(self.colors)
        self.edges = sorted({(min(u, v), max(u, v)) for u in range(self.n) for v in self.adj[u]})
        self.autos: list[list[int]] = []
        self.first = None  # (code, labels, path)
        self.best = None
        self.leaves = 0

    def _code(self, labels: list[int]) -> Code:
        inv = [0] * self.n
        for v, lab in enumerate(labels):
            inv[lab] = v
        cols = tuple(self.colors[inv[i]] for i in range(self.n))
        es = tuple(sorted((min(labels[u], labels[v]), max(labels[u], labels[v])) for u, v in self.edges))
        return (cols, es)

    def _leaf(self, labels: list[int], path: list[int]) -> int | None:
        self.leaves += 1
        code = self._code(labels)
        if self.first is None:
            self.first = self.best = (code, labels, path)
            return None
        for ref in (self.first, self.best):
            if code == ref[0]:
                # vertex labelled i in ref maps to vertex labelled i here
                here = {lab: v for v, lab in enumerate(labels)}
                self.autos.append([here[ref[1][v]] for v in range(self.n)])
                k = 0
                while path[k] == ref[2][k]:
                    k += 1
                return k
        if code < self.best[0]:
            self.best = (code, labels, path)
        return None

    def dfs(self, cells: list[int], path: list[int]) -> int | None:
        depth = len(path)
        if len(set(cells)) == self.n:
            return self._leaf(cells, path)
        sizes: dict[int, int] = {}
        for c in cells:
            sizes[c] = sizes.get(c, 0) + 1
        target = min((s, c) for c, s in sizes.items() if s > 1)[1]
        tried: list[int] = []
        for v in [u for u in range(self.n) if cells[u] == target]:
            if tried:
                fixing = [p for p in self.autos if all(p[w] == w for w in path)]
                if fixing:
                    orb = _orbits(fixing, self.n)
                    if any(orb[v] == orb[t] for t in tried):
                        continue
            tried.append(v)
            jump = self.dfs(refine(_individualize(cells, v), self.adj), path + [v])
            if jump is not None and jump < depth:
                return jump
        return None


def canonical_labeling(colors: Sequence[Hashable], adj: Sequence[Sequence[int]]) -> tuple[bytes, list[int]]:
    """Return ``(certificate, labels)`` for a coloured graph.

    ``colors[v]`` must be mutually comparable and JSON-serializable.
    ``labels[v]`` is the canonical position of vertex ``v``; two graphs get the
    same certificate iff a colour-preserving isomorphism exists, and matching
    labels then give one.
    """
    n = len(colors)
    if n == 0:
        return b'[[],[]]', []
    search = _Search(colors, adj)
    start = refine(_rank(search.colors), search.adj)
    search.dfs(start, [])
    code, labels, _ = search.best
    return json.dumps(code, separators=(",", ":")).encode(), list(labels)
