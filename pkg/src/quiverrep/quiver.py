"""Quiver data model, Euler/Tits forms, and Dynkin classification.

A quiver is a finite directed multigraph; loops and parallel arrows are
accepted structurally and rejected only by classification, where the
mathematics (the Tits form) does the rejecting.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .errors import InternalInvariantError

__all__ = [
    "Arrow",
    "Quiver",
    "DynkinType",
    "Classification",
    "euler_form",
    "tits_form",
    "symmetrized_matrix",
    "is_positive_definite",
    "classify",
]


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class Quiver:
    """Vertices are dense 0-based indices; labels are user-facing strings."""

    labels: tuple[str, ...]
    arrows: tuple[Arrow, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if len(self.labels) < 1:
            raise ValueError("a quiver needs at least one vertex")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("vertex labels must be unique")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError("arrow ids must be unique")
        n = len(self.labels)
        for a in self.arrows:
            if not (0 <= a.source < n and 0 <= a.target < n):
                raise ValueError(f"arrow {a.name!r} references an undeclared vertex")

    @staticmethod
    def from_edges(labels: Sequence[str], edges: Sequence[tuple[str, int, int]], name: str = "") -> "Quiver":
        return Quiver(tuple(labels), tuple(Arrow(nm, s, t) for nm, s, t in edges), name)

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    def arrows_into(self, i: int) -> list[Arrow]:
        return [a for a in self.arrows if a.target == i]

    def arrows_out_of(self, i: int) -> list[Arrow]:
        return [a for a in self.arrows if a.source == i]

    def is_sink(self, i: int) -> bool:
        return all(a.source != i for a in self.arrows)

    def is_source(self, i: int) -> bool:
        return all(a.target != i for a in self.arrows)

    def reverse_arrows_at(self, i: int) -> "Quiver":
        """Flip every arrow incident to vertex i, keeping ids and order."""
        flipped = tuple(
            Arrow(a.name, a.target, a.source) if a.source == i or a.target == i else a
            for a in self.arrows
        )
        return Quiver(self.labels, flipped, self.name)

    def reverse_arrow(self, name: str) -> "Quiver":
        flipped = tuple(
            Arrow(a.name, a.target, a.source) if a.name == name else a for a in self.arrows
        )
        return Quiver(self.labels, flipped, self.name)


@dataclass(frozen=True)
class DynkinType:
    letter: str
    rank: int

    def __str__(self) -> str:
        return f"{self.letter}{self.rank}"


@dataclass(frozen=True)
class Classification:
    finite: bool
    components: tuple[DynkinType, ...] = ()
    witness: str | None = None


def _check_sizes(Q: Quiver, *vectors: Sequence[int]):
    for v in vectors:
        if len(v) != Q.vertex_count:
            raise ValueError(f"vector of length {len(v)} does not fit a quiver on {Q.vertex_count} vertices")


def euler_form(Q: Quiver, m: Sequence[int], n: Sequence[int]) -> int:
    """Bilinear form <m, n> = sum_i m_i n_i - sum_a m_source(a) n_target(a)."""
    _check_sizes(Q, m, n)
    total = sum(mi * ni for mi, ni in zip(m, n))
    for a in Q.arrows:
        total -= m[a.source] * n[a.target]
    return total


def tits_form(Q: Quiver, n: Sequence[int]) -> int:
    """Quadratic form of the Euler form; depends only on the underlying graph."""
    return euler_form(Q, n, n)


@lru_cache(maxsize=None)
def symmetrized_matrix(Q: Quiver) -> tuple[tuple[int, ...], ...]:
    """Symmetric integer matrix B with n^T B n = 2 * tits_form(Q, n)."""
    n = Q.vertex_count
    B = [[0] * n for _ in range(n)]
    for i in range(n):
        B[i][i] = 2
    for a in Q.arrows:
        if a.source == a.target:
            B[a.source][a.source] -= 2
        else:
            B[a.source][a.target] -= 1
            B[a.target][a.source] -= 1
    return tuple(tuple(r) for r in B)


def _int_det(rows: list[list[int]]) -> int:
    """Fraction-free determinant (Bareiss)."""
    n = len(rows)
    if n == 0:
        return 1
    m = [r[:] for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        piv = m[k][k]
        for i in range(k + 1, n):
            m[i] = [(m[i][j] * piv - m[i][k] * m[k][j]) // prev for j in range(n)]
        prev = piv
    return sign * m[n - 1][n - 1]


def is_positive_definite(Q: Quiver) -> bool:
    """Sylvester's criterion on the symmetrized Tits matrix, in exact integers."""
    B = [list(r) for r in symmetrized_matrix(Q)]
    n = len(B)
    for k in range(1, n + 1):
        if _int_det([row[:k] for row in B[:k]]) <= 0:
            return False
    return True


def _components(Q: Quiver) -> list[list[int]]:
    n = Q.vertex_count
    adj: list[set[int]] = [set() for _ in range(n)]
    for a in Q.arrows:
        adj[a.source].add(a.target)
        adj[a.target].add(a.source)
    seen = [False] * n
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def _classify_component(Q: Quiver, comp: list[int]) -> DynkinType | str:
    """Dynkin type of one connected component, or a textual rejection reason."""
    label = Q.labels[comp[0]]
    in_comp = set(comp)
    edges = []
    for a in Q.arrows:
        if a.source in in_comp:
            if a.source == a.target:
                return f"loop at vertex '{Q.labels[a.source]}'"
            edges.append((min(a.source, a.target), max(a.source, a.target)))
    pair_counts: dict[tuple[int, int], int] = {}
    for e in edges:
        pair_counts[e] = pair_counts.get(e, 0) + 1
    for (u, v), cnt in pair_counts.items():
        if cnt > 1:
            return f"parallel arrows between '{Q.labels[u]}' and '{Q.labels[v]}'"
    if len(edges) != len(comp) - 1:
        return f"cycle in the component containing '{label}'"
    deg = {v: 0 for v in comp}
    neighbors: dict[int, list[int]] = {v: [] for v in comp}
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
        neighbors[u].append(v)
        neighbors[v].append(u)
    branch = [v for v in comp if deg[v] >= 3]
    if not branch:
        return DynkinType("A", len(comp))
    if len(branch) > 1:
        return f"two branch vertices in the component containing '{label}'"
    center = branch[0]
    if deg[center] > 3:
        return f"vertex '{Q.labels[center]}' has degree {deg[center]}"
    legs = []
    for first in neighbors[center]:
        length = 1
        prev, cur = center, first
        while deg[cur] == 2:
            nxt = next(w for w in neighbors[cur] if w != prev)
            prev, cur = cur, nxt
            length += 1
        legs.append(length)
    p, q, r = sorted(legs)
    if p == 1 and q == 1:
        return DynkinType("D", r + 3)
    if (p, q, r) == (1, 2, 2):
        return DynkinType("E", 6)
    if (p, q, r) == (1, 2, 3):
        return DynkinType("E", 7)
    if (p, q, r) == (1, 2, 4):
        return DynkinType("E", 8)
    return f"branch at '{Q.labels[center]}' with legs ({p},{q},{r}) is not of type A/D/E"


@lru_cache(maxsize=None)
def classify(Q: Quiver) -> Classification:
    """Finite/infinite representation type with per-component Dynkin types.

    Graph-shape recognition is cross-checked against Sylvester positivity of
    the symmetrized Tits matrix; a disagreement means an implementation bug.
    """
    results = [_classify_component(Q, comp) for comp in _components(Q)]
    rejections = [r for r in results if isinstance(r, str)]
    finite_by_shape = not rejections
    if finite_by_shape != is_positive_definite(Q):
        raise InternalInvariantError(
            "Dynkin shape recognition disagrees with Sylvester positivity"
        )
    if finite_by_shape:
        return Classification(finite=True, components=tuple(results))
    return Classification(finite=False, witness=rejections[0])
