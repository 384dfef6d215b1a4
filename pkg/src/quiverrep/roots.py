"""Weyl reflections on dimension vectors and positive-root enumeration.

Positive roots (nonzero n >= 0 with Tits form 1) are produced by closing the
simple vectors under all simple reflections; the closure is finite exactly
when the form is positive definite, so the enumeration doubles as a runtime
witness of finite type.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .dynkin import build_quiver
from .errors import InfiniteTypeError
from .quiver import DynkinType, Quiver, classify, symmetrized_matrix, tits_form

__all__ = ["RootSet", "simple_reflection", "positive_roots", "root_count_table"]


@dataclass(frozen=True)
class RootSet:
    quiver: Quiver
    roots: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.roots)

    def __contains__(self, d) -> bool:
        return tuple(d) in self.roots


def simple_reflection(Q: Quiver, i: int, d: Sequence[int]) -> tuple[int, ...]:
    """Reflect an integer vector in the hyperplane of the i-th simple root."""
    B = symmetrized_matrix(Q)
    if B[i][i] != 2:
        raise ValueError(f"vertex {i} carries a loop; reflection undefined")
    if len(d) != Q.vertex_count:
        raise ValueError("vector size mismatch")
    pairing = sum(B[i][j] * dj for j, dj in enumerate(d))
    out = list(d)
    out[i] -= pairing
    return tuple(out)


@lru_cache(maxsize=None)
def positive_roots(Q: Quiver) -> RootSet:
    """All positive roots of a finite-type quiver, sorted lexicographically."""
    verdict = classify(Q)
    if not verdict.finite:
        raise InfiniteTypeError(
            f"Tits form is not positive definite ({verdict.witness}); "
            "root enumeration would not terminate"
        )
    n = Q.vertex_count
    simples = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    seen: set[tuple[int, ...]] = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for d in frontier:
            for i in range(n):
                r = simple_reflection(Q, i, d)
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        frontier = nxt
    positive = sorted(d for d in seen if all(c >= 0 for c in d) and any(c > 0 for c in d))
    return RootSet(Q, tuple(positive))


def root_count_table(max_rank: int) -> list[tuple[DynkinType, int]]:
    """Positive-root counts for every A/D/E diagram of rank <= max_rank."""
    if max_rank > 8:
        raise ValueError("root counts are tabulated for rank <= 8 only")
    table = []
    for rank in range(1, max_rank + 1):
        table.append((DynkinType("A", rank), len(positive_roots(build_quiver("A", rank)))))
    for rank in range(4, max_rank + 1):
        table.append((DynkinType("D", rank), len(positive_roots(build_quiver("D", rank)))))
    for rank in (6, 7, 8):
        if rank <= max_rank:
            table.append((DynkinType("E", rank), len(positive_roots(build_quiver("E", rank)))))
    return table
