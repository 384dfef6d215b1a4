"""Indecomposable representations of finite-type quivers via reflection functors.

A positive root is walked down to a simple root by reflections taken along a
cyclic sink-admissible vertex ordering; the indecomposable is then rebuilt by
applying the inverse functors in reverse, reorienting the quiver step by step
until it returns to the input orientation.  Dimension bookkeeping is asserted
after every functor application, so the classical theorems this relies on are
enforced at runtime.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import InfiniteTypeError, InternalInvariantError, NotARootError, RetryCapError
from .linalg import Field, Matrix, column_space_pivots, kernel_basis
from .quiver import Quiver, classify, tits_form
from .rep import Representation, is_schur
from .roots import RootSet, positive_roots, simple_reflection

__all__ = [
    "IndecCatalog",
    "reflect_at_sink",
    "reflect_at_source",
    "construct_indecomposable",
    "all_indecomposables",
    "generic_rep_oracle",
]


@dataclass(frozen=True)
class IndecCatalog:
    """One indecomposable per positive root, in lexicographic root order."""

    quiver: Quiver
    field: Field
    entries: tuple[tuple[tuple[int, ...], Representation], ...]

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def roots(self) -> RootSet:
        return RootSet(self.quiver, tuple(r for r, _ in self.entries))


def reflect_at_sink(Q: Quiver, i: int, M: Representation) -> tuple[Quiver, Representation]:
    """BGP functor at a sink: the vertex space becomes the kernel of the
    assembled incoming map, incident arrows reverse, and the reversed arrow
    maps are the block rows of the canonical kernel inclusion."""
    if M.quiver != Q:
        raise ValueError("representation is not over the given quiver")
    if not Q.is_sink(i):
        raise ValueError(f"vertex {i} is not a sink")
    field = M.field
    in_idx = [k for k, a in enumerate(Q.arrows) if a.target == i]
    blocks = [M.maps[k] for k in in_idx]
    assembled = Matrix.hstack(field, blocks, M.dims[i])
    kernel = kernel_basis(assembled)
    new_dim = len(kernel)
    offsets = {}
    pos = 0
    for k in in_idx:
        offsets[k] = pos
        pos += M.dims[Q.arrows[k].source]
    new_quiver = Q.reverse_arrows_at(i)
    new_dims = tuple(new_dim if j == i else d for j, d in enumerate(M.dims))
    new_maps = []
    for k, a in enumerate(Q.arrows):
        if a.target == i:
            src_dim = M.dims[a.source]
            off = offsets[k]
            flat = [kernel[c][off + r] for r in range(src_dim) for c in range(new_dim)]
            new_maps.append(Matrix(field, src_dim, new_dim, flat))
        else:
            new_maps.append(M.maps[k])
    return new_quiver, Representation(new_quiver, field, new_dims, tuple(new_maps))


def reflect_at_source(Q: Quiver, i: int, M: Representation) -> tuple[Quiver, Representation]:
    """Dual BGP functor at a source: the vertex space becomes the cokernel of
    the assembled outgoing map, and the reversed arrow maps are the blocks of
    the canonical projection onto it."""
    if M.quiver != Q:
        raise ValueError("representation is not over the given quiver")
    if not Q.is_source(i):
        raise ValueError(f"vertex {i} is not a source")
    field = M.field
    out_idx = [k for k, a in enumerate(Q.arrows) if a.source == i]
    blocks = [M.maps[k] for k in out_idx]
    assembled = Matrix.vstack(field, blocks, M.dims[i])
    total = assembled.rows
    pivots, col_basis = column_space_pivots(assembled)
    nonpivots = [t for t in range(total) if t not in set(pivots)]
    new_dim = len(nonpivots)
    # Projection onto the cokernel in the basis of non-pivot coordinates:
    # x maps to its non-pivot coordinates after subtracting the unique
    # column-space combination matching x on the pivot coordinates.
    zero = field.zero()
    proj_rows = []
    for q in nonpivots:
        row = [zero] * total
        row[q] = field.one()
        for k, pcoord in enumerate(pivots):
            row[pcoord] = field.neg(col_basis.entry(k, q))
        proj_rows.append(row)
    offsets = {}
    pos = 0
    for k in out_idx:
        offsets[k] = pos
        pos += M.dims[Q.arrows[k].target]
    new_quiver = Q.reverse_arrows_at(i)
    new_dims = tuple(new_dim if j == i else d for j, d in enumerate(M.dims))
    new_maps = []
    for k, a in enumerate(Q.arrows):
        if a.source == i:
            tgt_dim = M.dims[a.target]
            off = offsets[k]
            flat = [proj_rows[r][off + c] for r in range(new_dim) for c in range(tgt_dim)]
            new_maps.append(Matrix(field, new_dim, tgt_dim, flat))
        else:
            new_maps.append(M.maps[k])
    return new_quiver, Representation(new_quiver, field, new_dims, tuple(new_maps))


def _admissible_order(Q: Quiver) -> list[int]:
    """Vertex order in which each vertex is a sink once all earlier ones are flipped."""
    order = []
    cur = Q
    remaining = set(range(Q.vertex_count))
    while remaining:
        v = min((x for x in remaining if cur.is_sink(x)), default=None)
        if v is None:
            raise InternalInvariantError("no admissible sink; quiver has an oriented cycle")
        order.append(v)
        remaining.remove(v)
        cur = cur.reverse_arrows_at(v)
    if cur != Q:
        raise InternalInvariantError("full reflection pass did not restore the orientation")
    return order


def _unit_vector(n: int, j: int) -> tuple[int, ...]:
    return tuple(1 if t == j else 0 for t in range(n))


def _require_positive_root(Q: Quiver, d) -> tuple[int, ...]:
    verdict = classify(Q)
    if not verdict.finite:
        raise InfiniteTypeError(
            f"Tits form is not positive definite ({verdict.witness}); "
            "quiver has infinite representation type"
        )
    d = tuple(int(x) for x in d)
    if len(d) != Q.vertex_count:
        raise ValueError("dimension vector size mismatch")
    q = tits_form(Q, d)
    if any(c < 0 for c in d) or all(c == 0 for c in d) or q != 1:
        raise NotARootError(d, q)
    return d


def construct_indecomposable(Q: Quiver, d, field: Field) -> Representation:
    """The unique indecomposable with dimension vector d, built by reflection functors."""
    d = _require_positive_root(Q, d)
    n = Q.vertex_count
    for j in range(n):
        if d == _unit_vector(n, j):
            return Representation.simple(Q, field, j)
    order = _admissible_order(Q)
    seq: list[int] = []
    quivers = [Q]
    dim_walk = [d]
    cur_q, cur_d = Q, d
    cap = 60 * n + 10
    stop_vertex = None
    k = 0
    while True:
        v = order[k % n]
        k += 1
        if cur_d == _unit_vector(n, v):
            stop_vertex = v
            break
        if k > cap:
            raise InternalInvariantError("reflection walk did not reach a simple root")
        new_d = simple_reflection(Q, v, cur_d)
        if any(c < 0 for c in new_d):
            raise InternalInvariantError("reflection walk left the positive cone")
        seq.append(v)
        cur_q = cur_q.reverse_arrows_at(v)
        quivers.append(cur_q)
        dim_walk.append(new_d)
        cur_d = new_d
    M = Representation.simple(quivers[-1], field, stop_vertex)
    for t in reversed(range(len(seq))):
        v = seq[t]
        new_q, M = reflect_at_source(quivers[t + 1], v, M)
        if new_q != quivers[t]:
            raise InternalInvariantError("reflection functor reoriented the quiver incorrectly")
        if M.dims != dim_walk[t]:
            raise InternalInvariantError(
                f"dimension bookkeeping failed at vertex {v}: {M.dims} != {dim_walk[t]}"
            )
    return M


def all_indecomposables(Q: Quiver, field: Field) -> IndecCatalog:
    """Catalog of every indecomposable of a finite-type quiver, one per positive root."""
    roots = positive_roots(Q)
    entries = []
    for r in roots:
        rep = construct_indecomposable(Q, r, field)
        entries.append((r, rep))
    return IndecCatalog(Q, field, tuple(entries))


def generic_rep_oracle(Q: Quiver, d, field: Field, seed: int = 0) -> Representation:
    """Independent randomized construction: fill arrow matrices with random
    entries (integers in [-5, 5] over the rationals, uniform residues over a
    prime field with p >= 101) and retry until the result is Schur."""
    d = _require_positive_root(Q, d)
    if not field.is_rational and field.char < 101:
        raise ValueError("generic sampling needs the rationals or a prime field with p >= 101")
    rng = random.Random(seed)
    p = field.char
    for _ in range(50):
        maps = []
        for a in Q.arrows:
            rows_, cols_ = d[a.target], d[a.source]
            if p:
                ents = [rng.randrange(p) for _ in range(rows_ * cols_)]
            else:
                ents = [rng.randint(-5, 5) for _ in range(rows_ * cols_)]
            maps.append(Matrix(field, rows_, cols_, ents))
        rep = Representation(Q, field, d, tuple(maps))
        if is_schur(rep):
            return rep
    raise RetryCapError(f"no Schur representation of dimension {d} found in 50 samples")
