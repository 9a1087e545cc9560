"""Digraphs stored as per-vertex in-neighbour bitmasks, and the mediated test.

A digraph on ``n`` vertices is mediated when every pair of distinct vertices
lies together in some closed in-neighbourhood ``N^-[z] = {z} | N^-(z)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Digraph:
    """Immutable digraph on vertices ``0..n-1``.

    ``in_masks[v]`` has bit ``u`` set iff the arc ``u -> v`` is present.
    """

    n: int
    in_masks: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"vertex count must be non-negative, got {self.n}")
        if len(self.in_masks) != self.n:
            raise ValueError(f"expected {self.n} in-neighbour masks, got {len(self.in_masks)}")
        limit = 1 << self.n
        for v, mask in enumerate(self.in_masks):
            if mask < 0 or mask >= limit:
                raise ValueError(f"in-neighbours of {v} fall outside [0, {self.n})")
            if mask >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")

    @classmethod
    def from_in_neighbors(cls, in_nbrs: Iterable[Iterable[int]]) -> Digraph:
        masks = []
        for nbrs in in_nbrs:
            nbrs = list(nbrs)
            if any(u < 0 for u in nbrs):
                raise ValueError("negative vertex label")
            masks.append(to_mask(nbrs))
        return cls(len(masks), tuple(masks))

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
        """Build from ``(source, target)`` pairs; repeated arcs collapse."""
        masks = [0] * n
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) has an endpoint outside [0, {n})")
            masks[v] |= 1 << u
        return cls(n, tuple(masks))

    @classmethod
    def empty(cls, n: int) -> Digraph:
        return cls(n, (0,) * n)

    def in_nbrs(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return frozenset(bits(self.in_masks[v]))

    def in_degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.in_masks[v].bit_count()

    def arcs(self) -> list[tuple[int, int]]:
        """All arcs sorted by (source, target)."""
        return sorted((u, v) for v, mask in enumerate(self.in_masks) for u in bits(mask))

    def arc_count(self) -> int:
        return sum(mask.bit_count() for mask in self.in_masks)

    def with_arc(self, u: int, v: int) -> Digraph:
        masks = list(self.in_masks)
        masks[v] |= 1 << u
        return Digraph(self.n, tuple(masks))

    def without_arc(self, u: int, v: int) -> Digraph:
        masks = list(self.in_masks)
        masks[v] &= ~(1 << u)
        return Digraph(self.n, tuple(masks))

    def relabel(self, perm: list[int] | tuple[int, ...]) -> Digraph:
        """Return the digraph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm is not a permutation of the vertex set")
        return Digraph.from_arcs(self.n, ((perm[u], perm[v]) for u, v in self.arcs()))

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range [0, {self.n})")


def max_in_degree(d: Digraph) -> int:
    return max((mask.bit_count() for mask in d.in_masks), default=0)


def closed_in_neighborhood(d: Digraph, v: int) -> frozenset[int]:
    d._check_vertex(v)
    return frozenset(bits(d.in_masks[v] | 1 << v))


def coverage_masks(n: int, closed_masks: Iterable[int]) -> list[int]:
    """Row ``x`` has bit ``y`` set iff some given set contains both ``x`` and ``y``.

    Work is proportional to the total size of the sets, so a family with
    maximum size ``s`` costs ``O(n * s)`` big-int ORs.
    """
    covered = [1 << x for x in range(n)]
    for mask in closed_masks:
        for x in bits(mask):
            covered[x] |= mask
    return covered


def least_uncovered_pair(n: int, covered: list[int]) -> tuple[int, int] | None:
    full = (1 << n) - 1
    for x in range(n):
        missing = full & ~covered[x] & ~((1 << (x + 1)) - 1)
        if missing:
            return x, (missing & -missing).bit_length() - 1
    return None


def uncovered_pair(d: Digraph) -> tuple[int, int] | None:
    """Lexicographically least pair ``(x, y)``, ``x < y``, lying in no closed
    in-neighbourhood, or ``None`` when ``d`` is mediated."""
    closed = (mask | 1 << v for v, mask in enumerate(d.in_masks))
    return least_uncovered_pair(d.n, coverage_masks(d.n, closed))


def is_mediated(d: Digraph) -> bool:
    return uncovered_pair(d) is None


def degree_sum_slack(d: Digraph) -> int:
    """``sum(deg^2 + deg) - n(n-1)`` over in-degrees; negative means not mediated."""
    total = 0
    for mask in d.in_masks:
        k = mask.bit_count()
        total += k * k + k
    return total - d.n * (d.n - 1)
