"""Block families over the points ``0..n-1``.

A family is mediated when it is symmetric (as many blocks as points),
2-covering (every pair of distinct points shares a block) and has a system
of distinct representatives. Mediated families on ``n`` points with largest
block of size ``s`` correspond to mediated digraphs with maximum in-degree
``s - 1``; :func:`family_from_digraph` and :func:`digraph_from_family` are the
two directions of that correspondence.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

from .digraph import Digraph, bits, coverage_masks, least_uncovered_pair, to_mask


@dataclass(frozen=True)
class BlockFamily:
    """Ordered blocks over ``n`` points; each block is a sorted tuple.

    Repeated blocks are allowed. Block order matters for SDR indexing.
    """

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"point count must be non-negative, got {self.n}")
        for i, block in enumerate(self.blocks):
            if list(block) != sorted(set(block)):
                raise ValueError(f"block {i} is not a sorted list of distinct points: {block}")
            if block and (block[0] < 0 or block[-1] >= self.n):
                raise ValueError(f"block {i} has a point outside [0, {self.n})")

    @classmethod
    def of(cls, n: int, blocks: Iterable[Iterable[int]]) -> BlockFamily:
        """Normalise arbitrary iterables of points into a family."""
        return cls(n, tuple(tuple(sorted(set(b))) for b in blocks))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(to_mask(b) for b in self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def replication(self, point: int) -> int:
        """Number of blocks containing ``point``."""
        return sum(mask >> point & 1 for mask in self.masks)


@dataclass(frozen=True)
class DesignParams:
    n: int
    k: int
    lam: int
    b: int
    r: int

    def satisfies_counting_identities(self) -> bool:
        return (
            self.b * self.k * (self.k - 1) == self.lam * self.n * (self.n - 1)
            and self.r * (self.k - 1) == self.lam * (self.b - 1)
        )


def mcard(family: BlockFamily) -> int:
    return max((len(b) for b in family.blocks), default=0)


def is_symmetric(family: BlockFamily) -> bool:
    return len(family.blocks) == family.n


def uncovered_point_pair(family: BlockFamily) -> tuple[int, int] | None:
    """Least pair of distinct points lying in no block, or ``None``."""
    return least_uncovered_pair(family.n, coverage_masks(family.n, family.masks))


def is_two_covering(family: BlockFamily) -> bool:
    return uncovered_point_pair(family) is None


def find_sdr(family: BlockFamily) -> tuple[int, ...] | None:
    """A system of distinct representatives, or ``None`` if none exists.

    Maximum bipartite matching between blocks and points by augmenting
    paths. Blocks are processed in order and points tried in increasing
    order, so the result is deterministic.
    """
    blocks = family.blocks
    owner: dict[int, int] = {}  # point -> block index

    for root in range(len(blocks)):
        seen: set[int] = set()
        # Explicit DFS stack of (block, next position in block, point that led here).
        stack = [(root, 0, -1)]
        found = False
        while stack:
            i, pos, via = stack[-1]
            block = blocks[i]
            while pos < len(block) and block[pos] in seen:
                pos += 1
            if pos == len(block):
                stack.pop()
                continue
            x = block[pos]
            seen.add(x)
            stack[-1] = (i, pos + 1, via)
            if x in owner:
                stack.append((owner[x], 0, x))
                continue
            # Free point: flip the alternating path back to the root.
            path_point = x
            for depth in range(len(stack) - 1, -1, -1):
                j = stack[depth][0]
                owner[path_point] = j
                path_point = stack[depth][2]
            found = True
            break
        if not found:
            return None
    sdr = [0] * len(family.blocks)
    for x, i in owner.items():
        sdr[i] = x
    return tuple(sdr)


def is_sdr(family: BlockFamily, reps: tuple[int, ...]) -> bool:
    return (
        len(reps) == len(family.blocks)
        and len(set(reps)) == len(reps)
        and all(x in block for x, block in zip(reps, family.blocks))
    )


def is_mediated_family(family: BlockFamily) -> bool:
    return is_symmetric(family) and is_two_covering(family) and find_sdr(family) is not None


def pair_multiplicities(family: BlockFamily) -> dict[tuple[int, int], int]:
    counts = {pair: 0 for pair in combinations(range(family.n), 2)}
    for block in family.blocks:
        for pair in combinations(block, 2):
            counts[pair] += 1
    return counts


def check_symmetric_design(family: BlockFamily, k: int, lam: int) -> bool:
    """True iff ``family`` is a symmetric ``(n, k, lam)``-design."""
    if lam < 1 or not family.n > k >= 2:
        raise ValueError(f"need lam >= 1 and n > k >= 2, got n={family.n}, k={k}, lam={lam}")
    if not is_symmetric(family) or any(len(b) != k for b in family.blocks):
        return False
    return all(c == lam for c in pair_multiplicities(family).values())


def design_params(family: BlockFamily, k: int, lam: int) -> DesignParams:
    """Parameters of a design whose replication number is constant.

    Raises ``ValueError`` when points have different replication numbers.
    """
    reps = {family.replication(x) for x in range(family.n)}
    if len(reps) != 1:
        raise ValueError(f"replication numbers are not constant: {sorted(reps)}")
    return DesignParams(family.n, k, lam, len(family.blocks), reps.pop())


def family_from_digraph(d: Digraph) -> BlockFamily:
    """Block ``i`` is the closed in-neighbourhood of vertex ``i``."""
    return BlockFamily(d.n, tuple(tuple(bits(mask | 1 << v)) for v, mask in enumerate(d.in_masks)))


def digraph_from_family(family: BlockFamily, sdr: tuple[int, ...] | None = None) -> Digraph:
    """Digraph whose closed in-neighbourhoods are the blocks of ``family``.

    The block represented by point ``x`` in the SDR becomes ``N^-[x]``.
    Raises ``ValueError`` if the family is not symmetric or has no SDR.
    """
    if not is_symmetric(family):
        raise ValueError(f"family has {len(family.blocks)} blocks on {family.n} points; not symmetric")
    if sdr is None:
        sdr = find_sdr(family)
        if sdr is None:
            raise ValueError("family has no system of distinct representatives")
    elif not is_sdr(family, sdr):
        raise ValueError("supplied tuple is not a system of distinct representatives")
    masks = [0] * family.n
    for x, mask in zip(sdr, family.masks):
        masks[x] = mask & ~(1 << x)
    return Digraph(family.n, tuple(masks))
