"""Exact mediation numbers for small ``n`` by branch and bound over families.

A mediated digraph with maximum in-degree ``k`` is the same thing as a
symmetric 2-covering family with ``i`` in block ``i`` and every block of at
most ``k + 1`` points. The search grows such a family one point at a time,
always branching on the least pair no block covers yet.
"""

from __future__ import annotations

from .bounds import exact_cap, f_lower
from .digraph import Digraph, bits, is_mediated, max_in_degree
from .errors import BudgetError, ResourceLimitError, SearchBudgetExceeded
from .families import BlockFamily, digraph_from_family


def decide(n: int, k: int, node_budget: int | None = None) -> BlockFamily | None:
    """A family witnessing ``mu(n) <= k``, or ``None`` if there is none.

    Raises ``SearchBudgetExceeded`` when ``node_budget`` nodes were not
    enough to decide; that is distinct from a ``None`` answer.
    """
    if n < 1 or k < 0:
        raise ValueError(f"need n >= 1 and k >= 0, got n={n}, k={k}")
    cap = k + 1
    pair_cap = cap * (cap - 1) // 2
    blocks = [1 << i for i in range(n)]
    sizes = [1] * n
    # covered[x] has bit y set once x and y share a block.
    covered = [1 << x for x in range(n)]
    full = (1 << n) - 1
    nodes = 0

    def least_open_pair() -> tuple[int, int] | None:
        for a in range(n):
            missing = full & ~covered[a] & ~((1 << (a + 1)) - 1)
            if missing:
                return a, (missing & -missing).bit_length() - 1
        return None

    def add(c: int, v: int) -> list[tuple[int, int]]:
        """Put ``v`` into block ``c``; return the (row, old mask) undo log."""
        block = blocks[c]
        undo = [(v, covered[v])]
        covered[v] |= block
        for u in bits(block):
            undo.append((u, covered[u]))
            covered[u] |= 1 << v
        blocks[c] = block | 1 << v
        sizes[c] += 1
        return undo

    def remove(c: int, v: int, undo: list[tuple[int, int]]) -> None:
        blocks[c] &= ~(1 << v)
        sizes[c] -= 1
        for row, mask in reversed(undo):
            covered[row] = mask

    def open_pairs() -> int:
        return (n * n - sum(row.bit_count() for row in covered)) // 2

    def search(first: bool) -> bool:
        nonlocal nodes
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            raise SearchBudgetExceeded(f"exact search n={n}, k={k} exceeded {node_budget} nodes")
        pair = least_open_pair()
        if pair is None:
            return True
        # Each block can still gain at most C(cap, 2) - C(size, 2) pairs.
        room = sum(pair_cap - s * (s - 1) // 2 for s in sizes)
        if room < open_pairs():
            return False
        a, b = pair
        moves = []
        for c in range(n):
            need = [v for v in (a, b) if not blocks[c] >> v & 1]
            if sizes[c] + len(need) <= cap:
                moves.append((-sizes[c], c, need))
        moves.sort()
        if first:
            # Initially all points are interchangeable: b into block a stands
            # for a into block b, and any third block c stands for c = 2.
            moves = [mv for mv in moves if mv[1] == a or mv[1] == 2]
        for _, c, need in moves:
            logs = [(v, add(c, v)) for v in need]
            if search(False):
                return True
            for v, undo in reversed(logs):
                remove(c, v, undo)
        return False

    if not search(True):
        return None
    return BlockFamily(n, tuple(tuple(bits(mask)) for mask in blocks))


def mu_exact(n: int, k_cap: int | None = None, node_budget: int | None = None) -> tuple[int, Digraph]:
    """Exact ``mu(n)`` and a mediated digraph attaining it.

    Tries ``k = f(n), f(n)+1, ...`` up to ``k_cap`` (default: the best closed-form
    upper bound). The witness is re-checked by the digraph-level test.
    """
    cap = exact_cap()
    if not 1 <= n <= cap:
        raise ResourceLimitError(f"n={n} outside the exact-search range [1, {cap}] (MEDIATRIX_EXACT_CAP)")
    if k_cap is None:
        from .bounds import best_upper_bound

        k_cap = best_upper_bound(n, effort=0).value
    lo = f_lower(n)
    if k_cap < lo:
        raise BudgetError(f"k_cap={k_cap} is below the lower bound f({n})={lo}")
    for k in range(lo, k_cap + 1):
        family = decide(n, k, node_budget)
        if family is not None:
            d = digraph_from_family(family, tuple(range(n)))
            if not is_mediated(d) or max_in_degree(d) > k:
                raise AssertionError(f"exact-search witness for n={n}, k={k} failed verification")
            return k, d
    raise BudgetError(f"no mediated digraph on {n} vertices with max in-degree <= {k_cap}")
