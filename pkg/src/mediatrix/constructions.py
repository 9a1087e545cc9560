"""Upper-bound witnesses: extended projective planes and cyclic difference covers."""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import isqrt

from .errors import SearchBudgetExceeded
from .families import BlockFamily, find_sdr, mcard
from .galois import is_prime_power, projective_plane


@dataclass(frozen=True, eq=False)
class PlaneExtension:
    """A plane of order ``q`` grown to ``n = q^2+q+1 + m(q+1) - t`` points.

    Point labels: ``0..q^2+q`` are the plane's points, then the ``m`` points
    of ``w``, then ``z_prime[j]`` is the copy of ``z[j]``. ``lines_through_x``
    holds plane line indices; ``tau[z]`` is the position in that tuple of
    the unique line through both ``x`` and ``z``.
    """

    q: int
    m: int
    t: int
    x: int
    lines_through_x: tuple[int, ...]
    w: tuple[int, ...]
    z: tuple[int, ...]
    z_prime: tuple[int, ...]
    tau: dict[int, int]
    family: BlockFamily
    sdr: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.family.n

    @property
    def bound(self) -> int:
        return self.q + self.m


def extension_size(q: int, m: int, t: int) -> int:
    return q * q + q + 1 + m * (q + 1) - t


def extend_plane(q: int, m: int, t: int, rng: random.Random | None = None) -> PlaneExtension:
    """Enlarge PG(2, q) to a mediated family with blocks of size at most ``q+1+m``.

    By default the apex ``x`` is point 0 and ``z`` takes the first ``mq - t``
    points of ``B_1 - x``, ``B_2 - x``, ... in canonical order. Passing
    ``rng`` picks ``x``, the order of the lines through it and ``z`` at
    random instead; any such choice is valid.
    """
    if not is_prime_power(q):
        raise ValueError(f"q={q} is not a prime power")
    if not 1 <= m <= q + 1:
        raise ValueError(f"m={m} outside [1, {q + 1}]")
    if not 0 <= t <= q:
        raise ValueError(f"t={t} outside [0, {q}]")

    lines = projective_plane(q).lines
    base = lines.n
    masks = lines.masks
    x = rng.randrange(base) if rng else 0
    through = [i for i, mask in enumerate(masks) if mask >> x & 1]
    if rng:
        rng.shuffle(through)

    candidates = [p for i in through[:m] for p in lines.blocks[i] if p != x]
    size = m * q - t
    z = rng.sample(candidates, size) if rng else candidates[:size]
    tau = {p: next(j for j, i in enumerate(through) if masks[i] >> p & 1) for p in z}

    w = tuple(range(base, base + m))
    z_prime = tuple(range(base + m, base + m + size))
    prime_of = dict(zip(z, z_prime))
    on_x = set(through)

    blocks: list[tuple[int, ...]] = []
    for i, line in enumerate(lines.blocks):
        if i in on_x:
            blocks.append(line + w)
        else:
            blocks.append(line + tuple(prime_of[p] for p in line if p in prime_of))
    for i in through[:m]:
        blocks.append(w + tuple(prime_of[p] for p in lines.blocks[i] if p in prime_of))
    for p in z:
        line = lines.blocks[through[tau[p]]]
        blocks.append(tuple(v for v in line if v != p) + (prime_of[p],))

    family = BlockFamily.of(base + m + size, blocks)
    assert len(family.blocks) == family.n == extension_size(q, m, t)
    assert mcard(family) <= q + 1 + m
    sdr = find_sdr(family)
    assert sdr is not None, "extended plane must have a system of distinct representatives"
    return PlaneExtension(q, m, t, x, tuple(through), w, tuple(z), z_prime, tau, family, sdr)


@dataclass(frozen=True)
class DifferenceCover:
    n: int
    elems: tuple[int, ...]

    def __post_init__(self) -> None:
        if not is_difference_cover(self.elems, self.n):
            raise ValueError(f"{list(self.elems)} is not a difference cover of Z_{self.n}")

    @property
    def k(self) -> int:
        return len(self.elems)


def difference_mask(elems, n: int) -> int:
    mask = 0
    for a in elems:
        for b in elems:
            mask |= 1 << ((a - b) % n)
    return mask


def is_difference_cover(elems, n: int) -> bool:
    elems = list(elems)
    if n < 1 or any(not 0 <= d < n for d in elems):
        raise ValueError(f"elements must lie in [0, {n})")
    return difference_mask(elems, n) == (1 << n) - 1


def develop(cover: DifferenceCover) -> BlockFamily:
    """The ``n`` translates ``c + D``, block ``c`` for ``c = 0..n-1``."""
    n = cover.n
    return BlockFamily.of(n, ([(c + d) % n for d in cover.elems] for c in range(n)))


def development_sdr(cover: DifferenceCover) -> tuple[int, ...]:
    """Representative ``c + d_1`` for block ``c``."""
    first = cover.elems[0]
    return tuple((c + first) % cover.n for c in range(cover.n))


def default_k_budget(n: int) -> int:
    """``ceil(sqrt(1.5 n)) + 6`` computed in integers."""
    s = isqrt(3 * n // 2)
    while 2 * s * s < 3 * n:
        s += 1
    return s + 6


def find_difference_cover(n: int, k: int, node_budget: int | None = None) -> DifferenceCover | None:
    """The lexicographically least ``k``-element difference cover of ``Z_n``, or ``None``.

    Only sets starting ``0, 1`` are searched: every cover has two elements
    one apart, and rotating them to ``0, 1`` can only make it smaller. For
    the same reason the largest element never exceeds ``n - (d_3 - 1)``
    (otherwise the reflected cover would be smaller). Branches are cut when
    the remaining elements cannot contribute enough new differences.

    Raises ``SearchBudgetExceeded`` after ``node_budget`` nodes.
    """
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    if n <= 2:
        return DifferenceCover(n, tuple(range(n))) if k >= n else None
    if k < 2 or k * (k - 1) < n - 1:
        return None

    full = (1 << n) - 1
    chosen = [0, 1]
    nodes = 0

    def rotate(mask: int, s: int) -> int:
        return ((mask << s) | (mask >> (n - s))) & full

    # smask has bit s for each chosen s; nmask has bit (-s mod n).
    def extend(last: int, covered: int, smask: int, nmask: int) -> bool:
        nonlocal nodes
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            raise SearchBudgetExceeded(f"difference-cover search for n={n}, k={k} exceeded {node_budget} nodes")
        if covered == full:
            return True
        size = len(chosen)
        r = k - size
        if r == 0:
            return False
        uncovered = n - covered.bit_count()
        if uncovered > r * (2 * size + r - 1):
            return False
        hi = n - r
        if size >= 3:
            hi = min(hi, n - (chosen[2] - 1) - (r - 1))
        for x in range(last + 1, hi + 1):
            new = rotate(nmask, x) | rotate(smask, n - x)
            chosen.append(x)
            if extend(x, covered | new, smask | 1 << x, nmask | 1 << (n - x)):
                return True
            chosen.pop()
        return False

    if extend(1, 0b11 | 1 << (n - 1), 0b11, 1 | 1 << (n - 1)):
        return DifferenceCover(n, tuple(chosen))
    return None


def min_difference_cover(n: int, k_budget: int | None = None) -> DifferenceCover | None:
    """Smallest difference cover of ``Z_n`` with at most ``k_budget`` elements.

    Sizes are tried in increasing order, so the answer has minimum size and
    is the lexicographically least of that size. ``None`` means no cover fits
    the budget.
    """
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    if k_budget is None:
        k_budget = default_k_budget(n)
    for k in range(1, k_budget + 1):
        cover = find_difference_cover(n, k)
        if cover is not None:
            return cover
    return None


def ruler_cover(n: int) -> DifferenceCover:
    """Closed-form cover ``{0..a-1} | {a-1+a, a-1+2a, ..., a-1+ba}``.

    Its positive differences fill ``0..(b+1)a - 1``, which is enough once
    that reaches ``n // 2``. Picks the smallest ``a + b``, then smallest ``a``.
    """
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    half = n // 2
    best = None
    for a in range(1, n + 1):
        if best is not None and a >= best[0] + best[1]:
            break
        b = max(0, -(-(half + 1) // a) - 1)
        if a - 1 + b * a > n - 1:
            continue
        if best is None or a + b < best[0] + best[1]:
            best = (a, b)
    a, b = best
    elems = sorted(set(range(a)) | {a - 1 + j * a for j in range(1, b + 1)})
    return DifferenceCover(n, tuple(elems))


# Covers of size f(n) + 2 where neither the closed forms nor the budgeted
# exhaustive search get within one of the lower bound. Found offline by
# local search; each entry is re-validated when it is turned into a cover.
CATALOGUED_COVERS: dict[int, tuple[int, ...]] = {
    122: (0, 1, 3, 6, 17, 24, 55, 77, 81, 83, 91, 96, 116),
    123: (0, 1, 6, 11, 14, 29, 43, 73, 77, 79, 96, 103, 112),
    124: (0, 1, 3, 9, 58, 59, 62, 73, 78, 85, 90, 95, 103),
    125: (0, 1, 4, 10, 22, 31, 33, 38, 46, 86, 100, 106, 112),
    126: (0, 1, 4, 13, 28, 36, 62, 69, 79, 80, 85, 99, 101),
    127: (0, 1, 3, 4, 10, 18, 29, 30, 34, 52, 71, 84, 92),
    128: (0, 1, 8, 9, 17, 31, 41, 43, 46, 52, 56, 109, 110),
    129: (0, 1, 6, 30, 32, 39, 49, 57, 60, 94, 107, 115, 119),
    130: (0, 1, 3, 33, 39, 50, 66, 70, 89, 105, 109, 118, 123),
    131: (0, 1, 4, 15, 20, 54, 56, 62, 87, 94, 105, 110, 122),
}


def catalogued_cover(n: int) -> DifferenceCover | None:
    elems = CATALOGUED_COVERS.get(n)
    return None if elems is None else DifferenceCover(n, elems)
