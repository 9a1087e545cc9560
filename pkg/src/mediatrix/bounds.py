"""Lower and upper bounds on the mediation number.

``mu(n)`` is the least maximum in-degree of a mediated digraph on ``n``
vertices. Every mediated digraph has ``mu(n) >= f(n)``, the least ``d`` with
``d^2 + d >= n - 1``. Upper bounds come from explicit witnesses: planes,
extended planes, difference covers and (for tiny ``n``) exhaustive search.
When ``n = q^2+q+1`` and no plane of order ``q`` can exist, equality at
``f(n)`` is impossible and the lower bound rises by one.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field
from math import isqrt

from .constructions import (
    DifferenceCover,
    catalogued_cover,
    develop,
    development_sdr,
    extend_plane,
    extension_size,
    find_difference_cover,
    ruler_cover,
)
from .digraph import Digraph
from .errors import SearchBudgetExceeded
from .families import BlockFamily, digraph_from_family, family_from_digraph, find_sdr
from .galois import is_prime_power, projective_plane

log = logging.getLogger(__name__)

DIFFERENCE_COVER_MAX_N = 150
DIFFERENCE_COVER_NODE_BUDGET = 200_000
DEFAULT_EXACT_CAP = 10


def exact_cap() -> int:
    return int(os.environ.get("MEDIATRIX_EXACT_CAP", DEFAULT_EXACT_CAP))


def f_lower(n: int) -> int:
    """Least ``d >= 0`` with ``d*d + d >= n - 1``, i.e. ``ceil((sqrt(4n-3) - 1) / 2)``."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    d = max(0, (isqrt(4 * n - 3) - 1) // 2)
    while d * d + d < n - 1:
        d += 1
    return d


def is_sum_of_two_squares(q: int) -> bool:
    a = 0
    while 2 * a * a <= q:
        b = isqrt(q - a * a)
        if b * b == q - a * a:
            return True
        a += 1
    return False


def bruck_ryser_excludes(q: int) -> bool:
    """No plane of order ``q`` can exist by the Bruck-Ryser condition."""
    if q < 2:
        raise ValueError(f"plane order must be at least 2, got {q}")
    return q % 4 in (1, 2) and not is_sum_of_two_squares(q)


def plane_known_nonexistent(q: int) -> bool:
    """Bruck-Ryser exclusion, or order 10 (settled by exhaustive computer search).

    ``False`` means existence is known (prime powers) or open (e.g. 12).
    """
    return bruck_ryser_excludes(q) or q == 10


def plane_order(n: int) -> int | None:
    """``q >= 2`` with ``n == q^2 + q + 1``, if any."""
    q = (isqrt(4 * n - 3) - 1) // 2 if n >= 1 else 0
    return q if q >= 2 and q * q + q + 1 == n else None


def strict_gap_flag(n: int) -> bool:
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    q = plane_order(n)
    return q is not None and plane_known_nonexistent(q)


def mu_lower(n: int) -> int:
    return f_lower(n) + strict_gap_flag(n)


def verify_extremal_family_is_plane(family: BlockFamily, q: int) -> bool:
    """Every block has ``q+1`` points and any two blocks meet in exactly one point.

    Applies only to ``n = q^2+q+1`` blocks on as many points; anything else
    raises ``ValueError``.
    """
    n = q * q + q + 1
    if family.n != n or len(family.blocks) != n:
        raise ValueError(f"need {n} blocks on {n} points for order {q}, got {len(family.blocks)} on {family.n}")
    masks = family.masks
    if any(len(b) != q + 1 for b in family.blocks):
        return False
    return all((masks[i] & masks[j]).bit_count() == 1 for i in range(n) for j in range(i + 1, n))


@dataclass(frozen=True)
class UpperBound:
    """``mu(n) <= value``, backed by a witness rebuilt from ``method`` and ``params``."""

    n: int
    value: int
    method: str
    params: dict = field(default_factory=dict, compare=False)

    def witness(self) -> tuple[BlockFamily, tuple[int, ...]]:
        """The mediated family and one of its SDRs."""
        kind = self.params["kind"]
        if kind == "trivial":
            d = Digraph.from_arcs(self.n, [(0, 1)] if self.n == 2 else [])
            return family_from_digraph(d), tuple(range(self.n))
        if kind == "plane":
            family = projective_plane(self.params["q"]).lines
            return family, find_sdr(family)
        if kind == "plane-extension":
            ext = extend_plane(self.params["q"], self.params["m"], self.params["t"])
            return ext.family, ext.sdr
        if kind == "diff-cover":
            cover = DifferenceCover(self.n, tuple(self.params["cover"]))
            return develop(cover), development_sdr(cover)
        if kind == "exact":
            family = family_from_digraph(self.witness_digraph())
            return family, tuple(range(self.n))
        raise ValueError(f"unknown witness kind {kind!r}")

    def witness_digraph(self) -> Digraph:
        if self.params["kind"] == "exact":
            from .exact import mu_exact

            return mu_exact(self.n, self.value)[1]
        family, sdr = self.witness()
        return digraph_from_family(family, sdr)


def plane_bounds(n: int) -> list[UpperBound]:
    """Every plane or extended-plane bound available at ``n``, ascending ``q``."""
    out = []
    q = 2
    while q * q + q + 1 <= n:
        base = q * q + q + 1
        if is_prime_power(q) and n <= base + (q + 1) ** 2:
            if n == base:
                out.append(UpperBound(n, q, f"plane({q})", {"kind": "plane", "q": q}))
            else:
                m = -(-(n - base) // (q + 1))
                t = base + m * (q + 1) - n
                assert extension_size(q, m, t) == n and 0 <= t <= q
                out.append(
                    UpperBound(
                        n, q + m, f"plane-extension({q},{m},{t})",
                        {"kind": "plane-extension", "q": q, "m": m, "t": t},
                    )
                )
        q += 1
    return out


def cover_bound(cover: DifferenceCover) -> UpperBound:
    return UpperBound(
        cover.n, cover.k - 1, f"diff-cover({cover.k})",
        {"kind": "diff-cover", "cover": list(cover.elems)},
    )


def searched_cover_bound(n: int, below: int, node_budget: int) -> UpperBound | None:
    """Smallest searched difference cover giving a bound under ``below``.

    A size whose search runs out of nodes is skipped, so the result is the
    best found, not necessarily minimal.
    """
    for k in range(f_lower(n) + 1, below + 1):
        try:
            cover = find_difference_cover(n, k, node_budget)
        except SearchBudgetExceeded:
            log.debug("difference-cover search n=%d k=%d hit the node budget", n, k)
            continue
        if cover is not None:
            return cover_bound(cover)
    return None


def best_upper_bound(
    n: int,
    effort: int = 1,
    *,
    cover_max_n: int = DIFFERENCE_COVER_MAX_N,
    node_budget: int = DIFFERENCE_COVER_NODE_BUDGET,
) -> UpperBound:
    """Best available witness-backed upper bound on ``mu(n)``.

    Effort 0 uses closed forms (planes, extended planes, a ruler-type
    difference cover). Effort 1 adds catalogued covers and difference-cover
    search for ``n <= cover_max_n``; effort 2 adds exact search for ``n`` up
    to the exact cap. Ties go to the earlier method in that order.
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if n <= 2:
        return UpperBound(n, n - 1, "trivial", {"kind": "trivial"})
    candidates = plane_bounds(n) + [cover_bound(ruler_cover(n))]
    best = min(candidates, key=lambda b: b.value)
    floor = mu_lower(n)
    if effort >= 1 and (known := catalogued_cover(n)) is not None and known.k - 1 < best.value:
        best = cover_bound(known)
    if effort >= 1 and n <= cover_max_n and best.value > floor:
        found = searched_cover_bound(n, best.value, node_budget)
        if found is not None and found.value < best.value:
            best = found
    if effort >= 2 and n <= exact_cap() and best.value > floor:
        from .exact import mu_exact

        mu, _ = mu_exact(n, best.value)
        if mu < best.value:
            best = UpperBound(n, mu, "exact", {"kind": "exact"})
    return best


@dataclass(frozen=True)
class BoundsRecord:
    n: int
    f_lower: int
    mu_upper: int
    upper_method: str
    strict_gap_proved: bool
    witness_ref: str | None = None

    @property
    def mu_lower(self) -> int:
        return self.f_lower + self.strict_gap_proved

    @property
    def gap(self) -> int:
        return self.mu_upper - self.f_lower

    def as_row(self) -> dict:
        return {
            "n": self.n,
            "f": self.f_lower,
            "mu_lb": self.mu_lower,
            "mu_ub": self.mu_upper,
            "method": self.upper_method,
            "gap": self.gap,
            "strict_gap": self.strict_gap_proved,
        }


def bounds_record(n: int, effort: int = 1, **kwargs) -> BoundsRecord:
    ub = best_upper_bound(n, effort, **kwargs)
    strict = strict_gap_flag(n)
    f = f_lower(n)
    if strict and ub.value == f:
        raise AssertionError(f"witness at f({n}) = {f} contradicts the missing plane of order {plane_order(n)}")
    assert f <= ub.value
    return BoundsRecord(n, f, ub.value, ub.method, strict, f"{ub.method}@n={n}")
