"""Finite fields GF(p^e) as lookup tables, and the Desarguesian plane PG(2, q).

Elements of GF(p^e) = GF(p)[x]/(pi) are encoded as integers
``c0 + c1*p + ... + c_{e-1}*p^(e-1)`` from their polynomial coefficients, so
``0`` and ``1`` are the field's zero and one.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

import numpy as np

from .errors import ResourceLimitError
from .families import BlockFamily

DEFAULT_FIELD_CAP = 2**14


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power_decompose(q: int) -> tuple[int, int] | None:
    """Return ``(p, e)`` with ``q == p**e`` and ``p`` prime, else ``None``."""
    if q < 2:
        raise ValueError(f"q must be at least 2, got {q}")
    p = 2
    while p * p <= q and q % p:
        p += 1
    if q % p:
        p = q
    e = 0
    while q % p == 0:
        q //= p
        e += 1
    return (p, e) if q == 1 else None


def is_prime_power(q: int) -> bool:
    return q >= 2 and prime_power_decompose(q) is not None


def _poly_mod(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of ``num`` by monic ``den``; coefficient lists low degree first."""
    num = list(num)
    d = len(den) - 1
    for i in range(len(num) - 1, d - 1, -1):
        c = num[i] % p
        if c:
            for j in range(d + 1):
                num[i - d + j] = (num[i - d + j] - c * den[j]) % p
    return [c % p for c in num[:d]]


def is_irreducible(poly: list[int], p: int) -> bool:
    """Monic ``poly`` (low degree first) has no monic factor of degree 1..deg/2."""
    e = len(poly) - 1
    for d in range(1, e // 2 + 1):
        for low in product(range(p), repeat=d):
            if not any(_poly_mod(poly, [*low, 1], p)):
                return False
    return True


def smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree ``e`` over GF(p).

    Returned low degree first, leading 1 included. Coefficients are compared
    constant term first.
    """
    for low in product(range(p), repeat=e):
        poly = [*low, 1]
        if is_irreducible(poly, p):
            return tuple(poly)
    raise AssertionError(f"no irreducible polynomial of degree {e} over GF({p})")


@dataclass(frozen=True, eq=False)
class FieldTables:
    p: int
    e: int
    modulus: tuple[int, ...]
    add: np.ndarray
    mul: np.ndarray

    @property
    def q(self) -> int:
        return self.p**self.e

    zero_code = 0
    one_code = 1

    def neg(self, a: int) -> int:
        return int(np.flatnonzero(self.add[a] == 0)[0])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return int(np.flatnonzero(self.mul[a] == 1)[0])


def _digits(q: int, p: int, e: int) -> np.ndarray:
    codes = np.arange(q)
    return np.stack([(codes // p**i) % p for i in range(e)], axis=1)


@lru_cache(maxsize=None)
def build_field(p: int, e: int = 1, cap: int = DEFAULT_FIELD_CAP) -> FieldTables:
    """Addition and multiplication tables of GF(p^e).

    Raises ``ValueError`` if ``p`` is not prime or ``e < 1``, and
    ``ResourceLimitError`` if ``p**e`` exceeds ``cap``.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if e < 1:
        raise ValueError(f"extension degree must be at least 1, got {e}")
    q = p**e
    if q > cap:
        raise ResourceLimitError(f"GF({p}^{e}) has {q} elements, above the cap of {cap}")
    dtype = np.int32
    digits = _digits(q, p, e)
    add = np.zeros((q, q), dtype=dtype)
    for i in range(e):
        add += (np.add.outer(digits[:, i], digits[:, i]) % p * p**i).astype(dtype)

    modulus = smallest_irreducible(p, e)

    def times(a: int, b: int) -> int:
        da = [(a // p**i) % p for i in range(e)]
        db = [(b // p**i) % p for i in range(e)]
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        rem = _poly_mod(prod, list(modulus), p)
        return sum(c * p**i for i, c in enumerate(rem))

    # Discrete logs from a primitive element give the whole table vectorised.
    exp = np.zeros(q - 1, dtype=np.int64)
    for g in range(1, q):
        exp[0] = 1
        x = 1
        order = q - 1
        for i in range(1, q - 1):
            x = times(x, g)
            if x == 1:
                order = i
                break
            exp[i] = x
        if order == q - 1:
            break
    log = np.zeros(q, dtype=np.int64)
    log[exp] = np.arange(q - 1)
    logs = log[1:]
    mul = np.zeros((q, q), dtype=dtype)
    mul[1:, 1:] = exp[(logs[:, None] + logs[None, :]) % (q - 1)]
    add.setflags(write=False)
    mul.setflags(write=False)
    return FieldTables(p, e, tuple(modulus), add, mul)


@dataclass(frozen=True, eq=False)
class ProjectivePlane:
    q: int
    points: tuple[tuple[int, int, int], ...]
    lines: BlockFamily

    @property
    def n(self) -> int:
        return len(self.points)


def normalized_triples(q: int) -> list[tuple[int, int, int]]:
    """Nonzero triples with leftmost nonzero coordinate 1, in code order."""
    return (
        [(0, 0, 1)]
        + [(0, 1, z) for z in range(q)]
        + [(1, y, z) for y in range(q) for z in range(q)]
    )


@lru_cache(maxsize=32)
def projective_plane(q: int, cap: int = DEFAULT_FIELD_CAP) -> ProjectivePlane:
    """PG(2, q): points and lines are normalised homogeneous triples.

    Line ``(a:b:c)`` contains the point ``(x:y:z)`` iff ``ax + by + cz = 0``.
    Points and lines share one canonical order, so line ``i`` is the
    dual of point ``i``.
    """
    pe = prime_power_decompose(q) if q >= 2 else None
    if pe is None:
        raise ValueError(f"{q} is not a prime power")
    field = build_field(*pe, cap=cap)
    triples = normalized_triples(q)
    coords = np.array(triples, dtype=np.int64)
    xs, ys, zs = coords[:, 0], coords[:, 1], coords[:, 2]
    add, mul = field.add, field.mul
    blocks = []
    for a, b, c in triples:
        value = add[add[mul[a, xs], mul[b, ys]], mul[c, zs]]
        blocks.append(tuple(int(i) for i in np.flatnonzero(value == 0)))
    return ProjectivePlane(q, tuple(triples), BlockFamily(len(triples), tuple(blocks)))
