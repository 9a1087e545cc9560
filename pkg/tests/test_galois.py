from itertools import combinations, product

import numpy as np
import pytest

from mediatrix.errors import ResourceLimitError
from mediatrix.families import check_symmetric_design, digraph_from_family, is_mediated_family
from mediatrix.digraph import is_mediated, max_in_degree
from mediatrix.galois import (
    build_field,
    is_irreducible,
    is_prime,
    is_prime_power,
    prime_power_decompose,
    projective_plane,
    smallest_irreducible,
)

SMALL_ORDERS = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)]


def has_root(poly, p):
    return any(sum(c * x**i for i, c in enumerate(poly)) % p == 0 for x in range(p))


def poly_mul_mod(a, b, modulus, p):
    """Schoolbook product of coefficient lists reduced by a monic modulus."""
    e = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    for i in range(len(prod) - 1, e - 1, -1):
        c = prod[i]
        if c:
            for j, m in enumerate(modulus):
                prod[i - e + j] = (prod[i - e + j] - c * m) % p
    return prod[:e] + [0] * (e - len(prod[:e]))


def code_to_poly(a, p, e):
    return [(a // p**i) % p for i in range(e)]


class TestPrimePowers:
    @pytest.mark.parametrize("q,expected", [(8, (2, 3)), (6, None), (9, (3, 2)), (2, (2, 1)), (7, (7, 1)),
                                            (12, None), (1024, (2, 10)), (121, (11, 2)), (100, None)])
    def test_examples(self, q, expected):
        assert prime_power_decompose(q) == expected

    def test_precondition(self):
        with pytest.raises(ValueError):
            prime_power_decompose(1)

    def test_agrees_with_enumeration(self):
        powers = {p**e for p in range(2, 500) if is_prime(p) for e in range(1, 10) if p**e <= 500}
        assert {q for q in range(2, 501) if is_prime_power(q)} == powers

    def test_is_prime(self):
        assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


class TestIrreducible:
    def test_gf4_modulus_by_root_search(self):
        # Degree 2 over GF(2): irreducible iff no root. Only x^2+x+1 qualifies.
        monic = [[c0, c1, 1] for c0, c1 in product(range(2), repeat=2)]
        rootless = [poly for poly in monic if not has_root(poly, 2)]
        assert rootless == [[1, 1, 1]]
        assert smallest_irreducible(2, 2) == (1, 1, 1)

    def test_degree_three_matches_root_search(self):
        for p in (2, 3, 5):
            for low in product(range(p), repeat=3):
                poly = [*low, 1]
                assert is_irreducible(poly, p) == (not has_root(poly, p))

    def test_smallest_choices(self):
        assert smallest_irreducible(2, 3) == (1, 0, 1, 1)  # 1 + x^2 + x^3 precedes 1 + x + x^3
        assert smallest_irreducible(3, 2) == (1, 0, 1)
        assert smallest_irreducible(5, 1) == (0, 1)

    def test_reducible_quartic(self):
        # (x^2+x+1)^2 = x^4+x^2+1 over GF(2) has no root but is reducible.
        assert not has_root([1, 0, 1, 0, 1], 2)
        assert not is_irreducible([1, 0, 1, 0, 1], 2)
        assert is_irreducible([1, 1, 0, 0, 1], 2)


class TestFieldTables:
    def test_gf2(self):
        f = build_field(2, 1)
        assert f.add.tolist() == [[0, 1], [1, 0]]
        assert f.mul.tolist() == [[0, 0], [0, 1]]

    def test_prime_fields_are_modular(self):
        for p in (3, 5, 7, 11):
            f = build_field(p)
            r = np.arange(p)
            assert (f.add == np.add.outer(r, r) % p).all()
            assert (f.mul == np.multiply.outer(r, r) % p).all()

    def test_gf4_is_not_modular(self):
        f = build_field(2, 2)
        assert f.modulus == (1, 1, 1)
        assert f.add[2, 2] == 0
        assert f.mul[2, 2] == 3  # x * x = x + 1

    @pytest.mark.parametrize("p,e", SMALL_ORDERS + [(2, 4)])
    def test_tables_match_polynomial_arithmetic(self, p, e):
        f = build_field(p, e)
        q = p**e
        for a, b in product(range(q), repeat=2):
            pa, pb = code_to_poly(a, p, e), code_to_poly(b, p, e)
            s = [(x + y) % p for x, y in zip(pa, pb)]
            assert code_to_poly(int(f.add[a, b]), p, e) == s
            assert code_to_poly(int(f.mul[a, b]), p, e) == poly_mul_mod(pa, pb, list(f.modulus), p)

    @pytest.mark.parametrize("p,e", SMALL_ORDERS + [(2, 4)])
    def test_field_axioms(self, p, e):
        f = build_field(p, e)
        q = f.q
        add, mul = f.add, f.mul
        r = np.arange(q)
        assert (add == add.T).all() and (mul == mul.T).all()
        assert (add[0] == r).all() and (mul[1] == r).all() and (mul[0] == 0).all()
        # Associativity via fancy indexing over all triples.
        assert (add[add[:, :, None], r[None, None, :]] == add[r[:, None, None], add[None, :, :]]).all()
        assert (mul[mul[:, :, None], r[None, None, :]] == mul[r[:, None, None], mul[None, :, :]]).all()
        if q <= 9:
            lhs = mul[r[:, None, None], add[None, :, :]]
            rhs = add[mul[:, :, None], mul[:, None, :]]
            assert (lhs == rhs).all()
        for a in range(1, q):
            assert mul[a, f.inv(a)] == 1
        for a in range(q):
            assert add[a, f.neg(a)] == 0
        # Each row of a group table is a permutation.
        assert all(sorted(row) == list(range(q)) for row in add.tolist())
        assert all(sorted(row) == list(range(1, q)) for row in mul[1:, 1:].tolist())

    def test_zero_has_no_inverse(self):
        with pytest.raises(ZeroDivisionError):
            build_field(3).inv(0)

    def test_errors(self):
        with pytest.raises(ValueError):
            build_field(4, 1)
        with pytest.raises(ValueError):
            build_field(2, 0)
        with pytest.raises(ResourceLimitError):
            build_field(2, 15)
        with pytest.raises(ResourceLimitError):
            build_field(3, 3, cap=20)

    def test_tables_are_read_only(self):
        with pytest.raises(ValueError):
            build_field(5).add[0, 0] = 1


class TestProjectivePlane:
    def test_fano(self):
        plane = projective_plane(2)
        assert plane.n == 7
        assert len(plane.lines.blocks) == 7
        assert all(len(b) == 3 for b in plane.lines.blocks)
        assert is_mediated_family(plane.lines)

    def test_order_three_pair_count(self):
        plane = projective_plane(3)
        assert plane.n == 13 and all(len(b) == 4 for b in plane.lines.blocks)
        pairs = list(combinations(range(13), 2))
        assert len(pairs) == 78
        for x, y in pairs:
            assert sum(1 for b in plane.lines.blocks if x in b and y in b) == 1

    def test_order_four(self):
        plane = projective_plane(4)
        assert plane.n == 21 and all(len(b) == 5 for b in plane.lines.blocks)
        assert check_symmetric_design(plane.lines, 5, 1)

    def test_points_are_normalized_and_sorted(self):
        for q in (2, 3, 4):
            pts = projective_plane(q).points
            assert list(pts) == sorted(pts)
            assert all(next(c for c in pt if c) == 1 for pt in pts)
            assert len(set(pts)) == q * q + q + 1

    @pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
    def test_plane_invariants(self, q):
        plane = projective_plane(q)
        n = q * q + q + 1
        lines = plane.lines
        assert plane.n == n and len(lines.blocks) == n
        assert check_symmetric_design(lines, q + 1, 1)
        assert all(lines.replication(x) == q + 1 for x in range(n))
        assert is_mediated_family(lines)
        d = digraph_from_family(lines)
        assert is_mediated(d) and max_in_degree(d) == q

    @pytest.mark.parametrize("q", [1, 6, 10, 12])
    def test_non_prime_power_rejected(self, q):
        with pytest.raises(ValueError):
            projective_plane(q)
