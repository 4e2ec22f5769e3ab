"""Root data: Cartan tables, standard builds, coroot saturations."""

from fractions import Fraction

import pytest

from spherical_pi.intmat import DimensionError, IntMatrix
from spherical_pi.lattices import FinGenAbQuotient
from spherical_pi.root_data import (
    ADJOINT,
    SIMPLY_CONNECTED,
    RootDatum,
    build_standard,
    cartan_matrix,
    coroot_saturation,
    product,
    restrict_coroots,
    torus,
)

# ---------------------------------------------------------------------------
# Independent oracle: simple roots in their standard Euclidean realizations
# (Bourbaki plates), Cartan integers from inner products.


def _e(i, dim):
    return [Fraction(int(j == i)) for j in range(dim)]


def _sub(a, b):
    return [x - y for x, y in zip(a, b)]


def _add(a, b):
    return [x + y for x, y in zip(a, b)]


def _scale(c, a):
    return [Fraction(c) * x for x in a]


def euclidean_simple_roots(series, rank):
    n = rank
    if series == "A":
        dim = n + 1
        return [_sub(_e(i, dim), _e(i + 1, dim)) for i in range(n)]
    if series == "B":
        return [_sub(_e(i, n), _e(i + 1, n)) for i in range(n - 1)] + [_e(n - 1, n)]
    if series == "C":
        return [_sub(_e(i, n), _e(i + 1, n)) for i in range(n - 1)] + [
            _scale(2, _e(n - 1, n))
        ]
    if series == "D":
        return [_sub(_e(i, n), _e(i + 1, n)) for i in range(n - 1)] + [
            _add(_e(n - 2, n), _e(n - 1, n))
        ]
    if series == "E":
        dim = 8
        alpha1 = _scale(
            Fraction(1, 2),
            [1, -1, -1, -1, -1, -1, -1, 1],
        )
        alpha2 = _add(_e(0, dim), _e(1, dim))
        rest = [_sub(_e(i, dim), _e(i - 1, dim)) for i in range(1, 7)]
        return ([alpha1, alpha2] + rest)[:n]
    if series == "F":
        return [
            _sub(_e(1, 4), _e(2, 4)),
            _sub(_e(2, 4), _e(3, 4)),
            _e(3, 4),
            _scale(Fraction(1, 2), [1, -1, -1, -1]),
        ]
    if series == "G":
        return [
            [Fraction(1), Fraction(-1), Fraction(0)],
            [Fraction(-2), Fraction(1), Fraction(1)],
        ]
    raise AssertionError(series)


def euclidean_cartan(series, rank):
    roots = euclidean_simple_roots(series, rank)

    def dot(a, b):
        return sum(x * y for x, y in zip(a, b))

    n = len(roots)
    c = []
    for i in range(n):
        row = []
        for j in range(n):
            val = 2 * dot(roots[i], roots[j]) / dot(roots[i], roots[i])
            assert val.denominator == 1
            row.append(int(val))
        c.append(row)
    return IntMatrix.from_rows(c)


ALL_TYPES = (
    [("A", n) for n in range(1, 9)]
    + [("B", n) for n in range(2, 9)]
    + [("C", n) for n in range(3, 9)]
    + [("D", n) for n in range(4, 9)]
    + [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]
)

FUNDAMENTAL_GROUP_ORDER = {
    "A": lambda n: n + 1,
    "B": lambda n: 2,
    "C": lambda n: 2,
    "D": lambda n: 4,
    "E": lambda n: {6: 3, 7: 2, 8: 1}[n],
    "F": lambda n: 1,
    "G": lambda n: 1,
}


class TestCartanMatrix:
    @pytest.mark.parametrize("series,rank", ALL_TYPES)
    def test_matches_euclidean_realization(self, series, rank):
        assert cartan_matrix(series, rank) == euclidean_cartan(series, rank)

    def test_a2(self):
        assert cartan_matrix("A", 2) == IntMatrix.from_rows([[2, -1], [-1, 2]])

    def test_invalid_types(self):
        for series, rank in [
            ("A", 0),
            ("B", 1),
            ("C", 2),
            ("D", 3),
            ("E", 5),
            ("E", 9),
            ("F", 3),
            ("G", 1),
            ("H", 2),
        ]:
            with pytest.raises(ValueError):
                cartan_matrix(series, rank)


class TestRootDatum:
    def test_cartan_invariants_enforced(self):
        # diagonal pairing must be 2
        with pytest.raises(ValueError, match="expected 2"):
            RootDatum(1, ((1,),), ((1,),))
        # off-diagonal pairings must be nonpositive
        with pytest.raises(ValueError, match="positive"):
            RootDatum(2, ((2, 1), (1, 2)), ((1, 0), (0, 1)))
        # zeros must be symmetric
        with pytest.raises(ValueError, match="asymmetric"):
            RootDatum(
                3,
                ((2, 0, 0), (0, 2, 0)),
                ((1, 0, 0), (-1, 1, 0)),
            )

    def test_dependent_roots_rejected(self):
        with pytest.raises(ValueError, match="dependent"):
            RootDatum(2, ((2, 0), (-2, 0)), ((1, 0), (-1, 0)))

    def test_label_ignored_in_equality(self):
        a = RootDatum(1, ((2,),), ((1,),), label="x")
        b = RootDatum(1, ((2,),), ((1,),), label="y")
        assert a == b


class TestBuildStandard:
    def test_a1_simply_connected(self):
        rd = build_standard("A", 1, SIMPLY_CONNECTED, 0)
        assert rd.rank == 1
        assert rd.simple_roots == ((2,),)
        assert rd.simple_coroots == ((1,),)

    def test_a1_adjoint(self):
        rd = build_standard("A", 1, ADJOINT, 0)
        assert rd.simple_roots == ((1,),)
        assert rd.simple_coroots == ((2,),)

    def test_a2_pairing_matrix(self):
        rd = build_standard("A", 2, SIMPLY_CONNECTED, 0)
        assert rd.pairing_matrix() == IntMatrix.from_rows([[2, -1], [-1, 2]])

    @pytest.mark.parametrize("series,rank", ALL_TYPES)
    @pytest.mark.parametrize("isogeny", (SIMPLY_CONNECTED, ADJOINT))
    def test_pairing_matrix_is_the_cartan_matrix(self, series, rank, isogeny):
        rd = build_standard(series, rank, isogeny, 0)
        assert rd.pairing_matrix() == cartan_matrix(series, rank)

    def test_central_torus_extends_rank(self):
        rd = build_standard("A", 1, SIMPLY_CONNECTED, 2)
        assert rd.rank == 3
        assert rd.simple_roots == ((2, 0, 0),)

    def test_invalid_isogeny(self):
        with pytest.raises(ValueError):
            build_standard("A", 1, "isotypic", 0)

    def test_negative_torus_rank(self):
        with pytest.raises(ValueError):
            build_standard("A", 1, ADJOINT, -1)


class TestProduct:
    def test_two_copies_of_a1(self):
        rd = product(
            build_standard("A", 1, SIMPLY_CONNECTED, 0),
            build_standard("A", 1, SIMPLY_CONNECTED, 0),
        )
        assert rd.rank == 2
        assert rd.simple_roots == ((2, 0), (0, 2))

    def test_with_torus(self):
        base = build_standard("A", 2, ADJOINT, 0)
        rd = product(base, torus(1))
        assert rd.rank == base.rank + 1
        assert rd.semisimple_rank == base.semisimple_rank

    def test_adjoint_blocks(self):
        rd = product(
            build_standard("A", 1, ADJOINT, 0),
            build_standard("A", 1, ADJOINT, 0),
        )
        assert rd.pairing_matrix() == IntMatrix.from_rows([[2, 0], [0, 2]])


class TestCorootSaturation:
    def test_a1_adjoint_weight_over_root(self):
        _, q = coroot_saturation(build_standard("A", 1, ADJOINT, 0))
        assert q == FinGenAbQuotient(0, (2,))

    def test_a1_simply_connected_trivial(self):
        _, q = coroot_saturation(build_standard("A", 1, SIMPLY_CONNECTED, 0))
        assert q == FinGenAbQuotient(0, ())

    def test_pure_torus(self):
        for n in (1, 2, 5):
            _, q = coroot_saturation(torus(n))
            assert q == FinGenAbQuotient(n, ())

    @pytest.mark.parametrize("series,rank", ALL_TYPES)
    def test_adjoint_fundamental_group_orders(self, series, rank):
        _, q = coroot_saturation(build_standard(series, rank, ADJOINT, 0))
        assert q.divisible_rank == 0
        assert q.order() == FUNDAMENTAL_GROUP_ORDER[series](rank)

    @pytest.mark.parametrize("series,rank", ALL_TYPES)
    def test_simply_connected_trivial(self, series, rank):
        _, q = coroot_saturation(build_standard(series, rank, SIMPLY_CONNECTED, 0))
        assert q == FinGenAbQuotient(0, ())

    def test_d_series_structure(self):
        _, q4 = coroot_saturation(build_standard("D", 4, ADJOINT, 0))
        assert q4.invariant_factors == (2, 2)
        _, q5 = coroot_saturation(build_standard("D", 5, ADJOINT, 0))
        assert q5.invariant_factors == (4,)

    def test_central_torus_gives_divisible_rank(self):
        _, q = coroot_saturation(build_standard("A", 2, ADJOINT, 3))
        assert q.divisible_rank == 3
        assert q.invariant_factors == (3,)


class TestRestrictCoroots:
    def test_identity_embedding(self):
        rd = build_standard("A", 2, SIMPLY_CONNECTED, 0)
        assert restrict_coroots(rd, IntMatrix.identity(2)) == rd.coroot_matrix()

    def test_a1_root_sublattice(self):
        rd = build_standard("A", 1, SIMPLY_CONNECTED, 0)
        got = restrict_coroots(rd, IntMatrix.from_rows([[2]]))
        assert got == IntMatrix.from_rows([[2]])

    def test_a1_scaled_sublattice(self):
        rd = build_standard("A", 1, SIMPLY_CONNECTED, 0)
        got = restrict_coroots(rd, IntMatrix.from_rows([[4]]))
        assert got == IntMatrix.from_rows([[4]])

    def test_rank_deficient_embedding(self):
        rd = build_standard("A", 1, SIMPLY_CONNECTED, 0)
        with pytest.raises(ValueError, match="rank-deficient"):
            restrict_coroots(rd, IntMatrix.from_rows([[0]]))

    def test_wrong_row_count(self):
        rd = build_standard("A", 2, SIMPLY_CONNECTED, 0)
        with pytest.raises(DimensionError):
            restrict_coroots(rd, IntMatrix.from_rows([[1]]))
