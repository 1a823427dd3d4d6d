"""Relative cochain algebra: coboundaries, cylinders, difference cochains."""

import random

import pytest

import spinkit.exactlinalg as la
from spinkit.cwcomplex import (
    CWPairComplex,
    Cochain,
    CoefficientGroup,
    IntervalCochainBasis,
    PI7_S7,
    PI8_S7,
    Z2_COEFF,
    Z_COEFF,
    coboundary,
    cross_with_interval,
    difference_cochain,
    product_with_interval,
    relative_cohomology,
)
from spinkit.errors import ComplexValidationError, DimensionMismatchError, ResidueError


def disk8_pair():
    return CWPairComplex(
        [1, 0, 0, 0, 0, 0, 0, 1, 1],
        boundary={8: [[1]]},
        sub={0: [1], 7: [1], 8: [0]},
        name="(D8, S7)",
    )


def test_named_coefficient_groups():
    assert PI7_S7.modulus == 0 and str(PI7_S7) == "Z"
    assert PI8_S7.modulus == 2 and str(PI8_S7) == "Z/2"


def test_complex_validation():
    with pytest.raises(ComplexValidationError):
        CWPairComplex([1, 1, 1], boundary={1: [[1]], 2: [[1]]})  # dd != 0
    with pytest.raises(ComplexValidationError):
        # 1-cell in Y with boundary outside Y
        CWPairComplex([1, 1], boundary={1: [[1]]}, sub={1: [1]})
    with pytest.raises(ComplexValidationError):
        CWPairComplex([1, 1], boundary={1: [[1, 1]]})  # wrong shape


def test_interval_generators():
    basis = IntervalCochainBasis.standard()
    assert coboundary(basis.zero_bar) == -basis.i_bar
    assert coboundary(basis.one_bar) == basis.i_bar


def test_coboundary_squares_to_zero(random_pair_complex):
    rng = random.Random(1)
    for _ in range(40):
        cx = random_pair_complex(rng, max_pieces=12, dim=6)
        k = rng.randint(0, cx.dim - 2)
        c = Cochain(cx, k, Z_COEFF, tuple(rng.randint(-5, 5) for _ in range(cx.cell_count(k))))
        assert coboundary(coboundary(c)).is_zero()
        c2 = Cochain(cx, k, Z2_COEFF, tuple(rng.randint(0, 1) for _ in range(cx.cell_count(k))))
        assert coboundary(coboundary(c2)).is_zero()
    for _ in range(5):  # larger instances, up to two hundred cells
        cx = random_pair_complex(rng, max_pieces=95, dim=8)
        assert cx.total_cells() <= 200
        k = rng.randint(0, cx.dim - 2)
        c = Cochain(cx, k, Z_COEFF, tuple(rng.randint(-5, 5) for _ in range(cx.cell_count(k))))
        assert coboundary(coboundary(c)).is_zero()


def test_coboundary_degree_guard():
    cx = CWPairComplex([1])
    c = Cochain(cx, 0, Z_COEFF, (1,))
    with pytest.raises(DimensionMismatchError):
        coboundary(c)


def test_relative_coboundary_stays_relative(random_pair_complex):
    rng = random.Random(2)
    for _ in range(30):
        cx = random_pair_complex(rng)
        k = rng.randint(0, cx.dim - 1)
        values = [0 if cx.sub[k][i] else rng.randint(-4, 4) for i in range(cx.cell_count(k))]
        c = Cochain(cx, k, Z_COEFF, tuple(values))
        assert c.is_relative()
        assert coboundary(c).is_relative()


def test_relative_cohomology_examples():
    point = CWPairComplex([1], name="point")
    assert str(relative_cohomology(point, 0, Z_COEFF)) == "Z"
    d8 = disk8_pair()
    assert str(relative_cohomology(d8, 8, Z2_COEFF)) == "Z/2"
    assert str(relative_cohomology(d8, 8, Z_COEFF)) == "Z"
    assert str(relative_cohomology(d8, 7, Z_COEFF)) == "0"
    s7 = CWPairComplex([1, 0, 0, 0, 0, 0, 0, 1], name="S7")
    assert str(relative_cohomology(s7, 7, Z_COEFF)) == "Z"
    # torsion + universal coefficients on a projective-plane-like complex
    rp2 = CWPairComplex([1, 1, 1], boundary={1: [[0]], 2: [[2]]})
    assert str(relative_cohomology(rp2, 2, Z_COEFF)) == "Z/2"
    assert str(relative_cohomology(rp2, 1, Z2_COEFF)) == "Z/2"
    assert str(relative_cohomology(rp2, 1, CoefficientGroup(3))) == "0"


def test_free_rank_formula_for_top_heavy_complexes():
    """Cells only in dims 0, 7, 8 and Y empty: H^7 is free of rank n7 - rank d8."""
    rng = random.Random(12)
    for _ in range(20):
        n7, n8 = rng.randint(1, 5), rng.randint(0, 5)
        cells = [1, 0, 0, 0, 0, 0, 0, n7, n8]
        d8 = [[rng.randint(-3, 3) for _ in range(n8)] for _ in range(n7)]
        cx = CWPairComplex(cells, boundary={8: d8})
        group = relative_cohomology(cx, 7, Z_COEFF)
        assert not group.torsion
        assert group.free_rank == n7 - la.rank(la.mat(d8) if n8 else ())


def test_cohomology_against_mod_p_rank_oracle(random_pair_complex):
    """dim H^k(X,Y; Z/p) = n_k - rank_p(delta_k) - rank_p(delta_(k-1))."""
    rng = random.Random(3)
    complexes = [random_pair_complex(rng, max_pieces=9, dim=6) for _ in range(30)]
    complexes.append(disk8_pair())
    for cx in complexes:
        assert cx.total_cells() <= 30
        for k in range(cx.dim + 1):
            for p in (2, 3):
                group = relative_cohomology(cx, k, CoefficientGroup(p))
                n_k = len(cx.relative_indices(k))
                up = cx.relative_coboundary_matrix(k)
                down = cx.relative_coboundary_matrix(k - 1) if k else []
                r_up = la.rank_mod_p(up, p) if up and up[0] else 0
                r_down = la.rank_mod_p(down, p) if down and down[0] else 0
                want = n_k - r_up - r_down
                got = len(group.torsion) + group.free_rank
                assert got == want, (cx.cells, k, p)


def test_product_with_interval_counts_and_subcomplex(random_pair_complex):
    rng = random.Random(4)
    pt = CWPairComplex([1], name="point")
    cyl = product_with_interval(pt)
    assert cyl.cells == [2, 1]
    assert cyl.boundary[1] == [[-1], [1]]
    for _ in range(20):
        cx = random_pair_complex(rng)
        prod = product_with_interval(cx)  # validates dd = 0 and Y-closure
        for k in range(prod.dim + 1):
            assert prod.cell_count(k) == 2 * cx.cell_count(k) + cx.cell_count(k - 1)
        # relative cells of the cylinder pair are exactly (X \ Y) x interval
        for k in range(prod.dim + 1):
            assert len(prod.relative_indices(k)) == len(cx.relative_indices(k - 1))


def test_cross_product_identities(random_pair_complex):
    rng = random.Random(5)
    for _ in range(25):
        cx = random_pair_complex(rng)
        prod = product_with_interval(cx)
        k = rng.randint(0, cx.dim - 1)
        c = Cochain(cx, k, Z_COEFF, tuple(rng.randint(-4, 4) for _ in range(cx.cell_count(k))))
        sign = -1 if k % 2 else 1
        i_term = cross_with_interval(c, "I", prod)
        assert coboundary(i_term) == cross_with_interval(coboundary(c), "I", prod)
        lhs0 = coboundary(cross_with_interval(c, "0", prod))
        want0 = cross_with_interval(coboundary(c), "0", prod) - (
            i_term if sign == 1 else -i_term
        )
        assert lhs0 == want0
        lhs1 = coboundary(cross_with_interval(c, "1", prod))
        want1 = cross_with_interval(coboundary(c), "1", prod) + (
            i_term if sign == 1 else -i_term
        )
        assert lhs1 == want1
    zero = Cochain.zero(cx, 2, Z_COEFF)
    assert cross_with_interval(zero, "I").is_zero()


def test_difference_cochain_zero_case(random_pair_complex):
    cx = random_pair_complex(random.Random(6))
    prod = product_with_interval(cx)
    m = 3
    o_hat = Cochain.zero(prod, m, Z_COEFF)
    o = Cochain.zero(cx, m, Z_COEFF)
    d = difference_cochain(o_hat, o, o)
    assert d.is_zero() and d.degree == m - 1


def test_difference_cochain_cocycle_case(random_pair_complex, consistent_difference_inputs):
    """o0 = o1 = 0 and delta o_hat = 0 force d to be a cocycle."""
    rng = random.Random(7)
    found = 0
    while found < 10:
        cx = random_pair_complex(rng, max_pieces=10, dim=6)
        m = rng.randint(2, cx.dim - 1)
        prod = product_with_interval(cx)
        # a relative cocycle supported on the interval block: z x I for a
        # relative cocycle z on the base
        nz = cx.cell_count(m - 1)
        values = [0 if cx.sub[m - 1][i] else rng.randint(-3, 3) for i in range(nz)]
        z = Cochain(cx, m - 1, Z_COEFF, tuple(values))
        if not coboundary(z).is_zero():
            continue
        o_hat = cross_with_interval(z, "I", prod)
        o = Cochain.zero(cx, m, Z_COEFF)
        d = difference_cochain(o_hat, o, o)
        assert d == z
        assert coboundary(d).is_zero()
        found += 1


def test_difference_cochain_law(random_pair_complex, consistent_difference_inputs):
    """delta d = (-1)^deg (o0 - o1); at even degree exactly o0 - o1."""
    rng = random.Random(8)
    checked = 0
    while checked < 60:
        cx = random_pair_complex(rng, max_pieces=10, dim=6)
        m = rng.randint(2, cx.dim - 1)
        if cx.cell_count(m) + cx.cell_count(m - 1) == 0:
            continue
        coeff = rng.choice([Z_COEFF, Z2_COEFF])
        o_hat, o0, o1 = consistent_difference_inputs(cx, m, rng, coeff)
        assert coboundary(o_hat).is_zero()
        d = difference_cochain(o_hat, o0, o1)
        assert d.is_relative()
        want = o0 - o1 if m % 2 == 0 else o1 - o0
        assert coboundary(d) == want
        checked += 1


def test_difference_cochain_residue_errors(random_pair_complex, consistent_difference_inputs):
    rng = random.Random(9)
    cx = random_pair_complex(rng, max_pieces=8, dim=5)
    while cx.cell_count(3) == 0:
        cx = random_pair_complex(rng, max_pieces=8, dim=5)
    prod = product_with_interval(cx)
    o_hat, o0, o1 = consistent_difference_inputs(cx, 3, rng, Z_COEFF)
    bad = list(o_hat.values)
    bad[0] += 1  # corrupt an end-block value
    with pytest.raises(ResidueError):
        difference_cochain(Cochain(prod, 3, Z_COEFF, tuple(bad)), o0, o1)
    with pytest.raises(DimensionMismatchError):
        difference_cochain(o_hat, o0, Cochain.zero(cx, 2, Z_COEFF))
