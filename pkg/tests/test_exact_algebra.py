"""Exact rings, Smith normal form, solving, and homology presentations."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lochom.fixtures import bowtie, circle3, rp2_six, sphere2
from lochom.homology import induced_matrix, is_isomorphism
from lochom.matrices import Matrix, kernel_basis, smith_normal_form, solve
from lochom.rings import GF, QQ, ZZ, ring_from_name
from lochom.sheaves import simplicial_chain_complex


def dense_matrix(ring, rows):
    r = len(rows)
    c = len(rows[0]) if rows else 0
    entries = {}
    for i in range(r):
        for j in range(c):
            if rows[i][j]:
                entries[(i, j)] = ring.from_int(rows[i][j])
    return Matrix(ring, tuple(range(r)), tuple(range(c)), entries)


def test_ring_selectors():
    assert ring_from_name("z") is ZZ
    assert ring_from_name("q") is QQ
    assert ring_from_name("fp:7") is GF(7)
    with pytest.raises(ValueError):
        ring_from_name("r")


def test_integer_divmod_small_remainder():
    # remainders biased toward smallest absolute value
    q, r = ZZ.divmod(7, 3)
    assert q * 3 + r == 7 and abs(r) <= 1


def test_snf_diagonal_oracle():
    # invariant factors of [[2,4,4],[-6,6,12],[10,-4,-16]] are 2, 6, 12
    m = dense_matrix(ZZ, [[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    s = smith_normal_form(m)
    assert [abs(d) for d in s.diagonals] == [2, 6, 12]


def test_snf_transforms_are_inverse_witnesses():
    m = dense_matrix(ZZ, [[1, 2, 3], [4, 5, 6]])
    s = smith_normal_form(m)
    assert (s.U @ s.Uinv - Matrix.identity(ZZ, m.row_labels)).is_zero()
    assert (s.V @ s.Vinv - Matrix.identity(ZZ, m.col_labels)).is_zero()
    # U m V is the diagonal matrix
    d = s.U @ m @ s.V
    for (i, j), v in d.entries.items():
        if i != j:
            assert ZZ.is_zero(v)


def test_solve_respects_divisibility():
    m = dense_matrix(ZZ, [[2]])
    assert solve(m, {0: ZZ.from_int(4)}) is not None
    assert solve(m, {0: ZZ.from_int(3)}) is None
    mq = dense_matrix(QQ, [[2]])
    assert solve(mq, {0: Fraction(3)}) is not None


def test_kernel_basis_saturated():
    # kernel of [1 1 1] over Z is generated by primitive vectors
    m = dense_matrix(ZZ, [[1, 1, 1]])
    basis = kernel_basis(m)
    assert len(basis) == 2
    for vec in basis:
        from math import gcd
        g = 0
        for v in vec.values():
            g = gcd(g, v)
        assert g == 1


def test_homology_oracles():
    # classical homology: circle, 2-sphere, projective plane, wedge of disks
    def ranks(X, ring):
        cx = simplicial_chain_complex(X, ring)
        return {k: cx.homology(k).rank_summary for k in range(X.dim + 1)}

    assert ranks(circle3(), ZZ) == {0: (1, []), 1: (1, [])}
    assert ranks(sphere2(), ZZ) == {0: (1, []), 1: (0, []), 2: (1, [])}
    assert ranks(rp2_six(), ZZ) == {0: (1, []), 1: (0, [2]), 2: (0, [])}
    assert ranks(rp2_six(), GF(2)) == {0: (1, []), 1: (1, []), 2: (1, [])}
    assert ranks(rp2_six(), QQ) == {0: (1, []), 1: (0, []), 2: (0, [])}
    assert ranks(bowtie(), ZZ) == {0: (1, []), 1: (0, []), 2: (0, [])}


def test_induced_identity_is_isomorphism():
    X = sphere2()
    cx = simplicial_chain_complex(X, ZZ)
    h2 = cx.homology(2)
    m = induced_matrix(h2, h2, lambda chain: chain)
    assert is_isomorphism(h2, h2, m)


def test_induced_zero_map_not_isomorphism():
    X = circle3()
    cx = simplicial_chain_complex(X, ZZ)
    h1 = cx.homology(1)
    m = induced_matrix(h1, h1, lambda chain: {})
    assert not is_isomorphism(h1, h1, m)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3),
                min_size=2, max_size=4))
def test_snf_random_transform_consistency(rows):
    m = dense_matrix(ZZ, rows)
    s = smith_normal_form(m)
    d = s.U @ m @ s.V
    # diagonal, with each factor dividing the next
    diag = []
    for (i, j), v in d.entries.items():
        if not ZZ.is_zero(v):
            assert i == j
    for i, v in enumerate(s.diagonals):
        diag.append(abs(v))
    for a, b in zip(diag, diag[1:]):
        if a != 0:
            assert b % a == 0
    assert (s.Uinv @ d @ s.Vinv - m).is_zero()
