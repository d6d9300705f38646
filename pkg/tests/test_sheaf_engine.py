"""Sheaf/cosheaf chain complexes, sections, reorientation, and the DSL."""

import pytest

from lochom.complexes import Subcomplex
from lochom.fixtures import FIXTURES, circle3, sphere2, triangle
from lochom.io import parse_sheaf, serialize_sheaf
from lochom.localhomology import build_h_cosheaf, build_h_sheaf
from lochom.rings import GF, QQ, ZZ
from lochom.sheaves import (ConstantCosheaf, ConstantSheaf, SectionsModule,
                            cosheaf_chain_complex, region_rel, region_sub,
                            reorientation_iso, sections,
                            sheaf_cochain_complex, simplicial_chain_complex,
                            simplicial_cochain_complex)


def test_constant_sheaf_cohomology_matches_simplicial():
    for fn in FIXTURES.values():
        X = fn()
        sc = sheaf_cochain_complex(ConstantSheaf(ZZ, X))
        pc = simplicial_cochain_complex(X, ZZ)
        for k in range(X.dim + 1):
            assert sc.homology(k).rank_summary == pc.homology(k).rank_summary


def test_constant_cosheaf_homology_matches_simplicial():
    for fn in FIXTURES.values():
        X = fn()
        cc = cosheaf_chain_complex(ConstantCosheaf(ZZ, X))
        pc = simplicial_chain_complex(X, ZZ)
        for k in range(X.dim + 1):
            assert cc.homology(k).rank_summary == pc.homology(k).rank_summary


def test_relative_plus_sub_ranks_add_up():
    # long exact sequence sanity on the sphere with an edge pair: Euler
    # characteristics of sub + rel = total
    X = sphere2()
    L = Subcomplex(X, (2, 3))

    def euler(region):
        cx = simplicial_chain_complex(X, ZZ, region)
        return sum((-1) ** k * len(cx.basis(k)) for k in range(X.dim + 1))

    total = simplicial_chain_complex(X, ZZ)
    chi = sum((-1) ** k * len(total.basis(k)) for k in range(X.dim + 1))
    assert euler(region_sub(L)) + euler(region_rel(L)) == chi


def test_sections_of_orientation_sheaf():
    # circle: one global section; sphere: one; projective plane over Z: none
    from lochom.fixtures import rp2_six
    for fn, n, expected in ((circle3, 1, 1), (sphere2, 2, 1), (rp2_six, 2, 0)):
        X = fn()
        F = build_h_sheaf(X, ZZ, n)
        rep = sections(F)
        assert rep["iso"]
        assert rep["sections"].rank == expected


def test_sections_determined_at_vertices():
    X = circle3()
    F = build_h_sheaf(X, ZZ, 1)
    mod = SectionsModule(F)
    for sec in mod.basis:
        assert all(isinstance(lab, tuple) and len(lab[0]) == 1
                   for lab in sec)


def test_reorientation_conjugates_differentials():
    X = sphere2()
    Xt = X.with_order((0, 2, 1, 3))
    c1 = simplicial_chain_complex(X, ZZ)
    c2 = simplicial_chain_complex(Xt, ZZ)
    iso = reorientation_iso(c1, c2, X, Xt)
    for k in range(1, X.dim + 1):
        lhs = iso[k - 1] @ c1.differential(k)
        rhs = c2.differential(k) @ iso[k]
        assert (lhs - rhs).is_zero()


def test_sheaf_dsl_round_trip():
    X = triangle()
    F = ConstantSheaf(ZZ, X, rank=2)
    text = serialize_sheaf(F)
    G = parse_sheaf(text, X, ZZ)
    for s in X.all_simplices():
        assert len(G.stalk(s)) == 2
    sc1 = sheaf_cochain_complex(F)
    sc2 = sheaf_cochain_complex(G)
    for k in range(X.dim + 1):
        assert sc1.homology(k).rank_summary == sc2.homology(k).rank_summary


def test_sheaf_dsl_rejects_missing_stalk():
    X = triangle()
    with pytest.raises(ValueError):
        parse_sheaf("stalk: 0 rank 1", X, ZZ)


def test_local_sheaf_restriction_functorial():
    # one-step restrictions compose to the two-step restriction
    X = sphere2()
    F = build_h_sheaf(X, ZZ, 2)
    s, mid, t = (0,), (0, 1), (0, 1, 2)
    two_step = F.restriction(s, t)
    composed = F.restriction_step(mid, t) @ F.restriction_step(s, mid)
    assert (two_step - composed).is_zero()


def test_local_cosheaf_corestriction_functorial():
    X = sphere2()
    G = build_h_cosheaf(X, ZZ, 2)
    s, mid, t = (0,), (0, 1), (0, 1, 2)
    two_step = G.corestriction(t, s)
    composed = G.corestriction_step(mid, s) @ G.corestriction_step(t, mid)
    assert (two_step - composed).is_zero()
