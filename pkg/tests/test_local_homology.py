"""Local (co)homology stalks, link cross-checks, CM detection, duality of
stalks."""

from lochom.complexes import Subcomplex
from lochom.fixtures import (FIXTURES, bowtie, circle3, hexagon, rp2_six,
                             sphere2, triangle)
from lochom.localhomology import (cm_check, link_crosscheck, local_cohomology,
                                  local_homology, uct_check, uct_report)
from lochom.rings import GF, QQ, ZZ


def test_circle_stalks():
    # every stalk of the circle is a line in top degree
    X = circle3()
    for s in X.all_simplices():
        assert local_homology(X, ZZ, s, 1).rank_summary == (1, [])
        assert local_homology(X, ZZ, s, 0).rank_summary == (0, [])
        assert local_cohomology(X, ZZ, s, 1).rank_summary == (1, [])


def test_disk_boundary_vs_interior_stalks():
    # full triangle: interior-free complex; boundary vertices have trivial
    # top local homology, the top cell has a line
    X = triangle()
    assert local_homology(X, ZZ, (0,), 2).rank_summary == (0, [])
    assert local_homology(X, ZZ, (0, 1), 2).rank_summary == (0, [])
    assert local_homology(X, ZZ, (0, 1, 2), 2).rank_summary == (1, [])


def test_sphere_stalks_all_lines():
    X = sphere2()
    for s in X.all_simplices():
        assert local_homology(X, ZZ, s, 2).rank_summary == (1, [])
        for k in (0, 1):
            assert local_homology(X, ZZ, s, k).is_trivial()


def test_bowtie_pinch_point():
    # at the glued vertex the complement retracts to two disjoint arcs:
    # homology concentrates one degree below the top, breaking concentration
    X = bowtie()
    assert local_homology(X, ZZ, (0,), 2).rank_summary == (0, [])
    assert local_homology(X, ZZ, (0,), 1).rank_summary == (1, [])


def test_link_crosscheck_all_fixtures():
    for fn in FIXTURES.values():
        X = fn()
        for s in X.all_simplices():
            assert link_crosscheck(X, ZZ, s)


def test_cm_check_verdicts():
    assert cm_check(circle3(), None, 1, ZZ)["cm"]
    assert cm_check(sphere2(), None, 2, ZZ)["cm"]
    assert cm_check(hexagon(), None, 1, ZZ)["locally_cm"]
    rep = cm_check(rp2_six(), None, 2, ZZ)
    assert rep["locally_cm"] and not rep["cm"]  # reduced H_1 = Z/2 survives
    assert cm_check(rp2_six(), None, 2, GF(2))["locally_cm"]


def test_bowtie_cm_witness():
    rep = cm_check(bowtie(), None, 2, ZZ)
    assert not rep["locally_cm"]
    simplices = [w[0] for w in rep["witnesses"]]
    assert (0,) in simplices


def test_cm_check_at_subcomplex_only():
    # away from the pinch vertex the bowtie is locally CM
    X = bowtie()
    L = Subcomplex(X, (1, 2))
    rep = cm_check(X, L, 2, ZZ)
    assert rep["locally_cm_at_L"]


def test_purity_flag():
    assert cm_check(sphere2(), None, 2, ZZ)["pure"]
    mixed = [[0, 1, 2], [2, 3]]
    from lochom.complexes import SimplicialComplex
    assert not cm_check(SimplicialComplex(mixed), None, 2, ZZ)["pure"]


def test_uct_all_simplices_over_z():
    for fn, n in ((circle3, 1), (sphere2, 2), (rp2_six, 2)):
        X = fn()
        for s in X.all_simplices():
            assert uct_check(X, ZZ, s, n)


def test_uct_report_fields():
    X = sphere2()
    rep = uct_report(X, ZZ, (0,), 2)
    assert rep["ok"] and rep["locally_cm_here"] and rep["pairing_unimodular"]


def test_stalk_field_dimensions_match_scalars():
    # dimensions over Q agree with free ranks over Z on torsion-free stalks
    X = sphere2()
    for s in X.all_simplices():
        assert (local_homology(X, QQ, s, 2).rank_summary
                == local_homology(X, ZZ, s, 2).rank_summary)
