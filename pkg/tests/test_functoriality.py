"""Simplicial maps, orientation indices, star-local certificates, the
transfer maps, and naturality of the duality squares."""

import pytest

from lochom.complexes import SimplicialComplex
from lochom.fixtures import circle3, hexagon, hexagon_cover_map, sphere2
from lochom.mv import fundamental_class
from lochom.rings import GF, QQ, ZZ
from lochom.simplicialmaps import (SimplicialMap, check_star_local,
                                   index_face_compatibility,
                                   naturality_defect_v1, naturality_defect_v2,
                                   pullback_cochain, pushforward_chain,
                                   shriek_down, shriek_up,
                                   shriek_up_preserves_fundamental_class,
                                   verify_naturality)


def cover():
    return SimplicialMap(hexagon(), circle3(), hexagon_cover_map())


def orientation_preserving_cover():
    # hexagon reordered so every edge maps with positive orientation index
    X = hexagon().with_order((0, 3, 1, 4, 2, 5))
    return SimplicialMap(X, circle3(), hexagon_cover_map())


def test_orientation_indices_of_the_cover():
    f = cover()
    signs = {s: f.ind(s) for s in f.source.all_simplices() if len(s) == 2}
    assert signs[(2, 3)] == -1  # image (0, 2) reverses the order
    assert signs[(0, 1)] == 1 and signs[(1, 2)] == 1


def test_index_squares_to_one_and_face_compatibility():
    for f in (cover(), orientation_preserving_cover()):
        for s in f.source.all_simplices():
            assert f.ind(s) ** 2 == 1
        assert index_face_compatibility(f) is None


def test_identity_map_is_certified():
    X = sphere2()
    f = SimplicialMap(X, X, {v: v for v in X.order})
    cert = check_star_local(f)
    assert cert["ok"]
    assert f.is_orientation_preserving()


def test_cover_is_certified_star_local():
    cert = check_star_local(cover())
    assert cert["ok"]
    # each vertex star of the hexagon is a two-edge path mapping bijectively
    assert len(cert["bijections"]) > 0


def test_constant_map_fails_star_locality():
    point = SimplicialComplex([[0]])
    f = SimplicialMap(circle3(), point, {0: 0, 1: 0, 2: 0})
    cert = check_star_local(f)
    assert not cert["ok"]
    assert "witness" in cert


def test_pushforward_on_fundamental_cycle():
    # the hexagon fundamental cycle pushes to twice the circle cycle
    f = cover()
    X, ring = f.source, ZZ
    hex_cycle = {}
    for e in X.simplices(1):
        # orient the 6-cycle coherently: edge (i, i+1) positively, the
        # wrap-around edge (0, 5) negatively
        hex_cycle[e] = ring.from_int(-1 if e == (0, 5) else 1)
    from lochom.caps import d_chain_plain
    assert not d_chain_plain(X, ring, hex_cycle)
    image = pushforward_chain(f, hex_cycle, ring)
    # twice the coherently oriented circle cycle
    assert image == {(0, 1): 2, (1, 2): 2, (0, 2): -2}
    assert not d_chain_plain(f.target, ring, image)


def test_pushforward_rejects_collapse():
    edge = SimplicialComplex([[0, 1]])
    g = SimplicialMap(circle3(), edge, {0: 0, 1: 1, 2: 0})
    with pytest.raises(ValueError):
        pushforward_chain(g, {(0, 2): ZZ.one()}, ZZ)


def test_shriek_up_expands_over_the_fibre():
    f = cover()
    cert = check_star_local(f)
    out = shriek_up(f, cert, {((0,), (0, 1)): ZZ.one()}, ZZ)
    carriers = {s for (s, _) in out}
    assert carriers == {(0,), (3,)}  # the two preimages of vertex 0


def test_shriek_up_preserves_fundamental_class():
    for f in (cover(), orientation_preserving_cover()):
        cert = check_star_local(f)
        assert shriek_up_preserves_fundamental_class(f, cert, ZZ)
        assert shriek_up(f, cert, fundamental_class(f.target, ZZ), ZZ) \
            == fundamental_class(f.source, ZZ)


def test_chain_level_naturality_orientation_preserving():
    f = orientation_preserving_cover()
    cert = check_star_local(f)
    X, Y = f.source, f.target
    tops_y = [(s, b) for b in Y.simplices(1) for s in Y.all_simplices()
              if set(s) <= set(b)]
    tops_x = [(t, c) for c in X.simplices(1) for t in X.all_simplices()
              if set(t) <= set(c)]
    for (s, b) in tops_y:
        for (t, c) in tops_x:
            assert not naturality_defect_v1(f, cert, ZZ, s, b, t, c)
        for t in Y.all_simplices():
            assert not naturality_defect_v2(f, cert, ZZ, s, b, t)


def test_chain_level_naturality_fails_without_orientation():
    # the standard-order cover has a sign defect somewhere
    f = cover()
    cert = check_star_local(f)
    Y, X = f.target, f.source
    found = False
    for b in Y.simplices(1):
        for s in Y.all_simplices():
            if not set(s) <= set(b):
                continue
            for t in Y.all_simplices():
                if naturality_defect_v2(f, cert, ZZ, s, b, t):
                    found = True
    assert found


def test_verify_naturality_cover_homology_level():
    rep = verify_naturality(cover(), ZZ)
    assert rep["ok"]
    assert rep["level"] == "homology"
    assert not rep["orientation_preserving"]
    assert all(rep["covariant"].values())
    assert all(rep["contravariant"].values())


def test_verify_naturality_chain_level_when_oriented():
    rep = verify_naturality(orientation_preserving_cover(), ZZ)
    assert rep["ok"] and rep["level"] == "chain"


def test_verify_naturality_identity_and_other_rings():
    X = sphere2()
    f = SimplicialMap(X, X, {v: v for v in X.order})
    assert verify_naturality(f, ZZ)["ok"]
    for ring in (QQ, GF(2)):
        assert verify_naturality(cover(), ring)["ok"]


def test_pullback_is_evaluation_dual_of_pushforward():
    f = cover()
    ring = ZZ
    for t in f.target.all_simplices():
        psi = {t: ring.one()}
        back = pullback_cochain(f, psi, ring)
        for s in f.source.all_simplices():
            if len(s) != len(t):
                continue
            pushed = pushforward_chain(f, {s: ring.one()}, ring)
            lhs = back.get(s, ring.zero())
            rhs = pushed.get(t, ring.zero())
            assert lhs == rhs


def test_shriek_down_signs():
    f = cover()
    out = shriek_down(f, {(((2, 3)), (2, 3)): ZZ.one()}, ZZ)
    assert out == {((0, 2), (0, 2)): ZZ.from_int(1)}  # (-1) * (-1)
