"""Simplicial maps, orientation indices, star-local homeomorphism
certificates, the induced wrong-way maps on local (co)homology generators,
and naturality verification for the duality isomorphisms.

A vertex map f between oriented complexes acts on a dimension-preserving
simplex with the sign of the permutation sorting the image vertices into the
target order (the orientation index).  When f restricts to a simplicial
isomorphism on the closed star of every preimage simplex, it additionally
induces a transfer on generator-labelled chains in both directions:
pushforward on cochains with local-homology stalk values, and pullback on
chains with local-cohomology stalk values (summing over the fibre, inverting
carriers through the star bijections).
"""

from .caps import cap_v1, cap_v2
from .complexes import perm_sign
from .homology import induced_matrix
from .localhomology import (build_h_cosheaf, build_h_sheaf, cm_check,
                            local_complex)
from .matrices import Matrix, solve, vec_clean
from .mv import duality_map_matrices, fundamental_class
from .sheaves import (cosheaf_chain_complex, sheaf_cochain_complex,
                      simplicial_chain_complex, simplicial_cochain_complex)


class SimplicialMap:
    """A simplicial vertex map between oriented complexes with cached simplex
    images, fibres and orientation indices."""

    def __init__(self, source, target, vertex_map):
        self.source = source
        self.target = target
        self.vertex_map = dict(vertex_map)
        for v in source.order:
            if (v,) in source._simplices and v not in self.vertex_map:
                raise ValueError(f"vertex {v!r} has no image")
        self._images = {}
        for s in source.all_simplices():
            imgs = {self.vertex_map[v] for v in s}
            img = target.canon(imgs)
            if not target.contains(img):
                raise ValueError(f"image of {s!r} is not a simplex: {img!r}")
            self._images[s] = img
        self._fibers = {}
        for s, img in self._images.items():
            if len(img) == len(s):
                self._fibers.setdefault(img, []).append(s)

    def image(self, simplex):
        return self._images[tuple(simplex)]

    def is_dimension_preserving(self, simplex):
        return len(self.image(simplex)) == len(tuple(simplex))

    def fiber(self, simplex):
        """Dimension-preserving preimages of a target simplex."""
        return tuple(sorted(self._fibers.get(tuple(simplex), ()),
                            key=lambda t: tuple(self.source.pos[v] for v in t)))

    def ind(self, simplex):
        """Sign of the permutation sorting the image vertices (taken in
        source order) into the target order."""
        simplex = tuple(simplex)
        if not self.is_dimension_preserving(simplex):
            raise ValueError(f"{simplex!r} collapses under the map")
        imgs = [self.vertex_map[v] for v in simplex]
        return perm_sign(imgs, self.target.pos.__getitem__)

    def is_orientation_preserving(self):
        return all(self.ind(s) == 1 for s in self.source.all_simplices()
                   if self.is_dimension_preserving(s))


def index_face_compatibility(f):
    """(-1)^i ind(sigma with face i removed) == (-1)^j ind(sigma) cannot hold
    literally for independent i and j; the executable identity is that the
    boundary commutes with the signed pushforward -- checked as a chain map in
    `pushforward_matrices`.  Here we check the two-sided generator identity:
    for every dimension-preserving simplex and face position j, the index of
    the face matches the index of the simplex corrected by the position of
    the removed vertex in the image."""
    Y = f.target
    for s in f.source.all_simplices():
        if not f.is_dimension_preserving(s):
            continue
        img = f.image(s)
        for j in range(len(s)):
            face = s[:j] + s[j + 1:]
            if not face or not f.is_dimension_preserving(face):
                continue
            removed = f.vertex_map[s[j]]
            jj = img.index(removed)
            if (-1) ** jj * f.ind(face) != (-1) ** j * f.ind(s):
                return (s, j)
    return None


def pushforward_chain(f, chain, ring):
    """Signed pushforward on plain chains; raises when the support collapses."""
    out = {}
    for s, v in chain.items():
        if not f.is_dimension_preserving(s):
            raise ValueError(f"{s!r} collapses under the map")
        img = f.image(s)
        sign = ring.from_int(f.ind(s))
        out[img] = ring.add(out.get(img, ring.zero()), ring.mul(sign, v))
    return vec_clean(ring, out)


def pullback_cochain(f, cochain, ring):
    """Signed pullback on plain cochains (the evaluation dual of the
    pushforward); collapsed simplices pull back to zero."""
    out = {}
    for t in f.source.all_simplices():
        if not f.is_dimension_preserving(t):
            continue
        v = cochain.get(f.image(t))
        if v is None or ring.is_zero(v):
            continue
        out[t] = ring.mul(ring.from_int(f.ind(t)), v)
    return vec_clean(ring, out)


# -- star-local certificates --------------------------------------------------

def check_star_local(f):
    """Certificate that f restricts to a simplicial isomorphism on the closed
    star of every dimension-preserving preimage, with pairwise disjoint
    preimage stars; on failure returns the offending pair."""
    X, Y = f.source, f.target
    bijections = {}
    for sigma in Y.all_simplices():
        fib = f.fiber(sigma)
        star_sigma = Y.star(sigma)
        seen_stars = []
        for tau in fib:
            star_tau = X.star(tau)
            for prev_tau, prev in seen_stars:
                if prev & star_tau:
                    return {"ok": False, "witness": (sigma, tau),
                            "reason": f"stars of {prev_tau} and {tau} meet"}
            seen_stars.append((tau, star_tau))
            # vertex bijection between the stars
            verts_tau = sorted({v for t in star_tau for v in t},
                               key=X.pos.__getitem__)
            back = {}
            for v in verts_tau:
                w = f.vertex_map[v]
                if w in back:
                    return {"ok": False, "witness": (sigma, tau),
                            "reason": f"vertices {back[w]} and {v} of the "
                                      f"star both map to {w}"}
                back[w] = v
            verts_sigma = {v for t in star_sigma for v in t}
            if set(back) != verts_sigma:
                return {"ok": False, "witness": (sigma, tau),
                        "reason": "star vertex sets do not correspond"}
            # simplex bijection both ways
            image_star = {f.image(t) for t in star_tau}
            if image_star != star_sigma:
                return {"ok": False, "witness": (sigma, tau),
                        "reason": "star simplices do not correspond"}
            for t in star_sigma:
                pre = X.canon(back[w] for w in t)
                if pre not in star_tau:
                    return {"ok": False, "witness": (sigma, tau),
                            "reason": f"{t} has no preimage in the star"}
            bijections[(sigma, tau)] = back
    return {"ok": True, "bijections": bijections}


def star_inverse(f, cert, sigma, tau, alpha):
    """Carrier of alpha through the inverse of the star bijection at tau."""
    back = cert["bijections"][(tuple(sigma), tuple(tau))]
    return f.source.canon(back[w] for w in alpha)


# -- the induced maps on generator-labelled (co)chains ------------------------

def shriek_down(f, cochain, ring):
    """Transfer of cochains with local-homology stalk generators along f:
    push both the carrier and the top simplex forward, signed by both
    orientation indices."""
    out = {}
    for (s, a), v in cochain.items():
        sign = ring.from_int(f.ind(s) * f.ind(a))
        key = (f.image(s), f.image(a))
        out[key] = ring.add(out.get(key, ring.zero()), ring.mul(sign, v))
    return vec_clean(ring, out)


def shriek_up(f, cert, chain, ring):
    """Wrong-way map on chains with local-cohomology stalk generators: sum
    over the fibre of the carrier, transporting the top simplex through the
    star bijections."""
    out = {}
    for (s, a), v in chain.items():
        for tau in f.fiber(s):
            lifted = star_inverse(f, cert, s, tau, a)
            sign = ring.from_int(f.ind(tau) * f.ind(lifted))
            key = (tau, lifted)
            out[key] = ring.add(out.get(key, ring.zero()), ring.mul(sign, v))
    return vec_clean(ring, out)


def shriek_up_preserves_fundamental_class(f, cert, ring):
    """f^! sends the diagonal top cycle of the target to that of the source,
    exactly at chain level."""
    fy = fundamental_class(f.target, ring)
    fx = fundamental_class(f.source, ring)
    return shriek_up(f, cert, fy, ring) == fx


# -- chain-level naturality identities ----------------------------------------

def naturality_defect_v1(f, cert, ring, s, b, t, c):
    """push(pull(xi) cap phi) - xi cap push(phi) for the pairing cap, on the
    generator pair xi = (s, b)* of the target and phi = (t, c) of the source;
    zero when f preserves orientation."""
    k, l = len(s) - 1, len(t) - 1
    if k < l:
        return {}
    xi = {(s, b): ring.one()}
    phi = {(t, c): ring.one()}
    lhs_chain = cap_v1(ring, shriek_up(f, cert, xi, ring), phi, l)
    lhs = pushforward_chain(f, lhs_chain, ring)
    rhs = cap_v1(ring, xi, shriek_down(f, phi, ring), l)
    out = dict(lhs)
    for key, v in rhs.items():
        out[key] = ring.sub(out.get(key, ring.zero()), v)
    return vec_clean(ring, out)


def naturality_defect_v2(f, cert, ring, s, b, t):
    """pull(xi) cap pullback(psi) - pull(xi cap psi) for the transportless
    cap, on xi = (s, b)* and psi = t* of the target; zero when f preserves
    orientation."""
    k, l = len(s) - 1, len(t) - 1
    if k < l:
        return {}
    xi = {(s, b): ring.one()}
    psi = {t: ring.one()}
    lhs = cap_v2(ring, shriek_up(f, cert, xi, ring),
                 pullback_cochain(f, psi, ring), l)
    rhs = shriek_up(f, cert, cap_v2(ring, xi, psi, l), ring)
    out = dict(lhs)
    for key, v in rhs.items():
        out[key] = ring.sub(out.get(key, ring.zero()), v)
    return vec_clean(ring, out)


# -- naturality of the duality isomorphisms -----------------------------------

def _sheaf_transfer_matrix(f, FX, FY, srcX, srcY, l, ring):
    """Matrix of the cochain transfer in stalk bases: push each source stalk
    cycle forward and re-coordinatize in the target stalk cycle basis."""
    cols = []
    for (s, lab) in srcX.basis(l):
        pushed = shriek_down(f, dict(FX.cycle(s, lab)), ring)
        fs = f.image(s)
        _, K, Ksnf, _ = FY._stalk_data(fs)
        col = {}
        if pushed:
            y = solve(K, pushed, Ksnf)
            if y is None:
                raise ValueError(f"transfer image at {s} is not a cycle")
            col = {(fs, klab): v for klab, v in y.items()}
        cols.append(col)
    return Matrix.from_columns(ring, srcY.basis(l), srcX.basis(l), cols)


def _cosheaf_transfer_matrix(f, cert, GX, GY, tgtY, tgtX, q, ring):
    """Matrix of the wrong-way map in cokernel stalk bases: lift each target
    stalk generator, transfer through the star bijections, and project into
    the source presentations."""
    cols = []
    for (s, j) in tgtY.basis(q):
        rep = GY.presentation(s).lift(j)
        moved = shriek_up(f, cert, rep, ring)
        col = {}
        for (tau, a), v in moved.items():
            coords = GX.presentation(tau).project({(tau, a): ring.one()})
            for i, cval in enumerate(coords):
                if ring.is_zero(cval):
                    continue
                key = (tau, i)
                col[key] = ring.add(col.get(key, ring.zero()),
                                    ring.mul(v, cval))
        cols.append(vec_clean(ring, col))
    return Matrix.from_columns(ring, tgtX.basis(q), tgtY.basis(q), cols)


def verify_naturality(f, ring):
    """Both naturality squares of the duality isomorphisms for a star-local
    map between locally Cohen-Macaulay complexes of equal dimension, with the
    full complexes as subcomplex pair.

    Covariant square, per degree l: capping in the target after the cochain
    transfer equals pushing forward after capping in the source.
    Contravariant square: capping in the source after cochain pullback equals
    the wrong-way map after capping in the target.  When f preserves
    orientation both squares commute at chain level; otherwise they are
    compared on homology."""
    X, Y = f.source, f.target
    n = X.dim
    report = {"ring": ring.name, "n": n}
    cert = check_star_local(f)
    report["star_local"] = cert["ok"]
    if not cert["ok"]:
        report["witness"] = cert["witness"]
        report["reason"] = cert["reason"]
        return report
    if Y.dim != n:
        report["error"] = "dimension mismatch"
        return report
    for Z, tag in ((X, "source"), (Y, "target")):
        rep = cm_check(Z, None, n, ring)
        report[f"{tag}_locally_cm"] = rep["locally_cm"]
        if not rep["locally_cm"]:
            report["witness"] = rep["witnesses"][:1]
            return report
    orientation = f.is_orientation_preserving()
    report["orientation_preserving"] = orientation
    report["level"] = "chain" if orientation else "homology"
    report["fundamental_class_transfers"] = \
        shriek_up_preserves_fundamental_class(f, cert, ring)

    FX, FY = build_h_sheaf(X, ring, n), build_h_sheaf(Y, ring, n)
    GX, GY = build_h_cosheaf(X, ring, n), build_h_cosheaf(Y, ring, n)
    from .complexes import Subcomplex
    capX1_src, capX1_tgt, capX1 = duality_map_matrices(
        X, Subcomplex(X, X.order), "1ai", ring, sheaf=FX)
    capY1_src, capY1_tgt, capY1 = duality_map_matrices(
        Y, Subcomplex(Y, Y.order), "1ai", ring, sheaf=FY)
    capX2_src, capX2_tgt, capX2 = duality_map_matrices(
        X, Subcomplex(X, X.order), "2bii", ring, cosheaf=GX)
    capY2_src, capY2_tgt, capY2 = duality_map_matrices(
        Y, Subcomplex(Y, Y.order), "2bii", ring, cosheaf=GY)

    covariant = {}
    for l in range(0, n + 1):
        down = _sheaf_transfer_matrix(f, FX, FY, capX1_src, capY1_src, l, ring)
        push_cols = [pushforward_chain(f, {a: ring.one()}, ring)
                     for a in capX1_tgt.basis(n - l)]
        push = Matrix.from_columns(ring, capY1_tgt.basis(n - l),
                                   capX1_tgt.basis(n - l), push_cols)
        via_target = capY1[l] @ down
        via_source = push @ capX1[l]
        if orientation:
            covariant[l] = (via_target - via_source).is_zero()
        else:
            src_h = capX1_src.homology(l)
            tgt_h = capY1_tgt.homology(n - l)
            if src_h.is_trivial() and tgt_h.is_trivial():
                covariant[l] = True
                continue
            covariant[l] = (induced_matrix(src_h, tgt_h, via_target.apply)
                            == induced_matrix(src_h, tgt_h, via_source.apply))
    report["covariant"] = covariant

    contravariant = {}
    for l in range(0, n + 1):
        pull_cols = []
        for t in capY2_src.basis(l):
            pull_cols.append(pullback_cochain(f, {t: ring.one()}, ring))
        pull = Matrix.from_columns(ring, capX2_src.basis(l),
                                   capY2_src.basis(l), pull_cols)
        up = _cosheaf_transfer_matrix(f, cert, GX, GY, capY2_tgt, capX2_tgt,
                                      n - l, ring)
        via_source = capX2[l] @ pull
        via_target = up @ capY2[l]
        if orientation:
            contravariant[l] = (via_source - via_target).is_zero()
        else:
            src_h = capY2_src.homology(l)
            tgt_h = capX2_tgt.homology(n - l)
            if src_h.is_trivial() and tgt_h.is_trivial():
                contravariant[l] = True
                continue
            contravariant[l] = (induced_matrix(src_h, tgt_h, via_source.apply)
                                == induced_matrix(src_h, tgt_h, via_target.apply))
    report["contravariant"] = contravariant
    report["ok"] = (report["fundamental_class_transfers"]
                    and all(covariant.values())
                    and all(contravariant.values()))
    return report
