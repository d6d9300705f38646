"""Local homology and cohomology at a simplex, assembled into a sheaf/cosheaf.

The local chain complex at a simplex s is the relative complex of the pair
(X, X minus the open star of s): its degree-k basis is the set of generators
(s, a) for k-simplices a containing s, and the boundary drops faces that no
longer contain s.  The top local homology stalks form a sheaf (generator rule
(s, a) -> (t, a), killed when t is not a face of a); the top local cohomology
stalks, presented as cokernels of the local coboundary, form a cosheaf.
"""

from .homology import ChainComplex
from .matrices import Matrix, smith_normal_form, solve, vec_clean
from .sheaves import Sheaf, Cosheaf, simplicial_chain_complex


def local_complex(X, ring, simplex):
    """Chain complex with degree-k basis {(s, a): a in X_k, a contains s}."""
    simplex = tuple(simplex)
    cache = X.__dict__.setdefault("_local_complex_cache", {})
    key = (ring.name, simplex)
    if key in cache:
        return cache[key]
    if not simplex:
        raise ValueError("empty simplex: use reduced_homology instead")
    if not X.contains(simplex):
        raise ValueError(f"{simplex!r} not in complex")
    s = set(simplex)
    spaces = {}
    for k in range(len(simplex) - 1, X.dim + 1):
        spaces[k] = tuple((simplex, a) for a in X.simplices(k) if s.issubset(a))
    diffs = {}
    for k in sorted(spaces):
        src = spaces[k]
        tgtset = set(spaces.get(k - 1, ()))
        entries = {}
        for (_, a) in src:
            for j in range(len(a)):
                f = a[:j] + a[j + 1:]
                if (simplex, f) in tgtset:
                    entries[((simplex, f), (simplex, a))] = ring.from_int((-1) ** j)
        if src:
            diffs[k] = Matrix(ring, spaces.get(k - 1, ()), src, entries)
    cx = ChainComplex(ring, spaces, diffs, shift=-1)
    cache[key] = cx
    return cx


def local_cochain_complex(X, ring, simplex):
    """Evaluation dual of the local chain complex (same labels, transposed
    differentials, shift +1)."""
    cx = local_complex(X, ring, simplex)
    spaces = dict(cx.spaces)
    diffs = {}
    for k in cx.spaces:
        d = cx.differential(k + 1)
        if d.shape[0] and d.shape[1]:
            diffs[k] = d.transpose()
    return ChainComplex(ring, spaces, diffs, shift=+1)


def local_homology(X, ring, simplex, k):
    return local_complex(X, ring, simplex).homology(k)


def local_cohomology(X, ring, simplex, k):
    return local_cochain_complex(X, ring, simplex).homology(k)


def reduced_homology(X, ring):
    """Graded presentations of the augmented simplicial chain complex."""
    cx = simplicial_chain_complex(X, ring, reduced=True)
    return {k: cx.homology(k) for k in range(-1, X.dim + 1)}


def link_crosscheck(X, ring, simplex):
    """True iff h_i(s) matches the reduced homology of the link shifted by
    dim s + 1, as free rank + torsion, in every degree."""
    simplex = tuple(simplex)
    l = len(simplex) - 1
    lk = X.link_complex(simplex)
    lk_h = reduced_homology(lk, ring)
    for i in range(-1, X.dim + 1):
        left = local_homology(X, ring, simplex, i) if i >= 0 else None
        right = lk_h.get(i - l - 1)
        lsum = left.rank_summary if left is not None else (0, [])
        rsum = right.rank_summary if right is not None else (0, [])
        if lsum != rsum:
            return False
    return True


def cm_check(X, L, n, ring):
    """Cohen-Macaulay report for the pair (X, L) in target degree n.

    locally_cm_at_L: local homology concentrated in degree n at every simplex
    of L; locally_cm: same at every simplex of X; cm: locally_cm plus reduced
    homology concentrated in degree n; pure: every maximal simplex has
    dimension n.  witnesses lists each failing (simplex, degree, presentation).
    """
    witnesses = []
    locally_cm_at_L = True
    locally_cm = True
    for s in X.all_simplices():
        in_L = L is None or L.contains(s)
        for k in range(0, X.dim + 1):
            if k == n:
                continue
            h = local_homology(X, ring, s, k)
            if not h.is_trivial():
                witnesses.append((s, k, h.rank_summary))
                locally_cm = False
                if in_L:
                    locally_cm_at_L = False
    red = reduced_homology(X, ring)
    reduced_ok = all(red[k].is_trivial() for k in red if k != n)
    pure = all(len(m) - 1 == n for m in X.maximal_simplices())
    return {
        "n": n,
        "ring": ring.name,
        "locally_cm_at_L": locally_cm_at_L,
        "locally_cm": locally_cm,
        "cm": locally_cm and reduced_ok,
        "reduced_concentrated": reduced_ok,
        "pure": pure,
        "witnesses": witnesses,
    }


class CokerPresentation:
    """Cokernel of a matrix into a labelled free module, via Smith normal form.

    Generators are the non-unit invariant-factor positions (torsion, with
    orders) followed by the positions beyond the rank (free).  project() sends
    an ambient vector to its generator coordinates; lift(j) returns an ambient
    representative of generator j.
    """

    def __init__(self, ring, ambient, relations):
        self.ring = ring
        self.ambient = tuple(ambient)
        self._snf = smith_normal_form(relations)
        self.positions = []
        for i, d in enumerate(self._snf.diagonals):
            if not ring.is_unit(d):
                self.positions.append((i, d))
        for i in range(len(self._snf.diagonals), len(self.ambient)):
            self.positions.append((i, None))
        self.torsion = [d for _, d in self.positions if d is not None]
        self.free_rank = sum(1 for _, d in self.positions if d is None)

    @property
    def rank_summary(self):
        return (self.free_rank, list(self.torsion))

    def __len__(self):
        return len(self.positions)

    def is_trivial(self):
        return not self.positions

    def project(self, vec):
        ring = self.ring
        z = self._snf.U.apply(vec)
        out = []
        for i, order in self.positions:
            zi = z.get(self.ambient[i], ring.zero())
            if order is not None:
                zi = ring.divmod(zi, order)[1]
                if hasattr(zi, "__mod__") and not ring.is_field:
                    zi = zi % order
            out.append(zi)
        return out

    def lift(self, j):
        i, _ = self.positions[j]
        return vec_clean(self.ring, self._snf.Uinv.column(self.ambient[i]))


class LocalHomologySheaf(Sheaf):
    """Top local homology as a combinatorial sheaf.

    The stalk at s is the cycle module ker(boundary) in top local degree n,
    stored with an explicit basis; the restriction along s < t relabels
    (s, a) -> (t, a), kills generators whose carrier a does not contain t,
    and re-expresses the result in the target cycle basis.
    """

    def __init__(self, ring, X, n):
        super().__init__(ring, X)
        self.n = n
        self._data = {}

    def _stalk_data(self, simplex):
        simplex = tuple(simplex)
        if simplex not in self._data:
            cx = local_complex(self.X, self.ring, simplex)
            pres = cx.homology(self.n)
            ambient = cx.basis(self.n)
            K = pres._K
            self._data[simplex] = (ambient, K, pres._Ksnf, pres)
        return self._data[simplex]

    def stalk(self, simplex):
        _, K, _, _ = self._stalk_data(simplex)
        return K.col_labels

    def presentation(self, simplex):
        return self._stalk_data(tuple(simplex))[3]

    def cycle(self, simplex, label):
        """The ambient cycle carried by a stalk basis label."""
        _, K, _, _ = self._stalk_data(simplex)
        return K.column(label)

    def push_chain(self, simplex, cosimplex, chain):
        """Generator rule on an ambient chain: (s, a) -> (t, a), kill t != face
        of a."""
        t = set(cosimplex)
        out = {}
        for (_, a), v in chain.items():
            if t.issubset(a):
                out[(tuple(cosimplex), a)] = v
        return vec_clean(self.ring, out)

    def restriction_step(self, simplex, cosimplex):
        ring = self.ring
        src = self.stalk(simplex)
        _, Kt, Ktsnf, _ = self._stalk_data(tuple(cosimplex))
        cols = []
        for lbl in src:
            img = self.push_chain(simplex, cosimplex, self.cycle(simplex, lbl))
            if not img:
                cols.append({})
                continue
            y = solve(Kt, img, Ktsnf)
            if y is None:
                raise ValueError(
                    f"restriction image at {simplex}<{tuple(cosimplex)} is not a cycle")
            cols.append(y)
        return Matrix.from_columns(ring, Kt.col_labels, src, cols)


class LocalCohomologyCosheaf(Cosheaf):
    """Top local cohomology as a combinatorial cosheaf.

    The stalk at s is the cokernel of the local coboundary into top degree n;
    the corestriction along t > s lifts a stalk generator to a cochain on
    (s, a)-generators via (t, a) -> (s, a) and projects into the target
    cokernel presentation.  Stalk bases are honest module bases whenever the
    stalks are free (the locally Cohen-Macaulay case used for duality).
    """

    def __init__(self, ring, X, n):
        super().__init__(ring, X)
        self.n = n
        self._data = {}

    def _stalk_data(self, simplex):
        simplex = tuple(simplex)
        if simplex not in self._data:
            cx = local_cochain_complex(self.X, self.ring, simplex)
            ambient = cx.basis(self.n)
            rel = cx.differential(self.n - 1)
            self._data[simplex] = (ambient, CokerPresentation(self.ring, ambient, rel))
        return self._data[simplex]

    def presentation(self, simplex):
        return self._stalk_data(tuple(simplex))[1]

    def stalk(self, simplex):
        return tuple(range(len(self.presentation(simplex))))

    def corestriction_step(self, cosimplex, simplex):
        ring = self.ring
        pres_t = self.presentation(cosimplex)
        pres_s = self.presentation(simplex)
        cols = []
        for j in range(len(pres_t)):
            rep = self.push_cochain(cosimplex, simplex, pres_t.lift(j))
            cols.append({i: c for i, c in enumerate(pres_s.project(rep))
                         if not ring.is_zero(c)})
        return Matrix.from_columns(ring, tuple(range(len(pres_s))),
                                   tuple(range(len(pres_t))), cols)

    def push_cochain(self, cosimplex, simplex, cochain):
        """Inclusion of local cochains at t into local cochains at its face s:
        relabel (t, a) -> (s, a) (every carrier of t also carries s)."""
        s = tuple(simplex)
        return {(s, a): v for (_, a), v in cochain.items()}


def build_h_sheaf(X, ring, n):
    return LocalHomologySheaf(ring, X, n)


def build_h_cosheaf(X, ring, n):
    return LocalCohomologyCosheaf(ring, X, n)


def uct_report(X, ring, simplex, n):
    """Evaluation pairing between top local cohomology and the dual of top
    local homology at one simplex: both must be free of equal rank with a
    unimodular pairing matrix."""
    simplex = tuple(simplex)
    concentrated = all(
        local_homology(X, ring, simplex, k).is_trivial()
        for k in range(0, X.dim + 1) if k != n)
    sheaf = LocalHomologySheaf(ring, X, n)
    cosheaf = LocalCohomologyCosheaf(ring, X, n)
    cycles = [sheaf.cycle(simplex, lbl) for lbl in sheaf.stalk(simplex)]
    pres = cosheaf.presentation(simplex)
    ring_ = ring
    rows = tuple(range(len(pres)))
    cols = tuple(range(len(cycles)))
    entries = {}
    for i in rows:
        lift = pres.lift(i)
        for j, z in enumerate(cycles):
            val = ring_.zero()
            for lab, v in lift.items():
                if lab in z:
                    val = ring_.add(val, ring_.mul(v, z[lab]))
            if not ring_.is_zero(val):
                entries[(i, j)] = val
    pairing = Matrix(ring_, rows, cols, entries)
    s = smith_normal_form(pairing)
    unimodular = (s.rank == len(rows) == len(cols)
                  and all(ring_.is_unit(d) for d in s.diagonals))
    ok = (concentrated and not pres.torsion
          and len(cycles) == pres.free_rank and unimodular)
    return {
        "simplex": simplex,
        "locally_cm_here": concentrated,
        "h_rank": len(cycles),
        "h_dual_summary": pres.rank_summary,
        "pairing_unimodular": unimodular,
        "ok": ok,
    }


def uct_check(X, ring, simplex, n):
    return uct_report(X, ring, simplex, n)["ok"]
