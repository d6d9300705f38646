"""Chain complexes over exact rings and homology presentations via SNF."""

from .matrices import (Matrix, hstack, kernel_basis, smith_normal_form, solve,
                       vec_clean, vec_is_zero, vec_sub)


class ChainComplex:
    """A finitely generated complex of free modules with labelled bases.

    spaces: dict degree -> tuple of basis labels.
    diffs: dict degree -> Matrix from spaces[degree] to spaces[degree + shift].
    shift is -1 for homological (boundary) and +1 for cohomological complexes.
    """

    def __init__(self, ring, spaces, diffs, shift=-1, check=True):
        self.ring = ring
        self.spaces = {d: tuple(b) for d, b in spaces.items() if len(b) > 0}
        self.diffs = dict(diffs)
        self.shift = shift
        if check:
            self.check_complex()

    def degrees(self):
        return sorted(self.spaces)

    def basis(self, deg):
        return self.spaces.get(deg, ())

    def differential(self, deg):
        if deg in self.diffs:
            return self.diffs[deg]
        return Matrix.zero(self.ring, self.basis(deg + self.shift), self.basis(deg))

    def check_complex(self):
        for deg, m in self.diffs.items():
            if tuple(m.col_labels) != self.basis(deg):
                raise ValueError(f"differential at {deg}: wrong source basis")
            if tuple(m.row_labels) != self.basis(deg + self.shift):
                raise ValueError(f"differential at {deg}: wrong target basis")
        for deg in self.degrees():
            first = self.differential(deg)
            second = self.differential(deg + self.shift)
            if first.shape[0] and first.shape[1]:
                if not (second @ first).is_zero():
                    raise ValueError(f"d∘d != 0 at degree {deg}")

    def homology(self, deg):
        d_out = self.differential(deg)
        d_in = self.differential(deg - self.shift)
        return HomologyPresentation(self.ring, self.basis(deg), d_out, d_in)


class HomologyPresentation:
    """ker(d_out)/im(d_in) presented with invariant factors and cycle basis.

    Generators are ordered: torsion generators (orders in `torsion`, each
    dividing the next) followed by `free_rank` free generators. coordinates()
    expresses any cycle exactly in this presentation.
    """

    def __init__(self, ring, ambient, d_out, d_in):
        self.ring = ring
        self.ambient = tuple(ambient)
        kvecs = []
        if len(self.ambient) > 0:
            kvecs = kernel_basis(d_out)
        self._klabels = tuple(range(len(kvecs)))
        self._K = Matrix.from_columns(ring, self.ambient, self._klabels, kvecs)
        self._Ksnf = smith_normal_form(self._K) if kvecs else None
        in_cols = [d_in.column(c) for c in d_in.col_labels]
        ycols = []
        for j, b in enumerate(in_cols):
            if vec_is_zero(ring, b):
                ycols.append({})
                continue
            y = solve(self._K, b, self._Ksnf)
            if y is None:
                raise ValueError("incoming boundary is not a cycle (d∘d != 0?)")
            ycols.append(y)
        ylabels = tuple(range(len(ycols)))
        Y = Matrix.from_columns(ring, self._klabels, ylabels, ycols)
        self._Ysnf = smith_normal_form(Y)
        divisors = self._Ysnf.diagonals
        self._positions = []  # (kernel-coord index, order or None)
        self.torsion = []
        for i, d in enumerate(divisors):
            if not ring.is_unit(d):
                self._positions.append((i, d))
                self.torsion.append(d)
        for i in range(len(divisors), len(self._klabels)):
            self._positions.append((i, None))
        self.free_rank = len(self._klabels) - len(divisors)
        self.gens = []
        for i, _ in self._positions:
            col = self._Ysnf.Uinv.column(self._klabels[i])
            self.gens.append(vec_clean(ring, self._K.apply(col)))

    @property
    def rank_summary(self):
        return (self.free_rank, list(self.torsion))

    def __len__(self):
        return len(self.gens)

    def is_trivial(self):
        return self.free_rank == 0 and not self.torsion

    def is_cycle(self, chain):
        if vec_is_zero(self.ring, chain):
            return True
        if self._Ksnf is None:
            return False
        return solve(self._K, chain, self._Ksnf) is not None

    def coordinates(self, chain):
        """Coordinates of a cycle in the presentation (torsion coords reduced)."""
        ring = self.ring
        chain = vec_clean(ring, chain)
        if not chain:
            return [ring.zero()] * len(self.gens)
        y = solve(self._K, chain, self._Ksnf) if self._Ksnf is not None else None
        if y is None:
            raise ValueError("chain is not a cycle")
        z = self._Ysnf.U.apply(y)
        out = []
        for i, order in self._positions:
            zi = z.get(self._klabels[i], ring.zero())
            if order is not None:
                zi = ring.divmod(zi, order)[1]
                # normalize representative for determinism (integers: 0 <= r < d)
                if hasattr(zi, "__mod__") and not ring.is_field:
                    zi = zi % order
            out.append(zi)
        return out

    def is_zero_class(self, chain):
        return all(self.ring.is_zero(c) for c in self.coordinates(chain))

    def same_type(self, other):
        return (self.free_rank == other.free_rank
                and list(self.torsion) == list(other.torsion))


def induced_matrix(src, tgt, image_fn):
    """Matrix of the induced map on homology presentations.

    image_fn maps a chain in src's ambient basis to a chain in tgt's ambient
    basis; it must send src's generating cycles to cycles of tgt.  Raises if
    the assignment is not well defined on the quotient presentations.
    """
    ring = src.ring
    cols = []
    for j, g in enumerate(src.gens):
        img = image_fn(g)
        coords = tgt.coordinates(img)
        order = src._positions[j][1]
        if order is not None:
            scaled = tgt.coordinates(vec_clean(ring, {k: ring.mul(order, v)
                                                      for k, v in img.items()}))
            if not all(ring.is_zero(c) for c in scaled):
                raise ValueError("induced map not well defined on torsion generator")
        cols.append({i: c for i, c in enumerate(coords) if not ring.is_zero(c)})
    rows = tuple(range(len(tgt.gens)))
    return Matrix.from_columns(ring, rows, tuple(range(len(src.gens))), cols)


def _relation_matrix(ring, pres, tag):
    rows = tuple(range(len(pres.gens)))
    cols = []
    entries = {}
    for j, (_, order) in enumerate(pres._positions):
        if order is not None:
            cols.append((tag, j))
            entries[(j, (tag, j))] = order
    return Matrix(ring, rows, tuple(cols), entries)


def is_isomorphism(src, tgt, matrix):
    """Exact bijectivity test for a map of f.g. modules given by `matrix`
    between the generator sets of two presentations."""
    ring = src.ring
    rel_src = _relation_matrix(ring, src, "rs")
    rel_tgt = _relation_matrix(ring, tgt, "rt")
    rows = tuple(range(len(tgt.gens)))
    big = hstack(ring, rows, [matrix, rel_tgt])
    s = smith_normal_form(big)
    surjective = (s.rank == len(rows)) and all(ring.is_unit(d) for d in s.diagonals)
    if not surjective:
        return False
    injective = True
    for kv in kernel_basis(big, s):
        xpart = {}
        for (i, lbl), v in kv.items():
            if i == 0:
                xpart[lbl] = v
        # x lies in ker(matrix mod relations); must come from src relations
        for j, (_, order) in enumerate(src._positions):
            v = xpart.get(j, ring.zero())
            if order is None:
                if not ring.is_zero(v):
                    injective = False
            else:
                if not ring.divides(order, v):
                    injective = False
    return injective


def induced_map_on_homology(fs, source, target, deg):
    """Given chain-map matrices fs[deg], assert the chain-map
    identity at `deg` and return (matrix on homology, is_isomorphism)."""
    f = fs[deg]
    shift = source.shift
    f_next = fs.get(deg + shift)
    if f_next is None:
        f_next = Matrix.zero(source.ring, target.basis(deg + shift),
                             source.basis(deg + shift))
    lhs = target.differential(deg) @ f
    rhs = f_next @ source.differential(deg)
    if not (lhs - rhs).is_zero():
        raise ValueError(f"not a chain map at degree {deg}")
    src = source.homology(deg)
    tgt = target.homology(deg)
    m = induced_matrix(src, tgt, f.apply)
    return m, is_isomorphism(src, tgt, m)
