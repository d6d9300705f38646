"""Finite oriented simplicial complexes and simplex combinatorics.

A complex carries a global total order on its vertices; every simplex is the
tuple of its vertices sorted by that order, and all face/front/back indexing
refers to positions in the tuple.  Simplices are plain tuples of vertex
labels; the empty simplex is ().
"""


def _default_key(v):
    return (0, v, "") if isinstance(v, int) else (1, 0, str(v))


def perm_sign(seq, key):
    """Sign of the permutation sorting seq by key (seq has distinct entries)."""
    sign = 1
    items = list(seq)
    n = len(items)
    for i in range(n):
        for j in range(i + 1, n):
            if key(items[i]) > key(items[j]):
                sign = -sign
    return sign


class SimplicialComplex:
    def __init__(self, maximal_simplices, order=None):
        vertices = set()
        closed = set()
        for s in maximal_simplices:
            s = tuple(s)
            if len(set(s)) != len(s):
                raise ValueError(f"duplicate vertices in simplex {s!r}")
            vertices.update(s)
            for sub in _subsets(s):
                closed.add(frozenset(sub))
        if order is None:
            order = sorted(vertices, key=_default_key)
        self.order = tuple(order)
        if len(set(self.order)) != len(self.order):
            raise ValueError("duplicate vertices in order")
        unknown = vertices - set(self.order)
        if unknown:
            raise ValueError(f"vertices missing from order: {sorted(map(str, unknown))}")
        self.pos = {v: i for i, v in enumerate(self.order)}
        self._simplices = set()
        self.by_dim = {}
        for fs in closed:
            if not fs:
                continue
            tup = tuple(sorted(fs, key=self.pos.__getitem__))
            self._simplices.add(tup)
            self.by_dim.setdefault(len(tup) - 1, []).append(tup)
        for k in self.by_dim:
            self.by_dim[k].sort(key=lambda s: tuple(self.pos[v] for v in s))
        self.dim = max(self.by_dim, default=-1)
        self._coface_cache = None

    # -- basic access ------------------------------------------------------
    def vertices(self):
        return tuple(v for v in self.order if (v,) in self._simplices)

    def canon(self, vs):
        vs = list(vs)
        if len(set(vs)) != len(vs):
            raise ValueError(f"duplicate vertices in {vs!r}")
        return tuple(sorted(vs, key=self.pos.__getitem__))

    def contains(self, simplex):
        return tuple(simplex) in self._simplices

    def simplices(self, k):
        return tuple(self.by_dim.get(k, ()))

    def all_simplices(self):
        for k in sorted(self.by_dim):
            yield from self.by_dim[k]

    def maximal_simplices(self):
        out = []
        for s in self.all_simplices():
            if not self.cofaces(s):
                out.append(s)
        return out

    # -- Notation 2.1 combinatorics ---------------------------------------
    def face(self, simplex, j):
        return simplex[:j] + simplex[j + 1:]

    def front(self, simplex, j):
        return simplex[:j + 1]

    def back(self, simplex, j):
        return simplex[j:]

    def face_parts(self, simplex, j):
        if not (0 <= j <= len(simplex) - 1):
            raise IndexError(f"face index {j} out of range for {simplex!r}")
        return (self.face(simplex, j), self.front(simplex, j), self.back(simplex, j))

    def boundary_faces(self, simplex):
        return [(j, self.face(simplex, j)) for j in range(len(simplex))]

    def cofaces(self, simplex):
        """Simplices one dimension up containing `simplex`."""
        if self._coface_cache is None:
            cache = {s: [] for s in self._simplices}
            for s in self._simplices:
                for j in range(len(s)):
                    f = self.face(s, j)
                    if f:
                        cache[f].append(s)
            for lst in cache.values():
                lst.sort(key=lambda s: tuple(self.pos[v] for v in s))
            self._coface_cache = cache
        return tuple(self._coface_cache.get(tuple(simplex), ()))

    def internal_join(self, s, t):
        """Join inside the complex: simplex on the union of the vertex sets, or
        None when degenerate or when the union does not span a simplex."""
        merged = set(s) | set(t)
        if len(merged) != len(s) + len(t):
            return None
        tup = tuple(sorted(merged, key=self.pos.__getitem__))
        return tup if tup in self._simplices or tup == () else None

    def open_star(self, simplex):
        s = set(simplex)
        return tuple(a for a in self.all_simplices() if s.issubset(a))

    def star(self, simplex):
        """Closed star: all faces of simplices containing `simplex`."""
        out = set()
        for a in self.open_star(simplex):
            for sub in _subsets(a):
                if sub:
                    out.add(self.canon(sub))
        return frozenset(out)

    def link(self, simplex):
        s = set(simplex)
        return frozenset(t for t in self.star(simplex) if not s & set(t))

    def link_complex(self, simplex):
        lk = self.link(simplex)
        sub_order = tuple(v for v in self.order if any(v in t for t in lk))
        return SimplicialComplex(lk, order=sub_order)

    def complement_of_open_star(self, simplex):
        """The complex X - st̊σ: all simplices not containing σ."""
        s = set(simplex)
        kept = [a for a in self.all_simplices() if not s.issubset(a)]
        return SimplicialComplex(kept, order=self.order)

    def star_link_complement(self, simplex):
        if not self.contains(simplex):
            raise ValueError(f"{simplex!r} not in complex")
        return (self.star(simplex), self.link(simplex),
                self.complement_of_open_star(simplex))

    # -- orientation -------------------------------------------------------
    def with_order(self, new_order):
        return SimplicialComplex(list(self._simplices), order=new_order)

    def sign_relative_to(self, simplex, other):
        """Sign of the vertex permutation of `simplex` (canonical here) when
        re-sorted by the order of the complex `other`."""
        return perm_sign(simplex, other.pos.__getitem__)

    def full_subcomplex(self, vertex_set):
        return Subcomplex(self, vertex_set)

    def __repr__(self):
        counts = [len(self.by_dim.get(k, ())) for k in range(self.dim + 1)]
        return f"SimplicialComplex(dim={self.dim}, counts={counts})"


class Subcomplex:
    """Full subcomplex spanned by a vertex subset."""

    def __init__(self, parent, vertex_set):
        self.parent = parent
        self.vertex_set = frozenset(vertex_set)
        unknown = self.vertex_set - set(parent.order)
        if unknown:
            raise ValueError(f"unknown vertices {sorted(map(str, unknown))}")

    def contains(self, simplex):
        return (self.parent.contains(simplex)
                and all(v in self.vertex_set for v in simplex))

    def simplices(self, k):
        return tuple(s for s in self.parent.simplices(k) if self.contains(s))

    def all_simplices(self):
        for s in self.parent.all_simplices():
            if self.contains(s):
                yield s

    def vertices(self):
        return tuple(v for v in self.parent.order if v in self.vertex_set
                     and (v,) in self.parent._simplices)

    def as_complex(self):
        sub_order = tuple(v for v in self.parent.order if v in self.vertex_set)
        return SimplicialComplex(list(self.all_simplices()), order=sub_order)

    def vertex_complement(self):
        rest = [v for v in self.parent.order if v not in self.vertex_set]
        return Subcomplex(self.parent, rest)

    def __repr__(self):
        return f"Subcomplex({sorted(map(str, self.vertex_set))})"


def face_parts(simplex, j, X):
    return X.face_parts(simplex, j)


def internal_join(s, t, X):
    return X.internal_join(s, t)


def star_link_complement(simplex, X):
    return X.star_link_complement(simplex)


def vertex_complement(L):
    return L.vertex_complement()


def orient_vc_before(X, L):
    """Total order placing the vertices of L^vc before those of L (stable)."""
    inside = set(L.vertex_set)
    return tuple([v for v in X.order if v not in inside]
                 + [v for v in X.order if v in inside])


def is_vc_before(X, L):
    inside = set(L.vertex_set)
    seen_inside = False
    for v in X.order:
        if v in inside:
            seen_inside = True
        elif seen_inside:
            return False
    return True


def reorient_vc_before(X, L):
    """(X', L') with the same simplices and an L^vc-before-L vertex order."""
    order = orient_vc_before(X, L)
    X2 = X.with_order(order)
    return X2, Subcomplex(X2, L.vertex_set)


def _subsets(s):
    out = [()]
    for v in s:
        out += [t + (v,) for t in out]
    return out


# -- file format --------------------------------------------------------------

def _parse_token(tok):
    try:
        return int(tok)
    except ValueError:
        return tok


def parse_complex(text):
    """Complex file: optional `order: v1 v2 ...` line, then `simplex: v1 v2 ...`
    lines listing maximal simplices; `#` starts a comment."""
    order = None
    maximal = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("order:"):
            order = [_parse_token(t) for t in line[len("order:"):].split()]
        elif line.startswith("simplex:"):
            verts = [_parse_token(t) for t in line[len("simplex:"):].split()]
            if len(set(verts)) != len(verts):
                raise ValueError(f"duplicate vertices in line {raw!r}")
            maximal.append(verts)
        else:
            raise ValueError(f"unrecognized line {raw!r}")
    if order is not None:
        known = set(order)
        for s in maximal:
            for v in s:
                if v not in known:
                    raise ValueError(f"vertex {v!r} missing from order header")
    return SimplicialComplex(maximal, order=order)


def serialize_complex(X):
    lines = ["order: " + " ".join(str(v) for v in X.order)]
    for s in X.maximal_simplices():
        lines.append("simplex: " + " ".join(str(v) for v in s))
    return "\n".join(lines) + "\n"


def parse_subcomplex(text, X):
    """Subcomplex file: `vertices: v1 v2 ...` (whitespace/newline separated)."""
    verts = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vertices:"):
            verts += [_parse_token(t) for t in line[len("vertices:"):].split()]
        else:
            raise ValueError(f"unrecognized line {raw!r}")
    return Subcomplex(X, verts)
