"""Pure combinatorial simplicial complexes.

A simplex is a strictly increasing tuple of non-negative vertex ids.  A
complex stores its simplices per dimension and is closed under taking
faces.  Following the usual convention, loops (repeated vertices) and
multiple simplices on the same vertex set are forbidden.

Complexes are immutable after construction; all query operations are
pure and safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, Sequence

Simplex = tuple[int, ...]


class ComplexError(Exception):
    """Base class for combinatorial errors."""


class DegenerateSimplex(ComplexError):
    """A simplex with a repeated vertex."""


class DuplicateSimplex(ComplexError):
    """Two input simplices span the same vertex set."""


class SimplexNotFound(ComplexError):
    """The requested simplex is not in the complex."""


class NotPure(ComplexError):
    """The complex is not pure of the expected dimension."""


class NonPseudomanifold(ComplexError):
    """Some codimension-1 simplex lies in three or more facets."""


class BadLink(ComplexError):
    """An interior codimension-2 simplex whose link is not a single cycle."""

    def __init__(self, simplex: Simplex, reason: str = ""):
        self.simplex = simplex
        super().__init__(f"link of {simplex} is not a single cycle {reason}".rstrip())


class CliqueTooLarge(ComplexError):
    """Edge data contains a 5-clique, which a 3-dimensional flag complex forbids."""


def as_simplex(vertices: Iterable[int]) -> Simplex:
    """Normalize vertices to a strictly increasing tuple."""
    s = tuple(sorted(vertices))
    for i in range(1, len(s)):
        if s[i] == s[i - 1]:
            raise DegenerateSimplex(f"repeated vertex in {s}")
    if s and s[0] < 0:
        raise DegenerateSimplex(f"negative vertex id in {s}")
    return s


class SimplicialComplex:
    """Finite simplicial complex, closed under faces.

    ``faces[d]`` is a frozenset of the d-simplices.  The empty complex
    has ``dim == -1``.  Vertex ids need not be dense: subcomplexes such
    as boundaries keep the labels of their parent.
    """

    __slots__ = ("faces", "_neighbors", "_cofacets")

    def __init__(self, faces: Sequence[frozenset]):
        # trusted constructor: `faces` must already be closed under faces
        while faces and not faces[-1]:
            faces = faces[:-1]
        self.faces: tuple[frozenset, ...] = tuple(frozenset(f) for f in faces)
        self._neighbors = None
        self._cofacets = None

    # -- basic queries -------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.faces) - 1

    def simplices(self, d: int) -> list[Simplex]:
        """Sorted list of d-simplices (empty outside 0..dim)."""
        if 0 <= d <= self.dim:
            return sorted(self.faces[d])
        return []

    def all_simplices(self):
        for fs in self.faces:
            yield from fs

    def __contains__(self, simplex) -> bool:
        s = tuple(simplex)
        d = len(s) - 1
        return 0 <= d <= self.dim and s in self.faces[d]

    @property
    def vertices(self) -> tuple[int, ...]:
        if self.dim < 0:
            return ()
        return tuple(v for (v,) in sorted(self.faces[0]))

    @property
    def n_vertices(self) -> int:
        return len(self.faces[0]) if self.dim >= 0 else 0

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(fs) for fs in self.faces)

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * len(fs) for d, fs in enumerate(self.faces))

    def is_pure(self, d: int | None = None) -> bool:
        """True if every maximal simplex has dimension d (default: dim)."""
        if self.dim < 0:
            return True
        d = self.dim if d is None else d
        if self.dim != d:
            return False
        return all(m in self.faces[d] for m in self.maximal_simplices())

    def maximal_simplices(self) -> list[Simplex]:
        out = []
        for d in range(self.dim, -1, -1):
            cof = self.cofacets()
            out.extend(s for s in self.faces[d] if d == self.dim or not cof[s])
        return sorted(out, key=lambda s: (len(s), s))

    def neighbors(self, v: int) -> frozenset:
        return self.adjacency().get(v, frozenset())

    def adjacency(self) -> Mapping[int, frozenset]:
        if self._neighbors is None:
            nbr: dict[int, set[int]] = {v: set() for (v,) in (self.faces[0] if self.dim >= 0 else ())}
            if self.dim >= 1:
                for (u, v) in self.faces[1]:
                    nbr[u].add(v)
                    nbr[v].add(u)
            self._neighbors = {v: frozenset(s) for v, s in nbr.items()}
        return self._neighbors

    def cofacets(self) -> Mapping[Simplex, tuple[Simplex, ...]]:
        """Incidence index: each simplex -> the simplices one dimension up containing it."""
        if self._cofacets is None:
            idx: dict[Simplex, list[Simplex]] = {s: [] for s in self.all_simplices()}
            for d in range(1, self.dim + 1):
                for s in self.faces[d]:
                    for f in combinations(s, d):
                        idx[f].append(s)
            self._cofacets = {s: tuple(sorted(c)) for s, c in idx.items()}
        return self._cofacets

    def star_simplices(self, simplex: Simplex):
        """All simplices of the complex containing `simplex` (including itself)."""
        s = tuple(simplex)
        if s not in self:
            raise SimplexNotFound(f"{s} not in complex")
        cof = self.cofacets()
        seen = {s}
        frontier = [s]
        while frontier:
            nxt = []
            for t in frontier:
                for c in cof[t]:
                    if c not in seen:
                        seen.add(c)
                        nxt.append(c)
            frontier = nxt
        return seen

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self.faces == other.faces

    def __hash__(self):
        return hash(self.faces)

    def __repr__(self):
        return f"SimplicialComplex(f={self.f_vector()})"


EMPTY_COMPLEX = SimplicialComplex(())


def _close_faces(simplices: Iterable[Simplex]) -> list[set]:
    """Face closure of a set of simplices, grouped by dimension."""
    by_dim: list[set] = []
    for s in simplices:
        d = len(s) - 1
        while len(by_dim) <= d:
            by_dim.append(set())
        by_dim[d].add(s)
    for d in range(len(by_dim) - 1, 0, -1):
        lower = by_dim[d - 1]
        for s in by_dim[d]:
            lower.update(combinations(s, d))
    return by_dim


def build_complex(maximal_simplices: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Build a complex from its maximal simplices.

    Computes the face closure and the incidence index.  Raises
    DegenerateSimplex on repeated vertices and DuplicateSimplex when two
    input simplices span the same vertex set.  Inputs that happen to be
    faces of other inputs are tolerated (they are absorbed by closure).
    """
    normalized: list[Simplex] = []
    seen: set[Simplex] = set()
    for raw in maximal_simplices:
        s = as_simplex(raw)
        if not s:
            raise DegenerateSimplex("empty simplex in input")
        if s in seen:
            raise DuplicateSimplex(f"simplex {s} given twice")
        seen.add(s)
        normalized.append(s)
    if not normalized:
        raise ComplexError("at least one simplex required")
    return SimplicialComplex([frozenset(fs) for fs in _close_faces(normalized)])


def f_vector(K: SimplicialComplex) -> tuple[int, ...]:
    return K.f_vector()


def euler_characteristic(K: SimplicialComplex) -> int:
    return K.euler_characteristic()


@dataclass(frozen=True)
class LinkResult:
    complex: SimplicialComplex
    to_parent: tuple[int, ...]  # new vertex id -> original vertex id

    def parent_simplex(self, s: Simplex) -> Simplex:
        return tuple(sorted(self.to_parent[v] for v in s))


def link(K: SimplicialComplex, simplex: Iterable[int]) -> LinkResult:
    """Link of a simplex: all tau disjoint from it with tau + simplex in K.

    Vertices are relabeled densely; the relabeling map is returned along
    with the complex.
    """
    s = as_simplex(simplex)
    star = K.star_simplices(s)
    sset = set(s)
    link_faces: set[Simplex] = set()
    for t in star:
        rest = tuple(v for v in t if v not in sset)
        if rest:
            link_faces.add(rest)
    old = sorted({v for t in link_faces for v in t})
    relabel = {v: i for i, v in enumerate(old)}
    by_dim: list[set] = []
    for t in link_faces:
        d = len(t) - 1
        while len(by_dim) <= d:
            by_dim.append(set())
        by_dim[d].add(tuple(relabel[v] for v in t))
    return LinkResult(SimplicialComplex([frozenset(fs) for fs in by_dim]), tuple(old))


def boundary_complex(K: SimplicialComplex) -> SimplicialComplex:
    """Subcomplex generated by the codim-1 simplices lying in exactly one facet.

    Requires K pure.  Raises NonPseudomanifold when some codim-1 simplex
    lies in three or more top simplices.  Vertex labels are inherited
    from K.  The result is empty for a closed pseudomanifold.
    """
    n = K.dim
    if n < 0:
        return EMPTY_COMPLEX
    if not K.is_pure():
        raise NotPure(f"complex with f={K.f_vector()} is not pure")
    if n == 0:
        return EMPTY_COMPLEX
    cof = K.cofacets()
    boundary_facets = []
    for s in K.faces[n - 1]:
        k = len(cof[s])
        if k >= 3:
            raise NonPseudomanifold(f"{s} lies in {k} top simplices")
        if k == 1:
            boundary_facets.append(s)
    if not boundary_facets:
        return EMPTY_COMPLEX
    return SimplicialComplex([frozenset(fs) for fs in _close_faces(boundary_facets)])


def interior_simplices(K: SimplicialComplex, d: int) -> list[Simplex]:
    """d-simplices of K not contained in the boundary complex."""
    bd = boundary_complex(K)
    return [s for s in K.simplices(d) if s not in bd]


def is_flag(K: SimplicialComplex):
    """None if every pairwise-connected vertex set spans a simplex.

    Otherwise returns a minimal witness clique: a vertex tuple whose
    proper subsets all span simplices but which spans none itself.
    """
    if K.dim <= 0:
        return None
    adj = K.adjacency()
    # level d: look for (d+1)-cliques all of whose d-subsets are simplices
    # but which span no d-simplex.  Scanning d upward makes the first hit
    # minimal.
    for d in range(2, K.dim + 2):
        have = K.faces[d] if d <= K.dim else frozenset()
        lower = K.faces[d - 1]
        for s in K.simplices(d - 1):
            common = frozenset.intersection(*(adj[v] for v in s))
            for w in sorted(common):
                if w <= s[-1]:
                    continue
                cand = s + (w,)
                if cand in have:
                    continue
                # facets are all present once level d is reached, so the
                # witness is minimal; re-check defensively anyway
                if all(f in lower for f in combinations(cand, d)):
                    return cand
    return None


def find_empty_square(K: SimplicialComplex):
    """A 4-cycle (a, b, c, d) with no diagonal edge, or None.

    The cycle has edges ab, bc, cd, da while ac and bd are absent.
    """
    if K.dim < 1:
        return None
    adj = K.adjacency()
    verts = K.vertices
    for a in verts:
        na = adj[a]
        for c in verts:
            if c <= a or c in na:
                continue
            common = sorted(na & adj[c])
            if len(common) < 2:
                continue
            for i, b in enumerate(common):
                nb = adj[b]
                for d in common[i + 1:]:
                    if d not in nb:
                        return (a, b, c, d)
    return None


def _is_single_cycle(L: SimplicialComplex) -> int | None:
    """Length of L if it is a single simplicial cycle, else None."""
    if L.dim != 1:
        return None
    nv = L.n_vertices
    ne = len(L.faces[1])
    if nv != ne or nv < 3:
        return None
    adj = L.adjacency()
    if any(len(adj[v]) != 2 for v in L.vertices):
        return None
    # connectivity
    start = L.vertices[0]
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return nv if len(seen) == nv else None


@dataclass(frozen=True)
class RichnessWitness:
    simplex: Simplex
    link_length: int


def is_rich(K: SimplicialComplex):
    """None if every interior codim-2 simplex has link a cycle of length >= 5.

    Returns a RichnessWitness for a short link.  Raises BadLink when an
    interior codim-2 link is not a single cycle (the complex is not
    manifold-like along that simplex), and NotPure when K is not pure.
    """
    n = K.dim
    if n < 2:
        raise NotPure(f"richness needs dimension >= 2, got {n}")
    bd = boundary_complex(K)  # raises NotPure / NonPseudomanifold
    for s in K.simplices(n - 2):
        if s in bd:
            continue
        L = link(K, s).complex
        length = _is_single_cycle(L)
        if length is None:
            raise BadLink(s)
        if length <= 4:
            return RichnessWitness(s, length)
    return None


# -- isomorphism -----------------------------------------------------


def _vertex_colors(K: SimplicialComplex) -> dict:
    """Stable vertex coloring: simplex-degree profile refined WL-style.

    Colors are canonicalized by sorted rank each round, so two complexes
    with equal color multisets produce identical color values.
    """
    verts = K.vertices
    profile = {v: [0] * (K.dim + 1) for v in verts}
    for d in range(K.dim + 1):
        for s in K.faces[d]:
            for v in s:
                profile[v][d] += 1
    color = {v: tuple(profile[v]) for v in verts}
    adj = K.adjacency()
    n_classes = len(set(color.values()))
    for _ in range(len(verts)):
        sig = {
            v: (color[v], tuple(sorted(color[w] for w in adj[v]))) for v in verts
        }
        rank = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        color = {v: rank[sig[v]] for v in verts}
        if len(rank) == n_classes:
            break
        n_classes = len(rank)
    return color


def are_isomorphic(K1: SimplicialComplex, K2: SimplicialComplex):
    """A vertex bijection carrying simplices onto simplices, or None.

    Deterministic backtracking guided by degree/incidence invariants.
    The returned map is a dict old->new applicable to every simplex.
    """
    if K1.f_vector() != K2.f_vector():
        return None
    if K1.dim < 0:
        return {}
    if K1.faces == K2.faces:
        return {v: v for v in K1.vertices}

    c1 = _vertex_colors(K1)
    c2 = _vertex_colors(K2)
    by_color1: dict = {}
    by_color2: dict = {}
    for v, c in c1.items():
        by_color1.setdefault(c, []).append(v)
    for v, c in c2.items():
        by_color2.setdefault(c, []).append(v)
    if set(by_color1) != set(by_color2):
        return None
    if any(len(by_color1[c]) != len(by_color2[c]) for c in by_color1):
        return None

    adj1 = K1.adjacency()
    adj2 = K2.adjacency()
    verts1 = sorted(K1.vertices, key=lambda v: (len(by_color1[c1[v]]), -len(adj1[v]), v))

    # order vertices so that each one touches the already-assigned prefix
    order: list[int] = []
    placed: set[int] = set()
    remaining = list(verts1)
    while remaining:
        nxt = max(
            remaining,
            key=lambda v: (len(adj1[v] & placed), -len(by_color1[c1[v]]), -len(adj1[v]), -v),
        )
        order.append(nxt)
        placed.add(nxt)
        remaining.remove(nxt)

    fwd: dict[int, int] = {}
    used: set[int] = set()

    def candidates(v: int):
        base = [w for w in by_color2[c1[v]] if w not in used]
        out = []
        for w in base:
            ok = True
            for u, fu in fwd.items():
                if (u in adj1[v]) != (fu in adj2[w]):
                    ok = False
                    break
            if ok:
                out.append(w)
        return sorted(out)

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in candidates(v):
            fwd[v] = w
            used.add(w)
            if extend(i + 1):
                return True
            del fwd[v]
            used.remove(w)
        return False

    if not extend(0):
        return None
    # adjacency-preserving bijections might still miss higher simplices
    for d in range(2, K1.dim + 1):
        f2 = K2.faces[d]
        for s in K1.faces[d]:
            if tuple(sorted(fwd[v] for v in s)) not in f2:
                return None
    return dict(fwd)


def complex_from_edges(n_vertices: int, edges: Iterable[tuple[int, int]]) -> SimplicialComplex:
    """Flag completion of a graph, capped at dimension 3.

    Every 3-clique becomes a triangle and every 4-clique a tetrahedron.
    A 5-clique raises CliqueTooLarge since it would contradict flagness
    of a 3-dimensional complex.
    """
    adj: dict[int, set[int]] = {v: set() for v in range(n_vertices)}
    edge_set: set[Simplex] = set()
    for (u, v) in edges:
        e = as_simplex((u, v))
        if len(e) != 2:
            raise DegenerateSimplex(f"bad edge {e}")
        if e[1] >= n_vertices:
            raise ComplexError(f"edge {e} exceeds vertex count {n_vertices}")
        edge_set.add(e)
        adj[e[0]].add(e[1])
        adj[e[1]].add(e[0])
    faces: list[set] = [
        {(v,) for v in range(n_vertices)},
        set(edge_set),
        set(),
        set(),
    ]
    for (u, v) in sorted(edge_set):
        for w in sorted(adj[u] & adj[v]):
            if w > v:
                faces[2].add((u, v, w))
    for (u, v, w) in sorted(faces[2]):
        common = adj[u] & adj[v] & adj[w]
        for x in sorted(common):
            if x > w:
                faces[3].add((u, v, w, x))
    for tet in faces[3]:
        full = adj[tet[0]] & adj[tet[1]] & adj[tet[2]] & adj[tet[3]]
        if full:
            raise CliqueTooLarge(f"{tet} extends to a 5-clique with {sorted(full)[0]}")
    return SimplicialComplex([frozenset(f) for f in faces])


def induced_subcomplex(K: SimplicialComplex, vertex_set: Iterable[int]) -> SimplicialComplex:
    """Full subcomplex of K spanned by a vertex set (labels kept)."""
    vs = set(vertex_set)
    unknown = vs - set(K.vertices)
    if unknown:
        raise SimplexNotFound(f"vertices {sorted(unknown)} not in complex")
    by_dim = []
    for fs in K.faces:
        sel = {s for s in fs if vs.issuperset(s)}
        by_dim.append(frozenset(sel))
    return SimplicialComplex(by_dim)


def cone(K: SimplicialComplex, apex: int | None = None) -> SimplicialComplex:
    """Cone over K: a new apex joined to every simplex."""
    if K.dim < 0:
        raise ComplexError("cannot cone the empty complex")
    if apex is None:
        apex = max(K.vertices) + 1
    elif apex in set(K.vertices):
        raise DuplicateSimplex(f"apex {apex} already a vertex")
    by_dim: list[set] = [set(fs) for fs in K.faces]
    by_dim.append(set())
    by_dim[0].add((apex,))
    for d in range(K.dim + 1):
        for s in K.faces[d]:
            by_dim[d + 1].add(tuple(sorted(s + (apex,))))
    return SimplicialComplex([frozenset(f) for f in by_dim])


def relabel_dense(K: SimplicialComplex):
    """Relabel vertices to 0..n-1; returns (complex, new_id -> old_id)."""
    old = K.vertices
    to_new = {v: i for i, v in enumerate(old)}
    by_dim = [frozenset(tuple(to_new[v] for v in s) for s in fs) for fs in K.faces]
    return SimplicialComplex(by_dim), old


# -- JSON interchange ------------------------------------------------


def complex_to_json_dict(K: SimplicialComplex) -> dict:
    """Canonical JSON form: maximal simplices, sorted, dense vertex ids."""
    if K.dim < 0:
        return {"dim": -1, "n_vertices": 0, "maximal_simplices": []}
    dense, old = relabel_dense(K)
    return {
        "dim": dense.dim,
        "n_vertices": dense.n_vertices,
        "maximal_simplices": [list(s) for s in dense.maximal_simplices()],
    }


def complex_from_json_dict(doc: Mapping) -> SimplicialComplex:
    maximal = doc.get("maximal_simplices", [])
    if not maximal:
        return EMPTY_COMPLEX
    K = build_complex(maximal)
    if "dim" in doc and doc["dim"] != K.dim:
        raise ComplexError(f"declared dim {doc['dim']} != actual {K.dim}")
    if "n_vertices" in doc and doc["n_vertices"] != K.n_vertices:
        raise ComplexError(
            f"declared n_vertices {doc['n_vertices']} != actual {K.n_vertices}"
        )
    return K
