"""The 600-cell, the 543-tetrahedron ball, and the special subdivision.

The boundary of the 600-cell is the simplicial 3-sphere on 120 vertices
whose cells are 600 regular tetrahedra.  Removing the open star of one
cell's vertex set leaves a flag-no-square triangulated 3-ball with 543
cells; its boundary is a 2-sphere that subdivides the boundary of a
tetrahedron with one new vertex per edge and three per face.  The
special subdivision replays that pattern on an arbitrary complex of
dimension at most 3: edges split in two, triangles receive the face
template, tetrahedra receive a copy of the 543-cell ball, with all
copies glued consistently along the sorted corner order of each parent
simplex.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product

import numpy as np

from .exactnum import QSqrt5
from .geometry import Embedding
from .simplicial import (
    ComplexError,
    SimplexNotFound,
    SimplicialComplex,
    Simplex,
    boundary_complex,
    build_complex,
    complex_from_edges,
    find_empty_square,
    is_flag,
    relabel_dense,
)


class DimensionTooHigh(ComplexError):
    """Special subdivision is only defined up to dimension 3."""


class NotX543(ComplexError):
    """The complex does not have the expected 543-cell structure."""


# -- 600-cell ----------------------------------------------------------


def _qs(a, b=0) -> QSqrt5:
    return QSqrt5(a, b)


@lru_cache(maxsize=1)
def _cell600_exact():
    """Vertices (scaled by 4, exact in Z[sqrt5]) and edges of the 600-cell."""
    pts: set[tuple] = set()
    # permutations of (+-4, 0, 0, 0)
    for i in range(4):
        for s in (4, -4):
            p = [_qs(0)] * 4
            p[i] = _qs(s)
            pts.add(tuple(p))
    # (+-2, +-2, +-2, +-2)
    for signs in product((2, -2), repeat=4):
        pts.add(tuple(_qs(s) for s in signs))
    # even permutations of (+-2phi, +-2, +-2/phi, 0); 2phi = 1+sqrt5, 2/phi = -1+sqrt5
    base = (_qs(1, 1), _qs(2), _qs(-1, 1), _qs(0))
    even_perms = [p for p in permutations(range(4)) if _perm_parity(p) == 1]
    for perm in even_perms:
        for s0, s1, s2 in product((1, -1), repeat=3):
            signs = {0: s0, 1: s1, 2: s2, 3: 1}
            vec = [None] * 4
            for slot, src in enumerate(perm):
                c = base[src]
                vec[slot] = c if signs.get(src, 1) == 1 else -c
            pts.add(tuple(vec))
    verts = sorted(pts, key=lambda p: tuple((c.a, c.b) for c in p))
    if len(verts) != 120:
        raise ComplexError(f"expected 120 vertices, got {len(verts)}")

    def dist2(p, q):
        out = _qs(0)
        for a, b in zip(p, q):
            d = a - b
            out = out + d * d
        return out

    # edge length^2 at scale 4 is 24 - 8 sqrt5
    min_d2 = _qs(24, -8)
    edges = []
    for i in range(120):
        for j in range(i + 1, 120):
            d2 = dist2(verts[i], verts[j])
            if d2 == min_d2:
                edges.append((i, j))
            elif d2 < min_d2:
                raise ComplexError("found a pair closer than the expected edge length")
    if len(edges) != 720:
        raise ComplexError(f"expected 720 edges, got {len(edges)}")
    return verts, tuple(edges)


def _perm_parity(perm) -> int:
    inv = 0
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                inv += 1
    return 1 if inv % 2 == 0 else -1


@lru_cache(maxsize=1)
def _cell600_complex() -> SimplicialComplex:
    _, edges = _cell600_exact()
    K = complex_from_edges(120, edges)
    if K.f_vector() != (120, 720, 1200, 600):
        raise ComplexError(f"600-cell generation failed: f={K.f_vector()}")
    return K


def generate_600_cell() -> tuple[SimplicialComplex, Embedding]:
    """The boundary complex of the 600-cell with its unit-radius embedding.

    Vertices are the 120 unit icosians; edges are the pairs at minimal
    distance, detected exactly in Q(sqrt5); triangles and cells are the
    3- and 4-cliques.  The returned embedding is float64 in R^4.
    """
    verts, _ = _cell600_exact()
    K = _cell600_complex()
    emb = Embedding(
        {i: tuple(float(c) / 4.0 for c in p) for i, p in enumerate(verts)}, 4, "float"
    )
    return K, emb


# -- extraction of the 543-cell ball ------------------------------------


@dataclass(frozen=True)
class X543Frame:
    """The extracted ball together with its tetrahedral frame.

    corners are ordered by the facet of the removed cell they complete.
    carriers tag each vertex with the cell of the parent tetrahedron
    boundary it subdivides: ("corner", i), ("edge", (i, j)),
    ("face", (i, j, k)) with corner positions, or ("interior", None).
    embedding4 holds the unit-sphere coordinates inherited from the
    600-cell, and removed_center the spherical center of the removed
    cell (the stereographic pole).
    """

    complex: SimplicialComplex
    corners: tuple[int, int, int, int]
    carriers: dict
    embedding4: Embedding
    removed_center: tuple[float, float, float, float]


def extract_x543(
    X600: SimplicialComplex | None = None, fixed_tet: Simplex | None = None
) -> SimplicialComplex:
    """Subcomplex of all simplices sharing no vertex with fixed_tet.

    Defaults to the generated 600-cell and its lexicographically first
    cell.  Validates the expected counts and the ball/flagness facts.
    """
    return _extract_frame_for(X600, fixed_tet).complex


def _compute_carriers(K: SimplicialComplex, corners) -> dict:
    bd = boundary_complex(K)
    badj = bd.adjacency()
    cset = set(corners)
    pos = {c: i for i, c in enumerate(corners)}
    carriers: dict = {c: ("corner", pos[c]) for c in corners}
    for v in bd.vertices:
        if v in cset:
            continue
        near = badj[v] & cset
        if len(near) == 2:
            carriers[v] = ("edge", tuple(sorted(pos[c] for c in near)))
        elif len(near) > 2:
            raise NotX543(f"boundary vertex {v} adjacent to {len(near)} corners")
    mids = [v for v, c in carriers.items() if c[0] == "edge"]
    if len(mids) != 6:
        raise NotX543(f"expected 6 edge vertices, found {len(mids)}")
    for v in bd.vertices:
        if v in carriers:
            continue
        idxs: set[int] = set()
        for w in badj[v]:
            cw = carriers.get(w)
            if cw is None:
                continue
            if cw[0] == "corner":
                idxs.add(cw[1])
            elif cw[0] == "edge":
                idxs.update(cw[1])
        if len(idxs) != 3:
            raise NotX543(f"face vertex {v} touches corner set {sorted(idxs)}")
        carriers[v] = ("face", tuple(sorted(idxs)))
    n_face = sum(1 for c in carriers.values() if c[0] == "face")
    if n_face != 12:
        raise NotX543(f"expected 12 face vertices, found {n_face}")
    for v in K.vertices:
        if v not in carriers:
            carriers[v] = ("interior", None)
    return carriers


def _extract_frame_for(X600, fixed_tet) -> X543Frame:
    if X600 is None and fixed_tet is None:
        return x543_frame()
    if X600 is None:
        X600 = _cell600_complex()
    return _build_frame(X600, fixed_tet, with_embedding=X600 is _cell600_complex())


@lru_cache(maxsize=1)
def x543_frame() -> X543Frame:
    """Frame for the default extraction (memoized)."""
    return _build_frame(_cell600_complex(), None, with_embedding=True)


def _build_frame(X600: SimplicialComplex, fixed_tet, with_embedding: bool) -> X543Frame:
    if fixed_tet is None:
        fixed_tet = min(X600.faces[3])
    fixed_tet = tuple(sorted(fixed_tet))
    if fixed_tet not in X600:
        raise SimplexNotFound(f"{fixed_tet} is not a cell of the ambient complex")
    removed = set(fixed_tet)
    cells = [c for c in X600.simplices(3) if not removed & set(c)]
    K_raw = build_complex(cells)
    K, old_ids = relabel_dense(K_raw)
    to_new = {v: i for i, v in enumerate(old_ids)}

    # corners: for each facet of the removed cell, the unique other vertex
    # completing it to a cell of the ambient complex
    cof = X600.cofacets()
    corners = []
    for omit in range(4):
        facet = tuple(v for i, v in enumerate(fixed_tet) if i != omit)
        others = [c for c in cof[facet] if c != fixed_tet]
        if len(others) != 1:
            raise NotX543(f"facet {facet} lies in {len(others) + 1} cells")
        (extra,) = set(others[0]) - set(facet)
        corners.append(to_new[extra])
    corners = tuple(corners)

    if K.f_vector() != (116, 678, 1106, 543):
        raise NotX543(f"extraction has f={K.f_vector()}")
    bd = boundary_complex(K)
    if bd.f_vector() != (22, 60, 40) or bd.euler_characteristic() != 2:
        raise NotX543(f"boundary has f={bd.f_vector()}")
    if is_flag(K) is not None or find_empty_square(K) is not None:
        raise NotX543("extraction is not flag-no-square")
    carriers = _compute_carriers(K, corners)

    if with_embedding:
        verts, _ = _cell600_exact()
        pts = {to_new[v]: tuple(float(c) / 4.0 for c in verts[v]) for v in old_ids}
        emb = Embedding(pts, 4, "float")
        center = np.mean([[float(c) / 4.0 for c in verts[v]] for v in fixed_tet], axis=0)
        center = center / np.linalg.norm(center)
        removed_center = tuple(float(c) for c in center)
    else:
        emb = Embedding({}, 4, "float")
        removed_center = (0.0, 0.0, 0.0, 0.0)
    return X543Frame(K, corners, carriers, emb, removed_center)


# -- face template and subdivision bundle --------------------------------

_MID_SLOT = {(0, 1): 3, (0, 2): 4, (1, 2): 5}


@dataclass(frozen=True)
class _Template:
    """Everything the subdivision needs from the reference ball."""

    complex: SimplicialComplex
    corners: tuple[int, ...]
    carriers: dict
    mid_of_edge: dict  # (i, j) corner positions -> reference vertex
    slot_of: dict  # face key -> {reference vertex -> slot 0..8}
    interior_ids: tuple[int, ...]  # 94 reference interior vertices, sorted
    face_complex: SimplicialComplex  # the 10-triangle disc on slots 0..8


def _face_slot_base(key) -> dict:
    """Slots of the corners and edge vertices of the face `key` (ascending)."""
    i, j, k = key
    return {
        ("corner", i): 0,
        ("corner", j): 1,
        ("corner", k): 2,
        ("edge", (i, j)): 3,
        ("edge", (i, k)): 4,
        ("edge", (j, k)): 5,
    }


@lru_cache(maxsize=1)
def x543_template() -> _Template:
    frame = x543_frame()
    K = frame.complex
    carriers = frame.carriers
    bd = boundary_complex(K)
    mid_of_edge = {
        c[1]: v for v, c in carriers.items() if c[0] == "edge"
    }
    face_keys = sorted({c[1] for v, c in carriers.items() if c[0] == "face"})
    if len(face_keys) != 4:
        raise NotX543(f"expected 4 face discs, found {face_keys}")

    discs = {}
    for key in face_keys:
        allowed = set()
        for v, c in carriers.items():
            if c[0] == "corner" and c[1] in key:
                allowed.add(v)
            elif c[0] == "edge" and set(c[1]) <= set(key):
                allowed.add(v)
            elif c[0] == "face" and c[1] == key:
                allowed.add(v)
        tris = [t for t in bd.simplices(2) if allowed.issuperset(t)]
        if len(tris) != 10:
            raise NotX543(f"face {key} carries {len(tris)} triangles")
        discs[key] = tris

    # canonical slot labels come from the first face; the remaining discs
    # are matched onto it respecting corner order, which pins the three
    # interior slots
    slot_of: dict = {}
    canon_key = face_keys[0]
    base = {
        v: _face_slot_base(canon_key)[carriers[v]]
        for v in {u for t in discs[canon_key] for u in t}
        if carriers[v][0] != "face"
    }
    canon_interior = sorted(
        v for t in discs[canon_key] for v in t if carriers[v][0] == "face"
    )
    canon_interior = sorted(set(canon_interior))
    for slot, v in enumerate(canon_interior, start=6):
        base[v] = slot
    slot_of[canon_key] = base
    canon_tris = {
        tuple(sorted(base[v] for v in t)) for t in discs[canon_key]
    }

    for key in face_keys[1:]:
        fixed = {
            v: _face_slot_base(key)[carriers[v]]
            for v in {u for t in discs[key] for u in t}
            if carriers[v][0] != "face"
        }
        inner = sorted({v for t in discs[key] for v in t if carriers[v][0] == "face"})
        match = None
        for perm in permutations((6, 7, 8)):
            trial = dict(fixed)
            trial.update(zip(inner, perm))
            if {tuple(sorted(trial[v] for v in t)) for t in discs[key]} == canon_tris:
                match = trial
                break
        if match is None:
            raise NotX543(f"face disc {key} does not match the template")
        slot_of[key] = match

    face_complex = build_complex(sorted(canon_tris))
    if face_complex.f_vector() != (9, 18, 10):
        raise NotX543(f"face template has f={face_complex.f_vector()}")
    interior_ids = tuple(
        sorted(v for v, c in carriers.items() if c[0] == "interior")
    )
    if len(interior_ids) != 94:
        raise NotX543(f"expected 94 interior vertices, found {len(interior_ids)}")
    return _Template(
        complex=K,
        corners=frame.corners,
        carriers=carriers,
        mid_of_edge=mid_of_edge,
        slot_of=slot_of,
        interior_ids=interior_ids,
        face_complex=face_complex,
    )


def face_template() -> SimplicialComplex:
    """The 10-triangle subdivision of a triangle carried by each face disc.

    Slots 0-2 are the corners, 3-5 the edge vertices of edges (0,1),
    (0,2), (1,2), and 6-8 the interior vertices.  Derived from the
    boundary of the extracted ball rather than hard-coded.
    """
    return x543_template().face_complex


# -- special subdivision -------------------------------------------------


@dataclass(frozen=True)
class SubdivisionMap:
    """A subdivision together with carrier bookkeeping.

    carrier maps each child simplex to the smallest parent simplex whose
    closed cell contains it; vertex_origin maps each child vertex to
    (parent simplex, role), where role is "vertex", "edge-mid",
    "face-<slot>" or "interior-<index>".
    """

    parent: SimplicialComplex
    child: SimplicialComplex
    carrier: dict
    vertex_origin: dict

    def children_with_carrier_in(self, parent_simplex: Simplex) -> list[Simplex]:
        ps = set(parent_simplex)
        return [s for s, c in self.carrier.items() if ps.issuperset(c)]


def special_subdivision(K: SimplicialComplex) -> SubdivisionMap:
    """Subdivide edges in two, triangles by the face template, cells by
    the 543-tetrahedron ball, glued consistently on shared faces.

    Copies are attached along the ascending vertex order of each parent
    simplex, so adjacent cells induce identical subdivisions of shared
    faces by construction.
    """
    if K.dim > 3:
        raise DimensionTooHigh(f"dimension {K.dim} > 3")
    if K.dim < 0:
        raise ComplexError("cannot subdivide the empty complex")
    tpl = x543_template()

    child_id: dict = {}
    origin: dict = {}

    def fresh(key, parent, role) -> int:
        nid = len(child_id)
        child_id[key] = nid
        origin[nid] = (parent, role)
        return nid

    for v in K.vertices:
        fresh(("v", v), (v,), "vertex")
    for e in K.simplices(1):
        fresh(("e", e), e, "edge-mid")
    for f in K.simplices(2):
        for slot in range(3):
            fresh(("f", f, slot), f, f"face-{slot + 6}")
    for t in K.simplices(3):
        for idx in range(94):
            fresh(("t", t, idx), t, f"interior-{idx}")

    interior_index = {v: i for i, v in enumerate(tpl.interior_ids)}

    def tet_vertex_map(t: Simplex) -> dict:
        """Reference vertex -> child id for the copy glued into cell t."""
        m: dict = {}
        for rv in tpl.complex.vertices:
            kind, payload = tpl.carriers[rv]
            if kind == "corner":
                m[rv] = child_id[("v", t[payload])]
            elif kind == "edge":
                a, b = payload
                m[rv] = child_id[("e", (t[a], t[b]))]
            elif kind == "face":
                slot = tpl.slot_of[payload][rv]
                face = tuple(t[i] for i in payload)
                m[rv] = child_id[("f", face, slot - 6)]
            else:
                m[rv] = child_id[("t", t, interior_index[rv])]
        return m

    def face_children(f: Simplex) -> list[Simplex]:
        u, v, w = f
        slot_map = {
            0: child_id[("v", u)],
            1: child_id[("v", v)],
            2: child_id[("v", w)],
            3: child_id[("e", (u, v))],
            4: child_id[("e", (u, w))],
            5: child_id[("e", (v, w))],
            6: child_id[("f", f, 0)],
            7: child_id[("f", f, 1)],
            8: child_id[("f", f, 2)],
        }
        return [
            tuple(sorted(slot_map[s] for s in tri))
            for tri in tpl.face_complex.simplices(2)
        ]

    maximal: list[Simplex] = []
    for m in K.maximal_simplices():
        d = len(m) - 1
        if d == 0:
            maximal.append((child_id[("v", m[0])],))
        elif d == 1:
            mid = child_id[("e", m)]
            maximal.append(tuple(sorted((child_id[("v", m[0])], mid))))
            maximal.append(tuple(sorted((child_id[("v", m[1])], mid))))
        elif d == 2:
            maximal.extend(face_children(m))
        else:
            vm = tet_vertex_map(m)
            for cell in tpl.complex.simplices(3):
                maximal.append(tuple(sorted(vm[v] for v in cell)))
    child = build_complex(maximal)

    # carriers: the parent simplex spanned by the union of the vertices'
    # origins; assert it exists in the parent
    carrier: dict = {}
    for s in child.all_simplices():
        support: set[int] = set()
        for v in s:
            support.update(origin[v][0])
        ps = tuple(sorted(support))
        if ps not in K:
            raise ComplexError(f"child simplex {s} has carrier {ps} missing from parent")
        carrier[s] = ps
    return SubdivisionMap(parent=K, child=child, carrier=carrier, vertex_origin=origin)


# -- dissections of the cube and the octahedron ---------------------------


def build_W() -> tuple[SimplicialComplex, Embedding]:
    """The five-tetrahedron dissection of the cube [-1, 1]^3.

    One cell is the regular tetrahedron on alternating cube corners; the
    other four are the congruent cube-corner cells around it.
    """
    coords = sorted(product((-1, 1), repeat=3))
    vid = {p: i for i, p in enumerate(coords)}
    even = [p for p in coords if p[0] * p[1] * p[2] == 1]
    odd = [p for p in coords if p[0] * p[1] * p[2] == -1]
    cells = [tuple(sorted(vid[p] for p in even))]
    for o in odd:
        nbrs = [p for p in even if sum(a != b for a, b in zip(p, o)) == 1]
        cells.append(tuple(sorted([vid[o]] + [vid[p] for p in nbrs])))
    K = build_complex(cells)
    emb = Embedding({vid[p]: p for p in coords}, 3, "int")
    return K, emb


def build_Y() -> tuple[SimplicialComplex, Embedding]:
    """The octahedron with vertices +-e_i coned from the origin."""
    coords = [(-1, 0, 0), (0, -1, 0), (0, 0, -1), (0, 0, 1), (0, 1, 0), (1, 0, 0)]
    coords = sorted(coords + [(0, 0, 0)])
    vid = {p: i for i, p in enumerate(coords)}
    center = vid[(0, 0, 0)]
    cells = []
    for sx, sy, sz in product((-1, 1), repeat=3):
        tri = [(sx, 0, 0), (0, sy, 0), (0, 0, sz)]
        cells.append(tuple(sorted([center] + [vid[p] for p in tri])))
    K = build_complex(cells)
    emb = Embedding({vid[p]: p for p in coords}, 3, "int")
    return K, emb


# -- Platonic cone decompositions -----------------------------------------


def _icosahedron_vertices() -> list[tuple]:
    """Cyclic permutations of (0, +-2, +-(1+sqrt5)), exact."""
    two_phi = _qs(1, 1)
    out = []
    for a, b in product((2, -2), ((1, 1), (-1, -1))):
        trip = (_qs(0), _qs(a), _qs(*b))
        for rot in range(3):
            out.append(tuple(trip[(i - rot) % 3] for i in range(3)))
    return sorted(set(out), key=lambda p: tuple((c.a, c.b) for c in p))


def _min_distance_edges(verts) -> list[tuple[int, int]]:
    def d2(p, q):
        out = _qs(0)
        for a, b in zip(p, q):
            diff = a - b
            out = out + diff * diff
        return out

    best = None
    dists = {}
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            d = d2(verts[i], verts[j])
            dists[(i, j)] = d
            if best is None or d < best:
                best = d
    return [e for e, d in dists.items() if d == best]


def build_platonic_cones(solid: str) -> tuple[SimplicialComplex, Embedding]:
    """Cone decompositions of the icosahedron and the dodecahedron.

    "icosahedron": 20 tetrahedra coning the faces from the center.
    "dodecahedron": the 120 congruent tetrahedra of the barycentric
    subdivision of each pentagonal face coned from the center.
    Coordinates are exact in Q(sqrt5).
    """
    if solid == "icosahedron":
        verts = _icosahedron_vertices()
        edges = _min_distance_edges(verts)
        skel = complex_from_edges(len(verts), edges)
        faces = skel.simplices(2)
        if len(faces) != 20:
            raise ComplexError(f"icosahedron face detection found {len(faces)}")
        center = len(verts)
        cells = [tuple(sorted(f + (center,))) for f in faces]
        K = build_complex(cells)
        pts = {i: p for i, p in enumerate(verts)}
        pts[center] = (_qs(0), _qs(0), _qs(0))
        return K, Embedding(pts, 3, "qsqrt5")

    if solid == "dodecahedron":
        base = []
        for signs in product((1, -1), repeat=3):
            base.append(tuple(_qs(2 * s) for s in signs))
        for a, b in product(((-1, 1), (1, -1)), ((1, 1), (-1, -1))):
            trip = (_qs(0), _qs(*a), _qs(*b))
            for rot in range(3):
                base.append(tuple(trip[(i - rot) % 3] for i in range(3)))
        verts = sorted(set(base), key=lambda p: tuple((c.a, c.b) for c in p))
        if len(verts) != 20:
            raise ComplexError(f"dodecahedron has {len(verts)} vertices")
        # scale by 10 so faces' centers (/5) and edge midpoints (/2) stay integral
        verts = [tuple(c * 10 for c in p) for p in verts]
        edges = _min_distance_edges(verts)
        if len(edges) != 30:
            raise ComplexError(f"dodecahedron edge detection found {len(edges)}")
        adj = {i: set() for i in range(20)}
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
        # pentagons via supporting planes: the polytope is simple, so the
        # plane through any two edges at a vertex carries a face
        found = set()
        for v in range(20):
            for a, b in combinations(sorted(adj[v]), 2):
                ea = tuple(x - y for x, y in zip(verts[a], verts[v]))
                eb = tuple(x - y for x, y in zip(verts[b], verts[v]))
                n = (
                    ea[1] * eb[2] - ea[2] * eb[1],
                    ea[2] * eb[0] - ea[0] * eb[2],
                    ea[0] * eb[1] - ea[1] * eb[0],
                )
                vals = []
                for w in range(20):
                    s = _qs(0)
                    for c, (x, y) in zip(n, zip(verts[w], verts[v])):
                        s = s + c * (x - y)
                    vals.append(s.sign())
                if 1 in vals and -1 in vals:
                    continue
                face = frozenset(w for w in range(20) if vals[w] == 0)
                if len(face) != 5:
                    raise ComplexError(f"pentagon detection found {len(face)} vertices")
                found.add(face)
        if len(found) != 12:
            raise ComplexError(f"expected 12 pentagons, found {len(found)}")
        pentagons = [sorted(f) for f in sorted(found, key=sorted)]
        pts: dict = {i: p for i, p in enumerate(verts)}
        nid = 20
        body = nid
        pts[body] = (_qs(0), _qs(0), _qs(0))
        nid += 1
        mid_id: dict = {}
        for u, v in edges:
            mid_id[(u, v)] = nid
            pts[nid] = tuple((a + b) / 2 for a, b in zip(verts[u], verts[v]))
            nid += 1
        cells = []
        for face in pentagons:
            fc = nid
            pts[fc] = tuple(
                sum((pts[v][i] for v in face), _qs(0)) / 5 for i in range(3)
            )
            nid += 1
            # walk the 5-cycle
            cyc = [face[0]]
            while len(cyc) < 5:
                nxt = sorted(adj[cyc[-1]] & set(face) - set(cyc))
                cyc.append(nxt[0])
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                m = mid_id[(a, b) if (a, b) in mid_id else (b, a)]
                cells.append(tuple(sorted((body, fc, m, a))))
                cells.append(tuple(sorted((body, fc, m, b))))
        K = build_complex(cells)
        if len(K.simplices(3)) != 120:
            raise ComplexError(f"dodecahedron subdivision has {len(K.simplices(3))} cells")
        return K, Embedding(pts, 3, "qsqrt5")

    raise ValueError(f"unknown solid {solid!r}")
