"""Reference meshes and the assembled cube and octahedron.

Two embedded 116-vertex integer tables realize the same 543-cell
complex on the regular tetrahedron (T0, corners at alternating vertices
of the cube [0, 60000]^3) and on the standard cube-corner tetrahedron
(T1, legs along the axes).  Gluing one T0 copy with four rotated T1
copies fills the cube; eight signed-permutation copies of T1 fill the
octahedron.  All assembly isometries are integer maps, so the exact
acuteness verdicts survive assembly unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import refdata
from .geometry import AngleReport, Embedding, GeometryError, verify_acute
from .simplicial import ComplexError, SimplicialComplex, build_complex, complex_from_edges


class ReconstructionMismatch(ComplexError):
    """Rebuilt reference complex has unexpected counts."""


class BoundaryMismatch(GeometryError):
    """Shared-face coordinates of two assembled pieces disagree."""


@dataclass(frozen=True)
class ReferenceMesh:
    which: str  # "t0" | "t1"
    points: tuple[tuple[int, int, int], ...]
    edges: tuple[tuple[int, int], ...]


def load_reference(which: str) -> ReferenceMesh:
    """The embedded coordinate table and edge list ("t0" or "t1")."""
    key = which.lower().replace("_", "").replace("-", "")
    if key not in ("t0", "t1"):
        raise ValueError(f"unknown reference mesh {which!r}")
    pts = refdata.T0_POINTS if key == "t0" else refdata.T1_POINTS
    return ReferenceMesh(key, pts, refdata.EDGES)


@lru_cache(maxsize=2)
def _reconstructed(which: str):
    mesh = load_reference(which)
    K = complex_from_edges(len(mesh.points), mesh.edges)
    if K.f_vector() != (116, 678, 1106, 543):
        raise ReconstructionMismatch(f"{which} rebuilt with f={K.f_vector()}")
    emb = Embedding({i: p for i, p in enumerate(mesh.points)}, 3, "int")
    return K, emb


def reconstruct(mesh: ReferenceMesh) -> tuple[SimplicialComplex, Embedding]:
    """Flag-complete the edge list and attach the integer coordinates."""
    return _reconstructed(mesh.which)


def verify_reference(which: str) -> AngleReport:
    """Exact-integer acuteness report for a reference mesh."""
    K, emb = _reconstructed(load_reference(which).which)
    return verify_acute(K, emb)


# -- assemblies ---------------------------------------------------------

# rotations by half a turn about the axes through the cube center map the
# origin corner of T1 onto the other three odd cube corners
_CUBE_MAPS = (
    lambda p: p,
    lambda p: (p[0], 60000 - p[1], 60000 - p[2]),
    lambda p: (60000 - p[0], p[1], 60000 - p[2]),
    lambda p: (60000 - p[0], 60000 - p[1], p[2]),
)


def _base_face_ids() -> list[int]:
    """T1 vertices on the equilateral face x + y + z = 60000."""
    return [i for i, p in enumerate(refdata.T1_POINTS) if sum(p) == 60000]


def _glue(pieces) -> tuple[SimplicialComplex, Embedding]:
    """Unify piece meshes by exact coordinate equality."""
    coord_id: dict = {}
    cells = set()
    for K, emb in pieces:
        local = {}
        for v in K.vertices:
            p = tuple(emb.point(v))
            if p not in coord_id:
                coord_id[p] = len(coord_id)
            local[v] = coord_id[p]
        for cell in K.simplices(3):
            glob = tuple(sorted(local[v] for v in cell))
            if glob in cells:
                raise BoundaryMismatch(f"cell {glob} produced twice")
            cells.add(glob)
    K = build_complex(sorted(cells))
    emb = Embedding({i: p for p, i in coord_id.items()}, 3, "int")
    return K, emb


def assemble_cube() -> tuple[SimplicialComplex, Embedding]:
    """The 2715-cell acute triangulation of the cube [0, 60000]^3.

    One T0 copy plus four rotated T1 copies; each face of T0 must meet
    its T1 copy in exactly the nine face vertices, with equal integer
    coordinates (BoundaryMismatch otherwise).
    """
    K0, emb0 = _reconstructed("t0")
    K1, emb1 = _reconstructed("t1")
    t0_coords = set(emb0.points.values())
    base = _base_face_ids()
    if len(base) != 9:
        raise BoundaryMismatch(f"expected 9 base-face vertices, found {len(base)}")
    pieces = [(K0, emb0)]
    for rot in _CUBE_MAPS:
        pts = {v: rot(p) for v, p in emb1.points.items()}
        shared = {pts[v] for v in base}
        if not shared.issubset(t0_coords):
            raise BoundaryMismatch("rotated T1 base face does not match T0")
        if len({p for p in pts.values() if p in t0_coords}) != 9:
            raise BoundaryMismatch("rotated T1 meets T0 in more than its base face")
        pieces.append((K1, Embedding(pts, 3, "int")))
    K, emb = _glue(pieces)
    if len(K.simplices(3)) != 5 * 543:
        raise BoundaryMismatch(f"cube assembly has {len(K.simplices(3))} cells")
    return K, emb


# signed permutations placing the T1 legs along the axes of each octant;
# adjacent octants differ by one reflection, so orientations alternate
def _octant_map(signs):
    sx, sy, sz = signs
    return lambda p: (sx * p[0], sy * p[1], sz * p[2])


def assemble_octahedron() -> tuple[SimplicialComplex, Embedding]:
    """The 4344-cell acute triangulation of the octahedron |x|+|y|+|z| <= 60000.

    Eight copies of the T1 mesh, one per octant.  Octants sharing a wall
    are mirror images, which is exactly the orientation pattern a
    consistent gluing requires; the wall subdivisions coincide pointwise
    because the reflections fix them.
    """
    K1, emb1 = _reconstructed("t1")
    pieces = []
    copies = []
    for sx in (1, -1):
        for sy in (1, -1):
            for sz in (1, -1):
                rot = _octant_map((sx, sy, sz))
                pts = {v: rot(p) for v, p in emb1.points.items()}
                pieces.append((K1, Embedding(pts, 3, "int")))
                copies.append((sx, sy, sz))
    # wall coordinates must match pairwise between octants differing in one sign
    for i, a in enumerate(copies):
        for j, b in enumerate(copies):
            if j <= i or sum(x != y for x, y in zip(a, b)) != 1:
                continue
            axis = next(k for k in range(3) if a[k] != b[k])
            wall_a = {p for p in pieces[i][1].points.values() if p[axis] == 0}
            wall_b = {p for p in pieces[j][1].points.values() if p[axis] == 0}
            if wall_a != wall_b:
                raise BoundaryMismatch(f"octants {a} and {b} disagree on their wall")
    K, emb = _glue(pieces)
    if len(K.simplices(3)) != 8 * 543:
        raise BoundaryMismatch(f"octahedron assembly has {len(K.simplices(3))} cells")
    return K, emb


def placement_orientations() -> list[int]:
    """Determinant signs of the eight octant isometries (alternating)."""
    out = []
    for sx in (1, -1):
        for sy in (1, -1):
            for sz in (1, -1):
                out.append(sx * sy * sz)
    return out
