"""Euclidean realizations and dihedral-angle predicates.

Scalars come in four kinds: exact integers, exact rationals, exact
elements of Q(sqrt 5), and float64.  All acuteness verdicts on exact
embeddings reduce to integer (or field) sign tests: for the edge (a, b)
of a tetrahedron with opposite vertices c and d, the dihedral angle
along ab is acute iff <n1, n2> > 0, where n1 and n2 are the components
of c - a and d - a orthogonal to b - a, cleared of denominators.  The
cosine itself is generally irrational; its sign and exact square are
enough for every comparison made here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping

import numpy as np

from .exactnum import QSqrt5
from .simplicial import ComplexError, NotPure, SimplicialComplex, Simplex


class GeometryError(ComplexError):
    pass


class DegenerateTetrahedron(GeometryError):
    def __init__(self, witness=None):
        self.witness = witness
        super().__init__(f"degenerate tetrahedron {witness}")


class ProjectionPole(GeometryError):
    """The point to project coincides with the projection pole."""


class RayMiss(GeometryError):
    """A radial ray failed to exit the target boundary."""


EXACT_SCALARS = ("int", "rational", "qsqrt5")

#: edge slots of a tetrahedron (p0, p1, p2, p3): (edge i, edge j, opposite k, l)
EDGE_SLOTS = (
    (0, 1, 2, 3),
    (0, 2, 1, 3),
    (0, 3, 1, 2),
    (1, 2, 0, 3),
    (1, 3, 0, 2),
    (2, 3, 0, 1),
)


@dataclass
class Embedding:
    """Coordinates for the vertices of a complex.

    points maps vertex ids to coordinate tuples; all tuples share the
    declared dimension and scalar kind.
    """

    points: dict
    dim: int
    scalar: str

    def __post_init__(self):
        if self.scalar not in EXACT_SCALARS + ("float",):
            raise GeometryError(f"unknown scalar kind {self.scalar!r}")

    @property
    def exact(self) -> bool:
        return self.scalar in EXACT_SCALARS

    def point(self, v: int):
        return self.points[v]

    def require_total(self, K: SimplicialComplex):
        missing = [v for v in K.vertices if v not in self.points]
        if missing:
            raise GeometryError(f"embedding missing vertices {missing[:5]}")

    def float_point(self, v: int) -> tuple[float, ...]:
        return tuple(float(c) for c in self.points[v])

    def as_float(self) -> "Embedding":
        return Embedding(
            {v: tuple(float(c) for c in p) for v, p in self.points.items()},
            self.dim,
            "float",
        )

    def array(self, vertices: Iterable[int]) -> np.ndarray:
        return np.array([self.float_point(v) for v in vertices], dtype=float)


# -- generic exact vector helpers --------------------------------------


def _sign(x) -> int:
    if isinstance(x, QSqrt5):
        return x.sign()
    return (x > 0) - (x < 0)


def _sub(p, q):
    return tuple(a - b for a, b in zip(p, q))


def _add(p, q):
    return tuple(a + b for a, b in zip(p, q))


def _smul(s, p):
    return tuple(s * a for a in p)


def _dot(p, q):
    out = p[0] * q[0]
    for a, b in zip(p[1:], q[1:]):
        out = out + a * b
    return out


def _cross(p, q):
    return (
        p[1] * q[2] - p[2] * q[1],
        p[2] * q[0] - p[0] * q[2],
        p[0] * q[1] - p[1] * q[0],
    )


def _det3(u, v, w):
    return _dot(u, _cross(v, w))


def tet_volume6(p0, p1, p2, p3):
    """Six times the signed volume (exact for exact inputs)."""
    return _det3(_sub(p1, p0), _sub(p2, p0), _sub(p3, p0))


# -- dihedral cosines ---------------------------------------------------


def _edge_normals(pts, slot):
    i, j, k, l = slot
    u = _sub(pts[j], pts[i])
    a = _sub(pts[k], pts[i])
    b = _sub(pts[l], pts[i])
    uu = _dot(u, u)
    n1 = _sub(_smul(uu, a), _smul(_dot(a, u), u))
    n2 = _sub(_smul(uu, b), _smul(_dot(b, u), u))
    return n1, n2


def dihedral_cosines(p0, p1, p2, p3) -> list[float]:
    """The six dihedral cosines of a tetrahedron, in EDGE_SLOTS order.

    Float evaluation; raises DegenerateTetrahedron on (near-)zero volume.
    """
    pts = [tuple(float(c) for c in p) for p in (p0, p1, p2, p3)]
    scale = max(abs(c) for p in pts for c in p) or 1.0
    vol = tet_volume6(*pts)
    if abs(vol) <= 1e-12 * scale ** 3:
        raise DegenerateTetrahedron((p0, p1, p2, p3))
    out = []
    for slot in EDGE_SLOTS:
        n1, n2 = _edge_normals(pts, slot)
        out.append(_dot(n1, n2) / math.sqrt(_dot(n1, n1) * _dot(n2, n2)))
    return out


def dihedral_cosine_signs(p0, p1, p2, p3) -> list[tuple[int, object]]:
    """Exact (sign, cos^2) for each edge, in EDGE_SLOTS order.

    Inputs must be exact scalars (int, Fraction or QSqrt5).  cos^2 is a
    Fraction for rational inputs and a QSqrt5 value otherwise.  The
    dihedral along an edge is acute iff its sign is +1.
    """
    pts = [tuple(p) for p in (p0, p1, p2, p3)]
    if _sign(tet_volume6(*pts)) == 0:
        raise DegenerateTetrahedron((p0, p1, p2, p3))
    out = []
    for slot in EDGE_SLOTS:
        n1, n2 = _edge_normals(pts, slot)
        d = _dot(n1, n2)
        denom = _dot(n1, n1) * _dot(n2, n2)
        num = d * d
        if isinstance(num, QSqrt5) or isinstance(denom, QSqrt5):
            cos_sq = QSqrt5.of(num) / QSqrt5.of(denom)
        else:
            cos_sq = Fraction(num, denom)
        out.append((_sign(d), cos_sq))
    return out


def dihedral_cosines_array(P: np.ndarray) -> np.ndarray:
    """Vectorized cosines for a batch of tetrahedra.

    P has shape (n, 4, 3); the result has shape (n, 6) in EDGE_SLOTS
    order.  No degeneracy checks: callers own that.
    """
    out = np.empty((P.shape[0], 6), dtype=float)
    for col, (i, j, k, l) in enumerate(EDGE_SLOTS):
        u = P[:, j] - P[:, i]
        a = P[:, k] - P[:, i]
        b = P[:, l] - P[:, i]
        uu = np.einsum("ij,ij->i", u, u)
        n1 = a * uu[:, None] - u * np.einsum("ij,ij->i", a, u)[:, None]
        n2 = b * uu[:, None] - u * np.einsum("ij,ij->i", b, u)[:, None]
        num = np.einsum("ij,ij->i", n1, n2)
        den = np.sqrt(
            np.einsum("ij,ij->i", n1, n1) * np.einsum("ij,ij->i", n2, n2)
        )
        out[:, col] = num / den
    return out


# -- acuteness reports --------------------------------------------------


@dataclass(frozen=True)
class DihedralEntry:
    tet: Simplex
    edge: tuple[int, int]
    cos: float
    sign: int | None  # exact sign in exact mode, None in float mode

    @property
    def angle_deg(self) -> float:
        return math.degrees(math.acos(max(-1.0, min(1.0, self.cos))))


@dataclass
class AngleReport:
    entries: list[DihedralEntry]
    failures: list[DihedralEntry]
    exact: bool
    margin_deg: float

    @property
    def acute(self) -> bool:
        return not self.failures

    @property
    def min_angle_deg(self) -> float:
        return min(e.angle_deg for e in self.entries)

    @property
    def max_angle_deg(self) -> float:
        return max(e.angle_deg for e in self.entries)

    def to_json_dict(self) -> dict:
        per_tet: dict = {}
        for e in self.entries:
            acute = (e.sign > 0) if self.exact else (e.angle_deg < 90.0 - self.margin_deg)
            per_tet.setdefault(e.tet, []).append(
                {"edge": list(e.edge), "cos": e.cos, "acute": bool(acute)}
            )
        return {
            "tetrahedra": [
                {"vertices": list(t), "dihedrals": per_tet[t]} for t in sorted(per_tet)
            ],
            "summary": {
                "min_deg": self.min_angle_deg,
                "max_deg": self.max_angle_deg,
                "n_failures": len(self.failures),
                "exact": self.exact,
                "margin_deg": self.margin_deg,
            },
        }


def verify_acute(
    K: SimplicialComplex, emb: Embedding, margin_deg: float | None = None
) -> AngleReport:
    """Check every dihedral angle of a 3-complex against 90 degrees.

    On exact embeddings the verdict uses exact sign tests only and the
    margin must be 0.  On float embeddings the default margin is 1e-6
    degrees.  Raises DegenerateTetrahedron with the offending cell.
    """
    if not K.is_pure(3):
        raise NotPure(f"expected pure 3-dimensional complex, f={K.f_vector()}")
    emb.require_total(K)
    exact = emb.exact
    if exact:
        if margin_deg not in (None, 0, 0.0):
            raise GeometryError("margin must be 0 in exact mode")
        margin_deg = 0.0
    elif margin_deg is None:
        margin_deg = 1e-6
    cos_threshold = math.cos(math.radians(90.0 - margin_deg))
    entries: list[DihedralEntry] = []
    failures: list[DihedralEntry] = []
    tets = K.simplices(3)
    if exact:
        for tet in tets:
            pts = [emb.point(v) for v in tet]
            if _sign(tet_volume6(*pts)) == 0:
                raise DegenerateTetrahedron(tet)
            fpts = [tuple(float(c) for c in p) for p in pts]
            for slot in EDGE_SLOTS:
                n1, n2 = _edge_normals(pts, slot)
                sgn = _sign(_dot(n1, n2))
                f1, f2 = _edge_normals(fpts, slot)
                cos = _dot(f1, f2) / math.sqrt(_dot(f1, f1) * _dot(f2, f2))
                entry = DihedralEntry(
                    tet, (tet[slot[0]], tet[slot[1]]), cos, sgn
                )
                entries.append(entry)
                if sgn <= 0:
                    failures.append(entry)
    else:
        P = np.array([[emb.point(v) for v in tet] for tet in tets], dtype=float)
        if len(tets):
            e1 = P[:, 1] - P[:, 0]
            e2 = P[:, 2] - P[:, 0]
            e3 = P[:, 3] - P[:, 0]
            vol = np.einsum("ij,ij->i", e1, np.cross(e2, e3))
            scale = np.abs(P).max() or 1.0
            bad = np.nonzero(np.abs(vol) <= 1e-12 * scale ** 3)[0]
            if bad.size:
                raise DegenerateTetrahedron(tets[int(bad[0])])
            cosines = dihedral_cosines_array(P)
            for r, tet in enumerate(tets):
                for col, slot in enumerate(EDGE_SLOTS):
                    c = float(cosines[r, col])
                    entry = DihedralEntry(tet, (tet[slot[0]], tet[slot[1]]), c, None)
                    entries.append(entry)
                    if c <= cos_threshold:
                        failures.append(entry)
    return AngleReport(entries, failures, exact, margin_deg)


# -- geometric simplicial complex verification --------------------------


@dataclass(frozen=True)
class GeometricFailure:
    kind: str
    detail: tuple


@dataclass
class GeometricReport:
    failures: list[GeometricFailure]

    @property
    def ok(self) -> bool:
        return not self.failures


def _face_planes(pts):
    """Inward-oriented plane data ((normal, base point)) for a tetrahedron."""
    planes = []
    for omit in range(4):
        face = [pts[i] for i in range(4) if i != omit]
        n = _cross(_sub(face[1], face[0]), _sub(face[2], face[0]))
        if _sign(_dot(n, _sub(pts[omit], face[0]))) < 0:
            n = _smul(-1, n)
        planes.append((n, face[0]))
    return planes


def _plane_value(plane, num, den):
    """Sign-valid value of the plane at the homogeneous point num/den, den > 0."""
    n, q = plane
    return _dot(n, _sub(num, _smul(den, q)))


def _point_in_tet(planes, num, den) -> bool:
    return all(_sign(_plane_value(pl, num, den)) >= 0 for pl in planes)


def _in_hull(shared_pts, num, den) -> bool:
    """Exact membership of num/den in the hull of 0..3 shared vertices."""
    k = len(shared_pts)
    if k == 0:
        return False
    if k == 1:
        return all(a == den * b for a, b in zip(num, shared_pts[0]))
    if k == 2:
        v, w = shared_pts
        d = _sub(w, v)
        rel = _sub(num, _smul(den, v))
        if any(_sign(c) != 0 for c in _cross(rel, d)):
            return False
        t = _dot(rel, d)
        return _sign(t) >= 0 and _sign(den * _dot(d, d) - t) >= 0
    # triangle
    v0, v1, v2 = shared_pts
    n = _cross(_sub(v1, v0), _sub(v2, v0))
    rel = _sub(num, _smul(den, v0))
    if _sign(_dot(n, rel)) != 0:
        return False
    for a, b in ((v0, v1), (v1, v2), (v2, v0)):
        side = _dot(_cross(_sub(b, a), _sub(num, _smul(den, a))), n)
        if _sign(side) < 0:
            return False
    return True


def _separated_along_face(ptsA, planesA, ptsB, shared) -> bool:
    """Fast conclusive test: some face plane of A contains every shared
    vertex while the remaining vertices of B lie strictly outside.

    A's inward face plane then supports B, so B meets it exactly in the
    hull of the shared vertices and A cap B = hull(shared).
    """
    shared_set = set(map(tuple, shared))
    for plane in planesA:
        ok = True
        for q in shared:
            if _sign(_plane_value(plane, q, 1)) != 0:
                ok = False
                break
        if not ok:
            continue
        ok = True
        for q in ptsB:
            if tuple(q) in shared_set:
                continue
            if _sign(_plane_value(plane, q, 1)) >= 0:
                ok = False
                break
        if ok:
            return True
    return False


def _pair_intersection_ok(ptsT, planesT, ptsS, planesS, shared_pts) -> bool:
    """True iff every point of T cap S lies in the hull of the shared vertices.

    Candidate extreme points of the intersection polytope are vertices of
    one tetrahedron inside the other and edge/face-plane crossings; the
    intersection equals hull(shared) iff all of them do.
    """
    if _separated_along_face(ptsT, planesT, ptsS, shared_pts) or _separated_along_face(
        ptsS, planesS, ptsT, shared_pts
    ):
        return True
    one = ptsT[0][0] - ptsT[0][0] + 1  # multiplicative unit of the scalar ring
    for p in ptsT:
        if _point_in_tet(planesS, p, one) and not _in_hull(shared_pts, p, one):
            return False
    for p in ptsS:
        if _point_in_tet(planesT, p, one) and not _in_hull(shared_pts, p, one):
            return False
    for pts_edges, planes_a, planes_b in (
        (ptsT, planesS, planesT),
        (ptsS, planesT, planesS),
    ):
        for i, j in combinations(range(4), 2):
            a, b = pts_edges[i], pts_edges[j]
            for plane in planes_a:
                sa = _plane_value(plane, a, one)
                sb = _plane_value(plane, b, one)
                if _sign(sa) * _sign(sb) >= 0:
                    continue
                den = sa - sb
                num = _sub(_smul(sa, b), _smul(sb, a))
                if _sign(den) < 0:
                    den, num = -den, _smul(-1, num)
                if (
                    _point_in_tet(planes_a, num, den)
                    and _point_in_tet(planes_b, num, den)
                    and not _in_hull(shared_pts, num, den)
                ):
                    return False
    return True


def verify_geometric_complex(K: SimplicialComplex, emb: Embedding) -> GeometricReport:
    """Check that a realized 3-complex is a geometric simplicial complex.

    Every pair of tetrahedra must intersect exactly in the convex hull
    of their shared vertices.  Requires an exact embedding; candidate
    pairs are pruned with bounding boxes and decided by exact sign
    tests.  Pairs sharing a triangle only need their apexes strictly on
    opposite sides of the common plane.
    """
    if not K.is_pure(3):
        raise NotPure(f"expected pure 3-dimensional complex, f={K.f_vector()}")
    if not emb.exact:
        raise GeometryError("geometric verification requires an exact embedding")
    emb.require_total(K)
    failures: list[GeometricFailure] = []

    verts = K.vertices
    seen: dict = {}
    for v in verts:
        p = tuple(emb.point(v))
        if p in seen:
            failures.append(GeometricFailure("coincident_vertices", (seen[p], v)))
        seen[p] = v

    tets = K.simplices(3)
    pts_by_tet = []
    planes_by_tet = []
    for tet in tets:
        pts = [tuple(emb.point(v)) for v in tet]
        if _sign(tet_volume6(*pts)) == 0:
            failures.append(GeometricFailure("degenerate", (tet,)))
            pts_by_tet.append(None)
            planes_by_tet.append(None)
            continue
        pts_by_tet.append(pts)
        planes_by_tet.append(_face_planes(pts))
    if failures:
        return GeometricReport(failures)

    coords = np.array(
        [[ [float(c) for c in p] for p in pts] for pts in pts_by_tet], dtype=float
    )
    lo = coords.min(axis=1)
    hi = coords.max(axis=1)
    eps = 1e-9 * (np.abs(coords).max() or 1.0)
    n = len(tets)
    overlap = np.ones((n, n), dtype=bool)
    for ax in range(3):
        overlap &= lo[:, ax][:, None] <= hi[:, ax][None, :] + eps
        overlap &= lo[:, ax][None, :] <= hi[:, ax][:, None] + eps
    cand_i, cand_j = np.nonzero(np.triu(overlap, k=1))

    vsets = [set(t) for t in tets]
    for i, j in zip(cand_i.tolist(), cand_j.tolist()):
        shared = sorted(vsets[i] & vsets[j])
        if len(shared) == 3:
            # apexes must lie strictly on opposite sides of the shared plane
            (apex_i,) = vsets[i] - set(shared)
            (apex_j,) = vsets[j] - set(shared)
            base = [tuple(emb.point(v)) for v in shared]
            nrm = _cross(_sub(base[1], base[0]), _sub(base[2], base[0]))
            si = _sign(_dot(nrm, _sub(tuple(emb.point(apex_i)), base[0])))
            sj = _sign(_dot(nrm, _sub(tuple(emb.point(apex_j)), base[0])))
            if si == 0 or sj == 0 or si == sj:
                failures.append(GeometricFailure("shared_face_overlap", (tets[i], tets[j])))
            continue
        shared_pts = [tuple(emb.point(v)) for v in shared]
        if not _pair_intersection_ok(
            pts_by_tet[i], planes_by_tet[i], pts_by_tet[j], planes_by_tet[j], shared_pts
        ):
            failures.append(GeometricFailure("improper_intersection", (tets[i], tets[j])))
    return GeometricReport(failures)


# -- projection maps ----------------------------------------------------


def _tangent_basis(n: np.ndarray) -> np.ndarray:
    """Deterministic orthonormal basis of the hyperplane orthogonal to n."""
    drop = int(np.argmax(np.abs(n)))
    basis = []
    for i in range(len(n)):
        if i == drop:
            continue
        v = np.zeros(len(n))
        v[i] = 1.0
        v = v - np.dot(v, n) * n
        for b in basis:
            v = v - np.dot(v, b) * b
        norm = np.linalg.norm(v)
        if norm < 1e-12:
            raise GeometryError("degenerate tangent basis")
        basis.append(v / norm)
    return np.array(basis)


def stereographic_project(p, center) -> tuple[float, float, float]:
    """Stereographic image of a sphere point in R^4, as a point of R^3.

    Projects from the pole at center/|center| onto the hyperplane through
    the origin orthogonal to it, so the antipode of the pole lands at the
    origin and the equator stays at distance 1.  Coordinates are taken in
    a deterministic orthonormal basis of the hyperplane.
    """
    c = np.asarray(center, dtype=float)
    pole = c / np.linalg.norm(c)
    q = np.asarray(p, dtype=float)
    q = q / np.linalg.norm(q)
    denom = 1.0 - float(np.dot(q, pole))
    if abs(denom) < 1e-12:
        raise ProjectionPole(f"{p} coincides with the projection pole")
    x = pole + (q - pole) / denom
    basis = _tangent_basis(pole)
    return tuple(float(np.dot(b, x)) for b in basis)


def radial_to_tetra_boundary(
    emb: Embedding,
    boundary_vertices: Iterable[int],
    target_corners: np.ndarray,
    scale: float,
) -> Embedding:
    """Move listed vertices radially onto the boundary of a scaled tetrahedron.

    The target is a tetrahedron containing the origin in its interior
    (corner centroid at the origin); each listed vertex is replaced by
    the exit point of its ray from the origin through the boundary of
    scale * target.  Other vertices are untouched.
    """
    corners = np.asarray(target_corners, dtype=float)
    planes = []
    for omit in range(4):
        face = np.delete(corners, omit, axis=0)
        nrm = np.cross(face[1] - face[0], face[2] - face[0])
        d = float(np.dot(nrm, face[0]))
        if d < 0:
            nrm, d = -nrm, -d
        if d <= 0:
            raise GeometryError("target tetrahedron must contain the origin")
        planes.append((nrm, d))
    pts = dict(emb.points)
    for v in boundary_vertices:
        x = np.asarray(emb.float_point(v))
        ts = [scale * d / float(np.dot(nrm, x)) for nrm, d in planes if np.dot(nrm, x) > 1e-15]
        if not ts:
            raise RayMiss(f"vertex {v} at {x} has no exit ray")
        t = min(ts)
        pts[v] = tuple(float(c) for c in t * x)
    return Embedding(pts, emb.dim, "float")
