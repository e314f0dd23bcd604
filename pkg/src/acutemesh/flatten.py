"""Deforming the acute regular-tetrahedron mesh onto the cube-corner one.

Step 1 realizes the 543-cell ball acutely on a regular tetrahedron:
stereographic projection of the unit-sphere realization from the center
of the removed cell, boundary vertices moved radially onto the target
boundary, with the target scale found by search.

Step 2 flattens that state onto the standard (cube-corner) tetrahedron:
the apex A moves along the symmetry axis toward the base while the
base corners B stay fixed; the C vertices track the incircle touch
points of the faces around A, E vertices stay put, D and F vertices
ride along inside their faces, and the interior block follows by a
fitted scale-and-translate.  Whenever a dihedral angle reaches 90
degrees the motion pauses and the worst angle is repaired by projected
descent, honoring the same movement constraints; the two outermost
interior layers (12 and 16 vertices) move freely while the remaining
66 move only as a rigid block.

Step 3 rebuilds the regular-tetrahedron mesh so its face vertices match
the flattened mesh across shared faces, then rescales the interior
until every angle is acute again.

Success of the numeric steps is not guaranteed; a stall is an ordinary
outcome and the embedded reference tables certify existence regardless.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from functools import lru_cache

import numpy as np

from .geometry import (
    EDGE_SLOTS,
    Embedding,
    GeometryError,
    dihedral_cosines_array,
    radial_to_tetra_boundary,
    stereographic_project,
    verify_acute,
)
from .polytope600 import NotX543, _compute_carriers, x543_frame
from .simplicial import ComplexError, SimplicialComplex, are_isomorphic


class Stalled(ComplexError):
    """No movable vertex reduces the worst cosine enough to continue."""

    def __init__(self, message, state=None):
        super().__init__(message)
        self.state = state


class NoAcuteScale(GeometryError):
    """No interior scale in the search interval yields an acute mesh."""


ROLE_FROZEN = ("A", "B", "C", "E")


@dataclass(frozen=True)
class RoleMap:
    """Vertex roles of an X543-type complex relative to an apex corner.

    corners = (A, B1, B2, B3).  C vertices split the edges A-Bi, E the
    base edges Bi-Bj; D vertices live on the three faces around A, F on
    the base face.  Interior vertices split into the outer layer (12,
    adjacent to a corner), the second layer (16, adjacent to an edge
    vertex or to two or more face vertices) and the rigid core (66).
    """

    role: dict
    corners: tuple[int, int, int, int]
    edge_pos: dict  # C/E vertex -> corner-position pair, e.g. (0, 2)
    face_pos: dict  # D/F vertex -> corner-position triple

    @property
    def apex(self) -> int:
        return self.corners[0]

    def of_kind(self, *kinds) -> list[int]:
        return sorted(v for v, r in self.role.items() if r in kinds)


def classify_roles(K: SimplicialComplex, corner_ids) -> RoleMap:
    """Assign flattening roles from combinatorial position.

    corner_ids is ordered (A, B1, B2, B3).  Raises NotX543 when the
    complex does not carry the expected 1/3/3/3/9/3 + 12/16/66 split.
    """
    corners = tuple(corner_ids)
    if len(corners) != 4:
        raise NotX543("need exactly 4 corner ids")
    carriers = _compute_carriers(K, corners)
    role: dict = {}
    edge_pos: dict = {}
    face_pos: dict = {}
    for v, (kind, payload) in carriers.items():
        if kind == "corner":
            role[v] = "A" if payload == 0 else "B"
        elif kind == "edge":
            role[v] = "C" if 0 in payload else "E"
            edge_pos[v] = payload
        elif kind == "face":
            role[v] = "D" if 0 in payload else "F"
            face_pos[v] = payload
    adj = K.adjacency()
    boundary = set(role)
    interior = [v for v in K.vertices if v not in boundary]
    kind_of = {v: carriers[v][0] for v in K.vertices}
    for v in interior:
        if any(kind_of[w] == "corner" for w in adj[v]):
            role[v] = "L1"
    for v in interior:
        if v in role:
            continue
        n_face = sum(1 for w in adj[v] if kind_of[w] == "face")
        if any(kind_of[w] == "edge" for w in adj[v]) or n_face >= 2:
            role[v] = "L2"
    for v in interior:
        role.setdefault(v, "core")
    counts = {k: sum(1 for r in role.values() if r == k) for k in
              ("A", "B", "C", "D", "E", "F", "L1", "L2", "core")}
    expected = {"A": 1, "B": 3, "C": 3, "D": 9, "E": 3, "F": 3,
                "L1": 12, "L2": 16, "core": 66}
    if counts != expected:
        raise NotX543(f"role counts {counts} != {expected}")
    return RoleMap(role=role, corners=corners, edge_pos=edge_pos, face_pos=face_pos)


# -- the flattening frame ------------------------------------------------


@dataclass
class FlattenFrame:
    """Fixed data of one flattening run."""

    K: SimplicialComplex
    roles: RoleMap
    apex_start: np.ndarray
    apex_target: np.ndarray
    b_pos: dict  # corner position index (1..3) -> np.ndarray
    e_pos: dict  # E vertex -> np.ndarray (frozen)
    tets: np.ndarray = field(init=False)

    def __post_init__(self):
        self.tets = np.array(self.K.simplices(3), dtype=int)

    def corner_point(self, t: float, pos: int) -> np.ndarray:
        if pos == 0:
            return (1.0 - t) * self.apex_start + t * self.apex_target
        return self.b_pos[pos]


def build_frame(K: SimplicialComplex, roles: RoleMap, points: dict) -> FlattenFrame:
    """Frame with the apex target at the cube-corner position.

    The regular apex sits at twice the cube-corner height over the base
    centroid, so the target is the midpoint of apex and centroid.
    """
    p = {v: np.asarray(points[v], dtype=float) for v in K.vertices}
    apex_start = p[roles.corners[0]]
    b_pos = {i: p[roles.corners[i]] for i in (1, 2, 3)}
    centroid = (b_pos[1] + b_pos[2] + b_pos[3]) / 3.0
    apex_target = (apex_start + centroid) / 2.0
    e_pos = {v: p[v] for v in roles.of_kind("E")}
    return FlattenFrame(K, roles, apex_start, apex_target, b_pos, e_pos)


def prescribe_positions(t: float, roles: RoleMap, frame: FlattenFrame) -> dict:
    """Prescribed positions of A, B, C and E at homotopy parameter t.

    C vertices sit where the incircles of the faces around A touch their
    A-edges: at tangent length (|ABi| + |ABj| - |BiBj|) / 2 from A.
    """
    out: dict = {}
    A = frame.corner_point(t, 0)
    out[roles.corners[0]] = A
    for i in (1, 2, 3):
        out[roles.corners[i]] = frame.b_pos[i]
    ell = {i: float(np.linalg.norm(frame.b_pos[i] - A)) for i in (1, 2, 3)}
    base = {
        (i, j): float(np.linalg.norm(frame.b_pos[i] - frame.b_pos[j]))
        for i in (1, 2, 3)
        for j in (1, 2, 3)
        if i < j
    }
    for v, (zero, i) in ((v, roles.edge_pos[v]) for v in roles.of_kind("C")):
        others = [j for j in (1, 2, 3) if j != i]
        ds = [
            (ell[i] + ell[j] - base[tuple(sorted((i, j)))]) / 2.0 for j in others
        ]
        if abs(ds[0] - ds[1]) > 1e-6 * ell[i]:
            raise GeometryError(f"incircle touch points disagree on edge A-B{i}")
        d = (ds[0] + ds[1]) / 2.0
        u = (frame.b_pos[i] - A) / ell[i]
        out[v] = A + d * u
    for v in roles.of_kind("E"):
        out[v] = frame.e_pos[v]
    return out


def _plane_normal(a, b, c) -> np.ndarray:
    n = np.cross(b - a, c - a)
    return n / np.linalg.norm(n)


def _face_corners(frame: FlattenFrame, t: float, key) -> tuple:
    return tuple(frame.corner_point(t, i) for i in key)


def advance(points: np.ndarray, frame: FlattenFrame, t_old: float, t_new: float) -> np.ndarray:
    """One homotopy substep: move prescribed vertices, transport D inside
    their rotating faces, carry the interior by a fitted similarity."""
    roles = frame.roles
    new = points.copy()
    for v, p in prescribe_positions(t_new, roles, frame).items():
        new[v] = p
    # D rides along by barycentric transport in its (A, Bi, Bj) face
    for v in roles.of_kind("D"):
        key = roles.face_pos[v]
        a0, b0, c0 = _face_corners(frame, t_old, key)
        a1, b1, c1 = _face_corners(frame, t_new, key)
        M = np.column_stack((b0 - a0, c0 - a0))
        uv, *_ = np.linalg.lstsq(M, points[v] - a0, rcond=None)
        new[v] = a1 + uv[0] * (b1 - a1) + uv[1] * (c1 - a1)
    # interior block: least-squares scale-and-translate fitted on the boundary
    bverts = roles.of_kind("A", "B", "C", "D", "E", "F")
    X = points[bverts]
    Y = new[bverts]
    xm, ym = X.mean(axis=0), Y.mean(axis=0)
    denom = float(((X - xm) ** 2).sum())
    s = float(((X - xm) * (Y - ym)).sum()) / denom if denom else 1.0
    tau = ym - s * xm
    for v in roles.of_kind("L1", "L2", "core"):
        new[v] = s * points[v] + tau
    return new


# -- angle repair --------------------------------------------------------


@dataclass
class FlattenConfig:
    n_steps: int = 40
    correction_max_iters: int = 400
    correction_step: float = 0.05
    acute_margin_deg: float = 1e-6
    seed: int = 0
    min_improve: float = 1e-12
    tie_tol: float = 5e-4  # pairs within this of the worst join the descent
    working_margin: float = 2e-3  # repair aims this far below 90 degrees
    max_step_halvings: int = 6  # substep refinement before giving up

    def __post_init__(self):
        if self.n_steps < 1:
            raise ValueError("n_steps >= 1 required")
        if not 0.0 < self.correction_step < 0.5:
            raise ValueError("correction_step must lie in (0, 0.5)")


@dataclass
class FlattenState:
    """worst_cosine is the negated cosine of the worst dihedral pair;
    every angle is acute with margin m iff worst_cosine < -sin(m)."""

    t: float
    points: np.ndarray
    worst_cosine: float

    def embedding(self, K: SimplicialComplex) -> Embedding:
        return Embedding(
            {v: tuple(float(c) for c in self.points[v]) for v in K.vertices},
            3,
            "float",
        )


def _neg_cosines(frame: FlattenFrame, points: np.ndarray) -> np.ndarray:
    """Negated dihedral cosines: the mesh is acute iff all entries < 0."""
    return -dihedral_cosines_array(points[frame.tets])


def _slot_neg_cosine(pts4: np.ndarray, col: int) -> float:
    return -float(dihedral_cosines_array(pts4[None, :, :])[0, col])


def _snap_constraints(frame: FlattenFrame, t: float, points: np.ndarray, verts) -> None:
    """Project D/F vertices exactly back onto their carrier planes."""
    roles = frame.roles
    for v in verts:
        r = roles.role[v]
        if r not in ("D", "F"):
            continue
        a, b, c = _face_corners(frame, t, roles.face_pos[v])
        n = _plane_normal(a, b, c)
        points[v] = points[v] - np.dot(points[v] - a, n) * n


def _pair_gradient(frame, t, points, row, col, h, core_centroid):
    """Central-difference gradient of one pair's negated cosine, projected
    onto the movement constraints.

    Free vertices contribute a 3-vector each; core vertices contribute to
    the rigid block's translation ("core") and scaling ("core_scale")
    degrees of freedom, the only motions the block admits."""
    roles = frame.roles
    tet = frame.tets[row]
    pts4 = points[tet]
    probes = np.repeat(pts4[None, :, :], 24, axis=0)
    for local in range(4):
        for axis in range(3):
            k = 2 * (3 * local + axis)
            probes[k, local, axis] += h
            probes[k + 1, local, axis] -= h
    vals = -dihedral_cosines_array(probes)[:, col]
    out: dict = {}
    for local, v in enumerate(tet):
        r = roles.role[v]
        if r in ROLE_FROZEN:
            continue
        g = np.array(
            [
                (vals[2 * (3 * local + axis)] - vals[2 * (3 * local + axis) + 1]) / (2 * h)
                for axis in range(3)
            ]
        )
        if r in ("D", "F"):
            a, b, c = _face_corners(frame, t, roles.face_pos[v])
            n = _plane_normal(a, b, c)
            g = g - np.dot(g, n) * n
        if r == "core":
            out["core"] = out.get("core", np.zeros(3)) + g
            radial = points[v] - core_centroid
            out["core_scale"] = out.get("core_scale", np.zeros(1)) + np.dot(g, radial)
        else:
            out[v] = out.get(v, np.zeros(3)) + g
    return out


def _hull_min_norm(G: np.ndarray, iters: int = 120) -> np.ndarray:
    """Frank-Wolfe projection of the origin onto the convex hull of the
    rows of G; the negated result is the steepest-descent direction for
    the max of the active pairs."""
    m = G.shape[0]
    lam = np.full(m, 1.0 / m)
    w = lam @ G
    for _ in range(iters):
        scores = G @ w
        i = int(np.argmin(scores))
        d = G[i] - w
        dd = float(d @ d)
        if dd <= 1e-30:
            break
        gamma = min(1.0, max(0.0, float(-(w @ d)) / dd))
        if gamma <= 0.0:
            break
        w = w + gamma * d
    return w


def correct_angles(
    frame: FlattenFrame, t: float, points: np.ndarray, config: FlattenConfig
) -> tuple[np.ndarray, int, bool]:
    """Monotone repair of the worst dihedral cosine under role constraints.

    All pairs within tie_tol of the worst are active; the step direction
    is the minimax steepest descent over their projected gradients
    (origin projected onto the gradient hull).  Returns (points,
    iterations, converged); raises Stalled when no admissible move
    improves the worst cosine.  Accepted iterations never increase the
    global worst cosine.
    """
    roles = frame.roles
    hard = -math.sin(math.radians(config.acute_margin_deg))
    target = min(hard, -config.working_margin)
    core = roles.of_kind("core")
    cos_all = _neg_cosines(frame, points)
    iters = 0
    while iters < config.correction_max_iters:
        worst = float(cos_all.max())
        if worst < target:
            return points, iters, True
        rows, cols = np.nonzero(cos_all >= worst - config.tie_tol)
        pairs = list(zip(rows.tolist(), cols.tolist()))
        edge_scale = float(
            np.mean(
                [
                    np.linalg.norm(points[frame.tets[pairs[0][0]][i]] - points[frame.tets[pairs[0][0]][j]])
                    for i, j, _, _ in EDGE_SLOTS
                ]
            )
        )
        h = 1e-6 * edge_scale
        core_centroid = points[core].mean(axis=0) if core else np.zeros(3)
        grads = [_pair_gradient(frame, t, points, r, c, h, core_centroid) for r, c in pairs]
        keys = sorted({k for g in grads for k in g}, key=str)
        if not keys:
            raise Stalled(
                f"{len(pairs)} worst pairs have no movable vertex",
                FlattenState(t, points, worst),
            )
        width = {k: (1 if k == "core_scale" else 3) for k in keys}
        offset = {}
        pos = 0
        for k in keys:
            offset[k] = pos
            pos += width[k]
        G = np.zeros((len(pairs), pos))
        for gi, g in enumerate(grads):
            for k, vec in g.items():
                G[gi, offset[k]: offset[k] + width[k]] = vec
        w = _hull_min_norm(G)
        if float(np.abs(w).max()) < 1e-14:
            if worst < hard:
                return points, iters, True  # acute plateau, margin saturated
            raise Stalled(
                f"no common descent direction at t={t:.4f}, worst={worst:.8f}",
                FlattenState(t, points, worst),
            )
        move = np.zeros_like(points)
        for k in keys:
            vec = -w[offset[k]: offset[k] + width[k]]
            if k == "core":
                for v in core:
                    move[v] += vec
            elif k == "core_scale":
                for v in core:
                    move[v] += vec[0] * (points[v] - core_centroid)
            else:
                move[k] += vec
        moved = np.nonzero(np.abs(move).sum(axis=1))[0]
        norm = float(np.abs(move[moved]).max())
        step = config.correction_step * edge_scale / norm
        accepted = False
        for _ in range(20):
            cand = points.copy()
            cand[moved] += step * move[moved]
            _snap_constraints(frame, t, cand, moved.tolist())
            cand_cos = _neg_cosines(frame, cand)
            if float(cand_cos.max()) < worst - config.min_improve:
                accepted = True
                break
            step /= 2.0
        if not accepted:
            if worst < hard:
                return points, iters, True  # acute plateau, margin saturated
            raise Stalled(
                f"line search exhausted at t={t:.4f}, worst={worst:.8f}",
                FlattenState(t, points, worst),
            )
        points, cos_all = cand, cand_cos
        iters += 1
    return points, iters, float(cos_all.max()) < hard


@dataclass
class FlattenResult:
    success: bool
    stalled: bool
    state: FlattenState
    trace: list[tuple[float, float, int]]
    message: str

    def embedding(self, K: SimplicialComplex) -> Embedding:
        return self.state.embedding(K)


def run_flatten(
    frame: FlattenFrame, start_points: np.ndarray, config: FlattenConfig
) -> FlattenResult:
    """Drive the homotopy from t=0 to t=1 with correction at every substep.

    The trace records (t, worst cosine, correction iterations) per
    substep; identical configs and inputs give identical traces.
    """
    points = np.array(start_points, dtype=float)
    trace = [(0.0, float(_neg_cosines(frame, points).max()), 0)]
    t_old = 0.0
    base_dt = 1.0 / config.n_steps
    dt = base_dt
    halvings = 0
    while t_old < 1.0 - 1e-12:
        t_new = min(1.0, t_old + dt)
        stepped = advance(points, frame, t_old, t_new)
        try:
            stepped, iters, converged = correct_angles(frame, t_new, stepped, config)
        except Stalled as exc:
            if halvings < config.max_step_halvings:
                halvings += 1
                dt /= 2.0
                continue
            trace.append((t_new, exc.state.worst_cosine, -1))
            return FlattenResult(
                success=False,
                stalled=True,
                state=exc.state,
                trace=trace,
                message=str(exc),
            )
        worst = float(_neg_cosines(frame, stepped).max())
        trace.append((t_new, worst, iters))
        if not converged:
            return FlattenResult(
                success=False,
                stalled=True,
                state=FlattenState(t_new, stepped, worst),
                trace=trace,
                message=f"correction budget exhausted at t={t_new:.4f}",
            )
        points = stepped
        t_old = t_new
        if halvings and dt < base_dt:
            dt = min(base_dt, dt * 2.0)
            halvings = max(0, halvings - 1)
    state = FlattenState(1.0, points, float(_neg_cosines(frame, points).max()))
    report = verify_acute(frame.K, state.embedding(frame.K), config.acute_margin_deg)
    return FlattenResult(
        success=report.acute,
        stalled=False,
        state=state,
        trace=trace,
        message="acute at t=1" if report.acute else "non-acute at t=1",
    )


# -- Step 1: stereographic projection and radial placement ----------------


@dataclass(frozen=True)
class Step1State:
    K: SimplicialComplex
    roles: RoleMap
    projected: dict  # vertex -> R^3 point before radial placement
    corner_dirs: np.ndarray  # unit directions of the four corners


@lru_cache(maxsize=1)
def step1_state() -> Step1State:
    """Project the ball and locate the tetrahedral frame directions."""
    fr = x543_frame()
    projected = {
        v: np.array(stereographic_project(fr.embedding4.point(v), fr.removed_center))
        for v in fr.complex.vertices
    }
    roles = classify_roles(fr.complex, fr.corners)
    dirs = []
    for c in fr.corners:
        p = projected[c]
        dirs.append(p / np.linalg.norm(p))
    dirs = np.array(dirs)
    dots = dirs @ dirs.T
    off = dots[~np.eye(4, dtype=bool)]
    if np.abs(off + 1.0 / 3.0).max() > 1e-9:
        raise GeometryError("projected corners are not in tetrahedral position")
    return Step1State(fr.complex, roles, projected, dirs)


def step1_embedding(scale: float) -> Embedding:
    """Radially place the 22 boundary vertices on the scaled target boundary."""
    st = step1_state()
    emb = Embedding({v: tuple(p) for v, p in st.projected.items()}, 3, "float")
    boundary = st.roles.of_kind("A", "B", "C", "D", "E", "F")
    return radial_to_tetra_boundary(emb, boundary, st.corner_dirs, scale)


def _worst_neg_cosine(K: SimplicialComplex, emb: Embedding) -> float:
    """max over pairs of -cos(dihedral); negative iff the mesh is acute."""
    tets = np.array(K.simplices(3), dtype=int)
    pts = np.array([emb.point(v) for v in K.vertices], dtype=float)
    order = {v: i for i, v in enumerate(K.vertices)}
    idx = np.vectorize(order.get)(tets)
    return -float(dihedral_cosines_array(pts[idx]).min())


def step1_scale_interval(
    lo: float = 4.0,
    hi: float = 9.0,
    samples: int = 40,
    margin_deg: float = 1e-6,
    refine: int = 30,
) -> tuple[float, float, float] | None:
    """Search for the scale window on which the Step-1 mesh is acute.

    Returns (lo, hi, best_scale) with the endpoints located by bisection,
    or None when no sampled scale is acute.  best_scale minimizes the
    worst cosine among the samples.
    """
    st = step1_state()
    threshold = -math.sin(math.radians(margin_deg))
    grid = np.linspace(lo, hi, samples)
    worsts = [(_worst_neg_cosine(st.K, step1_embedding(float(s))), float(s)) for s in grid]
    acute = [(w, s) for w, s in worsts if w < threshold]
    if not acute:
        return None
    best = min(acute)[1]
    s_lo = min(s for _, s in acute)
    s_hi = max(s for _, s in acute)

    def bisect(inside: float, outside: float) -> float:
        for _ in range(refine):
            mid = (inside + outside) / 2.0
            if _worst_neg_cosine(st.K, step1_embedding(mid)) < threshold:
                inside = mid
            else:
                outside = mid
        return inside

    lo_edge = bisect(s_lo, lo) if s_lo > grid[0] else s_lo
    hi_edge = bisect(s_hi, hi) if s_hi < grid[-1] else s_hi
    return float(lo_edge), float(hi_edge), float(best)


def default_problem(scale: float | None = None) -> tuple[FlattenFrame, np.ndarray]:
    """Frame and start points from the Step-1 pipeline."""
    st = step1_state()
    if scale is None:
        found = step1_scale_interval()
        if found is None:
            raise NoAcuteScale("no acute Step-1 scale found in the default window")
        scale = found[2]
    emb = step1_embedding(scale)
    frame = build_frame(st.K, st.roles, emb.points)
    points = np.array([emb.point(v) for v in st.K.vertices], dtype=float)
    return frame, points


# -- Step 3: refit the regular tetrahedron to the flattened faces ----------


def reference_face_positions(K: SimplicialComplex, roles: RoleMap, points: dict) -> dict:
    """Target positions for the 12 face vertices, pulled from the embedded
    regular-tetrahedron table through the combinatorial isomorphism and
    the corner similarity.

    Those coordinates are precisely the face pattern induced by the
    standard-tetrahedron mesh across each shared face."""
    from .appendixdata import load_reference, reconstruct

    refK, refEmb = reconstruct(load_reference("t0"))
    iso = are_isomorphic(K, refK)
    if iso is None:
        raise NotX543("complex is not isomorphic to the reference ball")
    src = np.array([points[c] for c in roles.corners], dtype=float)
    dst = np.array([refEmb.float_point(iso[c]) for c in roles.corners], dtype=float)
    # the four corner pairs pin down the affine map from the reference
    # frame; for two regular tetrahedra it is a (possibly improper) similarity
    M = np.linalg.solve(np.hstack([dst, np.ones((4, 1))]), src)
    out = {}
    for v in roles.of_kind("D", "F"):
        y = np.array(refEmb.float_point(iso[v]), dtype=float)
        out[v] = np.hstack([y, 1.0]) @ M
    return out


def step3_adjust(
    K: SimplicialComplex,
    roles: RoleMap,
    emb: Embedding,
    face_targets: dict,
    scale_lo: float = 0.5,
    scale_hi: float = 1.5,
    samples: int = 101,
    margin_deg: float = 1e-6,
) -> tuple[Embedding, float, tuple[float, float]]:
    """Move the 12 face vertices to their targets, then rescale the interior
    about its centroid until the mesh is acute.

    Returns (embedding, chosen scale, acute scale interval).  Raises
    NoAcuteScale when the search interval contains no acute configuration.
    """
    pts = {v: np.asarray(p, dtype=float) for v, p in emb.points.items()}
    for v, p in face_targets.items():
        if roles.role[v] not in ("D", "F"):
            raise GeometryError(f"vertex {v} is not a face vertex")
        pts[v] = np.asarray(p, dtype=float)
    interior = roles.of_kind("L1", "L2", "core")
    centroid = np.mean([pts[v] for v in interior], axis=0)
    threshold = -math.sin(math.radians(margin_deg))

    def with_scale(s: float) -> Embedding:
        scaled = dict(pts)
        for v in interior:
            scaled[v] = centroid + s * (pts[v] - centroid)
        return Embedding({v: tuple(map(float, p)) for v, p in scaled.items()}, 3, "float")

    grid = np.linspace(scale_lo, scale_hi, samples)
    worsts = [(_worst_neg_cosine(K, with_scale(float(s))), float(s)) for s in grid]
    acute = [(w, s) for w, s in worsts if w < threshold]
    if not acute:
        raise NoAcuteScale(
            f"no acute interior scale in [{scale_lo}, {scale_hi}]"
        )
    best = min(acute)[1]
    return with_scale(best), best, (min(s for _, s in acute), max(s for _, s in acute))
