"""f-vector identities and the combinatorial obstruction to rich triangulations.

For a compact triangulated m-dimensional homology manifold M with
boundary, the generalized Dehn-Sommerville relations state, for every k,

    f_k(M) - f_k(dM)  =  sum_{i=k}^{m} (-1)^(i+m) C(i+1, k+1) f_i(M).

In dimension 4 this yields two linear identities which combine with a
flag-counting argument to show that a rich triangulation must satisfy
2 f_0 <= 2 chi + f1(dM); closed manifolds therefore admit only finitely
many rich triangulations.  This module makes all of those checks
executable, together with the simplicial tubular neighborhood N_X(Y)
used to reduce patch-counting questions to the closed inequality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .simplicial import (
    BadLink,
    ComplexError,
    NotPure,
    RichnessWitness,
    SimplicialComplex,
    Simplex,
    boundary_complex,
    euler_characteristic,
    is_rich,
)


class NotRich(ComplexError):
    """Operation requires a rich complex."""


class NotFull(ComplexError):
    """The subcomplex is not full in its ambient complex."""

    def __init__(self, witness: Simplex):
        self.witness = witness
        super().__init__(f"simplex {witness} has all vertices in Y but is missing from Y")


@dataclass(frozen=True)
class DSReport:
    """Residuals of the generalized Dehn-Sommerville equations.

    residuals[k] = f_k(M) - f_k(dM) - sum_i (-1)^(i+m) C(i+1,k+1) f_i(M);
    every entry vanishes on a genuine homology manifold with boundary.
    """

    m: int
    f: tuple[int, ...]
    f_boundary: tuple[int, ...]
    residuals: tuple[int, ...]

    @property
    def all_zero(self) -> bool:
        return all(r == 0 for r in self.residuals)


def dehn_sommerville(K: SimplicialComplex, assume_dim: int | None = None) -> DSReport:
    """Dehn-Sommerville residuals of K for k = 0..m."""
    m = K.dim if assume_dim is None else assume_dim
    if not K.is_pure(m):
        raise NotPure(f"expected pure dimension {m}, f={K.f_vector()}")
    bd = boundary_complex(K)
    f = K.f_vector() + (0,) * (m + 1 - len(K.f_vector()))
    fb = bd.f_vector() + (0,) * (m + 1 - len(bd.f_vector()))
    residuals = []
    for k in range(m + 1):
        rhs = sum((-1) ** (i + m) * comb(i + 1, k + 1) * f[i] for i in range(k, m + 1))
        residuals.append(f[k] - fb[k] - rhs)
    return DSReport(m=m, f=f, f_boundary=fb, residuals=tuple(residuals))


def corollary_ds_4d(K: SimplicialComplex) -> tuple[int, int]:
    """The two 4-dimensional specializations, as residuals.

    (i)  2 f1 - f1(dM) - (3 f2 - 6 f3 + 10 f4)
    (ii) -f2(dM) - (-4 f3 + 10 f4)
    """
    if not K.is_pure(4):
        raise NotPure(f"expected pure 4-dimensional complex, f={K.f_vector()}")
    bd = boundary_complex(K)
    f = K.f_vector()
    fb = bd.f_vector() + (0,) * (5 - len(bd.f_vector()))
    res_i = (2 * f[1] - fb[1]) - (3 * f[2] - 6 * f[3] + 10 * f[4])
    res_ii = (-fb[2]) - (-4 * f[3] + 10 * f[4])
    return res_i, res_ii


@dataclass(frozen=True)
class ObstructionReport:
    """The inequality 2 f_0 <= 2 chi + f1(dM) against the richness verdict.

    A rich complex must have slack >= 0; a violation therefore forces a
    richness witness, which is how the nonexistence corollaries run.
    For closed complexes the sharper form f_0 <= chi applies.
    """

    lhs: int
    rhs: int
    slack: int
    rich_witness: RichnessWitness | None
    closed: bool
    f0: int
    chi: int

    @property
    def rich(self) -> bool:
        return self.rich_witness is None

    @property
    def closed_inequality_holds(self) -> bool:
        return self.f0 <= self.chi if self.closed else True


def richness_obstruction(K: SimplicialComplex) -> ObstructionReport:
    """Evaluate 2 f_0 vs 2 chi + f1(dM) together with the richness check."""
    if not K.is_pure(4):
        raise NotPure(f"expected pure 4-dimensional complex, f={K.f_vector()}")
    bd = boundary_complex(K)
    f0 = K.f_vector()[0]
    fb1 = len(bd.faces[1]) if bd.dim >= 1 else 0
    chi = euler_characteristic(K)
    lhs = 2 * f0
    rhs = 2 * chi + fb1
    return ObstructionReport(
        lhs=lhs,
        rhs=rhs,
        slack=rhs - lhs,
        rich_witness=is_rich(K),
        closed=bd.dim < 0,
        f0=f0,
        chi=chi,
    )


def flag_count_inequality(K: SimplicialComplex) -> tuple[int, int]:
    """(number of triangle-in-facet flags, 5 * number of interior triangles).

    Counts pairs (2-simplex, 4-simplex containing it) by direct
    enumeration; each interior 2-simplex of a rich complex lies in at
    least five 4-simplices, so flags >= bound.  Raises NotRich when K
    is not rich.
    """
    if not K.is_pure(4):
        raise NotPure(f"expected pure 4-dimensional complex, f={K.f_vector()}")
    witness = is_rich(K)
    if witness is not None:
        raise NotRich(f"complex is not rich: {witness}")
    bd = boundary_complex(K)
    triangles = K.faces[2]
    flags = 0
    for facet in K.faces[4]:
        for tri in combinations(facet, 3):
            if tri in triangles:
                flags += 1
    fb2 = len(bd.faces[2]) if bd.dim >= 2 else 0
    bound = 5 * (len(triangles) - fb2)
    return flags, bound


# -- full subcomplexes and the simplicial neighborhood ----------------


def is_full_subcomplex(X: SimplicialComplex, Y) -> Simplex | None:
    """None if Y is full in X, else a witness simplex.

    Y may be a SimplicialComplex on a subset of X's vertices, or a bare
    vertex collection (then Y is read as those vertices with no higher
    simplices).  A witness is a simplex of X with every vertex in Y that
    Y fails to contain; fullness demands its presence.
    """
    if isinstance(Y, SimplicialComplex):
        yverts = set(Y.vertices)
        has = lambda s: s in Y  # noqa: E731
    else:
        yverts = set(Y)
        has = lambda s: len(s) == 1  # noqa: E731
    for d in range(X.dim + 1):
        for s in X.simplices(d):
            if yverts.issuperset(s) and not has(s):
                return s
    return None


@dataclass(frozen=True)
class NeighborhoodResult:
    """N_X(Y) with bookkeeping back to X.

    vertex_origin maps each vertex of the neighborhood either to
    ("vertex", v) for an original vertex of Y or to ("simplex", t) for a
    simplex t of X meeting Y but not inside it.  positions realizes the
    embedding geometrically (original point or barycenter) when X came
    with one.
    """

    complex: SimplicialComplex
    vertex_origin: dict
    positions: dict | None


def simplicial_neighborhood(
    X: SimplicialComplex, Y: SimplicialComplex, points: dict | None = None
) -> NeighborhoodResult:
    """The simplicial tubular neighborhood N_X(Y) of a full subcomplex.

    New vertices are the simplices of X that meet Y without lying in it.
    A simplex of the neighborhood is spanned by the vertices of a
    simplex sigma of Y together with an ascending chain t1 < ... < tk of
    such simplices with sigma a proper face of t1 (sigma may be empty).

    When `points` maps X's vertices to coordinates, each new vertex is
    realized at the barycenter of its simplex.
    """
    for s in Y.all_simplices():
        if s not in X:
            raise ComplexError(f"Y is not a subcomplex of X: {s} missing from X")
    witness = is_full_subcomplex(X, Y)
    if witness is not None:
        raise NotFull(witness)
    yverts = set(Y.vertices)
    qualifying = []
    for d in range(X.dim + 1):
        for t in X.simplices(d):
            if t not in Y and any(v in yverts for v in t):
                qualifying.append(t)
    qualifying.sort(key=lambda t: (len(t), t))
    new_id: dict = {}
    origin: dict = {}
    for v in sorted(yverts):
        new_id[("v", v)] = len(new_id)
        origin[new_id[("v", v)]] = ("vertex", v)
    for t in qualifying:
        new_id[("s", t)] = len(new_id)
        origin[new_id[("s", t)]] = ("simplex", t)

    qual_set = set(qualifying)
    supersets: dict[Simplex, list[Simplex]] = {t: [] for t in qualifying}
    for t in qualifying:
        st = set(t)
        for u in qualifying:
            if len(u) > len(t) and st.issubset(u):
                supersets[t].append(u)

    faces: list[set] = [set() for _ in range(X.dim + 2)]

    def add(simplex: tuple):
        faces[len(simplex) - 1].add(tuple(sorted(simplex)))

    def chains_above(first_candidates, prefix: tuple, base: tuple):
        for t in first_candidates:
            cur = base + (new_id[("s", t)],)
            add(prefix + cur)
            chains_above(supersets[t], prefix, cur)

    # sigma = a simplex of Y (chain may be empty), or empty (chain required)
    for d in range(Y.dim + 1):
        for sigma in Y.simplices(d):
            add(sigma_vertices := tuple(new_id[("v", v)] for v in sigma))
            sset = set(sigma)
            starts = [t for t in qualifying if sset.issubset(t)]
            chains_above(starts, sigma_vertices, ())
    chains_above(qualifying, (), ())

    while faces and not faces[-1]:
        faces.pop()
    complex_ = SimplicialComplex([frozenset(f) for f in faces])

    positions = None
    if points is not None:
        positions = {}
        for nid, (kind, payload) in origin.items():
            if kind == "vertex":
                positions[nid] = tuple(points[payload])
            else:
                pts = [points[v] for v in payload]
                k = len(pts)
                positions[nid] = tuple(
                    Fraction(sum(p[i] for p in pts), k)
                    if not isinstance(pts[0][i], float)
                    else sum(p[i] for p in pts) / k
                    for i in range(len(pts[0]))
                )
    return NeighborhoodResult(complex_, origin, positions)


@dataclass(frozen=True)
class CombCorollaryReport:
    """Both sides of 2 f_0 <= 2 (1 + f2(dM)) + f1(dM).

    Only meaningful for complexes with nonempty boundary; for closed
    inputs `applicable` is False and the bound degenerates to 2.
    """

    lhs: int
    rhs: int
    applicable: bool

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs


def comb_corollary_check(M: SimplicialComplex) -> CombCorollaryReport:
    """Evaluate the planar-patch inequality 2 f_0 <= 2(1 + f2(dM)) + f1(dM)."""
    if not M.is_pure(4):
        raise NotPure(f"expected pure 4-dimensional complex, f={M.f_vector()}")
    bd = boundary_complex(M)
    f0 = M.f_vector()[0]
    fb1 = len(bd.faces[1]) if bd.dim >= 1 else 0
    fb2 = len(bd.faces[2]) if bd.dim >= 2 else 0
    return CombCorollaryReport(
        lhs=2 * f0,
        rhs=2 * (1 + fb2) + fb1,
        applicable=bd.dim >= 0,
    )


# -- finite-patch isoperimetry harness ---------------------------------


def vertex_boundary(K: SimplicialComplex, omega) -> frozenset:
    """Vertices outside omega adjacent to a vertex of omega."""
    om = set(omega)
    adj = K.adjacency()
    out: set[int] = set()
    for v in om:
        out.update(adj[v] - om)
    return frozenset(out)


def isoperimetry_report(X: SimplicialComplex, omega) -> dict:
    """Raw counts comparing a finite patch with its neighborhood boundary.

    Builds Y = the full subcomplex spanned by omega and M = N_X(Y), and
    reports |omega|, |vertex boundary|, and the boundary face counts of
    M.  Constant-chasing between them is left to the caller.
    """
    from .simplicial import induced_subcomplex

    om = sorted(set(omega))
    Y = induced_subcomplex(X, om)
    M = simplicial_neighborhood(X, Y).complex
    bd = boundary_complex(M)
    fb = bd.f_vector() + (0,) * (3 - len(bd.f_vector()))
    return {
        "omega": len(om),
        "vertex_boundary": len(vertex_boundary(X, om)),
        "f0": M.f_vector()[0] if M.dim >= 0 else 0,
        "fb0": fb[0],
        "fb1": fb[1],
        "fb2": fb[2],
    }
