"""Standard complexes used as a verification corpus."""

from __future__ import annotations

from itertools import combinations, permutations

from .simplicial import SimplicialComplex, build_complex


def simplex_complex(n: int) -> SimplicialComplex:
    """The full n-simplex on vertices 0..n."""
    return build_complex([tuple(range(n + 1))])


def boundary_simplex(n: int) -> SimplicialComplex:
    """The boundary of the n-simplex: a triangulated (n-1)-sphere."""
    return build_complex(list(combinations(range(n + 1), n)))


def cross_polytope_boundary(n: int = 3) -> SimplicialComplex:
    """Boundary of the n-dimensional cross-polytope (octahedron for n=3).

    Vertices 2i and 2i+1 are antipodal; facets pick one vertex per axis.
    """
    facets = []
    for signs in range(2 ** n):
        facets.append(tuple(2 * i + ((signs >> i) & 1) for i in range(n)))
    return build_complex(facets)


def freudenthal_torus(dim: int = 4, k: int = 3) -> SimplicialComplex:
    """Kuhn-triangulated torus (Z/k)^dim; needs k >= 3 to stay simplicial.

    Each unit cube is split into dim! simplices along coordinate orderings,
    then everything is read modulo k.
    """
    if k < 3:
        raise ValueError("k >= 3 required for a genuine simplicial complex")

    def vid(coords):
        out = 0
        for c in coords:
            out = out * k + (c % k)
        return out

    facets = []
    base = [0] * dim
    while True:
        for perm in permutations(range(dim)):
            chain = [tuple(base)]
            cur = list(base)
            for axis in perm:
                cur[axis] += 1
                chain.append(tuple(cur))
            facets.append(tuple(vid(c) for c in chain))
        # odometer over (Z/k)^dim
        i = 0
        while i < dim:
            base[i] += 1
            if base[i] < k:
                break
            base[i] = 0
            i += 1
        if i == dim:
            break
    return build_complex(facets)
