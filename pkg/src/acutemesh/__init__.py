"""Acute triangulations of the cube, octahedron and tetrahedra.

Combinatorics of the 600-cell and its 543-tetrahedron ball, exact
dihedral-angle verification, the flattening optimizer, and the
Dehn-Sommerville obstruction machinery for dimension 4.
"""

from .simplicial import (
    SimplicialComplex,
    build_complex,
    complex_from_edges,
    f_vector,
    euler_characteristic,
    link,
    boundary_complex,
    interior_simplices,
    is_flag,
    find_empty_square,
    is_rich,
    are_isomorphic,
)
from .geometry import (
    Embedding,
    dihedral_cosines,
    dihedral_cosine_signs,
    verify_acute,
    verify_geometric_complex,
    stereographic_project,
    radial_to_tetra_boundary,
)
from .fvector import (
    dehn_sommerville,
    corollary_ds_4d,
    richness_obstruction,
    flag_count_inequality,
    is_full_subcomplex,
    simplicial_neighborhood,
    comb_corollary_check,
)
from .polytope600 import (
    generate_600_cell,
    extract_x543,
    face_template,
    special_subdivision,
    build_W,
    build_Y,
    build_platonic_cones,
)
from .appendixdata import (
    load_reference,
    reconstruct,
    verify_reference,
    assemble_cube,
    assemble_octahedron,
)
from .flatten import (
    classify_roles,
    prescribe_positions,
    correct_angles,
    run_flatten,
    step3_adjust,
    FlattenConfig,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
