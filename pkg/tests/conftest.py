import pytest

from acutemesh import polytope600, shapes
from acutemesh.simplicial import complex_from_edges
from acutemesh import refdata


@pytest.fixture(scope="session")
def cell600():
    return polytope600.generate_600_cell()


@pytest.fixture(scope="session")
def x543_frame():
    return polytope600.x543_frame()


@pytest.fixture(scope="session")
def x543(x543_frame):
    return x543_frame.complex


@pytest.fixture(scope="session")
def appendix_complex():
    return complex_from_edges(116, refdata.EDGES)


@pytest.fixture(scope="session")
def five_tet_cube():
    return polytope600.build_W()


@pytest.fixture(scope="session")
def coned_octahedron():
    return polytope600.build_Y()


@pytest.fixture(scope="session")
def boundary_d5():
    return shapes.boundary_simplex(5)
