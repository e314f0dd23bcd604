"""Mesh documents: JSON interchange plus OFF and VTK export.

A mesh document bundles a complex (maximal simplices, sorted), an
optional embedding and free-form metadata.  JSON output is fully
deterministic: sorted keys, sorted simplex lists.  Exact rational
coordinates serialize as "p/q" strings; Q(sqrt5) embeddings are
converted to floats on export.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .geometry import Embedding, GeometryError
from .simplicial import (
    ComplexError,
    SimplicialComplex,
    boundary_complex,
    complex_from_json_dict,
    complex_to_json_dict,
    relabel_dense,
)


@dataclass
class MeshDocument:
    complex: SimplicialComplex
    embedding: Embedding | None = None
    metadata: dict = field(default_factory=dict)


def _embedding_to_json(emb: Embedding, order) -> dict:
    scalar = emb.scalar
    points = []
    if scalar == "qsqrt5":
        scalar = "float"
        points = [[float(c) for c in emb.point(v)] for v in order]
    elif scalar == "rational":
        points = [[f"{Fraction(c)}" for c in emb.point(v)] for v in order]
    elif scalar == "int":
        points = [[int(c) for c in emb.point(v)] for v in order]
    else:
        points = [[float(c) for c in emb.point(v)] for v in order]
    return {"scalar": scalar, "points": points}


def _embedding_from_json(doc: dict, n_vertices: int) -> Embedding:
    scalar = doc["scalar"]
    raw = doc["points"]
    if len(raw) != n_vertices:
        raise GeometryError(
            f"embedding has {len(raw)} points for {n_vertices} vertices"
        )
    if scalar == "int":
        pts = {i: tuple(int(c) for c in p) for i, p in enumerate(raw)}
    elif scalar == "rational":
        pts = {i: tuple(Fraction(c) for c in p) for i, p in enumerate(raw)}
    elif scalar == "float":
        pts = {i: tuple(float(c) for c in p) for i, p in enumerate(raw)}
    else:
        raise GeometryError(f"unknown scalar kind {scalar!r}")
    dims = {len(p) for p in pts.values()}
    if len(dims) > 1:
        raise GeometryError("inconsistent point dimensions")
    return Embedding(pts, dims.pop() if dims else 3, scalar)


def document_to_json(doc: MeshDocument) -> str:
    """Canonical JSON text of a mesh document (dense vertex ids)."""
    if doc.complex.dim >= 0:
        dense, old = relabel_dense(doc.complex)
    else:
        dense, old = doc.complex, ()
    payload = {
        "complex": complex_to_json_dict(dense),
        "embedding": None,
        "metadata": dict(sorted(doc.metadata.items())),
    }
    if doc.embedding is not None:
        missing = [v for v in old if v not in doc.embedding.points]
        if missing:
            raise GeometryError(f"embedding missing vertices {missing[:5]}")
        payload["embedding"] = _embedding_to_json(doc.embedding, old)
    return json.dumps(payload, sort_keys=True, indent=1)


def document_from_json(text: str) -> MeshDocument:
    payload = json.loads(text)
    if not isinstance(payload, dict) or "complex" not in payload:
        raise ComplexError("not a mesh document: missing 'complex'")
    K = complex_from_json_dict(payload["complex"])
    emb = None
    if payload.get("embedding") is not None:
        emb = _embedding_from_json(payload["embedding"], K.n_vertices)
    return MeshDocument(K, emb, payload.get("metadata", {}))


def write_document(doc: MeshDocument, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(document_to_json(doc))
        fh.write("\n")


def read_document(path: str) -> MeshDocument:
    with open(path) as fh:
        return document_from_json(fh.read())


# -- viewer formats -------------------------------------------------------


def export_off(doc: MeshDocument) -> str:
    """Boundary surface in ASCII OFF (surface viewers ignore cell interiors)."""
    if doc.embedding is None:
        raise GeometryError("OFF export needs an embedding")
    K = doc.complex
    emb = doc.embedding
    if K.dim == 3:
        surface = boundary_complex(K)
        tris = surface.simplices(2)
    elif K.dim == 2:
        tris = K.simplices(2)
    else:
        raise GeometryError(f"OFF export supports dimensions 2-3, got {K.dim}")
    verts = sorted({v for t in tris for v in t})
    index = {v: i for i, v in enumerate(verts)}
    lines = ["OFF", f"{len(verts)} {len(tris)} 0"]
    for v in verts:
        lines.append(" ".join(repr(float(c)) for c in emb.point(v)))
    for t in tris:
        lines.append("3 " + " ".join(str(index[v]) for v in t))
    return "\n".join(lines) + "\n"


def export_vtk(doc: MeshDocument) -> str:
    """Legacy ASCII VTK unstructured grid with tetrahedral cells (type 10)."""
    if doc.embedding is None:
        raise GeometryError("VTK export needs an embedding")
    K = doc.complex
    if K.dim != 3:
        raise GeometryError(f"VTK export expects a 3-complex, got dim {K.dim}")
    emb = doc.embedding
    verts = K.vertices
    index = {v: i for i, v in enumerate(verts)}
    cells = K.simplices(3)
    lines = [
        "# vtk DataFile Version 2.0",
        "acutemesh export",
        "ASCII",
        "DATASET UNSTRUCTURED_GRID",
        f"POINTS {len(verts)} double",
    ]
    for v in verts:
        lines.append(" ".join(repr(float(c)) for c in emb.point(v)))
    lines.append(f"CELLS {len(cells)} {5 * len(cells)}")
    for c in cells:
        lines.append("4 " + " ".join(str(index[v]) for v in c))
    lines.append(f"CELL_TYPES {len(cells)}")
    lines.extend("10" for _ in cells)
    return "\n".join(lines) + "\n"
