"""One-off generator for src/acutemesh/refdata.py from the source tables."""

import re
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
text = (ROOT / "paper.md").read_text()

# blocks of \line{a-b}{\pt{x}{y}{z}}... ; two posarray blocks (T0 then T1)
blocks = re.findall(r"\\posarray\{(.*?)\n\}", text, flags=re.S)
assert len(blocks) == 2, len(blocks)


def parse_points(block: str):
    pts = {}
    for line in re.findall(r"\\line\{(\d+)-(\d+)\}(.*)", block):
        first, last, rest = int(line[0]), int(line[1]), line[2]
        triples = re.findall(r"\\pt\{(-?\d+)\}\{(-?\d+)\}\{(-?\d+)\}", rest)
        assert len(triples) == last - first + 1, (first, last, triples)
        for idx, t in zip(range(first, last + 1), triples):
            pts[idx] = tuple(int(c) for c in t)
    assert sorted(pts) == list(range(116)), len(pts)
    return [pts[i] for i in range(116)]


t0 = parse_points(blocks[0])
t1 = parse_points(blocks[1])

# edge list: "4-2, 4-3, ..., 115-114."
m = re.search(r"\\begin\{spacing\}\{0\.5\}\n(.*?)\\end\{spacing\}", text, flags=re.S)
raw = m.group(1).replace("\n", " ").strip().rstrip(".")
edges = []
for tok in raw.split(","):
    tok = tok.strip()
    if not tok:
        continue
    a, b = tok.split("-")
    u, v = sorted((int(a), int(b)))
    edges.append((u, v))
assert len(edges) == len(set(edges)), "duplicate edges"
edges.sort()
print(f"points: {len(t0)} / {len(t1)}, edges: {len(edges)}")
print("max coord:", max(max(p) for p in t0 + t1), "min:", min(min(p) for p in t0 + t1))


def fmt_points(name, pts):
    lines = [f"{name} = ("]
    for i in range(0, len(pts), 4):
        chunk = ", ".join(str(p) for p in pts[i : i + 4])
        lines.append(f"    {chunk},")
    lines.append(")")
    return "\n".join(lines)


def fmt_edges(edges):
    lines = ["EDGES = ("]
    for i in range(0, len(edges), 9):
        chunk = ", ".join(str(e) for e in edges[i : i + 9])
        lines.append(f"    {chunk},")
    lines.append(")")
    return "\n".join(lines)


out = f'''"""Reference vertex tables for the 543-tetrahedron triangulations.

Two meshes share one combinatorial structure on 116 vertices: one
realizes it on the regular tetrahedron with corners at alternating
vertices of the cube [0, 60000]^3, the other on the standard
(cube-corner) tetrahedron with legs of length 60000 along the axes.
All coordinates are exact integers; the edge list is common to both.
"""

{fmt_points("T0_POINTS", t0)}

{fmt_points("T1_POINTS", t1)}

{fmt_edges(edges)}
'''
(ROOT / "src/acutemesh/refdata.py").write_text(out)
print("written", ROOT / "src/acutemesh/refdata.py")
