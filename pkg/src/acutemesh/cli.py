"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 input or internal
error, 3 optimizer stall.  All outputs are deterministic for fixed
flags and seed.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import appendixdata, flatten, fvector, meshio, polytope600, simplicial
from .geometry import Embedding, GeometryError, verify_acute, verify_geometric_complex
from .simplicial import BadLink, ComplexError

GENERATE_TARGETS = (
    "600cell",
    "x543",
    "face-template",
    "W",
    "Wstar",
    "Y",
    "Ystar",
    "cube-acute",
    "octa-acute",
    "ref-t0",
    "ref-t1",
    "icosa-cones",
    "dodeca-cones",
)


def _generate(target: str) -> meshio.MeshDocument:
    if target == "600cell":
        K, emb = polytope600.generate_600_cell()
    elif target == "x543":
        frame = polytope600.x543_frame()
        K, emb = frame.complex, frame.embedding4
    elif target == "face-template":
        K, emb = polytope600.face_template(), None
    elif target == "W":
        K, emb = polytope600.build_W()
    elif target == "Y":
        K, emb = polytope600.build_Y()
    elif target == "Wstar":
        K, emb = polytope600.special_subdivision(polytope600.build_W()[0]).child, None
    elif target == "Ystar":
        K, emb = polytope600.special_subdivision(polytope600.build_Y()[0]).child, None
    elif target == "cube-acute":
        K, emb = appendixdata.assemble_cube()
    elif target == "octa-acute":
        K, emb = appendixdata.assemble_octahedron()
    elif target in ("ref-t0", "ref-t1"):
        K, emb = appendixdata.reconstruct(appendixdata.load_reference(target[-2:]))
    elif target == "icosa-cones":
        K, emb = polytope600.build_platonic_cones("icosahedron")
    elif target == "dodeca-cones":
        K, emb = polytope600.build_platonic_cones("dodecahedron")
    else:
        raise ValueError(f"unknown target {target!r}")
    return meshio.MeshDocument(K, emb, {"name": target, "provenance": "acutemesh generate"})


def cmd_generate(args) -> int:
    if args.ref is not None:
        mesh = appendixdata.load_reference(args.ref)
        payload = {
            "points": [list(p) for p in mesh.points],
            "edges": [list(e) for e in mesh.edges],
        }
        text = json.dumps(payload, sort_keys=True)
        if args.output:
            with open(args.output, "w") as fh:
                fh.write(text + "\n")
        else:
            print(text)
        return 0
    doc = _generate(args.target)
    if args.output:
        meshio.write_document(doc, args.output)
    else:
        print(meshio.document_to_json(doc))
    return 0


def _check_acute(doc, args) -> dict:
    emb = doc.embedding
    if emb is None:
        raise GeometryError("acute check needs an embedding")
    if args.float and emb.exact:
        emb = emb.as_float()
    margin = args.margin_deg
    if emb.exact:
        margin = 0.0
    report = verify_acute(doc.complex, emb, margin)
    out = {
        "pass": report.acute,
        "exact": report.exact,
        "min_deg": report.min_angle_deg,
        "max_deg": report.max_angle_deg,
        "n_failures": len(report.failures),
    }
    if report.failures:
        worst = report.failures[0]
        out["witness"] = {"tet": list(worst.tet), "edge": list(worst.edge)}
    return out


def _check_rich(doc) -> dict:
    try:
        witness = simplicial.is_rich(doc.complex)
    except BadLink as exc:
        return {"pass": False, "error": str(exc), "witness": list(exc.simplex)}
    if witness is None:
        return {"pass": True}
    return {
        "pass": False,
        "witness": list(witness.simplex),
        "link_length": witness.link_length,
    }


def cmd_verify(args) -> int:
    doc = meshio.read_document(args.input)
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    known = {"acute", "rich", "flag", "no-square", "geometric", "ds"}
    unknown = set(checks) - known
    if unknown:
        raise ValueError(f"unknown checks: {sorted(unknown)}")
    results: dict = {}
    for check in checks:
        if check == "acute":
            results[check] = _check_acute(doc, args)
        elif check == "rich":
            results[check] = _check_rich(doc)
        elif check == "flag":
            witness = simplicial.is_flag(doc.complex)
            results[check] = {"pass": witness is None}
            if witness is not None:
                results[check]["witness"] = list(witness)
        elif check == "no-square":
            witness = simplicial.find_empty_square(doc.complex)
            results[check] = {"pass": witness is None}
            if witness is not None:
                results[check]["witness"] = list(witness)
        elif check == "geometric":
            if doc.embedding is None or not doc.embedding.exact:
                raise GeometryError("geometric check needs an exact embedding")
            rep = verify_geometric_complex(doc.complex, doc.embedding)
            results[check] = {"pass": rep.ok, "n_failures": len(rep.failures)}
            if rep.failures:
                f = rep.failures[0]
                results[check]["witness"] = {"kind": f.kind, "detail": repr(f.detail)}
        elif check == "ds":
            m = args.dim if args.dim is not None else doc.complex.dim
            rep = fvector.dehn_sommerville(doc.complex, m)
            results[check] = {
                "pass": rep.all_zero,
                "residuals": list(rep.residuals),
            }
    ok = all(r["pass"] for r in results.values())
    print(json.dumps({"pass": ok, "checks": results}, sort_keys=True, indent=1))
    return 0 if ok else 1


def cmd_stats(args) -> int:
    doc = meshio.read_document(args.input)
    K = doc.complex
    bd = simplicial.boundary_complex(K)
    out = {
        "f_vector": list(K.f_vector()),
        "boundary_f_vector": list(bd.f_vector()),
        "euler": K.euler_characteristic(),
    }
    if doc.embedding is not None and K.dim == 3 and doc.embedding.dim == 3:
        emb = doc.embedding
        report = verify_acute(K, emb if emb.exact else emb, 0.0 if emb.exact else 1e-9)
        hist: dict[str, int] = {}
        for e in report.entries:
            bucket = min(35, int(e.angle_deg // 5))
            key = f"{5 * bucket:03d}-{5 * bucket + 5:03d}"
            hist[key] = hist.get(key, 0) + 1
        out["min_deg"] = report.min_angle_deg
        out["max_deg"] = report.max_angle_deg
        out["angle_histogram"] = hist
    print(json.dumps(out, sort_keys=True, indent=1))
    return 0


def cmd_export(args) -> int:
    doc = meshio.read_document(args.input)
    if args.format == "json":
        text = meshio.document_to_json(doc) + "\n"
    elif args.format == "off":
        text = meshio.export_off(doc)
    elif args.format == "vtk":
        text = meshio.export_vtk(doc)
    else:
        raise ValueError(f"unknown format {args.format!r}")
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_optimize(args) -> int:
    interval = flatten.step1_scale_interval(args.scale_min, args.scale_max)
    if interval is None:
        print("no acute Step-1 scale in the search window", file=sys.stderr)
        return 3
    lo, hi, best = interval
    frame, points = flatten.default_problem(best)
    config = flatten.FlattenConfig(
        n_steps=args.n_steps,
        correction_max_iters=args.max_iters,
        acute_margin_deg=args.margin_deg,
        seed=args.seed,
    )
    result = flatten.run_flatten(frame, points, config)
    if args.trace:
        with open(args.trace, "w") as fh:
            fh.write("t,worst_cosine,iters\n")
            for t, worst, iters in result.trace:
                fh.write(f"{t!r},{worst!r},{iters}\n")
    if args.output:
        doc = meshio.MeshDocument(
            frame.K,
            result.embedding(frame.K),
            {
                "name": "flatten-result",
                "provenance": "acutemesh optimize",
                "success": result.success,
                "stalled": result.stalled,
                "step1_interval": [lo, hi],
            },
        )
        meshio.write_document(doc, args.output)
    print(
        json.dumps(
            {
                "success": result.success,
                "stalled": result.stalled,
                "message": result.message,
                "t_final": result.state.t,
                "worst_cosine": result.state.worst_cosine,
                "step1_interval": [lo, hi],
            },
            sort_keys=True,
        )
    )
    return 0 if result.success else 3


def cmd_check_fvector(args) -> int:
    doc = meshio.read_document(args.input)
    m = args.dim if args.dim is not None else doc.complex.dim
    ds = fvector.dehn_sommerville(doc.complex, m)
    out = {
        "dim": m,
        "f_vector": list(ds.f),
        "boundary_f_vector": list(ds.f_boundary),
        "ds_residuals": list(ds.residuals),
        "ds_all_zero": ds.all_zero,
    }
    if m == 4:
        obs = fvector.richness_obstruction(doc.complex)
        out["obstruction"] = {
            "lhs_2f0": obs.lhs,
            "rhs_2chi_plus_fb1": obs.rhs,
            "slack": obs.slack,
            "rich": obs.rich,
            "closed": obs.closed,
        }
        if obs.rich_witness is not None:
            out["obstruction"]["witness"] = list(obs.rich_witness.simplex)
    print(json.dumps(out, sort_keys=True, indent=1))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="acutemesh",
        description="Acute triangulations of the cube, octahedron and tetrahedra",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="emit a built-in mesh as JSON")
    p.add_argument("target", nargs="?", choices=GENERATE_TARGETS)
    p.add_argument("--ref", choices=("t0", "t1"), help="raw reference table {points, edges}")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="run checks against a mesh document")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--checks", default="acute")
    p.add_argument("--margin-deg", type=float, default=None)
    p.add_argument("--dim", type=int, default=None)
    p.add_argument("--float", action="store_true", help="force float evaluation")
    p.add_argument("--exact", action="store_true", help="(default for exact inputs)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("stats", help="f-vector, Euler characteristic, angle range")
    p.add_argument("-i", "--input", required=True)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("export", help="write OFF, VTK or canonical JSON")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--format", choices=("off", "vtk", "json"), default="json")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("optimize", help="run the flattening pipeline")
    p.add_argument("--n-steps", type=int, default=40)
    p.add_argument("--max-iters", type=int, default=400)
    p.add_argument("--margin-deg", type=float, default=1e-6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--scale-min", type=float, default=4.0)
    p.add_argument("--scale-max", type=float, default=9.0)
    p.add_argument("-o", "--output")
    p.add_argument("--trace")
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("check-fvector", help="Dehn-Sommerville and obstruction report")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--dim", type=int, default=None)
    p.set_defaults(func=cmd_check_fvector)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "generate" and args.target is None and args.ref is None:
        parser.error("generate needs a target or --ref")
    try:
        return args.func(args)
    except (ComplexError, GeometryError, OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
