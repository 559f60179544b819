"""JSON codecs for frames, Gram points, partitions, paths, and complexes.

Real scalars are emitted as plain numbers, complex scalars as [re, im]
pairs; matrices are row-major lists of rows.  Python's float repr gives
shortest round-trip decimals, so exact-representable data round-trips
bit-identically.
"""

from __future__ import annotations

import json
import sys

import numpy as np

from .cellcomplex import Complex2
from .frames import Frame
from .grassmann import GramPoint
from .planar import FramePath
from .stratification import Partition, TangentReport


def _num(x, field):
    if field == "C":
        return [float(np.real(x)), float(np.imag(x))]
    return float(np.real(x))


def _matrix_out(M, field):
    return [[_num(x, field) for x in row] for row in np.asarray(M)]


def _matrix_in(rows, field):
    if field == "C":
        return np.array([[complex(a, b) for a, b in row] for row in rows])
    return np.array(rows, dtype=np.float64)


def frame_to_dict(F: Frame) -> dict:
    return {"field": F.field, "n": F.n, "k": F.k,
            "entries": _matrix_out(F.entries, F.field)}


def frame_from_dict(d: dict) -> Frame:
    F = Frame(d["field"], _matrix_in(d["entries"], d["field"]))
    if (F.n, F.k) != (int(d["n"]), int(d["k"])):
        raise ValueError("frame entries do not match the declared n, k")
    return F


def gram_to_dict(R: GramPoint) -> dict:
    return {"field": R.field, "k": R.k, "n": R.n,
            "entries": _matrix_out(R.entries, R.field)}


def gram_from_dict(d: dict) -> GramPoint:
    R = GramPoint(d["field"], int(d["n"]), _matrix_in(d["entries"], d["field"]))
    if R.k != int(d["k"]):
        raise ValueError("gram entries do not match the declared k")
    return R


def loop_to_dict(points) -> dict:
    return {"points": [gram_to_dict(p) for p in points]}


def loop_from_dict(d: dict):
    return [gram_from_dict(p) for p in d["points"]]


def partition_to_dict(p: Partition) -> dict:
    return {"k": p.k, "blocks": [list(b) for b in p.blocks]}


def partition_from_dict(d: dict) -> Partition:
    return Partition(int(d["k"]), tuple(tuple(b) for b in d["blocks"]))


def tangent_to_dict(r: TangentReport) -> dict:
    return {"rank": r.rank, "regular": r.regular,
            "stratum_dim": r.stratum_dim, "ambient_dim": r.ambient_dim}


def path_to_dict(p: FramePath) -> dict:
    return {"kind": p.kind, "k": p.k, "max_step": p.max_step,
            "samples": [{"t": float(t), "z": [[float(z.real), float(z.imag)] for z in pt]}
                        for t, pt in zip(p.ts, p.points)]}


def path_from_dict(d: dict) -> FramePath:
    ts = [s["t"] for s in d["samples"]]
    pts = [np.array([complex(a, b) for a, b in s["z"]]) for s in d["samples"]]
    return FramePath(d["kind"], tuple(ts), tuple(pts), float(d.get("max_step", 1.0)))


def complex_to_dict(C: Complex2) -> dict:
    return {
        "vertices": sorted(C.vertices),
        "edges": [{"id": e, "ends": list(C.edges[e])} for e in sorted(C.edges)],
        "faces": [{"id": f, "walk": [{"edge": e, "dir": d} for e, d in C.faces[f]]}
                  for f in sorted(C.faces)],
    }


def complex_from_dict(d: dict) -> Complex2:
    vertices = set(d["vertices"])
    edges = {e["id"]: tuple(e["ends"]) for e in d["edges"]}
    faces = {f["id"]: tuple((s["edge"], int(s["dir"])) for s in f["walk"])
             for f in d["faces"]}
    return Complex2(vertices, edges, faces)


def read_json(path: str) -> dict:
    """Load a JSON document from a file path or from stdin when path is '-'."""
    if path == "-":
        return json.load(sys.stdin)
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def write_json(doc, path: str = "-") -> None:
    if path == "-":
        json.dump(doc, sys.stdout, indent=None, separators=(",", ":"))
        sys.stdout.write("\n")
    else:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(doc, fh)
            fh.write("\n")
