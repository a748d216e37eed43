"""Dataset and certificate files (JSON, exact rationals written as "p/q" strings)."""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path

from .certificate import Certificate, dec_vec, enc_vec
from .geometry import EuclLine, ProjLine, Segment
from .graph import Polyline, PuncturedLine, TwoSegments, kind_of


def _enc_seg(s: Segment) -> dict:
    return {"a": enc_vec(s.a), "b": enc_vec(s.b)}


def _dec_seg(d: dict) -> Segment:
    return Segment(dec_vec(d["a"]), dec_vec(d["b"]))


def encode_object(obj) -> dict:
    kind = kind_of(obj)
    if kind == "segment":
        return _enc_seg(obj)
    if kind == "eucl_line":
        return {"base": enc_vec(obj.base), "dir": enc_vec(obj.dir)}
    if kind == "proj_line":
        return {"plucker": enc_vec(obj.p)}
    if kind == "punctured_line":
        return {"slope": str(obj.slope), "intercept": str(obj.intercept), "hole": enc_vec(obj.hole)}
    if kind == "polyline":
        return {"points": [enc_vec(p) for p in obj.vertices]}
    return {"first": _enc_seg(obj.first), "second": _enc_seg(obj.second)}


def decode_object(kind: str, d: dict):
    if kind == "segment":
        return _dec_seg(d)
    if kind == "eucl_line":
        return EuclLine(dec_vec(d["base"]), tuple(int(x) for x in dec_vec(d["dir"])))
    if kind == "proj_line":
        return ProjLine(tuple(int(x) for x in dec_vec(d["plucker"])))
    if kind == "punctured_line":
        return PuncturedLine(d["slope"], d["intercept"], dec_vec(d["hole"]))
    if kind == "polyline":
        return Polyline.from_points([dec_vec(p) for p in d["points"]])
    if kind == "two_segments":
        return TwoSegments(_dec_seg(d["first"]), _dec_seg(d["second"]))
    raise ValueError(f"unknown object kind {kind!r}")


def _dim(kind: str, objects: list) -> int:
    if kind == "segment":
        return objects[0].dim if objects else 2
    if kind in ("eucl_line", "proj_line"):
        return 3
    return 2


@dataclass
class Dataset:
    objects: list
    kind: str
    space: str = "euclidean"
    provenance: dict = field(default_factory=dict)

    @classmethod
    def of(cls, objects, space: str = "euclidean", provenance: dict | None = None) -> "Dataset":
        objects = list(objects)
        kinds = {kind_of(o) for o in objects}
        if len(kinds) > 1:
            raise TypeError(f"mixed object kinds: {sorted(kinds)}")
        kind = kinds.pop() if kinds else "segment"
        if kind == "proj_line":
            space = "projective"
        return cls(objects, kind, space, dict(provenance or {}))

    @property
    def dim(self) -> int:
        return _dim(self.kind, self.objects)

    def to_json(self) -> dict:
        return {
            "space": self.space,
            "kind": self.kind,
            "dim": self.dim,
            "objects": [encode_object(o) for o in self.objects],
            "provenance": self.provenance,
        }

    @classmethod
    def from_json(cls, data: dict) -> "Dataset":
        kind = data["kind"]
        objects = [decode_object(kind, o) for o in data["objects"]]
        ds = cls(objects, kind, data.get("space", "euclidean"), dict(data.get("provenance", {})))
        if "dim" in data and objects and int(data["dim"]) != ds.dim:
            raise ValueError(f"declared dim {data['dim']} but objects have dim {ds.dim}")
        return ds

    def digest(self) -> str:
        blob = json.dumps({"kind": self.kind, "space": self.space,
                           "objects": [encode_object(o) for o in self.objects]}, sort_keys=True)
        return hashlib.sha256(blob.encode()).hexdigest()


def write_json(path, data: dict):
    Path(path).write_text(json.dumps(data, indent=1, sort_keys=False) + "\n")


def read_json(path) -> dict:
    return json.loads(Path(path).read_text())


def load_dataset(path) -> Dataset:
    return Dataset.from_json(read_json(path))


def save_dataset(ds: Dataset, path):
    write_json(path, ds.to_json())


def load_certificate(path) -> Certificate:
    return Certificate.from_json(read_json(path))


def save_certificate(cert: Certificate, path):
    write_json(path, cert.to_json())
