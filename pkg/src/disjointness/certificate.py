"""Coloring certificates and their JSON form."""
from __future__ import annotations

import ast
import operator
from dataclasses import dataclass, field

from .geometry import HomPlane, HomPoint, rat

MODES = ("planar-segments", "segments-3d", "segments-kplanes", "lines-euclidean", "lines-projective")

BOUNDS = {
    "planar-segments": "k^4",
    "segments-3d": "k^4+k^3",
    "segments-kplanes": "(planes-1)*k+k^4",
    "lines-euclidean": "k^3",
    "lines-projective": "k^2",
}

_OPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul, ast.Pow: operator.pow}


def eval_bound(formula: str, k: int, **params: int) -> int:
    """Evaluate an integer bound formula such as ``"k^4+k^3"`` at ``k``.

    Only +, -, *, ^ (power), integer literals and named variables are allowed.
    """
    env = {"k": k, **params}

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.BinOp) and type(node.op) in _OPS:
            return _OPS[type(node.op)](ev(node.left), ev(node.right))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -ev(node.operand)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return node.value
        if isinstance(node, ast.Name) and node.id in env:
            return env[node.id]
        raise ValueError(f"unsupported bound expression: {formula!r}")

    return ev(ast.parse(formula.replace("^", "**"), mode="eval"))


def enc_vec(vec) -> list[str]:
    return [str(rat(v)) for v in vec]


def dec_vec(vec) -> tuple:
    return tuple(rat(v) for v in vec)


def pointed(p: HomPoint) -> dict:
    return {"pointed": enc_vec(p.h)}


def planar(pl: HomPlane) -> dict:
    return {"planar": enc_vec(pl.c)}


@dataclass
class Certificate:
    """A proper coloring, a clique, and the bound the pair is claimed to satisfy.

    ``colors[v]`` is a dense color id; ``classes[c]`` holds the witness of color
    ``c`` as a JSON-ready dict.
    """

    mode: str
    colors: list[int]
    clique: list[int]
    bound: str
    classes: list[dict] = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    @property
    def num_colors(self) -> int:
        return len(set(self.colors))

    def bound_params(self) -> dict:
        return {k: v for k, v in self.meta.items() if k == "planes"}

    def bound_value(self) -> int:
        return eval_bound(self.bound, len(self.clique), **self.bound_params())

    def color_classes(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for v, c in enumerate(self.colors):
            out.setdefault(c, []).append(v)
        return [out[c] for c in sorted(out)]

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "colors": list(self.colors),
            "clique": list(self.clique),
            "bound": self.bound,
            "classes": [{"witness": w} for w in self.classes],
            "meta": self.meta,
        }

    @classmethod
    def from_json(cls, data: dict) -> "Certificate":
        return cls(
            mode=data["mode"],
            colors=[int(c) for c in data["colors"]],
            clique=[int(v) for v in data["clique"]],
            bound=data["bound"],
            classes=[c["witness"] for c in data.get("classes", [])],
            meta=dict(data.get("meta", {})),
        )


def dense_colors(keys: list) -> tuple[list[int], list]:
    """Renumber arbitrary hashable color keys to 0..c-1 by first appearance."""
    ids: dict = {}
    out = []
    for key in keys:
        out.append(ids.setdefault(key, len(ids)))
    return out, list(ids)
