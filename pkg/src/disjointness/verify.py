"""Independent checks for coloring certificates and Ramsey witnesses."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

import numpy as np

from .certificate import MODES, Certificate, dec_vec
from .geometry import (
    EuclLine,
    HomPlane,
    HomPoint,
    Segment,
    apply_map,
    hom,
    plane_through,
    rat,
    segment_contains,
    shear2d,
)
from .graph import DGraph, build_graph
from .planar import OrderId, order_compare


@dataclass
class VerificationReport:
    proper: bool = True
    complete: bool = True
    clique_ok: bool = True
    bound_ok: bool = True
    witnesses_ok: bool = True
    colors: int = 0
    clique_size: int = 0
    bound_value: int = 0
    errors: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.proper and self.complete and self.clique_ok and self.bound_ok and self.witnesses_ok

    def to_json(self) -> dict:
        return {
            "ok": self.ok, "proper": self.proper, "complete": self.complete,
            "clique_ok": self.clique_ok, "bound_ok": self.bound_ok,
            "witnesses_ok": self.witnesses_ok, "colors": self.colors,
            "clique_size": self.clique_size, "bound_value": self.bound_value,
            "errors": list(self.errors),
        }


def graph_for_mode(objects: Sequence, mode: str) -> DGraph:
    """Disjointness graph the certificate of ``mode`` refers to."""
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "lines-projective":
        return build_graph([L.plucker if isinstance(L, EuclLine) else L for L in objects],
                           space="projective")
    return build_graph(objects)


def _segments_in_r3(objects, cert: Certificate) -> list[Segment]:
    mat = cert.meta.get("projection")
    if mat is not None:
        mat = [[rat(x) for x in row] for row in mat]
        return [Segment(apply_map(mat, s.a), apply_map(mat, s.b)) for s in objects]
    return list(objects)


def _through(obj, h) -> bool:
    if isinstance(obj, Segment):
        return not any(plane_through(hom(obj.a), hom(obj.b), h))
    L = obj.plucker if isinstance(obj, EuclLine) else obj
    return L.contains(h)


def _in_plane(obj, c) -> bool:
    pl = HomPlane(c)
    if isinstance(obj, Segment):
        return pl.contains_affine(obj.a) and pl.contains_affine(obj.b)
    L = obj.plucker if isinstance(obj, EuclLine) else obj
    return L.in_plane(pl)


def _check_heights(segs: list[Segment], cert: Certificate, rep: VerificationReport):
    eps = rat(cert.meta.get("shear", "0"))
    sheared = [shear2d(s, eps) for s in segs]
    seen = {}
    for c, w in enumerate(cert.classes):
        key = tuple(w.get("heights", ()))
        if len(key) != 4 or any(not 1 <= h <= len(cert.clique) for h in key):
            rep.witnesses_ok = False
            rep.errors.append(f"class {c}: height vector malformed or above |K|")
        if key in seen:
            rep.witnesses_ok = False
            rep.errors.append(f"classes {seen[key]} and {c} share a height vector")
        seen[key] = c
    for members in cert.color_classes():
        for u, v in combinations(members, 2):
            if order_compare(sheared[u], sheared[v]):
                rep.witnesses_ok = False
                rep.errors.append(f"same-colored {u},{v} are comparable")
    order = cert.meta.get("chain_order")
    if order is not None:
        for u, v in zip(cert.clique, cert.clique[1:]):
            if (OrderId(order), 1) not in order_compare(sheared[u], sheared[v]):
                rep.witnesses_ok = False
                rep.errors.append(f"clique members {u},{v} are not consecutive in {order}")


def _check_class(c: int, members: list[int], w: dict, objs, rep: VerificationReport):
    def fail(msg):
        rep.witnesses_ok = False
        rep.errors.append(f"class {c}: {msg}")

    if "pointed" in w:
        h = HomPoint(dec_vec(w["pointed"])).h
        if not all(_through(objs[v], h) for v in members):
            fail("member misses the witness point")
    if "planar" in w:
        cvec = dec_vec(w["planar"])
        if not all(_in_plane(objs[v], cvec) for v in members):
            fail("member outside the witness plane")
    if "piercing" in w:
        p = dec_vec(w["piercing"])
        if not all(segment_contains(objs[v], p) for v in members):
            fail("member misses the piercing point")
    if "bundle_slot" in w:
        distinct = {(objs[v].base, objs[v].dir) for v in members}
        if len({d for _, d in distinct}) != len(distinct):
            fail("two parallel lines share a bundle slot")
    if not set(w) & {"pointed", "planar", "piercing", "heights"}:
        fail("no recognised witness")


def verify_certificate(objects: Sequence, cert: Certificate, g: DGraph | None = None) -> VerificationReport:
    """Check properness, the clique, the bound and every class witness.

    ``g`` may be passed to skip rebuilding the disjointness graph.
    """
    rep = VerificationReport()
    n = len(objects)
    g = g if g is not None else graph_for_mode(objects, cert.mode)
    if len(cert.colors) != n:
        rep.complete = False
        rep.proper = False
        rep.errors.append(f"{len(cert.colors)} colors for {n} objects")
        return rep
    for u, v in g.edges():
        if cert.colors[u] == cert.colors[v]:
            rep.proper = False
            rep.errors.append(f"edge {u}-{v} is monochromatic")
            break
    k = cert.clique
    if len(set(k)) != len(k) or any(not 0 <= v < n for v in k):
        rep.clique_ok = False
        rep.errors.append("clique has repeated or out-of-range vertices")
    elif any(not g.adj[u, v] for u, v in combinations(k, 2)):
        rep.clique_ok = False
        rep.errors.append("clique members are not pairwise disjoint")
    rep.colors = cert.num_colors
    rep.clique_size = len(k)
    if sorted(set(cert.colors)) != list(range(rep.colors)) or len(cert.classes) != rep.colors:
        rep.witnesses_ok = False
        rep.errors.append("colors are not dense or witnesses are missing")
        return rep
    rep.bound_value = cert.bound_value()
    if rep.colors > rep.bound_value:
        rep.bound_ok = False
        rep.errors.append(f"{rep.colors} colors exceed {cert.bound} = {rep.bound_value}")

    objs = list(objects)
    if cert.mode == "segments-3d":
        objs = _segments_in_r3(objs, cert)
    if cert.mode == "planar-segments":
        _check_heights(objs, cert, rep)
    else:
        for c, members in enumerate(cert.color_classes()):
            _check_class(c, members, cert.classes[c], objs, rep)
    return rep


def is_triangle_free(g: DGraph) -> bool:
    a = g.adj.astype(np.int64)
    return int(np.trace(a @ a @ a)) == 0


@dataclass
class RamseyWitness:
    kind: str            # "clique" (pairwise disjoint) or "independent" (pairwise intersecting)
    members: list[int]
    n: int
    colors: int
    largest_class: int
    clique_size: int

    @property
    def inequality_holds(self) -> bool:
        return self.n <= self.colors * self.largest_class


def extract_ramsey_witness(g: DGraph, cert: Certificate) -> RamseyWitness:
    """The certificate clique or its largest color class, whichever is bigger, checked on ``g``."""
    classes = cert.color_classes()
    largest = max(classes, key=len, default=[])
    if len(cert.clique) >= len(largest):
        kind, members = "clique", list(cert.clique)
        ok = all(g.adj[u, v] for u, v in combinations(members, 2))
    else:
        kind, members = "independent", list(largest)
        ok = not any(g.adj[u, v] for u, v in combinations(members, 2))
    if not ok:
        raise ValueError(f"certificate {kind} fails on the graph")
    w = RamseyWitness(kind, members, g.n, cert.num_colors, len(largest), len(cert.clique))
    if not w.inequality_holds:
        raise ValueError("pigeonhole inequality violated; coloring is incomplete")
    return w
