"""Command line interface: generate, color, verify, oracle, ramsey, render.

Exit codes: 0 ok, 1 verification failure, 2 internal assertion, 3 bad input.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import asdict, dataclass, field

from .certificate import MODES, Certificate
from .errors import CapExceeded, InvariantError, SearchExhausted
from .generators import (
    GENERATORS,
    PolylineParams,
    gen_hales_jewett_lines,
    gen_kneser_lines,
    gen_linegraph_lines,
    gen_shift_pointed_lines,
    gen_shift_polyline,
    gen_shift_two_segments,
)
from .geometry import HomPlane, rat
from .graph import build_graph
from .io import Dataset, load_certificate, load_dataset, save_certificate, save_dataset, write_json
from .lines import color_euclidean_lines, color_projective_lines
from .oracles import (
    clique_cover_at_most_k,
    exact_chromatic,
    exact_clique,
    exact_independence,
    omega_intersection_lines,
)
from .planar import color_planar_segments
from .render import render_svg
from .segments3d import color_segments_3d, color_segments_kplanes
from .verify import extract_ramsey_witness, graph_for_mode, verify_certificate

OK, VERIFY_FAILED, INTERNAL, BAD_INPUT = 0, 1, 2, 3


class BadInput(Exception):
    pass


@dataclass
class RunReport:
    command: str
    digest: str
    mode: str
    n: int
    colors: int
    clique: int
    bound: str
    bound_value: int
    bound_satisfied: bool
    verification: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)


# --- generate ----------------------------------------------------------------

def _parse_edges(text: str):
    edges = []
    for part in text.split(","):
        u, v = part.strip().split("-")
        edges.append((int(u), int(v)))
    vertices = sorted({x for e in edges for x in e})
    return vertices, edges


def generate(kind: str, args) -> Dataset:
    need = {"shift-pointed": ["m"], "shift-two-segments": ["m"], "shift-polyline": ["m"],
            "kneser": ["k"], "hales-jewett": ["m", "d"], "linegraph": ["edges"]}[kind]
    for p in need:
        if getattr(args, p) is None:
            raise BadInput(f"generate {kind} needs --{p}")
    rng = random.Random(args.seed)
    if kind == "shift-pointed":
        objs, params = gen_shift_pointed_lines(args.m), {"m": args.m}
    elif kind == "shift-two-segments":
        objs, params = gen_shift_two_segments(args.m), {"m": args.m}
    elif kind == "shift-polyline":
        objs, params = gen_shift_polyline(args.m, PolylineParams()), {"m": args.m}
    elif kind == "kneser":
        objs, params = gen_kneser_lines(args.k), {"k": args.k}
    elif kind == "hales-jewett":
        objs, params = gen_hales_jewett_lines(args.m, args.d, rng), {"m": args.m, "d": args.d}
    else:
        objs, params = gen_linegraph_lines(_parse_edges(args.edges)), {"edges": args.edges}
    _, space = GENERATORS[kind]
    prov = {"construction": kind, "parameters": params, "seed": args.seed, "verified": True}
    return Dataset.of(objs, space, prov)


# --- color -------------------------------------------------------------------

def _parse_planes(text: str) -> list[HomPlane]:
    return [HomPlane(tuple(rat(x) for x in part.split(","))) for part in text.split(";") if part.strip()]


def color(ds: Dataset, mode: str, seed: int = 0, planes: str | None = None) -> Certificate:
    """Run the coloring algorithm of ``mode`` on a dataset, checking compatibility first."""
    if mode not in MODES:
        raise BadInput(f"unknown mode {mode!r}")
    rng = random.Random(seed)
    objs = ds.objects
    if mode in ("planar-segments", "segments-3d", "segments-kplanes") and ds.kind != "segment":
        raise BadInput(f"mode {mode} needs segments, dataset has {ds.kind}")
    if mode == "planar-segments":
        if ds.dim != 2:
            raise BadInput("planar-segments needs planar segments")
        return color_planar_segments(objs, rng)
    if mode == "segments-3d":
        return color_segments_3d(objs, rng)
    if mode == "segments-kplanes":
        if ds.dim != 3 or not planes:
            raise BadInput("segments-kplanes needs segments in R^3 and --planes")
        return color_segments_kplanes(objs, _parse_planes(planes))
    if mode == "lines-euclidean":
        if ds.kind != "eucl_line":
            raise BadInput("lines-euclidean needs affine lines")
        return color_euclidean_lines(objs)
    if ds.kind not in ("eucl_line", "proj_line"):
        raise BadInput("lines-projective needs lines")
    return color_projective_lines(objs)


def run_report(command: str, ds: Dataset, cert: Certificate, timings: dict) -> RunReport:
    t0 = time.perf_counter()
    rep = verify_certificate(ds.objects, cert)
    timings["verify_s"] = round(time.perf_counter() - t0, 4)
    return RunReport(command, ds.digest(), cert.mode, len(ds.objects), rep.colors, rep.clique_size,
                     cert.bound, rep.bound_value, rep.bound_ok and rep.colors <= rep.bound_value,
                     rep.to_json(), timings)


# --- output ------------------------------------------------------------------

def _emit(data: dict, fmt: str, out=None):
    out = out or sys.stdout
    if fmt == "json":
        out.write(json.dumps(data, indent=1, default=str) + "\n")
        return
    width = max((len(k) for k in data), default=0)
    for k, v in data.items():
        if isinstance(v, dict):
            v = ", ".join(f"{a}={b}" for a, b in v.items() if not isinstance(b, (list, dict)))
        out.write(f"{k.ljust(width)}  {v}\n")


def _cmd_generate(args) -> int:
    ds = generate(args.kind, args)
    if args.output:
        save_dataset(ds, args.output)
    _emit({"command": "generate", "kind": ds.kind, "n": len(ds.objects), "digest": ds.digest(),
           "provenance": ds.provenance}, args.format)
    return OK


def _cmd_color(args) -> int:
    ds = load_dataset(args.input)
    t0 = time.perf_counter()
    cert = color(ds, args.mode, args.seed, args.planes)
    timings = {"color_s": round(time.perf_counter() - t0, 4)}
    if args.output:
        save_certificate(cert, args.output)
    report = run_report(" ".join(args.argv), ds, cert, timings)
    if args.report:
        write_json(args.report, asdict(report))
    _emit(asdict(report), args.format)
    return OK if report.verification["ok"] else VERIFY_FAILED


def _cmd_verify(args) -> int:
    ds = load_dataset(args.input)
    cert = load_certificate(args.certificate)
    report = run_report("verify", ds, cert, {})
    _emit(asdict(report), args.format)
    return OK if report.verification["ok"] else VERIFY_FAILED


def _cmd_oracle(args) -> int:
    ds = load_dataset(args.input)
    which = args.which
    if which in ("omega-lines", "cover"):
        if ds.kind not in ("eucl_line", "proj_line"):
            raise BadInput(f"{which} needs lines")
        space = "projective" if ds.kind == "proj_line" else args.space
        if which == "omega-lines":
            value, w = omega_intersection_lines(ds.objects, space)
            _emit({"which": which, "value": value, "witness": w.to_json()}, args.format)
        else:
            if args.k is None:
                raise BadInput("cover needs --k")
            cover = clique_cover_at_most_k(ds.objects, args.k, space)
            _emit({"which": which, "k": args.k, "value": cover is not None,
                   "witness": [c.to_json() for c in cover] if cover else None}, args.format)
        return OK
    space = "projective" if ds.kind == "proj_line" else "euclidean"
    g = build_graph(ds.objects, space=space)
    fn = {"chromatic": exact_chromatic, "clique": exact_clique, "independence": exact_independence}
    if which not in fn:
        raise BadInput(f"unknown oracle {which!r}")
    value, witness = fn[which](g, cap=args.cap)
    _emit({"which": which, "value": value, "witness": witness}, args.format)
    return OK


def _default_mode(ds: Dataset) -> str:
    if ds.kind == "segment":
        return "planar-segments" if ds.dim == 2 else "segments-3d"
    if ds.kind == "eucl_line":
        return "lines-euclidean"
    if ds.kind == "proj_line":
        return "lines-projective"
    raise BadInput(f"no coloring mode for {ds.kind}")


def _cmd_ramsey(args) -> int:
    ds = load_dataset(args.input)
    mode = args.mode or _default_mode(ds)
    cert = color(ds, mode, args.seed, args.planes)
    g = graph_for_mode(ds.objects, mode)
    w = extract_ramsey_witness(g, cert)
    _emit({"mode": mode, "n": w.n, "kind": w.kind, "size": len(w.members), "members": w.members,
           "colors": w.colors, "largest_class": w.largest_class, "clique": w.clique_size,
           "inequality": f"{w.n} <= {w.colors} * {w.largest_class}"}, args.format)
    return OK


def _cmd_render(args) -> int:
    ds = load_dataset(args.input)
    cert = load_certificate(args.certificate) if args.certificate else None
    if not args.output:
        raise BadInput("render needs --output")
    with open(args.output, "w") as fh:
        fh.write(render_svg(ds, cert))
    _emit({"command": "render", "output": args.output, "n": len(ds.objects)}, args.format)
    return OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for every randomized choice")
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--input")
    common.add_argument("--output")

    p = argparse.ArgumentParser(prog="disjointness", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", parents=[common], help="write a verified construction")
    g.add_argument("kind", choices=sorted(GENERATORS))
    g.add_argument("--m", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--d", type=int)
    g.add_argument("--edges", help='edge list such as "0-1,1-2,2-0"')
    g.set_defaults(func=_cmd_generate)

    c = sub.add_parser("color", parents=[common], help="color a dataset and certify the bound")
    c.add_argument("--mode", required=True, choices=MODES)
    c.add_argument("--planes", help='plane coefficients "c0,c1,c2,c3;..." for segments-kplanes')
    c.add_argument("--report", help="also write the run report here")
    c.set_defaults(func=_cmd_color)

    v = sub.add_parser("verify", parents=[common], help="check a certificate against a dataset")
    v.add_argument("--certificate", required=True)
    v.set_defaults(func=_cmd_verify)

    o = sub.add_parser("oracle", parents=[common], help="exact small-instance values")
    o.add_argument("--which", required=True,
                   choices=("chromatic", "clique", "independence", "omega-lines", "cover"))
    o.add_argument("--cap", type=int)
    o.add_argument("--k", type=int)
    o.add_argument("--space", choices=("euclidean", "projective"), default="euclidean")
    o.set_defaults(func=_cmd_oracle)

    r = sub.add_parser("ramsey", parents=[common], help="large clique or independent set")
    r.add_argument("--mode", choices=MODES)
    r.add_argument("--planes")
    r.set_defaults(func=_cmd_ramsey)

    d = sub.add_parser("render", parents=[common], help="draw a planar dataset as SVG")
    d.add_argument("--certificate")
    d.set_defaults(func=_cmd_render)
    return p


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    args.argv = argv
    if args.command != "generate" and not args.input:
        print("error: --input is required", file=sys.stderr)
        return BAD_INPUT
    try:
        return args.func(args)
    except (InvariantError, SearchExhausted) as e:
        print(f"internal assertion failed: {e}", file=sys.stderr)
        return INTERNAL
    except (BadInput, CapExceeded, ValueError, TypeError, KeyError, OSError) as e:
        print(f"bad input: {e}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
