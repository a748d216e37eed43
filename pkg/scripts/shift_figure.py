"""Draw the planar realizations of a shift graph, colored by an optimal coloring.

    python3 scripts/shift_figure.py --m 6 --outdir figures
"""
import argparse
import math
from pathlib import Path
from types import SimpleNamespace

from disjointness.generators import gen_shift_pointed_lines, gen_shift_polyline, gen_shift_two_segments
from disjointness.graph import build_graph
from disjointness.io import Dataset
from disjointness.oracles import exact_chromatic
from disjointness.render import render_svg

REALIZATIONS = {
    "pointed": gen_shift_pointed_lines,
    "two-segments": gen_shift_two_segments,
    "polyline": gen_shift_polyline,
}


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m", type=int, default=6)
    ap.add_argument("--outdir", default="figures")
    ap.add_argument("--size", type=int, default=600)
    args = ap.parse_args(argv)

    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    for name, gen in REALIZATIONS.items():
        objs = gen(args.m)
        chi, colors = exact_chromatic(build_graph(objs))
        ds = Dataset.of(objs, "euclidean", {"construction": f"shift-{name}", "parameters": {"m": args.m}})
        path = out / f"shift_{name}_m{args.m}.svg"
        # render only reads .colors, so the oracle coloring can stand in for a certificate
        path.write_text(render_svg(ds, SimpleNamespace(colors=colors), size=args.size))
        print(f"{name:13s} n={len(objs):3d} chi={chi} (ceil log2 m = {math.ceil(math.log2(args.m))})  -> {path}")


if __name__ == "__main__":
    main()
