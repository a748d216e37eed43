"""Ramsey witness sizes against n^(1/5) for random segment families.

    python3 scripts/ramsey_sweep.py --sizes 32 243 1024 --seeds 3
"""
import argparse
import math
import random

from disjointness.graph import build_graph
from disjointness.planar import color_planar_segments
from disjointness.sampling import random_planar_segments, random_segments_3d
from disjointness.segments3d import color_segments_3d
from disjointness.verify import extract_ramsey_witness


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", nargs="+", type=int, default=[32, 243, 1024])
    ap.add_argument("--seeds", type=int, default=3)
    ap.add_argument("--dim", type=int, choices=(2, 3), default=2)
    args = ap.parse_args(argv)

    print(f"{'n':>6} {'seed':>4} {'kind':>11} {'size':>5} {'colors':>6} {'|K|':>4} {'n^(1/5)':>8}")
    for n in args.sizes:
        for seed in range(args.seeds):
            rng = random.Random(seed)
            if args.dim == 2:
                segs = random_planar_segments(rng, n)
                cert = color_planar_segments(segs, rng)
            else:
                segs = random_segments_3d(rng, n)
                cert = color_segments_3d(segs, rng)
            w = extract_ramsey_witness(build_graph(segs), cert)
            print(f"{n:6d} {seed:4d} {w.kind:>11} {len(w.members):5d} {w.colors:6d} {w.clique_size:4d} "
                  f"{math.ceil(round(n ** 0.2, 9)):8d}")


if __name__ == "__main__":
    main()
