"""Sweep instance sizes and record how far each coloring sits below its bound.

Writes one CSV row per (family, n, seed): colors, |K|, bound value and the ratio.

    python3 scripts/bound_sweep.py --sizes 20 50 100 --seeds 20 --out sweep.csv
"""
import argparse
import csv
import random
import sys
import time

from disjointness.lines import color_euclidean_lines, color_projective_lines
from disjointness.planar import color_planar_segments
from disjointness.sampling import (
    mixed_bundles,
    random_planar_segments,
    random_projective_lines,
    random_segments_3d,
)
from disjointness.segments3d import color_segments_3d
from disjointness.verify import verify_certificate

FAMILIES = {
    "planar": (lambda rng, n: random_planar_segments(rng, n), lambda objs, rng: color_planar_segments(objs, rng)),
    "segments3d": (lambda rng, n: random_segments_3d(rng, n), lambda objs, rng: color_segments_3d(objs, rng)),
    "projective": (lambda rng, n: random_projective_lines(rng, n), lambda objs, rng: color_projective_lines(objs)),
    # bundle size grows with n so the Euclidean refinement has something to do
    "euclidean": (lambda rng, n: mixed_bundles(rng, max(2, n // 10), extra=n // 2),
                  lambda objs, rng: color_euclidean_lines(objs)),
}


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--families", nargs="+", default=sorted(FAMILIES), choices=sorted(FAMILIES))
    ap.add_argument("--sizes", nargs="+", type=int, default=[20, 50, 100])
    ap.add_argument("--seeds", type=int, default=10)
    ap.add_argument("--out", help="CSV path (default stdout)")
    args = ap.parse_args(argv)

    fh = open(args.out, "w", newline="") if args.out else sys.stdout
    w = csv.writer(fh)
    w.writerow(["family", "n", "seed", "colors", "clique", "bound", "bound_value", "ratio", "verified", "seconds"])
    for fam in args.families:
        gen, col = FAMILIES[fam]
        for n in args.sizes:
            for seed in range(args.seeds):
                rng = random.Random(seed)
                objs = gen(rng, n)
                t0 = time.perf_counter()
                cert = col(objs, rng)
                dt = time.perf_counter() - t0
                rep = verify_certificate(objs, cert)
                w.writerow([fam, len(objs), seed, rep.colors, rep.clique_size, cert.bound, rep.bound_value,
                            f"{rep.colors / rep.bound_value:.4f}", rep.ok, f"{dt:.4f}"])
    if args.out:
        fh.close()


if __name__ == "__main__":
    main()
