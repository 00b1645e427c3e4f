#!/usr/bin/env python3
"""Stress the support identities with many random liftings.

For a given polytope file, draws seeded random integral liftings, keeps the
ones whose lower hull is simplicial, and checks that the support minima of the
Chow and Hurwitz polytopes match the pairings with the induced triangulation's
characteristic vectors.  Prints the running tally and the distribution of
induced triangulations.
"""

import argparse
import json
import random
from collections import Counter
from pathlib import Path

from toricweights.pipeline import analyze
from toricweights.triangulation import Lifting, lower_hull_subdivision
from toricweights.weights import verify_chow_support, verify_hurwitz_support


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--input", type=Path, default=Path(__file__).parent.parent / "data" / "double_simplex.json")
    parser.add_argument("--trials", type=int, default=500)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--height-range", type=int, default=30)
    args = parser.parse_args()

    vertices = json.loads(args.input.read_text())["vertices"]
    analysis = analyze(vertices)
    rng = random.Random(args.seed)
    npts = len(analysis.config)

    hit = Counter()
    simplicial = failures = 0
    for _ in range(args.trials):
        lam = Lifting.normalized([rng.randrange(-args.height_range, 1) for _ in range(npts)])
        sub = lower_hull_subdivision(analysis.config, lam)
        if not sub.is_triangulation:
            continue
        simplicial += 1
        hit[sub.cells] += 1
        for chk in (verify_chow_support(analysis, lam), verify_hurwitz_support(analysis, lam)):
            if chk.status != "pass":
                failures += 1
                print(f"FAIL {chk.kind}: lifting {lam.heights}, min {chk.minimum} != pairing {chk.pairing_value}")

    print(f"{args.input.stem}: {args.trials} liftings, {simplicial} simplicial, {failures} failures")
    print(f"{len(hit)} of {len(analysis.enumeration)} regular triangulations induced:")
    forms = {e.triangulation.simplices: e.id for e in analysis.enumeration}
    for cells, count in hit.most_common():
        print(f"  triangulation {forms[cells]:>3}: {count:>5} liftings")


if __name__ == "__main__":
    main()
