#!/usr/bin/env python3
"""Sample algebra elements and tabulate how orbit families are hit.

A small demonstration of the classifier: draws height-bounded random
elements (plus a sweep of the nilpotent cone), prints a histogram of the
orbit families, and shows a few rendered labels with their witnesses.

Usage:
    python scripts/orbit_census.py --seed 7 --samples 2000
"""

import argparse
from collections import Counter

from jacobi_orbits.real_orbits import classify, render_label, witness
from jacobi_orbits.sampling import Stream


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--samples", type=int, default=2000)
    ap.add_argument("--height-bound", type=int, default=10)
    args = ap.parse_args()

    stream = Stream(args.seed, "orbit-census", args.height_bound)
    families = Counter()
    shown = 0
    print("generic samples:")
    for _ in range(args.samples):
        v = stream.algebra_element()
        lab = classify(v)
        families[lab.family] += 1
        if shown < 3 and lab.family not in ("Hyperbolic", "Elliptic"):
            w = witness(v)
            print(f"  {dict(v.to_json())} -> {render_label(lab)} "
                  f"(witness exact={w.exact})")
            shown += 1
    for family, count in families.most_common():
        print(f"  {family:12s} {count}")

    print("nilpotent sweep:")
    families.clear()
    for _ in range(args.samples):
        v = stream.nilpotent_element(zero_sl2_fraction=2)
        families[classify(v).family] += 1
    for family, count in families.most_common():
        print(f"  {family:12s} {count}")


if __name__ == "__main__":
    main()
