"""Classify random arrangements and tabulate how often each case occurs.

    python scripts/survey.py --count 500 --max-lines 10 --bound 2 --seed 0
"""
import argparse
import random
from collections import Counter

from cp2arr import blow_down, blow_up, build_lattice, classify, lattice_isomorphic, poincare
from cp2arr.corpus import random_arrangement


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=500)
    ap.add_argument("--max-lines", type=int, default=10)
    ap.add_argument("--bound", type=int, default=2)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    tags, b3_zero, round_trip_failures = Counter(), 0, 0
    for _ in range(args.count):
        lat = build_lattice(random_arrangement(rng, rng.randint(3, args.max_lines), args.bound))
        tags[classify(lat).tag] += 1
        b3_zero += poincare(lat).central_poincare[3] == 0
        round_trip_failures += lattice_isomorphic(lat, blow_down(blow_up(lat))) is None
    for tag, k in tags.most_common():
        print(f"{tag:<20} {k}")
    print(f"b3 == 0: {b3_zero}   round-trip failures: {round_trip_failures}")


if __name__ == "__main__":
    main()
