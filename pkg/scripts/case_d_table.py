"""Poincare polynomials of the two-multiple-point family and which pairs coincide.

    python scripts/case_d_table.py [max_param]
"""
import sys
from itertools import product

from cp2arr import build_arrangement, build_lattice, compare, poincare
from cp2arr.corpus import case_d


def main(top: int = 5) -> None:
    params = list(product(range(2, top + 1), repeat=2))
    arrs = {pq: build_arrangement(case_d(*pq)) for pq in params}
    print(f"{'p':>2} {'q':>2}  central Poincare")
    for pq in params:
        print(f"{pq[0]:>2} {pq[1]:>2}  {list(poincare(build_lattice(arrs[pq])).central_poincare)}")
    print("\nisomorphic pairs with (p, q) != (s, t):")
    for a, b in product(params, repeat=2):
        if a < b and compare(arrs[a], arrs[b]).isomorphic:
            print(f"  {a} ~ {b}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 5)
