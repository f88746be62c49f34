"""Tabulate e-counts and specialised constants for types B, C and D on central characters.

Coordinates are s_i = t^(m4 + 4c) over the contents c of sigma, with q = t^4.
"""

import argparse
import sys
from fractions import Fraction

from tempered_fd.formal_degree import e_count, numeric_dual_form, specialised_product_form, type_constant
from tempered_fd.notation import parse_partition, parse_rational


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sigma", default="2,1")
    parser.add_argument("--t", default="2")
    parser.add_argument("--m4-range", type=int, default=6, help="scan m4 over [-R, R]")
    args = parser.parse_args(argv)
    sigma = parse_partition(args.sigma)
    t = parse_rational(args.t)
    q = t ** 4
    mismatches = 0
    print(f"{'m4':>4}  {'kind':<4}  {'e':>2}  {'constant':>9}  match")
    for m4 in range(-args.m4_range, args.m4_range + 1):
        s = [t ** (m4 + 4 * c) for c in sigma.contents()]
        for kind, qm in (("C", t ** m4), ("B", t ** m4), ("D", Fraction(1))):
            coords = s if kind != "D" else [q ** c for c in sigma.contents()]
            try:
                lhs = specialised_product_form(kind, coords, q, qm)
                rhs = type_constant(kind, coords, qm) * numeric_dual_form(kind, coords, q, qm)
            except ZeroDivisionError:
                print(f"{m4:>4}  {kind:<4}  singular")
                continue
            match = "exact" if lhs == rhs else ("sign" if lhs == -rhs else "NO")
            mismatches += match == "NO"
            print(f"{m4:>4}  {kind:<4}  {e_count(kind, coords, qm):>2}  "
                  f"{str(type_constant(kind, coords, qm)):>9}  {match}")
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
