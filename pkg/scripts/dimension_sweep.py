#!/usr/bin/env python3
"""Sweep the lifted simple module over a degree box and print the table.

Usage: python scripts/dimension_sweep.py [radius]

The nonzero degrees form two quadrant families; the table is compared
against the closed-form law as it prints.
"""

import sys

from coxlift.instances import CONE_OVER_SQUARE, simple_lift_law
from coxlift.lifting import Box, lift_component
from coxlift.modules import simple_module


def main() -> int:
    radius = int(sys.argv[1]) if len(sys.argv) > 1 else 2
    cone = CONE_OVER_SQUARE
    module = simple_module(cone)
    box = Box((-radius,) * 4, (radius,) * 4)
    nonzero = 0
    mismatches = 0
    for c in box.degrees():
        dim = lift_component(cone, module, c).dim
        if dim != simple_lift_law(c):
            mismatches += 1
        if dim:
            nonzero += 1
            print("\t".join(map(str, c)) + f"\t{dim}")
    print(f"# {box.size()} degrees, {nonzero} nonzero, "
          f"{mismatches} law mismatches", file=sys.stderr)
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
