#!/usr/bin/env python3
"""Profile how deep the certified truncation has to look as the query point
approaches the boundary, for the built-in sequence families."""

import argparse

from squeezefn.domains import BoundaryOrbitFamily, RadialFamily, SequencePunctures
from squeezefn.hyperbolic import radial_separation_bound
from squeezefn.invariants import squeezing_punctured_disk

FAMILIES = {
    "radial q=0.5": SequencePunctures(family=RadialFamily(q=0.5, theta=1.0)),
    "radial q=0.9": SequencePunctures(family=RadialFamily(q=0.9, theta=1.0)),
    "orbit c=0.5 p=2": SequencePunctures(family=BoundaryOrbitFamily(c=0.5, p=2.0, theta=2.3)),
    "orbit c=0.5 p=1": SequencePunctures(family=BoundaryOrbitFamily(c=0.5, p=1.0, theta=2.3)),
}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--steps", type=int, default=12)
    args = parser.parse_args()

    print(f"{'family':>16}  {'|z|':>8}  {'value':>12}  {'stop N':>6}  {'tail bound':>10}")
    for name, domain in FAMILIES.items():
        for i in range(args.steps):
            mod = 1.0 - 0.5 ** (i + 1)
            z = complex(-mod, 0.0)  # opposite side of the first punctures
            res = squeezing_punctured_disk(domain, z)
            tail = radial_separation_bound(res.tail_bound_used, mod)
            print(f"{name:>16}  {mod:8.5f}  {res.value:12.8f}  "
                  f"{res.truncation_index:6d}  {tail:10.6f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
