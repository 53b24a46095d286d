"""Command-line front end: evaluate invariants at points, sweep grids to CSV
for level-set plotting, and run verification suites.

Exit codes: 0 success / all checks pass, 1 verification failure, 2 usage or
parse/validation failure, 3 point outside the domain, 4 output I/O failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import invariants as inv
from . import verification as ver
from .domains import (
    Annulus,
    DomainError,
    FinitePunctures,
    PolySequencePunctures,
    ProductOfBalls,
    RemovedBalls,
    RemovedPolydisks,
    SequencePunctures,
    parse_domain_spec,
)
from .hyperbolic import PointError, rho

INVARIANT_NAMES = ("squeezing", "fridman-c", "polydisk-squeezing", "t-lower-bound")


def _load_domain(path: str):
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise DomainError(f"cannot read domain file {path!r}: {e}") from e
    return parse_domain_spec(text)


def _parse_planar_point(text: str) -> complex:
    parts = text.split(",")
    if len(parts) != 2:
        raise DomainError(f"point {text!r}: expected 're,im'")
    try:
        return complex(float(parts[0]), float(parts[1]))
    except ValueError as e:
        raise DomainError(f"point {text!r}: {e}") from e


def _parse_poly_point(text: str) -> tuple[complex, ...]:
    return tuple(_parse_planar_point(p) for p in text.split(";"))


def _evaluate(domain, invariant: str, point_text: str, mesh_tol: float) -> inv.InvariantValue:
    if invariant == "squeezing":
        if isinstance(domain, (FinitePunctures, SequencePunctures)):
            return inv.squeezing_punctured_disk(domain, _parse_planar_point(point_text))
        if isinstance(domain, Annulus):
            value = inv.annulus_squeezing(domain, _parse_planar_point(point_text))
            return inv.InvariantValue(value)
        if isinstance(domain, ProductOfBalls):
            flat = _parse_poly_point(point_text)
            if len(flat) != domain.n * domain.n:
                raise DomainError(
                    f"product_of_balls point needs {domain.n * domain.n} coordinates "
                    f"('re,im;re,im;...'), got {len(flat)}")
            factors = tuple(flat[i * domain.n:(i + 1) * domain.n] for i in range(domain.n))
            return inv.InvariantValue(inv.product_of_balls_squeezing(domain, factors))
        raise DomainError(f"invariant 'squeezing' does not apply to {type(domain).__name__}")
    if invariant == "fridman-c":
        if isinstance(domain, (FinitePunctures, SequencePunctures)):
            return inv.fridman_caratheodory_punctured_disk(domain, _parse_planar_point(point_text))
        raise DomainError(f"invariant 'fridman-c' does not apply to {type(domain).__name__}")
    if invariant == "polydisk-squeezing":
        if isinstance(domain, PolySequencePunctures):
            return inv.polydisk_squeezing_punctured(domain, _parse_poly_point(point_text))
        if isinstance(domain, (RemovedPolydisks, RemovedBalls)):
            return inv.polydisk_squeezing_removed_blocks(
                domain, _parse_poly_point(point_text), mesh_tol=mesh_tol)
        raise DomainError(
            f"invariant 'polydisk-squeezing' does not apply to {type(domain).__name__}")
    if invariant == "t-lower-bound":
        if isinstance(domain, ProductOfBalls):
            return inv.InvariantValue(inv.product_of_balls_T_lower_bound(domain))
        raise DomainError(f"invariant 't-lower-bound' does not apply to {type(domain).__name__}")
    raise DomainError(f"unknown invariant {invariant!r} (known: {INVARIANT_NAMES})")


def cmd_eval(args) -> int:
    domain = _load_domain(args.domain)
    res = _evaluate(domain, args.invariant, args.point, args.mesh_tol)
    print(f"value {res.value!r}")
    print(f"truncation_index {res.truncation_index}")
    print(f"tail_bound_used {res.tail_bound_used!r}")
    print(f"mesh_error {res.mesh_error!r}")
    print(f"attained_index {res.attained_index}")
    return 0


def cmd_compare(args) -> int:
    domain = _load_domain(args.domain)
    if not isinstance(domain, (FinitePunctures, SequencePunctures)):
        raise DomainError(f"compare applies to punctured disks, not {type(domain).__name__}")
    z = _parse_planar_point(args.point)
    s = inv.squeezing_punctured_disk(domain, z)
    h = inv.fridman_caratheodory_punctured_disk(domain, z)
    print(f"squeezing {s.value!r}")
    print(f"fridman-c {h.value!r}")
    print(f"difference {s.value - h.value!r}")
    return 0


@dataclass(frozen=True)
class GridJob:
    """A rectangle sweep: domain, [re_min, re_max, im_min, im_max], (nx, ny)."""

    domain: object
    rect: tuple[float, float, float, float]
    resolution: tuple[int, int]
    invariant: str

    def __post_init__(self):
        re_min, re_max, im_min, im_max = self.rect
        if not (re_min < re_max and im_min < im_max):
            raise DomainError(f"degenerate grid rectangle {self.rect!r}")
        nx, ny = self.resolution
        if nx < 2 or ny < 2:
            raise DomainError(f"grid resolution must be >= 2 in each direction, got {self.resolution!r}")


def _grid_cell(domain, invariant: str, z: complex) -> str:
    re, im = z.real, z.imag
    try:
        if isinstance(domain, Annulus):
            if invariant != "squeezing":
                raise DomainError(f"grid invariant {invariant!r} does not apply to an annulus")
            value = inv.annulus_squeezing(domain, z)
            return f"{re!r},{im!r},{value!r},0,true"
        if invariant == "squeezing":
            res = inv.squeezing_punctured_disk(domain, z)
        elif invariant == "fridman-c":
            res = inv.fridman_caratheodory_punctured_disk(domain, z)
        else:
            raise DomainError(f"grid invariant {invariant!r} does not apply to planar domains")
        return f"{re!r},{im!r},{res.value!r},{res.truncation_index},true"
    except PointError:
        return f"{re!r},{im!r},,,false"
    except inv.CertificationError:
        # uncovered tail: report the uncertified prefix minimum
        count = domain.known_count()
        value = min(rho(z, domain.puncture(k)) for k in range(1, count + 1))
        return f"{re!r},{im!r},{value!r},{count},false"


def run_grid(job: GridJob, jobs: int = 1) -> str:
    """Render the grid CSV; rows in row-major order (im outer, re inner),
    byte-identical across runs and across serial/parallel execution."""
    if not isinstance(job.domain, (FinitePunctures, SequencePunctures, Annulus)):
        raise DomainError(f"grid supports planar domains, not {type(job.domain).__name__}")
    re_min, re_max, im_min, im_max = job.rect
    nx, ny = job.resolution

    def row(iy: int) -> str:
        im = im_min + (im_max - im_min) * iy / (ny - 1)
        cells = []
        for ix in range(nx):
            re = re_min + (re_max - re_min) * ix / (nx - 1)
            cells.append(_grid_cell(job.domain, job.invariant, complex(re, im)))
        return "\n".join(cells)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(row, range(ny)))
    else:
        rows = [row(iy) for iy in range(ny)]
    return "re,im,value,truncation_index,certified\n" + "\n".join(rows) + "\n"


def cmd_grid(args) -> int:
    domain = _load_domain(args.domain)
    try:
        rect = tuple(float(x) for x in args.rect.split(","))
        nx, ny = (int(x) for x in args.res.split(","))
    except ValueError as e:
        raise DomainError(f"bad --rect/--res: {e}") from e
    if len(rect) != 4:
        raise DomainError(f"--rect needs four numbers 'a,b,c,d', got {args.rect!r}")
    job = GridJob(domain=domain, rect=rect, resolution=(nx, ny), invariant=args.invariant)
    csv_text = run_grid(job, jobs=args.jobs)
    try:
        with open(args.output, "w", encoding="utf-8", newline="") as f:
            f.write(csv_text)
    except OSError as e:
        print(f"error: cannot write {args.output!r}: {e}", file=sys.stderr)
        return 4
    return 0


def cmd_verify(args) -> int:
    reports = ver.run_suite(args.suite, seed=args.seed, trials=args.trials,
                            samples=args.samples)
    if args.format == "json":
        print(json.dumps(ver.reports_to_json(reports), indent=2))
    else:
        print(ver.format_reports(reports))
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="squeezefn",
        description="Squeezing functions and Caratheodory-Fridman invariants "
                    "with certified truncation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate an invariant at a point")
    p.add_argument("--domain", required=True, help="domain document (JSON)")
    p.add_argument("--point", required=True, help="'re,im' or 're,im;re,im;...'")
    p.add_argument("--invariant", default="squeezing", choices=INVARIANT_NAMES)
    p.add_argument("--mesh-tol", type=float, default=1e-6,
                   help="target mesh error for boundary minimization")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("compare", help="print squeezing and fridman-c side by side")
    p.add_argument("--domain", required=True)
    p.add_argument("--point", required=True)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("grid", help="sweep a rectangle to CSV")
    p.add_argument("--domain", required=True)
    p.add_argument("--rect", required=True, help="re_min,re_max,im_min,im_max")
    p.add_argument("--res", required=True, help="nx,ny")
    p.add_argument("--invariant", default="squeezing", choices=("squeezing", "fridman-c"))
    p.add_argument("--output", required=True)
    p.add_argument("--jobs", type=int, default=1, help="concurrent row workers")
    p.set_defaults(func=cmd_grid)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, choices=ver.SUITES)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--samples", type=int, default=250_000)
    p.add_argument("--format", default="text", choices=("text", "json"))
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DomainError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except inv.CertificationError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except PointError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
