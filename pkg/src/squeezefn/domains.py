"""Domain families: punctured disks and polydisks, removed blocks, annuli and
products of balls, plus the JSON document schema used by the CLI.

Infinite puncture sequences must come with a computable tail certificate: a
nondecreasing bound m(N) <= inf_{k > N} |a_k| with m(N) -> 1.  Built-in
parametric families carry closed-form certificates; explicit point lists may
declare a constant bound for everything beyond the listed prefix.  Without a
certificate an infinite infimum is not computable with a correctness
guarantee, so parsing rejects families whose bound fails to approach 1.

Generated tail punctures are exempt from the boundary-adjacency rejection
applied to user-supplied points: their moduli approach 1 by construction and
round to 1.0 in double precision beyond index ~54 for geometric families.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass

from .hyperbolic import PointError, require_interior_point

# Parse-time separation floor: point lists (and spot-checked family prefixes)
# with a pair closer than this are rejected rather than silently accepted.
PAIR_SEPARATION = 1e-12

# Grid of indices on which family tail bounds are checked at construction.
_TAIL_CHECK_GRID = (0, 1, 10, 100, 1_000, 10_000, 100_000, 1_000_000)
_TAIL_LIMIT_INDEX = 1_000_000
_TAIL_LIMIT_FLOOR = 1.0 - 1e-6
_FAMILY_DISTINCT_PREFIX = 64
_BLOCK_FAMILY_CHECK = 40


class DomainError(ValueError):
    """A domain document violates the schema or a structural invariant."""


def _ingest_point(p, what: str) -> complex:
    try:
        return require_interior_point(p, what)
    except PointError as e:
        raise DomainError(str(e)) from e


def _check_point_list(points, what: str) -> tuple[complex, ...]:
    pts = tuple(_ingest_point(p, f"{what} entry") for p in points)
    if not pts:
        raise DomainError(f"{what}: empty point list")
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            d = abs(pts[i] - pts[j])
            if d == 0.0:
                raise DomainError(f"{what}: entries {i} and {j} are identical")
            if d < PAIR_SEPARATION:
                raise DomainError(
                    f"{what}: entries {i} and {j} are closer than {PAIR_SEPARATION:g}"
                )
    return pts


# ---------------------------------------------------------------------------
# sequence families
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RadialFamily:
    """a_k = (1 - q^k) e^{i k theta} with 0 < q < 1; tail bound m(N) = 1 - q^(N+1)."""

    q: float
    theta: float

    kind = "radial"

    def __post_init__(self):
        if not 0.0 < self.q < 1.0:
            raise DomainError(f"radial family: q must be in (0, 1), got {self.q!r}")

    def point(self, k: int) -> complex:
        return (1.0 - self.q**k) * cmath.exp(1j * self.theta * k)

    def tail_modulus(self, examined: int) -> float:
        return 1.0 - self.q ** (examined + 1)

    def params(self) -> dict:
        return {"q": self.q, "theta": self.theta}


@dataclass(frozen=True)
class BoundaryOrbitFamily:
    """a_k = (1 - c / k^p) e^{i k theta} with 0 < c < 1, p > 0; m(N) = 1 - c/(N+1)^p."""

    c: float
    p: float
    theta: float

    kind = "boundary_orbit"

    def __post_init__(self):
        if not 0.0 < self.c < 1.0:
            raise DomainError(f"boundary_orbit family: c must be in (0, 1), got {self.c!r}")
        if self.p <= 0.0:
            raise DomainError(f"boundary_orbit family: p must be positive, got {self.p!r}")

    def point(self, k: int) -> complex:
        return (1.0 - self.c / k**self.p) * cmath.exp(1j * self.theta * k)

    def tail_modulus(self, examined: int) -> float:
        return 1.0 - self.c / (examined + 1) ** self.p

    def params(self) -> dict:
        return {"c": self.c, "p": self.p, "theta": self.theta}


@dataclass(frozen=True)
class PolyRadialFamily:
    """First coordinate follows the radial family, remaining coordinates are 0."""

    n: int
    q: float
    theta: float

    kind = "radial"

    def __post_init__(self):
        if not 0.0 < self.q < 1.0:
            raise DomainError(f"radial family: q must be in (0, 1), got {self.q!r}")
        if self.n < 1:
            raise DomainError(f"radial family: dimension must be >= 1, got {self.n!r}")

    def point(self, k: int) -> tuple[complex, ...]:
        lead = (1.0 - self.q**k) * cmath.exp(1j * self.theta * k)
        return (lead,) + (0j,) * (self.n - 1)

    def tail_modulus(self, examined: int) -> float:
        return 1.0 - self.q ** (examined + 1)

    def params(self) -> dict:
        return {"q": self.q, "theta": self.theta}


def _validate_family(family) -> None:
    last = 0.0
    for n in _TAIL_CHECK_GRID:
        m = family.tail_modulus(n)
        if not 0.0 < m <= 1.0:
            raise DomainError(f"tail bound m({n}) = {m!r} outside (0, 1]")
        if m < last:
            raise DomainError(f"tail bound decreases between indices (m({n}) = {m!r})")
        last = m
    if family.tail_modulus(_TAIL_LIMIT_INDEX) <= _TAIL_LIMIT_FLOOR:
        raise DomainError(
            "tail bound does not converge to 1: "
            f"m({_TAIL_LIMIT_INDEX}) = {family.tail_modulus(_TAIL_LIMIT_INDEX)!r} <= {_TAIL_LIMIT_FLOOR}"
        )
    pts = [family.point(k) for k in range(1, _FAMILY_DISTINCT_PREFIX + 1)]
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if _point_gap(pts[i], pts[j]) < PAIR_SEPARATION:
                raise DomainError(
                    f"family points {i + 1} and {j + 1} are closer than {PAIR_SEPARATION:g}"
                )


def _point_gap(a, b) -> float:
    if isinstance(a, tuple):
        return max(abs(x - y) for x, y in zip(a, b))
    return abs(a - b)


# ---------------------------------------------------------------------------
# punctured disk / polydisk domains
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FinitePunctures:
    """Unit disk minus finitely many pairwise-distinct punctures."""

    punctures: tuple[complex, ...]

    def __post_init__(self):
        object.__setattr__(self, "punctures", _check_point_list(self.punctures, "punctures"))


@dataclass(frozen=True)
class SequencePunctures:
    """Unit disk minus a puncture sequence converging to the boundary.

    Exactly one of the two descriptions is used:

    * ``family``: a named generator producing a_k for every k, with a
      closed-form tail bound;
    * ``prefix``: an explicit point list.  With ``tail_constant`` set, all
      unlisted punctures are asserted to have modulus >= that constant;
      without it the listing is exact and the infimum runs over the prefix.
    """

    prefix: tuple[complex, ...] = ()
    family: RadialFamily | BoundaryOrbitFamily | None = None
    tail_constant: float | None = None

    def __post_init__(self):
        if self.family is not None:
            if self.prefix:
                raise DomainError("sequence: give either points or a family, not both")
            if self.tail_constant is not None:
                raise DomainError("sequence: a family carries its own tail bound; "
                                  "tail_modulus_constant is not allowed")
            _validate_family(self.family)
            return
        object.__setattr__(self, "prefix", _check_point_list(self.prefix, "sequence points"))
        if self.tail_constant is not None and not 0.0 < self.tail_constant < 1.0:
            raise DomainError(
                f"sequence: tail_modulus_constant must be in (0, 1), got {self.tail_constant!r}"
            )

    def puncture(self, k: int) -> complex:
        """k-th puncture (1-based); deterministic and bitwise reproducible."""
        if k < 1:
            raise DomainError(f"puncture index must be >= 1, got {k!r}")
        if self.family is not None:
            return self.family.point(k)
        if k <= len(self.prefix):
            return self.prefix[k - 1]
        raise DomainError(f"no generator attached: puncture {k} is beyond the "
                          f"{len(self.prefix)}-point prefix")

    def known_count(self) -> int | None:
        """Number of inspectable punctures, or None for generated families."""
        return None if self.family is not None else len(self.prefix)

    def tail_lower_bound(self, examined: int) -> float | None:
        """m such that every puncture with index > examined has modulus >= m.

        Returns None ("exhausted") when nothing remains beyond the examined
        prefix of an explicitly listed sequence.
        """
        if examined < 0:
            raise DomainError(f"tail bound index must be >= 0, got {examined!r}")
        if self.family is not None:
            return self.family.tail_modulus(examined)
        if examined < len(self.prefix):
            return 0.0
        return self.tail_constant  # None = exhausted: infimum is over the prefix


@dataclass(frozen=True)
class PolySequencePunctures:
    """Unit polydisk minus a puncture sequence; moduli are coordinate maxima."""

    n: int
    prefix: tuple[tuple[complex, ...], ...] = ()
    family: PolyRadialFamily | None = None
    tail_constant: float | None = None

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise DomainError(f"poly_sequence: dimension must be an integer >= 1, got {self.n!r}")
        if self.family is not None:
            if self.prefix:
                raise DomainError("poly_sequence: give either points or a family, not both")
            if self.tail_constant is not None:
                raise DomainError("poly_sequence: a family carries its own tail bound; "
                                  "tail_modulus_constant is not allowed")
            if self.family.n != self.n:
                raise DomainError(f"poly_sequence: family dimension {self.family.n} != n = {self.n}")
            _validate_family(self.family)
            return
        pts = []
        for i, p in enumerate(self.prefix):
            p = tuple(_ingest_point(c, f"poly point {i} coordinate") for c in p)
            if len(p) != self.n:
                raise DomainError(f"poly point {i} has {len(p)} coordinates, expected {self.n}")
            pts.append(p)
        if not pts:
            raise DomainError("poly_sequence: empty point list")
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                if _point_gap(pts[i], pts[j]) < PAIR_SEPARATION:
                    raise DomainError(
                        f"poly points {i} and {j} are closer than {PAIR_SEPARATION:g}"
                    )
        object.__setattr__(self, "prefix", tuple(pts))
        if self.tail_constant is not None and not 0.0 < self.tail_constant < 1.0:
            raise DomainError(
                f"poly_sequence: tail_modulus_constant must be in (0, 1), got {self.tail_constant!r}"
            )

    def puncture(self, k: int) -> tuple[complex, ...]:
        if k < 1:
            raise DomainError(f"puncture index must be >= 1, got {k!r}")
        if self.family is not None:
            return self.family.point(k)
        if k <= len(self.prefix):
            return self.prefix[k - 1]
        raise DomainError(f"no generator attached: puncture {k} is beyond the "
                          f"{len(self.prefix)}-point prefix")

    def known_count(self) -> int | None:
        return None if self.family is not None else len(self.prefix)

    def tail_lower_bound(self, examined: int) -> float | None:
        if examined < 0:
            raise DomainError(f"tail bound index must be >= 0, got {examined!r}")
        if self.family is not None:
            return self.family.tail_modulus(examined)
        if examined < len(self.prefix):
            return 0.0
        return self.tail_constant


# ---------------------------------------------------------------------------
# removed blocks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Block:
    """A removed closed polydisk or ball: center in the polydisk plus a radius."""

    center: tuple[complex, ...]
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", tuple(complex(c) for c in self.center))
        if self.radius <= 0.0:
            raise DomainError(f"block radius must be positive, got {self.radius!r}")


@dataclass(frozen=True)
class RadialBlockFamily:
    """Blocks centered at ((1 - q^k) e^{i k theta}, 0, ..., 0) with radii r0 q^k.

    tail_inner_modulus(N) bounds max_j |center_j| - radius from below over all
    blocks with index > N; containment in the polydisk holds for every k since
    max_j |center_j| + radius = 1 - (1 - r0) q^k < 1.
    """

    n: int
    q: float
    theta: float
    r0: float

    kind = "radial"

    def __post_init__(self):
        if self.n < 2:
            raise DomainError(f"block family: dimension must be >= 2, got {self.n!r}")
        if not 0.0 < self.q < 1.0:
            raise DomainError(f"block family: q must be in (0, 1), got {self.q!r}")
        if not 0.0 < self.r0 < 1.0:
            raise DomainError(f"block family: r0 must be in (0, 1), got {self.r0!r}")

    def block(self, k: int) -> Block:
        lead = (1.0 - self.q**k) * cmath.exp(1j * self.theta * k)
        return Block((lead,) + (0j,) * (self.n - 1), self.r0 * self.q**k)

    def tail_inner_modulus(self, examined: int) -> float:
        return max(0.0, 1.0 - (1.0 + self.r0) * self.q ** (examined + 1))

    def params(self) -> dict:
        return {"q": self.q, "theta": self.theta, "r0": self.r0}


def sup_distance(a, b) -> float:
    return max(abs(x - y) for x, y in zip(a, b))


def euclid_distance(a, b) -> float:
    return math.sqrt(sum(abs(x - y) ** 2 for x, y in zip(a, b)))


def _validate_blocks(n: int, blocks, family, metric, what: str) -> tuple[Block, ...]:
    if family is not None and blocks:
        raise DomainError(f"{what}: give either blocks or a family, not both")
    if family is None and not blocks:
        raise DomainError(f"{what}: empty block list")
    if family is not None:
        if family.n != n:
            raise DomainError(f"{what}: family dimension {family.n} != n = {n}")
        check = [family.block(k) for k in range(1, _BLOCK_FAMILY_CHECK + 1)]
        last = 0.0
        for idx in _TAIL_CHECK_GRID:
            m = family.tail_inner_modulus(idx)
            if m < last:
                raise DomainError(f"{what}: block tail bound decreases at index {idx}")
            last = m
        if family.tail_inner_modulus(_TAIL_LIMIT_INDEX) <= _TAIL_LIMIT_FLOOR:
            raise DomainError(f"{what}: block tail bound does not converge to 1")
    else:
        check = list(blocks)
    for i, b in enumerate(check):
        if len(b.center) != n:
            raise DomainError(f"{what}: block {i} center has {len(b.center)} coordinates, expected {n}")
        reach = max(abs(c) for c in b.center) + b.radius
        if reach >= 1.0:
            raise DomainError(
                f"{what}: block {i} is not strictly inside the polydisk "
                f"(max |center_j| + radius = {reach!r})"
            )
    for i in range(len(check)):
        for j in range(i + 1, len(check)):
            if metric(check[i].center, check[j].center) <= check[i].radius + check[j].radius:
                raise DomainError(f"{what}: blocks {i} and {j} have intersecting closures")
    return tuple(blocks)


@dataclass(frozen=True)
class RemovedPolydisks:
    """Unit polydisk minus pairwise-disjoint closed sup-norm blocks."""

    n: int
    blocks: tuple[Block, ...] = ()
    family: RadialBlockFamily | None = None

    geometry = "polydisk"

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise DomainError(f"removed_polydisks: dimension must be an integer >= 2, got {self.n!r}")
        object.__setattr__(
            self, "blocks",
            _validate_blocks(self.n, self.blocks, self.family, sup_distance, "removed_polydisks"),
        )

    def block(self, k: int) -> Block:
        if self.family is not None:
            return self.family.block(k)
        if 1 <= k <= len(self.blocks):
            return self.blocks[k - 1]
        raise DomainError(f"no block family attached: block {k} is beyond the list")

    def known_count(self) -> int | None:
        return None if self.family is not None else len(self.blocks)

    def tail_inner_bound(self, examined: int) -> float | None:
        """Lower bound on max_j |center_j| - radius over blocks beyond ``examined``."""
        if self.family is not None:
            return self.family.tail_inner_modulus(examined)
        return None if examined >= len(self.blocks) else 0.0

    def block_distance(self, z, block: Block) -> float:
        return sup_distance(z, block.center)


@dataclass(frozen=True)
class RemovedBalls:
    """Unit polydisk minus pairwise-disjoint closed Euclidean balls."""

    n: int
    blocks: tuple[Block, ...] = ()
    family: RadialBlockFamily | None = None

    geometry = "ball"

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise DomainError(f"removed_balls: dimension must be an integer >= 2, got {self.n!r}")
        object.__setattr__(
            self, "blocks",
            _validate_blocks(self.n, self.blocks, self.family, euclid_distance, "removed_balls"),
        )

    block = RemovedPolydisks.block
    known_count = RemovedPolydisks.known_count
    tail_inner_bound = RemovedPolydisks.tail_inner_bound

    def block_distance(self, z, block: Block) -> float:
        return euclid_distance(z, block.center)


# ---------------------------------------------------------------------------
# closed-form domains
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Annulus:
    """{z : r < |z| < 1} for 0 < r < 1."""

    inner_radius: float

    def __post_init__(self):
        if not 0.0 < self.inner_radius < 1.0:
            raise DomainError(
                f"annulus: inner radius must be in (0, 1), got {self.inner_radius!r}"
            )


@dataclass(frozen=True)
class ProductOfBalls:
    """n-fold product of n-dimensional unit balls."""

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise DomainError(f"product_of_balls: n must be an integer >= 1, got {self.n!r}")


DomainSpec = (
    FinitePunctures
    | SequencePunctures
    | PolySequencePunctures
    | RemovedPolydisks
    | RemovedBalls
    | Annulus
    | ProductOfBalls
)


# ---------------------------------------------------------------------------
# document schema
# ---------------------------------------------------------------------------


def _as_number(x, what: str) -> float:
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise DomainError(f"{what}: expected a number, got {x!r}")
    return float(x)


def _as_int(x, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise DomainError(f"{what}: expected an integer, got {x!r}")
    return x


def _as_pair(x, what: str) -> complex:
    if not isinstance(x, list) or len(x) != 2:
        raise DomainError(f"{what}: expected [re, im], got {x!r}")
    return complex(_as_number(x[0], what), _as_number(x[1], what))


def _as_pair_list(x, what: str) -> list[complex]:
    if not isinstance(x, list) or not x:
        raise DomainError(f"{what}: expected a nonempty list of [re, im] pairs")
    return [_as_pair(p, f"{what}[{i}]") for i, p in enumerate(x)]


def _reject_unknown(doc: dict, allowed: set[str], kind: str) -> None:
    extra = set(doc) - allowed - {"kind"}
    if extra:
        raise DomainError(f"{kind}: unexpected fields {sorted(extra)!r}")


_SEQUENCE_FAMILIES = {
    "radial": (RadialFamily, ("q", "theta")),
    "boundary_orbit": (BoundaryOrbitFamily, ("c", "p", "theta")),
}


def _parse_family(doc: dict, kind: str):
    name = doc["family"]
    if name not in _SEQUENCE_FAMILIES:
        raise DomainError(f"{kind}: unknown family {name!r} "
                          f"(known: {sorted(_SEQUENCE_FAMILIES)})")
    cls, params = _SEQUENCE_FAMILIES[name]
    missing = [p for p in params if p not in doc]
    if missing:
        raise DomainError(f"{kind}: family {name!r} needs parameters {missing!r}")
    return cls(**{p: _as_number(doc[p], f"{kind}.{p}") for p in params}), set(params)


def parse_domain_spec(document) -> DomainSpec:
    """Parse and validate a domain document (JSON text or an equivalent dict)."""
    if isinstance(document, (str, bytes)):
        try:
            doc = json.loads(document)
        except json.JSONDecodeError as e:
            raise DomainError(f"domain document is not valid JSON: {e}") from e
    else:
        doc = document
    if not isinstance(doc, dict):
        raise DomainError(f"domain document must be an object, got {type(doc).__name__}")
    if "kind" not in doc:
        raise DomainError("domain document is missing the 'kind' field")
    kind = doc["kind"]

    if kind == "finite_punctures":
        _reject_unknown(doc, {"points"}, kind)
        if "points" not in doc:
            raise DomainError("finite_punctures: missing 'points'")
        return FinitePunctures(tuple(_as_pair_list(doc["points"], "points")))

    if kind == "sequence":
        if "family" in doc:
            family, params = _parse_family(doc, kind)
            _reject_unknown(doc, {"family"} | params, kind)
            return SequencePunctures(family=family)
        _reject_unknown(doc, {"points", "tail_modulus_constant"}, kind)
        if "points" not in doc:
            raise DomainError("sequence: need either 'points' or 'family'")
        tail = doc.get("tail_modulus_constant")
        if tail is not None:
            tail = _as_number(tail, "sequence.tail_modulus_constant")
        return SequencePunctures(
            prefix=tuple(_as_pair_list(doc["points"], "points")), tail_constant=tail
        )

    if kind == "poly_sequence":
        if "n" not in doc:
            raise DomainError("poly_sequence: missing 'n'")
        n = _as_int(doc["n"], "poly_sequence.n")
        if "family" in doc:
            name = doc["family"]
            if name != "radial":
                raise DomainError(f"poly_sequence: unknown family {name!r} (known: ['radial'])")
            for p in ("q", "theta"):
                if p not in doc:
                    raise DomainError(f"poly_sequence: family 'radial' needs parameter {p!r}")
            _reject_unknown(doc, {"n", "family", "q", "theta"}, kind)
            return PolySequencePunctures(
                n=n,
                family=PolyRadialFamily(n, _as_number(doc["q"], "q"), _as_number(doc["theta"], "theta")),
            )
        _reject_unknown(doc, {"n", "points", "tail_modulus_constant"}, kind)
        if "points" not in doc:
            raise DomainError("poly_sequence: need either 'points' or 'family'")
        pts = doc["points"]
        if not isinstance(pts, list) or not pts:
            raise DomainError("poly_sequence.points: expected a nonempty list")
        prefix = tuple(
            tuple(_as_pair_list(p, f"points[{i}]")) for i, p in enumerate(pts)
        )
        tail = doc.get("tail_modulus_constant")
        if tail is not None:
            tail = _as_number(tail, "poly_sequence.tail_modulus_constant")
        return PolySequencePunctures(n=n, prefix=prefix, tail_constant=tail)

    if kind in ("removed_polydisks", "removed_balls"):
        cls = RemovedPolydisks if kind == "removed_polydisks" else RemovedBalls
        if "n" not in doc:
            raise DomainError(f"{kind}: missing 'n'")
        n = _as_int(doc["n"], f"{kind}.n")
        if "family" in doc:
            name = doc["family"]
            if name != "radial":
                raise DomainError(f"{kind}: unknown family {name!r} (known: ['radial'])")
            for p in ("q", "theta", "r0"):
                if p not in doc:
                    raise DomainError(f"{kind}: family 'radial' needs parameter {p!r}")
            _reject_unknown(doc, {"n", "family", "q", "theta", "r0"}, kind)
            return cls(n=n, family=RadialBlockFamily(
                n, _as_number(doc["q"], "q"), _as_number(doc["theta"], "theta"),
                _as_number(doc["r0"], "r0"),
            ))
        _reject_unknown(doc, {"n", "blocks"}, kind)
        if "blocks" not in doc or not isinstance(doc["blocks"], list) or not doc["blocks"]:
            raise DomainError(f"{kind}: missing or empty 'blocks'")
        blocks = []
        for i, b in enumerate(doc["blocks"]):
            if not isinstance(b, dict) or "center" not in b or "radius" not in b:
                raise DomainError(f"{kind}.blocks[{i}]: expected {{center, radius}}")
            extra = set(b) - {"center", "radius"}
            if extra:
                raise DomainError(f"{kind}.blocks[{i}]: unexpected fields {sorted(extra)!r}")
            blocks.append(Block(
                tuple(_as_pair_list(b["center"], f"blocks[{i}].center")),
                _as_number(b["radius"], f"blocks[{i}].radius"),
            ))
        return cls(n=n, blocks=tuple(blocks))

    if kind == "annulus":
        _reject_unknown(doc, {"r"}, kind)
        if "r" not in doc:
            raise DomainError("annulus: missing 'r'")
        return Annulus(_as_number(doc["r"], "annulus.r"))

    if kind == "product_of_balls":
        _reject_unknown(doc, {"n"}, kind)
        if "n" not in doc:
            raise DomainError("product_of_balls: missing 'n'")
        return ProductOfBalls(_as_int(doc["n"], "product_of_balls.n"))

    raise DomainError(f"unknown domain kind {kind!r}")


def _pair(z: complex) -> list[float]:
    return [z.real, z.imag]


def serialize_domain_spec(domain: DomainSpec) -> dict:
    """Inverse of parse_domain_spec: parse(serialize(d)) == d for valid domains."""
    if isinstance(domain, FinitePunctures):
        return {"kind": "finite_punctures", "points": [_pair(p) for p in domain.punctures]}
    if isinstance(domain, SequencePunctures):
        if domain.family is not None:
            return {"kind": "sequence", "family": domain.family.kind, **domain.family.params()}
        out = {"kind": "sequence", "points": [_pair(p) for p in domain.prefix]}
        if domain.tail_constant is not None:
            out["tail_modulus_constant"] = domain.tail_constant
        return out
    if isinstance(domain, PolySequencePunctures):
        if domain.family is not None:
            return {"kind": "poly_sequence", "n": domain.n,
                    "family": domain.family.kind, **domain.family.params()}
        out = {"kind": "poly_sequence", "n": domain.n,
               "points": [[_pair(c) for c in p] for p in domain.prefix]}
        if domain.tail_constant is not None:
            out["tail_modulus_constant"] = domain.tail_constant
        return out
    if isinstance(domain, (RemovedPolydisks, RemovedBalls)):
        kind = "removed_polydisks" if isinstance(domain, RemovedPolydisks) else "removed_balls"
        if domain.family is not None:
            return {"kind": kind, "n": domain.n,
                    "family": domain.family.kind, **domain.family.params()}
        return {"kind": kind, "n": domain.n,
                "blocks": [{"center": [_pair(c) for c in b.center], "radius": b.radius}
                           for b in domain.blocks]}
    if isinstance(domain, Annulus):
        return {"kind": "annulus", "r": domain.inner_radius}
    if isinstance(domain, ProductOfBalls):
        return {"kind": "product_of_balls", "n": domain.n}
    raise DomainError(f"cannot serialize {type(domain).__name__}")
