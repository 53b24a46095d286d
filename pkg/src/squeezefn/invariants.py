"""Closed-form invariant engine with certified truncation.

Infima over infinite puncture sequences are evaluated exactly: examination
stops at the first index N where the tail bound
(m(N) - |z|)/(1 - |z| m(N)) strictly exceeds the running minimum, so the
returned value equals the minimum over the examined prefix and is independent
of any larger truncation.  Minima over removed-block boundaries are computed
by coarse boundary sampling plus bracket refinement, per coordinate, and carry
a Lipschitz mesh error such that the true minimum lies in
[value - mesh_error, value].
"""

from __future__ import annotations

import cmath
import heapq
import math
from dataclasses import dataclass

import numpy as np

from .domains import (
    Annulus,
    Block,
    DomainError,
    FinitePunctures,
    PolySequencePunctures,
    ProductOfBalls,
    RemovedBalls,
    RemovedPolydisks,
    SequencePunctures,
)
from .hyperbolic import (
    PointError,
    radial_separation_bound,
    require_interior_point,
    require_interior_polydisk_point,
    rho,
    rho_max,
)

# Evaluation aborts if an examined puncture is this close to the query point:
# the infimum over a valid boundary-convergent sequence is provably positive,
# so a near-zero distance signals an invalid query rather than a value of 0.
COLLISION_EPS = 1e-14

# Certification must fire long before this many punctures for any family whose
# tail bound approaches 1; the cap only guards float-degenerate inputs.
_SEQUENCE_CAP = 200_000

_DEFAULT_MESH_TOL = 1e-6
_MESH_FLOOR = 1e-14


class CertificationError(RuntimeError):
    """An infimum could not be certified (uncovered tail or refinement cap)."""


@dataclass(frozen=True)
class InvariantValue:
    """An invariant value in (0, 1] plus certification metadata.

    truncation_index is the last puncture/block index examined (0 for exact
    finite evaluations); attained_index is the smallest index attaining the
    minimum; tail_bound_used is the modulus bound m(N) active when evaluation
    stopped (0 when no tail was involved); mesh_error is nonzero only for
    boundary-minimization results.
    """

    value: float
    truncation_index: int = 0
    tail_bound_used: float = 0.0
    mesh_error: float = 0.0
    attained_index: int = 0

    def __post_init__(self):
        if not 0.0 < self.value <= 1.0:
            raise ValueError(f"invariant value {self.value!r} outside (0, 1]")
        if self.mesh_error < 0.0:
            raise ValueError(f"negative mesh error {self.mesh_error!r}")


@dataclass(frozen=True)
class VerificationOutcome:
    """Pass/fail result of a consistency check, with the computed values."""

    passed: bool
    observed: tuple[float, ...] = ()
    violating_index: int | None = None
    details: str = ""


# ---------------------------------------------------------------------------
# punctured disk
# ---------------------------------------------------------------------------


def _finite_min(dists) -> tuple[float, int]:
    best = math.inf
    best_idx = 0
    for k, d in enumerate(dists, 1):
        if d < COLLISION_EPS:
            raise PointError(f"query point coincides with puncture {k} "
                             f"(distance {d:.3e} < {COLLISION_EPS:g})")
        if d < best:
            best, best_idx = d, k
    return best, best_idx


def squeezing_punctured_disk(domain, z: complex) -> InvariantValue:
    """Squeezing function of the disk minus punctures:
    inf over punctures a of |(a - z)/(1 - conj(z) a)|.

    For certified sequences the result is exact, with the stopping index and
    active tail bound recorded.
    """
    z = require_interior_point(z)
    if isinstance(domain, FinitePunctures):
        best, best_idx = _finite_min(rho(z, a) for a in domain.punctures)
        return InvariantValue(best, truncation_index=0, attained_index=best_idx)
    if not isinstance(domain, SequencePunctures):
        raise DomainError(f"squeezing_punctured_disk does not apply to {type(domain).__name__}")
    return _sequence_min(domain, z, abs(z), rho)


def _sequence_min(domain, z, anchor: float, dist) -> InvariantValue:
    """Shared certified-truncation loop for disk and polydisk sequences."""
    count = domain.known_count()
    if count is not None:
        best, best_idx = _finite_min(dist(z, domain.puncture(k)) for k in range(1, count + 1))
        m = domain.tail_lower_bound(count)
        if m is None:
            # exhausted: the listing is exact and the infimum runs over it
            return InvariantValue(best, truncation_index=0, attained_index=best_idx)
        if m <= anchor or radial_separation_bound(m, anchor) < best:
            raise CertificationError(
                f"sequence exhausted without certification: tail constant {m!r} "
                f"gives bound below the prefix minimum {best!r} at this point"
            )
        return InvariantValue(best, truncation_index=count, tail_bound_used=m,
                              attained_index=best_idx)
    best = math.inf
    best_idx = 0
    examined = 0
    while True:
        if best_idx:
            m = domain.tail_lower_bound(examined)
            if m > anchor and radial_separation_bound(m, anchor) > best:
                return InvariantValue(best, truncation_index=examined,
                                      tail_bound_used=m, attained_index=best_idx)
        if examined >= _SEQUENCE_CAP:
            raise CertificationError(
                f"tail bound failed to certify within {_SEQUENCE_CAP} punctures"
            )
        examined += 1
        d = dist(z, domain.puncture(examined))
        if d < COLLISION_EPS:
            raise PointError(f"query point coincides with puncture {examined} "
                             f"(distance {d:.3e} < {COLLISION_EPS:g})")
        if d < best:
            best, best_idx = d, examined


def fridman_caratheodory_punctured_disk(domain, z: complex) -> InvariantValue:
    """Caratheodory Fridman invariant of the punctured disk.

    Coincides with the squeezing function on these domains; kept as a distinct
    entry point delegating to the same kernel.
    """
    return squeezing_punctured_disk(domain, z)


def lower_bound_certificate(domain, z: complex, claimed: float) -> VerificationOutcome:
    """Check the explicit-embedding certificate for a claimed lower bound.

    The centering map f(w) = (w - z)/(1 - conj(z) w) embeds the domain in the
    disk with f(z) = 0; the claim holds iff every puncture image has modulus
    >= claimed and the tail certificate covers all unexamined punctures.
    Failure is a result, not an error.
    """
    z = require_interior_point(z)
    if not 0.0 < claimed < 1.0:
        raise DomainError(f"claimed bound must be in (0, 1), got {claimed!r}")
    slack = 1e-12
    anchor = abs(z)

    def image_modulus(a: complex) -> float:
        return abs((a - z) / (1.0 - z.conjugate() * a))

    if isinstance(domain, FinitePunctures):
        punctures = domain.punctures
        for k, a in enumerate(punctures, 1):
            fa = image_modulus(a)
            if fa < claimed - slack:
                return VerificationOutcome(False, observed=(fa,), violating_index=k,
                                           details=f"puncture {k} image modulus {fa!r} < {claimed!r}")
        return VerificationOutcome(True, observed=(claimed,),
                                   details=f"all {len(punctures)} punctures covered")
    if not isinstance(domain, SequencePunctures):
        raise DomainError(f"lower_bound_certificate does not apply to {type(domain).__name__}")

    count = domain.known_count()
    examined = 0
    while True:
        m = domain.tail_lower_bound(examined)
        if m is None:
            # exact listing fully examined
            return VerificationOutcome(True, observed=(claimed,),
                                       details=f"all {examined} punctures covered, no tail")
        if m > anchor and radial_separation_bound(m, anchor) >= claimed - slack:
            return VerificationOutcome(True, observed=(m,),
                                       details=f"examined {examined} punctures; tail bound m = {m!r} "
                                               f"covers the rest")
        if count is not None and examined >= count:
            return VerificationOutcome(False, observed=(m,), violating_index=None,
                                       details=f"tail constant {m!r} cannot cover the claim")
        if examined >= _SEQUENCE_CAP:
            return VerificationOutcome(False, observed=(claimed,), violating_index=None,
                                       details=f"tail failed to cover within {_SEQUENCE_CAP} punctures")
        examined += 1
        fa = image_modulus(domain.puncture(examined))
        if fa < claimed - slack:
            return VerificationOutcome(False, observed=(fa,), violating_index=examined,
                                       details=f"puncture {examined} image modulus {fa!r} < {claimed!r}")


# ---------------------------------------------------------------------------
# punctured polydisk
# ---------------------------------------------------------------------------


def polydisk_squeezing_punctured(domain: PolySequencePunctures, z) -> InvariantValue:
    """Polydisk squeezing function of the polydisk minus punctures:
    inf over punctures a of max_j |(a_j - z_j)/(1 - conj(z_j) a_j)|.

    For n = 1 this collapses to the disk formula.
    """
    if not isinstance(domain, PolySequencePunctures):
        raise DomainError(f"polydisk_squeezing_punctured does not apply to {type(domain).__name__}")
    z = require_interior_polydisk_point(z, domain.n)
    return _sequence_min(domain, z, max(abs(c) for c in z), rho_max)


# ---------------------------------------------------------------------------
# removed blocks: certified boundary minimization
# ---------------------------------------------------------------------------


def _block_grad_bounds(z, block: Block) -> list[float]:
    """Per-coordinate gradient bounds of w -> rho(z_j, w) over the block.

    Points of the block satisfy |w_j| <= |c_j| + r, so
    (1 - |z_j|^2)/(1 - |z_j| (|c_j| + r))^2 bounds the gradient there; it
    refines the global 1/(1 - max_j |z_j|)^2 bound, which stays an upper
    bound of it.
    """
    out = []
    for zj, cj in zip(z, block.center):
        reach = min(abs(cj) + block.radius, 1.0)
        zm = abs(zj)
        out.append((1.0 - zm * zm) / (1.0 - zm * reach) ** 2)
    return out


def _min_on_circle(zc: complex, c: complex, s: float, tol: float, grad: float,
                   rounds_cap: int = 80) -> tuple[float, float]:
    """Certified minimum of rho(zc, .) over the circle |w - c| = s.

    A Mobius map sends the circle to a circle and the modulus along a circle
    has a single local minimum, so the objective is cyclically unimodal in the
    angle: the best coarse sample brackets the minimizer within one grid step
    and the bracket shrinks geometrically under midpoint-preserving
    refinement.  The returned error is the Lipschitz bound times the final
    bracket arc length; ``grad`` bounds the kernel gradient on the circle.
    """
    if s <= 0.0:
        return rho(zc, c), 0.0
    lip = grad * s  # per radian
    base = cmath.phase(zc - c) if zc != c else 0.0

    coarse = 64
    step = 2.0 * math.pi / coarse
    best_v = math.inf
    best_i = 0
    for i in range(coarse):
        v = rho(zc, c + s * cmath.exp(1j * (base + i * step)))
        if v < best_v:
            best_v, best_i = v, i
    lo = base + (best_i - 1) * step
    hi = base + (best_i + 1) * step

    for _ in range(rounds_cap):
        if lip * (hi - lo) <= tol or (hi - lo) <= 1e-15:
            break
        pts = [lo + (hi - lo) * i / 8.0 for i in range(9)]
        vals = [rho(zc, c + s * cmath.exp(1j * p)) for p in pts]
        j = min(range(9), key=vals.__getitem__)
        if vals[j] < best_v:
            best_v = vals[j]
        lo, hi = pts[max(j - 1, 0)], pts[min(j + 1, 8)]
    return best_v, max(lip * (hi - lo), _MESH_FLOOR)


def _polydisk_block_min(z, block: Block, tol: float) -> tuple[float, float]:
    """Min of the coordinate-max kernel over the sup-norm block boundary.

    The boundary is the union of faces {|w_i - c_i| = r, |w_j - c_j| <= r};
    on each face the minimum of a coordinate-wise max over a product set is
    the max of per-coordinate minima, each a circle problem (a coordinate
    disk's minimum sits on its rim when z_j lies outside, and is 0 otherwise).
    Returns (value, error) with the true minimum in [value - error, value].
    """
    n = len(z)
    r = block.radius
    inner_tol = tol * 0.5
    grads = _block_grad_bounds(z, block)
    circle = [_min_on_circle(z[j], block.center[j], r, inner_tol, grads[j])
              for j in range(n)]
    disk = [
        (0.0, 0.0) if abs(z[j] - block.center[j]) <= r else circle[j]
        for j in range(n)
    ]
    best_v = math.inf
    best_low = math.inf
    for i in range(n):
        per = [circle[j] if j == i else disk[j] for j in range(n)]
        face_v = max(v for v, _ in per)
        face_low = max(v - e for v, e in per)
        best_v = min(best_v, face_v)
        best_low = min(best_low, face_low)
    return best_v, max(best_v - best_low, _MESH_FLOOR)


def _sphere_profiles(t: tuple[float, ...], r: float) -> list[float]:
    # hyperspherical angles in [0, pi/2]^(n-1) -> radii profile (s_1..s_n), sum s^2 = r^2
    s = []
    prod = 1.0
    for ti in t:
        s.append(r * prod * math.cos(ti))
        prod *= math.sin(ti)
    s.append(r * prod)
    return s


def _ball_block_min(z, block: Block, tol: float,
                    evals_cap: int = 150_000) -> tuple[float, float]:
    """Min of the coordinate-max kernel over the Euclidean sphere boundary.

    For a fixed per-coordinate radius profile (s_1..s_n) with sum s_j^2 = r^2
    the coordinates range over independent circles, so the minimum is the max
    of per-coordinate circle minima; the profile itself is searched by
    best-first branch-and-bound over hyperspherical angles with the Lipschitz
    bound |dG| <= grad_bound * r * sum |dt_i|.  The inner circle tolerance
    shrinks with the box width so box bounds keep improving; cost grows
    roughly like tol^(-1/2) around a smooth interior minimum.
    """
    n = len(z)
    r = block.radius
    grads = _block_grad_bounds(z, block)
    lip_t = max(grads) * r

    def profile_min(t, inner_tol) -> tuple[float, float]:
        s = _sphere_profiles(t, r)
        vals = [_min_on_circle(z[j], block.center[j], s[j], inner_tol, grads[j])
                for j in range(n)]
        return max(v for v, _ in vals), max(v - e for v, e in vals)

    def inner_tol_for(half: float) -> float:
        return min(tol * 0.25, max(lip_t * half * 0.5, 1e-15))

    lo = (0.0,) * (n - 1)
    hi = (math.pi / 2.0,) * (n - 1)
    center = tuple((a + b) / 2.0 for a, b in zip(lo, hi))
    half_sum = sum((b - a) / 2.0 for a, b in zip(lo, hi))
    v, low = profile_min(center, inner_tol_for(half_sum))
    best = v
    # corner profiles are frequent minimizers (extreme radius splits); probing
    # them only sharpens the upper value
    for corner in (lo, hi):
        best = min(best, profile_min(corner, tol * 0.25)[0])
    heap = [(low - lip_t * half_sum, 0, lo, hi)]
    counter = 1
    evals = 1
    while heap:
        bound, _, lo, hi = heapq.heappop(heap)
        gap = best - bound
        if gap <= tol:
            return best, max(gap, _MESH_FLOOR)
        if evals >= evals_cap:
            raise CertificationError(
                f"boundary minimization failed to reach mesh tolerance {tol:g} "
                f"within {evals_cap} profile evaluations"
            )
        axis = max(range(len(lo)), key=lambda i: hi[i] - lo[i])
        mid = (lo[axis] + hi[axis]) / 2.0
        for child_lo, child_hi in (
            (lo, tuple(mid if i == axis else h for i, h in enumerate(hi))),
            (tuple(mid if i == axis else a for i, a in enumerate(lo)), hi),
        ):
            c = tuple((a + b) / 2.0 for a, b in zip(child_lo, child_hi))
            half = sum((b - a) / 2.0 for a, b in zip(child_lo, child_hi))
            v, low = profile_min(c, inner_tol_for(half))
            evals += 1
            best = min(best, v)
            heapq.heappush(heap, (low - lip_t * half, counter, child_lo, child_hi))
            counter += 1
    raise CertificationError("boundary minimization exhausted its search queue")


def _require_outside_block(domain, z, block: Block, index: int) -> None:
    if domain.block_distance(z, block) <= block.radius:
        raise PointError(f"point lies in or on removed block {index}: not in the domain")


def polydisk_squeezing_removed_blocks(domain, z, mesh_tol: float = _DEFAULT_MESH_TOL) -> InvariantValue:
    """Polydisk squeezing function of the polydisk minus closed blocks:
    inf over blocks of the boundary minimum of the coordinate-max kernel.

    Results carry mesh_error such that the true infimum lies within
    [value - mesh_error, value]; block sequences are truncated under the same
    tail certificate as punctures, applied to the innermost block modulus.
    """
    if not isinstance(domain, (RemovedPolydisks, RemovedBalls)):
        raise DomainError(
            f"polydisk_squeezing_removed_blocks does not apply to {type(domain).__name__}")
    z = require_interior_polydisk_point(z, domain.n)
    anchor = max(abs(c) for c in z)
    block_min = _polydisk_block_min if domain.geometry == "polydisk" else _ball_block_min

    count = domain.known_count()
    if count is not None:
        for k in range(1, count + 1):
            _require_outside_block(domain, z, domain.block(k), k)
        best_v = math.inf
        best_low = math.inf
        best_k = 0
        for k in range(1, count + 1):
            v, e = block_min(z, domain.block(k), mesh_tol)
            if v < best_v:
                best_v, best_k = v, k
            best_low = min(best_low, v - e)
        return InvariantValue(best_v, truncation_index=0,
                              mesh_error=max(best_v - best_low, _MESH_FLOOR),
                              attained_index=best_k)

    best_v = math.inf
    best_low = math.inf
    best_k = 0
    examined = 0
    while True:
        if best_k:
            t = domain.tail_inner_bound(examined)
            if t > anchor and radial_separation_bound(t, anchor) > best_v:
                return InvariantValue(best_v, truncation_index=examined, tail_bound_used=t,
                                      mesh_error=max(best_v - best_low, _MESH_FLOOR),
                                      attained_index=best_k)
        if examined >= _SEQUENCE_CAP:
            raise CertificationError(
                f"block tail bound failed to certify within {_SEQUENCE_CAP} blocks")
        examined += 1
        block = domain.block(examined)
        _require_outside_block(domain, z, block, examined)
        v, e = block_min(z, block, mesh_tol)
        if v < best_v:
            best_v, best_k = v, examined
        best_low = min(best_low, v - e)


def removed_block_display_formula(domain, z) -> float:
    """Center-free closed form inf_k max_j |r_k - |z_j|| / (1 - |z_j| r_k).

    Ignores block centers, so it matches the rigorous boundary minimum only in
    special positions (origin-centered blocks whose rim terms dominate every
    coordinate); exposed for regression comparison against the boundary
    minimization, not as an evaluator.
    """
    if not isinstance(domain, (RemovedPolydisks, RemovedBalls)):
        raise DomainError(
            f"removed_block_display_formula does not apply to {type(domain).__name__}")
    count = domain.known_count()
    if count is None:
        raise DomainError("display formula is not certified for block families; "
                          "use an explicit block list")
    z = require_interior_polydisk_point(z, domain.n)
    mods = [abs(c) for c in z]
    return min(
        max(abs((b.radius - m) / (1.0 - m * b.radius)) for m in mods)
        for b in (domain.block(k) for k in range(1, count + 1))
    )


# ---------------------------------------------------------------------------
# annulus and products of balls
# ---------------------------------------------------------------------------


def annulus_squeezing(domain: Annulus, z: complex) -> float:
    """Squeezing function of the annulus {r < |z| < 1}: max(|z|, r/|z|)."""
    if not isinstance(domain, Annulus):
        raise DomainError(f"annulus_squeezing does not apply to {type(domain).__name__}")
    z = require_interior_point(z)
    mod = abs(z)
    if mod <= domain.inner_radius:
        raise PointError(f"point with modulus {mod!r} is not in the annulus "
                         f"(inner radius {domain.inner_radius!r})")
    return max(mod, domain.inner_radius / mod)


def product_of_balls_squeezing(domain: ProductOfBalls, z=None) -> float:
    """Squeezing function of the n-fold product of n-balls: identically 1/sqrt(n)."""
    if not isinstance(domain, ProductOfBalls):
        raise DomainError(f"product_of_balls_squeezing does not apply to {type(domain).__name__}")
    if z is not None:
        _require_product_point(domain, z)
    return 1.0 / math.sqrt(domain.n)


def product_of_balls_T_lower_bound(domain: ProductOfBalls) -> float:
    """Lower bound 1/sqrt(n) on the polydisk squeezing function of the product
    of balls (the min over factors of the factor value); not the value itself."""
    if not isinstance(domain, ProductOfBalls):
        raise DomainError(f"product_of_balls_T_lower_bound does not apply to {type(domain).__name__}")
    return 1.0 / math.sqrt(domain.n)


def _require_product_point(domain: ProductOfBalls, z) -> None:
    n = domain.n
    factors = tuple(tuple(complex(c) for c in f) for f in z)
    if len(factors) != n or any(len(f) != n for f in factors):
        raise PointError(f"product point must have {n} factors of {n} coordinates")
    for i, f in enumerate(factors):
        norm = math.sqrt(sum(abs(c) ** 2 for c in f))
        if norm >= 1.0 - 1e-12:
            raise PointError(f"factor {i} has norm {norm!r}, not strictly inside the ball")


def product_of_balls_ratio_contradiction(n: int) -> VerificationOutcome:
    """Show both fixed-ratio relations between the two squeezing functions of
    the product of balls are impossible for n > 1.

    If the ball-based value (1/sqrt(n)) were 1/n of the polydisk-based one,
    the latter would be sqrt(n) > 1; if the polydisk-based value were 1/n of
    the ball-based one it would be n^(-3/2), below its own lower bound
    1/sqrt(n).
    """
    if n <= 1:
        raise DomainError(f"ratio contradiction check needs n > 1, got {n!r}")
    s = 1.0 / math.sqrt(n)
    forced_high = n * s        # sqrt(n), would have to be <= 1
    forced_low = s / n         # n^(-3/2), would have to be >= 1/sqrt(n)
    passed = forced_high > 1.0 and forced_low < s
    return VerificationOutcome(
        passed,
        observed=(forced_high, forced_low),
        details=(f"hypothetical values {forced_high!r} (> 1 required impossible) and "
                 f"{forced_low!r} (< lower bound {s!r})"),
    )


def annulus_compact_removal_gap(samples: int = 1_000_000) -> VerificationOutcome:
    """Compare the compact-removal formula with the annulus squeezing function
    at the reference configuration (removed closed disk of radius 1/4, point 1/2).

    The minimum of rho(1/2, .) over the closed disk |w| <= 1/4 is 2/7
    (attained at w = 1/4); the annulus value at 1/2 is 1/2.  The positive gap
    3/14 shows the compact-removal formula does not extend to this planar
    domain.  The disk minimum is confirmed by a dense polar sample.
    """
    analytic = rho(complex(0.5), complex(0.25))
    sampled = _closed_disk_min_oracle(complex(0.5), 0.25, samples)
    annulus_val = annulus_squeezing(Annulus(0.25), complex(0.5))
    gap = annulus_val - analytic
    passed = (
        sampled <= analytic + 1e-9
        and abs(sampled - analytic) <= 1e-4
        and annulus_val == 0.5
        and gap > 0.0
    )
    return VerificationOutcome(
        passed,
        observed=(analytic, sampled, annulus_val, gap),
        details=(f"disk minimum {analytic!r} (sampled {sampled!r}) vs annulus value "
                 f"{annulus_val!r}; gap {gap!r}"),
    )


def _closed_disk_min_oracle(z: complex, radius: float, samples: int) -> float:
    """Deterministic dense polar sample of the closed disk |w| <= radius."""
    m = max(2, 1 << math.ceil(math.log2(math.sqrt(max(samples, 4)))))
    t = np.arange(m + 1) / m
    phi = 2.0 * np.pi * np.arange(m) / m
    w = radius * t[:, None] * np.exp(1j * phi[None, :])
    vals = np.abs((w - z) / (1.0 - np.conj(z) * w))
    return float(vals.min())
