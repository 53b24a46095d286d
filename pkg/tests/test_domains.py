import cmath
import json
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from squeezefn.domains import (
    Annulus,
    Block,
    BoundaryOrbitFamily,
    DomainError,
    FinitePunctures,
    PolyRadialFamily,
    PolySequencePunctures,
    ProductOfBalls,
    RadialBlockFamily,
    RadialFamily,
    RemovedBalls,
    RemovedPolydisks,
    SequencePunctures,
    parse_domain_spec,
    serialize_domain_spec,
)
from squeezefn.verification import Lcg


# --- parsing ---------------------------------------------------------------

def test_parse_finite_punctures():
    d = parse_domain_spec('{"kind":"finite_punctures","points":[[0.5,0],[0,0.5]]}')
    assert isinstance(d, FinitePunctures)
    assert d.punctures == (complex(0.5), complex(0, 0.5))


def test_parse_radial_sequence():
    d = parse_domain_spec('{"kind":"sequence","family":"radial","q":0.5,"theta":1.0}')
    assert isinstance(d, SequencePunctures)
    assert d.puncture(1) == 0.5 * cmath.exp(1j)
    assert d.tail_lower_bound(0) == 0.5
    assert d.tail_lower_bound(1) == 0.75


def test_parse_removed_polydisk_and_overlap_error():
    doc = {"kind": "removed_polydisks", "n": 2,
           "blocks": [{"center": [[0, 0], [0, 0]], "radius": 0.6}]}
    d = parse_domain_spec(doc)
    assert isinstance(d, RemovedPolydisks) and d.blocks[0].radius == 0.6
    doc["blocks"].append({"center": [[0.5, 0], [0, 0]], "radius": 0.3})
    with pytest.raises(DomainError, match="intersecting closures"):
        parse_domain_spec(doc)


@pytest.mark.parametrize("doc,fragment", [
    ("{not json", "not valid JSON"),
    ('{"points":[[0,0]]}', "missing the 'kind'"),
    ('{"kind":"nosuch"}', "unknown domain kind"),
    ('{"kind":"finite_punctures"}', "missing 'points'"),
    ('{"kind":"finite_punctures","points":[]}', "nonempty list"),
    ('{"kind":"finite_punctures","points":[[0.5,0],[0.5,0]]}', "identical"),
    ('{"kind":"finite_punctures","points":[[2,0]]}', "not strictly inside"),
    ('{"kind":"finite_punctures","points":[[0.5,"x"]]}', "expected a number"),
    ('{"kind":"sequence"}', "either 'points' or 'family'"),
    ('{"kind":"sequence","family":"nosuch","q":0.5}', "unknown family"),
    ('{"kind":"sequence","family":"radial","q":0.5}', "needs parameters"),
    ('{"kind":"sequence","family":"radial","q":1.5,"theta":0}', "q must be in"),
    ('{"kind":"sequence","points":[[0.5,0]],"family":"radial","q":0.5,"theta":0}',
     "unexpected fields"),
    ('{"kind":"sequence","points":[[0.5,0]],"tail_modulus_constant":1.5}',
     "tail_modulus_constant must be in"),
    ('{"kind":"poly_sequence","points":[[[0.5,0]]]}', "missing 'n'"),
    ('{"kind":"poly_sequence","n":2,"points":[[[0.5,0]]]}', "expected 2"),
    ('{"kind":"removed_polydisks","n":1,"blocks":[{"center":[[0,0]],"radius":0.1}]}',
     "must be an integer >= 2"),
    ('{"kind":"removed_polydisks","n":2,"blocks":[{"center":[[0.5,0],[0,0]],"radius":0.6}]}',
     "not strictly inside the polydisk"),
    ('{"kind":"removed_balls","n":2,"blocks":[{"center":[[0,0],[0,0]],"radius":-1}]}',
     "radius must be positive"),
    ('{"kind":"annulus","r":1.5}', "inner radius must be in"),
    ('{"kind":"annulus"}', "missing 'r'"),
    ('{"kind":"product_of_balls","n":0}', "must be an integer >= 1"),
    ('{"kind":"product_of_balls","n":2.5}', "expected an integer"),
])
def test_parse_rejections_have_distinct_diagnostics(doc, fragment):
    with pytest.raises(DomainError, match=fragment):
        parse_domain_spec(doc)


def test_nearly_coincident_punctures_rejected():
    with pytest.raises(DomainError, match="closer than"):
        FinitePunctures((complex(0.5), complex(0.5 + 1e-13)))


def test_roundtrip_parse_serialize_parse():
    docs = [
        {"kind": "finite_punctures", "points": [[0.5, 0.0], [0.0, 0.5], [-0.25, 0.125]]},
        {"kind": "sequence", "family": "radial", "q": 0.5, "theta": 1.0},
        {"kind": "sequence", "family": "boundary_orbit", "c": 0.5, "p": 2.0, "theta": 2.3},
        {"kind": "sequence", "points": [[0.1, 0.2]], "tail_modulus_constant": 0.9},
        {"kind": "poly_sequence", "n": 2, "points": [[[0.5, 0.0], [0.0, 0.0]]]},
        {"kind": "poly_sequence", "n": 2, "family": "radial", "q": 0.5, "theta": 1.0},
        {"kind": "removed_polydisks", "n": 2,
         "blocks": [{"center": [[0.0, 0.0], [0.0, 0.0]], "radius": 0.25}]},
        {"kind": "removed_balls", "n": 3, "family": "radial",
         "q": 0.5, "theta": 1.0, "r0": 0.1},
        {"kind": "annulus", "r": 0.25},
        {"kind": "product_of_balls", "n": 4},
    ]
    for doc in docs:
        first = parse_domain_spec(doc)
        again = parse_domain_spec(json.loads(json.dumps(serialize_domain_spec(first))))
        assert first == again, doc


@settings(max_examples=100)
@given(st.lists(
    st.tuples(st.floats(0.01, 0.9), st.floats(0.0, 2.0 * math.pi)),
    min_size=1, max_size=6, unique=True,
))
def test_roundtrip_finite_punctures_random(polar_pts):
    pts = [complex(r * math.cos(p), r * math.sin(p)) for r, p in polar_pts]
    if any(abs(a - b) < 1e-9 for i, a in enumerate(pts) for b in pts[i + 1:]):
        return
    d = FinitePunctures(tuple(pts))
    assert parse_domain_spec(serialize_domain_spec(d)) == d


# --- sequence access and tail bounds -----------------------------------------

def test_puncture_at_is_deterministic():
    d = SequencePunctures(family=RadialFamily(q=0.5, theta=1.0))
    assert d.puncture(7) == d.puncture(7)
    assert d.puncture(1) == (1.0 - 0.5) * cmath.exp(1j)


def test_prefix_puncture_access():
    d = SequencePunctures(prefix=(complex(0.1), complex(0.2)))
    assert d.puncture(2) == complex(0.2)
    with pytest.raises(DomainError, match="no generator"):
        d.puncture(3)


def test_tail_lower_bound_prefix_semantics():
    d = SequencePunctures(prefix=(complex(0.1), complex(0.2)))
    assert d.tail_lower_bound(0) == 0.0
    assert d.tail_lower_bound(2) is None  # exhausted: infimum is over the prefix
    dc = SequencePunctures(prefix=(complex(0.1),), tail_constant=0.9)
    assert dc.tail_lower_bound(0) == 0.0
    assert dc.tail_lower_bound(1) == 0.9


@pytest.mark.parametrize("family", [
    RadialFamily(q=0.5, theta=1.0),
    RadialFamily(q=0.9, theta=0.37),
    BoundaryOrbitFamily(c=0.5, p=2.0, theta=2.3),
    BoundaryOrbitFamily(c=0.9, p=1.0, theta=0.11),
])
def test_family_tail_bound_contract(family):
    # nondecreasing toward 1 on a sampled grid, and a true lower bound on the
    # moduli of all later punctures
    grid = [0, 1, 10, 100, 1_000, 10_000, 100_000, 1_000_000]
    vals = [family.tail_modulus(n) for n in grid]
    assert all(a <= b for a, b in zip(vals, vals[1:]))
    assert vals[-1] > 1.0 - 1e-6
    rng = Lcg(2024)
    for _ in range(100):
        n = int(rng.uniform() * 10_000)
        k = n + 1 + int(rng.uniform() * 10_000)
        # float moduli can undershoot the real bound by an ulp of hypot
        assert abs(family.point(k)) >= family.tail_modulus(n) - 5e-16


@pytest.mark.parametrize("family", [
    RadialFamily(q=0.5, theta=1.0),
    BoundaryOrbitFamily(c=0.5, p=2.0, theta=2.3),
])
def test_family_bound_holds_at_every_index(family):
    for k in range(1, 10_001):
        assert abs(family.point(k)) >= family.tail_modulus(k - 1) - 5e-16


def test_slow_family_rejected_at_parse():
    # c/(N+1)^p with p = 0.5 has m(1e6) ~ 1 - 9e-4: cannot certify efficiently
    with pytest.raises(DomainError, match="does not converge to 1"):
        SequencePunctures(family=BoundaryOrbitFamily(c=0.9, p=0.25, theta=1.0))


def test_poly_family_points():
    fam = PolyRadialFamily(2, 0.5, 1.0)
    d = PolySequencePunctures(n=2, family=fam)
    assert d.puncture(1) == (0.5 * cmath.exp(1j), 0j)
    assert d.tail_lower_bound(0) == 0.5


# --- blocks -------------------------------------------------------------------

def test_block_family_blocks_are_disjoint_and_inside():
    fam = RadialBlockFamily(n=2, q=0.5, theta=1.0, r0=0.1)
    d = RemovedPolydisks(n=2, family=fam)
    blocks = [d.block(k) for k in range(1, 41)]
    for b in blocks:
        assert max(abs(c) for c in b.center) + b.radius < 1.0
    for i, a in enumerate(blocks):
        for b in blocks[i + 1:]:
            gap = max(abs(x - y) for x, y in zip(a.center, b.center))
            assert gap > a.radius + b.radius


def test_block_family_tail_bound_monotone():
    fam = RadialBlockFamily(n=2, q=0.5, theta=1.0, r0=0.1)
    vals = [fam.tail_inner_modulus(n) for n in (0, 1, 10, 100, 1_000)]
    assert all(a <= b for a, b in zip(vals, vals[1:]))
    for k in range(1, 200):
        b = fam.block(k)
        inner = max(abs(c) for c in b.center) - b.radius
        assert inner >= fam.tail_inner_modulus(k - 1) - 5e-16


def test_disjointness_metric_differs_between_kinds():
    blocks = (
        Block((complex(0.0), complex(0.0)), 0.125),
        Block((complex(0.2), complex(0.2)), 0.125),
    )
    # euclidean center gap ~0.283 > 0.25: valid as removed balls
    RemovedBalls(n=2, blocks=blocks)
    # sup-norm center gap 0.2 <= 0.25: closures intersect as polydisk blocks
    with pytest.raises(DomainError, match="intersecting closures"):
        RemovedPolydisks(n=2, blocks=blocks)


def test_annulus_and_product_validation():
    assert Annulus(0.25).inner_radius == 0.25
    assert ProductOfBalls(3).n == 3
    with pytest.raises(DomainError):
        Annulus(0.0)
    with pytest.raises(DomainError):
        ProductOfBalls(0)
