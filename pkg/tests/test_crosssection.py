"""Cross-section lattice construction, the symplectic listing, and validation."""

import pytest

from monoid_orders.crosssection import (
    PAPER_VERIFIED,
    RULE_DERIVED,
    USER_SUPPLIED,
    is_j_irreducible,
    j_irreducible_lattice,
    load_lattice,
    symplectic_lattice,
    validate,
    CrossSectionLattice,
    LatticeEntry,
)
from monoid_orders.errors import InvalidSupport, InvariantViolation
from monoid_orders.rootsystem import CartanType, build, connected_components


def shape(lat):
    """(lambda_star, lambda_substar, exponent) triples, zero entry first."""
    return [
        (sorted(e.lambda_star), sorted(e.lambda_substar), e.torus_index_exponent)
        for e in lat.entries
    ]


def test_c2_last_fundamental():
    lat = j_irreducible_lattice(build(CartanType("C", 2)), frozenset({1}))
    assert shape(lat) == [
        ([], [1, 2], 0),
        ([], [1], 1),
        ([2], [], 2),
        ([1, 2], [], 3),
    ]
    assert lat.provenance == PAPER_VERIFIED


def test_a1_empty_support():
    lat = j_irreducible_lattice(build(CartanType("A", 1)), frozenset())
    assert shape(lat) == [([], [1], 0), ([], [], 1), ([1], [], 2)]


def test_c3_last_fundamental():
    lat = j_irreducible_lattice(build(CartanType("C", 3)), frozenset({1, 2}))
    assert shape(lat) == [
        ([], [1, 2, 3], 0),
        ([], [1, 2], 1),
        ([3], [1], 2),
        ([2, 3], [], 3),
        ([1, 2, 3], [], 4),
    ]


def test_symplectic_lattice_sizes():
    assert len(symplectic_lattice(2).entries) == 4
    lat3 = symplectic_lattice(3)
    assert len(lat3.entries) == 5
    stars = [e.lambda_star for e in lat3.entries if not lat3.is_zero(e)]
    # chain: each lambda* contains the previous one
    for small, large in zip(stars, stars[1:]):
        assert small < large


@pytest.mark.parametrize("l", range(2, 7))
def test_symplectic_listing_verbatim(l):
    lat = symplectic_lattice(l)
    assert len(lat.entries) == l + 2
    expected = [([], list(range(1, l + 1)), 0)]  # zero
    expected.append(([], list(range(1, l)), 1))  # minimal nonzero, lambda* empty
    for r in range(1, l + 1):
        star = list(range(l - r + 1, l + 1))
        substar = list(range(1, l - r)) if r <= l - 2 else []
        expected.append((star, substar, r + 1))
    assert shape(lat) == expected


def test_symplectic_identity_entry():
    for l in (2, 4):
        lat = symplectic_lattice(l)
        ident = lat.identity_entry
        assert ident.lambda_substar == frozenset()
        assert ident.torus_index_exponent == l + 1
        assert lat.zero_entry.torus_index_exponent == 0


def test_generated_entries_respect_support_rule():
    cases = [
        ("B3", frozenset({2})),
        ("A4", frozenset({2, 3})),
        ("D4", frozenset({1, 3, 4})),
    ]
    for spec, j0 in cases:
        rs = build(CartanType.parse(spec))
        lat = j_irreducible_lattice(rs, j0)
        assert lat.provenance == RULE_DERIVED
        for e in lat.entries:
            if lat.is_zero(e):
                continue
            assert e.lambda_substar <= j0
            for comp, _ in connected_components(rs, e.lambda_star):
                assert not comp <= j0
            assert e.torus_index_exponent == len(e.lambda_star) + 1


def test_invalid_support():
    rs = build(CartanType("A", 2))
    with pytest.raises(InvalidSupport):
        j_irreducible_lattice(rs, frozenset({1, 2}))


def test_load_lattice_round_trip():
    lat = symplectic_lattice(2)
    raw = lat.to_json()
    loaded = load_lattice(lat.root_system, raw)
    assert loaded.entries == lat.entries
    assert loaded.torus_rank == lat.torus_rank
    assert loaded.provenance == USER_SUPPLIED


def test_load_lattice_rejects_overlap():
    rs = build(CartanType("A", 2))
    raw = {
        "type": "A2",
        "entries": [
            {"label": "0", "lambda_star": [], "lambda_substar": [1, 2], "torus_index_exponent": 0},
            {"label": "x", "lambda_star": [1], "lambda_substar": [1], "torus_index_exponent": 2},
            {"label": "1", "lambda_star": [1, 2], "lambda_substar": [], "torus_index_exponent": 3},
        ],
    }
    with pytest.raises(InvariantViolation, match="disjoint"):
        load_lattice(rs, raw)


def test_load_lattice_rejects_adjacency():
    rs = build(CartanType("A", 3))
    raw = {
        "type": "A3",
        "entries": [
            {"label": "0", "lambda_star": [], "lambda_substar": [1, 2, 3], "torus_index_exponent": 0},
            {"label": "x", "lambda_star": [1], "lambda_substar": [2], "torus_index_exponent": 2},
            {"label": "1", "lambda_star": [1, 2, 3], "lambda_substar": [], "torus_index_exponent": 4},
        ],
    }
    with pytest.raises(InvariantViolation, match="adjacent"):
        load_lattice(rs, raw)


def test_load_lattice_requires_zero_and_identity():
    rs = build(CartanType("A", 1))
    with pytest.raises(InvariantViolation, match="zero"):
        load_lattice(
            rs,
            {
                "entries": [
                    {"label": "1", "lambda_star": [1], "lambda_substar": [], "torus_index_exponent": 2}
                ]
            },
        )
    with pytest.raises(InvariantViolation, match="identity"):
        load_lattice(
            rs,
            {
                "entries": [
                    {"label": "0", "lambda_star": [], "lambda_substar": [1], "torus_index_exponent": 0}
                ]
            },
        )


def test_load_lattice_type_mismatch_and_bad_entries():
    rs = build(CartanType("A", 2))
    with pytest.raises(InvariantViolation, match="type"):
        load_lattice(rs, {"type": "C3", "entries": [{}]})
    with pytest.raises(InvariantViolation, match="malformed"):
        load_lattice(rs, {"type": "A2", "entries": [{"lambda_star": [1]}]})
    with pytest.raises(InvariantViolation, match="entries"):
        load_lattice(rs, {"type": "A2", "entries": []})


def test_validate_rejects_exponent_above_torus_rank():
    rs = build(CartanType("A", 1))
    entries = (
        LatticeEntry("0", frozenset(), frozenset({1}), 0),
        LatticeEntry("1", frozenset({1}), frozenset(), 5),
    )
    lat = CrossSectionLattice(rs, entries, torus_rank=2)
    with pytest.raises(InvariantViolation, match="torus rank"):
        validate(lat)


def test_validate_rejects_duplicate_labels():
    rs = build(CartanType("A", 1))
    entries = (
        LatticeEntry("e", frozenset(), frozenset({1}), 0),
        LatticeEntry("e", frozenset({1}), frozenset(), 2),
    )
    with pytest.raises(InvariantViolation, match="duplicate"):
        validate(CrossSectionLattice(rs, entries, torus_rank=2))


def test_is_j_irreducible_flag():
    lat = symplectic_lattice(2)
    assert is_j_irreducible(lat)
    tweaked = CrossSectionLattice(
        lat.root_system,
        tuple(
            LatticeEntry(e.label, e.lambda_star, e.lambda_substar, e.torus_index_exponent + (1 if lat.is_identity(e) else 0))
            for e in lat.entries
        ),
        torus_rank=lat.torus_rank + 1,
    )
    assert not is_j_irreducible(tweaked)
