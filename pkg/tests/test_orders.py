"""The four order formulas, closed forms, strata, and H-polynomials."""

import pytest

from monoid_orders.crosssection import (
    CrossSectionLattice,
    LatticeEntry,
    j_irreducible_lattice,
    symplectic_lattice,
)
from monoid_orders.errors import (
    IndexOutOfRange,
    InvariantViolation,
    NonExactDivision,
    NotJIrreducible,
)
from monoid_orders.oracle import enumerate_rank_histogram
from monoid_orders.orders import (
    OrderReport,
    gl_strata,
    group_sizes,
    h_polynomial,
    isotropy_size,
    order_thm31,
    order_thm33,
    order_thm34,
    order_thm41,
    symplectic_h_polynomial,
    symplectic_order,
    symplectic_stratum,
)
from monoid_orders.qpoly import (
    ONE,
    Q_MINUS_ONE,
    QPolynomial,
    div_exact,
    eval_big,
    q_power_minus_one,
)
from monoid_orders.rootsystem import CartanType, build, degrees
from monoid_orders.weyl import generate

H_COEFFS_L2 = (1, 1, 1, 2, 2, 2, 2, 2, 1, 1, 1)
H_COEFFS_L3 = (1, 1, 1, 2, 2, 3, 4, 4, 4, 5, 5, 5, 5, 4, 4, 4, 3, 2, 2, 1, 1, 1)


def weight_lattice(spec, weight):
    rs = build(CartanType.parse(spec))
    delta = frozenset(range(1, rs.rank + 1))
    omitted = 1 if weight == "first" else rs.rank
    return j_irreducible_lattice(rs, delta - {omitted})


AGREEMENT_LATTICES = [
    weight_lattice("A1", "first"),
    weight_lattice("A2", "first"),
    weight_lattice("A3", "first"),
    weight_lattice("C2", "last"),
    weight_lattice("C3", "last"),
    weight_lattice("C4", "last"),
]


def unit_group_order(lat):
    """|G| = q^N (q-1) prod(q^d - 1) for a weight-support lattice."""
    rs = lat.root_system
    total = QPolynomial.monomial(rs.num_positive) * Q_MINUS_ONE
    for d in degrees(rs.cartan_type):
        total = total * q_power_minus_one(d)
    return total


def test_matrix_monoid_rank1_total():
    lat = weight_lattice("A1", "first")
    report = order_thm41(lat)
    terms = dict(report.terms)
    assert terms["0"] == ONE
    assert terms["e{}"] == Q_MINUS_ONE * QPolynomial([1, 1]) ** 2
    assert terms["1"] == unit_group_order(lat)
    assert report.total == QPolynomial.monomial(4)


def test_matrix_monoid_terms_match_rank_enumeration():
    # per-entry orbit sizes equal brute-force rank counts over small fields
    for n, p in ((2, 2), (2, 3), (3, 2)):
        lat = weight_lattice(f"A{n - 1}", "first")
        report = order_thm31(lat)
        hist = enumerate_rank_histogram(n, p)
        # entries are ordered zero, then by growing lambda*: rank 0, 1, ..., n
        for r, (_, term) in enumerate(report.terms):
            assert eval_big(term, p) == hist.counts[r]


def test_a2_total_is_q_to_nine():
    assert order_thm34(weight_lattice("A2", "first")).total == QPolynomial.monomial(9)


@pytest.mark.parametrize("lat", AGREEMENT_LATTICES, ids=lambda l: str(l.root_system.cartan_type))
def test_four_formulas_agree(lat):
    r31 = order_thm31(lat)
    r33 = order_thm33(lat)
    r34 = order_thm34(lat)
    r41 = order_thm41(lat)
    assert r31.total == r33.total == r34.total == r41.total
    # per-entry terms agree too, not just the totals
    assert r31.terms == r33.terms == r34.terms == r41.terms


@pytest.mark.parametrize("lat", AGREEMENT_LATTICES, ids=lambda l: str(l.root_system.cartan_type))
def test_zero_and_identity_terms(lat):
    report = order_thm34(lat)
    terms = dict(report.terms)
    assert terms[lat.zero_entry.label] == ONE
    assert terms[lat.identity_entry.label] == unit_group_order(lat)
    h_polynomial(report.total)  # (total - 1) divisible by (q - 1)


def test_symplectic_l2_at_q2():
    lat = symplectic_lattice(2)
    for fn in (order_thm31, order_thm33, order_thm34, order_thm41):
        assert eval_big(fn(lat).total, 2) == 2296


def test_group_sizes_invariants():
    lat = symplectic_lattice(3)
    group = generate(lat.root_system)
    for entry in lat.entries:
        sizes = group_sizes(lat, entry, group)
        assert sizes.size_P == sizes.size_L * sizes.size_U
        div_exact(sizes.size_L, sizes.size_K)  # K divides L exactly


def test_isotropy_identity_and_zero():
    lat = weight_lattice("A1", "first")
    group = generate(lat.root_system)
    ident = group_sizes(lat, lat.identity_entry, group)
    assert isotropy_size(ident) == ident.size_G
    zero = group_sizes(lat, lat.zero_entry, group)
    assert isotropy_size(zero) == zero.size_G * zero.size_G


def test_middle_orbit_size_of_2x2_matrices():
    # orbit of the rank-1 idempotent: |G|^2 / isotropy = 9 at q=2
    lat = weight_lattice("A1", "first")
    group = generate(lat.root_system)
    middle = next(
        e for e in lat.entries if not lat.is_zero(e) and not lat.is_identity(e)
    )
    sizes = group_sizes(lat, middle, group)
    orbit = div_exact(sizes.size_G * sizes.size_G, isotropy_size(sizes))
    assert eval_big(orbit, 2) == 9


def test_thm41_requires_weight_support_exponents():
    lat = symplectic_lattice(2)
    tweaked = CrossSectionLattice(
        lat.root_system,
        tuple(
            LatticeEntry(
                e.label,
                e.lambda_star,
                e.lambda_substar,
                e.torus_index_exponent + (0 if lat.is_zero(e) else 1),
            )
            for e in lat.entries
        ),
        torus_rank=lat.torus_rank + 1,
    )
    with pytest.raises(NotJIrreducible):
        order_thm41(tweaked)
    # the general formulas still run on it
    order_thm34(tweaked)


@pytest.mark.parametrize("l", range(2, 7))
def test_symplectic_closed_form_matches_lattice_route(l):
    assert symplectic_order(l).total == order_thm41(symplectic_lattice(l)).total


@pytest.mark.parametrize("l", range(2, 7))
def test_symplectic_strata_partition(l):
    report = symplectic_order(l)
    total = QPolynomial()
    for _, term in report.terms:
        total = total + term
    assert total == report.total
    # top stratum is the unit group of the symplectic monoid
    top = dict(report.terms)[f"M^{l + 1}"]
    lattice_terms = dict(order_thm41(symplectic_lattice(l)).terms)
    assert top == lattice_terms["1"]


def test_symplectic_stratum_range():
    with pytest.raises(IndexOutOfRange):
        symplectic_stratum(3, 5)
    assert symplectic_stratum(3, 0) == ONE


def test_symplectic_rejects_small_l():
    with pytest.raises(ValueError):
        symplectic_order(1)
    with pytest.raises(ValueError):
        symplectic_h_polynomial(0)


def test_gl_strata_values():
    assert gl_strata(2, 0) == ONE
    assert eval_big(gl_strata(2, 1), 2) == 9
    assert eval_big(gl_strata(2, 2), 2) == 6
    with pytest.raises(IndexOutOfRange):
        gl_strata(2, 3)


@pytest.mark.parametrize("n", range(1, 7))
def test_gl_strata_sum(n):
    total = QPolynomial()
    for r in range(n + 1):
        total = total + gl_strata(n, r)
    assert total == QPolynomial.monomial(n * n)


def test_h_polynomial_examples():
    assert h_polynomial(QPolynomial.monomial(4)) == QPolynomial([1, 1, 1, 1])
    assert h_polynomial(symplectic_order(2).total).coeffs == H_COEFFS_L2
    assert h_polynomial(symplectic_order(3).total).coeffs == H_COEFFS_L3


def test_h_polynomial_rejects_non_split_totals():
    with pytest.raises(NonExactDivision):
        h_polynomial(QPolynomial([0, 1, 0, 0, 1]))  # (total-1)(1) = 1 != 0


def test_report_evaluate_and_json():
    # 183681 = 1 + 2 * H(3) with the frozen l=2 coefficient list
    assert 1 + 2 * sum(c * 3**i for i, c in enumerate(H_COEFFS_L2)) == 183681
    report = order_thm34(symplectic_lattice(2)).evaluate([2, 3])
    assert report.evaluations == {2: 2296, 3: 183681}
    payload = report.to_json()
    assert payload["formula"] == "thm34"
    assert payload["type"] == "C2"
    assert payload["evaluations"] == {"2": "2296", "3": "183681"}
    assert payload["total_coeffs"] == report.total.to_json()
    assert payload["lattice"]["entries"][0]["label"] == "0"
    assert [t["label"] for t in payload["terms"]] == ["0", "e{}", "e{2}", "1"]


def test_report_evaluate_rejects_nonpositive_terms():
    report = OrderReport(
        formula="thm34",
        cartan_type=CartanType("A", 1),
        terms=(("bad", QPolynomial([-5])),),
        total=QPolynomial([-5]),
    )
    with pytest.raises(InvariantViolation):
        report.evaluate([2])


def test_every_term_positive_at_small_prime_powers():
    for lat in AGREEMENT_LATTICES:
        report = order_thm34(lat)
        for q0 in (2, 3, 4, 5):
            for _, term in report.terms:
                assert eval_big(term, q0) > 0
