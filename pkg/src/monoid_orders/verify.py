"""Cross-check suite behind the `verify` CLI subcommand.

Each check pits a formula against an independent oracle (brute-force
enumeration, exhaustive identity testing, or a second formula route) and
returns a pass/fail result with a short detail line.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import oracle
from .crosssection import CrossSectionLattice, j_irreducible_lattice, symplectic_lattice
from .orders import (
    gl_strata,
    h_polynomial,
    order_thm31,
    order_thm33,
    order_thm34,
    order_thm41,
    symplectic_order,
)
from .qpoly import (
    ONE,
    Q_MINUS_ONE,
    QPolynomial,
    eval_big,
    gaussian_binomial,
    is_palindromic,
    q_power_minus_one,
)
from .rootsystem import CartanType, build, degrees, poincare_product
from .weyl import coset_length_poly, generate, length_gen_poly, parabolic

# Frozen coefficient lists for the symplectic H-polynomials at l=2 and l=3.
H_COEFFS_L2 = (1, 1, 1, 2, 2, 2, 2, 2, 1, 1, 1)
H_COEFFS_L3 = (1, 1, 1, 2, 2, 3, 4, 4, 4, 5, 5, 5, 5, 4, 4, 4, 3, 2, 2, 1, 1, 1)

SOLOMON_TYPES = ("A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "D4", "G2")
COSET_TYPES = ("A3", "B3", "C3")

# (type, J0 rule) pairs for the four-formula agreement check.
AGREEMENT_CASES = (
    ("A1", "first"),
    ("A2", "first"),
    ("A3", "first"),
    ("C2", "last"),
    ("C3", "last"),
    ("C4", "last"),
)


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str


def lattice_for(type_spec: str, weight: str) -> CrossSectionLattice:
    """Weight-support lattice for a type and a fundamental-weight rule."""
    rs = build(CartanType.parse(type_spec))
    delta = frozenset(range(1, rs.rank + 1))
    omitted = 1 if weight == "first" else rs.rank
    return j_irreducible_lattice(rs, delta - {omitted})


def check_pascal_recurrence() -> CheckResult:
    cases = 0
    for base_power in (1, 2):
        for n in range(1, 9):
            for r in range(1, n):
                lhs = gaussian_binomial(n, r, base_power)
                rhs = QPolynomial.monomial(base_power * r) * gaussian_binomial(
                    n - 1, r, base_power
                ) + gaussian_binomial(n - 1, r - 1, base_power)
                if lhs != rhs:
                    return CheckResult(
                        "pascal-recurrence", False, f"fails at n={n}, r={r}"
                    )
                cases += 1
    return CheckResult("pascal-recurrence", True, f"{cases} instances")


def check_solomon() -> CheckResult:
    for spec in SOLOMON_TYPES:
        ct = CartanType.parse(spec)
        enumerated = length_gen_poly(generate(build(ct)))
        if enumerated != poincare_product(ct):
            return CheckResult("solomon-poincare", False, f"mismatch for {spec}")
    return CheckResult("solomon-poincare", True, ", ".join(SOLOMON_TYPES))


def check_coset_identity() -> CheckResult:
    cases = 0
    for spec in COSET_TYPES:
        ct = CartanType.parse(spec)
        group = generate(build(ct))
        w_poly = length_gen_poly(group)
        for mask in range(2**ct.rank):
            J = frozenset(i + 1 for i in range(ct.rank) if mask >> i & 1)
            product = coset_length_poly(group, J) * length_gen_poly(
                parabolic(group, J)
            )
            if product != w_poly:
                return CheckResult(
                    "coset-identity", False, f"{spec}, J={sorted(J)}"
                )
            cases += 1
    return CheckResult("coset-identity", True, f"{cases} parabolic quotients")


def check_rank_histograms(bound: int | None = None) -> CheckResult:
    for n, p in ((2, 2), (2, 3), (3, 2), (3, 3)):
        hist = oracle.enumerate_rank_histogram(n, p, bound)
        if hist.total != p ** (n * n):
            return CheckResult(
                "rank-histogram", False, f"(n={n}, p={p}) total {hist.total}"
            )
        for r in range(n + 1):
            expected = eval_big(gl_strata(n, r), p)
            if hist.counts[r] != expected:
                return CheckResult(
                    "rank-histogram",
                    False,
                    f"(n={n}, p={p}, r={r}) counted {hist.counts[r]}, formula {expected}",
                )
    return CheckResult("rank-histogram", True, "(2,2) (2,3) (3,2) (3,3)")


def check_subspace_counts(bound: int | None = None) -> CheckResult:
    for p in (2, 3):
        for n in range(5):
            for r in range(n + 1):
                counted = oracle.count_subspaces(n, r, p, bound)
                expected = eval_big(gaussian_binomial(n, r), p)
                if counted != expected:
                    return CheckResult(
                        "subspace-count",
                        False,
                        f"(n={n}, r={r}, p={p}) counted {counted}, formula {expected}",
                    )
    return CheckResult("subspace-count", True, "n <= 4, p in {2, 3}")


def check_formula_agreement(enum_bound: int | None = None) -> CheckResult:
    for spec, weight in AGREEMENT_CASES:
        lat = lattice_for(spec, weight)
        totals = {
            "thm31": order_thm31(lat, enum_bound=enum_bound).total,
            "thm33": order_thm33(lat, enum_bound=enum_bound).total,
            "thm34": order_thm34(lat).total,
            "thm41": order_thm41(lat).total,
        }
        if len(set(totals.values())) != 1:
            return CheckResult(
                "formula-agreement", False, f"{spec} ({weight}-fundamental)"
            )
    return CheckResult(
        "formula-agreement",
        True,
        ", ".join(f"{s}/{w}" for s, w in AGREEMENT_CASES),
    )


def check_symplectic_closed_form() -> CheckResult:
    for l in range(2, 7):
        closed = symplectic_order(l)
        lattice_route = order_thm41(symplectic_lattice(l))
        if closed.total != lattice_route.total:
            return CheckResult("symplectic-closed-form", False, f"l={l}")
        strata_sum = QPolynomial()
        for _, term in closed.terms:
            strata_sum = strata_sum + term
        if strata_sum != closed.total:
            return CheckResult(
                "symplectic-closed-form", False, f"strata do not sum, l={l}"
            )
    return CheckResult("symplectic-closed-form", True, "l = 2..6")


def check_h_polynomials() -> CheckResult:
    for l, expected in ((2, H_COEFFS_L2), (3, H_COEFFS_L3)):
        h = h_polynomial(symplectic_order(l).total)
        if h.coeffs != expected:
            return CheckResult("h-polynomial", False, f"coefficients differ at l={l}")
    for l in range(2, 7):
        if not is_palindromic(h_polynomial(symplectic_order(l).total)):
            return CheckResult("h-polynomial", False, f"not palindromic at l={l}")
    return CheckResult("h-polynomial", True, "l=2,3 coefficients; palindromic l=2..6")


def check_structural() -> CheckResult:
    for spec, weight in AGREEMENT_CASES:
        lat = lattice_for(spec, weight)
        report = order_thm34(lat)
        terms = dict(report.terms)
        rs = lat.root_system
        if terms[lat.zero_entry.label] != ONE:
            return CheckResult("structural", False, f"{spec}: zero term != 1")
        unit_order = QPolynomial.monomial(rs.num_positive) * Q_MINUS_ONE
        for d in degrees(rs.cartan_type):
            unit_order = unit_order * q_power_minus_one(d)
        if terms[lat.identity_entry.label] != unit_order:
            return CheckResult("structural", False, f"{spec}: identity term != |G|")
        h_polynomial(report.total)  # raises NonExactDivision if not divisible
    return CheckResult("structural", True, "zero/identity terms, (total-1)/(q-1)")


def check_gl_strata_sum() -> CheckResult:
    for n in range(1, 7):
        total = QPolynomial()
        for r in range(n + 1):
            total = total + gl_strata(n, r)
        if total != QPolynomial.monomial(n * n):
            return CheckResult("gl-strata-sum", False, f"n={n}")
    return CheckResult("gl-strata-sum", True, "n = 1..6")


_BOUNDED_CHECKS = frozenset(
    {"check_formula_agreement", "check_rank_histograms", "check_subspace_counts"}
)

ALL_CHECKS: tuple[Callable[..., CheckResult], ...] = (
    check_pascal_recurrence,
    check_solomon,
    check_coset_identity,
    check_rank_histograms,
    check_subspace_counts,
    check_formula_agreement,
    check_symplectic_closed_form,
    check_h_polynomials,
    check_structural,
    check_gl_strata_sum,
)


def run_all(enum_bound: int | None = None) -> list[CheckResult]:
    """Run every check; a crash inside a check is reported as its failure."""
    results = []
    for check in ALL_CHECKS:
        name = check.__name__.removeprefix("check_").replace("_", "-")
        try:
            if check.__name__ in _BOUNDED_CHECKS:
                results.append(check(enum_bound))
            else:
                results.append(check())
        except Exception as exc:  # a crashed check is a failed check
            results.append(CheckResult(name, False, f"{type(exc).__name__}: {exc}"))
    return results
