"""Cross-section lattices and their type maps.

A lattice entry records, for one idempotent orbit representative e, the two
halves of its type map: lambda_star (simple roots whose reflections commute
with e without fixing it) and lambda_substar (those whose reflections fix e),
plus the exponent k with [T:T(e)] = (q-1)^k.  Lattices are built three ways:
from a weight-support set J0 (the unique-minimal-idempotent rule), the
symplectic special case, or a validated external description.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import InvalidSupport, InvariantViolation, UnsupportedType
from .rootsystem import CartanType, RootSystemData, build, connected_components

PAPER_VERIFIED = "paper-verified"
RULE_DERIVED = "rule-derived, not paper-verified"
USER_SUPPLIED = "user-supplied"


@dataclass(frozen=True)
class LatticeEntry:
    label: str
    lambda_star: frozenset[int]
    lambda_substar: frozenset[int]
    torus_index_exponent: int

    @property
    def lambda_union(self) -> frozenset[int]:
        return self.lambda_star | self.lambda_substar

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "lambda_star": sorted(self.lambda_star),
            "lambda_substar": sorted(self.lambda_substar),
            "torus_index_exponent": self.torus_index_exponent,
        }


@dataclass(frozen=True)
class CrossSectionLattice:
    root_system: RootSystemData
    entries: tuple[LatticeEntry, ...]
    torus_rank: int
    provenance: str = USER_SUPPLIED

    @property
    def rank(self) -> int:
        return self.root_system.rank

    @property
    def all_simple(self) -> frozenset[int]:
        return frozenset(range(1, self.rank + 1))

    def is_zero(self, entry: LatticeEntry) -> bool:
        return (
            not entry.lambda_star
            and entry.lambda_substar == self.all_simple
            and entry.torus_index_exponent == 0
        )

    def is_identity(self, entry: LatticeEntry) -> bool:
        return entry.lambda_star == self.all_simple and not entry.lambda_substar

    @property
    def zero_entry(self) -> LatticeEntry:
        return next(e for e in self.entries if self.is_zero(e))

    @property
    def identity_entry(self) -> LatticeEntry:
        return next(e for e in self.entries if self.is_identity(e))

    def to_json(self) -> dict:
        return {
            "type": str(self.root_system.cartan_type),
            "torus_rank": self.torus_rank,
            "provenance": self.provenance,
            "entries": [e.to_json() for e in self.entries],
        }


def validate(lat: CrossSectionLattice) -> CrossSectionLattice:
    """Check every structural invariant, raising InvariantViolation."""
    rs = lat.root_system
    delta = lat.all_simple

    def fail(entry: LatticeEntry | None, rule: str):
        where = f"entry {entry.label!r}: " if entry is not None else ""
        raise InvariantViolation(where + rule)

    labels = [e.label for e in lat.entries]
    if len(set(labels)) != len(labels):
        fail(None, "duplicate entry labels")
    zero_count = identity_count = 0
    for e in lat.entries:
        if not e.lambda_union <= delta:
            fail(e, f"simple-root indices outside 1..{lat.rank}")
        if e.lambda_star & e.lambda_substar:
            fail(e, "lambda_star and lambda_substar must be disjoint")
        for a in e.lambda_substar:
            if rs.neighbors(a) & e.lambda_star:
                fail(e, f"root {a} in lambda_substar is adjacent to lambda_star")
        if e.torus_index_exponent < 0:
            fail(e, "torus_index_exponent must be nonnegative")
        if e.torus_index_exponent > lat.torus_rank:
            fail(e, "torus_index_exponent exceeds the torus rank")
        if not e.lambda_star and e.lambda_substar == delta:
            if e.torus_index_exponent != 0:
                fail(e, "zero entry must have torus_index_exponent 0")
            zero_count += 1
        if lat.is_identity(e):
            identity_count += 1
    if zero_count != 1:
        fail(None, f"expected exactly one zero entry, found {zero_count}")
    if identity_count != 1:
        fail(None, f"expected exactly one identity entry, found {identity_count}")
    return lat


def _entry_label(X: frozenset[int], delta: frozenset[int]) -> str:
    if X == delta:
        return "1"
    return "e{" + ",".join(str(i) for i in sorted(X)) + "}"


def j_irreducible_lattice(
    rs: RootSystemData, J0: frozenset[int]
) -> CrossSectionLattice:
    """Cross-section lattice of the monoid with weight-support set J0.

    J0 is the set of simple roots annihilating the dominant weight.  One
    entry appears per subset X of the simple roots having no connected
    component inside J0; X is its lambda_star, the part of J0 neither in X
    nor adjacent to X is its lambda_substar, and [T:T(e)] = (q-1)^(|X|+1).
    """
    delta = frozenset(range(1, rs.rank + 1))
    if not J0 <= delta:
        raise UnsupportedType(f"J0 {sorted(J0)} outside 1..{rs.rank}")
    if J0 == delta:
        raise InvalidSupport("J0 = Delta admits no nonzero minimal idempotent")

    entries = [LatticeEntry("0", frozenset(), delta, 0)]
    for size in range(rs.rank + 1):
        for combo in itertools.combinations(sorted(delta), size):
            X = frozenset(combo)
            if any(comp <= J0 for comp, _ in connected_components(rs, X)):
                continue
            adjacent_to_X = frozenset().union(*(rs.neighbors(i) for i in X)) if X else frozenset()
            substar = frozenset(a for a in J0 - X if a not in adjacent_to_X)
            entries.append(
                LatticeEntry(_entry_label(X, delta), X, substar, len(X) + 1)
            )

    fam = rs.cartan_type.family
    last = frozenset({rs.rank})
    first = frozenset({1})
    if (fam == "C" and J0 == delta - last) or (fam == "A" and J0 == delta - first):
        provenance = PAPER_VERIFIED
    else:
        provenance = RULE_DERIVED
    lat = CrossSectionLattice(
        rs, tuple(entries), torus_rank=rs.rank + 1, provenance=provenance
    )
    return validate(lat)


def symplectic_lattice(l: int) -> CrossSectionLattice:
    """Lattice of the symplectic monoid on a 2l-dimensional space, l >= 2.

    Equals the weight-support lattice of type C_l with J0 = {alpha_1 ..
    alpha_(l-1)}: the zero, then a chain of l+1 entries whose lambda_star
    values are the suffixes of the simple-root string ending at alpha_l.
    """
    if l < 2:
        raise ValueError("symplectic lattice needs l >= 2")
    rs = build(CartanType("C", l))
    return j_irreducible_lattice(rs, frozenset(range(1, l)))


def load_lattice(rs: RootSystemData, raw: dict) -> CrossSectionLattice:
    """Validate an external lattice description against a root system.

    Expected shape: {"type": "C3", "entries": [{"label": ..., "lambda_star":
    [3], "lambda_substar": [1], "torus_index_exponent": 2}, ...]} with
    1-based simple-root indices and an optional "torus_rank" (defaults to
    rank + 1).
    """
    if not isinstance(raw, dict):
        raise InvariantViolation("lattice description must be a JSON object")
    declared = raw.get("type")
    if declared is not None:
        if CartanType.parse(str(declared)) != rs.cartan_type:
            raise InvariantViolation(
                f"lattice type {declared!r} does not match {rs.cartan_type}"
            )
    entries_raw = raw.get("entries")
    if not isinstance(entries_raw, list) or not entries_raw:
        raise InvariantViolation("lattice description needs a nonempty 'entries' list")
    entries = []
    for i, item in enumerate(entries_raw):
        if not isinstance(item, dict):
            raise InvariantViolation(f"entry #{i} is not an object")
        try:
            star = frozenset(int(x) for x in item["lambda_star"])
            substar = frozenset(int(x) for x in item["lambda_substar"])
            exponent = int(item["torus_index_exponent"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InvariantViolation(f"entry #{i} is malformed: {exc}") from None
        label = str(item.get("label", f"e#{i}"))
        entries.append(LatticeEntry(label, star, substar, exponent))
    torus_rank = int(raw.get("torus_rank", rs.rank + 1))
    lat = CrossSectionLattice(
        rs, tuple(entries), torus_rank=torus_rank, provenance=USER_SUPPLIED
    )
    return validate(lat)


def is_j_irreducible(lat: CrossSectionLattice) -> bool:
    """True when every nonzero entry has exponent |lambda_star| + 1."""
    return all(
        lat.is_zero(e) or e.torus_index_exponent == len(e.lambda_star) + 1
        for e in lat.entries
    )
