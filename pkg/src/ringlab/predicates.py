"""Witness-producing decision procedures for the regularity properties.

Every "there exists n" search runs n from 1 through the preperiod+period
of the element's power sequence: beyond that bound the power values
repeat, so absence within the bound is absence everywhere. Witness scans
are ascending, so outcomes are deterministic and minimal.

The headline predicate, strong pi-star-regularity, is decided four ways
that are provably equivalent; the wrapper insists they agree and treats
disagreement as an implementation defect (EquivalenceBreach), never as a
ring property.
"""

from __future__ import annotations

import json
from array import array
from dataclasses import dataclass, field
from typing import Optional

from . import kernels
from .core import (
    FiniteRing,
    idempotents,
    is_abelian_ring,
    is_commutative,
    jacobson_radical,
    nilpotents,
    power_profile,
    principal_left_image,
    units,
)
from .errors import EquivalenceBreach
from .star import (
    StarRing,
    idempotents_are_projections,
    induced_quotient_star,
    is_star_abelian,
    projections,
)


@dataclass(frozen=True)
class PredicateOutcome:
    """Boolean plus evidence.

    When the predicate holds, ``rows`` carries one witness tuple per
    element (shape documented per predicate). When it fails, ``failing``
    is the first element with no witness, or ``counterexample`` holds the
    pair that sank a universally quantified side condition.
    """

    holds: bool
    rows: tuple[tuple[int, ...], ...] = ()
    failing: Optional[int] = None
    counterexample: Optional[tuple[int, ...]] = None

    def __bool__(self) -> bool:
        return self.holds


def _bound(ring: FiniteRing, a: int) -> int:
    prof = power_profile(ring, a)
    return prof.preperiod + prof.period


def is_pi_regular(ring: FiniteRing) -> PredicateOutcome:
    """Every a satisfies a^n = a^n x a^n for some n, x. Rows: (a, n, x)."""
    mul = ring.mul_table
    rows = []
    for a in ring.elements():
        hit = None
        an = a
        for n in range(1, _bound(ring, a) + 1):
            arow = mul[an]
            for x in ring.elements():
                if mul[arow[x]][an] == an:
                    hit = (a, n, x)
                    break
            if hit:
                break
            an = mul[an][a]
        if hit is None:
            return PredicateOutcome(False, failing=a)
        rows.append(hit)
    return PredicateOutcome(True, tuple(rows))


def is_strongly_pi_regular(ring: FiniteRing) -> PredicateOutcome:
    """Every a satisfies a^n = a^(n+1) x and a^n = y a^(n+1). Rows: (a, n, x, y)."""
    mul = ring.mul_table
    rows = []
    for a in ring.elements():
        hit = None
        an = a
        for n in range(1, _bound(ring, a) + 1):
            an1 = mul[an][a]
            x = next((x for x in ring.elements() if mul[an1][x] == an), None)
            if x is not None:
                y = next((y for y in ring.elements() if mul[y][an1] == an), None)
                if y is not None:
                    hit = (a, n, x, y)
                    break
            an = an1
        if hit is None:
            return PredicateOutcome(False, failing=a)
        rows.append(hit)
    return PredicateOutcome(True, tuple(rows))


def projection_tests_star_abelian(s: StarRing) -> tuple[bool, bool, bool]:
    """Three equivalent tests for "every idempotent is a projection":
    (idempotent displacements e-e* all in the radical, ring star-abelian),
    (displacements all nilpotent, ring star-abelian), and the direct
    comparison. Computed independently; their agreement is itself a tested
    invariant of the suite."""
    ring = s.ring
    radical = jacobson_radical(ring).members
    nil = set(nilpotents(ring))
    star_ab = is_star_abelian(s)[0]
    disps = [ring.sub(e, s.star(e)) for e in idempotents(ring)]
    in_radical = all(d in radical for d in disps)
    in_nil = all(d in nil for d in disps)
    direct = idempotents_are_projections(s)[0]
    return (in_radical and star_ab, in_nil and star_ab, direct)


def projection_tests_commuting(s: StarRing) -> tuple[bool, bool, bool]:
    """Same three-way split with per-idempotent commuting e e* = e* e in
    place of star-abelianness."""
    ring = s.ring
    radical = jacobson_radical(ring).members
    nil = set(nilpotents(ring))
    ids = idempotents(ring)
    commuting = all(
        ring.mul(e, s.star(e)) == ring.mul(s.star(e), e) for e in ids
    )
    disps = [ring.sub(e, s.star(e)) for e in ids]
    in_radical = all(d in radical for d in disps)
    in_nil = all(d in nil for d in disps)
    direct = idempotents_are_projections(s)[0]
    return (in_radical and commuting, in_nil and commuting, direct)


def condition_decomposition(s: StarRing) -> PredicateOutcome:
    """Every a splits as a = b + pv = b + vp with b nilpotent commuting
    with a, p a projection, v a unit. Rows: (a, b, p, v).

    This exhaustive decomposition search is the lab's operational
    definition of strong pi-star-regularity.
    """
    ring = s.ring
    mul = ring.mul_table
    nil = nilpotents(ring)
    projs = array("i", projections(s))
    unit_list = array("i", sorted(units(ring)))
    n = ring.order
    rows = []
    for a in ring.elements():
        arow = mul[a]
        commuting = array("i", (b for b in nil if arow[b] == mul[b][a]))
        hit = kernels.decomposition_witness(
            n, ring.add_flat, ring.mul_flat, ring.neg_flat,
            a, commuting, projs, unit_list,
        )
        if hit is None:
            return PredicateOutcome(False, failing=a)
        rows.append((a,) + tuple(hit))
    return PredicateOutcome(True, tuple(rows))


def condition_projections(s: StarRing) -> bool:
    """Pi-regular and the four radical/nilpotent displacement tests hold.

    The four sub-tests are computed independently and must agree
    (EquivalenceBreach otherwise — that would be a bug, not a ring).
    """
    sa = projection_tests_star_abelian(s)
    cm = projection_tests_commuting(s)
    four = (sa[0], sa[1], cm[0], cm[1])
    if len(set(four)) != 1:
        raise EquivalenceBreach(
            f"projection sub-tests disagree on {s.label}: {four}",
            report={"ring": s.label, "subconditions": list(four)},
        )
    return bool(is_pi_regular(s.ring)) and four[0]


def condition_ideal_powers(s: StarRing) -> PredicateOutcome:
    """Star-abelian, and for every a some power m has
    R a^m = R a^m (a^m)* a^m. Rows: (a, m, s) with a^m = s * (a^m (a^m)* a^m)."""
    ring = s.ring
    star_ab, witness = is_star_abelian(s)
    if not star_ab:
        return PredicateOutcome(False, counterexample=witness)
    mul = ring.mul_table
    rows = []
    for a in ring.elements():
        hit = None
        am = a
        for m in range(1, _bound(ring, a) + 1):
            gen = mul[mul[am][s.star(am)]][am]
            if principal_left_image(ring, am) == principal_left_image(ring, gen):
                for t in ring.elements():
                    if mul[t][gen] == am:
                        hit = (a, m, t)
                        break
            if hit:
                break
            am = mul[am][a]
        if hit is None:
            return PredicateOutcome(False, failing=a)
        rows.append(hit)
    return PredicateOutcome(True, tuple(rows))


def condition_star_ideals(s: StarRing) -> PredicateOutcome:
    """For every a some n and idempotent e align the left ideals
    R a^n = R (a^n)* = R e. Rows: (a, n, e)."""
    ring = s.ring
    ids = idempotents(ring)
    ideal_of = {e: principal_left_image(ring, e) for e in ids}
    rows = []
    for a in ring.elements():
        hit = None
        an = a
        for n in range(1, _bound(ring, a) + 1):
            left = principal_left_image(ring, an)
            if principal_left_image(ring, s.star(an)) == left:
                for e in ids:
                    if ideal_of[e] == left:
                        hit = (a, n, e)
                        break
            if hit:
                break
            an = ring.mul(an, a)
        if hit is None:
            return PredicateOutcome(False, failing=a)
        rows.append(hit)
    return PredicateOutcome(True, tuple(rows))


def strongly_pi_star_regular_conditions(s: StarRing) -> tuple[bool, bool, bool, bool]:
    """The four independent characterizations, in fixed order:
    decomposition, projections, ideal powers, star ideals."""
    return (
        condition_decomposition(s).holds,
        condition_projections(s),
        condition_ideal_powers(s).holds,
        condition_star_ideals(s).holds,
    )


def is_strongly_pi_star_regular(s: StarRing) -> bool:
    """Common value of the four characterizations; EquivalenceBreach if
    they dare to disagree."""
    conds = strongly_pi_star_regular_conditions(s)
    if len(set(conds)) != 1:
        raise EquivalenceBreach(
            f"the four characterizations disagree on {s.label}: {conds}",
            report={"ring": s.label, "conditions": list(conds)},
        )
    return conds[0]


def is_strongly_star_clean(s: StarRing) -> PredicateOutcome:
    """Every a = e + u with e a projection, u a unit, eu = ue.
    Rows: (a, e, u)."""
    ring = s.ring
    mul = ring.mul_table
    unit_set = units(ring)
    rows = []
    for a in ring.elements():
        hit = None
        for e in projections(s):
            u = ring.sub(a, e)
            if u in unit_set and mul[e][u] == mul[u][e]:
                hit = (a, e, u)
                break
        if hit is None:
            return PredicateOutcome(False, failing=a)
        rows.append(hit)
    return PredicateOutcome(True, tuple(rows))


def radical_quotient_equivalence(s: StarRing) -> tuple[bool, bool]:
    """Strong pi-star-regularity of the ring versus the reduction:
    star-abelian, nil radical, and a strongly pi-star-regular radical
    quotient. Both sides are computed independently and must agree."""
    lhs = is_strongly_pi_star_regular(s)
    ring = s.ring
    radical = jacobson_radical(ring)
    nil = set(nilpotents(ring))
    rhs = is_star_abelian(s)[0] and radical.members <= nil
    if rhs:
        rhs = is_strongly_pi_star_regular(induced_quotient_star(s, radical))
    if lhs != rhs:
        raise EquivalenceBreach(
            f"radical-quotient reduction disagrees on {s.label}: "
            f"ring={lhs} reduction={rhs}",
            report={"ring": s.label, "lhs": lhs, "rhs": rhs},
        )
    return lhs, rhs


# --- consolidated report ----------------------------------------------------

_BOOL_FIELDS = (
    "commutative",
    "abelian",
    "star_abelian",
    "idempotents_are_projections",
    "pi_regular",
    "strongly_pi_regular",
    "condition_decomposition",
    "condition_projections",
    "condition_ideal_powers",
    "condition_star_ideals",
    "strongly_pi_star_regular",
    "strongly_star_clean",
    "j_nil",
)


@dataclass(frozen=True)
class PropertyReport:
    """Per-ring record of every predicate outcome plus its evidence.

    ``values`` holds the booleans keyed by the stable field names;
    ``details`` holds JSON-ready witness/counterexample payloads.
    """

    label: str
    involution: str
    order: int
    values: dict[str, bool]
    details: dict[str, object] = field(default_factory=dict)

    def __getattr__(self, name: str) -> bool:
        values = object.__getattribute__(self, "values")
        if name in values:
            return values[name]
        raise AttributeError(name)

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "involution": self.involution,
            "order": self.order,
            "values": {k: self.values[k] for k in _BOOL_FIELDS},
            "details": self.details,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_dict(cls, doc: dict) -> "PropertyReport":
        return cls(
            label=doc["label"],
            involution=doc["involution"],
            order=int(doc["order"]),
            values={k: bool(v) for k, v in doc["values"].items()},
            details=doc.get("details", {}),
        )


def _rows_payload(outcome: PredicateOutcome) -> dict:
    if outcome.holds:
        return {"rows": [list(r) for r in outcome.rows]}
    if outcome.failing is not None:
        return {"failing": outcome.failing}
    return {"counterexample": list(outcome.counterexample or ())}


def property_report(s: StarRing) -> PropertyReport:
    """Evaluate every predicate on one star ring; fails loudly (exception,
    not a report) if the four equivalent characterizations disagree."""
    ring = s.ring
    commutative, comm_w = is_commutative(ring)
    abelian, abelian_w = is_abelian_ring(ring)
    star_ab, star_ab_w = is_star_abelian(s)
    idem_proj, idem_w = idempotents_are_projections(s)
    pi_reg = is_pi_regular(ring)
    strong_pi = is_strongly_pi_regular(ring)
    decomposition = condition_decomposition(s)
    via_projections = condition_projections(s)
    ideal_powers = condition_ideal_powers(s)
    star_ideals = condition_star_ideals(s)
    conds = (
        decomposition.holds,
        via_projections,
        ideal_powers.holds,
        star_ideals.holds,
    )
    if len(set(conds)) != 1:
        raise EquivalenceBreach(
            f"the four characterizations disagree on {s.label}: {conds}",
            report={"ring": s.label, "conditions": list(conds)},
        )
    star_clean = is_strongly_star_clean(s)
    radical = jacobson_radical(ring)
    nil = set(nilpotents(ring))
    values = {
        "commutative": commutative,
        "abelian": abelian,
        "star_abelian": star_ab,
        "idempotents_are_projections": idem_proj,
        "pi_regular": pi_reg.holds,
        "strongly_pi_regular": strong_pi.holds,
        "condition_decomposition": conds[0],
        "condition_projections": conds[1],
        "condition_ideal_powers": conds[2],
        "condition_star_ideals": conds[3],
        "strongly_pi_star_regular": conds[0],
        "strongly_star_clean": star_clean.holds,
        "j_nil": radical.members <= nil,
    }
    details: dict[str, object] = {
        "commutative": None if commutative else list(comm_w or ()),
        "abelian": None if abelian else list(abelian_w or ()),
        "star_abelian": None if star_ab else list(star_ab_w or ()),
        "idempotents_are_projections": None if idem_proj else idem_w,
        "pi_regular": _rows_payload(pi_reg),
        "strongly_pi_regular": _rows_payload(strong_pi),
        "condition_decomposition": _rows_payload(decomposition),
        "condition_ideal_powers": _rows_payload(ideal_powers),
        "condition_star_ideals": _rows_payload(star_ideals),
        "strongly_star_clean": _rows_payload(star_clean),
        "jacobson_radical": sorted(radical.members),
        "projections": list(projections(s)),
        "idempotents": list(idempotents(ring)),
        "nilpotents": list(nilpotents(ring)),
    }
    return PropertyReport(
        label=s.ring.label,
        involution=s.inv.label,
        order=ring.order,
        values=values,
        details=details,
    )


# --- witness replay ----------------------------------------------------------


def _replay_pi_regular(s: StarRing, row) -> bool:
    ring = s.ring
    a, n, x = row
    an = ring.pow(a, n)
    return ring.mul(ring.mul(an, x), an) == an


def _replay_strongly_pi_regular(s: StarRing, row) -> bool:
    ring = s.ring
    a, n, x, y = row
    an = ring.pow(a, n)
    an1 = ring.pow(a, n + 1)
    return ring.mul(an1, x) == an and ring.mul(y, an1) == an


def _replay_decomposition(s: StarRing, row) -> bool:
    ring = s.ring
    a, b, p, v = row
    if b not in nilpotents(ring) or p not in projections(s):
        return False
    if v not in units(ring):
        return False
    if ring.mul(a, b) != ring.mul(b, a):
        return False
    pv = ring.mul(p, v)
    return pv == ring.mul(v, p) and ring.add(b, pv) == a


def _replay_ideal_powers(s: StarRing, row) -> bool:
    ring = s.ring
    a, m, solver = row
    am = ring.pow(a, m)
    gen = ring.mul(ring.mul(am, s.star(am)), am)
    if principal_left_image(ring, am) != principal_left_image(ring, gen):
        return False
    return ring.mul(solver, gen) == am


def _replay_star_ideals(s: StarRing, row) -> bool:
    ring = s.ring
    a, n, e = row
    if ring.mul(e, e) != e:
        return False
    an = ring.pow(a, n)
    left = principal_left_image(ring, an)
    return (
        principal_left_image(ring, s.star(an)) == left
        and principal_left_image(ring, e) == left
    )


def _replay_star_clean(s: StarRing, row) -> bool:
    ring = s.ring
    a, e, u = row
    if e not in projections(s) or u not in units(ring):
        return False
    return ring.add(e, u) == a and ring.mul(e, u) == ring.mul(u, e)


_REPLAYERS = {
    "pi_regular": _replay_pi_regular,
    "strongly_pi_regular": _replay_strongly_pi_regular,
    "condition_decomposition": _replay_decomposition,
    "condition_ideal_powers": _replay_ideal_powers,
    "condition_star_ideals": _replay_star_ideals,
    "strongly_star_clean": _replay_star_clean,
}


def replay_report(s: StarRing, report: PropertyReport) -> list[str]:
    """Mismatches between a stored report and recomputation, plus direct
    re-evaluation of every stored witness row; empty list means clean."""
    problems = []
    fresh = property_report(s)
    if fresh.to_dict() != report.to_dict():
        old, new = report.to_dict(), fresh.to_dict()
        for key in _BOOL_FIELDS:
            if old["values"].get(key) != new["values"][key]:
                problems.append(
                    f"boolean {key}: stored {old['values'].get(key)} "
                    f"recomputed {new['values'][key]}"
                )
        if not problems:
            problems.append("details differ from recomputation")
    for field_name, replayer in _REPLAYERS.items():
        payload = report.details.get(field_name)
        if not isinstance(payload, dict):
            continue
        for row in payload.get("rows", ()):
            if not replayer(s, tuple(row)):
                problems.append(f"witness row {row} for {field_name} fails replay")
    return problems
