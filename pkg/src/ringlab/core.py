"""Finite unital rings presented by exhaustively validated operation tables.

A ring of order n lives on the index set 0..n-1; all structure sits in
dense add/mul lookup tables. Everything here is exact and deterministic:
predicates scan whole tables, searches return the first witness in
ascending index order, and every constructed ring passes the full axiom
gate before it exists.
"""

from __future__ import annotations

import os
from array import array
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

from . import kernels
from .errors import (
    AxiomViolation,
    CapExceeded,
    ConsistencyError,
    IdentityEqualsZero,
    ImproperIdeal,
)

DEFAULT_ORDER_CAP = 128
ORACLE_ORDER_CAP = 64
INVOLUTION_ENUM_CAP = 16


def global_order_cap() -> int:
    """Ring-order ceiling for constructions; RINGLAB_CAP overrides."""
    raw = os.environ.get("RINGLAB_CAP", "").strip()
    if raw:
        return int(raw)
    return DEFAULT_ORDER_CAP


class FiniteRing:
    """A finite ring with 1 != 0 given by add/mul tables over element indices.

    Instances are immutable after construction and should only be created
    through :func:`build_ring` or the constructions module, both of which
    run the exhaustive axiom gate.
    """

    def __init__(
        self,
        order: int,
        add_table: tuple[tuple[int, ...], ...],
        mul_table: tuple[tuple[int, ...], ...],
        zero: int,
        one: int,
        label: str,
        expr: Optional[dict] = None,
    ):
        self.order = order
        self.add_table = add_table
        self.mul_table = mul_table
        self.zero = zero
        self.one = one
        self.label = label
        self.expr = expr

    def __repr__(self) -> str:
        return f"FiniteRing({self.label!r}, order={self.order})"

    def elements(self) -> range:
        return range(self.order)

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg_table[b]]

    def pow(self, a: int, n: int) -> int:
        """n-fold product of a, n >= 1."""
        if n < 1:
            raise ValueError(f"exponent must be >= 1, got {n}")
        acc = a
        row = self.mul_table
        for _ in range(n - 1):
            acc = row[acc][a]
        return acc

    @cached_property
    def neg_table(self) -> tuple[int, ...]:
        out = [0] * self.order
        for a in self.elements():
            row = self.add_table[a]
            for b in self.elements():
                if row[b] == self.zero:
                    out[a] = b
                    break
        return tuple(out)

    @cached_property
    def add_flat(self) -> array:
        return array("i", [v for row in self.add_table for v in row])

    @cached_property
    def mul_flat(self) -> array:
        return array("i", [v for row in self.mul_table for v in row])

    @cached_property
    def neg_flat(self) -> array:
        return array("i", self.neg_table)


@dataclass(frozen=True)
class PowerProfile:
    """Eventual-cycle shape of the power sequence a, a^2, a^3, ...

    The first repetition is a^(preperiod+1+period) = a^(preperiod+1); no
    smaller pair repeats. preperiod + period bounds every "exists n"
    exponent search: power values beyond the bound are rerun of values
    inside it.
    """

    base: int
    preperiod: int
    period: int

    @property
    def bound(self) -> int:
        return self.preperiod + self.period


@dataclass(frozen=True)
class LeftIdeal:
    """Subset closed under addition, negation and left multiplication."""

    members: frozenset[int]
    ring: FiniteRing


@dataclass(frozen=True)
class TwoSidedIdeal(LeftIdeal):
    """LeftIdeal that also absorbs right multiplication."""


def _as_rows(table, n: int, name: str) -> tuple[tuple[int, ...], ...]:
    rows = tuple(tuple(int(v) for v in row) for row in table)
    if len(rows) != n or any(len(row) != n for row in rows):
        raise ValueError(f"{name} table must be {n}x{n}")
    return rows


def build_ring(
    add_table,
    mul_table,
    zero: int,
    one: int,
    label: str = "tables",
    expr: Optional[dict] = None,
) -> FiniteRing:
    """Validate tables exhaustively and return the ring.

    Raises AxiomViolation (with the first failing witness in scan order)
    when any ring law fails, IdentityEqualsZero when one == zero, and
    ValueError for malformed shapes.
    """
    n = len(add_table)
    if n == 0:
        raise ValueError("empty table")
    add_rows = _as_rows(add_table, n, "add")
    mul_rows = _as_rows(mul_table, n, "mul")
    if not (0 <= zero < n and 0 <= one < n):
        raise ValueError("zero/one out of range")
    if zero == one:
        raise IdentityEqualsZero(f"one == zero == {one} in a ring of order {n}")
    add_flat = array("i", [v for row in add_rows for v in row])
    mul_flat = array("i", [v for row in mul_rows for v in row])
    hit = kernels.ring_axiom_witness(n, add_flat, mul_flat, zero, one)
    if hit is not None:
        axiom, padded = hit
        witness = tuple(v for v in padded if v != -1)
        raise AxiomViolation(axiom, witness)
    return FiniteRing(n, add_rows, mul_rows, zero, one, label, expr)


def _memo(ring: FiniteRing, key: str, compute):
    cached = ring.__dict__.get(key)
    if cached is None:
        cached = compute()
        ring.__dict__[key] = cached
    return cached


def units(ring: FiniteRing) -> dict[int, int]:
    """All invertible elements mapped to their (two-sided) inverses."""

    def compute() -> dict[int, int]:
        inv = kernels.inverse_table(ring.order, ring.mul_flat, ring.one)
        return {a: b for a, b in enumerate(inv) if b != -1}

    return _memo(ring, "_units", compute)


def unit_mask(ring: FiniteRing) -> bytearray:
    def compute() -> bytearray:
        mask = bytearray(ring.order)
        for a in units(ring):
            mask[a] = 1
        return mask

    return _memo(ring, "_unit_mask", compute)


def idempotents(ring: FiniteRing) -> tuple[int, ...]:
    """All e with e*e == e, ascending."""

    def compute() -> tuple[int, ...]:
        return tuple(e for e in ring.elements() if ring.mul(e, e) == e)

    return _memo(ring, "_idempotents", compute)


def power_profile(ring: FiniteRing, a: int) -> PowerProfile:
    """Minimal (preperiod, period) of the power sequence of a.

    At most order+1 exponents are examined (pigeonhole).
    """
    seen: dict[int, int] = {}
    x = a
    k = 1
    while x not in seen:
        seen[x] = k
        x = ring.mul(x, a)
        k += 1
    first = seen[x]
    return PowerProfile(base=a, preperiod=first - 1, period=k - first)


def nilpotents(ring: FiniteRing) -> tuple[int, ...]:
    """All a with a^k == 0 for some k (k <= order suffices), ascending."""

    def compute() -> tuple[int, ...]:
        out = []
        for a in ring.elements():
            prof = power_profile(ring, a)
            if prof.period == 1 and ring.pow(a, prof.preperiod + 1) == ring.zero:
                out.append(a)
        return tuple(out)

    return _memo(ring, "_nilpotents", compute)


def center(ring: FiniteRing) -> tuple[int, ...]:
    """All c commuting with every element, ascending."""

    def compute() -> tuple[int, ...]:
        out = []
        for c in ring.elements():
            row = ring.mul_table[c]
            if all(row[r] == ring.mul_table[r][c] for r in ring.elements()):
                out.append(c)
        return tuple(out)

    return _memo(ring, "_center", compute)


def is_commutative(ring: FiniteRing) -> tuple[bool, Optional[tuple[int, int]]]:
    """Whether mul commutes everywhere; first failing pair otherwise."""
    for a in ring.elements():
        row = ring.mul_table[a]
        for b in range(a + 1, ring.order):
            if row[b] != ring.mul_table[b][a]:
                return False, (a, b)
    return True, None


def is_abelian_ring(ring: FiniteRing) -> tuple[bool, Optional[tuple[int, int]]]:
    """Whether every idempotent is central; else smallest (e, r), er != re."""
    for e in idempotents(ring):
        row = ring.mul_table[e]
        for r in ring.elements():
            if row[r] != ring.mul_table[r][e]:
                return False, (e, r)
    return True, None


def left_ideal(ring: FiniteRing, generators: Iterable[int]) -> LeftIdeal:
    """Smallest set containing the generators that is closed under
    addition, negation and left multiplication, by worklist closure."""
    members = {ring.zero}
    frontier = []
    for g in generators:
        if g not in members:
            members.add(g)
            frontier.append(g)
    while frontier:
        x = frontier.pop()
        new = [ring.neg(x)]
        new.extend(ring.add_table[x][y] for y in tuple(members))
        new.extend(ring.mul_table[r][x] for r in ring.elements())
        for v in new:
            if v not in members:
                members.add(v)
                frontier.append(v)
    return LeftIdeal(frozenset(members), ring)


def principal_left_image(ring: FiniteRing, a: int) -> frozenset[int]:
    """One-pass image {r*a : r in R}; equals the left ideal (a) since R is unital."""
    return frozenset(ring.mul_table[r][a] for r in ring.elements())


def right_image(ring: FiniteRing, a: int) -> frozenset[int]:
    """One-pass image {a*r : r in R} (the right ideal aR)."""
    row = ring.mul_table[a]
    return frozenset(row[r] for r in ring.elements())


def left_ideal_violation(ring: FiniteRing, members: frozenset[int]) -> Optional[str]:
    """None when members is a left ideal, else a short reason."""
    if ring.zero not in members:
        return "missing zero"
    for x in members:
        if ring.neg(x) not in members:
            return f"negation of {x} escapes"
        row = ring.add_table[x]
        for y in members:
            if row[y] not in members:
                return f"{x}+{y} escapes"
        for r in ring.elements():
            if ring.mul_table[r][x] not in members:
                return f"{r}*{x} escapes"
    return None


def two_sided_violation(ring: FiniteRing, members: frozenset[int]) -> Optional[str]:
    """None when members is a two-sided ideal, else a short reason."""
    reason = left_ideal_violation(ring, members)
    if reason is not None:
        return reason
    for x in members:
        row = ring.mul_table[x]
        for r in ring.elements():
            if row[r] not in members:
                return f"{x}*{r} escapes"
    return None


def two_sided_ideal(ring: FiniteRing, members: Iterable[int]) -> TwoSidedIdeal:
    """Wrap a member set as a verified two-sided ideal."""
    out = frozenset(members)
    reason = two_sided_violation(ring, out)
    if reason is not None:
        raise ValueError(f"not a two-sided ideal: {reason}")
    return TwoSidedIdeal(out, ring)


def jacobson_radical(ring: FiniteRing) -> TwoSidedIdeal:
    """{x : 1 - r*x is a unit for all r}, verified two-sided."""

    def compute() -> TwoSidedIdeal:
        members = kernels.radical_members(
            ring.order,
            ring.add_flat,
            ring.mul_flat,
            ring.neg_flat,
            ring.one,
            unit_mask(ring),
        )
        out = frozenset(members)
        reason = two_sided_violation(ring, out)
        if reason is not None:
            raise ConsistencyError(
                f"radical of {ring.label} is not a two-sided ideal: {reason}"
            )
        return TwoSidedIdeal(out, ring)

    return _memo(ring, "_radical", compute)


def _all_left_ideals(ring: FiniteRing) -> set[frozenset[int]]:
    """Every left ideal: close all <=2-generated ones, then saturate joins."""
    ideals: set[frozenset[int]] = {left_ideal(ring, ()).members}
    for a in ring.elements():
        ideals.add(left_ideal(ring, (a,)).members)
    for a in ring.elements():
        for b in range(a + 1, ring.order):
            ideals.add(left_ideal(ring, (a, b)).members)
    changed = True
    while changed:
        changed = False
        current = sorted(ideals, key=sorted)
        for i, left in enumerate(current):
            for right in current[i + 1 :]:
                union = left | right
                if union in ideals:
                    continue
                joined = left_ideal(ring, union).members
                if joined not in ideals:
                    ideals.add(joined)
                    changed = True
    return ideals


def jacobson_radical_oracle(
    ring: FiniteRing, cap: int = ORACLE_ORDER_CAP
) -> TwoSidedIdeal:
    """Independent radical: intersect all maximal proper left ideals.

    Enumerates the full left-ideal lattice (closures of <=2-generated sets
    saturated under joins), so it is deliberately slower than
    :func:`jacobson_radical` and capped by order.
    """
    if ring.order > cap:
        raise CapExceeded(
            f"order {ring.order} exceeds the radical-oracle cap {cap}"
        )
    full = frozenset(ring.elements())
    proper = [m for m in _all_left_ideals(ring) if m != full]
    maximal = [m for m in proper if not any(m < other for other in proper)]
    members = frozenset.intersection(*maximal)
    reason = two_sided_violation(ring, members)
    if reason is not None:
        raise ConsistencyError(
            f"maximal-left-ideal intersection of {ring.label} is not two-sided: {reason}"
        )
    return TwoSidedIdeal(members, ring)


def quotient_ring(
    ring: FiniteRing, ideal: TwoSidedIdeal
) -> tuple[FiniteRing, tuple[int, ...]]:
    """Coset ring and the surjection element -> quotient index.

    Coset representatives are the smallest member of each coset; quotient
    indices follow representative order. The quotient passes the full
    build gate again.
    """
    if ideal.ring is not ring:
        raise ValueError("ideal belongs to a different ring")
    if ring.one in ideal.members:
        raise ImproperIdeal("1 lies in the ideal")
    members = sorted(ideal.members)
    rep: list[int] = [-1] * ring.order
    for x in ring.elements():
        if rep[x] != -1:
            continue
        coset = sorted(ring.add_table[x][i] for i in members)
        head = coset[0]
        for y in coset:
            rep[y] = head
    reps = sorted(set(rep))
    index_of = {r: i for i, r in enumerate(reps)}
    surjection = tuple(index_of[rep[x]] for x in ring.elements())
    q = len(reps)
    add_rows = tuple(
        tuple(index_of[rep[ring.add_table[a][b]]] for b in reps) for a in reps
    )
    mul_rows = tuple(
        tuple(index_of[rep[ring.mul_table[a][b]]] for b in reps) for a in reps
    )
    label = f"{ring.label} mod ideal(order {len(members)})"
    quotient = build_ring(
        add_rows,
        mul_rows,
        index_of[rep[ring.zero]],
        index_of[rep[ring.one]],
        label=label,
    )
    assert quotient.order == q
    return quotient, surjection
