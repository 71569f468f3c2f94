"""Reference implementations of the hot table-scan kernels.

Tables are flat row-major integer sequences of length n*n. These loops are
the portable fallback; ``ringlab.kernels`` swaps in the compiled twin when
it is importable. Scan order is part of the contract: every function
returns the first hit in ascending index order, so both backends produce
byte-identical witnesses.
"""

from __future__ import annotations

from typing import Sequence


def ring_axiom_witness(
    n: int,
    add: Sequence[int],
    mul: Sequence[int],
    zero: int,
    one: int,
) -> tuple[str, tuple[int, int, int]] | None:
    """First violated ring axiom with its witness indices, or None.

    Unused witness slots are padded with -1. Check order is fixed:
    closure, add commutativity/identity/inverses/associativity, mul
    identity/associativity, then both distributive laws.
    """
    for i in range(n):
        base = i * n
        for j in range(n):
            if not 0 <= add[base + j] < n:
                return ("add-closure", (i, j, -1))
            if not 0 <= mul[base + j] < n:
                return ("mul-closure", (i, j, -1))
    for i in range(n):
        base = i * n
        for j in range(i + 1, n):
            if add[base + j] != add[j * n + i]:
                return ("add-commutativity", (i, j, -1))
    zbase = zero * n
    for i in range(n):
        if add[zbase + i] != i:
            return ("add-identity", (i, -1, -1))
    for i in range(n):
        base = i * n
        found = False
        for j in range(n):
            if add[base + j] == zero:
                found = True
                break
        if not found:
            return ("add-inverse", (i, -1, -1))
    for i in range(n):
        base = i * n
        for j in range(n):
            ij = add[base + j]
            jbase = j * n
            for k in range(n):
                if add[ij * n + k] != add[base + add[jbase + k]]:
                    return ("add-associativity", (i, j, k))
    obase = one * n
    for i in range(n):
        if mul[obase + i] != i or mul[i * n + one] != i:
            return ("mul-identity", (i, -1, -1))
    for i in range(n):
        base = i * n
        for j in range(n):
            ij = mul[base + j]
            jbase = j * n
            for k in range(n):
                if mul[ij * n + k] != mul[base + mul[jbase + k]]:
                    return ("mul-associativity", (i, j, k))
    for i in range(n):
        base = i * n
        for j in range(n):
            jbase = j * n
            ij = mul[base + j]
            for k in range(n):
                if mul[base + add[jbase + k]] != add[ij * n + mul[base + k]]:
                    return ("left-distributivity", (i, j, k))
    for i in range(n):
        for j in range(n):
            jbase = j * n
            ji = mul[jbase + i]
            for k in range(n):
                if mul[add[jbase + k] * n + i] != add[ji * n + mul[k * n + i]]:
                    return ("right-distributivity", (i, j, k))
    return None


def inverse_table(n: int, mul: Sequence[int], one: int) -> list[int]:
    """Two-sided inverse of each element, or -1; smallest inverse wins."""
    inv = [-1] * n
    for a in range(n):
        abase = a * n
        for b in range(n):
            if mul[abase + b] == one and mul[b * n + a] == one:
                inv[a] = b
                break
    return inv


def radical_members(
    n: int,
    add: Sequence[int],
    mul: Sequence[int],
    neg: Sequence[int],
    one: int,
    is_unit: Sequence[int],
) -> list[int]:
    """Elements x such that 1 - r*x is a unit for every r, ascending."""
    obase = one * n
    out = []
    for x in range(n):
        ok = True
        for r in range(n):
            if not is_unit[add[obase + neg[mul[r * n + x]]]]:
                ok = False
                break
        if ok:
            out.append(x)
    return out


def decomposition_witness(
    n: int,
    add: Sequence[int],
    mul: Sequence[int],
    neg: Sequence[int],
    a: int,
    nils: Sequence[int],
    projs: Sequence[int],
    units: Sequence[int],
) -> tuple[int, int, int] | None:
    """First (b, p, v) with a = b + p*v = b + v*p, scanning b, p, v ascending.

    The caller pre-filters ``nils`` to nilpotents commuting with ``a``;
    ``projs`` and ``units`` are ascending index lists.
    """
    abase = a * n
    for b in nils:
        c = add[abase + neg[b]]
        for p in projs:
            pbase = p * n
            for v in units:
                if mul[pbase + v] == c and mul[v * n + p] == c:
                    return (b, p, v)
    return None
