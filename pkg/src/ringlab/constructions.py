"""Standard finite rings, their standard involutions, and the test corpus.

Every constructor reduces to validated tables through the core build gate.
Element indexing is part of the contract so that reports replay:

- zn(n): residues 0..n-1.
- gf4: 0, 1, t, t+1 at indices 0, 1, 2, 3 with t^2 = t + 1.
- matrix/upper-triangular rings: entries row-major, first entry most
  significant base-|base| digit of the index.
- product: index = left_index * right_order + right_index.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .core import FiniteRing, build_ring, global_order_cap, is_commutative
from .errors import CapExceeded, NotApplicable
from .star import Involution, StarRing, validate_involution

RingExpr = Union["Zn", "GF4", "MatrixExpr", "UpperTriangularExpr", "ProductExpr", "TablesExpr"]


@dataclass(frozen=True)
class Zn:
    n: int

    @property
    def label(self) -> str:
        return f"zn({self.n})"

    def to_dict(self) -> dict:
        return {"kind": "zn", "n": self.n}


@dataclass(frozen=True)
class GF4:
    @property
    def label(self) -> str:
        return "gf4"

    def to_dict(self) -> dict:
        return {"kind": "gf4"}


@dataclass(frozen=True)
class MatrixExpr:
    base: RingExpr
    k: int

    @property
    def label(self) -> str:
        return f"matrix({self.base.label},{self.k})"

    def to_dict(self) -> dict:
        return {"kind": "matrix", "base": self.base.to_dict(), "k": self.k}


@dataclass(frozen=True)
class UpperTriangularExpr:
    base: RingExpr
    k: int

    @property
    def label(self) -> str:
        return f"upper_triangular({self.base.label},{self.k})"

    def to_dict(self) -> dict:
        return {"kind": "upper_triangular", "base": self.base.to_dict(), "k": self.k}


@dataclass(frozen=True)
class ProductExpr:
    left: RingExpr
    right: RingExpr

    @property
    def label(self) -> str:
        return f"product({self.left.label},{self.right.label})"

    def to_dict(self) -> dict:
        return {
            "kind": "product",
            "left": self.left.to_dict(),
            "right": self.right.to_dict(),
        }


@dataclass(frozen=True)
class TablesExpr:
    order: int
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    zero: int
    one: int

    @property
    def label(self) -> str:
        return f"tables(order={self.order})"

    def to_dict(self) -> dict:
        return {
            "kind": "tables",
            "order": self.order,
            "add": [list(row) for row in self.add],
            "mul": [list(row) for row in self.mul],
            "zero": self.zero,
            "one": self.one,
        }


def parse_ring_expr(doc: dict) -> RingExpr:
    """Parse the structured ring-expression form (raises ValueError)."""
    if not isinstance(doc, dict) or "kind" not in doc:
        raise ValueError("ring expression must be an object with a 'kind'")
    kind = doc["kind"]
    if kind == "zn":
        return Zn(int(doc["n"]))
    if kind == "gf4":
        return GF4()
    if kind == "matrix":
        return MatrixExpr(parse_ring_expr(doc["base"]), int(doc["k"]))
    if kind == "upper_triangular":
        return UpperTriangularExpr(parse_ring_expr(doc["base"]), int(doc["k"]))
    if kind == "product":
        return ProductExpr(parse_ring_expr(doc["left"]), parse_ring_expr(doc["right"]))
    if kind == "tables":
        add = tuple(tuple(int(v) for v in row) for row in doc["add"])
        mul = tuple(tuple(int(v) for v in row) for row in doc["mul"])
        return TablesExpr(int(doc["order"]), add, mul, int(doc["zero"]), int(doc["one"]))
    raise ValueError(f"unknown ring expression kind {kind!r}")


def _cap(cap: Optional[int]) -> int:
    return global_order_cap() if cap is None else cap


def _check_cap(order: int, cap: Optional[int], what: str) -> None:
    limit = _cap(cap)
    if order > limit:
        raise CapExceeded(f"{what} has order {order}, above the cap {limit}")


def zn(n: int, cap: Optional[int] = None) -> FiniteRing:
    """Residue ring of integers mod n (n >= 2)."""
    if n < 2:
        raise ValueError("zn needs n >= 2")
    _check_cap(n, cap, f"zn({n})")
    add = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    mul = tuple(tuple((i * j) % n for j in range(n)) for i in range(n))
    return build_ring(add, mul, 0, 1, label=f"zn({n})", expr=Zn(n).to_dict())


def gf4(cap: Optional[int] = None) -> FiniteRing:
    """The four-element field: 0, 1, t, t+1 with t^2 = t + 1.

    Index bit 0 is the constant coefficient, bit 1 the t coefficient, so
    addition is XOR of indices.
    """
    _check_cap(4, cap, "gf4")

    def mul_bits(a: int, b: int) -> int:
        a0, a1 = a & 1, a >> 1
        b0, b1 = b & 1, b >> 1
        c0 = (a0 * b0 + a1 * b1) & 1
        c1 = (a0 * b1 + a1 * b0 + a1 * b1) & 1
        return (c1 << 1) | c0

    add = tuple(tuple(i ^ j for j in range(4)) for i in range(4))
    mul = tuple(tuple(mul_bits(i, j) for j in range(4)) for i in range(4))
    return build_ring(add, mul, 0, 1, label="gf4", expr=GF4().to_dict())


def _digits(index: int, base: int, length: int) -> tuple[int, ...]:
    out = []
    for _ in range(length):
        index, d = divmod(index, base)
        out.append(d)
    return tuple(reversed(out))


def _index(digits: tuple[int, ...], base: int) -> int:
    out = 0
    for d in digits:
        out = out * base + d
    return out


def matrix_index(base_order: int, entries: tuple[int, ...]) -> int:
    """Index of a matrix from its row-major entry tuple."""
    return _index(entries, base_order)


def matrix_entries(base_order: int, count: int, index: int) -> tuple[int, ...]:
    """Row-major entry tuple of the matrix at an index."""
    return _digits(index, base_order, count)


def upper_triangular(base: FiniteRing, k: int, cap: Optional[int] = None) -> FiniteRing:
    """Ring of k x k upper-triangular matrices over a table ring.

    Entries are indexed row-major over the positions (i, j) with i <= j;
    the first entry is the most significant digit.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    positions = [(i, j) for i in range(k) for j in range(i, k)]
    m = len(positions)
    order = base.order**m
    _check_cap(order, cap, f"upper_triangular({base.label},{k})")
    pos_index = {pos: idx for idx, pos in enumerate(positions)}
    badd = base.add_table
    bmul = base.mul_table
    bzero = base.zero

    def add_mats(x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(badd[a][b] for a, b in zip(x, y))

    def mul_mats(x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
        out = []
        for i, j in positions:
            acc = bzero
            for t in range(i, j + 1):
                acc = badd[acc][bmul[x[pos_index[(i, t)]]][y[pos_index[(t, j)]]]]
            out.append(acc)
        return tuple(out)

    all_entries = [_digits(idx, base.order, m) for idx in range(order)]
    add = tuple(
        tuple(_index(add_mats(x, y), base.order) for y in all_entries)
        for x in all_entries
    )
    mul = tuple(
        tuple(_index(mul_mats(x, y), base.order) for y in all_entries)
        for x in all_entries
    )
    zero = 0
    one_entries = tuple(
        base.one if i == j else bzero for i, j in positions
    )
    expr = UpperTriangularExpr(_expr_of(base), k)
    return build_ring(
        add, mul, zero, _index(one_entries, base.order),
        label=expr.label, expr=expr.to_dict(),
    )


def matrix_ring(base: FiniteRing, k: int, cap: Optional[int] = None) -> FiniteRing:
    """Full k x k matrix ring over a table ring, entries row-major."""
    if k < 1:
        raise ValueError("k must be >= 1")
    m = k * k
    order = base.order**m
    _check_cap(order, cap, f"matrix({base.label},{k})")
    badd = base.add_table
    bmul = base.mul_table
    bzero = base.zero

    def mul_mats(x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
        out = []
        for i in range(k):
            for j in range(k):
                acc = bzero
                for t in range(k):
                    acc = badd[acc][bmul[x[i * k + t]][y[t * k + j]]]
                out.append(acc)
        return tuple(out)

    all_entries = [_digits(idx, base.order, m) for idx in range(order)]
    add = tuple(
        tuple(
            _index(tuple(badd[a][b] for a, b in zip(x, y)), base.order)
            for y in all_entries
        )
        for x in all_entries
    )
    mul = tuple(
        tuple(_index(mul_mats(x, y), base.order) for y in all_entries)
        for x in all_entries
    )
    one_entries = tuple(
        base.one if i == j else bzero for i in range(k) for j in range(k)
    )
    expr = MatrixExpr(_expr_of(base), k)
    return build_ring(
        add, mul, 0, _index(one_entries, base.order),
        label=expr.label, expr=expr.to_dict(),
    )


def product(left: FiniteRing, right: FiniteRing, cap: Optional[int] = None) -> FiniteRing:
    """Componentwise product ring; index = a * right.order + b."""
    order = left.order * right.order
    _check_cap(order, cap, f"product({left.label},{right.label})")
    ro = right.order

    def pair(a: int, b: int) -> int:
        return a * ro + b

    add = tuple(
        tuple(
            pair(left.add_table[x // ro][y // ro], right.add_table[x % ro][y % ro])
            for y in range(order)
        )
        for x in range(order)
    )
    mul = tuple(
        tuple(
            pair(left.mul_table[x // ro][y // ro], right.mul_table[x % ro][y % ro])
            for y in range(order)
        )
        for x in range(order)
    )
    expr = ProductExpr(_expr_of(left), _expr_of(right))
    return build_ring(
        add, mul, pair(left.zero, right.zero), pair(left.one, right.one),
        label=expr.label, expr=expr.to_dict(),
    )


def _expr_of(ring: FiniteRing) -> RingExpr:
    if ring.expr is not None:
        return parse_ring_expr(ring.expr)
    return TablesExpr(ring.order, ring.add_table, ring.mul_table, ring.zero, ring.one)


def build_expr(expr: RingExpr, cap: Optional[int] = None) -> FiniteRing:
    """Evaluate a ring-expression tree to a validated ring."""
    if isinstance(expr, Zn):
        return zn(expr.n, cap)
    if isinstance(expr, GF4):
        return gf4(cap)
    if isinstance(expr, MatrixExpr):
        return matrix_ring(build_expr(expr.base, cap), expr.k, cap)
    if isinstance(expr, UpperTriangularExpr):
        return upper_triangular(build_expr(expr.base, cap), expr.k, cap)
    if isinstance(expr, ProductExpr):
        return product(build_expr(expr.left, cap), build_expr(expr.right, cap), cap)
    if isinstance(expr, TablesExpr):
        _check_cap(expr.order, cap, expr.label)
        return build_ring(
            expr.add, expr.mul, expr.zero, expr.one,
            label=expr.label, expr=expr.to_dict(),
        )
    raise TypeError(f"not a ring expression: {expr!r}")


# --- involutions ------------------------------------------------------------

_NAMED_INVOLUTIONS = ("identity", "swap", "transpose", "antidiagonal", "frobenius")


def parse_inv_expr(doc) -> tuple[str, Optional[tuple[int, ...]]]:
    """Normalize an involution spec to (name, explicit-map-or-None)."""
    if isinstance(doc, str):
        if doc in _NAMED_INVOLUTIONS:
            return doc, None
        raise ValueError(f"unknown involution name {doc!r}")
    if isinstance(doc, dict) and doc.get("kind") == "table":
        return "table", tuple(int(v) for v in doc["map"])
    raise ValueError(f"malformed involution spec: {doc!r}")


def inv_expr_to_dict(name: str, mapping: Optional[tuple[int, ...]]):
    if name == "table":
        return {"kind": "table", "map": list(mapping or ())}
    return name


def involution_map(
    name: str, ring: FiniteRing, mapping: Optional[tuple[int, ...]] = None
) -> tuple[int, ...]:
    """Resolve a named involution to a raw index map, structure permitting.

    This only needs the construction shape (NotApplicable otherwise); it
    does not check the involution axioms, so an identity map on a
    non-commutative ring resolves fine and fails only at validation.
    """
    n = ring.order
    if name == "table":
        if mapping is None:
            raise ValueError("table involution needs an explicit map")
        return tuple(mapping)
    if name == "identity":
        return tuple(range(n))
    expr = ring.expr or {}
    kind = expr.get("kind")
    if name == "swap":
        if kind != "product" or expr["left"] != expr["right"]:
            raise NotApplicable(
                "swap needs a product of two identical factors"
            )
        half = round(n**0.5)
        return tuple((x % half) * half + (x // half) for x in range(n))
    if name == "antidiagonal":
        if kind != "upper_triangular" or expr["k"] != 2:
            raise NotApplicable(
                "antidiagonal needs 2x2 upper-triangular matrices"
            )
        b = round(n ** (1 / 3))
        out = []
        for x in range(n):
            a, up, c = matrix_entries(b, 3, x)
            out.append(matrix_index(b, (c, up, a)))
        return tuple(out)
    if name == "transpose":
        if kind != "matrix":
            raise NotApplicable("transpose needs a full matrix ring")
        k = expr["k"]
        base_order = round(n ** (1 / (k * k)))
        base_map = tuple(range(base_order)) if mapping is None else tuple(mapping)
        if len(base_map) != base_order:
            raise ValueError("base involution has the wrong length")
        out = []
        for x in range(n):
            entries = matrix_entries(base_order, k * k, x)
            flipped = tuple(
                base_map[entries[j * k + i]] for i in range(k) for j in range(k)
            )
            out.append(matrix_index(base_order, flipped))
        return tuple(out)
    if name == "frobenius":
        if kind != "gf4":
            raise NotApplicable("frobenius is defined here only on gf4")
        return (0, 1, 3, 2)
    raise ValueError(f"unknown involution name {name!r}")


def involution_for(
    name: str,
    ring: FiniteRing,
    mapping: Optional[tuple[int, ...]] = None,
) -> Involution:
    """Named involution with applicability preconditions enforced.

    identity requires a commutative ring; swap a product of equal factors;
    antidiagonal 2x2 upper-triangular matrices over a commutative base;
    transpose a matrix ring (entrywise base involution optional, identity
    base needs a commutative base); frobenius the gf4 construction.
    """
    expr = ring.expr or {}
    if name == "identity":
        ok, witness = is_commutative(ring)
        if not ok:
            raise NotApplicable(
                f"identity needs a commutative ring; {witness} do not commute"
            )
    elif name == "antidiagonal":
        if expr.get("kind") == "upper_triangular":
            base = build_expr(parse_ring_expr(expr["base"]))
            ok, witness = is_commutative(base)
            if not ok:
                raise NotApplicable(
                    f"antidiagonal needs a commutative base; {witness} do not commute"
                )
    elif name == "transpose" and mapping is None:
        if expr.get("kind") == "matrix":
            base = build_expr(parse_ring_expr(expr["base"]))
            ok, witness = is_commutative(base)
            if not ok:
                raise NotApplicable(
                    f"plain transpose needs a commutative base; {witness} do not commute"
                )
    raw = involution_map(name, ring, mapping)
    label = name if name != "table" else f"table{list(raw)}"
    return validate_involution(ring, raw, label=label).inv


def star_ring(ring: FiniteRing, name: str, mapping=None) -> StarRing:
    """Ring plus validated named involution."""
    inv = involution_for(name, ring, mapping)
    return StarRing(ring, inv)


def star_ring_from_spec(doc: dict, cap: Optional[int] = None) -> StarRing:
    """Build a star ring from a spec document.

    Accepts {"ring": <expr>, "involution": <inv>} or a bare ring
    expression with an optional "involution" key. The involution is
    resolved structurally and then validated, so an inapplicable named map
    surfaces as an AxiomViolation with a witness.
    """
    if "ring" in doc:
        ring_doc = doc["ring"]
    elif "kind" in doc:
        ring_doc = {k: v for k, v in doc.items() if k != "involution"}
    else:
        raise ValueError("spec must contain a 'ring' expression")
    ring = build_expr(parse_ring_expr(ring_doc), cap)
    inv_doc = doc.get("involution", "identity")
    name, mapping = parse_inv_expr(inv_doc)
    raw = involution_map(name, ring, mapping)
    label = name if name != "table" else f"table{list(raw)}"
    return validate_involution(ring, raw, label=label)


def showcase_ring(cap: Optional[int] = None) -> StarRing:
    """The 8-element upper-triangular ring over zn(2) with the involution
    that swaps the diagonal and keeps the corner; the lab's standard
    non-commutative example."""
    return star_ring(upper_triangular(zn(2, cap), 2, cap), "antidiagonal")


def default_corpus(cap: Optional[int] = None) -> list[StarRing]:
    """The standard corpus: every item fully validated, deterministic order."""
    z2 = zn(2, cap)
    z3 = zn(3, cap)
    f4 = gf4(cap)
    out = [
        star_ring(z2, "identity"),
        star_ring(z3, "identity"),
        star_ring(zn(4, cap), "identity"),
        star_ring(zn(6, cap), "identity"),
        star_ring(zn(8, cap), "identity"),
        star_ring(zn(9, cap), "identity"),
        star_ring(f4, "identity"),
        star_ring(f4, "frobenius"),
        star_ring(product(z2, z2, cap), "identity"),
        star_ring(product(z2, z2, cap), "swap"),
        star_ring(product(z3, z3, cap), "identity"),
        star_ring(product(z3, z3, cap), "swap"),
        showcase_ring(cap),
        star_ring(upper_triangular(z3, 2, cap), "antidiagonal"),
        star_ring(matrix_ring(z2, 2, cap), "transpose"),
        star_ring(matrix_ring(z3, 2, cap), "transpose"),
    ]
    return out
