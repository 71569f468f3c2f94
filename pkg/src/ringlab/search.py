"""Involution enumeration, profile searches over corpora, and the atlas.

Atlas records are line-delimited JSON with sorted keys; a record carries
enough construction data to rebuild the star ring and recompute its
report, so loading can replay any sample of the file and fail loudly on
tampering.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, Optional

from .constructions import (
    build_expr,
    default_corpus,
    inv_expr_to_dict,
    involution_map,
    matrix_ring,
    parse_inv_expr,
    parse_ring_expr,
    star_ring,
    star_ring_from_spec,
    zn,
)
from .core import FiniteRing, INVOLUTION_ENUM_CAP, is_commutative
from .errors import CapExceeded, IoFailure, NotApplicable, ReplayMismatch
from .predicates import PropertyReport, property_report, replay_report
from .star import Involution, StarRing, validate_involution


def enumerate_involutions(ring: FiniteRing, cap: int = INVOLUTION_ENUM_CAP) -> list[Involution]:
    """All involutions of the ring, by backtracking with propagation.

    Images of additive generators determine the rest of the map, so the
    search assigns an image to the smallest element outside the closed
    span (exactly the greedy generator choice), then closes the partial
    map under +, *, and the self-inverse law, pruning on any conflict.
    Every complete candidate still passes the full validation gate.
    """
    if ring.order > cap:
        raise CapExceeded(
            f"order {ring.order} exceeds the involution-enumeration cap {cap}"
        )
    n = ring.order
    add = ring.add_table
    mul = ring.mul_table

    def close(m: dict[int, int], im: dict[int, int], fresh: list[int]) -> bool:
        """Propagate consequences of new assignments; False on conflict."""

        def assign(src: int, dst: int) -> bool:
            if src in m:
                return m[src] == dst
            if dst in im:
                return False
            m[src] = dst
            im[dst] = src
            fresh.append(src)
            return True

        while fresh:
            x = fresh.pop()
            for y in tuple(m):
                if not assign(add[x][y], add[m[x]][m[y]]):
                    return False
                if not assign(mul[x][y], mul[m[y]][m[x]]):
                    return False
                if not assign(mul[y][x], mul[m[x]][m[y]]):
                    return False
            if not assign(m[x], x):
                return False
        return True

    results: set[tuple[int, ...]] = set()

    def extend(m: dict[int, int], im: dict[int, int]) -> None:
        if len(m) == n:
            results.add(tuple(m[x] for x in range(n)))
            return
        u = min(x for x in range(n) if x not in m)
        for c in range(n):
            if c in im:
                continue
            m2, im2 = dict(m), dict(im)
            m2[u] = c
            im2[c] = u
            fresh = [u]
            if c != u:
                if c in m2:
                    if m2[c] != u:
                        continue
                else:
                    m2[c] = u
                    im2[u] = c
                    fresh.append(c)
            if close(m2, im2, fresh):
                extend(m2, im2)

    seed_m = {ring.zero: ring.zero, ring.one: ring.one}
    seed_im = dict(seed_m)
    fresh = list(seed_m)
    if close(seed_m, seed_im, fresh):
        extend(seed_m, seed_im)

    out = []
    identity = tuple(range(n))
    for candidate in sorted(results):
        label = "identity" if candidate == identity else f"table{list(candidate)}"
        out.append(validate_involution(ring, candidate, label=label).inv)
    return out


@dataclass(frozen=True)
class SearchTask:
    """What to scan and what to keep.

    corpus names the ring source: "default", a family sweep like
    "zn:2..12" (identity involution), or a path to a JSON list of spec
    documents. profile is a conjunction of report field names, each
    optionally negated with a leading "!". stamp is copied verbatim into
    records so identical tasks yield byte-identical streams.
    """

    corpus: str = "default"
    profile: tuple[str, ...] = ()
    cap: Optional[int] = None
    stamp: str = ""

    @classmethod
    def from_dict(cls, doc: dict) -> "SearchTask":
        profile = doc.get("profile", ())
        if isinstance(profile, str):
            profile = parse_profile(profile)
        return cls(
            corpus=doc.get("corpus", "default"),
            profile=tuple(profile),
            cap=doc.get("cap"),
            stamp=doc.get("stamp", ""),
        )


@dataclass(frozen=True)
class AtlasRecord:
    """Replayable search result: construction plus full report."""

    label: str
    involution: str
    order: int
    ring_expr: dict
    inv_expr: object
    report: PropertyReport
    stamp: str = ""

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "involution": self.involution,
            "order": self.order,
            "ring": self.ring_expr,
            "inv": self.inv_expr,
            "report": self.report.to_dict(),
            "stamp": self.stamp,
        }

    def to_json_line(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json_line(cls, line: str) -> "AtlasRecord":
        doc = json.loads(line)
        return cls(
            label=doc["label"],
            involution=doc["involution"],
            order=int(doc["order"]),
            ring_expr=doc["ring"],
            inv_expr=doc["inv"],
            report=PropertyReport.from_dict(doc["report"]),
            stamp=doc.get("stamp", ""),
        )

    def rebuild(self) -> StarRing:
        ring = build_expr(parse_ring_expr(self.ring_expr))
        name, mapping = parse_inv_expr(self.inv_expr)
        raw = involution_map(name, ring, mapping)
        label = name if name != "table" else f"table{list(raw)}"
        return validate_involution(ring, raw, label=label)


_NAMED_LABELS = ("identity", "swap", "transpose", "antidiagonal", "frobenius")


def _record_for(s: StarRing, report: PropertyReport, stamp: str) -> AtlasRecord:
    if s.ring.expr is None:
        raise ValueError(f"ring {s.ring.label} has no replayable construction")
    name = s.inv.label
    if name in _NAMED_LABELS:
        inv_expr: object = inv_expr_to_dict(name, None)
    else:
        inv_expr = {"kind": "table", "map": list(s.inv.map)}
    return AtlasRecord(
        label=s.ring.label,
        involution=s.inv.label,
        order=s.order,
        ring_expr=s.ring.expr,
        inv_expr=inv_expr,
        report=report,
        stamp=stamp,
    )


def parse_profile(text: str) -> tuple[str, ...]:
    """Split a comma-separated literal list, keeping "!" negations.

    Literal names are checked against actual reports when matching.
    """
    return tuple(p.strip() for p in text.split(",") if p.strip())


def _matches(report: PropertyReport, profile: Iterable[str]) -> bool:
    for literal in profile:
        wanted = not literal.startswith("!")
        name = literal.lstrip("!")
        if name not in report.values:
            raise ValueError(f"unknown profile literal {name!r}")
        if report.values[name] != wanted:
            return False
    return True


def resolve_corpus(task: SearchTask) -> list[StarRing]:
    """Corpus named by the task: "default", a "zn:A..B" family sweep, or
    a path to a JSON list of star-ring spec documents."""
    if task.corpus == "default":
        return default_corpus(task.cap)
    if task.corpus.startswith("zn:"):
        span = task.corpus[3:]
        lo, _, hi = span.partition("..")
        first = int(lo)
        last = int(hi) if hi else first
        if first < 2 or last < first:
            raise ValueError(f"bad family sweep {task.corpus!r}")
        return [star_ring(zn(n, task.cap), "identity") for n in range(first, last + 1)]
    try:
        with open(task.corpus, "r", encoding="utf-8") as fh:
            docs = json.load(fh)
    except OSError as exc:
        raise IoFailure(f"cannot read corpus {task.corpus}: {exc}") from exc
    if not isinstance(docs, list):
        raise ValueError("corpus file must hold a JSON list of spec documents")
    return [star_ring_from_spec(doc, task.cap) for doc in docs]


def run_profile_search(
    task: SearchTask, rings: Optional[list[StarRing]] = None
) -> list[AtlasRecord]:
    """All corpus star rings whose report matches every profile literal,
    in corpus order."""
    rings = resolve_corpus(task) if rings is None else rings
    out = []
    for s in rings:
        report = property_report(s)
        if _matches(report, task.profile):
            out.append(_record_for(s, report, task.stamp))
    return out


def matrix_ring_scan(
    bases: list[StarRing],
    k: int = 2,
    cap: Optional[int] = None,
    stamp: str = "",
) -> list[AtlasRecord]:
    """Full k x k matrix ring over each commutative base star ring, with
    the entrywise-star transpose involution; records the full report.

    This gathers data only: no outcome here is a characterization.
    """
    out = []
    for base in bases:
        ok, witness = is_commutative(base.ring)
        if not ok:
            raise NotApplicable(
                f"matrix scan needs commutative bases; {base.label} has "
                f"non-commuting pair {witness}"
            )
        ring = matrix_ring(base.ring, k, cap)
        raw = involution_map("transpose", ring, base.inv.map)
        label = (
            "transpose"
            if base.inv.map == tuple(range(base.order))
            else f"transpose/{base.inv.label}"
        )
        s = validate_involution(ring, raw, label=label)
        report = property_report(s)
        record = AtlasRecord(
            label=ring.label,
            involution=s.inv.label,
            order=ring.order,
            ring_expr=ring.expr or {},
            inv_expr={"kind": "table", "map": list(raw)},
            report=report,
            stamp=stamp,
        )
        out.append(record)
    return out


def persist_atlas(records: Iterable[AtlasRecord], sink) -> None:
    """Write records line-delimited; sink is a path or a text file."""
    lines = [r.to_json_line() for r in records]
    try:
        if hasattr(sink, "write"):
            for line in lines:
                sink.write(line + "\n")
        else:
            with open(sink, "w", encoding="utf-8") as fh:
                for line in lines:
                    fh.write(line + "\n")
    except OSError as exc:
        raise IoFailure(f"cannot write atlas: {exc}") from exc


def load_atlas(source, replay_sample: float = 0.0) -> list[AtlasRecord]:
    """Read records back, replaying a deterministic sample.

    replay_sample r validates the first ceil(r * N) records: each is
    rebuilt from its construction and its report recomputed and compared,
    witnesses included. ReplayMismatch names the first divergence.
    """
    try:
        if hasattr(source, "read"):
            text = source.read()
        else:
            with open(source, "r", encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise IoFailure(f"cannot read atlas: {exc}") from exc
    records = [
        AtlasRecord.from_json_line(line)
        for line in text.splitlines()
        if line.strip()
    ]
    if replay_sample > 0 and records:
        count = max(1, min(len(records), math.ceil(replay_sample * len(records))))
        for idx in range(count):
            record = records[idx]
            rebuilt = record.rebuild()
            problems = replay_report(rebuilt, record.report)
            if problems:
                raise ReplayMismatch(idx, "; ".join(problems))
    return records
