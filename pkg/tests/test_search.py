"""Involution enumeration, profile searches, and the replayable atlas."""

import io
import json

import pytest

import ringlab as rl
from ringlab.errors import CapExceeded, NotApplicable, ReplayMismatch


# --- enumeration -------------------------------------------------------------------


def test_enumerate_involutions_z4_exactly_identity():
    found = rl.enumerate_involutions(rl.zn(4))
    assert [inv.map for inv in found] == [(0, 1, 2, 3)]
    assert found[0].label == "identity"


def test_enumerate_involutions_boolean_product_identity_and_swap():
    p22 = rl.product(rl.zn(2), rl.zn(2))
    found = rl.enumerate_involutions(p22)
    assert sorted(inv.map for inv in found) == [(0, 1, 2, 3), (0, 2, 1, 3)]


def test_enumerate_involutions_triangular_contains_antidiagonal():
    s = rl.showcase_ring()
    found = rl.enumerate_involutions(s.ring)
    assert s.inv.map in {inv.map for inv in found}


def test_enumerate_involutions_identity_iff_commutative(corpus):
    for s in corpus:
        if s.order > rl.INVOLUTION_ENUM_CAP:
            continue
        maps = {inv.map for inv in rl.enumerate_involutions(s.ring)}
        identity = tuple(range(s.order))
        assert (identity in maps) == rl.is_commutative(s.ring)[0], s.label


def test_enumerate_involutions_valid_and_duplicate_free(corpus):
    for s in corpus:
        if s.order > rl.INVOLUTION_ENUM_CAP:
            continue
        found = rl.enumerate_involutions(s.ring)
        maps = [inv.map for inv in found]
        assert len(set(maps)) == len(maps)
        for m in maps:
            # full validation gate must accept each one
            rl.validate_involution(s.ring, m)
            assert all(m[m[x]] == x for x in s.ring.elements())


def test_enumerate_involutions_cap():
    with pytest.raises(CapExceeded):
        rl.enumerate_involutions(rl.upper_triangular(rl.zn(3), 2))


def test_enumerate_involutions_finds_transpose_family_on_matrices():
    m2 = rl.matrix_ring(rl.zn(2), 2)
    tr = rl.involution_for("transpose", m2)
    maps = {inv.map for inv in rl.enumerate_involutions(m2)}
    assert tr.map in maps


# --- profile search ----------------------------------------------------------------


def test_profile_search_finds_showcase_profile(corpus, reports):
    task = rl.SearchTask(
        profile=rl.parse_profile(
            "star_abelian,strongly_pi_regular,!strongly_pi_star_regular"
        )
    )
    records = rl.run_profile_search(task, rings=corpus)
    labels = {(r.label, r.involution) for r in records}
    assert ("upper_triangular(zn(2),2)", "antidiagonal") in labels
    for r in records:
        assert r.report.star_abelian
        assert r.report.strongly_pi_regular
        assert not r.report.strongly_pi_star_regular


def test_profile_search_abelian_non_projection(corpus):
    task = rl.SearchTask(
        profile=rl.parse_profile("abelian,!idempotents_are_projections")
    )
    records = rl.run_profile_search(task, rings=corpus)
    labels = {(r.label, r.involution) for r in records}
    assert ("product(zn(2),zn(2))", "swap") in labels


def test_profile_search_noncommutative_strongly_regular_is_empty(corpus):
    task = rl.SearchTask(
        profile=rl.parse_profile("strongly_pi_star_regular,!commutative")
    )
    assert rl.run_profile_search(task, rings=corpus) == []


def test_profile_search_unknown_literal(corpus):
    task = rl.SearchTask(profile=("totally_made_up",))
    with pytest.raises(ValueError):
        rl.run_profile_search(task, rings=corpus[:1])


def test_profile_search_deterministic_stream(corpus):
    task = rl.SearchTask(profile=rl.parse_profile("!strongly_pi_star_regular"))
    first = [r.to_json_line() for r in rl.run_profile_search(task, rings=corpus)]
    second = [r.to_json_line() for r in rl.run_profile_search(task, rings=corpus)]
    assert first == second and first


# --- matrix scan -------------------------------------------------------------------


def test_matrix_scan_base_z2_not_strongly_regular():
    base = rl.star_ring(rl.zn(2), "identity")
    records = rl.matrix_ring_scan([base], k=2)
    assert len(records) == 1
    report = records[0].report
    assert not report.strongly_pi_star_regular
    assert records[0].label == "matrix(zn(2),2)"


def test_matrix_scan_k1_matches_base_outcome():
    base = rl.star_ring(rl.zn(4), "identity")
    records = rl.matrix_ring_scan([base], k=1)
    assert records[0].report.strongly_pi_star_regular == rl.is_strongly_pi_star_regular(
        base
    )


def test_matrix_scan_rejects_noncommutative_base():
    with pytest.raises(NotApplicable):
        rl.matrix_ring_scan([rl.showcase_ring()], k=2)


def test_matrix_scan_cap():
    base = rl.star_ring(rl.zn(3), "identity")
    with pytest.raises(CapExceeded):
        rl.matrix_ring_scan([base], k=2, cap=64)


def test_matrix_scan_frobenius_base_star_enters_transpose():
    base = rl.star_ring(rl.gf4(), "frobenius")
    records = rl.matrix_ring_scan([base], k=1)
    assert records[0].involution == "transpose/frobenius"
    # with k = 1 the scan involution is just the base involution
    s = records[0].rebuild()
    assert s.inv.map == base.inv.map


# --- atlas persistence -------------------------------------------------------------


def test_atlas_roundtrip_identical_records(corpus, tmp_path):
    task = rl.SearchTask(profile=())
    records = rl.run_profile_search(task, rings=corpus)
    path = tmp_path / "atlas.jsonl"
    rl.persist_atlas(records, path)
    loaded = rl.load_atlas(path, replay_sample=0.0)
    assert [r.to_json_line() for r in loaded] == [r.to_json_line() for r in records]


def test_atlas_replay_full_sample(small_corpus, tmp_path):
    task = rl.SearchTask(profile=())
    records = rl.run_profile_search(task, rings=small_corpus)
    path = tmp_path / "atlas.jsonl"
    rl.persist_atlas(records, path)
    loaded = rl.load_atlas(path, replay_sample=1.0)
    assert len(loaded) == len(small_corpus)


def test_atlas_tampered_boolean_fails_replay(small_corpus, tmp_path):
    records = rl.run_profile_search(rl.SearchTask(), rings=small_corpus[:2])
    path = tmp_path / "atlas.jsonl"
    rl.persist_atlas(records, path)
    lines = path.read_text().splitlines()
    doc = json.loads(lines[1])
    doc["report"]["values"]["strongly_pi_star_regular"] = not doc["report"]["values"][
        "strongly_pi_star_regular"
    ]
    lines[1] = json.dumps(doc, sort_keys=True, separators=(",", ":"))
    path.write_text("\n".join(lines) + "\n")
    with pytest.raises(ReplayMismatch) as err:
        rl.load_atlas(path, replay_sample=1.0)
    assert err.value.index == 1


def test_atlas_empty_file(tmp_path):
    path = tmp_path / "empty.jsonl"
    path.write_text("")
    assert rl.load_atlas(path, replay_sample=1.0) == []


def test_atlas_accepts_file_objects(small_corpus):
    records = rl.run_profile_search(rl.SearchTask(), rings=small_corpus[:2])
    buffer = io.StringIO()
    rl.persist_atlas(records, buffer)
    buffer.seek(0)
    loaded = rl.load_atlas(buffer, replay_sample=0.0)
    assert len(loaded) == 2


def test_atlas_records_rebuild_from_construction(small_corpus):
    records = rl.run_profile_search(rl.SearchTask(), rings=small_corpus)
    for record in records:
        rebuilt = record.rebuild()
        assert rebuilt.ring.label == record.label
        assert rebuilt.order == record.order
        assert rl.replay_report(rebuilt, record.report) == []


def test_atlas_stamp_is_propagated(small_corpus):
    records = rl.run_profile_search(
        rl.SearchTask(stamp="2026-08-08"), rings=small_corpus[:1]
    )
    assert records[0].stamp == "2026-08-08"
    line = records[0].to_json_line()
    assert rl.AtlasRecord.from_json_line(line).stamp == "2026-08-08"


# --- task documents and family sweeps --------------------------------------------


def test_search_task_from_dict_and_family_sweep():
    task = rl.SearchTask.from_dict(
        {"corpus": "zn:2..6", "profile": "strongly_pi_star_regular"}
    )
    records = rl.run_profile_search(task)
    assert [r.label for r in records] == ["zn(2)", "zn(3)", "zn(4)", "zn(5)", "zn(6)"]
    for r in records:
        assert r.report.strongly_pi_star_regular


def test_family_sweep_rejects_bad_span():
    with pytest.raises(ValueError):
        rl.run_profile_search(rl.SearchTask(corpus="zn:9..2"))
