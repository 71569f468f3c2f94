"""Regularity predicates, their witnesses, and the equivalence contracts."""

import pytest

import ringlab as rl
from ringlab.errors import EquivalenceBreach
from ringlab.predicates import _REPLAYERS


def test_pi_regular_fields_with_exponent_one():
    for ring in (rl.zn(2), rl.zn(3), rl.gf4()):
        outcome = rl.is_pi_regular(ring)
        assert outcome.holds
        assert all(n == 1 for _, n, _ in outcome.rows)


def test_pi_regular_z4_needs_exponent_two():
    outcome = rl.is_pi_regular(rl.zn(4))
    assert outcome.holds
    by_element = {row[0]: row for row in outcome.rows}
    assert by_element[2] == (2, 2, 0)  # 2^2 = 0 = 0*x*0, smallest x = 0


def test_pi_regular_witnesses_replay(corpus):
    for s in corpus:
        outcome = rl.is_pi_regular(s.ring)
        assert outcome.holds, s.label
        for a, n, x in outcome.rows:
            an = s.ring.pow(a, n)
            assert s.ring.mul(s.ring.mul(an, x), an) == an


def test_strongly_pi_regular_everywhere_with_replay(corpus):
    for s in corpus:
        outcome = rl.is_strongly_pi_regular(s.ring)
        assert outcome.holds, s.label
        for a, n, x, y in outcome.rows:
            an = s.ring.pow(a, n)
            an1 = s.ring.pow(a, n + 1)
            assert s.ring.mul(an1, x) == an
            assert s.ring.mul(y, an1) == an


def test_strongly_pi_regular_z4_golden_witness():
    outcome = rl.is_strongly_pi_regular(rl.zn(4))
    by_element = {row[0]: row for row in outcome.rows}
    assert by_element[2] == (2, 2, 0, 0)


# --- the projection criteria (two three-way equivalences) -----------------------


def test_projection_criteria_golden_values():
    z4 = rl.star_ring(rl.zn(4), "identity")
    assert rl.projection_tests_star_abelian(z4) == (True, True, True)
    assert rl.projection_tests_commuting(z4) == (True, True, True)

    swap = rl.star_ring(rl.product(rl.zn(2), rl.zn(2)), "swap")
    assert rl.projection_tests_star_abelian(swap) == (False, False, False)
    assert rl.projection_tests_commuting(swap) == (False, False, False)

    showcase = rl.showcase_ring()
    assert rl.projection_tests_star_abelian(showcase) == (False, False, False)
    assert rl.projection_tests_commuting(showcase) == (False, False, False)

    frob = rl.star_ring(rl.gf4(), "frobenius")
    assert rl.projection_tests_star_abelian(frob) == (True, True, True)
    assert rl.projection_tests_commuting(frob) == (True, True, True)


def test_projection_criteria_agree_corpus_wide(corpus):
    for s in corpus:
        sa = rl.projection_tests_star_abelian(s)
        cm = rl.projection_tests_commuting(s)
        assert len(set(sa)) == 1, (s.label, sa)
        assert len(set(cm)) == 1, (s.label, cm)
        assert sa == cm, s.label


# --- the four characterizations -------------------------------------------------


def test_conditions_golden_values():
    z4 = rl.star_ring(rl.zn(4), "identity")
    assert rl.strongly_pi_star_regular_conditions(z4) == (True, True, True, True)
    assert rl.is_strongly_pi_star_regular(z4)

    frob = rl.star_ring(rl.gf4(), "frobenius")
    assert rl.strongly_pi_star_regular_conditions(frob) == (True, True, True, True)

    showcase = rl.showcase_ring()
    assert rl.strongly_pi_star_regular_conditions(showcase) == (
        False,
        False,
        False,
        False,
    )
    assert not rl.is_strongly_pi_star_regular(showcase)

    swap = rl.star_ring(rl.product(rl.zn(2), rl.zn(2)), "swap")
    assert rl.strongly_pi_star_regular_conditions(swap) == (False, False, False, False)

    m2 = rl.star_ring(rl.matrix_ring(rl.zn(2), 2), "transpose")
    assert rl.strongly_pi_star_regular_conditions(m2) == (False, False, False, False)


def test_conditions_agree_corpus_wide(corpus):
    for s in corpus:
        conds = rl.strongly_pi_star_regular_conditions(s)
        assert len(set(conds)) == 1, (s.label, conds)


def test_decomposition_witnesses_replay(corpus):
    for s in corpus:
        outcome = rl.condition_decomposition(s)
        for a, b, p, v in outcome.rows:
            ring = s.ring
            assert b in rl.nilpotents(ring)
            assert ring.mul(a, b) == ring.mul(b, a)
            assert p in rl.projections(s)
            assert v in rl.units(ring)
            pv = ring.mul(p, v)
            assert pv == ring.mul(v, p)
            assert ring.add(b, pv) == a


def test_ideal_power_witnesses_replay(corpus):
    for s in corpus:
        outcome = rl.condition_ideal_powers(s)
        for a, m, t in outcome.rows:
            ring = s.ring
            am = ring.pow(a, m)
            gen = ring.mul(ring.mul(am, s.star(am)), am)
            assert rl.principal_left_image(ring, am) == rl.principal_left_image(
                ring, gen
            )
            assert ring.mul(t, gen) == am


def test_star_ideal_witnesses_replay(corpus):
    for s in corpus:
        outcome = rl.condition_star_ideals(s)
        for a, n, e in outcome.rows:
            ring = s.ring
            an = ring.pow(a, n)
            left = rl.principal_left_image(ring, an)
            assert ring.mul(e, e) == e
            assert rl.principal_left_image(ring, s.star(an)) == left
            assert rl.principal_left_image(ring, e) == left


def test_star_ideal_swap_counterexample():
    swap = rl.star_ring(rl.product(rl.zn(2), rl.zn(2)), "swap")
    outcome = rl.condition_star_ideals(swap)
    assert not outcome.holds
    a = outcome.failing
    ring = swap.ring
    # no (n, e) works for the failing element; spot-check n = 1
    left = rl.principal_left_image(ring, a)
    right = rl.principal_left_image(ring, swap.star(a))
    assert left != right


def test_decomposition_failing_element_is_exhaustively_refuted():
    showcase = rl.showcase_ring()
    outcome = rl.condition_decomposition(showcase)
    assert not outcome.holds
    a = outcome.failing
    ring = showcase.ring
    for b in rl.nilpotents(ring):
        if ring.mul(a, b) != ring.mul(b, a):
            continue
        c = ring.sub(a, b)
        for p in rl.projections(showcase):
            for v in rl.units(ring):
                assert not (
                    ring.mul(p, v) == c and ring.mul(v, p) == c
                ), (a, b, p, v)


# --- strongly star clean ----------------------------------------------------------


def test_strongly_star_clean_small_golden():
    z2 = rl.star_ring(rl.zn(2), "identity")
    outcome = rl.is_strongly_star_clean(z2)
    assert outcome.holds
    assert outcome.rows == ((0, 1, 1), (1, 0, 1))

    z4 = rl.star_ring(rl.zn(4), "identity")
    assert rl.is_strongly_star_clean(z4).holds


def test_strongly_star_clean_witnesses_replay(corpus):
    for s in corpus:
        outcome = rl.is_strongly_star_clean(s)
        for a, e, u in outcome.rows:
            ring = s.ring
            assert e in rl.projections(s)
            assert u in rl.units(ring)
            assert ring.add(e, u) == a
            assert ring.mul(e, u) == ring.mul(u, e)


# --- cross-predicate implications -------------------------------------------------


def test_strongly_pi_regular_implies_pi_regular(reports):
    for label, report in reports.items():
        if report.strongly_pi_regular:
            assert report.pi_regular, label


def test_abelian_pi_regular_implies_strongly_pi_regular(reports):
    for label, report in reports.items():
        if report.abelian and report.pi_regular:
            assert report.strongly_pi_regular, label


def test_strongly_pi_star_regular_implies_strongly_star_clean(reports):
    for label, report in reports.items():
        if report.strongly_pi_star_regular:
            assert report.strongly_star_clean, label


def test_strongly_pi_star_regular_implies_projection_chain(reports):
    for label, report in reports.items():
        if report.strongly_pi_star_regular:
            assert report.idempotents_are_projections, label
        if report.idempotents_are_projections:
            assert report.abelian, label


def test_radical_quotient_equivalence_golden_and_corpus(corpus):
    by_label = {s.label: s for s in corpus}
    z4 = by_label["zn(4)[identity]"]
    assert rl.radical_quotient_equivalence(z4) == (True, True)
    showcase = by_label["upper_triangular(zn(2),2)[antidiagonal]"]
    assert rl.radical_quotient_equivalence(showcase) == (False, False)
    for s in corpus:
        lhs, rhs = rl.radical_quotient_equivalence(s)
        assert lhs == rhs, s.label


# --- equivalence breach machinery ---------------------------------------------------


def test_equivalence_breach_on_forced_disagreement(monkeypatch):
    s = rl.star_ring(rl.zn(4), "identity")
    import ringlab.predicates as predicates

    monkeypatch.setattr(
        predicates, "condition_projections", lambda _s: False
    )
    with pytest.raises(EquivalenceBreach):
        predicates.is_strongly_pi_star_regular(s)
    with pytest.raises(EquivalenceBreach):
        predicates.property_report(s)


# --- reports and replay ---------------------------------------------------------------


def test_report_fields_and_roundtrip(reports):
    for label, report in reports.items():
        doc = report.to_dict()
        again = rl.PropertyReport.from_dict(doc)
        assert again.to_dict() == doc
        assert set(doc["values"]) == {
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
        }
        assert doc["values"]["j_nil"] is True


def test_report_json_is_deterministic(corpus):
    s = corpus[0]
    assert rl.property_report(s).to_json() == rl.property_report(s).to_json()


def test_replay_report_clean_on_fresh(corpus):
    for s in corpus:
        report = rl.property_report(s)
        assert rl.replay_report(s, report) == []


def test_replay_report_catches_flipped_boolean(corpus):
    s = corpus[0]
    doc = rl.property_report(s).to_dict()
    doc["values"]["abelian"] = not doc["values"]["abelian"]
    tampered = rl.PropertyReport.from_dict(doc)
    problems = rl.replay_report(s, tampered)
    assert any("abelian" in p for p in problems)


def test_replay_report_catches_tampered_witness_row(corpus):
    s = next(c for c in corpus if c.label == "zn(4)[identity]")
    doc = rl.property_report(s).to_dict()
    rows = doc["details"]["pi_regular"]["rows"]
    # element 3 is a unit, so its witness 3 = 3*x*3 pins x = 3; break it
    assert rows[3] == [3, 1, 3]
    rows[3] = [3, 1, 0]
    tampered = rl.PropertyReport.from_dict(doc)
    problems = rl.replay_report(s, tampered)
    assert any("pi_regular" in p for p in problems)


def test_every_stored_witness_row_replays(corpus, reports):
    by_label = {s.label: s for s in corpus}
    for label, report in reports.items():
        s = by_label[label]
        for field_name, replayer in _REPLAYERS.items():
            payload = report.details.get(field_name)
            if isinstance(payload, dict):
                for row in payload.get("rows", ()):
                    assert replayer(s, tuple(row)), (label, field_name, row)
