import pytest

from surgtorsion import obstruction
from surgtorsion.cyclotomic import CyclotomicNumber
from surgtorsion.exceptions import HypothesisError
from surgtorsion.obstruction import (CharacterSet, Evidence, KnotSide, ObstructionReport, Verdict, fits,
                                     judge_candidate, knot_side, obstruct)
from surgtorsion.representations import standard_representation, trivial_representation
from surgtorsion.seifert import parse_params, seifert_characters, seifert_invariant_set
from surgtorsion.surgery import ManifoldInvariantSet, root_units, slope
from surgtorsion.units import TorsionValue


@pytest.fixture(scope="module")
def lens_params():
    # H_1 = Z/5, four characters, two invariant sets (u and -u agree)
    return parse_params("2/1, 3/1")


def _seifert_sets(params, group, rep):
    return {chi: seifert_invariant_set(params, group, rep, chi).values for chi in seifert_characters(params)}


def _rational(order, n, rep):
    return TorsionValue.of(CyclotomicNumber.rational(order, n), root_units(order, rep))


def test_class_counts_separate(a4):
    params = parse_params("2/1, 3/1, 3/1")
    side = KnotSide("A4", 0, ())
    verdict = judge_candidate(params, [side], [a4], [trivial_representation(a4, 1)])
    assert verdict.verdict is Verdict.INCOMPATIBLE
    assert verdict.witness.startswith("#S(M, A4)")
    assert verdict.evidence[0].status is Evidence.SEPARATED


def test_matching_sets_are_compatible(lens_params, trivial, trivial_rep):
    sets = _seifert_sets(lens_params, trivial, trivial_rep)
    assert len(set(sets.values())) == 2
    side = KnotSide("trivial", 1, tuple(CharacterSet(f"mu->z^{u}", v) for u, v in enumerate(sets.values(), 1)))
    verdict = judge_candidate(lens_params, [side], [trivial], [trivial_rep])
    assert verdict.verdict is Verdict.COMPATIBLE_SO_FAR
    assert verdict.evidence[0].status is Evidence.MATCHED


def test_different_sets_are_incompatible(lens_params, trivial, trivial_rep):
    side = KnotSide("trivial", 1, (CharacterSet("mu->z^1", (_rational(5, 29, trivial_rep),)),))
    verdict = judge_candidate(lens_params, [side], [trivial], [trivial_rep])
    assert verdict.verdict is Verdict.INCOMPATIBLE
    assert "{29} not in" in verdict.witness
    record = verdict.as_record()
    assert record["verdict"] == "INCOMPATIBLE"
    assert record["groups"] == {"trivial": {"knot": 1, "seifert": 1, "status": "separated"}}


def test_a_seifert_set_missing_on_the_knot_side_separates(lens_params, trivial, trivial_rep):
    sets = _seifert_sets(lens_params, trivial, trivial_rep)
    first = seifert_characters(lens_params)[0]
    side = KnotSide("trivial", 1, (CharacterSet("mu->z^1", sets[first]),))
    verdict = judge_candidate(lens_params, [side], [trivial], [trivial_rep])
    assert verdict.verdict is Verdict.INCOMPATIBLE
    assert " gives " in verdict.witness


def test_hypothesis_violations_leave_the_candidate_open(trivial, trivial_rep):
    # H_1 is trivial, so the only character sends the fibre to 1
    params = parse_params("2/1, 3/-2")
    verdict = judge_candidate(params, [KnotSide("trivial", 1, (CharacterSet("mu->z^1", ()),))],
                              [trivial], [trivial_rep])
    assert verdict.verdict is Verdict.COMPATIBLE_SO_FAR
    assert verdict.evidence[0].status is Evidence.UNRESOLVED
    assert "det(rho(x) - I) vanishes" in verdict.witness


def test_a_violating_knot_character_does_not_hide_a_separating_one(lens_params, trivial, trivial_rep):
    partial = CharacterSet("mu->z^1", (), ("[(), ()]: det(z phi(h) - I) = 0",))
    complete = CharacterSet("mu->z^2", (_rational(5, 29, trivial_rep),))
    verdict = judge_candidate(lens_params, [KnotSide("trivial", 1, (partial, complete))], [trivial], [trivial_rep])
    assert verdict.verdict is Verdict.INCOMPATIBLE
    assert "{29} not in" in verdict.witness
    assert any("mu->z^1" in n for n in verdict.evidence[0].notes)


def test_a_violating_seifert_character_does_not_hide_a_separating_one(monkeypatch, lens_params, trivial,
                                                                      trivial_rep):
    sets = _seifert_sets(lens_params, trivial, trivial_rep)
    chars = seifert_characters(lens_params)
    first = chars[0]
    twin = next(chi for chi in chars[1:] if sets[chi] == sets[first])
    computed = obstruction.seifert_invariant_set

    def twin_violates(params, group, rep, chi, classes=None, verify=False):
        if chi == twin:
            return ManifoldInvariantSet(violations=["[(), (), ()]: det(rho(x) - I) vanishes"])
        return computed(params, group, rep, chi, classes, verify)

    monkeypatch.setattr(obstruction, "seifert_invariant_set", twin_violates)
    side = KnotSide("trivial", 1, (CharacterSet("mu->z^1", sets[first]),))
    verdict = judge_candidate(lens_params, [side], [trivial], [trivial_rep])
    assert verdict.verdict is Verdict.INCOMPATIBLE
    assert " gives " in verdict.witness
    assert any("vanishes" in n for n in verdict.evidence[0].notes)


def test_groups_without_classes_on_either_side_are_vacuous(lens_params, a5, a5_standard):
    verdict = judge_candidate(lens_params, [KnotSide("A5", 0, ())], [a5], [a5_standard])
    assert verdict.verdict is Verdict.COMPATIBLE_SO_FAR
    evidence = verdict.evidence[0]
    assert evidence.status is Evidence.VACUOUS
    assert (evidence.knot_count, evidence.seifert_count) == (0, 0)
    assert "no classes on either side" in verdict.witness


def test_non_cyclic_homology_is_incompatible(trivial, trivial_rep):
    # H_1 = Z/2 + Z/6
    verdict = judge_candidate(parse_params("2,2,2"), [KnotSide("trivial", 1, ())], [trivial], [trivial_rep])
    assert verdict.verdict is Verdict.INCOMPATIBLE
    assert "not cyclic" in verdict.witness
    assert verdict.evidence == ()


def test_fits(trivial_rep):
    one, two = _rational(5, 1, trivial_rep), _rational(5, 2, trivial_rep)
    a = CharacterSet("a", (one,))
    ab = CharacterSet("ab", (one, two))
    partial_a = CharacterSet("a?", (one,), ("violation",))
    partial_b = CharacterSet("b?", (two,), ("violation",))
    assert fits(a, a)
    assert not fits(a, ab)
    assert fits(ab, partial_a)
    assert fits(partial_a, ab)
    assert not fits(a, partial_b)
    assert not fits(partial_b, a)
    assert fits(partial_a, partial_b)


def test_knot_side_of_a_lens_surgery(unknot_group, trivial, trivial_rep):
    side = knot_side(unknot_group, slope(5, 1), trivial, trivial_rep)
    assert side.count == 1
    assert len(side.characters) == 4
    assert [c.label for c in side.characters] == ["mu->z^1", "mu->z^2", "mu->z^3", "mu->z^4"]
    assert len(side.values) == 1
    assert all(c.complete for c in side.characters)
    assert not side.violations


def test_explicit_candidates_are_filtered_and_deduplicated(unknot_group, trivial, trivial_rep):
    candidates = [parse_params("2/1, 3/1"), parse_params("2/1, 2/1"), parse_params("2/1, 3/1")]
    report = obstruct(unknot_group, slope(5, 1), [trivial], [trivial_rep], candidates=candidates)
    assert [str(c.params) for c in report.candidates] == ["2/1,3/1"]
    assert report.table().splitlines()[0] == "unknot(5/1)"


def test_groups_and_representations_must_pair_up(unknot_group, trivial, trivial_rep):
    with pytest.raises(HypothesisError):
        obstruct(unknot_group, slope(5, 1), [trivial, trivial], [trivial_rep])


def test_slope_with_infinite_homology_is_rejected(unknot_group, trivial, trivial_rep):
    with pytest.raises(HypothesisError):
        obstruct(unknot_group, slope(0, 1), [trivial], [trivial_rep])


def test_empty_report_table():
    report = ObstructionReport("unknot", slope(5, 1), ())
    assert report.table() == "unknot(5/1): no candidates"
    assert report.as_records() == []


def test_parallel_and_serial_runs_agree(unknot_group, trivial, trivial_rep):
    args = (unknot_group, slope(5, 1), [trivial], [trivial_rep])
    serial = obstruct(*args, bound=5, m=2)
    parallel = obstruct(*args, bound=5, m=2, workers=2)
    assert serial.candidates
    assert serial.candidates == parallel.candidates
    assert serial.as_records() == parallel.as_records()


@pytest.mark.slow
def test_kt_six_surgery_is_not_the_candidate_seifert_space(kt, a4, a5, a5_standard):
    candidate = parse_params("3/2, -3, -5")
    report = obstruct(kt, slope(6, 1), [a4, a5], [standard_representation(a4), a5_standard],
                      candidates=[candidate])
    assert [s.count for s in report.knot_sides] == [0, 2]
    assert report.candidates[0].verdict is Verdict.INCOMPATIBLE
    assert report.obstructed


@pytest.mark.slow
def test_kt_six_surgery_is_not_a_small_seifert_space(kt, a4, a5, a5_standard):
    report = obstruct(kt, slope(6, 1), [a4, a5], [standard_representation(a4), a5_standard], bound=16)
    assert [s.count for s in report.knot_sides] == [0, 2]
    assert len(report.candidates) == 484
    assert all(c.verdict is Verdict.INCOMPATIBLE for c in report.candidates)
    assert report.obstructed
    # the class counts leave 16 candidates, all told apart by their A5 torsion
    by_torsion = [c for c in report.candidates if not c.witness.startswith("#S")]
    assert len(by_torsion) == 16
    for c in by_torsion:
        assert [e.status for e in c.evidence] == [Evidence.VACUOUS, Evidence.SEPARATED]
        assert c.evidence[1].seifert_count == 2
        assert c.witness.startswith("A5: ")
