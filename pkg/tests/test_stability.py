# Path: tests/test_stability.py
# Purpose: Slope reports, subsheaf ceilings and the implication evaluator.
# Layer: tests.

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement, product

import pytest

from core.models import CompleteIntersectionSpec
from core.stability import (
    Exceptional,
    ImplicationInput,
    StabilityVerdict,
    Tri,
    implication_verdict,
    is_fano,
    render_rational,
    slope_report,
    subsheaf_slope_ceiling,
)
from core.stability.implications import RULES


def test_cubic_threefold_is_stable():
    report = slope_report(CompleteIntersectionSpec(4, (3,)))
    assert report.degree == 3
    assert report.fano
    assert report.mu_omega == Fraction(-2)
    assert report.subsheaf_slope_bound == Fraction(-3)
    assert report.verdict is StabilityVerdict.STABLE
    assert len(report.ceilings) == 2 and all(c.certified for c in report.ceilings)


def test_quadric_is_excluded():
    report = slope_report(CompleteIntersectionSpec(4, (2,)))
    assert report.exceptional is Exceptional.QUADRIC
    assert report.verdict is StabilityVerdict.EXCLUDED_EXCEPTIONAL


def test_intersection_of_two_quadrics_is_stable():
    report = slope_report(CompleteIntersectionSpec(5, (2, 2)))
    assert report.degree == 4
    assert report.mu_omega == Fraction(-8, 3)
    assert report.subsheaf_slope_bound == Fraction(-4)
    assert report.verdict is StabilityVerdict.STABLE


@pytest.mark.parametrize(
    "n,degrees,reason",
    [(3, (3,), "dim < 3"), (4, (5,), "not Fano"), (3, (2,), "dim < 3")],
)
def test_gated_cases(n, degrees, reason):
    report = slope_report(CompleteIntersectionSpec(n, degrees))
    assert report.verdict is StabilityVerdict.NOT_APPLICABLE
    assert report.reason == reason


def test_projective_space_is_linear():
    report = slope_report(CompleteIntersectionSpec(4))
    assert report.exceptional is Exceptional.LINEAR
    assert report.verdict is StabilityVerdict.EXCLUDED_EXCEPTIONAL


def test_subsheaf_ceiling():
    ceiling = subsheaf_slope_ceiling(CompleteIntersectionSpec(4, (3,)), 2)
    assert ceiling.ceiling == Fraction(-3)
    assert [o.claim.query.t for o in ceiling.outcomes] == [1, 0, -1]
    assert ceiling.certified
    assert subsheaf_slope_ceiling(CompleteIntersectionSpec(5, (2, 2)), 1).ceiling == Fraction(-4)
    with pytest.raises(ValueError):
        subsheaf_slope_ceiling(CompleteIntersectionSpec(4, (3,)), 3)
    with pytest.raises(ValueError):
        subsheaf_slope_ceiling(CompleteIntersectionSpec(4, (3,)), 0)


def test_stability_inequality_exhaustive():
    checked = 0
    for n in range(4, 9):
        for c in range(1, n - 2):
            for degrees in combinations_with_replacement(range(2, 7), c):
                spec = CompleteIntersectionSpec(n, degrees)
                if not is_fano(spec) or spec.dim < 3 or (c == 1 and degrees[0] == 2):
                    continue
                report = slope_report(spec)
                assert -spec.degree < report.mu_omega < 0, spec.label()
                assert report.verdict is StabilityVerdict.STABLE, spec.label()
                checked += 1
    assert checked > 20


def test_report_is_permutation_invariant():
    a = slope_report(CompleteIntersectionSpec.normalized(7, [3, 2]))
    b = slope_report(CompleteIntersectionSpec.normalized(7, [2, 3]))
    assert a == b
    assert a.to_dict() == b.to_dict()


def test_mu_negative_iff_fano():
    for n in range(2, 8):
        for c in range(1, n):
            for degrees in combinations_with_replacement(range(2, 6), c):
                spec = CompleteIntersectionSpec(n, degrees)
                assert (slope_report(spec).mu_omega < 0) == is_fano(spec), spec.label()


def test_report_json_uses_rational_strings():
    payload = slope_report(CompleteIntersectionSpec(5, (2, 2))).to_dict(include_certificates=True)
    assert payload["mu_omega"] == "-8/3"
    assert payload["subsheaf_slope_bound"] == "-4/1"
    assert payload["ceilings"][0]["outcomes"][0]["status"] == "certified"
    assert render_rational(Fraction(6, 4)) == "3/2"


# Implications
def test_picard_one_rule():
    verdict = implication_verdict(
        ImplicationInput(picard_rank_one=True, separably_uniruled="yes", tangent_stable="yes")
    )
    assert verdict.src is Tri.YES
    assert verdict.rule == "picard-one-contrapositive"
    assert verdict.trace == ("picard_rank_one=true", "separably_uniruled=yes", "tangent_semistable=yes")
    assert verdict.rationally_connected is Tri.YES


def test_free_curves_rule():
    verdict = implication_verdict(
        ImplicationInput(fano=True, separably_uniruled="yes", n1_generated_by_free="yes", tangent_semistable="yes")
    )
    assert verdict.src is Tri.YES
    assert verdict.rule == "free-curves-semistable"


def test_nothing_known_is_unknown():
    verdict = implication_verdict(ImplicationInput())
    assert verdict.src is Tri.UNKNOWN
    assert verdict.rule is None and verdict.trace == ()


def test_inconsistent_input_rejected():
    with pytest.raises(ValueError):
        ImplicationInput(tangent_stable="yes", tangent_semistable="no")


def test_not_uniruled_is_not_src():
    verdict = implication_verdict(ImplicationInput(separably_uniruled=Tri.NO))
    assert verdict.src is Tri.NO
    assert verdict.rule == "src-requires-uniruled"


_BOOLEANS = ("picard_rank_one", "fano", "fano_complete_intersection_dim3")
_TRIS = ("separably_uniruled", "tangent_stable", "tangent_semistable", "n1_generated_by_free")


def test_implication_lattice_exhaustive():
    """Every yes has a rule whose premises all hold; removing any premise of that rule loses it."""

    checked = 0
    for bools in product((False, True), repeat=len(_BOOLEANS)):
        for tris in product(list(Tri), repeat=len(_TRIS)):
            values = dict(zip(_BOOLEANS, bools), **dict(zip(_TRIS, tris)))
            if values["tangent_stable"] is Tri.YES and values["tangent_semistable"] is Tri.NO:
                with pytest.raises(ValueError):
                    ImplicationInput(**values)
                continue
            data = ImplicationInput(**values)
            if values["tangent_stable"] is Tri.YES:
                assert data.tangent_semistable is Tri.YES
            verdict = implication_verdict(data)
            fired = [r for r in RULES if all(data.value_of(k) == v for k, v in r.premises)]
            checked += 1
            if not fired:
                assert verdict.src is Tri.UNKNOWN and verdict.rule is None
                continue
            assert verdict.rule == fired[0].id
            assert verdict.src is fired[0].conclusion
            assert len(verdict.trace) == len(fired[0].premises)
    assert checked == 2**3 * (3**4 - 3**2)


@pytest.mark.parametrize("rule_id", ["picard-one-contrapositive", "free-curves-semistable", "fano-ci-equivalence"])
def test_removing_a_premise_gives_unknown(rule_id):
    rule = next(r for r in RULES if r.id == rule_id)
    full = {name: (True if wanted == "true" else wanted) for name, wanted in rule.premises}
    assert implication_verdict(ImplicationInput(**full)).src is Tri.YES
    for name, wanted in rule.premises:
        reduced = dict(full)
        reduced[name] = False if wanted == "true" else "unknown"
        verdict = implication_verdict(ImplicationInput(**reduced))
        assert verdict.src is Tri.UNKNOWN, (rule_id, name)
