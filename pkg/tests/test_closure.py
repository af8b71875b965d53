import pytest

from verbclosure.core.errors import ArityMismatch, CarrierMismatch, TargetNotInK, VerificationFailed
from verbclosure.models import Ball, Carrier, DihedralElt, Equation, GElt, KleinElt, SolutionTuple, VFour
from verbclosure.models.dihedral import A_PRIME, B_PRIME
from verbclosure.models.klein import B
from verbclosure.schemas.certificate import Certificate
from verbclosure.schemas.probe import ProbeConfig
from verbclosure.services import closure
from verbclosure.services.closure import (
    PrefixEvaluator,
    TransferPlan,
    b2_closure_check,
    brute_force_solve,
    case4_chain,
    case4_lift,
    check_square_law,
    dihedral_solve,
    no_retraction_certificate,
    probe_verbal_closedness,
    scan_involutions_K,
    solution_atlas,
    transfer_plan,
    transfer_solution,
)
from verbclosure.services.freewords import enumerate_reduced_words
from verbclosure.services.groups import evaluate_word
from verbclosure.services.maps import embed_K


def test_transfer_square_with_d1(word):
    report = transfer_solution(word("x^2"), [GElt(VFour.D1, 1, (2, 0, 0))])
    assert report.target == KleinElt(2, 0)
    assert report.perm.is_identity
    assert tuple(report.hat) == (KleinElt(1, 2),)
    assert tuple(report.k_solution) == (KleinElt(1, 2),)
    assert report.verified
    assert all(holds for _, holds in report.bookkeeping)


def test_transfer_renames_d2_to_d1(word):
    report = transfer_solution(word("x^2"), [GElt(VFour.D2, 1, (0, 2, 0))])
    assert str(report.perm) == "(2 1 3)"
    assert report.renamed_x == GElt(VFour.D1, 1, (2, 0, 0))
    assert tuple(report.k_solution) == (KleinElt(1, 2),)
    assert report.verified


def test_transfer_fixes_k(word):
    report = transfer_solution(word("x"), [embed_K(B)])
    assert tuple(report.k_solution) == (B,)


def test_transfer_two_variables(word):
    w = word("x^2 y^2")
    values = [GElt(VFour.D3, 1, (1, 1, 0)), GElt(VFour.E, 0, (0, 0, 1))]
    h = evaluate_word(w, values)
    report = transfer_solution(w, values)
    assert report.m == 2
    assert str(report.perm) == "(3 2 1)"
    assert tuple(report.k_solution) == (KleinElt(1, 0), KleinElt(0, 1))
    assert evaluate_word(w, report.k_solution) == report.target
    assert embed_K(report.target) == h


def test_transfer_plan_is_shared_across_tuples(word):
    w = word("x^2 y^2")
    plan = transfer_plan(w)
    assert isinstance(plan, TransferPlan)
    assert transfer_plan(w) is plan
    assert plan.m == 2
    values = [GElt(VFour.D3, 1, (1, 1, 0)), GElt(VFour.E, 0, (0, 0, 1))]
    with_plan = transfer_solution(w, values, plan)
    without = transfer_solution(w, values)
    assert with_plan.k_solution == without.k_solution
    assert with_plan.renamed == without.renamed
    assert plan.evaluate(values) == evaluate_word(w, values)


def test_transfer_rejects_plan_for_another_word(word):
    with pytest.raises(ArityMismatch):
        transfer_solution(word("x^2"), [embed_K(B)], transfer_plan(word("x^3")))


def test_transfer_rejects_targets_outside_k(word):
    with pytest.raises(TargetNotInK):
        transfer_solution(word("x"), [GElt(VFour.D1)])
    with pytest.raises(CarrierMismatch):
        transfer_solution(word("x"), [KleinElt(1, 0)])


def test_transfer_verification_failure_carries_report(word, monkeypatch):
    monkeypatch.setattr(closure, "hat_subst", lambda g: KleinElt(g.l + g.d.delta + 1, g.k[0]))
    with pytest.raises(VerificationFailed) as excinfo:
        transfer_solution(word("x"), [embed_K(B)])
    assert not excinfo.value.report.verified


def test_brute_force_first_solution(word):
    eq = Equation(word("x^2"), Carrier.K, KleinElt(2, 0))
    assert tuple(brute_force_solve(eq, Ball(Carrier.K, 2, 2), 1)) == (KleinElt(1, -2),)


def test_brute_force_not_found(word):
    eq = Equation(word("x^2"), Carrier.K, KleinElt(0, 1))
    assert brute_force_solve(eq, Ball(Carrier.K, 3, 3), 1) is None


def test_brute_force_identity_word_is_target(word):
    target = GElt(VFour.D2, 1, (0, 1, -1))
    eq = Equation(word("x"), Carrier.G, target)
    assert tuple(brute_force_solve(eq, Ball(Carrier.G, 1, 1), 1)) == (target,)


def test_brute_force_rejects_wrong_ball(word):
    eq = Equation(word("x"), Carrier.K, B)
    with pytest.raises(CarrierMismatch):
        brute_force_solve(eq, Ball(Carrier.D, 0, 1), 1)


def test_equation_checks_target_carrier(word):
    with pytest.raises(CarrierMismatch):
        Equation(word("x"), Carrier.K, DihedralElt(1, 0))


def test_prefix_evaluator_matches_direct_evaluation():
    words = enumerate_reduced_words(3, 2)
    values = [KleinElt(1, 2), KleinElt(-1, 3)]
    got = PrefixEvaluator(words).evaluate(values)
    assert got == [evaluate_word(w, values) for w in words]


def test_solution_atlas_agrees_with_brute_force():
    words = enumerate_reduced_words(2, 2)
    ball = Ball(Carrier.K, 1, 1)
    atlas = solution_atlas(words, ball)
    for w in words:
        for target in Ball(Carrier.K, 2, 2):
            found = brute_force_solve(Equation(w, Carrier.K, target), ball, 2)
            if found is None:
                assert target not in atlas[w]
            else:
                assert atlas[w][target] == found


def test_dihedral_trivial(word):
    answer = dihedral_solve(Equation(word("x y^3"), Carrier.D, DihedralElt.identity()))
    assert answer.case == "trivial"
    assert not answer.searched
    assert tuple(answer.values) == (DihedralElt.identity(),) * 2


def test_dihedral_reflection_odd_sum(word):
    w = word("x^2 y")
    answer = dihedral_solve(Equation(w, Carrier.D, B_PRIME))
    assert answer.case == "reflection"
    assert not answer.searched
    assert tuple(answer.values) == (DihedralElt.identity(), B_PRIME)

    shifted = dihedral_solve(Equation(w, Carrier.D, DihedralElt(1, 3)))
    assert evaluate_word(w, shifted.values) == DihedralElt(1, 3)


def test_dihedral_rotation_search(word):
    answer = dihedral_solve(Equation(word("x^2"), Carrier.D, A_PRIME ** 2), Ball(Carrier.D, 0, 5))
    assert answer.case == "rotation"
    assert answer.searched
    assert tuple(answer.values) == (A_PRIME,)
    assert isinstance(answer.certificate, Certificate)
    assert answer.certificate.verify()


def test_dihedral_even_reflection_falls_through(word):
    answer = dihedral_solve(Equation(word("x^2"), Carrier.D, B_PRIME))
    assert answer.case == "reflection-even"
    assert not answer.found


def test_case4_lift(word):
    assert case4_lift(word("x^2")) == word("[y, x^4]")


def test_case4_chain_replays(word):
    w = word("x y x^-1 y")
    values = SolutionTuple((DihedralElt(0, 1), DihedralElt(0, 2)))
    cert = case4_chain(w, values)
    assert cert.verify()
    assert [s.check_id for s in cert.steps][-1] == "quotient-solution"


def test_probe_small():
    report = probe_verbal_closedness(ProbeConfig(max_len=2, g_lmax=1, g_kmax=1, k_lmax=4, k_kmax=8))
    assert report.ok
    assert report.result["words"] == len(enumerate_reduced_words(2, 2))
    assert report.result["cases_in_K"] > 0
    assert report.result["transfers_verified"] == report.result["cases_in_K"]


def test_probe_witnesses_for_square():
    report = probe_verbal_closedness(ProbeConfig(words=["x^2"], g_lmax=1, g_kmax=2, witnesses_per_word=20))
    assert report.ok
    samples = report.witness["transfers"]["x^2"]
    assert "b^2" in samples


def test_probe_empty_word_list():
    report = probe_verbal_closedness(ProbeConfig(words=[]))
    assert report.checks == []
    assert report.result["words"] == 0


@pytest.mark.slow
def test_probe_acceptance_bounds():
    report = probe_verbal_closedness(ProbeConfig(max_len=4, g_lmax=1, g_kmax=1, k_lmax=4, k_kmax=8))
    assert report.ok, [c for c in report.checks if not c.passed]
    assert report.result["words"] == 161


def test_no_retraction_certificate():
    cert = no_retraction_certificate()
    assert cert.verify()
    assert cert.steps[0].witness["solutions_of_g2_eq_1"] == ["1"]
    assert cert.steps[-1].witness["a"] == "a"
    assert scan_involutions_K(10) == [KleinElt.identity()]


@pytest.mark.parametrize(
    "group, ball",
    [(Carrier.G, Ball(Carrier.G, 1, 1)), (Carrier.K, Ball(Carrier.K, 3, 3)), (Carrier.D, Ball(Carrier.D, 0, 5))],
)
def test_square_law(group, ball):
    assert check_square_law(group, ball)


def test_square_law_in_z_times_dihedral():
    # ℤ×D∞ squares lie in ℤ×⟨a′⟩, so the law holds there as well
    assert check_square_law(Carrier.ZD, Ball(Carrier.ZD, 1, 2))


def test_b2_closure():
    report = b2_closure_check(Ball(Carrier.G, 2, 1))
    assert report.ok
    assert report.result["closure_in_K"] == ["b^-2", "1", "b^2"]
    assert b2_closure_check([]).ok
