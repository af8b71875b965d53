"""
Invariant suites run by the `selfcheck` command.

Each suite is registered under a name and writes its checks into its own
Report; run_selfcheck merges them as "<suite>.<check>". A suite that raises
is logged and recorded as a failed check, never propagated.
"""
import logging
import random
import time
from itertools import product
from typing import Callable, Dict, Iterable, List, Optional, Sequence

from verbclosure.core.config import BoundsProfile, settings
from verbclosure.core.errors import NotInDomain, NotInSubgroup
from verbclosure.core.grammar import parse_element, parse_word
from verbclosure.models.ball import Ball
from verbclosure.models.carrier import Carrier
from verbclosure.models.dihedral import A_PRIME, B_PRIME, DihedralElt
from verbclosure.models.equation import Equation
from verbclosure.models.gelt import A1, A2, A3, B_G, D1, D2, D3, GElt, IndexPerm, VFour
from verbclosure.models.klein import A, B, KleinElt
from verbclosure.models.word import FreeAut, FreeWord, NielsenMove, free_reduce
from verbclosure.schemas.probe import ProbeConfig
from verbclosure.schemas.report import Report
from verbclosure.services.closure import (
    b2_closure_check,
    check_square_law,
    dihedral_solve,
    no_retraction_certificate,
    probe_verbal_closedness,
    scan_involutions_K,
    solution_atlas,
    transfer_solution,
)
from verbclosure.services.freewords import (
    aut_apply,
    enumerate_reduced_words,
    exponent_gcd,
    in_commutator_subgroup,
    nielsen_normalize,
    reduce,
)
from verbclosure.services.groups import (
    abelianize_K,
    b_conjugation_commutator,
    centralizes_squares_K,
    commutator,
    evaluate_word,
    is_square_K,
    square_roots,
    unique_sqrt_K,
)
from verbclosure.services.maps import (
    decompose_K,
    deg_hom,
    embed_K,
    f_from_generators,
    f_hom,
    hat_from_generators,
    hat_subst,
    in_H,
    perm_aut,
    phi,
    phi_inv_on_K,
    pi_quotient,
    rho_retract,
)

logger = logging.getLogger(__name__)

Suite = Callable[[BoundsProfile, random.Random, Report], None]

SUITES: Dict[str, Suite] = {}


def suite(name: str) -> Callable[[Suite], Suite]:
    def register(fn: Suite) -> Suite:
        SUITES[name] = fn
        return fn
    return register


def random_word(rng: random.Random, arity: int, max_len: int) -> FreeWord:
    length = rng.randint(0, max_len)
    raw = [(rng.randint(1, arity), rng.choice((1, -1))) for _ in range(length)]
    return FreeWord(free_reduce(raw), arity)


def random_aut(rng: random.Random, arity: int, max_moves: int = 8) -> FreeAut:
    moves = []
    for _ in range(rng.randint(0, max_moves)):
        kind = "invert" if arity == 1 else rng.choice(("swap", "invert", "multiply"))
        i, j = rng.sample(range(1, arity + 1), 2) if arity > 1 else (1, 0)
        if kind == "invert":
            moves.append(NielsenMove("invert", i))
        elif kind == "swap":
            moves.append(NielsenMove("swap", i, j))
        else:
            moves.append(NielsenMove("multiply", i, j, rng.choice((1, -1))))
    return FreeAut(tuple(moves), arity)


def _failures(items: Iterable, predicate: Callable[..., bool], limit: int = 5) -> List[str]:
    bad = []
    for item in items:
        if not predicate(item):
            bad.append(str(item))
            if len(bad) >= limit:
                break
    return bad


def _law(report: Report, name: str, items: Iterable, predicate: Callable[..., bool]) -> bool:
    bad = _failures(items, predicate)
    return report.check(name, not bad, "counterexamples: " + "; ".join(bad) if bad else "")


def _balls(bounds: BoundsProfile) -> Dict[Carrier, Ball]:
    return {
        Carrier.K: Ball(Carrier.K, bounds.k_lmax, bounds.k_kmax),
        Carrier.D: Ball(Carrier.D, 0, bounds.dihedral_kmax),
        Carrier.G: Ball(Carrier.G, bounds.g_lmax, bounds.g_kmax),
        Carrier.ZD: Ball(Carrier.ZD, bounds.k_lmax, bounds.k_kmax),
    }


@suite("nielsen")
def nielsen_suite(bounds: BoundsProfile, rng: random.Random, report: Report) -> None:
    words = [
        random_word(rng, rng.randint(1, bounds.nielsen_max_arity), bounds.nielsen_max_length)
        for _ in range(bounds.random_samples)
    ]
    forms = {w: nielsen_normalize(w) for w in words}

    def normal_form(w: FreeWord) -> bool:
        m, u, alpha = forms[w]
        return alpha.apply(w) == FreeWord.generator(1, w.arity) ** m * u

    def round_trip(w: FreeWord) -> bool:
        alpha = forms[w].alpha
        inverse = alpha.inverse()
        return all(
            alpha.apply(inverse.generator_image(j)) == FreeWord.generator(j, w.arity)
            for j in range(1, w.arity + 1)
        )

    _law(report, "normal-form", words, normal_form)
    _law(report, "u-in-commutator-subgroup", words, lambda w: in_commutator_subgroup(forms[w].u))
    _law(report, "m-is-gcd", words, lambda w: forms[w].m == exponent_gcd(w))
    _law(report, "alpha-inverse", words, round_trip)

    pairs = [(w, random_aut(rng, w.arity)) for w in words[: max(1, bounds.random_samples // 4)]]
    _law(report, "gcd-invariant", pairs, lambda p: exponent_gcd(aut_apply(p[1], p[0])) == exponent_gcd(p[0]))
    _law(report, "random-aut-round-trip", pairs, lambda p: aut_apply(p[1].inverse(), aut_apply(p[1], p[0])) == p[0])
    raw = [
        [(rng.randint(1, 4), rng.choice((-2, -1, 1, 2))) for _ in range(rng.randint(0, bounds.nielsen_max_length))]
        for _ in range(max(1, bounds.random_samples // 4))
    ]
    _law(report, "reduce-idempotent", [reduce(letters) for letters in raw], lambda w: reduce(w.letters, w.arity) == w)
    report.result = {"words": len(words)}


@suite("group-axioms")
def group_axioms_suite(bounds: BoundsProfile, rng: random.Random, report: Report) -> None:
    samples = max(1, bounds.random_samples // 4)
    for carrier, ball in _balls(bounds).items():
        elements = tuple(ball)
        identity = elements[0].identity()
        triples = [tuple(rng.choice(elements) for _ in range(3)) for _ in range(samples)]
        _law(report, f"{carrier.value}-associative", triples, lambda t: (t[0] * t[1]) * t[2] == t[0] * (t[1] * t[2]))
        _law(report, f"{carrier.value}-identity", elements, lambda g: g * identity == g == identity * g)
        _law(report, f"{carrier.value}-inverse", elements, lambda g: (g * g.inverse()).is_identity and (g.inverse() * g).is_identity)
        pairs = [(rng.choice(elements), rng.randint(-6, 6)) for _ in range(samples)]
        _law(report, f"{carrier.value}-power", pairs, lambda p: p[0] ** p[1] == _naive_power(p[0], p[1]))

    report.check("K-relation", A.conjugate(B) == A.inverse(), f"a^b = {A.conjugate(B)}")
    d_conjugate = B_PRIME.inverse() * A_PRIME * B_PRIME
    report.check("D-relation", d_conjugate == A_PRIME.inverse() and (B_PRIME * B_PRIME).is_identity,
                 f"a′^b′ = {d_conjugate}")
    report.check("G-relations", all(a.conjugate(B_G) == a.inverse() for a in (A1, A2, A3))
                 and all((d * d).is_identity for d in (D1, D2, D3)),
                 "a_i^b = a_i⁻¹ and d_i² = 1")


def _naive_power(g, n: int):
    result = g.identity()
    step = g if n >= 0 else g.inverse()
    for _ in range(abs(n)):
        result = result * step
    return result


@suite("square-law")
def square_law_suite(bounds: BoundsProfile, rng: random.Random, report: Report) -> None:
    balls = _balls(bounds)
    for carrier in (Carrier.G, Carrier.K, Carrier.D):
        report.check(f"{carrier.value}-law", check_square_law(carrier, balls[carrier]), str(balls[carrier]))
    closure = b2_closure_check(Ball(Carrier.G, max(2, bounds.g_lmax), bounds.g_kmax))
    for check in closure.checks:
        report.check(check.name, check.passed, check.detail)


@suite("squares")
def squares_suite(bounds: BoundsProfile, rng: random.Random, report: Report) -> None:
    ball = tuple(Ball(Carrier.K, bounds.squares_lmax, bounds.squares_kmax))
    _law(report, "is-square-matches-search", ball, lambda g: is_square_K(g) == bool(square_roots(g, ball)))

    n = bounds.sqrt_bound
    pairs = list(product(range(-n, n + 1), repeat=2))

    def unique_root(pair) -> bool:
        m, k = pair
        g = KleinElt(4 * m, 2 * k)
        root = unique_sqrt_K(g)
        # a root of b^(4m) must have b-exponent 2m
        candidates = [KleinElt(2 * m, j) for j in range(-2 * n - 1, 2 * n + 2)]
        return root == KleinElt(2 * m, k) and root * root == g and square_roots(g, candidates) == (root,)

    _law(report, "unique-sqrt", pairs, unique_root)

    b2 = B ** 2
    try:
        unique_sqrt_K(b2)
        rejected = False
    except NotInDomain:
        rejected = True
    roots = square_roots(b2, ball)
    report.check("b2-rejected", rejected and len(roots) > 1, f"{len(roots)} roots of b² in the ball")

    squares = {g * g for g in ball}
    _law(report, "centralizer-of-squares", ball,
         lambda g: centralizes_squares_K(g) == all(commutator(g, s).is_identity for s in squares))
    _law(report, "squares-even-degree", squares, lambda s: s.l % 2 == 0)
    report.check("b-not-product-of-squares", B.l % 2 == 1 and all(abelianize_K(s)[1] % 2 == 0 for s in squares),
                 "deg b = 1, every square has even degree")


def _abelian_sum(g: KleinElt, h: KleinElt):
    (s, i), (t, j) = abelianize_K(g), abelianize_K(h)
    return ((s + t) % 2, i + j)


@suite("homomorphisms")
def homomorphism_suite(bounds: BoundsProfile, rng: random.Random, report: Report) -> None:
    g_ball = tuple(Ball(Carrier.G, bounds.g_lmax, bounds.g_kmax))
    k_ball = tuple(Ball(Carrier.K, bounds.k_lmax, bounds.k_kmax))
    g_pairs = list(product(g_ball, repeat=2))
    k_pairs = list(product(k_ball, repeat=2))

    _law(report, "f", g_pairs, lambda p: f_hom(p[0] * p[1]) == f_hom(p[0]) * f_hom(p[1]))
    _law(report, "deg", g_pairs, lambda p: deg_hom(p[0] * p[1]) == deg_hom(p[0]) + deg_hom(p[1]))
    _law(report, "phi", g_pairs, lambda p: phi(p[0] * p[1]) == phi(p[0]) * phi(p[1]))
    _law(report, "pi", k_pairs, lambda p: pi_quotient(p[0] * p[1]) == pi_quotient(p[0]) * pi_quotient(p[1]))
    _law(report, "embed", k_pairs, lambda p: embed_K(p[0] * p[1]) == embed_K(p[0]) * embed_K(p[1]))
    _law(report, "abelianize", k_pairs, lambda p: abelianize_K(p[0] * p[1]) == _abelian_sum(p[0], p[1]))
    _law(report, "commutators-in-a2", k_pairs, lambda p: abelianize_K(commutator(*p)) == (0, 0))

    _law(report, "f-generator-images", g_ball, lambda g: f_from_generators(g) == f_hom(g))
    _law(report, "hat-generator-images", g_ball, lambda g: hat_from_generators(g) == hat_subst(g))
    _law(report, "hat-preserves-f", g_ball, lambda g: f_hom(embed_K(hat_subst(g))) == f_hom(g))
    _law(report, "hat-fixes-K", k_ball, lambda e: hat_subst(embed_K(e)) == e)
    _law(report, "decompose-embed", k_ball, lambda e: decompose_K(embed_K(e)) == e)

    injective = tuple(Ball(Carrier.K, bounds.injectivity_bound, bounds.injectivity_bound))
    images = {phi(embed_K(e)) for e in injective}
    report.check("phi-injective-on-K", len(images) == len(injective), f"{len(images)} images of {len(injective)} elements")
    _law(report, "phi-inverse", injective, lambda e: phi_inv_on_K(phi(embed_K(e))) == e)

    n = bounds.commutator_bound
    _law(report, "b-commutator", product(range(-n, n + 1), repeat=2),
         lambda km: b_conjugation_commutator(*km) == KleinElt(0, 4 * km[0]))


@suite("retraction")
def retraction_suite(bounds: BoundsProfile, rng: random.Random, report: Report) -> None:
    g_ball = tuple(Ball(Carrier.G, bounds.g_lmax, bounds.g_kmax))
    h_ball = [g for g in g_ball if in_H(g)]
    pairs = [(rng.choice(h_ball), rng.choice(h_ball)) for _ in range(bounds.random_samples)]
    _law(report, "rho-homomorphism", pairs, lambda p: rho_retract(p[0] * p[1]) == rho_retract(p[0]) * rho_retract(p[1]))
    k_ball = Ball(Carrier.K, bounds.injectivity_bound, bounds.injectivity_bound)
    _law(report, "rho-fixes-K", k_ball, lambda e: rho_retract(embed_K(e)) == e)
    _law(report, "index-two", g_ball, lambda g: in_H(g) != in_H(D2 * g))

    outside = next(g for g in g_ball if not in_H(g))
    try:
        rho_retract(outside)
        raised = False
    except NotInSubgroup:
        raised = True
    report.check("rho-outside-H", raised, f"ρ({outside}) raises NotInSubgroup")

    perms = [IndexPerm(images) for images in ((1, 2, 3), (2, 1, 3), (3, 2, 1), (1, 3, 2), (2, 3, 1), (3, 1, 2))]
    triples = [(rng.choice(perms), rng.choice(g_ball), rng.choice(g_ball)) for _ in range(bounds.random_samples)]
    _law(report, "perm-automorphism", triples,
         lambda t: perm_aut(t[0], t[1] * t[2]) == perm_aut(t[0], t[1]) * perm_aut(t[0], t[2]))
    _law(report, "perm-fixes-K", product(perms, k_ball), lambda pe: perm_aut(pe[0], embed_K(pe[1])) == embed_K(pe[1]))


@suite("transfer")
def transfer_suite(bounds: BoundsProfile, rng: random.Random, report: Report) -> None:
    x2 = FreeWord(((1, 2),), 1)
    examples = [
        (x2, GElt(VFour.D1, 1, (2, 0, 0)), KleinElt(1, 2)),
        (x2, GElt(VFour.D2, 1, (0, 2, 0)), KleinElt(1, 2)),
        (FreeWord.generator(1, 1), embed_K(B), B),
    ]
    for i, (word, value, expected) in enumerate(examples, 1):
        result = transfer_solution(word, [value])
        report.check(f"example-{i}", result.verified and tuple(result.k_solution) == (expected,),
                     f"{word} at {value} -> {result.k_solution}")

    probe = probe_verbal_closedness(ProbeConfig(
        max_len=bounds.word_maxlen,
        g_lmax=bounds.g_lmax,
        g_kmax=bounds.g_kmax,
        k_lmax=bounds.oracle_lmax,
        k_kmax=bounds.oracle_kmax,
        witnesses_per_word=0,
    ))
    for check in probe.checks:
        report.check(f"probe-{check.name}", check.passed, check.detail)
    report.result = dict(probe.result)


@suite("dihedral")
def dihedral_suite(bounds: BoundsProfile, rng: random.Random, report: Report) -> None:
    ball = Ball(Carrier.D, 0, bounds.dihedral_kmax)
    words = enumerate_reduced_words(bounds.word_maxlen, 2)
    targets = [DihedralElt.identity(), B_PRIME, B_PRIME * A_PRIME] + [A_PRIME ** e for e in (1, -1, 2, -2)]
    atlas = solution_atlas(words, ball)

    misses: List[str] = []
    wrong: List[str] = []
    closed_form = True
    certificates = True
    solved = 0
    for word, target in product(words, targets):
        answer = dihedral_solve(Equation(word, Carrier.D, target), ball)
        if answer.found:
            solved += 1
            if evaluate_word(word, answer.values, Carrier.D) != target:
                wrong.append(f"{word} = {target}")
        elif target in atlas[word]:
            misses.append(f"{word} = {target}")
        if answer.case in ("trivial", "reflection") and answer.searched:
            closed_form = False
        if answer.certificate is not None and not answer.certificate.verify():
            certificates = False

    report.check("agrees-with-search", not misses, "; ".join(misses[:5]))
    report.check("solutions-verify", not wrong, "; ".join(wrong[:5]))
    report.check("closed-form-cases", closed_form, "trivial and reflection cases answered without search")
    report.check("rotation-certificates", certificates, "lifted chain replays for every rotation answer")
    report.result = {"equations": len(words) * len(targets), "solved": solved}


@suite("certificate")
def certificate_suite(bounds: BoundsProfile, rng: random.Random, report: Report) -> None:
    cert = no_retraction_certificate()
    report.check("no-retraction", cert.verify(), f"{len(cert.steps)} steps")
    involutions = scan_involutions_K(bounds.involution_bound)
    report.check("involution-scan", involutions == [KleinElt.identity()],
                 f"involutions with |l|, |k| ≤ {bounds.involution_bound}: " + ", ".join(str(g) for g in involutions))


@suite("grammar")
def grammar_suite(bounds: BoundsProfile, rng: random.Random, report: Report) -> None:
    balls = _balls(bounds)
    for carrier, ball in balls.items():
        _law(report, f"{carrier.value}-round-trip", ball, lambda g: parse_element(str(g), g.carrier) == g)
    words = [random_word(rng, rng.randint(1, 4), bounds.nielsen_max_length) for _ in range(bounds.random_samples)]
    _law(report, "word-round-trip", words, lambda w: parse_word(str(w), w.arity) == w)
    report.check("generator-products", parse_element("a*b*a", Carrier.K) == A * B * A
                 and parse_element("[b, a^2]", Carrier.K) == KleinElt(0, 4), "non-normal input normalizes")


def run_selfcheck(profile: str = "quick", only: Optional[Sequence[str]] = None) -> Report:
    bounds = settings.profile(profile)
    names = list(only) if only else list(SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise ValueError(f"unknown suites: {', '.join(unknown)}; available: {', '.join(SUITES)}")

    report = Report(command="selfcheck", inputs={"profile": profile, "suites": names, "seed": settings.SEED})
    summary: Dict[str, dict] = {}
    for name in names:
        sub = Report(command=name)
        rng = random.Random(f"{settings.SEED}:{name}")
        started = time.perf_counter()
        try:
            SUITES[name](bounds, rng, sub)
        except Exception as exc:
            logger.exception("suite %s crashed", name)
            sub.check("completed", False, f"{type(exc).__name__}: {exc}")
        elapsed = time.perf_counter() - started
        logger.info("suite %s: %s in %.2fs", name, "pass" if sub.ok else "FAIL", elapsed)
        for check in sub.checks:
            report.check(f"{name}.{check.name}", check.passed, check.detail)
        summary[name] = {"passed": sub.ok, "checks": len(sub.checks), **sub.result}
    report.result = {"suites": summary}
    return report
