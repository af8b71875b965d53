"""
Verification engines.

- transfer_solution: moves a G-solution of w = h (h ∈ K) into K.
- brute_force_solve / solution_atlas: bounded search oracles.
- dihedral_solve: the case analysis over D∞ = K/⟨b²⟩.
- probe_verbal_closedness: exhaustive transfer + oracle cross-check.
- no_retraction_certificate: the chain showing K is not a retract of G.
"""
import logging
from collections import defaultdict
from functools import lru_cache
from itertools import product
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from verbclosure.core.errors import (
    ArityMismatch,
    CarrierMismatch,
    TargetNotInK,
    VerificationFailed,
)
from verbclosure.core.grammar import parse_word
from verbclosure.models.ball import Ball, Element
from verbclosure.models.carrier import Carrier
from verbclosure.models.dihedral import B_PRIME, DihedralElt
from verbclosure.models.equation import DihedralSolution, Equation, SolutionTuple, TransferReport
from verbclosure.models.gelt import A1, A2, A3, B_SQUARED, D1, D2, D3, GElt, IndexPerm, VFour
from verbclosure.models.klein import A, B, KleinElt
from verbclosure.models.word import FreeWord, commutator_word
from verbclosure.schemas.certificate import Certificate
from verbclosure.schemas.probe import ProbeConfig
from verbclosure.schemas.report import Report
from verbclosure.services.freewords import (
    aut_generator_image,
    enumerate_reduced_words,
    exponent_sums,
    nielsen_normalize,
)
from verbclosure.services.groups import (
    centralizes_squares_K,
    commutator,
    evaluate_word,
    involutions_K,
    is_square_K,
    order_of,
    unique_sqrt_K,
)
from verbclosure.services.maps import (
    decompose_K,
    deg_hom,
    dihedral_shift,
    embed_K,
    f_hom,
    hat_subst,
    perm_aut,
    pi_quotient,
)

logger = logging.getLogger(__name__)


# --- transfer -------------------------------------------------------------

class TransferPlan:
    """
    Everything the transfer needs that depends on the word alone: the
    Nielsen form, the generator images of alpha and alpha⁻¹, and alpha(w),
    each with a prefix evaluator ready for many tuples.
    """

    def __init__(self, word: FreeWord):
        self.word = word
        self.m, self.u, self.alpha = nielsen_normalize(word)
        inverse = self.alpha.inverse()
        arity = word.arity
        self.inverse_images = tuple(aut_generator_image(inverse, j) for j in range(1, arity + 1))
        self.alpha_images = tuple(aut_generator_image(self.alpha, j) for j in range(1, arity + 1))
        self.image = self.alpha.apply(word)
        self._word = PrefixEvaluator([word])
        self._image = PrefixEvaluator([self.image])
        self._rename = PrefixEvaluator(self.inverse_images)
        self._pull_back = PrefixEvaluator(self.alpha_images)

    def evaluate(self, values: Sequence[Element]) -> Element:
        return self._word.evaluate(values)[0]

    def evaluate_image(self, values: Sequence[Element]) -> Element:
        return self._image.evaluate(values)[0]

    def rename(self, values: Sequence[GElt]) -> Tuple[GElt, ...]:
        return tuple(self._rename.evaluate(values))

    def pull_back(self, values: Sequence[KleinElt]) -> Tuple[KleinElt, ...]:
        return tuple(self._pull_back.evaluate(values))


@lru_cache(maxsize=4096)
def transfer_plan(word: FreeWord) -> TransferPlan:
    return TransferPlan(word)


def transfer_solution(
    w: FreeWord,
    values: Union[SolutionTuple, Sequence[GElt]],
    plan: Optional[TransferPlan] = None,
) -> TransferReport:
    """
    Build a K-solution of w = h from a G-solution, where h = w(values) ∈ K.

    Pipeline: Nielsen form alpha(w) = x₁^m·u; re-express the solution for
    alpha(w); if m > 0 rename indices so x̃₁ has d-part 1 or d₁; apply the
    hat substitution entrywise; pull back through alpha; re-evaluate.
    A plan built for the padded word may be passed in when the same word
    is transferred many times.
    """
    values = tuple(values)
    if len(values) < w.used_arity:
        raise ArityMismatch(f"word {w} needs {w.used_arity} values, got {len(values)}")
    for v in values:
        if type(v) is not GElt:
            raise CarrierMismatch(f"transfer needs G elements, got {v!r}")
    arity = max(w.arity, len(values), 1)
    word = w.with_arity(arity) if arity != w.arity else w
    values = values + (GElt.identity(),) * (arity - len(values))
    if plan is None:
        plan = transfer_plan(word)
    elif plan.word != word:
        raise ArityMismatch(f"plan was built for {plan.word}, not {word}")

    h_g = plan.evaluate(values)
    target = decompose_K(h_g)
    if target is None:
        raise TargetNotInK(f"{word} evaluates to {h_g}, which is not in K")

    m = plan.m
    renamed = plan.rename(values)
    perm = IndexPerm()
    if m > 0 and renamed[0].d in (VFour.D2, VFour.D3):
        perm = IndexPerm.transposition(1, renamed[0].d.index)
        renamed = tuple(perm_aut(perm, v) for v in renamed)

    hat = tuple(hat_subst(v) for v in renamed)
    k_solution = plan.pull_back(hat)
    verified = plan.evaluate(k_solution) == target

    bookkeeping = (
        ("f(h) = f-evaluation of the renamed tuple", f_hom(h_g) == plan.evaluate_image([f_hom(v) for v in renamed])),
        ("deg(h) = m·deg(x̃)", deg_hom(h_g) == m * deg_hom(renamed[0])),
        ("f∘embed∘hat = f on the renamed tuple", all(f_hom(embed_K(e)) == f_hom(v) for e, v in zip(hat, renamed))),
    )

    report = TransferReport(
        word=word,
        g_solution=SolutionTuple(values),
        target=target,
        m=m,
        u=plan.u,
        alpha=plan.alpha,
        renamed=SolutionTuple(renamed),
        perm=perm,
        hat=SolutionTuple(hat),
        k_solution=SolutionTuple(k_solution),
        verified=verified,
        bookkeeping=bookkeeping,
    )
    if not verified:
        logger.error("transfer of %s at %s produced %s, which does not evaluate to %s",
                     word, report.g_solution, report.k_solution, target)
        exc = VerificationFailed(f"K-tuple {report.k_solution} does not solve {word} = {target}")
        exc.report = report
        raise exc
    return report


# --- bounded search -------------------------------------------------------

@lru_cache(maxsize=4096)
def brute_force_solve(eq: Equation, ball: Ball, nvars: Optional[int] = None) -> Optional[SolutionTuple]:
    """
    First tuple in lexicographic ball-product order solving eq, or None.
    None means only that the ball holds no solution.
    """
    if ball.group is not eq.group:
        raise CarrierMismatch(f"ball is over {ball.group.value}, equation over {eq.group.value}")
    nvars = eq.word.arity if nvars is None else nvars
    if nvars < eq.word.used_arity and not eq.word.is_identity:
        raise ArityMismatch(f"word {eq.word} needs {eq.word.used_arity} variables, got {nvars}")
    for candidate in product(tuple(ball), repeat=nvars):
        if evaluate_word(eq.word, candidate, eq.group) == eq.target:
            return SolutionTuple(candidate)
    return None


class PrefixEvaluator:
    """
    Evaluates a fixed list of words on many tuples, sharing prefixes: every
    node of the prefix tree costs one multiplication per tuple.
    """

    def __init__(self, words: Sequence[FreeWord]):
        self.words = tuple(words)
        index: Dict[tuple, int] = {(): 0}
        self.parents: List[int] = []
        self.steps: List[Tuple[int, int]] = []
        self.nodes: List[int] = []
        for word in self.words:
            prefix: tuple = ()
            for letter in word.unit_letters():
                key = prefix + (letter,)
                if key not in index:
                    index[key] = len(self.parents) + 1
                    self.parents.append(index[prefix])
                    self.steps.append(letter)
                prefix = key
            self.nodes.append(index[prefix])

    def evaluate(self, values: Sequence[Element]) -> List[Element]:
        letter_values = {}
        for var, v in enumerate(values, 1):
            letter_values[(var, 1)] = v
            letter_values[(var, -1)] = v.inverse()
        node_values = [type(values[0]).identity()]
        for parent, step in zip(self.parents, self.steps):
            node_values.append(node_values[parent] * letter_values[step])
        return [node_values[i] for i in self.nodes]


def _by_support(words: Iterable[FreeWord]) -> Dict[Tuple[int, ...], List[FreeWord]]:
    groups: Dict[Tuple[int, ...], List[FreeWord]] = defaultdict(list)
    for word in words:
        groups[tuple(sorted(word.support))].append(word)
    return groups


def _sweep(words: Sequence[FreeWord], elements: Sequence[Element], filler: Element):
    """
    Yields (word, values, value) for every word and every assignment of ball
    elements to the variables the word uses; other variables hold `filler`.
    Assignments come in lexicographic order per word.
    """
    for support, group in _by_support(words).items():
        arity = max(w.arity for w in group)
        evaluator = PrefixEvaluator(group)
        for combo in product(elements, repeat=len(support)):
            values = [filler] * arity
            for position, g in zip(support, combo):
                values[position - 1] = g
            for word, value in zip(group, evaluator.evaluate(values)):
                yield word, values, value


def solution_atlas(words: Sequence[FreeWord], ball: Ball) -> Dict[FreeWord, Dict[Element, SolutionTuple]]:
    """
    For every word, the first solving tuple (lexicographic ball-product
    order) of every value it takes on the ball. atlas[w].get(h) agrees with
    brute_force_solve(Equation(w, ball.group, h), ball).
    """
    elements = tuple(ball)
    atlas: Dict[FreeWord, Dict[Element, SolutionTuple]] = {w: {} for w in words}
    for word, values, value in _sweep(words, elements, elements[0]):
        table = atlas[word]
        if value not in table:
            table[value] = SolutionTuple(tuple(values))
    return atlas


# --- D∞ case solver ---------------------------------------------------------

def case4_lift(w: FreeWord) -> FreeWord:
    """[t, w²] with t a new last variable."""
    arity = w.arity + 1
    t = FreeWord.generator(arity, arity)
    return commutator_word(t, w.with_arity(arity) ** 2)


def lift_to_K(e: DihedralElt) -> KleinElt:
    """Section of π: b′^eps·a′^k ↦ b^eps·a^k."""
    return KleinElt(e.eps, e.k)


def case4_chain(w: FreeWord, d_solution: SolutionTuple) -> Certificate:
    """
    Replays the rotation case: a D∞ solution of w = a′^k lifts to a
    K-solution (t = b, x̂, …) of [t, w²] = a^{4k}, and the square toolkit
    leads back to w(x̂) ∈ a^k⟨b²⟩, whose image is a′^k.
    """
    cert = Certificate(title=f"rotation case for {w}")
    value = evaluate_word(w, d_solution, Carrier.D)
    k = value.k
    cert.add(
        "right-hand side is a nontrivial rotation a′^k",
        "rotation-target",
        value.eps == 0 and k != 0,
        {"value": str(value)},
    )
    lifted = tuple(lift_to_K(e) for e in d_solution)
    lifted_value = evaluate_word(case4_lift(w), lifted + (B,), Carrier.K)
    cert.add(
        "(t = b, lifted tuple) solves [t, w²] = a^{4k} in K",
        "lifted-equation",
        lifted_value == KleinElt(0, 4 * k),
        {"lifted": [str(e) for e in lifted], "value": str(lifted_value)},
        depends_on=[0],
    )
    cert.add(
        "t̂ = b lies in b⟨a, b²⟩, the elements not commuting with all squares",
        "t-outside-centralizer",
        not centralizes_squares_K(B),
        depends_on=[1],
    )
    w_hat = evaluate_word(w, lifted, Carrier.K)
    square = w_hat ** 2
    cert.add(
        "w(x̂)² is a square of K",
        "square-membership",
        is_square_K(square),
        {"square": str(square)},
        depends_on=[1],
    )
    cert.add(
        "w(x̂)² ∈ a^{2k}⟨b⁴⟩ and [b, w(x̂)²] = a^{4k}",
        "square-coset",
        square.k == 2 * k and square.l % 4 == 0 and commutator(B, square) == KleinElt(0, 4 * k),
        {"commutator": str(commutator(B, square))},
        depends_on=[2, 3],
    )
    root = unique_sqrt_K(square) if square.l % 4 == 0 and square.k % 2 == 0 else None
    cert.add(
        "the unique root of w(x̂)² is w(x̂) and lies in a^k⟨b²⟩",
        "unique-root",
        root is not None and root == w_hat and root.k == k and root.l % 2 == 0,
        {"root": str(root) if root is not None else None},
        depends_on=[4],
    )
    image = pi_quotient(w_hat)
    cert.add(
        "π(w(x̂)) = a′^k, so the lifted tuple solves w = a′^k modulo b²",
        "quotient-solution",
        image == value,
        {"image": str(image)},
        depends_on=[5],
    )
    return cert


def dihedral_solve(eq: Equation, ball: Optional[Ball] = None) -> DihedralSolution:
    """
    Case analysis for w = h over D∞:
      trivial     h = 1: the all-identity tuple
      reflection  h = b′a′^k and some variable has odd exponent sum: that
                  variable takes b′ (w collapses to x^odd), then the shift
                  automorphism carries b′ to h
      rotation    h = a′^k, k ≠ 0: search in the ball
    Reflections with all sums even fall through to the search as well.
    """
    if eq.group is not Carrier.D:
        raise CarrierMismatch(f"dihedral_solve needs an equation over D, got {eq.group.value}")
    w, h = eq.word, eq.target
    n = w.arity
    identity = DihedralElt.identity()

    if h.is_identity:
        return DihedralSolution(SolutionTuple((identity,) * n), "trivial", False)

    if h.eps == 1:
        odd = next((i for i, s in enumerate(exponent_sums(w)) if s % 2), None)
        if odd is not None:
            base = [identity] * n
            base[odd] = B_PRIME
            values = SolutionTuple(tuple(dihedral_shift(-h.k, v) for v in base))
            if evaluate_word(w, values, Carrier.D) != h:
                raise VerificationFailed(f"reflection case produced {values}, which does not solve {eq}")
            return DihedralSolution(values, "reflection", False)
        case = "reflection-even"
    else:
        case = "rotation"

    ball = ball or Ball(Carrier.D, 0, 5)
    found = brute_force_solve(eq, ball, n)
    certificate = case4_chain(w, found) if found is not None and case == "rotation" else None
    return DihedralSolution(found, case, True, certificate)


# --- probe ------------------------------------------------------------------

def probe_words(config: ProbeConfig) -> Tuple[FreeWord, ...]:
    if config.words is not None:
        parsed = [parse_word(text) for text in config.words]
        arity = max((w.used_arity for w in parsed), default=1)
        return tuple(w.with_arity(arity) for w in parsed)
    return enumerate_reduced_words(config.max_len, 2)


def probe_verbal_closedness(config: ProbeConfig) -> Report:
    """
    Every word × every G-ball assignment whose value lies in K is moved to K
    by transfer_solution and cross-checked against the K-ball oracle.
    Variables a word does not use are pinned to the identity.
    """
    words = probe_words(config)
    report = Report(command="probe", inputs=config.model_dump())
    stats = {
        "words": len(words),
        "assignments": 0,
        "cases_in_K": 0,
        "transfers_verified": 0,
        "transfer_failures": 0,
        "oracle_misses": 0,
        "bookkeeping_failures": 0,
    }
    report.result = stats
    if not words:
        return report

    g_elements = tuple(Ball(Carrier.G, config.g_lmax, config.g_kmax))
    k_ball = Ball(Carrier.K, config.k_lmax, config.k_kmax)
    logger.info("probe: %d words, %d G elements, oracle %s", len(words), len(g_elements), k_ball)
    atlas = solution_atlas(words, k_ball)

    witnesses: Dict[str, Dict[str, dict]] = defaultdict(dict)
    failures: List[dict] = []
    plans: Dict[FreeWord, TransferPlan] = {}
    for word, values, value in _sweep(words, g_elements, GElt.identity()):
        stats["assignments"] += 1
        h = decompose_K(value)
        if h is None:
            continue
        stats["cases_in_K"] += 1
        try:
            plan = plans.get(word)
            if plan is None:
                plan = plans[word] = transfer_plan(word.with_arity(max(word.arity, len(values), 1)))
            transfer = transfer_solution(word, values, plan)
        except VerificationFailed as exc:
            stats["transfer_failures"] += 1
            if len(failures) < 20:
                failures.append({"word": str(word), "g_solution": [str(v) for v in values], "error": exc.detail})
            continue
        stats["transfers_verified"] += 1
        if not all(holds for _, holds in transfer.bookkeeping):
            stats["bookkeeping_failures"] += 1
        if h not in atlas[word]:
            stats["oracle_misses"] += 1
            if len(failures) < 20:
                failures.append({"word": str(word), "target": str(h), "error": "no solution in the oracle ball"})
        samples = witnesses[str(word)]
        if str(h) not in samples and len(samples) < config.witnesses_per_word:
            samples[str(h)] = {
                "g_solution": [str(v) for v in values],
                "k_solution": [str(v) for v in transfer.k_solution],
                "oracle": [str(v) for v in atlas[word][h]] if h in atlas[word] else None,
            }

    logger.info("probe: %s", stats)
    report.check("transfer", stats["transfer_failures"] == 0,
                 f"{stats['transfers_verified']} of {stats['cases_in_K']} cases verified")
    report.check("oracle", stats["oracle_misses"] == 0,
                 f"{stats['oracle_misses']} targets without a solution in {k_ball}")
    report.check("bookkeeping", stats["bookkeeping_failures"] == 0,
                 "f and deg of h match the renamed tuple")
    report.witness = {"transfers": dict(witnesses), "failures": failures}
    return report


# --- laws and certificates ------------------------------------------------------

def check_square_law(group: Carrier, ball: Ball) -> bool:
    """[g², h²] = 1 for all ball pairs."""
    if ball.group is not group:
        raise CarrierMismatch(f"ball is over {ball.group.value}, law requested for {group.value}")
    squares = list(dict.fromkeys(g * g for g in ball))
    return all(commutator(s, t).is_identity for s in squares for t in squares)


def b2_closure_check(ball: Iterable[GElt]) -> Report:
    """
    In G: b² is central on the ball (so its normal closure is ⟨b²⟩), and
    the members of ⟨b²⟩ inside the ball that lie in K are the even b-powers.
    """
    elements = tuple(ball)
    report = Report(command="b2-closure", inputs={"size": len(elements)})
    not_central = [g for g in elements if B_SQUARED * g != g * B_SQUARED]
    conjugates = {B_SQUARED.conjugate(g) for g in elements}
    lmax = max((abs(g.l) for g in elements), default=0)
    members = {B_SQUARED ** m for m in range(-(lmax // 2), lmax // 2 + 1)} & set(elements)
    in_K = sorted(e for e in (decompose_K(g) for g in members) if e is not None)
    expected = sorted(KleinElt(g.l, 0) for g in elements if g.d is VFour.E and g.k == (0, 0, 0) and g.l % 2 == 0)
    report.check("b2-central", not not_central,
                 f"{len(not_central)} ball elements fail to commute with b²")
    report.check("normal-closure", conjugates <= {B_SQUARED},
                 "every conjugate of b² by a ball element is b²")
    report.check("closure-meets-K", in_K == expected,
                 "⟨b²⟩ ∩ K on the ball: " + ", ".join(str(e) for e in in_K))
    report.result = {"closure_in_K": [str(e) for e in in_K]}
    return report


def scan_involutions_K(bound: int) -> List[KleinElt]:
    """Elements g of the K-ball |l|, |k| ≤ bound with g² = 1."""
    return [g for g in Ball(Carrier.K, bound, bound) if (g * g).is_identity]


def no_retraction_certificate() -> Certificate:
    """A retraction G → K would kill d_i, then every a_i, then a ∈ K."""
    cert = Certificate(title="K is not a retract of G")
    identity = KleinElt.identity()

    involutions = involutions_K()
    cert.add(
        "K is torsion-free: (l, k)² = 1 forces l = 0 and then k = 0",
        "k-torsion-free",
        involutions == (identity,) and (identity ** 2).is_identity,
        {"solutions_of_g2_eq_1": [str(g) for g in involutions]},
    )

    orders = {str(d): order_of(d) for d in (D1, D2, D3)}
    cert.add(
        "each d_i has order 2, so ρ(d_i)² = 1 and ρ(d_i) = 1",
        "d-order-two",
        all(order == 2 for order in orders.values()) and involutions == (identity,),
        {"orders": orders},
        depends_on=[0],
    )

    relations = {}
    for i, a_i in enumerate((A1, A2, A3), 1):
        for j, d_j in enumerate((D1, D2, D3), 1):
            expected = a_i if i == j else a_i.inverse()
            relations[f"a{i}^d{j}"] = a_i.conjugate(d_j) == expected
    cert.add(
        "a_i^{d_j} = a_i⁻¹ for i ≠ j, so ρ(a_i) = ρ(a_i)⁻¹, ρ(a_i)² = 1 and ρ(a_i) = 1",
        "a-relations",
        all(relations.values()),
        {"relations": relations},
        depends_on=[0, 1],
    )

    a_in_G = A1 * A2 * A3
    cert.add(
        "ρ(a) = ρ(a₁)ρ(a₂)ρ(a₃) = 1, yet a = a₁a₂a₃ ∈ K is not 1: ρ cannot fix K",
        "contradiction",
        a_in_G == embed_K(A) and A != identity,
        {"rho_a": str(identity), "a": str(A), "a_in_G": str(a_in_G)},
        depends_on=[2],
    )
    return cert
