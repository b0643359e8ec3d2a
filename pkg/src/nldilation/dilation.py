"""Dilation, extent of dilation, imprecision increase and constriction.

A partition *dilates* ``A`` when conditioning on any of its blocks widens
the interval ``[lower(A), upper(A)]`` on both sides. Conditioning is by
natural extension throughout.

Most decision procedures come in two flavours: a direct evaluation of the
defining inequalities, and a shortcut based on the model's structure. The
shortcut functions check their own hypotheses and raise
:class:`~nldilation.errors.AssumptionError` naming the standing assumption
that failed:

* ``A1``: ``A`` is logically independent of the partition;
* ``A2``: ``A`` is not extreme (lower = upper = 0 or 1);
* ``A3``: ``(lower(A), upper(A)) != (0, 1)``;
* ``A4``: ``lower(A) < upper(A)`` (constriction only).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from .conditioning import ConditionalAssessment, natural_extension
from .errors import (
    AssumptionError,
    InternalInconsistencyError,
    NotApplicableError,
    PreconditionError,
    UnsupportedModelError,
    UsageError,
)
from .events import Dependence, Event, Partition, classify_dependence
from .model import Family, NLModel, recognize_submodel

STRICT = "strict"
WEAK_NONTRIVIAL = "weak-nontrivial"
WEAK_TRIVIAL = "weak-trivial"
NONE = "none"
DILATING = (STRICT, WEAK_NONTRIVIAL, WEAK_TRIVIAL)


@dataclass(frozen=True)
class BlockResult:
    block: Event
    lower: Fraction
    upper: Fraction
    labels: tuple[Optional[str], Optional[str]]
    satisfied: bool


@dataclass(frozen=True)
class DilationReport:
    """Per-block conditional intervals and the overall verdict.

    ``labels`` on each block name the branch of the NL characterisation that
    holds (``a1``/``a2`` for the lower side, ``b1``/``b2`` for the upper
    side), or ``None``; blocks with ``lower(B) = 0`` carry no labels.
    """

    verdict: str
    mode: str
    lower: Fraction
    upper: Fraction
    per_block: tuple[BlockResult, ...]
    assumptions: dict

    @property
    def dilates(self) -> bool:
        if self.mode == STRICT:
            return self.verdict == STRICT
        return self.verdict in DILATING


def _check_inputs(model: NLModel, A: Event, partition: Partition) -> None:
    if A.space != model.space or partition.space != model.space:
        raise UsageError("event/partition do not belong to the model's sample space")


def _require_vbm(model: NLModel, what: str) -> None:
    if model.family is not Family.VBM:
        raise UnsupportedModelError(f"{what} is defined for VBMs only, got {model.family.value}")


def assumptions(model: NLModel, A: Event, partition: Partition) -> dict:
    lo, up = model.lower(A), model.upper(A)
    return {
        "A1": classify_dependence(A, partition) is Dependence.INDEPENDENT,
        "A2": not model.is_extreme(A),
        "A3": (lo, up) != (0, 1),
    }


def _gate(model: NLModel, A: Event, partition: Partition, names=("A1", "A2", "A3")) -> None:
    flags = assumptions(model, A, partition)
    messages = {
        "A1": f"{A} is not logically independent of {partition}",
        "A2": f"{A} is extreme",
        "A3": f"lower and upper probability of {A} are 0 and 1",
    }
    for name in names:
        if not flags[name]:
            raise AssumptionError(name, messages[name])


def _classify_verdict(lo: Fraction, up: Fraction, intervals) -> str:
    intervals = list(intervals)
    if not all(l <= lo and up <= u for l, u in intervals):
        return NONE
    if all(l < lo and up < u for l, u in intervals):
        return STRICT
    if all(l == lo == up == u for l, u in intervals):
        return WEAK_TRIVIAL
    return WEAK_NONTRIVIAL


def branch_labels(model: NLModel, A: Event, B: Event) -> tuple[Optional[str], Optional[str]]:
    """Which of (a1)/(a2) and (b1)/(b2) hold for a block with ``lower(B) > 0``."""
    lo, up = model.lower(A), model.upper(A)
    p_a_out = model.prob0(A & ~B)
    p_out = model.prob0(~B)
    lo_ab, up_ab = model.lower(A & B), model.upper(A & B)
    lo_nab, up_nab = model.lower(~A & B), model.upper(~A & B)

    if lo_ab > 0 and up_nab > 0 and p_a_out >= p_out * lo:
        a_label = "a1"
    elif lo_ab == 0:
        a_label = "a2"
    else:
        a_label = None
    if lo_nab > 0 and up_ab > 0 and p_a_out <= p_out * up:
        b_label = "b1"
    elif lo_nab == 0:
        b_label = "b2"
    else:
        b_label = None
    return a_label, b_label


def check_dilation(model: NLModel, A: Event, partition: Partition, mode: str = "weak") -> DilationReport:
    """Evaluate the dilation inequalities block by block."""
    if mode not in ("weak", STRICT):
        raise UsageError(f"mode must be 'weak' or 'strict', got {mode!r}")
    _check_inputs(model, A, partition)
    lo, up = model.lower(A), model.upper(A)
    blocks = []
    for B in partition:
        ne = natural_extension(model, A, B)
        if mode == STRICT:
            ok = ne.lower < lo and up < ne.upper
        else:
            ok = ne.lower <= lo and up <= ne.upper
        labels = branch_labels(model, A, B) if model.lower(B) > 0 else (None, None)
        blocks.append(BlockResult(B, ne.lower, ne.upper, labels, ok))
    verdict = _classify_verdict(lo, up, ((b.lower, b.upper) for b in blocks))
    return DilationReport(verdict, mode, lo, up, tuple(blocks), assumptions(model, A, partition))


def characterize_dilation(model: NLModel, A: Event, partition: Partition) -> DilationReport:
    """Decide weak dilation from the branch conditions (a1)/(a2) and (b1)/(b2).

    Blocks with ``lower(B) = 0`` never prevent dilation and are skipped. The
    verdict is refined into strict / trivial / non-trivial from the
    conditional values only when the branch conditions say dilation occurs.
    """
    _check_inputs(model, A, partition)
    if model.family is Family.OTHER or not model.is_coherent:
        raise UnsupportedModelError("characterisation needs a coherent NL model")
    _gate(model, A, partition)
    lo, up = model.lower(A), model.upper(A)
    blocks = []
    for B in partition:
        ne = natural_extension(model, A, B)
        if model.lower(B) == 0:
            blocks.append(BlockResult(B, ne.lower, ne.upper, (None, None), True))
            continue
        labels = branch_labels(model, A, B)
        blocks.append(BlockResult(B, ne.lower, ne.upper, labels, None not in labels))
    if all(b.satisfied for b in blocks):
        verdict = _classify_verdict(lo, up, ((b.lower, b.upper) for b in blocks))
    else:
        verdict = NONE
    return DilationReport(verdict, "weak", lo, up, tuple(blocks), assumptions(model, A, partition))


def epsilon_dilation(model: NLModel, A: Event, partition: Partition, strict: bool = False) -> bool:
    """Dilation test for epsilon-contamination models via covariance bounds.

    With ``strict=True`` the bounds are strict and the answer is about
    strict dilation.
    """
    _check_inputs(model, A, partition)
    tag = recognize_submodel(model)
    if tag.kind != "epsilon" or not tag.value > 0:
        raise PreconditionError(f"needs an epsilon-contamination model with eps > 0, got {tag}")
    _gate(model, A, partition, ("A1", "A2"))
    for B in partition:
        if not (model.prob0(A & B) > 0 and model.prob0(~A & B) > 0):
            raise PreconditionError(f"P0(A & B) and P0(not A & B) must be positive for B = {B}")
    eps = tag.value
    p_a, p_na = model.prob0(A), model.prob0(~A)
    for B in partition:
        p_nb = model.prob0(~B)
        cov = model.prob0(A & B) - p_a * model.prob0(B)
        low, high = -eps * p_na * p_nb, eps * p_a * p_nb
        if strict:
            if not low < cov < high:
                return False
        elif not low <= cov <= high:
            return False
    return True


def elle(model: NLModel, A: Event, B: Event) -> Fraction:
    """``P0(A & B) - b P0(A) P0(B) - a P0(B)``; additive in ``B`` over disjoint unions."""
    _require_vbm(model, "the L function")
    p_b = model.prob0(B)
    return model.prob0(A & B) - model.b * model.prob0(A) * p_b - model.a * p_b


class ElleSign(NamedTuple):
    """``lower_side``: ``lpe(A|B) <= lower(A)``; ``upper_side``: ``upe(A|B) >= upper(A)``.

    Each is ``None`` when the sign test is not applicable to that side.
    """

    lower_side: Optional[bool]
    upper_side: Optional[bool]


def elle_sign_test(model: NLModel, A: Event, B: Event) -> ElleSign:
    _require_vbm(model, "the L sign test")
    if model.lower(B) == 0:
        raise PreconditionError("the L sign test needs lower(B) > 0")
    lower_ok = model.lower(A) == 0 or (model.lower(A & B) > 0 and model.upper(~A & B) > 0)
    upper_ok = model.upper(A) == 1 or (model.lower(~A & B) > 0 and model.upper(A & B) > 0)
    return ElleSign(
        elle(model, A, ~B) >= 0 if lower_ok else None,
        elle(model, ~A, ~B) >= 0 if upper_ok else None,
    )


class CoarseningHypotheses(NamedTuple):
    holds: bool
    labels: dict


def coarsening_hypotheses(model: NLModel, A: Event, partition: Partition) -> CoarseningHypotheses:
    """Sufficient condition for some strictly coarser partition to dilate ``A`` too."""
    _check_inputs(model, A, partition)
    _require_vbm(model, "the coarsening theorem")
    if len(partition) < 3:
        raise PreconditionError("the coarsening theorem needs at least 3 blocks")
    _gate(model, A, partition)
    if any(model.lower(B) == 0 for B in partition):
        raise PreconditionError("the coarsening theorem needs lower(B) > 0 for every block")
    if not check_dilation(model, A, partition).dilates:
        raise PreconditionError(f"{partition} does not weakly dilate {A}")
    labels = {
        "a1": model.lower(A) == 0,
        "a2": all(model.lower(A & B) > 0 and model.upper(~A & B) > 0 for B in partition),
        "b1": model.upper(A) == 1,
        "b2": all(model.lower(~A & B) > 0 and model.upper(A & B) > 0 for B in partition),
    }
    holds = (labels["a1"] or labels["a2"]) and (labels["b1"] or labels["b2"])
    return CoarseningHypotheses(holds, labels)


def dilating_coarsenings(model: NLModel, A: Event, partition: Partition, mode: str = "weak"):
    """Every strictly coarser nontrivial partition with its dilation report."""
    for coarser in partition.coarsenings():
        yield coarser, check_dilation(model, A, coarser, mode)


def find_dilating_coarser(
    model: NLModel, A: Event, partition: Partition, mode: str = "weak"
) -> Optional[Partition]:
    for coarser, report in dilating_coarsenings(model, A, partition, mode):
        if report.dilates:
            return coarser
    return None


class NonCorrelationVerdict(NamedTuple):
    holds: bool
    verified_partitions: int = 0


def non_correlation_dilation(model: NLModel, A: Event, partition: Partition) -> NonCorrelationVerdict:
    """Positivity plus ``P0``-non-correlation of ``A`` with every block.

    When the hypotheses hold, the partition and every coarser partition are
    checked to weakly dilate ``A``; ``verified_partitions`` counts them.
    """
    _check_inputs(model, A, partition)
    _require_vbm(model, "the non-correlation result")
    if len(partition) < 3:
        raise PreconditionError("the non-correlation result needs at least 3 blocks")
    p_a = model.prob0(A)
    holds = all(
        model.lower(A & B) > 0
        and model.lower(~A & B) > 0
        and model.prob0(A & B) == p_a * model.prob0(B)
        for B in partition
    )
    if not holds:
        return NonCorrelationVerdict(False)
    count = 0
    for p in (partition, *partition.coarsenings()):
        if not check_dilation(model, A, p).dilates:
            raise InternalInconsistencyError(f"{p} fails to dilate {A} under non-correlation")
        count += 1
    return NonCorrelationVerdict(True, count)


# -- extent of dilation and imprecision increase -------------------------------


def imprecision_variation(model: NLModel, A: Event, B: Event) -> Fraction:
    """Change of interval width for ``A`` after conditioning on ``B``."""
    return natural_extension(model, A, B).width - (model.upper(A) - model.lower(A))


@dataclass(frozen=True)
class ExtentReport:
    """Extent of dilation from the closed form, with the brute-force minimum.

    ``plus``, ``one`` and ``zero`` are the blocks with positive lower
    probability whose conditional interval is interior on both ends, has
    upper end 1, or has lower end 0 (respectively). ``m0`` and ``m1`` are
    ``None`` when their class is empty, and so is ``b_star`` when ``plus``
    is empty.
    """

    value: Fraction
    brute_force: Fraction
    argmin: Event
    null_blocks: tuple[Event, ...]
    positive_blocks: tuple[Event, ...]
    plus: tuple[Event, ...]
    zero: tuple[Event, ...]
    one: tuple[Event, ...]
    b_star: Optional[Event]
    m0: Optional[Fraction]
    m1: Optional[Fraction]
    terms: tuple[Fraction, ...]


def extent(model: NLModel, A: Event, partition: Partition) -> ExtentReport:
    _check_inputs(model, A, partition)
    _require_vbm(model, "the extent of dilation")
    if not check_dilation(model, A, partition, STRICT).dilates:
        raise PreconditionError(f"extent of dilation needs strict dilation of {A} by {partition}")
    lo, up = model.lower(A), model.upper(A)

    conditionals = {B: natural_extension(model, A, B) for B in partition}
    null = tuple(B for B in partition if model.lower(B) == 0)
    positive = tuple(B for B in partition if model.lower(B) > 0)
    interior = lambda x: 0 < x < 1  # noqa: E731
    plus = tuple(B for B in positive if interior(conditionals[B].lower) and interior(conditionals[B].upper))
    one = tuple(B for B in positive if interior(conditionals[B].lower) and conditionals[B].upper == 1)
    zero = tuple(B for B in positive if conditionals[B].lower == 0 and interior(conditionals[B].upper))

    terms = [Fraction(1)]
    b_star = None
    if plus:
        b_star = max(plus, key=model.prob0)  # max() keeps the first maximiser
        terms.append(conditionals[b_star].width)
    m0 = m1 = None
    if zero:
        m0 = max(model.lower(~A & B) / model.upper(A & B) for B in zero)
        terms.append(1 / (1 + m0))
    if one:
        m1 = max(model.lower(A & B) / model.upper(~A & B) for B in one)
        terms.append(1 / (1 + m1))
    value = lo - up + min(terms)

    variations = [(conditionals[B].width - (up - lo), i) for i, B in enumerate(partition)]
    brute, argmin = min(variations)
    return ExtentReport(
        value, brute, partition[argmin], null, positive, plus, zero, one, b_star, m0, m1, tuple(terms)
    )


def imprecision_increase_extent(model: NLModel, A: Event, partition: Partition) -> Fraction:
    """Smallest nonnegative part of the imprecision variation over the blocks."""
    _check_inputs(model, A, partition)
    return min(max(imprecision_variation(model, A, B), Fraction(0)) for B in partition)


class GuaranteeResult(NamedTuple):
    applicable: bool
    reason: Optional[str] = None
    variations: tuple = ()

    @property
    def holds(self) -> bool:
        return self.applicable and all(v > 0 for v in self.variations)


def imprecision_increase_guarantee(model: NLModel, A: Event, partition: Partition) -> GuaranteeResult:
    """For VBMs with ``b < 1``: strict imprecision increase on every block.

    Returns a not-applicable result naming the first hypothesis that fails.
    """
    _check_inputs(model, A, partition)
    if model.family is not Family.VBM:
        return GuaranteeResult(False, "model is not a VBM")
    if not model.b < 1:
        return GuaranteeResult(False, f"b = {model.b} is not below 1")
    lo, up = model.lower(A), model.upper(A)
    if not (0 < lo < 1 and 0 < up < 1):
        return GuaranteeResult(False, "lower(A) and upper(A) must lie in (0, 1)")
    for B in partition:
        if not model.lower(B) > 0:
            return GuaranteeResult(False, f"lower({B}) = 0")
        if not model.prob0(B) < 1:
            return GuaranteeResult(False, f"P0({B}) = 1")
        ne = natural_extension(model, A, B)
        if not (0 < ne.lower < 1 and 0 < ne.upper < 1):
            return GuaranteeResult(False, f"conditional interval on {B} touches 0 or 1")
    variations = tuple(imprecision_variation(model, A, B) for B in partition)
    if not all(v > 0 for v in variations):
        raise InternalInconsistencyError(f"imprecision decreased although b < 1: {variations}")
    return GuaranteeResult(True, None, variations)


# -- constriction --------------------------------------------------------------


@dataclass(frozen=True)
class ConstrictionReport:
    """Direct constriction verdict plus the shortcut that applies, if any.

    ``proposition`` is ``"positive-blocks"`` (no null blocks and a block
    splitting ``A`` with positive lower probabilities on both sides),
    ``"null-block"`` (a null block logically independent of ``A``), or
    ``"independent"`` (null blocks and ``A`` independent of the partition);
    ``shortcut_verdict`` is what that shortcut predicts.
    """

    verdict: bool
    witness: Optional[Event]
    proposition: Optional[str]
    shortcut_verdict: Optional[bool]
    per_block: tuple[tuple[Event, ConditionalAssessment], ...]


def check_constriction(model: NLModel, A: Event, partition: Partition) -> ConstrictionReport:
    _check_inputs(model, A, partition)
    lo, up = model.lower(A), model.upper(A)
    if not lo < up:
        raise AssumptionError("A4", f"lower({A}) = upper({A}) = {lo}")
    per_block = tuple((B, natural_extension(model, A, B)) for B in partition)
    inside = all(lo <= ne.lower and ne.upper <= up for _, ne in per_block)
    witness = next((B for B, ne in per_block if lo < ne.lower or ne.upper < up), None)
    verdict = inside and witness is not None

    proposition = shortcut = None
    if model.family is Family.VBM:
        null = [B for B in partition if model.lower(B) == 0]
        loose = [B for B in null if not B.implies(A) and not B.implies(~A)]
        if null and classify_dependence(A, partition) is Dependence.INDEPENDENT:
            proposition, shortcut = "independent", False
        elif loose:
            proposition = "null-block"
            shortcut = (
                lo == 0 and up == 1 and any(B.implies(A) or B.implies(~A) for B in null)
            )
        elif not null and any(
            model.lower(A & B) > 0 and model.lower(~A & B) > 0 for B in partition
        ):
            proposition, shortcut = "positive-blocks", False
        if shortcut is not None and shortcut != verdict:
            raise InternalInconsistencyError(
                f"constriction shortcut {proposition} says {shortcut}, direct evaluation {verdict}"
            )
    return ConstrictionReport(verdict, witness if verdict else None, proposition, shortcut, per_block)


# -- dependence taxonomy and extreme events ------------------------------------


class DependenceDilation(NamedTuple):
    classification: Dependence
    predicted_nontrivial: bool
    report: DilationReport


def dependence_dilation(model: NLModel, A: Event, partition: Partition) -> DependenceDilation:
    """Predict non-trivial weak dilation when ``A`` is not independent of the partition.

    Dependence or two-sided semidependence rule it out; one-sided
    semidependence allows it only for ``A`` with precise probability 0
    (type 1) or 1 (type 2). The prediction is checked against the direct
    evaluation.
    """
    _check_inputs(model, A, partition)
    kind = classify_dependence(A, partition)
    if kind is Dependence.INDEPENDENT:
        raise NotApplicableError(f"{A} is logically independent of {partition}")
    report = check_dilation(model, A, partition)
    lo, up = model.lower(A), model.upper(A)
    if kind is Dependence.SEMIDEP_TYPE1:
        predicted = (
            lo == up == 0
            and all(b.lower == 0 for b in report.per_block)
            and any(b.upper > 0 for b in report.per_block)
        )
    elif kind is Dependence.SEMIDEP_TYPE2:
        predicted = (
            lo == up == 1
            and all(b.upper == 1 for b in report.per_block)
            and any(b.lower < 1 for b in report.per_block)
        )
    else:
        predicted = False
    direct = report.verdict in (STRICT, WEAK_NONTRIVIAL)
    if predicted != direct:
        raise InternalInconsistencyError(
            f"{kind.value}: predicted non-trivial dilation {predicted}, found {report.verdict}"
        )
    return DependenceDilation(kind, predicted, report)


def extreme_dilation(model: NLModel, A: Event, partition: Partition) -> DilationReport:
    """Dilation of an extreme event: trivial when every block has positive lower probability.

    Otherwise the null blocks get the vacuous interval and dilation is
    non-trivial. The prediction is checked against the direct evaluation.
    """
    _check_inputs(model, A, partition)
    if not model.is_extreme(A):
        raise NotApplicableError(f"{A} is not extreme")
    _gate(model, A, partition, ("A1",))
    report = check_dilation(model, A, partition)
    if all(model.lower(B) > 0 for B in partition):
        ok = report.verdict == WEAK_TRIVIAL
    else:
        ok = report.verdict in (STRICT, WEAK_NONTRIVIAL)
    if not ok:
        raise InternalInconsistencyError(f"extreme event {A} gave verdict {report.verdict}")
    return report
