"""Conditioning coherent NL models on an event.

Natural extension is computed from the branch formulas for NL models and
cross-checked on every call against the general ratio formulas for
2-monotone lower probabilities. The regular extension uses the 2-monotone
closed form.

>>> from nldilation.fixtures import example_model
>>> m, A, parts = example_model()
>>> B1, B2, B3 = parts
>>> natural_extension(m, A, B1 | B2)[:2]
(Fraction(13, 45), Fraction(43, 45))
>>> condition_vbm(m, B3).params
(Fraction(-4, 9), Fraction(11, 9), Fraction(2, 9))
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import NamedTuple, Optional

from .errors import (
    InternalInconsistencyError,
    UnsupportedModelError,
    UsageError,
)
from .events import Event
from .model import (
    Family,
    NLModel,
    Submodel,
    recognize_submodel,
    vacuous_model,
)

log = logging.getLogger(__name__)

# branch labels
ZERO_VACUOUS = "zero-vacuous"
ZERO_IMPLIED = "zero-implied"
INTERIOR = "interior"
LOWER_ZERO = "lower-zero"
UPPER_ONE = "upper-one"


class ConditionalAssessment(NamedTuple):
    """Lower and upper conditional probability of ``A`` given ``B``.

    ``case_label`` is a pair: the branch that produced the lower value and
    the branch that produced the upper value. ``lower-zero`` and
    ``upper-one`` mean the value sits on the barrier 0 or 1.
    """

    lower: Fraction
    upper: Fraction
    method: str
    case_label: tuple[str, str]

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower


def _require_coherent(model: NLModel) -> None:
    if model.family is Family.OTHER or not model.is_coherent:
        raise UnsupportedModelError(f"conditioning needs a coherent model, got {model}")


def _check_conditioning_event(model: NLModel, A: Event, B: Event) -> None:
    if A.space != model.space or B.space != model.space:
        raise UsageError("events do not belong to the model's sample space")
    if B.is_empty:
        raise UsageError("cannot condition on the impossible event")


def two_monotone_extension(model: NLModel, A: Event, B: Event) -> tuple[Fraction, Fraction]:
    """Ratio formulas for a 2-monotone lower probability with ``lower(B) > 0``."""
    lo_ab, up_ab = model.lower(A & B), model.upper(A & B)
    lo_nab, up_nab = model.lower(~A & B), model.upper(~A & B)
    return lo_ab / (lo_ab + up_nab), up_ab / (up_ab + lo_nab)


def natural_extension(model: NLModel, A: Event, B: Event) -> ConditionalAssessment:
    _check_conditioning_event(model, A, B)
    _require_coherent(model)
    if model.lower(B) == 0:
        if B.implies(A):
            return ConditionalAssessment(Fraction(1), Fraction(1), "natural", (ZERO_IMPLIED,) * 2)
        if B.implies(~A):
            return ConditionalAssessment(Fraction(0), Fraction(0), "natural", (ZERO_IMPLIED,) * 2)
        return ConditionalAssessment(Fraction(0), Fraction(1), "natural", (ZERO_VACUOUS,) * 2)

    a, b, c = model.params
    p_ab = model.prob0(A & B)

    def interior(numerator: Fraction) -> Fraction:
        # only reached when both affine parts are unclamped, so the
        # denominator is lower(A & B) + upper(not A & B) or its conjugate
        # sum; some coherent HBMs have it nonpositive for other A, B
        denom = b * model.prob0(B) + 1 - b
        if denom <= 0:
            log.error("nonpositive denominator %s conditioning %s on %s", denom, model, B)
            raise InternalInconsistencyError(
                f"b*P0(B)+1-b = {denom} <= 0 in an interior branch for {A} | {B}"
            )
        return numerator / denom

    if model.upper(~A & B) == 0:
        lower, lower_case = Fraction(1), UPPER_ONE
    elif model.lower(A & B) == 0:
        lower, lower_case = Fraction(0), LOWER_ZERO
    else:
        lower, lower_case = interior(b * p_ab + a), INTERIOR

    if model.upper(A & B) == 0:
        upper, upper_case = Fraction(0), LOWER_ZERO
    elif model.lower(~A & B) == 0:
        upper, upper_case = Fraction(1), UPPER_ONE
    else:
        upper, upper_case = interior(b * p_ab + c), INTERIOR

    if (lower, upper) != two_monotone_extension(model, A, B):
        raise InternalInconsistencyError(
            f"branch formulas {lower, upper} disagree with ratio formulas for {A} | {B}"
        )
    return ConditionalAssessment(lower, upper, "natural", (lower_case, upper_case))


def regular_extension(model: NLModel, A: Event, B: Event) -> ConditionalAssessment:
    _check_conditioning_event(model, A, B)
    _require_coherent(model)
    if model.lower(B) > 0 or model.upper(B) == 0:
        return natural_extension(model, A, B)._replace(method="regular")
    if model.upper(~A & B) == 0:
        lower, lower_case = Fraction(1), UPPER_ONE
    else:
        lower, lower_case = Fraction(0), LOWER_ZERO
    if model.upper(A & B) == 0:
        upper, upper_case = Fraction(0), LOWER_ZERO
    else:
        upper, upper_case = Fraction(1), UPPER_ONE
    return ConditionalAssessment(lower, upper, "regular", (lower_case, upper_case))


def regular_differs(model: NLModel, A: Event, B: Event) -> bool:
    """Whether regular and natural extension disagree on ``A | B``.

    True exactly when ``0 = lower(B) < upper(B)``, ``not A & B`` is possible
    and ``upper(not A & B) = 0``.
    """
    _check_conditioning_event(model, A, B)
    rest = ~A & B
    return (
        model.lower(B) == 0 < model.upper(B)
        and not rest.is_empty
        and model.upper(rest) == 0
    )


def condition_vbm(model: NLModel, B: Event) -> NLModel:
    """The VBM obtained by conditioning every event on ``B``.

    The result lives on the subspace made of the atoms of ``B``: evaluate it
    on ``A.restrict(B)`` to get the conditional of ``A`` given ``B``. When
    ``lower(B) = 0`` the result is the vacuous model.
    """
    if model.family is not Family.VBM:
        raise UnsupportedModelError(f"condition_vbm needs a VBM, got {model.family.value}")
    if B.space != model.space:
        raise UsageError("event does not belong to the model's sample space")
    if B.is_empty:
        raise UsageError("cannot condition on the impossible event")

    sub = model.space.subspace(B)
    p_b = model.prob0(B)
    if p_b > 0:
        p0 = [model.p0[i] / p_b for i in B.indices]
    else:
        p0 = None
    if model.lower(B) == 0:
        return vacuous_model(sub, p0)

    a, b = model.a, model.b
    denom = b * p_b + 1 - b
    a_b = a / denom
    b_b = b * p_b / denom
    # a_B + b_B = lower(B) / denom for B != Omega; only the vacuous model
    # conditioned on Omega reaches a_B + b_B = 0
    floor_ok = a_b + b_b > 0 or (a + b == 0 and B.is_sure)
    if not (b_b > 0 and a_b <= 0 and a_b + b_b <= 1 and floor_ok):
        raise InternalInconsistencyError(f"conditioned parameters a={a_b}, b={b_b} left the VBM region")
    return NLModel(sub, p0, a_b, b_b)


def submodel_stability(model: NLModel, B: Event) -> Submodel:
    """Submodel tag of the conditioned model; must keep the original kind."""
    tag = recognize_submodel(model)
    if tag.kind not in ("pmm", "tvm", "epsilon", "vacuous"):
        raise UnsupportedModelError(f"{model} is not a named VBM submodel")
    if model.lower(B) == 0:
        raise UnsupportedModelError("submodel stability needs lower(B) > 0")
    new_tag = recognize_submodel(condition_vbm(model, B))
    if new_tag.kind != tag.kind:
        raise InternalInconsistencyError(f"{tag} became {new_tag} after conditioning on {B}")
    return new_tag


def vbm_pmm_witness(model: NLModel) -> Optional[Submodel]:
    """PMM tag if some ``A | B`` has regular != natural extension, else ``None``."""
    if model.family is not Family.VBM:
        raise UnsupportedModelError("vbm_pmm_witness needs a VBM")
    space = model.space
    for B in space.events():
        if B.is_empty or not model.lower(B) == 0 < model.upper(B):
            continue
        # the condition only involves C = not A & B, a nonempty sub-event of B
        sub = B.mask
        while sub:
            if model.upper(space.from_mask(sub)) == 0:
                tag = recognize_submodel(model)
                if tag.kind != "pmm":
                    raise InternalInconsistencyError(
                        f"regular extension differs for a VBM that is {tag}, not a PMM"
                    )
                return tag
            sub = (sub - 1) & B.mask
    return None
