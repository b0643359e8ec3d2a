"""Nearly-Linear lower/upper probability models.

A model is a base probability ``p0`` on the atoms together with an affine
distortion ``b * P0(A) + a`` (lower) and ``b * P0(A) + c`` (upper), clamped
to ``[0, 1]``, where ``c = 1 - (a + b)``. All arithmetic uses
:class:`fractions.Fraction`; decimal strings such as ``"0.1"`` are read as
exact decimal fractions.

>>> S = SampleSpace(["w1", "w2", "w3", "w4", "w5", "w6"])
>>> m = NLModel(S, ["0.1", "0.2", "0.1", "0.1", "0.25", "0.25"], a="-0.2", b="1.1")
>>> m.family
<Family.VBM: 'VBM'>
>>> A = S.event("w2", "w4", "w5")
>>> m.lower(A), m.upper(A)
(Fraction(81, 200), Fraction(141, 200))
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, NamedTuple, Optional, Sequence, Union

from .errors import CapacityError, InvalidParameterError, UnsupportedModelError, UsageError
from .events import Event, SampleSpace

Number = Union[Fraction, int, str]

#: Atom cap for the O(4^n) pairwise scans.
PAIR_SCAN_CAP = 10


def to_fraction(value: Number) -> Fraction:
    """Exact rational from an int, Fraction, or ``"p/q"`` / decimal string.

    Floats are refused: their binary expansion is almost never the value meant.
    """
    if isinstance(value, float):
        raise InvalidParameterError(f"refusing float {value!r}; pass a string or Fraction")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise InvalidParameterError(f"not a rational number: {value!r}") from exc


class Family(str, enum.Enum):
    VBM = "VBM"
    HBM = "HBM"
    OTHER = "other"


def classify(a: Number, b: Number) -> Family:
    a, b = to_fraction(a), to_fraction(b)
    if b <= 0:
        raise InvalidParameterError(f"b must be positive, got {b}")
    if 0 <= a + b <= 1 and a <= 0:
        return Family.VBM
    if a + b > 1 and b + 2 * a <= 1:
        return Family.HBM
    return Family.OTHER


@dataclass(frozen=True)
class NLModel:
    space: SampleSpace
    p0: tuple[Fraction, ...]
    a: Fraction
    b: Fraction

    def __init__(self, space: SampleSpace, p0: Sequence[Number], a: Number, b: Number):
        p0 = tuple(to_fraction(p) for p in p0)
        if len(p0) != space.n:
            raise UsageError(f"p0 has {len(p0)} masses for {space.n} atoms")
        if any(p < 0 for p in p0):
            raise InvalidParameterError("p0 masses must be nonnegative")
        if sum(p0) != 1:
            raise InvalidParameterError(f"p0 masses sum to {sum(p0)}, not 1")
        a, b = to_fraction(a), to_fraction(b)
        classify(a, b)  # validates b > 0
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "p0", p0)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def c(self) -> Fraction:
        return 1 - (self.a + self.b)

    @property
    def params(self) -> tuple[Fraction, Fraction, Fraction]:
        return self.a, self.b, self.c

    @cached_property
    def family(self) -> Family:
        return classify(self.a, self.b)

    @cached_property
    def _p0_table(self) -> list[Fraction]:
        n = self.space.n
        table = [Fraction(0)] * (1 << n)
        for mask in range(1, 1 << n):
            low = mask & -mask
            table[mask] = table[mask ^ low] + self.p0[low.bit_length() - 1]
        return table

    @cached_property
    def _lower_table(self) -> list[Fraction]:
        return [self._lower_mask(m) for m in range(1 << self.space.n)]

    def _lower_mask(self, mask: int) -> Fraction:
        if mask == 0:
            return Fraction(0)
        if mask == self.space.full_mask:
            return Fraction(1)
        value = self.b * self._p0_table[mask] + self.a
        if self.family is Family.VBM:
            return max(value, Fraction(0))
        return min(max(value, Fraction(0)), Fraction(1))

    def _check(self, event: Event) -> None:
        if event.space != self.space:
            raise UsageError("event does not belong to the model's sample space")

    def prob0(self, event: Event) -> Fraction:
        """Base probability ``P0(event)``."""
        self._check(event)
        return self._p0_table[event.mask]

    def lower(self, event: Event) -> Fraction:
        self._check(event)
        return self._lower_table[event.mask]

    def upper(self, event: Event) -> Fraction:
        self._check(event)
        mask = event.mask
        if mask == 0:
            return Fraction(0)
        if mask == self.space.full_mask:
            return Fraction(1)
        value = self.b * self._p0_table[mask] + self.c
        if self.family is Family.VBM:
            return min(value, Fraction(1))
        return max(min(value, Fraction(1)), Fraction(0))

    def lower_by_mask(self) -> list[Fraction]:
        """Lower probabilities of all events, indexed by mask."""
        return list(self._lower_table)

    def is_extreme(self, event: Event) -> bool:
        lo, up = self.lower(event), self.upper(event)
        return lo == up and lo in (0, 1)

    def require_coherent(self) -> None:
        """Raise unless the model is a VBM or a subadditive HBM."""
        if self.family is Family.VBM:
            return
        verdict = check_coherence(self)
        if not verdict:
            raise UnsupportedModelError(
                f"HBM is not coherent (subadditivity fails at {verdict.witness})"
            )

    @cached_property
    def is_coherent(self) -> bool:
        if self.family is Family.OTHER:
            return False
        return bool(check_coherence(self))

    def __str__(self) -> str:
        p0 = ", ".join(str(p) for p in self.p0)
        return f"NLModel({self.family.value}; a={self.a}, b={self.b}, c={self.c}; P0=({p0}))"


class Verdict(NamedTuple):
    """Outcome of an exhaustive check; falsy when a witness was found."""

    holds: bool
    witness: Optional[tuple[Event, ...]] = None

    def __bool__(self) -> bool:
        return self.holds


def check_subadditivity(upper: Sequence[Fraction], space: SampleSpace) -> Verdict:
    """Scan ``upper(A) + upper(B) >= upper(A | B)`` over all pairs of masks.

    The witness is the lexicographically first violating pair ``(A, B)``.
    """
    n = space.n
    if n > PAIR_SCAN_CAP:
        raise CapacityError("subadditivity scan", n, PAIR_SCAN_CAP)
    size = 1 << n
    # same comparisons on integers scaled by the common denominator
    scale = math.lcm(*(Fraction(u).denominator for u in upper))
    ints = [int(u * scale) for u in upper]
    for x in range(size):
        ux = ints[x]
        for y in range(x, size):
            if ux + ints[y] < ints[x | y]:
                return Verdict(False, (space.from_mask(x), space.from_mask(y)))
    return Verdict(True)


def check_coherence(model: NLModel) -> Verdict:
    if model.family is Family.VBM:
        return Verdict(True)
    if model.family is Family.OTHER:
        raise UnsupportedModelError("coherence is only decided for VBM and HBM families")
    upper = [model.upper(e) for e in model.space.events(PAIR_SCAN_CAP)]
    return check_subadditivity(upper, model.space)


def check_two_monotone(model: NLModel, cap: int = PAIR_SCAN_CAP) -> Verdict:
    """Exhaustive 2-monotonicity scan of the lower probability.

    Also scans 2-alternation of the upper probability; the witness is the
    first violating pair of either scan.
    """
    n = model.space.n
    if n > cap:
        raise CapacityError("2-monotonicity scan", n, cap)
    lower = model.lower_by_mask()
    upper = [model.upper(e) for e in model.space.events(cap)]
    size = 1 << n
    for x in range(size):
        for y in range(x, size):
            if lower[x | y] + lower[x & y] < lower[x] + lower[y]:
                return Verdict(False, (model.space.from_mask(x), model.space.from_mask(y)))
            if upper[x | y] + upper[x & y] > upper[x] + upper[y]:
                return Verdict(False, (model.space.from_mask(x), model.space.from_mask(y)))
    return Verdict(True)


def non_correlation(model_or_p0, A: Event, B: Event) -> bool:
    """Exact test of ``P0(A & B) == P0(A) * P0(B)``."""
    prob = model_or_p0.prob0 if isinstance(model_or_p0, NLModel) else _p0_func(model_or_p0)
    return prob(A & B) == prob(A) * prob(B)


def _p0_func(p0: Sequence[Number]):
    masses = [to_fraction(p) for p in p0]

    def prob(event: Event) -> Fraction:
        return sum((masses[i] for i in event.indices), Fraction(0))

    return prob


# -- named submodels ---------------------------------------------------------


class Submodel(NamedTuple):
    """A named VBM submodel and its parameter.

    ``kind`` is one of ``vacuous``, ``epsilon``, ``pmm``, ``tvm``, ``generic``;
    ``value`` is epsilon, delta, or the TVM ``a``, and ``None`` otherwise.
    """

    kind: str
    value: Optional[Fraction] = None

    def __str__(self) -> str:
        names = {"epsilon": "eps", "pmm": "delta", "tvm": "a"}
        if self.kind in names:
            return f"{self.kind}({names[self.kind]}={self.value})"
        return self.kind


VACUOUS = Submodel("vacuous")
GENERIC = Submodel("generic")


def epsilon_contamination(eps: Number) -> Submodel:
    return Submodel("epsilon", to_fraction(eps))


def pari_mutuel(delta: Number) -> Submodel:
    return Submodel("pmm", to_fraction(delta))


def total_variation(a: Number) -> Submodel:
    return Submodel("tvm", to_fraction(a))


def submodel_params(tag: Submodel) -> tuple[Fraction, Fraction]:
    """Return ``(a, b)`` for a named submodel, validating its parameter range."""
    kind, value = tag
    if kind == "vacuous":
        return Fraction(-1), Fraction(1)
    if kind == "epsilon":
        if not 0 <= value < 1:
            raise InvalidParameterError(f"epsilon must lie in [0, 1), got {value}")
        return Fraction(0), 1 - value
    if kind == "pmm":
        if not value > 0:
            raise InvalidParameterError(f"PMM delta must be positive, got {value}")
        return -value, 1 + value
    if kind == "tvm":
        if not -1 < value < 0:
            raise InvalidParameterError(f"TVM a must lie in (-1, 0), got {value}")
        return value, Fraction(1)
    raise InvalidParameterError(f"cannot build a model from submodel tag {tag}")


def make_submodel(tag: Submodel, space: SampleSpace, p0: Sequence[Number]) -> NLModel:
    a, b = submodel_params(tag)
    return NLModel(space, p0, a, b)


def recognize_submodel(model: NLModel) -> Submodel:
    a, b, c = model.params
    if model.family is not Family.VBM:
        return GENERIC
    if a + b == 0:
        return VACUOUS
    if a == 0 and 0 < b <= 1:
        return Submodel("epsilon", 1 - b)
    if c == 0 and b > 1 and a < 0:
        return Submodel("pmm", b - 1)
    if b == 1 and -1 < a < 0:
        return Submodel("tvm", a)
    return GENERIC


def vacuous_model(space: SampleSpace, p0: Optional[Iterable[Number]] = None) -> NLModel:
    if p0 is None:
        p0 = [Fraction(1, space.n)] * space.n
    return NLModel(space, list(p0), -1, 1)
