"""Credal-set ground truth for 2-monotone lower probabilities.

The extreme points of the credal set of a 2-monotone lower probability are
the "greedy" probabilities: for an ordering of the atoms, each atom gets the
increase of the lower probability when it joins the atoms before it.
Conditional lower/upper probabilities are then minima/maxima of
``P(A & B) / P(B)`` over those points, which is exact because a
linear-fractional objective on a polytope attains its extrema at vertices.

Vertices are stored as integers scaled by a common denominator so that
numpy can evaluate all of them at once without losing exactness.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .conditioning import ConditionalAssessment, regular_extension
from .errors import CapacityError, PreconditionError, UnsupportedModelError, UsageError
from .events import Event, SampleSpace
from .model import Family, NLModel, Verdict, check_two_monotone

#: Largest atom count for the n! vertex enumeration.
VERTEX_CAP = 9
#: Default bracket width for the bisection in the regular-extension oracle.
BISECTION_WIDTH = Fraction(1, 2**40)
#: Default agreement tolerance between the delta-limit and the closed form.
REGULAR_TOLERANCE = Fraction(1, 2**20)

_INT64_SAFE = 2**40


@dataclass(frozen=True, eq=False)
class VertexSet:
    """Deduplicated extreme points, sorted lexicographically.

    ``scaled`` holds ``vertices * denominator`` as an integer array with
    one row per vertex; it is read-only and safe to share between threads.
    """

    space: SampleSpace
    scaled: np.ndarray
    denominator: int
    _event_probs: dict = field(default_factory=dict, repr=False)

    def __len__(self) -> int:
        return self.scaled.shape[0]

    @property
    def vertices(self) -> list[tuple[Fraction, ...]]:
        d = self.denominator
        return [tuple(Fraction(int(x), d) for x in row) for row in self.scaled]

    def scaled_prob(self, event: Event) -> np.ndarray:
        """``P(event) * denominator`` for every vertex."""
        if event.space != self.space:
            raise UsageError("event does not belong to the vertex set's sample space")
        cached = self._event_probs.get(event.mask)
        if cached is None:
            idx = list(event.indices)
            if idx:
                cached = self.scaled[:, idx].sum(axis=1)
            else:
                cached = np.zeros(len(self), dtype=self.scaled.dtype)
            cached.flags.writeable = False
            self._event_probs[event.mask] = cached
        return cached

    def min_prob(self, event: Event) -> Fraction:
        return Fraction(int(self.scaled_prob(event).min()), self.denominator)

    def max_prob(self, event: Event) -> Fraction:
        return Fraction(int(self.scaled_prob(event).max()), self.denominator)

    def ratio_range(self, num: Event, den: Event) -> tuple[Fraction, Fraction]:
        """Exact min and max of ``P(num) / P(den)`` over the vertices.

        Requires ``P(den) > 0`` at every vertex.
        """
        p_num, p_den = self.scaled_prob(num), self.scaled_prob(den)
        if (p_den <= 0).any():
            raise PreconditionError("some vertex gives the conditioning event probability 0")
        return _exact_extreme(p_num, p_den, min), _exact_extreme(p_num, p_den, max)


def _exact_extreme(num: np.ndarray, den: np.ndarray, pick) -> Fraction:
    ratios = num.astype(float) / den.astype(float)
    best = ratios.min() if pick is min else ratios.max()
    slack = 1e-9 * max(abs(best), 1e-300)
    near = np.nonzero(np.abs(ratios - best) <= slack)[0]
    return pick(Fraction(int(num[i]), int(den[i])) for i in near)


def _scale(values: Sequence[Fraction]) -> tuple[list[int], int]:
    denominator = math.lcm(*(v.denominator for v in values))
    return [int(v * denominator) for v in values], denominator


def permutation_vertices(
    model: NLModel, cap: int = VERTEX_CAP, require_two_monotone: bool = True
) -> VertexSet:
    """Extreme points generated by every ordering of the atoms.

    With ``require_two_monotone=False`` the same construction runs on any
    model; the points are then only candidates and may fail to dominate the
    lower probability (which :func:`envelope_check` reports).
    """
    n = model.space.n
    if n > cap:
        raise CapacityError("permutation vertex enumeration", n, cap)
    if require_two_monotone:
        if model.family is Family.OTHER or not model.is_coherent:
            raise UnsupportedModelError("vertex enumeration needs a coherent model")
        if not check_two_monotone(model):
            raise UnsupportedModelError("vertex enumeration needs a 2-monotone model")

    ints, denominator = _scale(model.lower_by_mask())
    dtype = np.int64 if denominator < _INT64_SAFE else object
    table = np.array(ints, dtype=dtype)

    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    prefix = np.bitwise_or.accumulate(np.left_shift(1, perms), axis=1)
    cumulative = table[prefix]
    increments = np.diff(cumulative, axis=1, prepend=np.zeros((len(perms), 1), dtype=dtype))
    scaled = np.empty_like(increments)
    rows = np.arange(len(perms))[:, None]
    scaled[rows, perms] = increments

    if dtype is object:
        unique = sorted(set(map(tuple, scaled.tolist())))
        scaled = np.array(unique, dtype=object)
    else:
        scaled = np.unique(scaled, axis=0)
    scaled.flags.writeable = False
    return VertexSet(model.space, scaled, denominator)


def envelope_check(model: NLModel, vertices: Optional[VertexSet] = None) -> Verdict:
    """Check that the vertices' lower/upper envelopes reproduce the model on every event.

    Fails (with the first offending event as witness) for models that are
    not coherent, since then no set of probabilities has them as envelope.
    """
    if vertices is None:
        vertices = permutation_vertices(model, require_two_monotone=False)
    for event in model.space.events():
        if vertices.min_prob(event) != model.lower(event):
            return Verdict(False, (event,))
        if vertices.max_prob(event) != model.upper(event):
            return Verdict(False, (event,))
    return Verdict(True)


def oracle_natural_extension(
    model: NLModel, A: Event, B: Event, vertices: Optional[VertexSet] = None
) -> ConditionalAssessment:
    if model.lower(B) == 0:
        raise UnsupportedModelError("the vertex oracle needs lower(B) > 0")
    if vertices is None:
        vertices = permutation_vertices(model)
    lower, upper = vertices.ratio_range(A & B, B)
    return ConditionalAssessment(lower, upper, "oracle", ("vertex", "vertex"))


@dataclass(frozen=True)
class RegularOracleResult:
    """Delta-restricted estimates of the regular extension.

    ``lower_estimates[i]`` / ``upper_estimates[i]`` belong to ``deltas[i]``;
    ``lower`` / ``upper`` are the estimates at the last delta. ``converged``
    tells whether those are within ``tolerance`` of the closed form.
    """

    deltas: tuple[Fraction, ...]
    lower_estimates: tuple[Fraction, ...]
    upper_estimates: tuple[Fraction, ...]
    closed_form: ConditionalAssessment
    tolerance: Fraction
    converged: bool

    @property
    def lower(self) -> Fraction:
        return self.lower_estimates[-1]

    @property
    def upper(self) -> Fraction:
        return self.upper_estimates[-1]

    def assessment(self) -> ConditionalAssessment:
        return ConditionalAssessment(self.lower, self.upper, "oracle", ("delta-limit",) * 2)


def _restricted_points(vertices: VertexSet, num: Event, den: Event, delta: Fraction):
    """``(P(num), P(den))`` at the basic feasible points of ``{P : P(den) >= delta}``.

    The restricted polytope's vertices are original vertices with
    ``P(den) >= delta`` and points where an edge crosses ``P(den) = delta``;
    every pair of vertices on both sides is included, which is a superset.
    """
    d = vertices.denominator
    proj = {(Fraction(int(x), d), Fraction(int(y), d))
            for x, y in zip(vertices.scaled_prob(num), vertices.scaled_prob(den))}
    above = [p for p in proj if p[1] >= delta]
    below = [p for p in proj if p[1] < delta]
    points = list(above)
    for u_num, u_den in below:
        for w_num, w_den in above:
            if w_den == delta:
                continue
            lam = (delta - u_den) / (w_den - u_den)
            points.append((u_num + lam * (w_num - u_num), delta))
    return points


def _bisect_min_ratio(points, width: Fraction) -> Fraction:
    """Largest ``t`` (up to ``width``) with ``min(num - t * den) >= 0`` over ``points``."""

    def feasible(t):
        return min(n - t * d for n, d in points) >= 0

    lo, hi = Fraction(0), Fraction(1)
    if feasible(hi):
        return hi
    while hi - lo >= width:
        mid = (lo + hi) / 2
        if feasible(mid):
            lo = mid
        else:
            hi = mid
    return lo


def oracle_regular_extension(
    model: NLModel,
    A: Event,
    B: Event,
    deltas: Sequence,
    width: Fraction = BISECTION_WIDTH,
    tolerance: Fraction = REGULAR_TOLERANCE,
    vertices: Optional[VertexSet] = None,
) -> RegularOracleResult:
    """Regular extension approximated by restricting the credal set to ``P(B) >= delta``.

    For every delta, the minimum of ``P(A | B)`` over the restricted set is
    located by bisection on ``t`` using the linear test
    ``min P(A & B) - t * P(B) >= 0``; the upper value comes from the same
    procedure applied to ``not A``.
    """
    if not model.lower(B) == 0 < model.upper(B):
        raise PreconditionError("the regular-extension oracle needs lower(B) = 0 < upper(B)")
    if vertices is None:
        vertices = permutation_vertices(model)
    deltas = tuple(Fraction(d) for d in deltas)
    top = model.upper(B)
    if any(not 0 < d <= top for d in deltas):
        raise PreconditionError(f"every delta must lie in (0, upper(B)] = (0, {top}]")

    lowers, uppers = [], []
    for delta in deltas:
        lowers.append(_bisect_min_ratio(_restricted_points(vertices, A & B, B, delta), width))
        uppers.append(1 - _bisect_min_ratio(_restricted_points(vertices, ~A & B, B, delta), width))
    closed = regular_extension(model, A, B)
    converged = (
        abs(lowers[-1] - closed.lower) <= tolerance and abs(uppers[-1] - closed.upper) <= tolerance
    )
    return RegularOracleResult(deltas, tuple(lowers), tuple(uppers), closed, tolerance, converged)
