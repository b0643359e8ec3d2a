"""Random NL models, events and partitions with small-denominator rationals.

Used by the ``verify`` command and the property tests. Base probabilities
deliberately include zero-mass atoms so the ``lower(B) = 0`` branches get
exercised.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional

from .events import Event, Partition, SampleSpace
from .model import Family, NLModel

DENOMINATOR = 20
HBM_ATTEMPTS = 200


def random_p0(rng: random.Random, n: int, denominator: int = DENOMINATOR, zero_rate: float = 0.2):
    """Probability vector with entries in ``1/denominator`` steps, some forced to 0."""
    live = [i for i in range(n) if rng.random() >= zero_rate] or [rng.randrange(n)]
    # stars and bars over the live atoms
    cuts = sorted(rng.randint(0, denominator) for _ in range(len(live) - 1))
    parts = [hi - lo for lo, hi in zip([0, *cuts], [*cuts, denominator])]
    p0 = [Fraction(0)] * n
    for i, k in zip(live, parts):
        p0[i] = Fraction(k, denominator)
    return p0


def random_space(n: int) -> SampleSpace:
    return SampleSpace([f"w{i + 1}" for i in range(n)])


def random_vbm(rng: random.Random, space: SampleSpace, denominator: int = DENOMINATOR) -> NLModel:
    """VBM with ``a <= 0 <= a + b <= 1``; ``b`` may exceed 1."""
    while True:
        s = Fraction(rng.randint(0, denominator), denominator)  # a + b
        a = -Fraction(rng.randint(0, denominator), denominator)
        if s - a > 0:
            return NLModel(space, random_p0(rng, space.n, denominator), a, s - a)


def random_hbm(
    rng: random.Random, space: SampleSpace, denominator: int = DENOMINATOR, coherent: bool = True
) -> Optional[NLModel]:
    """HBM (``a + b > 1``, ``b + 2a <= 1``), rejection-sampled for coherence.

    Returns ``None`` when no coherent draw turned up within the attempt budget.
    """
    for _ in range(HBM_ATTEMPTS):
        b = Fraction(rng.randint(1, 2 * denominator), denominator)
        # a in (1 - b, (1 - b) / 2]
        lo, hi = 1 - b, (1 - b) / 2
        if not lo < hi:
            continue
        a = lo + (hi - lo) * Fraction(rng.randint(1, denominator), denominator)
        m = NLModel(space, random_p0(rng, space.n, denominator), a, b)
        if m.family is Family.HBM and (m.is_coherent or not coherent):
            return m
    return None


def random_event(rng: random.Random, space: SampleSpace) -> Event:
    return space.from_mask(rng.randrange(1 << space.n))


def random_partition(rng: random.Random, space: SampleSpace, kmax: Optional[int] = None) -> Partition:
    kmax = space.n if kmax is None else min(kmax, space.n)
    k = rng.randint(1, kmax)
    labels = list(range(k)) + [rng.randrange(k) for _ in range(space.n - k)]
    rng.shuffle(labels)
    masks = [0] * k
    for i, g in enumerate(labels):
        masks[g] |= 1 << i
    return Partition([space.from_mask(m) for m in masks])


def random_independent_case(rng: random.Random, space: SampleSpace, attempts: int = 100):
    """``(A, partition)`` with ``A`` logically independent of a nontrivial partition, or ``None``."""
    from .events import is_independent

    for _ in range(attempts):
        A = random_event(rng, space)
        if len(A) < 2 or len(~A) < 2:
            continue
        p = random_partition(rng, space, min(len(A), len(~A)))
        if len(p) >= 2 and is_independent(A, p):
            return A, p
    return None
