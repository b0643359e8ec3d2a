"""Finite event algebra over an ordered set of atoms.

Events are immutable bitmasks over the atom indices of a
:class:`SampleSpace`. Partitions are tuples of pairwise disjoint,
nonempty events covering the sure event.

>>> S = SampleSpace(["w1", "w2", "w3", "w4"])
>>> A = S.event("w1", "w2")
>>> (~A).labels
('w3', 'w4')
>>> B = Partition.from_labels(S, [["w1", "w3"], ["w2", "w4"]])
>>> classify_dependence(A, B)
<Dependence.INDEPENDENT: 'independent'>
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import factorial
from typing import Iterable, Iterator, Sequence

from .errors import CapacityError, UsageError

#: Largest atom count for which the 2^n event scans are allowed.
ATOM_CAP = 14
#: Largest partition size for coarsening enumeration (Bell-number growth).
COARSENING_CAP = 10


@dataclass(frozen=True)
class SampleSpace:
    atoms: tuple[str, ...]

    def __init__(self, atoms: Iterable[str]):
        atoms = tuple(str(a) for a in atoms)
        if not atoms:
            raise UsageError("a sample space needs at least one atom")
        if len(set(atoms)) != len(atoms):
            raise UsageError(f"duplicate atom labels in {atoms}")
        object.__setattr__(self, "atoms", atoms)

    def __len__(self) -> int:
        return len(self.atoms)

    @property
    def n(self) -> int:
        return len(self.atoms)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.atoms)) - 1

    def index(self, label: str) -> int:
        try:
            return self.atoms.index(label)
        except ValueError:
            raise UsageError(f"unknown atom {label!r}") from None

    def from_mask(self, mask: int) -> "Event":
        return Event(self, mask)

    def event(self, *labels: str) -> "Event":
        mask = 0
        for label in labels:
            mask |= 1 << self.index(label)
        return Event(self, mask)

    def atom(self, label: str) -> "Event":
        return self.event(label)

    @property
    def omega(self) -> "Event":
        return Event(self, self.full_mask)

    @property
    def empty(self) -> "Event":
        return Event(self, 0)

    def atom_events(self) -> list["Event"]:
        return [Event(self, 1 << i) for i in range(self.n)]

    def events(self, cap: int = ATOM_CAP) -> Iterator["Event"]:
        """All 2^n events in increasing mask order."""
        if self.n > cap:
            raise CapacityError("event scan", self.n, cap)
        for mask in range(1 << self.n):
            yield Event(self, mask)

    def subspace(self, event: "Event") -> "SampleSpace":
        """The sample space made of the atoms of ``event`` (in order)."""
        _check_space(self, event)
        if event.is_empty:
            raise UsageError("cannot restrict to the impossible event")
        return SampleSpace(event.labels)


@dataclass(frozen=True)
class Event:
    space: SampleSpace
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.space.n:
            raise UsageError(f"mask {self.mask:#x} uses bits outside {self.space.n} atoms")

    def __invert__(self) -> "Event":
        return Event(self.space, self.space.full_mask & ~self.mask)

    def __and__(self, other: "Event") -> "Event":
        _check_space(self, other)
        return Event(self.space, self.mask & other.mask)

    def __or__(self, other: "Event") -> "Event":
        _check_space(self, other)
        return Event(self.space, self.mask | other.mask)

    def implies(self, other: "Event") -> bool:
        _check_space(self, other)
        return self.mask & ~other.mask == 0

    def __len__(self) -> int:
        return self.mask.bit_count()

    @property
    def is_empty(self) -> bool:
        return self.mask == 0

    @property
    def is_sure(self) -> bool:
        return self.mask == self.space.full_mask

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.space.n) if self.mask >> i & 1)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self.space.atoms[i] for i in self.indices)

    def restrict(self, to: "Event") -> "Event":
        """This event intersected with ``to``, as an event of ``to``'s subspace."""
        _check_space(self, to)
        sub = self.space.subspace(to)
        mask = 0
        for j, i in enumerate(to.indices):
            if self.mask >> i & 1:
                mask |= 1 << j
        return Event(sub, mask)

    def __str__(self) -> str:
        if self.is_empty:
            return "FALSE"
        if self.is_sure:
            return "TRUE"
        return "|".join(self.labels)

    def __repr__(self) -> str:
        return f"Event({str(self)!r})"


def _check_space(*items) -> None:
    spaces = {item if isinstance(item, SampleSpace) else item.space for item in items}
    if len(spaces) > 1:
        raise UsageError("events belong to different sample spaces")


@dataclass(frozen=True)
class Partition:
    space: SampleSpace
    blocks: tuple[Event, ...]

    def __init__(self, blocks: Sequence[Event]):
        blocks = tuple(blocks)
        if not blocks:
            raise UsageError("a partition needs at least one block")
        space = blocks[0].space
        _check_space(*blocks)
        seen = 0
        for block in blocks:
            if block.is_empty:
                raise UsageError("partition blocks must be nonempty")
            if block.mask & seen:
                raise UsageError(f"block {block} overlaps an earlier block")
            seen |= block.mask
        if seen != space.full_mask:
            raise UsageError("partition blocks do not cover the sample space")
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def from_labels(cls, space: SampleSpace, blocks: Iterable[Iterable[str]]) -> "Partition":
        return cls([space.event(*labels) for labels in blocks])

    @classmethod
    def finest(cls, space: SampleSpace) -> "Partition":
        return cls(space.atom_events())

    @classmethod
    def from_rgs(cls, space: SampleSpace, rgs: Sequence[int]) -> "Partition":
        """Partition of the atoms from a restricted growth string."""
        masks = [0] * (max(rgs) + 1)
        for i, k in enumerate(rgs):
            masks[k] |= 1 << i
        return cls([Event(space, m) for m in masks])

    def __iter__(self) -> Iterator[Event]:
        return iter(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __getitem__(self, i: int) -> Event:
        return self.blocks[i]

    @property
    def is_trivial(self) -> bool:
        return len(self.blocks) == 1

    def coarsenings(self, cap: int = COARSENING_CAP) -> Iterator["Partition"]:
        """Nontrivial partitions strictly coarser than this one.

        Blocks of the coarser partition are unions of blocks of ``self``;
        order follows the restricted growth strings over the block indices.
        """
        k = len(self.blocks)
        if k > cap:
            raise CapacityError("coarsening enumeration", k, cap)
        for rgs in restricted_growth_strings(k):
            groups = max(rgs) + 1
            if groups == 1 or groups == k:
                continue
            masks = [0] * groups
            for block, g in zip(self.blocks, rgs):
                masks[g] |= block.mask
            yield Partition([Event(self.space, m) for m in masks])

    def __str__(self) -> str:
        return "{" + ", ".join(str(b) for b in self.blocks) + "}"


def restricted_growth_strings(n: int) -> Iterator[tuple[int, ...]]:
    """Restricted growth strings of length ``n`` in lexicographic order.

    Each one encodes a set partition of ``range(n)``; there are Bell(n) of them.

    >>> list(restricted_growth_strings(3))
    [(0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (0, 1, 2)]
    """
    if n == 0:
        yield ()
        return
    a = [0] * n
    b = [1] * n  # b[i] = 1 + max(a[:i])
    while True:
        yield tuple(a)
        # rightmost position that can still be incremented
        i = n - 1
        while i > 0 and a[i] == b[i]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        for j in range(i + 1, n):
            a[j] = 0
            b[j] = max(b[i], a[i] + 1)


class Dependence(str, enum.Enum):
    INDEPENDENT = "independent"
    DEPENDENT = "dependent"
    SEMIDEP_TYPE1 = "semidep-type1"
    SEMIDEP_TYPE2 = "semidep-type2"
    SEMIDEP_TWO_SIDED = "semidep-two-sided"


def classify_dependence(A: Event, partition: Partition) -> Dependence:
    _check_space(A, partition)
    implies_a = [B.implies(A) for B in partition]
    implies_not_a = [B.implies(~A) for B in partition]
    loose = [not (x or y) for x, y in zip(implies_a, implies_not_a)]
    if all(loose):
        return Dependence.INDEPENDENT
    if not any(loose):
        return Dependence.DEPENDENT
    if not any(implies_a):
        return Dependence.SEMIDEP_TYPE1
    if not any(implies_not_a):
        return Dependence.SEMIDEP_TYPE2
    return Dependence.SEMIDEP_TWO_SIDED


def is_independent(A: Event, partition: Partition) -> bool:
    return classify_dependence(A, partition) is Dependence.INDEPENDENT


def independence_cardinality_check(A: Event, partition: Partition) -> bool:
    """Necessary size condition ``2 <= |B| <= min(|A|, |not A|)`` for logical independence."""
    _check_space(A, partition)
    return 2 <= len(partition) <= min(len(A), len(~A))


def enumerate_independent_partitions(
    A: Event, kmax: int, cap: int = ATOM_CAP
) -> Iterator[Partition]:
    """Partitions with at most ``kmax`` blocks of which ``A`` is logically independent.

    Partitions are unordered (each set of blocks is yielded once). Blocks
    are built by handing every atom of ``A`` and of ``not A`` to one of the
    ``k`` blocks such that each block receives at least one of each.
    """
    space = A.space
    if space.n > cap:
        raise CapacityError("independent partition enumeration", space.n, cap)
    inside, outside = A.indices, (~A).indices
    kmax = min(kmax, len(inside), len(outside))
    for k in range(2, kmax + 1):
        for left in _surjective_rgs(len(inside), k):
            # block labels of the A side are canonical; the not-A side is any surjection
            for right in _surjections(len(outside), k):
                masks = [0] * k
                for i, g in zip(inside, left):
                    masks[g] |= 1 << i
                for i, g in zip(outside, right):
                    masks[g] |= 1 << i
                yield Partition([Event(space, m) for m in masks])


def count_independent_partitions(A: Event, k: int, ordered: bool = True) -> int:
    """Number of ``k``-block partitions ``A`` is logically independent of.

    With ``ordered=True`` each partition counts ``k!`` times, once for every
    labelling of its blocks.
    """
    count = sum(1 for p in enumerate_independent_partitions(A, k) if len(p) == k)
    return count * factorial(k) if ordered else count


def _surjective_rgs(n: int, k: int) -> Iterator[tuple[int, ...]]:
    for rgs in restricted_growth_strings(n):
        if n and max(rgs) + 1 == k:
            yield rgs


def _surjections(n: int, k: int) -> Iterator[tuple[int, ...]]:
    def rec(i, acc, used):
        if i == n:
            if used == (1 << k) - 1:
                yield tuple(acc)
            return
        # prune when too few positions remain to hit every label
        if k - used.bit_count() > n - i:
            return
        for g in range(k):
            acc.append(g)
            yield from rec(i + 1, acc, used | 1 << g)
            acc.pop()

    yield from rec(0, [], 0)
