"""Small reference models used in the docs, demos and tests."""

from fractions import Fraction

from .events import Partition, SampleSpace
from .model import NLModel, make_submodel, pari_mutuel, epsilon_contamination


def example_model():
    """Six-atom VBM with ``b = 1.1``, ``a = -0.2`` and the event/partition studied with it.

    Returns ``(model, A, partition)`` with ``A = w2|w4|w5`` and the partition
    into consecutive pairs ``{w1|w2, w3|w4, w5|w6}``.
    """
    space = SampleSpace([f"w{i}" for i in range(1, 7)])
    model = NLModel(space, ["0.1", "0.2", "0.1", "0.1", "0.25", "0.25"], a="-0.2", b="1.1")
    A = space.event("w2", "w4", "w5")
    blocks = Partition.from_labels(space, [["w1", "w2"], ["w3", "w4"], ["w5", "w6"]])
    return model, A, blocks


def uniform_epsilon_model(n=4, eps=Fraction(1, 10)):
    """Epsilon-contamination of the uniform distribution on ``n`` atoms."""
    space = SampleSpace([f"w{i}" for i in range(1, n + 1)])
    return make_submodel(epsilon_contamination(eps), space, [Fraction(1, n)] * n)


def zero_mass_pmm():
    """Pari-mutuel model (delta = 1/5) on three atoms, the middle one with zero mass.

    Conditioning ``w1|w3`` on ``w1|w2`` is a case where the regular extension
    differs from the natural extension.
    """
    space = SampleSpace(["w1", "w2", "w3"])
    return make_submodel(pari_mutuel(Fraction(1, 5)), space, ["1/10", "0", "9/10"])
