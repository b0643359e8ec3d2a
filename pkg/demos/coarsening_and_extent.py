"""
Coarser partitions and the extent of dilation
=============================================

Merging blocks of a dilating partition can keep the dilation. The extent
of dilation is the smallest width increase over the blocks; a closed form
gives it without conditioning on every block.
"""

from fractions import Fraction

from nldilation import Partition, SampleSpace, epsilon_contamination, make_submodel
from nldilation.dilation import (
    coarsening_hypotheses,
    dilating_coarsenings,
    extent,
    non_correlation_dilation,
)
from nldilation.fixtures import example_model

model, A, parts = example_model()
for coarser, report in dilating_coarsenings(model, A, parts):
    print(f"{coarser}: {report.verdict}")

# the sufficient condition does not cover this model
print("hypotheses:", coarsening_hypotheses(model, A, parts))

r = extent(model, A, parts)
print(f"extent {r.value} (brute force {r.brute_force}), attained on {r.argmin}")
print(f"  B* = {r.b_star}, M1 = {r.m1}, terms {[str(t) for t in r.terms]}")

###############################################################################
# A contamination model where A is uncorrelated with every block: every
# coarser partition dilates too.

S = SampleSpace([f"w{i}" for i in range(1, 9)])
eps = make_submodel(epsilon_contamination(Fraction(1, 10)), S, [Fraction(1, 8)] * 8)
A8 = S.event("w1", "w2", "w3", "w4")
pairs = Partition.from_labels(S, [["w1", "w5"], ["w2", "w6"], ["w3", "w7"], ["w4", "w8"]])
verdict = non_correlation_dilation(eps, A8, pairs)
print(f"non-correlation: {verdict.holds}, {verdict.verified_partitions} partitions checked")
