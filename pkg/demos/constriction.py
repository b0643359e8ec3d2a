"""
Constriction needs a null block
===============================

A partition constricts ``A`` when no conditional interval is wider than
``[lower(A), upper(A)]`` and one is strictly narrower. For VBMs this needs
a block of lower probability 0 that implies ``A`` or its negation, and the
unconditional interval must be ``[0, 1]``.
"""

from fractions import Fraction

from nldilation import Partition, SampleSpace, make_submodel, total_variation
from nldilation.dilation import check_constriction

S = SampleSpace(["w1", "w2", "w3", "w4"])

wide = make_submodel(total_variation(Fraction(-3, 5)), S, [Fraction(1, 4)] * 4)
A = S.event("w1", "w2")
P = Partition.from_labels(S, [["w1", "w3"], ["w2"], ["w4"]])
r = check_constriction(wide, A, P)
print(f"[{wide.lower(A)}, {wide.upper(A)}] -> constricts: {r.verdict}, witness {r.witness}")
for B, ne in r.per_block:
    print(f"  given {B}: [{ne.lower}, {ne.upper}]")

# with an interior interval the same shape of partition cannot constrict
narrow = make_submodel(total_variation(Fraction(-1, 5)), S, ["1/10", "1/10", "2/5", "2/5"])
A = S.event("w1", "w3")
r = check_constriction(narrow, A, Partition.from_labels(S, [["w1", "w2"], ["w3"], ["w4"]]))
print(f"[{narrow.lower(A)}, {narrow.upper(A)}] -> constricts: {r.verdict} ({r.proposition})")
