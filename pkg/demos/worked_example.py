"""
Dilation in a six-atom vertical barrier model
=============================================

A VBM with ``b = 1.1`` and ``a = -0.2`` is conditioned on each block of the
partition into consecutive pairs. Every conditional interval for
``A = w2|w4|w5`` contains the unconditional one, with room to spare.
"""

from nldilation import natural_extension
from nldilation.dilation import characterize_dilation, check_dilation, imprecision_variation
from nldilation.fixtures import example_model

model, A, parts = example_model()
print(model)
print(f"lower(A) = {model.lower(A)}, upper(A) = {model.upper(A)}")

# conditional intervals, one block at a time
for B in parts:
    ne = natural_extension(model, A, B)
    print(f"  given {B}: [{ne.lower}, {ne.upper}]  width change {imprecision_variation(model, A, B)}")

report = check_dilation(model, A, parts, mode="strict")
print("direct check:", report.verdict)

# the same verdict from the branch conditions alone
fast = characterize_dilation(model, A, parts)
for b in fast.per_block:
    print(f"  {b.block}: {b.labels[0]} and {b.labels[1]}")
print("characterisation:", fast.verdict)
