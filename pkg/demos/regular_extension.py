"""
Regular versus natural extension
================================

When the conditioning event has lower probability 0, natural extension is
often vacuous. Regular extension discards the credal-set members that give
the event probability 0, which can make a difference for pari-mutuel
models with zero-mass atoms.
"""

from fractions import Fraction

from nldilation import (
    natural_extension,
    oracle_regular_extension,
    regular_differs,
    regular_extension,
    vbm_pmm_witness,
)
from nldilation.fixtures import zero_mass_pmm

model = zero_mass_pmm()
S = model.space
A, B = S.event("w1", "w3"), S.event("w1", "w2")
print(model)
print(f"lower(B) = {model.lower(B)}, upper(B) = {model.upper(B)}")

nat = natural_extension(model, A, B)
reg = regular_extension(model, A, B)
print(f"natural: [{nat.lower}, {nat.upper}]  regular: [{reg.lower}, {reg.upper}]")
print("differs:", regular_differs(model, A, B))
print("witness:", vbm_pmm_witness(model))

# restrict the credal set to P(B) >= delta; w2 has no mass, so every
# remaining member already puts all of B on w1
deltas = [Fraction(1, 10 ** k) for k in range(1, 7)]
approx = oracle_regular_extension(model, A, B, deltas)
for d, lo in zip(deltas, approx.lower_estimates):
    print(f"  delta = {float(d):.0e}: lower {float(lo):.9f}")
print("converged:", approx.converged)
