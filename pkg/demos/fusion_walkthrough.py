"""Walk through the fusion procedure for the shape (3,1).

Run with ``python3 demos/fusion_walkthrough.py``.  Prints the factor plan
that avoids the singular factors, then for each tableau its special point and
the resulting fused element with its leading term and numeric cross-check.
"""

from hecke_clifford import StrictPartition, enumerate_standard, fusion_plan, psi_tableau, special_point
from hecke_clifford.fusion import leading_check, psi_summary
from hecke_clifford.numeric import fusion_agreement, numeric_eval

shape = StrictPartition((3, 1))
print(f"shape {shape}: {len(list(enumerate_standard(shape)))} standard tableaux")
plan = fusion_plan(shape)
print("column-tableau plan, singular pairs grouped with their right neighbours:")
for line in plan.describe():
    print("  " + line)
print()

for tab in enumerate_standard(shape):
    print(tab)
    point = special_point(tab)
    print("  special point at q = 1.2:", [f"{numeric_eval(v).real:.6f}" for v in point.values])
    psi = psi_tableau(tab)
    s = psi_summary(tab, psi)
    print(f"  {s['terms']} terms, leading coefficient {s['leading_coefficient']}, ok = {leading_check(tab, psi)}")
    print(f"  numeric limit agrees to {fusion_agreement(tab, psi):.1e}\n")
