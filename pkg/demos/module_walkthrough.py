"""Build the seminormal module for a strict partition and split it.

Run with ``python3 demos/module_walkthrough.py [shape]`` (default ``3,1``).
"""

import sys

from hecke_clifford import StrictPartition, build_U, build_module, commutant_dimension, dimension_identity
from hecke_clifford.representations import jm_eigencheck, module_relations, splitting_report, u_dimension

shape = StrictPartition.parse(sys.argv[1] if len(sys.argv) > 1 else "3,1")
M = build_module(shape)
print(f"V{shape}: dimension {M.dim} over {len(M.tableaux)} tableaux")
print("  relations:", "ok" if all(module_relations(M).values()) else module_relations(M))
print("  Jucys-Murphy eigenvalues as predicted:", jm_eigencheck(M))
print("  splitting:", splitting_report(M))

U = build_U(M)
print(f"U{shape}: dimension {U.dim} (formula {u_dimension(shape)})")
print(f"  supercommutant dimension {commutant_dimension(U)}, even part {commutant_dimension(U, even_only=True)}")

for n in range(1, 6):
    ok, total, target = dimension_identity(n)
    print(f"  n = {n}: weighted sum of squares {total} vs 2^n n! = {target}  {'ok' if ok else 'MISMATCH'}")
