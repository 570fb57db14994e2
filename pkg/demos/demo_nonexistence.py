#!/usr/bin/env python3
"""Walk through the full nonexistence run for the exceptional configuration.

A 5-class symmetric scheme whose idempotents also carry the second
Q-polynomial ordering E0, E5, E3, E2, E4, E1 would have its first Krein
matrix pinned to a one-parameter family in the first multiplicity m.  This
demo runs both halves of the machine check and prints every witness.
"""

from asx import casev_spec, reject_case_v, scheme_params, intersection_tensor

print("=" * 72)
print("Nonexistence of the exceptional 5-class two-ordering configuration")
print("=" * 72)

verdict = reject_case_v(search_max=100000)
for line in verdict.lines():
    print(line)

print()
print("The m = 5 candidate in detail:")
params = scheme_params(casev_spec(5).spec)
print(f"  order n = {params.n}")
print(f"  multiplicities = {tuple(map(str, params.multiplicities))}")
print(f"  valencies      = {tuple(map(str, params.valencies))}")

inters = intersection_tensor(params)
bad = [
    (i, j, k, inters.p(i, j, k))
    for i in range(6)
    for j in range(6)
    for k in range(6)
    if inters.p(i, j, k).denominator != 1
]
print(f"  {len(bad)} fractional intersection numbers, e.g.:")
for i, j, k, v in bad[:5]:
    print(f"    p^{k}_{{{i},{j}}} = {v}")
print("  a genuine scheme needs nonnegative integers: the candidate dies here.")
