#!/usr/bin/env python3
"""The symbolic contradiction chain, step by step.

The second proof branch works in the free tridiagonal unknowns and chains
exact rational-function identities: b4* = 1, a4* != 0, a3* = 0, two
polynomial equations, and a collapse to a4* + c4* = 0.  Six of the seven
printed identities re-verify exactly.  The fifth -- the displayed factored
value of the annihilator at the eigenvalue m -- provably differs from what
the recurrence gives, and the transcript certifies the exact gap; see
notes in the repository for the analysis.
"""

from asx import derive_section32, casev_spec, verify_dual_consistency

print("consistency of the second ordering on the symbolic family:")
report = verify_dual_consistency(casev_spec(None))
print(f"  zero pattern: {report.zero_pattern_checks} checks")
print(f"  relabeling invariance: {report.invariance_checks} identities")
print(f"  (Q1)/(Q2) for the relabeled tensor: {report.q_condition_checks} checks")
print()

print("the contradiction chain:")
transcript = derive_section32()
for line in transcript.lines():
    print(" ", line)
print()
ok = sum(1 for s in transcript.steps if s.verified)
print(f"{ok} of {len(transcript.steps)} steps verify as printed.")
