"""Checking the Cline and Jacobson transfer identities exhaustively.

A quadruple (a, b, c, d) qualifies when bdb = bac and dbd = acd.  The sweep
checks every qualifying quadruple of a small ring and writes a JSON report.

Run: python demos/04_identity_sweeps.py
"""
from ringlab import build_ring, run_sweep
from ringlab.identities import hypothesis_quadruples

R = build_ring("T2(Z2)")
quads = hypothesis_quadruples(R)
print(f"{len(quads)} qualifying quadruples in {R}")

for theorem in ("cline", "jacobson", "zhou-cline", "zhou-jacobson"):
    report = run_sweep(theorem, R)
    print(f"{theorem:14} {report.passes}/{report.population} passed")

# the Jacobson report also tallies readings of the closed formula for (1-bd)^z
report = run_sweep("jacobson", R)
for key, count in report.details.items():
    print(f"  {key}: {count}")
print(report.to_json(timing=False)[:200], "...")
