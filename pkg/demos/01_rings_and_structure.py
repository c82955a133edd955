"""Building finite rings and looking at their structural subsets.

Run: python demos/01_rings_and_structure.py
"""
from ringlab import build_ring, power_orbit
from ringlab.structure import idempotents, jacobson_radical, nilpotents, quotient_by_radical, units

for text in ("Z12", "T2(Z2)", "M2(Z2)"):
    R = build_ring(text)
    print(f"{R}: {len(R)} elements")
    print("  units      ", sorted(str(u) for u in units(R)))
    print("  nilpotents ", {str(x): k for x, k in nilpotents(R).items()})
    print("  J(R)       ", sorted(str(x) for x in jacobson_radical(R)))
    print("  idempotents", sorted(str(e) for e in idempotents(R)))
    Q, pi = quotient_by_radical(R)
    print(f"  R/J(R) has {len(Q)} elements")

# powers of an element eventually cycle; the orbit records where and how fast
R = build_ring("Z12")
o = power_orbit(R, R.element(2))
print("powers of 2 in Z12:", [str(x) for x in o.orbit], "index", o.index, "period", o.period)
