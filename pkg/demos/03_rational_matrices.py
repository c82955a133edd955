"""Generalized Zhou inverses of exact rational matrices.

Over Q the question "is A - A^(n+1) nilpotent for some n" is decided by a
finite scan: roots of unity of degree at most k have bounded order.

Run: python demos/03_rational_matrices.py
"""
from ringlab import RationalMatrix, gzhou_matrix
from ringlab.rational import drazin_matrix, minimal_polynomial, period_bound, spectral_idempotent_at_zero

cases = {
    "scalar 2": "[[2]]",
    "Jordan block": "[[0,1],[0,0]]",
    "rotation": "[[0,-1],[1,0]]",
    "mixed": "[[0,0,0],[0,0,-1],[0,1,0]]",
    "half": "[[1/2,0],[0,1]]",
}
for name, text in cases.items():
    A = RationalMatrix.parse(text)
    result = gzhou_matrix(A)
    print(f"{name}: minimal polynomial {minimal_polynomial(A)}, bound {period_bound(A.k)}")
    if result is None:
        print("   no generalized Zhou inverse; Drazin inverse is", drazin_matrix(A))
    else:
        x, n = result
        print(f"   inverse {x} with n = {n}; spectral idempotent {spectral_idempotent_at_zero(A)}")
