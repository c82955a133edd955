"""The four inverse notions on a small ring, by brute force and by construction.

Run: python demos/02_generalized_inverses.py
"""
from ringlab import InverseKind, build_ring, gzhou_constructive, inverse_bruteforce, verify_certificate

R = build_ring("Z5")
for a in R:
    cert = gzhou_constructive(R, a)
    print(f"a={a}: b={cert.b} (a^3={a ** 3}), n={cert.n}, p={cert.p}")

# in Z6 the element 2 is neither a unit nor nilpotent
R = build_ring("Z6")
a = R.element(2)
for kind in InverseKind:
    cert = inverse_bruteforce(R, a, kind)
    check = verify_certificate(R, cert)
    print(f"{kind.value:8} b={cert.b} n={cert.n} p={cert.p} verified={check.ok}")

# the certificate is a plain record that can be replayed or serialized
print(inverse_bruteforce(R, a, "gzhou").to_dict())
