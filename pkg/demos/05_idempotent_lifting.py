"""Two routes to the spectral idempotent of an element.

The cycle route takes a suitable power a^m.  The binomial route builds a
seed that is idempotent modulo J(R) and lifts it with e <- 3e^2 - 2e^3.
They always land on the same idempotent.

Run: python demos/05_idempotent_lifting.py
"""
from ringlab import build_ring, gzhou_constructive, lift_idempotent_binomial
from ringlab.inverses import binomial_seed, seed_is_idempotent_mod_radical

R = build_ring("Z12")
for a in R:
    seed, n, m = binomial_seed(R, a)
    lifted = lift_idempotent_binomial(R, a)
    cycle = gzhou_constructive(R, a).p
    print(f"a={str(a):>2}  n={n} m={m} seed={seed} -> {lifted}  cycle idempotent {cycle}")

# with the factor (a - a^n) in place of (1 - a^n) the seed can fail to be idempotent mod J
for name in ("Z5", "Z7", "Z12"):
    S = build_ring(name)
    bad = [str(a) for a in S if not seed_is_idempotent_mod_radical(S, binomial_seed(S, a, literal=True)[0])]
    print(f"{name}: elements where the (a - a^n) seed fails: {bad}")
