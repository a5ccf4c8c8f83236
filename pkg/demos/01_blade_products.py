"""
Blades from bit strings and the signed product
==============================================

"""

import random
import time

from bladebind import BladeIndex, SignedBlade, blade_inverse

# A blade is named by a bit string read left to right: position i set
# means generator e_i participates, the all-zero string is the scalar.
# Multiplying two blades XORs their strings; the only real work is the
# sign, which counts how many right-hand generators have to jump over
# later-position left-hand ones on the way to sorted order.
a = SignedBlade(1, BladeIndex.from_bits("11001010"))
b = SignedBlade(1, BladeIndex.from_bits("01000100"))
p = a * b
print(f"{a.index.bits} * {b.index.bits} = {p.sign:+d} {p.index.bits}")

# Order matters, but only through the sign: the index is symmetric.
q = b * a
print(f"{b.index.bits} * {a.index.bits} = {q.sign:+d} {q.index.bits}")

# Shared generators cancel in pairs, so a blade times itself is a signed
# scalar.  A two-blade picks up one transposition on the way:
e12 = BladeIndex.from_bits("1100")
sq = SignedBlade(1, e12) * SignedBlade(1, e12)
print(f"{e12.bits} squared -> {sq.sign:+d} {sq.index.bits}")

# blade_inverse bakes that square into a prefactor, which is what
# unbinding uses: inverse(a) * (a * x) gives back x exactly.
inv = blade_inverse(e12)
x = SignedBlade(1, BladeIndex.from_bits("1010"))
print(f"inverse of {e12.bits} is {inv.sign:+d} {inv.index.bits}")
print("unbind check:", inv * (SignedBlade(1, e12) * x) == x)

# The same code path runs at ten thousand bits.  The first product on a
# fresh left factor builds a cached parity mask; after that each product
# is one AND plus a popcount.
rng = random.Random(0)
n = 10_000
big_a = SignedBlade(1, BladeIndex(n, rng.getrandbits(n)))
big_b = SignedBlade(1, BladeIndex(n, rng.getrandbits(n)))
big_a * big_b  # pay the one-off mask build before timing

reps = 1000
t0 = time.perf_counter()
for _ in range(reps):
    big_a * big_b
per = (time.perf_counter() - t0) / reps
print(f"{n}-bit product, warm: {per * 1e6:.1f} us")
