"""Walk through the extra-special bijection.

An odd distinct partition lambda is cut into m-hooks and strips, read off as
a pair (m, rho), and rebuilt.
"""
from fractions import Fraction

from cuspfdeg.extraspecial import ESPair, decode, encode, hook_strip_decomposition

lam = (21, 19, 13, 9, 5, 3)
pair = encode(lam)
print(f"lambda = {list(lam)}")
print(f"  -> m = {pair.m}, rho = {list(pair.rho)}")

hooks, strips = hook_strip_decomposition(pair)
for hand, foot in hooks:
    print(f"  hook with hand {hand} and foot {foot}")
for right in strips:
    print(f"  strip ending at {right}")

print(f"  decode gives back {list(decode(pair))}")

# Empty rho gives the arithmetic progressions 1, 5, 9, ... or 3, 7, 11, ...
for k in (1, 3, 5, 7, 9, 11, 13, 15):
    m = Fraction(k, 4)
    print(f"m = {m}: empty rho decodes to {list(decode(ESPair(m, ())))}")
