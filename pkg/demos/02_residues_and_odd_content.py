"""Residues of residual points and their odd cyclotomic content.

For each point of a small Hecke algebra we print the exponents of (1 + q^k)
and the odd cyclotomic part.  The points with no odd part are the ones that
can carry a formal degree of a cuspidal unipotent representation.
"""
from fractions import Fraction

from cuspfdeg import hecke as H
from cuspfdeg.cuspidal import classify_no_odd



def fmt(mult):
    return "{" + ", ".join(f"{k}: {v}" for k, v in sorted(mult.to_dict().items())) + "}"


half = Fraction(1, 2)
params = H.HeckeParams(half, half, 6)
print(params)
for lm, lp in H.enumerate_residual_points(params):
    _, even, odd = H.residue_parts(params, lm, lp)
    tag = "" if not odd.is_zero() else "   <- no odd part"
    print(f"  {list(lm)!s:>10} {list(lp)!s:>10}  even {fmt(even)}  odd {fmt(odd)}{tag}")

# The same classification, with closed-form predictions checked side by side
for mm, mp in [(0, 1), (1, 1), (Fraction(1, 4), Fraction(5, 4))]:
    for n in range(6):
        found = classify_no_odd(mm, mp, n=n)
        if found:
            print(f"C_{n}({mm},{mp}): {[(list(a), list(b)) for a, b in found]}")
