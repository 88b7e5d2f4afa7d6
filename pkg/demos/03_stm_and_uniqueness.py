"""From an arbitrary parameter pair down to a minimal object, then uniqueness.

Each step is a spectral transfer morphism: a normalization, a translation or
the extra-special map.  At the minimal object every formal degree template is
solved by exactly one orbit of residual points.
"""
from fractions import Fraction

from cuspfdeg import hecke as H
from cuspfdeg import stm
from cuspfdeg.cuspidal import verify_uniqueness

for pair in [(0, 3), (Fraction(1, 2), Fraction(7, 2)), (Fraction(-3, 4), Fraction(5, 4)), (3, 4)]:
    params = H.HeckeParams(*pair, 0)
    print(params)
    for step in stm.reduce_to_minimal(params):
        print(f"  {step.kind:>14}: {step.source} -> {step.target}")

for mm, mp, n in [(0, 1, 4), (Fraction(1, 2), Fraction(1, 2), 6), (1, 1, 4)]:
    rep = verify_uniqueness(H.HeckeParams(mm, mp), n)
    print(f"C_{n}({mm},{mp}): {len(rep.entries)} templates, "
          f"{len(rep.negatives)} negatives, {'pass' if rep.ok else 'FAIL'}")
    for e in rep.entries:
        print(f"    {e['templates']}  solutions {e['solutions']}")
