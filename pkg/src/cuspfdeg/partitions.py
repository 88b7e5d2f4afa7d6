"""Partitions, distinguished unipotent partitions, jump sequences and m-tableaux.

A partition is a tuple of positive integers in weakly decreasing order;
the empty tuple is the zero partition.
"""

from collections import Counter
from fractions import Fraction

from sympy.utilities.iterables import partitions as _sympy_partitions

from .qseries import MultiplicityFn, as_fraction


def partition(parts):
    """Validate and normalize to a weakly decreasing tuple."""
    if isinstance(parts, str):
        parts = [int(p) for p in parts.replace(' ', '').split(',') if p]
    out = tuple(sorted((int(p) for p in parts), reverse=True))
    if any(p < 1 for p in out):
        raise ValueError(f"partition parts must be positive: {list(parts)}")
    return out


def size(lam):
    return sum(lam)


def conjugate(lam):
    lam = partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def all_partitions(n):
    """All partitions of n, sorted lexicographically."""
    if n < 0:
        return []
    if n == 0:
        return [()]
    out = []
    for mult in _sympy_partitions(n):
        out.append(tuple(sorted((k for k, c in mult.items() for _ in range(c)), reverse=True)))
    return sorted(out)


def _distinct_parts(total, parity, largest):
    """Partitions of total into distinct parts of the given parity, parts <= largest."""
    if total == 0:
        yield ()
        return
    top = min(total, largest)
    if top % 2 != parity:
        top -= 1
    for p in range(top, 0, -2):
        for rest in _distinct_parts(total - p, parity, p - 2):
            yield (p,) + rest


def _check_half(m):
    m = as_fraction(m)
    if m < 0 or (2 * m).denominator != 1:
        raise ValueError(f"parameter m must be a nonnegative half-integer, got {m}")
    return m


def distinguished_data(m):
    """(parity of parts, minimal length, offset floor(m^2)) for the parameter m."""
    m = _check_half(m)
    if m.denominator == 1:
        return 1, int(m), int(m * m)
    return 0, int(m - Fraction(1, 2)), int(m * m - Fraction(1, 4))


def enumerate_distinguished(m, n):
    """Distinguished unipotent partitions of 2n + floor(m^2) for parameter m."""
    parity, min_len, offset = distinguished_data(m)
    total = 2 * n + offset
    if n < 0:
        return []
    found = [lam for lam in _distinct_parts(total, parity, total) if len(lam) >= min_len]
    return sorted(found)


def is_distinguished(m, lam):
    parity, min_len, offset = distinguished_data(m)
    lam = partition(lam)
    if len(set(lam)) != len(lam) or any(p % 2 != parity for p in lam):
        return False
    if len(lam) < min_len:
        return False
    return (sum(lam) - offset) % 2 == 0 and sum(lam) >= offset


def distinguished_rank(m, lam):
    parity, min_len, offset = distinguished_data(m)
    if not is_distinguished(m, lam):
        raise ValueError(f"{list(lam)} is not distinguished for m = {m}")
    return (sum(lam) - offset) // 2


def jumps(lam):
    """Jump sequence (lam - 1)/2, strictly decreasing."""
    lam = partition(lam)
    if len(set(p % 2 for p in lam)) > 1:
        raise ValueError(f"parts of mixed parity: {list(lam)}")
    if len(set(lam)) != len(lam):
        raise ValueError(f"parts must be distinct: {list(lam)}")
    return tuple(Fraction(p - 1, 2) for p in lam)


def from_jumps(j, parity=None):
    """Inverse of jumps; optionally checks the parity of the resulting parts."""
    lam = partition(int(2 * as_fraction(x) + 1) for x in j)
    if any((2 * as_fraction(x)).denominator != 1 for x in j):
        raise ValueError("jumps must be half-integers")
    if parity is not None and any(p % 2 != parity for p in lam):
        raise ValueError(f"parts of {list(lam)} do not have parity {parity}")
    if len(set(lam)) != len(lam):
        raise ValueError("jumps must be distinct")
    return lam


def htilde(delta, lam):
    """Coordinate multiplicity function h~ of the positive residual point.

    h~(x) for x > 0 counts jumps >= x; for delta in {0, 1} the value at 0
    is twice the number of coordinates equal to 1.
    """
    delta = as_fraction(delta)
    if delta not in (0, Fraction(1, 2), 1):
        raise ValueError("delta must be 0, 1/2 or 1")
    lam = partition(lam)
    if not is_distinguished(delta, lam):
        raise ValueError(f"{list(lam)} is not distinguished for delta = {delta}")
    js = jumps(lam)
    vals = {}
    if not js:
        return MultiplicityFn()
    step = Fraction(1, 2) if delta == Fraction(1, 2) else Fraction(1)
    x = step
    top = max(js)
    while x <= top:
        c = sum(1 for j in js if j >= x)
        vals[x] = c
        vals[-x] = c
        x += 1
    if delta != Fraction(1, 2):
        h1 = vals.get(Fraction(1), 0)
        vals[Fraction(0)] = 2 * ((h1 + 1 - int(delta)) // 2)
    return MultiplicityFn(vals)


def htilde_rank(h):
    """n = sum_{x>0} h(x) + h(0)/2."""
    pos = sum(v for x, v in h.items() if x > 0)
    return pos + h(0) // 2


class MTableau:
    """Young diagram of shape rho with box (i, j) filled by |m - i + j|.

    Rows and columns are numbered from 1.
    """

    def __init__(self, m, shape):
        self.m = as_fraction(m)
        self.shape = partition(shape)

    def boxes(self):
        for i, row in enumerate(self.shape, start=1):
            for j in range(1, row + 1):
                yield i, j

    def content(self, i, j):
        return self.m - i + j

    def filling(self, i, j):
        return abs(self.m - i + j)

    def grid(self):
        return [[self.filling(i, j) for j in range(1, row + 1)]
                for i, row in enumerate(self.shape, start=1)]

    def signed_contents(self):
        return Counter(self.content(i, j) for i, j in self.boxes())

    def corners(self):
        """Fillings (p_plus, p_minus, r_plus, r_minus); None for the empty shape.

        p_plus: upper right box; p_minus: lower left box; r_plus: last box
        of the column below p_plus; r_minus: last box of the row of p_minus.
        """
        if not self.shape:
            return None
        rho = self.shape
        col_len = conjugate(rho)
        p_plus = self.filling(1, rho[0])
        p_minus = self.filling(len(rho), 1)
        r_plus = self.filling(col_len[-1], rho[0])
        r_minus = self.filling(len(rho), rho[-1])
        return p_plus, p_minus, r_plus, r_minus

    def render(self, marks=None):
        """Aligned text grid; ``marks`` maps boxes to a one-character tag."""
        marks = marks or {}
        cells = [[f"{self.filling(i, j)}{marks.get((i, j), '')}"
                  for j in range(1, row + 1)] for i, row in enumerate(self.shape, start=1)]
        if not cells:
            return "(empty)"
        width = max(len(c) for row in cells for c in row)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


def mtableau_contents(m, rho):
    """(fillings grid, signed contents, h_plus, h_minus) for T_m(rho).

    h_plus counts boxes by signed content m - i + j, which all lie in the
    class m mod Z; h_minus(x) = h_plus(-x).  Both are Counters keyed by
    quarter-integers.
    """
    m = as_fraction(m)
    if (4 * m).denominator != 1 or (2 * m).denominator == 1:
        raise ValueError(f"m must lie in Z +- 1/4, got {m}")
    t = MTableau(m, rho)
    contents = t.signed_contents()
    h_plus = Counter(contents)
    h_minus = Counter({-x: c for x, c in contents.items()})
    return t.grid(), contents, h_plus, h_minus
