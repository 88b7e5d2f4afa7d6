"""Type C affine Hecke algebras C_n(m_-, m_+)[q^b]: parameters, residual points, residues.

A torus point is a multiset of coordinates ``(sign, vexp)`` standing for
sign * v^vexp.  Residues are evaluated binomial by binomial from the
positive-root product form of the mu-function; binomials that vanish at
the point are dropped (regularization) and counted.
"""

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement

from . import partitions as P
from .qseries import FactorLedger, MultiplicityFn, as_fraction

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


class UnsupportedParameters(ValueError):
    pass


class NotResidual(ValueError):
    pass


def _is_int(x):
    return x.denominator == 1


def _is_half(x):
    return (2 * x).denominator == 1


def _is_quarter(x):
    return (4 * x).denominator == 1 and not _is_half(x)


def classify_params(m_minus, m_plus):
    """Return (type, base) with type one of 'I'..'VI'."""
    mm, mp = abs(as_fraction(m_minus)), abs(as_fraction(m_plus))
    if not _is_int(2 * (mm - mp)):
        raise ValueError(f"ill-formed parameter pair ({m_minus}, {m_plus}): 2(m_- - m_+) must be an integer")
    if _is_half(mm) and _is_half(mp):
        if _is_int(mm) and _is_int(mp):
            typ = 'III' if (mm - mp) % 2 else 'IV'
        elif _is_int(mm - mp):
            typ = 'II'
        else:
            typ = 'I'
    elif _is_quarter(mm) and _is_quarter(mp):
        if mm == 0 or mp == 0:
            raise ValueError("quarter parameters must be positive")
        dm = round(mm) % 2
        dp = round(mp) % 2
        typ = 'V' if dm != dp else 'VI'
    else:
        raise ValueError(f"ill-formed parameter pair ({m_minus}, {m_plus})")
    base = 1 if _is_int(mp + mm) and _is_int(mp - mm) else 2
    return typ, base


@dataclass(frozen=True)
class HeckeParams:
    m_minus: Fraction
    m_plus: Fraction
    rank: int = 0
    base: int = None

    def __post_init__(self):
        object.__setattr__(self, 'm_minus', as_fraction(self.m_minus))
        object.__setattr__(self, 'm_plus', as_fraction(self.m_plus))
        typ, base = classify_params(self.m_minus, self.m_plus)
        if self.base is None:
            object.__setattr__(self, 'base', base)
        elif self.base != base:
            raise ValueError(f"base {self.base} does not match the parameter pair (expected {base})")
        if int(self.rank) < 0:
            raise ValueError("rank must be nonnegative")
        object.__setattr__(self, 'rank', int(self.rank))

    @property
    def type(self):
        return classify_params(self.m_minus, self.m_plus)[0]

    def with_rank(self, n):
        return HeckeParams(self.m_minus, self.m_plus, n)

    def swapped(self):
        return HeckeParams(self.m_plus, self.m_minus, self.rank)

    def side(self, which):
        return self.m_minus if which == '-' else self.m_plus

    def to_json_obj(self):
        return {"m_minus": str(self.m_minus), "m_plus": str(self.m_plus),
                "base": self.base, "rank": self.rank}

    def __str__(self):
        q = "q" if self.base == 1 else "q^2"
        return f"C_{self.rank}({self.m_minus},{self.m_plus})[{q}]"


MINIMAL = {
    (HALF, Fraction(0)), (HALF, Fraction(1)), (HALF, HALF),
    (Fraction(0), Fraction(1)), (Fraction(0), Fraction(0)), (Fraction(1), Fraction(1)),
}


def is_minimal(params):
    return (params.m_minus, params.m_plus) in MINIMAL


def side_family(m):
    """'delta' for |m| in {0, 1/2, 1}, 'quarter' for m in Z +- 1/4, else None."""
    m = abs(as_fraction(m))
    if m in (0, HALF, 1):
        return 'delta'
    if _is_quarter(m):
        return 'quarter'
    return None


def _check_supported(params):
    for m in (params.m_minus, params.m_plus):
        if side_family(m) is None:
            raise UnsupportedParameters(
                f"no closed-form coordinates for |m| = {abs(m)}; "
                "use brute_force_residual_points for this parameter")


def side_points(m, n):
    """Labels of one-sided residual points of rank n for the parameter m."""
    fam = side_family(m)
    if fam == 'delta':
        return P.enumerate_distinguished(abs(m), n)
    if fam == 'quarter':
        return P.all_partitions(n)
    raise UnsupportedParameters(f"no closed-form coordinates for |m| = {abs(m)}")


def side_rank(m, lam):
    if side_family(m) == 'delta':
        return P.distinguished_rank(abs(m), lam)
    return P.size(lam)


def enumerate_residual_points(params):
    """All label pairs (lambda_minus, lambda_plus) of residual points of the given rank."""
    _check_supported(params)
    out = []
    n = params.rank
    for n_minus in range(n + 1):
        lows = side_points(params.m_minus, n_minus)
        highs = side_points(params.m_plus, n - n_minus)
        for lm in lows:
            for lp in highs:
                out.append((lm, lp))
    return out


def side_exponents(m, lam, base):
    """Nonnegative v-exponents of the one-sided positive residual point."""
    m = as_fraction(m)
    lam = P.partition(lam)
    fam = side_family(m)
    if fam == 'delta':
        h = P.htilde(abs(m), lam)
        out = [0] * (h(0) // 2)
        for x, c in h.items():
            if x > 0:
                out.extend([int(2 * base * x)] * c)
        return sorted(out)
    if fam == 'quarter':
        # coordinates q^{2c} = v^{4c} over the signed contents c of T_m(rho)
        return sorted(abs(int(4 * c)) for c in P.MTableau(m, lam).signed_contents().elements())
    raise UnsupportedParameters(f"no closed-form coordinates for |m| = {abs(m)}")


@dataclass(frozen=True)
class ResidualPoint:
    params: HeckeParams
    lambda_minus: tuple
    lambda_plus: tuple
    coords: tuple = field(default=())

    def to_json_obj(self):
        return {"params": self.params.to_json_obj(),
                "lambda_minus": list(self.lambda_minus),
                "lambda_plus": list(self.lambda_plus),
                "coords": [["+" if s > 0 else "-", e] for s, e in self.coords]}


def canonical_coords(coords):
    """W_0 orbit representative: exponents made nonnegative, then sorted."""
    return tuple(sorted((int(s), abs(int(e))) for s, e in coords))


def coordinates(params, lambda_minus, lambda_plus):
    _check_supported(params)
    lm, lp = P.partition(lambda_minus), P.partition(lambda_plus)
    n = side_rank(params.m_minus, lm) + side_rank(params.m_plus, lp)
    if n != params.rank:
        raise ValueError(f"partition pair has rank {n}, expected {params.rank}")
    b = params.base
    coords = [(-1, e) for e in side_exponents(params.m_minus, lm, b)]
    coords += [(1, e) for e in side_exponents(params.m_plus, lp, b)]
    return ResidualPoint(params, lm, lp, canonical_coords(coords))


def _binomials(params, coords):
    """Yield (k, sign, E) for each factor (1 + sign v^E)^k of the mu-function."""
    b2 = 2 * params.base
    em = 2 * params.base * params.m_minus
    ep = 2 * params.base * params.m_plus
    if not (_is_int(em) and _is_int(ep)):
        raise ValueError("2 b m_pm must be integral")
    em, ep = int(em), int(ep)
    pts = list(coords)
    for i in range(len(pts)):
        si, ei = pts[i]
        for j in range(i + 1, len(pts)):
            sj, ej = pts[j]
            s = si * sj
            for E in (ei - ej, ei + ej):
                # (1 - X)^2 / ((1 - v^{-2b} X)(1 - v^{2b} X)) with X = s v^E
                yield 2, -s, E
                yield -1, -s, E - b2
                yield -1, -s, E + b2
    for s, e in pts:
        yield 2, s, e        # (1 + t)^2
        yield 2, -s, e       # (1 - t)^2
        yield -1, s, e - em  # 1 + v^{-2b m_-} t
        yield -1, s, e + em
        yield -1, -s, e - ep  # 1 - v^{-2b m_+} t
        yield -1, -s, e + ep


def check_residual(params, coords):
    """(num_zeros, den_zeros, ok) counting vanishing binomials with multiplicity."""
    if isinstance(coords, ResidualPoint):
        coords = coords.coords
    num = den = 0
    for k, s, E in _binomials(params, coords):
        if E == 0 and s < 0:
            if k > 0:
                num += k
            else:
                den -= k
    return num, den, den - num == params.rank


def d0_qpart(params):
    """Even multiplicities (exponents of 1 + q^k) of the trace normalization d^0."""
    from .cuspidal import degree_template, extraspecial_norm_qpart, solve_sets
    if params.type in ('V', 'VI'):
        return extraspecial_norm_qpart(params.m_minus, params.m_plus)
    fam, a, b = solve_sets(params.m_minus, params.m_plus)
    return degree_template(fam, a, b).even_mult


def residue_q(params, point, normalized=True):
    """Regularized residue ledger and canonical value, divided by
    (v^b - v^{-b})^n and, when ``normalized``, multiplied by d^0
    (modulo rational constants and v-powers)."""
    coords = point.coords if isinstance(point, ResidualPoint) else canonical_coords(point)
    led = FactorLedger()
    for k, s, E in _binomials(params, coords):
        if E == 0 and s < 0:
            if k > 0:
                led.vanished_num += k
            else:
                led.vanished_den -= k
            continue
        led.add_binomial(s, E, k)
    if led.vanished_den - led.vanished_num != params.rank:
        raise NotResidual(f"point {list(coords)} is not residual for {params}")
    if params.rank:
        led.add('-', 2 * params.base, -params.rank)
    if normalized:
        for k, x in d0_qpart(params).items():
            led.add('+', int(2 * k), x)
    return led, led.canonical()


def point_residue(params, lambda_minus, lambda_plus):
    pt = coordinates(params, lambda_minus, lambda_plus)
    return residue_q(params, pt)


def exponent_bound(params):
    top = max(params.m_minus ** 2, params.m_plus ** 2)
    return int(params.base * (2 * params.rank + top + 1))


def brute_force_residual_points(params, exponent_bound_=None):
    """All canonical coordinate multisets of defect n with exponents <= bound."""
    bound = exponent_bound(params) if exponent_bound_ is None else int(exponent_bound_)
    n = params.rank
    values = [(s, e) for e in range(bound + 1) for s in (-1, 1)]
    found = []
    for combo in combinations_with_replacement(values, n):
        if check_residual(params, combo)[2]:
            found.append(canonical_coords(combo))
    return sorted(set(found))


def point_orbit_key(point):
    return Counter(point.coords if isinstance(point, ResidualPoint) else point)


def delta_one_shift(delta, lam):
    """Even multiplicities Delta_1(h~_lambda) on positive integers."""
    from .qseries import delta_op
    h = P.htilde(delta, lam)
    return delta_op(h, 1).positive_part()


def residue_parts(params, lambda_minus, lambda_plus):
    """(canonical value, even_part, odd_cycl) of the normalized residue."""
    from .qseries import ledger_analyze
    led, _ = point_residue(params, lambda_minus, lambda_plus)
    return ledger_analyze(led)


def odd_content(params, lambda_minus, lambda_plus):
    return residue_parts(params, lambda_minus, lambda_plus)[2]


def has_no_odd(params, lambda_minus, lambda_plus):
    return odd_content(params, lambda_minus, lambda_plus).is_zero()


__all__ = [
    'HeckeParams', 'ResidualPoint', 'classify_params', 'enumerate_residual_points',
    'coordinates', 'check_residual', 'residue_q', 'brute_force_residual_points', 'd0_qpart',
    'MultiplicityFn',
]
