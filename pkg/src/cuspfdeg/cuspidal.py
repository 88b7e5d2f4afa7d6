"""Cuspidal unipotent degree templates and the uniqueness checks built on them.

A template is the even multiplicity function of a pair degree such as
d_a^D(q) d_b^B(q), i.e. the exponents m(k) in prod_k (1 + q^k)^m(k), read
modulo rational constants and powers of q.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import hecke as H
from . import partitions as P
from .extraspecial import ESPair, decode, kappa_epsilon
from .qseries import (FactorLedger, MultiplicityFn, as_fraction, convolve, dilate,
                      ledger_analyze, max_int, translate)

HALF = Fraction(1, 2)

FAMILIES = ('I', 'II', 'III_ord', 'IV_ord', 'III_extra', 'IV_extra')

# parameter type -> template family of its trace normalization
TYPE_FAMILY = {'I': 'I', 'II': 'II', 'III': 'III_ord', 'IV': 'IV_ord',
               'V': 'III_extra', 'VI': 'IV_extra'}


@dataclass(frozen=True)
class DegreeTemplate:
    family: str
    a: int
    b: int
    even_mult: MultiplicityFn

    def to_json_obj(self):
        return {"family": self.family, "a": self.a, "b": self.b,
                "even_mult": {str(k): v for k, v in self.even_mult.items()}}


def _pos(x):
    return max(0, x)


def degree_template(family, a, b):
    if family not in FAMILIES:
        raise ValueError(f"unknown template family {family!r}")
    a, b = int(a), int(b)
    if a < 0 or b < 0:
        raise ValueError("template indices must be nonnegative")
    vals = {}
    top = 4 * max(a, b) + 4
    for k in range(1, top + 1):
        if family == 'II':
            v = _pos(2 * a - k) + _pos(2 * b + 1 - k)
        elif family == 'I':
            if k % 2 == 0:
                continue
            v = _pos(a + HALF - Fraction(k, 2)) + _pos(b + HALF - Fraction(k, 2))
        elif family == 'III_ord':
            v = _pos(2 * a + 1 - k) + _pos(2 * b + 1 - k)
        elif family == 'IV_ord':
            v = _pos(2 * a - k) + _pos(2 * b - k)
        elif family == 'III_extra':
            v = (max_int([0, Fraction(4 * a + 2 - k, 2)])
                 + max_int([0, Fraction(2 * b + 1 - k, 2)]))
        else:
            v = (max_int([0, Fraction(4 * a - k, 2)])
                 + max_int([0, Fraction(2 * b + 1 - k, 2)]))
        if v:
            vals[k] = -int(v)
    return DegreeTemplate(family, a, b, MultiplicityFn(vals))


class SetsUnsolvable(ValueError):
    pass


def _nonneg_int(x, what):
    if x.denominator != 1 or x < 0:
        raise SetsUnsolvable(f"no nonnegative integer solution for {what}")
    return int(x)


def solve_sets(m_minus, m_plus):
    """(family, a, b) of the trace normalization, in template naming.

    For the extra-special families the template index a belongs to the
    integer member of {|m_+ - m_-|, m_+ + m_-} and b to the half-integer one.
    """
    mm, mp = as_fraction(m_minus), as_fraction(m_plus)
    typ, _ = H.classify_params(mm, mp)
    D, S = abs(mp - mm), abs(mp + mm)
    fam = TYPE_FAMILY[typ]
    if typ == 'I':
        a, b = sorted((_nonneg_int(D - HALF, 'a'), _nonneg_int(S - HALF, 'b')))
    elif typ == 'II':
        even, odd = (D, S) if D.denominator == 1 and D % 2 == 0 else (S, D)
        a = _nonneg_int(even / 2, 'a')
        b = _nonneg_int((odd - 1) / 2, 'b')
    elif typ == 'III':
        a, b = sorted((_nonneg_int((D - 1) / 2, 'a'), _nonneg_int((S - 1) / 2, 'b')))
    elif typ == 'IV':
        a, b = sorted((_nonneg_int(D / 2, 'a'), _nonneg_int(S / 2, 'b')))
    else:
        integral, halfint = (D, S) if D.denominator == 1 else (S, D)
        b = _nonneg_int(halfint - HALF, 'b')
        if typ == 'V':
            a = _nonneg_int((integral - 1) / 2, 'a')
        else:
            a = _nonneg_int(integral / 2, 'a')
    return fam, a, b


def template_for_params(m_minus, m_plus):
    return degree_template(*solve_sets(m_minus, m_plus))


def extraspecial_norm_qpart(m_minus, m_plus):
    """Even multiplicities of the uniform extra-special normalization."""
    mm, mp = as_fraction(m_minus), as_fraction(m_plus)
    vals = {}
    for X in (abs(mm - mp), abs(mm + mp)):
        for i in range(1, int(X) + 1):
            k = 2 * X - 2 * i
            if k > 0:
                vals[k] = vals.get(k, 0) - i
    return MultiplicityFn(vals)


# Closed-form families of residual points without odd cyclotomic content

def staircase(r):
    """[2, 4, ..., 2r] for delta = 1/2."""
    return tuple(range(2 * r, 0, -2))


def odd_run(k):
    """[1, 3, ..., 2k - 1]."""
    return tuple(range(2 * k - 1, 0, -2))


def int_delta_family(case, r):
    """(delta, lambda, n) for the no-odd family (a)-(e) with index r.

    For case 'a' the index r stands for the quarter parameter m.
    """
    if case == 'a':
        m = as_fraction(r)
        kappa, eps = kappa_epsilon(m)
        lam = tuple(sorted((4 * i + 1 + 2 * eps for i in range(kappa)), reverse=True))
        delta = kappa % 2
    elif case == 'b':
        lam, delta = odd_run(2 * r + 2), 0
    elif case == 'c':
        lam, delta = odd_run(2 * r + 3), 1
    elif case == 'd':
        lam, delta = tuple(range(8 * r + 7, 2, -2)), 1
    elif case == 'e':
        lam, delta = (8 * r + 9,) + tuple(range(8 * r + 5, 0, -2)), 0
    else:
        raise ValueError(f"unknown case {case!r}")
    lam = P.partition(lam)
    return delta, lam, (sum(lam) - delta) // 2


def _is_power_of_two(x):
    return x > 0 and x & (x - 1) == 0


def int_delta_case(delta, lam):
    """Which family (a)-(e) the pair (delta, lambda) belongs to, or None."""
    lam = P.partition(lam)
    delta = int(delta)
    if sum(lam) % 2 != delta % 2:
        return None
    n = (sum(lam) - delta) // 2
    # (a): image of an empty tableau
    kappa = len(lam)
    for eps in (0, 1):
        if kappa == 0 and eps == 0:
            continue
        if kappa % 2 != delta:
            continue
        m = kappa + Fraction(2 * eps - 1, 4)
        if m > 0 and int_delta_family('a', m)[1] == lam:
            return 'a'
    for case in 'bcde':
        r = 0
        while True:
            d, fam_lam, fam_n = int_delta_family(case, r)
            if fam_n > n:
                break
            if d == delta and fam_lam == lam:
                return case
            r += 1
    return None


def int_delta_allowed(case, r):
    """Cases (d), (e) keep their lack of odd content only for r = 2^s - 1."""
    if case in 'de':
        return _is_power_of_two(r + 1)
    return True


def int_delta_predicted(delta, n):
    """Partitions predicted to have no odd content at (0, delta), rank n."""
    out = []
    for lam in P.enumerate_distinguished(delta, n):
        case = int_delta_case(delta, lam)
        if case is None:
            continue
        if case in 'de':
            r = _family_index(case, lam)
            if not int_delta_allowed(case, r):
                continue
        out.append(lam)
    return sorted(out)


def _family_index(case, lam):
    r = 0
    while True:
        _, fam_lam, fam_n = int_delta_family(case, r)
        if fam_lam == lam:
            return r
        if fam_n > sum(lam):
            raise ValueError("not in family")
        r += 1


def quarter_family_case(m, rho):
    """Case (a)-(e) of the quarter-parameter classification, or None."""
    m = as_fraction(m)
    rho = P.partition(rho)
    if not rho:
        return 'a'
    rect = len(set(rho)) == 1
    p_plus, p_minus, r_plus, r_minus = P.MTableau(m, rho).corners()
    q = Fraction(1, 4)
    if m == q and rect and rho[0] == len(rho):
        return 'b'
    if not rect or r_plus != r_minus:
        return None
    if m == Fraction(3, 4) and r_plus == q:
        return 'c'
    if m == Fraction(5, 4) and r_plus == Fraction(3, 4):
        n = (p_plus - Fraction(5, 4)) / 2
        if n.denominator == 1 and p_minus == 2 * n + Fraction(3, 4):
            return 'd'
    if m == Fraction(7, 4) and r_plus == q:
        n = (p_plus - Fraction(7, 4)) / 2
        if n.denominator == 1 and p_minus == 2 * n + q:
            return 'e'
    return None


# Closed-form multiplicities via the convolution algebra

def coordinate_function(exps):
    """Even function H on (1/2)Z: H(x) counts coordinates q^{+-x}; H(0) = 2 #{1}."""
    vals = {}
    for e in exps:
        x = Fraction(e, 2)
        if x == 0:
            vals[x] = vals.get(x, 0) + 2
        else:
            vals[x] = vals.get(x, 0) + 1
            vals[-x] = vals.get(-x, 0) + 1
    return MultiplicityFn(vals)


def _cluster_roots(Hs, n):
    """Unfolded root values +-(x_i +- x_j), i < j, of one cluster."""
    raw = convolve(Hs, Hs) - dilate(Hs, 2) - MultiplicityFn({0: 2 * n})
    assert all(v % 2 == 0 for _, v in raw.items())
    return MultiplicityFn({x: v // 2 for x, v in raw.items()})


def _fold(F):
    """Exponents for w > 0 after identifying 1 +- q^{-w} with 1 +- q^w."""
    vals = {}
    for x, v in F.items():
        if x != 0:
            w = abs(x)
            vals[w] = vals.get(w, 0) + v
    return MultiplicityFn(vals)


def mixed_mult_ledger(params, lambda_minus, lambda_plus):
    """Normalized residue ledger assembled from convolutions of coordinate functions.

    Exponents are in q-units.  F_minus collects the unfolded exponents of
    (1 - q^y), F_plus those of (1 + q^y).
    """
    pt = H.coordinates(params, lambda_minus, lambda_plus)
    b = params.base
    Hm = coordinate_function([e for s, e in pt.coords if s < 0])
    Hp = coordinate_function([e for s, e in pt.coords if s > 0])
    n_m = sum(1 for s, _ in pt.coords if s < 0)
    n_p = params.rank - n_m
    bm, bp = b * params.m_minus, b * params.m_plus
    Dm, Dp = _cluster_roots(Hm, n_m), _cluster_roots(Hp, n_p)
    M = convolve(Hm, Hp)
    Fm = (Dp - translate(Dp, b) + Dm - translate(Dm, b)
          + Hp - translate(Hp, bp) + Hm - translate(Hm, bm))
    # on the minus side t = -q^x, so 1 - q^{c} t = 1 + q^{x + c}
    Fp = Hp - translate(Hp, bm) + Hm - translate(Hm, bp) + M - translate(M, b)
    led = FactorLedger()
    for w, v in _fold(Fm).items():
        led.add('-', int(2 * w), v)
    for w, v in _fold(Fp).items():
        led.add('+', int(2 * w), v)
    if params.rank:
        led.add('-', 2 * b, -params.rank)
    for k, v in H.d0_qpart(params).items():
        led.add('+', int(2 * k), v)
    return led


def mixed_mult_parts(params, lambda_minus, lambda_plus):
    """(even_part, odd_cycl) of the residue computed through the convolution formula."""
    _, even, odd = ledger_analyze(mixed_mult_ledger(params, lambda_minus, lambda_plus))
    return even, odd


def mixed_mult_formula(params, lambda_minus, lambda_plus):
    """Even multiplicity function (exponents of 1 + q^k) of the residue."""
    return mixed_mult_parts(params, lambda_minus, lambda_plus)[0]


def one_sided_closed_form(delta, lam):
    """mult^{(0, lambda)} at parameters (0, delta) from h~ alone, for the
    families (a)-(e); returns None outside those families."""
    case = int_delta_case(delta, lam)
    if case is None:
        return None
    h = P.htilde(delta, lam).positive_part()
    if case == 'a':
        return -h
    out = h.scale(-2)
    if case in 'de':
        top = max(lam)
        a = (top - 1) // 4 if case == 'd' else (max(lam) - 1) // 4
        # case (d): p = 2a + 1 with a = 2(r+1); case (e): p = 2a
        r = _family_index(case, lam)
        a = 2 * (r + 1)
        upto = a if case == 'd' else 2 * a
        k = 1
        extra = {}
        while k <= upto:
            extra[k] = 1
            k *= 2
        out = out + MultiplicityFn(extra)
    return out


def staircase_closed_form(lam):
    """Even multiplicities -(h(k + 1/2) + h(k - 1/2)) for the staircase at (1/2, 1/2)."""
    h = P.htilde(HALF, lam)
    vals = {}
    top = max(lam) if lam else 0
    for k in range(1, top + 1):
        v = h(k + HALF) + h(k - HALF)
        if v:
            vals[k] = -v
    return MultiplicityFn(vals)


# No-odd classification

def side_no_odd_predicted(m, lam):
    """Closed-form prediction that the one-sided residue has no odd content."""
    m = abs(as_fraction(m))
    if m == HALF:
        return lam == staircase(len(lam))
    if m in (0, 1):
        case = int_delta_case(int(m), lam)
        if case is None:
            return False
        if case in 'de':
            return int_delta_allowed(case, _family_index(case, lam))
        return True
    return quarter_no_odd_predicted(m, lam)


def quarter_no_odd_predicted(m, rho):
    """Quarter side: no odd content iff the extra-special image is in the allowed families."""
    if quarter_family_case(m, rho) is None:
        return False
    lam = decode(ESPair(m, rho))
    delta = kappa_epsilon(m)[0] % 2
    case = int_delta_case(delta, lam)
    if case is None:
        return False
    if case in 'de':
        return int_delta_allowed(case, _family_index(case, lam))
    return True


def classify_no_odd(m_minus, m_plus, base=None, n=0, check=True):
    """Points of C_n(m_-, m_+) whose residue has no odd cyclotomic content.

    With ``check`` the result is compared against the closed-form family
    predictions side by side, and a mismatch raises AssertionError.
    """
    params = H.HeckeParams(m_minus, m_plus, n, base)
    out = []
    for lm, lp in H.enumerate_residual_points(params):
        if H.has_no_odd(params, lm, lp):
            out.append((lm, lp))
    if check:
        predicted = [(lm, lp) for lm, lp in H.enumerate_residual_points(params)
                     if side_no_odd_predicted(params.m_minus, lm)
                     and side_no_odd_predicted(params.m_plus, lp)]
        if sorted(predicted) != sorted(out):
            raise AssertionError(
                f"no-odd classification at {params} disagrees with the closed forms: "
                f"direct {out} against predicted {predicted}")
    return out


# Uniqueness verification

def aut_es_orbit(params, lm, lp):
    if params.m_minus == params.m_plus:
        return frozenset({(lm, lp), (lp, lm)})
    return frozenset({(lm, lp)})


def solve_fdeg(params, n, template):
    """Aut_es orbits of rank-n residual points whose residue q-part equals the template.

    Each orbit is a sorted tuple of (lambda_minus, lambda_plus) pairs.
    """
    params = params.with_rank(n)
    even = template.even_mult if isinstance(template, DegreeTemplate) else template
    orbits = set()
    for lm, lp in H.enumerate_residual_points(params):
        _, e, o = H.residue_parts(params, lm, lp)
        if o.is_zero() and e == even:
            orbits.add(tuple(sorted(aut_es_orbit(params, lm, lp))))
    return sorted(orbits)


def standard_images(params_min, n):
    """Standard STM images landing on (params_min, rank n).

    Returns a list of (source description, template, (lm, lp)).
    """
    from .stm import standard_sources
    return standard_sources(params_min, n)


@dataclass
class UniquenessReport:
    params: H.HeckeParams
    entries: list
    negatives: list

    @property
    def ok(self):
        return all(e['pass'] for e in self.entries) and all(x['pass'] for x in self.negatives)

    def to_json_obj(self):
        return {"params": self.params.to_json_obj(), "pass": self.ok,
                "templates": self.entries, "negatives": self.negatives}


def verify_uniqueness(params_min, n, extra_templates=None):
    """Check that each realizable template is solved by exactly one Aut_es orbit.

    ``extra_templates`` are further templates (DegreeTemplate) realized at
    other ranks; none of them may be solved at rank n.  By default these
    are all templates of the object realized at ranks 0 .. 2n + 2.
    """
    params = H.HeckeParams(params_min.m_minus, params_min.m_plus, n)
    if not H.is_minimal(params):
        raise ValueError(f"{params} is not a minimal object")
    images = standard_images(params, n)
    if extra_templates is None:
        extra_templates = [t for k in range(2 * n + 3) if k != n
                           for _, t, _ in standard_images(params, k)]
    groups = {}
    for src, tmpl, pt in images:
        g = groups.setdefault(tmpl.even_mult, {"templates": [], "points": set(), "sources": []})
        if tmpl not in g["templates"]:
            g["templates"].append(tmpl)
        g["points"].add(pt)
        g["sources"].append(src)
    # residues of every point, computed once
    table = {}
    for lm, lp in H.enumerate_residual_points(params):
        _, e, o = H.residue_parts(params, lm, lp)
        table[(lm, lp)] = (e, o)
    entries = []
    for even, g in sorted(groups.items(), key=lambda kv: sorted(kv[0].items())):
        solutions = sorted(pt for pt, (e, o) in table.items() if o.is_zero() and e == even)
        orbits = {aut_es_orbit(params, *pt) for pt in solutions}
        predicted = {aut_es_orbit(params, *pt) for pt in g["points"]}
        ok = len(orbits) == 1 and orbits == predicted
        entries.append({
            "templates": [(t.family, t.a, t.b) for t in g["templates"]],
            "sources": g["sources"],
            "even_mult": {str(k): v for k, v in even.items()},
            "solutions": [[list(lm), list(lp)] for lm, lp in solutions],
            "orbits": len(orbits),
            "pass": ok,
        })
    negatives = []
    realized = set(groups)
    for t in extra_templates:
        if t.even_mult in realized:
            continue
        realized.add(t.even_mult)
        hits = sorted(pt for pt, (e, o) in table.items() if o.is_zero() and e == t.even_mult)
        negatives.append({"template": (t.family, t.a, t.b),
                          "solutions": [[list(a), list(b)] for a, b in hits],
                          "pass": not hits})
    return UniquenessReport(params, entries, negatives)
