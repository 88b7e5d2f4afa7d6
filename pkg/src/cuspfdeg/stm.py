"""Standard spectral transfer morphisms acting on parameters and residual points.

A point is a pair (lambda_minus, lambda_plus) of labels: distinguished
partitions on sides with |m| half-integral, partitions rho on quarter
sides.  Every step records its source and target parameters with ranks.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from . import hecke as H
from . import partitions as P
from .extraspecial import ESPair, decode, kappa_epsilon
from .qseries import as_fraction

HALF = Fraction(1, 2)

KINDS = ('iso_eta', 'iso_eta_plus', 'iso_eta_minus', 'translate', 'extraspecial')

_GEN_ALIASES = {
    'eta': 'iso_eta', 'η': 'iso_eta', 'iso_eta': 'iso_eta',
    'eta+': 'iso_eta_plus', 'eta_plus': 'iso_eta_plus', 'η₊': 'iso_eta_plus', 'η+': 'iso_eta_plus',
    'iso_eta_plus': 'iso_eta_plus',
    'eta-': 'iso_eta_minus', 'eta_minus': 'iso_eta_minus', 'η₋': 'iso_eta_minus', 'η-': 'iso_eta_minus',
    'iso_eta_minus': 'iso_eta_minus',
}


class STMError(ValueError):
    pass


@dataclass(frozen=True)
class STMStep:
    kind: str
    source: H.HeckeParams
    target: H.HeckeParams
    metadata: dict = field(default_factory=dict, hash=False, compare=False)

    def to_json_obj(self):
        return {"kind": self.kind, "source": self.source.to_json_obj(),
                "target": self.target.to_json_obj(),
                "metadata": {k: str(v) if isinstance(v, Fraction) else v
                             for k, v in sorted(self.metadata.items())}}


def _point(point):
    lm, lp = point
    return P.partition(lm), P.partition(lp)


def _side_rank(m, lam):
    if H.side_family(m) == 'quarter':
        return P.size(lam)
    return P.distinguished_rank(abs(m), lam)


def _rank(params_mm, params_mp, point):
    lm, lp = point
    return _side_rank(params_mm, lm) + _side_rank(params_mp, lp)


def _check_label(m, lam):
    fam = H.side_family(m)
    if fam == 'quarter':
        return
    if (2 * abs(m)).denominator == 1:
        if not P.is_distinguished(abs(m), lam):
            raise STMError(f"{list(lam)} is not a distinguished partition for m = {m}")
        return
    raise STMError(f"no point labels for m = {m}")


def iso_apply(gen, params, point):
    """Apply eta (swap sides) or eta_+/eta_- (negate one parameter)."""
    kind = _GEN_ALIASES.get(gen)
    if kind is None:
        raise STMError(f"unknown Iso generator {gen!r}")
    lm, lp = _point(point)
    mm, mp = params.m_minus, params.m_plus
    if kind == 'iso_eta':
        target = H.HeckeParams(mp, mm, params.rank)
        return target, (lp, lm)
    if kind == 'iso_eta_plus':
        new_m, lab = _negate_side(mp, lp)
        return H.HeckeParams(mm, new_m, params.rank), (lm, lab)
    new_m, lab = _negate_side(mm, lm)
    return H.HeckeParams(new_m, mp, params.rank), (lab, lp)


def _negate_side(m, lam):
    fam = H.side_family(m)
    if fam == 'quarter':
        # T_{-m}(rho') has the fillings of T_m(rho) transposed: same torus point
        return -m, P.conjugate(lam)
    if fam == 'delta':
        # labels of distinguished partitions only see |m|
        return -m, lam
    raise STMError(f"conjugation for m = {m} is not supported (only |m| in {{0, 1/2, 1}} "
                   "or m in Z +- 1/4)")


def _generator_step(m):
    """Signed shift of one basic translation on a side with parameter m."""
    m = as_fraction(m)
    if m == 0 or abs(m) == HALF:
        return None
    unit = 1 if m.denominator != 1 else 2
    sign = 1 if m > 0 else -1
    if m.denominator == 1 and abs(m) == 1:
        return None
    return sign * unit


def translate(params, point, side, target_m=None):
    """Translation STM shifting m_side towards 0; partitions are unchanged.

    Without ``target_m`` one basic generator step is taken.
    """
    if side not in ('-', '+'):
        raise STMError("side must be '-' or '+'")
    lm, lp = _point(point)
    m = params.side(side)
    other = params.side('-' if side == '+' else '+')
    if (2 * params.m_minus).denominator != 1 or (2 * params.m_plus).denominator != 1:
        raise STMError("translation needs m_- and m_+ in Z/2")
    if target_m is None:
        step = _generator_step(m)
        if step is None:
            raise STMError(f"target must differ: m = {m} admits no shift towards 0")
        new_m = m - step
    else:
        new_m = as_fraction(target_m)
    if new_m == m:
        raise STMError("target must differ from the source parameter")
    if not (abs(new_m) < abs(m) and new_m * m >= 0):
        raise STMError(f"target m' = {new_m} is not between m = {m} and 0")
    shift = m - new_m
    if m.denominator == 1:
        if shift.denominator != 1 or shift % 2:
            raise STMError(f"shift {shift} of an integer side must lie in 2Z")
    elif shift.denominator != 1:
        raise STMError(f"shift {shift} of a half-integer side must lie in Z")
    lam = lp if side == '+' else lm
    _check_label(m, lam)
    _check_label(new_m, lam)
    mm_new = new_m if side == '-' else other
    mp_new = new_m if side == '+' else other
    src_rank = _rank(params.m_minus, params.m_plus, (lm, lp))
    if src_rank != params.rank:
        raise STMError(f"point has rank {src_rank}, expected {params.rank}")
    n = _rank(mm_new, mp_new, (lm, lp))
    # generator rank bookkeeping, one basic step at a time
    expect, cur = params.rank, m
    while cur != new_m:
        s = _generator_step(cur)
        expect += (abs(cur) - HALF) if cur.denominator != 1 else (2 * abs(cur) - 2)
        cur -= s
    assert expect == n, (expect, n)
    target = H.HeckeParams(mm_new, mp_new, n)
    step = STMStep('translate', params, target, {"side": side, "shift": shift})
    return target, (lm, lp), step


def extraspecial_rank(params):
    """Target rank of the extra-special step from the generator formulas."""
    from .cuspidal import solve_sets
    typ = params.type
    if typ not in ('V', 'VI'):
        raise STMError("extra-special steps need quarter parameters")
    fam, ai, bh = solve_sets(params.m_minus, params.m_plus)
    # generator formulas index the half-integer member by a and the integer one by b
    a, b = bh, ai
    l = params.rank
    if typ == 'V':
        return 2 * l + a * (a + 1) // 2 + 2 * b * (b + 1)
    delta_plus = kappa_epsilon(abs(params.m_plus))[0] % 2
    return 2 * l + a * (a + 1) // 2 + 2 * b * b - delta_plus


def extraspecial_map(params, point):
    """Quarter parameters (m_-, m_+) > 0 to (delta_-, delta_+) with decoded partitions."""
    if params.type not in ('V', 'VI'):
        raise STMError(f"{params} is not of extra-special type (needs m_pm in Z +- 1/4)")
    if params.m_minus <= 0 or params.m_plus <= 0:
        raise STMError("extra-special steps need positive parameters; apply eta_pm first")
    rm, rp = _point(point)
    if P.size(rm) + P.size(rp) != params.rank:
        raise STMError(f"point has rank {P.size(rm) + P.size(rp)}, expected {params.rank}")
    lm = decode(ESPair(params.m_minus, rm))
    lp = decode(ESPair(params.m_plus, rp))
    dm = kappa_epsilon(params.m_minus)[0] % 2
    dp = kappa_epsilon(params.m_plus)[0] % 2
    n = (P.size(lm) - dm) // 2 + (P.size(lp) - dp) // 2
    assert n == extraspecial_rank(params), (n, extraspecial_rank(params))
    target = H.HeckeParams(dm, dp, n)
    step = STMStep('extraspecial', params, target, {"delta_minus": dm, "delta_plus": dp})
    return target, (lm, lp), step


def _iso_step(gen, params, point):
    target, pt = iso_apply(gen, params, point)
    return target, pt, STMStep(_GEN_ALIASES[gen], params, target, {})


def trace(params, point):
    """Chain of standard steps from (params, point) to a minimal object.

    Returns (steps, final params, final point).
    """
    steps = []
    pt = _point(point)
    cur = params

    def apply(res):
        nonlocal cur, pt
        cur, pt, st = res
        steps.append(st)

    if cur.m_minus < 0:
        apply(_iso_step('eta_minus', cur, pt))
    if cur.m_plus < 0:
        apply(_iso_step('eta_plus', cur, pt))
    if cur.type in ('V', 'VI'):
        apply(extraspecial_map(cur, pt))
        if (cur.m_minus, cur.m_plus) == (1, 0):
            apply(_iso_step('eta', cur, pt))
        return steps, cur, pt
    # minimal objects keep the half-integer side (type I) or the even side (type III) on the left
    mm, mp = cur.m_minus, cur.m_plus
    if cur.type == 'I' and mm.denominator == 1:
        apply(_iso_step('eta', cur, pt))
    elif cur.type == 'III' and mm % 2 == 1:
        apply(_iso_step('eta', cur, pt))
    for side in ('-', '+'):
        while _generator_step(cur.side(side)) is not None:
            cur, pt, st = translate(cur, pt, side)
            steps.append(st)
    assert H.is_minimal(cur), cur
    return steps, cur, pt


def reduce_to_minimal(params):
    """Generator chain from params to a minimal object, by parameter alone."""
    pt = _cuspidal_point(params) if params.rank == 0 else None
    if pt is None:
        pt = _some_point(params)
    return trace(params, pt)[0]


def _cuspidal_point(params):
    out = []
    for m in (params.m_minus, params.m_plus):
        if H.side_family(m) == 'quarter':
            out.append(())
        else:
            pts = P.enumerate_distinguished(abs(m), 0)
            out.append(pts[0])
    return tuple(out)


def _some_point(params):
    """Any label pair of the given rank (labels exist at every rank on each side)."""
    mm, mp = params.m_minus, params.m_plus
    for n_minus in range(params.rank + 1):
        lows = _labels(mm, n_minus)
        highs = _labels(mp, params.rank - n_minus)
        if lows and highs:
            return lows[0], highs[0]
    raise STMError(f"no residual points for {params}")


def _labels(m, n):
    if H.side_family(m) == 'quarter':
        return P.all_partitions(n)
    return P.enumerate_distinguished(abs(m), n)


def standard_sources(params_min, n):
    """Cuspidal sources whose standard chain lands on (params_min, rank n).

    Returns (source description, template, point) triples; sources are
    rank-0 algebras with their unique (cuspidal) point.
    """
    from .cuspidal import template_for_params
    key = (params_min.m_minus, params_min.m_plus)
    out = []
    for mm, mp in _candidate_sources(key, n):
        src = H.HeckeParams(mm, mp, 0)
        steps, tgt, pt = trace(src, _cuspidal_point(src))
        if (tgt.m_minus, tgt.m_plus) == key and tgt.rank == n:
            out.append(({"m_minus": str(mm), "m_plus": str(mp), "type": src.type},
                        template_for_params(mm, mp), pt))
    return out


def _one_side_rank(m):
    """Rank contributed by one side of a cuspidal source after its standard chain."""
    if H.side_family(m) == 'quarter':
        lam = decode(ESPair(m, ()))
        return (P.size(lam) - kappa_epsilon(m)[0] % 2) // 2
    lam = P.enumerate_distinguished(m, 0)[0]
    return P.distinguished_rank(m % 2 if m.denominator == 1 else HALF, lam)


def _side_candidates(kind, n):
    """Positive parameters of the given kind whose side rank is at most n."""
    out = []
    if kind == 'half':
        m = HALF
        step = Fraction(1)
    elif kind == 'int':
        m, step = Fraction(0), Fraction(1)
    else:
        m, step = Fraction(1, 4), HALF
    while True:
        r = _one_side_rank(m)
        if r > n:
            # side ranks grow with m within each residue class; stop after two misses
            nxt = m + step
            if _one_side_rank(nxt) > n:
                break
            m = nxt
            continue
        out.append(m)
        m += step
    return out


def _candidate_sources(key, n):
    mm, mp = key
    if mm == HALF and mp == HALF:
        cand = _side_candidates('half', n)
        return [(a, b) for a in cand for b in cand]
    if mm == HALF:
        halves = _side_candidates('half', n)
        ints = [m for m in _side_candidates('int', n) if m % 2 == mp]
        return [(a, b) for a in halves for b in ints] + [(b, a) for a in halves for b in ints]
    ints = _side_candidates('int', n)
    quarters = _side_candidates('quarter', n)
    pairs = []
    for a in ints:
        for b in ints:
            pairs.append((a, b))
    for a in quarters:
        for b in quarters:
            pairs.append((a, b))
    want = {(0, 1): {(0, 1), (1, 0)}, (0, 0): {(0, 0)}, (1, 1): {(1, 1)}}[(int(mm), int(mp))]

    def parity(m):
        return int(m % 2) if m.denominator == 1 else kappa_epsilon(m)[0] % 2
    return [(a, b) for a, b in pairs if (parity(a), parity(b)) in want]
