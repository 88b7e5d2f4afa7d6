"""Exact cyclotomic arithmetic for products of binomials (1 +- v^e).

Everything here lives in the multiplicative group generated by nonzero
rationals, powers of v and the cyclotomic polynomials Phi_d(v).  A value
is stored canonically as ``coeff * v**vexp * prod Phi_d(v)**phi[d]``.
We write q = v**2 throughout.

The second half of the module is the algebra of finitely supported
integer valued functions on (1/2)Z used for multiplicity bookkeeping.
"""

from collections import Counter
from fractions import Fraction
from functools import lru_cache
import json

from sympy import divisors as _sympy_divisors
from sympy.functions.combinatorial.numbers import mobius as _sympy_mobius


@lru_cache(maxsize=None)
def divisors(n):
    return tuple(int(d) for d in _sympy_divisors(n))


@lru_cache(maxsize=None)
def mobius(n):
    return int(_sympy_mobius(n))


def as_fraction(x):
    """Coerce ints, Fractions and 'p/q' strings to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


def sign_of(s):
    """Accept '+', '-', +1, -1 and return +1 or -1."""
    if s in ('+', 1, '1', '+1'):
        return 1
    if s in ('-', -1, '-1'):
        return -1
    raise ValueError(f"bad sign {s!r}")


class NotQRational(ValueError):
    pass


class EvaluationError(ZeroDivisionError):
    pass


class CycloFactored:
    """Canonical element ``coeff * v^vexp * prod_d Phi_d(v)^phi[d]``."""

    __slots__ = ('coeff', 'vexp', '_phi', '_hash')

    def __init__(self, coeff=1, vexp=0, phi=None):
        coeff = as_fraction(coeff)
        if coeff == 0:
            raise ValueError("coefficient must be nonzero")
        self.coeff = coeff
        self.vexp = int(vexp)
        clean = {}
        for d, e in (phi or {}).items():
            d, e = int(d), int(e)
            if d < 1:
                raise ValueError(f"cyclotomic index must be positive, got {d}")
            if e:
                clean[d] = clean.get(d, 0) + e
        self._phi = {d: e for d, e in sorted(clean.items()) if e}
        self._hash = None

    @property
    def phi(self):
        return dict(self._phi)

    def exponent(self, d):
        return self._phi.get(d, 0)

    def _key(self):
        return (self.coeff, self.vexp, tuple(self._phi.items()))

    def __eq__(self, other):
        if not isinstance(other, CycloFactored):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __repr__(self):
        return f"CycloFactored({self.coeff!s}, vexp={self.vexp}, phi={self._phi})"

    def __str__(self):
        parts = []
        if self.coeff != 1 or not (self.vexp or self._phi):
            parts.append(str(self.coeff))
        if self.vexp:
            parts.append(f"v^{self.vexp}")
        for d, e in self._phi.items():
            parts.append(f"Phi{d}" if e == 1 else f"Phi{d}^{e}")
        return "*".join(parts)

    def __mul__(self, other):
        return mul(self, other)

    def __truediv__(self, other):
        return mul(self, inverse(other))

    def __pow__(self, k):
        return power(self, k)

    def is_one(self):
        return self.coeff == 1 and self.vexp == 0 and not self._phi


ONE = CycloFactored()


def mul(f, g):
    phi = dict(f._phi)
    for d, e in g._phi.items():
        phi[d] = phi.get(d, 0) + e
    return CycloFactored(f.coeff * g.coeff, f.vexp + g.vexp, phi)


def inverse(f):
    return CycloFactored(1 / f.coeff, -f.vexp, {d: -e for d, e in f._phi.items()})


def power(f, k):
    k = int(k)
    return CycloFactored(f.coeff ** k, f.vexp * k, {d: e * k for d, e in f._phi.items()})


def product(factors):
    out = ONE
    for f in factors:
        out = mul(out, f)
    return out


@lru_cache(maxsize=None)
def binomial_factor(sign, e):
    """Canonical form of the polynomial 1 + sign*v^e."""
    s = sign_of(sign)
    e = int(e)
    if e < 1:
        raise ValueError("binomial exponent must be >= 1")
    if s < 0:
        # 1 - v^e = -(v^e - 1) = -prod_{d|e} Phi_d(v)
        return CycloFactored(-1, 0, {d: 1 for d in divisors(e)})
    # 1 + v^e = (v^{2e} - 1)/(v^e - 1)
    small = set(divisors(e))
    return CycloFactored(1, 0, {d: 1 for d in divisors(2 * e) if d not in small})


def cyclotomic_value(d, v0):
    """Phi_d(v0) for rational v0, via prod_{k|d} (v0^k - 1)^mu(d/k)."""
    v0 = as_fraction(v0)
    if d == 1:
        return v0 - 1
    num, den = Fraction(1), Fraction(1)
    for k in divisors(d):
        mu = mobius(d // k)
        if mu == 0:
            continue
        t = v0 ** k - 1
        if t == 0:
            # v0 = +-1: fall back to the expanded polynomial
            return _cyclotomic_at_unit(d, v0)
        if mu > 0:
            num *= t
        else:
            den *= t
    return num / den


def _cyclotomic_at_unit(d, v0):
    coeffs = cyclotomic_coefficients(d)
    return sum(Fraction(c) * v0 ** i for i, c in enumerate(coeffs))


@lru_cache(maxsize=None)
def cyclotomic_coefficients(d):
    """Integer coefficients of Phi_d, lowest degree first."""
    # v^d - 1 divided by Phi_k for every proper divisor k
    poly = [-1] + [0] * (d - 1) + [1]
    for k in divisors(d):
        if k != d:
            poly = _polydiv_exact(poly, cyclotomic_coefficients(k))
    return tuple(poly)


def _polydiv_exact(num, den):
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1] // den[-1]
        out[i] = c
        for j, dj in enumerate(den):
            num[i + j] -= c * dj
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return out


def evaluate(f, v0):
    """Exact rational value of f at v = v0."""
    v0 = as_fraction(v0)
    out = f.coeff
    if f.vexp:
        if v0 == 0:
            raise EvaluationError("pole/zero at v0 = 0")
        out *= v0 ** f.vexp
    for d, e in f._phi.items():
        val = cyclotomic_value(d, v0)
        if val == 0:
            raise EvaluationError(f"pole/zero at v0 = {v0} (Phi_{d})")
        out *= val ** e
    return out


def cyclq_exponent(f, d):
    """Exponent of Phi_d(q) in f, where q = v^2."""
    d = int(d)
    if d % 2 == 0:
        return f.exponent(2 * d)
    a, b = f.exponent(d), f.exponent(2 * d)
    if a != b:
        raise NotQRational(f"not q-rational: Phi_{d}(v)^{a} against Phi_{2 * d}(v)^{b}")
    return a


def is_q_rational(f):
    for d, e in f._phi.items():
        if d % 2 == 1 and f.exponent(2 * d) != e:
            return False
        if d % 4 == 2 and f.exponent(d // 2) != e:
            return False
    return True


def q_part_equal(f, g):
    """Equality modulo rational constants and powers of v."""
    return f._phi == g._phi


def to_json_obj(f):
    return {"coeff": str(f.coeff), "vexp": f.vexp,
            "phi": {str(d): e for d, e in f._phi.items()}}


def from_json_obj(obj):
    return CycloFactored(Fraction(obj["coeff"]), obj["vexp"],
                         {int(d): e for d, e in obj["phi"].items()})


def to_json(f):
    return json.dumps(to_json_obj(f), sort_keys=True)


def from_json(s):
    return from_json_obj(json.loads(s))


class FactorLedger:
    """Raw record of binomials (1 + sign*v^e)^exp before canonicalization.

    ``vanished_num`` and ``vanished_den`` count binomials that were zero at
    the evaluation point and therefore omitted.
    """

    def __init__(self, entries=None, vanished_num=0, vanished_den=0, coeff=1, vexp=0):
        self.entries = Counter()
        self.vanished_num = vanished_num
        self.vanished_den = vanished_den
        # rational constant and v-power split off during normalization
        self.coeff = as_fraction(coeff)
        self.vexp = vexp
        for (s, e), k in (entries or {}).items():
            self.add(s, e, k)

    def add(self, sign, e, k=1):
        s = sign_of(sign)
        e = int(e)
        if e < 1:
            raise ValueError("ledger exponents must be positive; normalize first")
        key = (s, e)
        self.entries[key] += k
        if not self.entries[key]:
            del self.entries[key]

    def add_binomial(self, sign, e, k=1):
        """Record (1 + sign*v^e)^k for any integer e, normalizing e <= 0."""
        s = sign_of(sign)
        e = int(e)
        if e > 0:
            self.add(s, e, k)
        elif e < 0:
            # 1 + s v^e = s v^e (1 + s v^{-e})
            self.coeff *= Fraction(s) ** k
            self.vexp += e * k
            self.add(s, -e, k)
        elif s > 0:
            self.coeff *= Fraction(2) ** k
        else:
            raise ZeroDivisionError("the binomial 1 - v^0 vanishes")

    def merge(self, other, k=1):
        for (s, e), x in other.entries.items():
            self.add(s, e, k * x)
        self.coeff *= other.coeff ** k
        self.vexp += other.vexp * k

    def items(self):
        return sorted(self.entries.items())

    def canonical(self):
        out = CycloFactored(self.coeff, self.vexp)
        for (s, e), k in self.items():
            out = mul(out, power(binomial_factor(s, e), k))
        return out

    def evaluate_raw(self, v0):
        """Direct product of the recorded binomials at v0 (no factoring)."""
        v0 = as_fraction(v0)
        out = self.coeff * v0 ** self.vexp
        for (s, e), k in self.items():
            out *= (1 + s * v0 ** e) ** k
        return out

    def __repr__(self):
        return (f"FactorLedger({dict(self.items())}, vanished_num={self.vanished_num}, "
                f"vanished_den={self.vanished_den})")


class MultiplicityFn:
    """Finitely supported integer valued function on (1/2)Z.

    Keys are stored doubled, so ``self._d[2*x] == f(x)``.
    """

    __slots__ = ('_d',)

    def __init__(self, values=None):
        d = {}
        for x, v in (values or {}).items():
            v = int(v)
            if not v:
                continue
            k = _dbl(x)
            d[k] = d.get(k, 0) + v
            if not d[k]:
                del d[k]
        self._d = d

    @classmethod
    def _raw(cls, d):
        out = cls.__new__(cls)
        out._d = {k: v for k, v in d.items() if v}
        return out

    @classmethod
    def delta(cls, x, c=1):
        return cls({x: c})

    def __call__(self, x):
        return self._d.get(_dbl(x), 0)

    def items(self):
        return [(Fraction(k, 2), v) for k, v in sorted(self._d.items())]

    def support(self):
        return [Fraction(k, 2) for k in sorted(self._d)]

    def to_dict(self):
        return dict(self.items())

    def is_zero(self):
        return not self._d

    def __bool__(self):
        return bool(self._d)

    def __eq__(self, other):
        if not isinstance(other, MultiplicityFn):
            return NotImplemented
        return self._d == other._d

    def __hash__(self):
        return hash(tuple(sorted(self._d.items())))

    def __repr__(self):
        inner = ", ".join(f"{x}: {v}" for x, v in self.items())
        return f"MultiplicityFn({{{inner}}})"

    def __add__(self, other):
        d = dict(self._d)
        for k, v in other._d.items():
            d[k] = d.get(k, 0) + v
        return MultiplicityFn._raw(d)

    def __neg__(self):
        return MultiplicityFn._raw({k: -v for k, v in self._d.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return MultiplicityFn._raw({k: c * v for k, v in self._d.items()})

    def __rmul__(self, c):
        return self.scale(int(c))

    def restrict(self, pred):
        return MultiplicityFn._raw({k: v for k, v in self._d.items() if pred(Fraction(k, 2))})

    def positive_part(self):
        """Restriction to strictly positive arguments."""
        return MultiplicityFn._raw({k: v for k, v in self._d.items() if k > 0})

    def reflect(self):
        return MultiplicityFn._raw({-k: v for k, v in self._d.items()})

    def max_support(self):
        return Fraction(max(self._d), 2) if self._d else None


def _dbl(x):
    x2 = 2 * as_fraction(x)
    if x2.denominator != 1:
        raise ValueError(f"argument {x} is not in (1/2)Z")
    return int(x2)


def convolve(m1, m2):
    d = {}
    for a, u in m1._d.items():
        for b, w in m2._d.items():
            d[a + b] = d.get(a + b, 0) + u * w
    return MultiplicityFn._raw(d)


def translate(m, x):
    """T_x m, i.e. the function y -> m(y - x)."""
    s = _dbl(x)
    return MultiplicityFn._raw({k + s: v for k, v in m._d.items()})


def delta_op(m, y=1):
    """Delta_y m = 2m - T_y m - T_{-y} m."""
    return m.scale(2) - translate(m, y) - translate(m, -y)


def dilate(m, c):
    """Function z -> m(z/c) for a positive integer c."""
    return MultiplicityFn._raw({k * c: v for k, v in m._d.items()})


def s_window(p):
    """S_{p+1}(k) = (-1)^(p-|k|) for |k| <= p, k in p + Z, and 0 otherwise."""
    p = as_fraction(p)
    vals = {}
    k = -p
    while k <= p:
        vals[k] = -1 if (p - abs(k)) % 2 else 1
        k += 1
    return MultiplicityFn(vals)


def max_int(values):
    """Largest integer among the given rationals, or 0 if none is an integer."""
    ints = [int(x) for x in map(as_fraction, values) if x.denominator == 1]
    return max(ints) if ints else 0


def ledger_analyze(ledger):
    """Split a ledger into its canonical value and q-level multiplicities.

    Returns ``(canonical, even_part, odd_cycl)``.  ``odd_cycl(k)`` for
    k in Z + 1/2 is the exponent of Phi_{2k}(q); ``even_part(k)`` is the
    exponent of (1 + q^k) in the even cyclotomic component.  Both are
    read off at the q level, so the canonical value must be q-rational.
    """
    f = ledger.canonical() if isinstance(ledger, FactorLedger) else ledger
    return f, even_part(f), odd_cycl(f)


def odd_cycl(f):
    """``{k: exponent of Phi_{2k}(q)}`` over half-integers k."""
    vals = {}
    for d in f._phi:
        if d % 2 == 1:
            vals[Fraction(d, 2)] = cyclq_exponent(f, d)
    # ensure no stray Phi_{2d}(v), d odd, without its partner
    for d in f._phi:
        if d % 4 == 2:
            cyclq_exponent(f, d // 2)
    return MultiplicityFn(vals)


def even_part(f):
    """Exponents m(k) with prod_d Phi_d(q)^{e_d}, d even, = prod_k (1+q^k)^{m(k)}."""
    # Phi_{2j}(q) = Phi_{4j}(v); 1 + q^k = prod_{o | k, o odd} Phi_{2k/o}(q)
    e = {}
    for d, x in f._phi.items():
        if d % 4 == 0:
            e[d // 4] = x  # e[j] = exponent of Phi_{2j}(q)
    if not e:
        return MultiplicityFn()
    top = max(e)
    vals = {}
    for k in range(1, top + 1):
        s = 0
        o = 1
        while k * o <= top:
            mu = mobius(o)
            if mu:
                s += mu * e.get(k * o, 0)
            o += 2
        if s:
            vals[k] = s
    return MultiplicityFn(vals)


def from_q_multiplicities(even=None, odd=None):
    """Canonical element prod_k (1+q^k)^even(k) * prod_k Phi_{2k}(q)^odd(k)."""
    out = ONE
    for k, x in (even.items() if even else []):
        if k.denominator != 1 or k <= 0:
            raise ValueError("even multiplicities live on positive integers")
        out = mul(out, power(binomial_factor('+', 2 * int(k)), x))
    for k, x in (odd.items() if odd else []):
        d = int(2 * k)
        if d % 2 == 0 or d <= 0:
            raise ValueError("odd cyclotomic keys live on positive half-integers")
        # Phi_d(q) = Phi_d(v) Phi_{2d}(v) for odd d
        out = mul(out, CycloFactored(1, 0, {d: x, 2 * d: x}))
    return out


def cycl_q(f):
    """``cycl(n/2)`` = exponent of Phi_n(q) in f, over all n >= 1."""
    vals = {}
    for d in f._phi:
        n = d // 2 if d % 2 == 0 else d
        if n not in vals:
            vals[n] = cyclq_exponent(f, n)
    return MultiplicityFn({Fraction(n, 2): e for n, e in vals.items()})


def mult_from_cycl(cycl):
    """``mult(x)`` = exponent of (1 - q^{2x}), by Moebius inversion of
    cycl(x) = sum_{s >= 1} mult(s x)."""
    if cycl.is_zero():
        return MultiplicityFn()
    top = cycl.max_support()
    vals = {}
    x = Fraction(1, 2)
    while x <= top:
        acc = 0
        s = 1
        while s * x <= top:
            mu = mobius(s)
            if mu:
                acc += mu * cycl(s * x)
            s += 1
        if acc:
            vals[x] = acc
        x += Fraction(1, 2)
    return MultiplicityFn(vals)


def cycl_from_mult(mult):
    """cycl(x) = sum_{s >= 1} mult(s x) on (1/2)Z_{>0}."""
    vals = {}
    for x, v in mult.items():
        if x <= 0:
            raise ValueError("mult lives on positive half-integers")
        n = int(2 * x)
        for d in divisors(n):
            k = Fraction(d, 2)
            vals[k] = vals.get(k, 0) + v
    return MultiplicityFn(vals)


def one_minus_q_power(mult):
    """Canonical prod_x (1 - q^{2x})^mult(x)."""
    out = ONE
    for x, v in mult.items():
        out = mul(out, power(binomial_factor('-', int(4 * x)), v))
    return out
