"""The extra-special bijection between odd distinct partitions and pairs (m, rho).

``encode`` sends an odd distinct partition lambda to a pair (m, rho) with
m in Z +- 1/4 positive; ``decode`` is its inverse.  The tableau T_m(rho)
splits into nested m-hooks (hooks of leg length >= kappa) and at most
kappa horizontal strips; each hook gives a pair (alpha, beta) and each
strip a gamma, and the jump sequence of lambda is the sorted union.
"""

from dataclasses import dataclass
from fractions import Fraction

from .partitions import MTableau, conjugate, partition
from .qseries import as_fraction

QUARTER = Fraction(1, 4)
HALF = Fraction(1, 2)


class InvalidESPair(ValueError):
    pass


@dataclass(frozen=True)
class ESPair:
    m: Fraction
    rho: tuple

    def __post_init__(self):
        m = as_fraction(self.m)
        object.__setattr__(self, 'm', m)
        object.__setattr__(self, 'rho', partition(self.rho))
        if m <= 0 or (4 * m).denominator != 1 or (2 * m).denominator == 1:
            raise InvalidESPair(f"m must be a positive element of Z +- 1/4, got {m}")

    @property
    def kappa(self):
        return kappa_epsilon(self.m)[0]

    @property
    def epsilon(self):
        return kappa_epsilon(self.m)[1]

    @property
    def delta(self):
        return self.kappa % 2

    def tableau(self):
        return MTableau(self.m, self.rho)


def kappa_epsilon(m):
    """Write m = kappa + (2 eps - 1)/4."""
    m = as_fraction(m)
    kappa = round(m)
    eps = 1 if m > kappa else 0
    if m != kappa + Fraction(2 * eps - 1, 4):
        raise InvalidESPair(f"m = {m} is not in Z +- 1/4")
    return int(kappa), eps


def _check_odd_distinct(lam):
    lam = partition(lam)
    if any(p % 2 == 0 for p in lam) or len(set(lam)) != len(lam):
        raise ValueError(f"expected distinct odd parts, got {list(lam)}")
    return lam


def encode(lam):
    """Odd distinct partition -> ESPair."""
    lam = _check_odd_distinct(lam)
    js = [(p - 1) // 2 for p in lam]  # jumps, descending
    odd = [j for j in js if j % 2]
    even = [j for j in js if not j % 2]
    kappa = abs(len(odd) - len(even))
    eps = 1 if len(odd) > len(even) or kappa == 0 else 0
    m4 = 4 * kappa + 2 * eps - 1  # 4m
    dominant, other = (odd, even) if eps else (even, odd)
    gammas = dominant[len(dominant) - kappa:]  # the kappa smallest, descending
    alphas = dominant[:len(dominant) - kappa]
    betas = other
    assert len(alphas) == len(betas)

    boxes = set()
    t = len(alphas)
    for i, (a, b) in enumerate(zip(alphas, betas), start=1):
        # arm = (a - 1/2)/2 - m, leg = m + (b - 1/2)/2
        arm4, leg4 = 2 * a - 1 - m4, m4 + 2 * b - 1
        if arm4 % 4 or leg4 % 4 or arm4 < 0 or leg4 < 4 * kappa:
            raise AssertionError(f"hook {i} from ({a}, {b}) is not an m-hook")
        arm, leg = arm4 // 4, leg4 // 4
        boxes.update((i, j) for j in range(i, i + arm + 1))
        boxes.update((r, i) for r in range(i + 1, i + leg + 1))
    for i, g in enumerate(gammas, start=1):
        # strip length (g - 1/2)/2 - m + i
        len4 = 2 * g - 1 - m4 + 4 * i
        if len4 % 4 or len4 < 0:
            raise AssertionError(f"strip {i} from gamma = {g} has negative length")
        boxes.update((t + i, t + j) for j in range(1, len4 // 4 + 1))
    rho = _shape_from_boxes(boxes)
    return ESPair(Fraction(m4, 4), rho)


def _shape_from_boxes(boxes):
    rows = {}
    for i, j in boxes:
        rows.setdefault(i, set()).add(j)
    if not rows:
        return ()
    shape = []
    for i in range(1, max(rows) + 1):
        cols = rows.get(i, set())
        if cols != set(range(1, len(cols) + 1)):
            raise AssertionError(f"row {i} is not left justified")
        shape.append(len(cols))
    if any(a < b for a, b in zip(shape, shape[1:])) or 0 in shape:
        raise AssertionError(f"boxes do not form a Young diagram: {shape}")
    return tuple(shape)


def _decompose(p):
    """Return (t, hooks as (arm, leg), strip lengths) or raise InvalidESPair."""
    rho = p.rho
    kappa = p.kappa
    cols = conjugate(rho)
    t = 0
    hooks = []
    while t < len(rho) and rho[t] > t:
        i = t + 1
        leg = cols[i - 1] - i
        if leg < kappa:
            break
        hooks.append((rho[i - 1] - i, leg))
        t = i
    strip_rows = [r - t for r in rho[t:] if r > t]
    if len(strip_rows) > kappa:
        raise InvalidESPair(
            f"not a valid extra-special pair: strip region of ({p.m}, {list(rho)}) "
            f"has {len(strip_rows)} rows but kappa = {kappa}")
    # rows below the strips must lie inside the hook legs
    if any(r > t for r in rho[t + kappa:]):
        raise InvalidESPair(f"not a valid extra-special pair: ({p.m}, {list(rho)})")
    strips = strip_rows + [0] * (kappa - len(strip_rows))
    return t, hooks, strips


def hook_strip_decomposition(p):
    """Fillings of the m-hooks (hand, foot) and of the strip right ends.

    An empty strip i is reported with the filling |m - i| of the box just
    left of where it would start.
    """
    _, hooks, strips = _decompose(p)
    m = p.m
    hook_fill = [(m + arm, abs(m - leg)) for arm, leg in hooks]
    strip_fill = [abs(m - i + ln) for i, ln in enumerate(strips, start=1)]
    return hook_fill, strip_fill


def hook_strip_marks(p):
    """Box -> tag ('h' for hook boxes, 's' for strip boxes) for rendering."""
    t, hooks, strips = _decompose(p)
    marks = {}
    for i, (arm, leg) in enumerate(hooks, start=1):
        for j in range(i, i + arm + 1):
            marks[(i, j)] = 'h'
        for r in range(i + 1, i + leg + 1):
            marks[(r, i)] = 'h'
    for i, ln in enumerate(strips, start=1):
        for j in range(1, ln + 1):
            marks[(t + i, t + j)] = 's'
    return marks


def decode(p):
    """ESPair -> odd distinct partition."""
    if not isinstance(p, ESPair):
        p = ESPair(*p)
    _, hooks, strips = _decompose(p)
    h = int(2 * p.m + HALF)  # 2m + 1/2
    js = []
    for arm, leg in hooks:
        js.append(h + 2 * arm)
        js.append(2 * leg + 1 - h)
    for i, ln in enumerate(strips, start=1):
        js.append(h + 2 * (ln - i))
    if len(set(js)) != len(js) or any(j < 0 for j in js):
        raise InvalidESPair(f"not a valid extra-special pair: ({p.m}, {list(p.rho)})")
    return tuple(sorted((2 * j + 1 for j in js), reverse=True))


def is_valid(p):
    try:
        lam = decode(p)
    except InvalidESPair:
        return False
    return encode(lam) == p
