"""Exact real-root counting and isolation via Sturm sequences.

Counts are always taken on the squarefree part of the input, so each
distinct real root is counted once regardless of multiplicity.  Intervals
are open, carry a strict sign change of the squarefree part at their
endpoints, and can be bisected down to any requested width.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poly import Poly
from .rationals import rat, sign

NEG_INF = "-inf"
POS_INF = "+inf"

DEFAULT_WIDTH = rat(1, 2**20)


@dataclass(frozen=True)
class RationalInterval:
    lo: object
    hi: object

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError("interval requires lo < hi")

    @property
    def width(self):
        return self.hi - self.lo

    @property
    def midpoint(self):
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        return self.lo < x < self.hi


def sturm_sequence(p: Poly) -> list[Poly]:
    """Standard Sturm chain p, p', then negated remainders."""
    seq = [p, p.derivative()]
    while not seq[-1].is_zero and seq[-1].degree > 0:
        r = divmod(seq[-2], seq[-1])[1]
        if r.is_zero:
            break
        # positive rescale keeps coefficients small without touching signs
        r = r.scale(1 / max(abs(c) for c in r.coeffs))
        seq.append(-r)
    return [q for q in seq if not q.is_zero]


def _sign_at(q: Poly, x) -> int:
    if x is NEG_INF:
        return q.sign_at_neg_infinity()
    if x is POS_INF:
        return q.sign_at_pos_infinity()
    return sign(q(x))


def _variations(seq: list[Poly], x) -> int:
    count = 0
    prev = 0
    for q in seq:
        s = _sign_at(q, x)
        if s == 0:
            continue
        if prev != 0 and s != prev:
            count += 1
        prev = s
    return count


def sturm_count(p: Poly, lo=NEG_INF, hi=POS_INF) -> int:
    """Number of distinct real roots of p in (lo, hi]."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return 0
    if lo is not NEG_INF and hi is not POS_INF and not lo < hi:
        raise ValueError("requires lo < hi")
    q = p.squarefree_part()
    seq = sturm_sequence(q)
    return _variations(seq, lo) - _variations(seq, hi)


def root_bound(p: Poly):
    """Cauchy bound: all complex roots have |z| < bound."""
    lead = abs(p.leading)
    m = max(abs(c) for c in p.coeffs[:-1]) if p.degree > 0 else rat(0)
    return 1 + m / lead


def isolate_real_roots(p: Poly) -> list[RationalInterval]:
    """Disjoint open intervals, one per distinct real root of p.

    Each interval has a strict sign change of the squarefree part at its
    endpoints.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return []
    q = p.squarefree_part()
    seq = sturm_sequence(q)
    total = _variations(seq, NEG_INF) - _variations(seq, POS_INF)
    if total == 0:
        return []
    b = root_bound(q)
    found: list[RationalInterval] = []
    # (lo, hi] cells; endpoints start strictly outside the root range
    stack = [(-b, b, _variations(seq, -b) - _variations(seq, b))]
    while stack:
        lo, hi, cnt = stack.pop()
        if cnt == 0:
            continue
        if cnt == 1:
            found.append(_sign_change_interval(q, seq, lo, hi))
            continue
        mid = (lo + hi) / 2
        vl = _variations(seq, lo)
        vm = _variations(seq, mid)
        vh = _variations(seq, hi)
        stack.append((lo, mid, vl - vm))
        stack.append((mid, hi, vm - vh))
    found.sort(key=lambda iv: iv.lo)
    return found


def _window_around_root(q: Poly, seq: list[Poly], root, delta) -> RationalInterval:
    """Symmetric sign-change window around a rational point that is a root of q."""
    while True:
        a, b = root - delta, root + delta
        if sign(q(a)) != 0 and sign(q(b)) != 0:
            if _variations(seq, a) - _variations(seq, b) == 1:
                return RationalInterval(a, b)
        delta = delta / 2


def _sign_change_interval(q: Poly, seq: list[Poly], lo, hi) -> RationalInterval:
    """Turn a (lo, hi] cell holding one root into an open sign-change interval."""
    sh = sign(q(hi))
    if sh == 0:
        return _window_around_root(q, seq, hi, (hi - lo) / 2)
    # the root is strictly inside; walk the left endpoint inward until it
    # sits on the far side of the sign change
    t = lo
    while True:
        st = sign(q(t))
        if st == 0 and t != lo:
            # t landed exactly on the root
            return _window_around_root(q, seq, t, min(t - lo, hi - t) / 2)
        if st != 0 and st != sh:
            return RationalInterval(t, hi)
        # q(lo) == 0 means lo is a root just outside the cell; step inward,
        # then keep halving back toward lo until we cross the sign change
        t = (t + hi) / 2 if t == lo else (lo + t) / 2


def refine_interval(q: Poly, iv: RationalInterval, width=DEFAULT_WIDTH) -> RationalInterval:
    """Bisect a sign-change interval of squarefree q down to the given width."""
    lo, hi = iv.lo, iv.hi
    slo = sign(q(lo))
    while hi - lo > width:
        mid = (lo + hi) / 2
        sm = sign(q(mid))
        if sm == 0:
            # rational root hit exactly; center a tiny window on it
            d = min(width, hi - mid, mid - lo) / 2
            return RationalInterval(mid - d, mid + d)
        if sm == slo:
            lo = mid
        else:
            hi = mid
    return RationalInterval(lo, hi)


def refine_to_width_exp(q: Poly, iv: RationalInterval, exp: int) -> RationalInterval:
    return refine_interval(q, iv, rat(1, 2**exp))
