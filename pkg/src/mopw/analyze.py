"""Sign certification, real-zero profiles, interlacing, and complex roots.

Everything up to (and including) interlacing is exact.  Complex roots are
the one numerical component: an Aberth-Ehrlich simultaneous solve with
Newton polishing, used only for zero-configuration export.
"""

from __future__ import annotations

import cmath
import csv
import math
from dataclasses import dataclass
from io import StringIO
from typing import Iterable

from .poly import Poly
from .rationals import as_float, rat, sign
from .sturm import (
    DEFAULT_WIDTH,
    NEG_INF,
    POS_INF,
    RationalInterval,
    isolate_real_roots,
    refine_interval,
    sturm_count,
)

DOMAIN_REAL = "R"
DOMAIN_POSITIVE = "positive"


@dataclass(frozen=True)
class PositivityCertificate:
    domain: str
    real_root_count_in_domain: int
    sample_point: object
    sample_sign: int
    leading_sign: int

    @property
    def valid(self) -> bool:
        return (
            self.real_root_count_in_domain == 0
            and self.sample_sign == 1
            and self.leading_sign == 1
        )


@dataclass(frozen=True)
class Refutation:
    domain: str
    witness: object          # rational x with p(x) <= 0, when one exists
    value: object            # p(witness)
    root_interval: RationalInterval | None = None


def certify_positive(p: Poly, domain: str = DOMAIN_REAL):
    """Exact strict-positivity certificate on R or on (0, inf).

    Returns a PositivityCertificate when p > 0 on the whole domain, else a
    Refutation carrying a rational point with p <= 0 (or, for the rare
    touch-zero case with no rational witness, an isolating interval of the
    offending root).
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    if domain not in (DOMAIN_REAL, DOMAIN_POSITIVE):
        raise ValueError(f"unknown domain {domain!r}")
    lo = NEG_INF if domain == DOMAIN_REAL else rat(0)
    count = sturm_count(p, lo, POS_INF) if p.degree > 0 else 0
    sample = rat(0) if domain == DOMAIN_REAL else rat(1)
    sval = p(sample)
    lead = sign(p.leading)
    if count == 0 and sval > 0 and lead == 1:
        return PositivityCertificate(domain, 0, sample, 1, lead)
    if sval <= 0:
        return Refutation(domain, sample, sval)
    # there is a root in the domain: hunt for a rational point with p <= 0
    intervals = [
        iv
        for iv in isolate_real_roots(p)
        if domain == DOMAIN_REAL or iv.hi > 0
    ]
    q = p.squarefree_part()
    for iv in intervals:
        iv = refine_interval(q, iv)
        for _ in range(64):
            for x in (iv.lo, iv.midpoint, iv.hi):
                if (domain == DOMAIN_REAL or x > 0) and p(x) <= 0:
                    return Refutation(domain, x, p(x), iv)
            iv = refine_interval(q, iv, iv.width / 4)
    # p touches zero without crossing (even multiplicity at an irrational
    # point): no rational witness of p <= 0 exists, report the interval
    iv = intervals[0]
    return Refutation(domain, None, None, iv)


@dataclass(frozen=True)
class RealZeroProfile:
    count: int
    simple: bool
    intervals: tuple[RationalInterval, ...]


def real_zero_profile(p: Poly, width=DEFAULT_WIDTH) -> RealZeroProfile:
    """Distinct real roots with simplicity certificate and isolating intervals."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    simple = p.degree <= 0 or p.gcd(p.derivative()).degree <= 0
    if p.degree <= 0:
        return RealZeroProfile(0, simple, ())
    q = p.squarefree_part()
    ivs = [refine_interval(q, iv, width) for iv in isolate_real_roots(p)]
    return RealZeroProfile(len(ivs), simple, tuple(ivs))


def interlacing_check(p: Poly, q: Poly) -> tuple[bool, dict]:
    """Strict interlacing of the real zeros of p and q.

    Refines isolating intervals until totally ordered, then requires strict
    alternation of ownership and root counts differing by exactly one.
    Returns (ok, detail); a shared root shows up as a nonconstant gcd and is
    reported as a witness.
    """
    if p.is_zero or q.is_zero:
        raise ValueError("zero polynomial")
    g = p.gcd(q)
    if g.degree > 0:
        return False, {"reason": "shared root", "witness_gcd": g.to_strings()}
    sp = p.squarefree_part()
    sq = q.squarefree_part()
    ivp = list(isolate_real_roots(p))
    ivq = list(isolate_real_roots(q))
    if abs(len(ivp) - len(ivq)) != 1:
        return False, {"reason": "counts differ by != 1", "counts": (len(ivp), len(ivq))}
    tagged = [(iv, "p", sp) for iv in ivp] + [(iv, "q", sq) for iv in ivq]
    # refine until pairwise disjoint; gcd(p, q) constant guarantees termination
    while True:
        tagged.sort(key=lambda t: t[0].lo)
        clash = None
        for (a, _, _), (b, _, _) in zip(tagged, tagged[1:]):
            if not a.hi <= b.lo:
                clash = True
                break
        if clash is None:
            break
        tagged = [
            (refine_interval(s, iv, iv.width / 4), owner, s)
            for iv, owner, s in tagged
        ]
    owners = [owner for _, owner, _ in tagged]
    ok = all(a != b for a, b in zip(owners, owners[1:]))
    return ok, {"order": "".join(owners)}


# -- complex roots -----------------------------------------------------------


@dataclass(frozen=True)
class RootSet:
    roots: tuple[complex, ...]
    residual_scale: float
    degree: int

    def max_relative_residual(self, coeffs: list[float]) -> float:
        worst = 0.0
        for z in self.roots:
            worst = max(worst, _relative_residual(coeffs, z))
        return worst


class RootSolveError(RuntimeError):
    def __init__(self, message: str, partial: "RootSet | None" = None):
        super().__init__(message)
        self.partial = partial


def _horner(coeffs: list[float], z: complex) -> complex:
    acc = 0j
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def _newton_step(coeffs: list[float], rev: list[float], z: complex) -> complex | None:
    """p(z)/p'(z), evaluated via the reversed polynomial when |z| > 1 so
    huge powers never overflow.  None when p'(z) vanishes."""
    n = len(coeffs) - 1
    if abs(z) <= 1.0:
        pv = _horner(coeffs, z)
        dv = _horner([k * c for k, c in enumerate(coeffs)][1:], z)
        if dv == 0:
            return None
        return pv / dv
    w = 1.0 / z
    qv = _horner(rev, w)
    dqv = _horner([k * c for k, c in enumerate(rev)][1:], w)
    # p'(z)/p(z) = (n q(w) - w q'(w)) / (z q(w))
    denom = n * qv - w * dqv
    if denom == 0:
        return None
    return z * qv / denom


def _relative_residual(coeffs: list[float], z: complex) -> float:
    az = abs(z)
    if az <= 1.0:
        num = abs(_horner(coeffs, z))
        den = sum(abs(c) * az**k for k, c in enumerate(coeffs))
    else:
        rev = coeffs[::-1]
        w = 1.0 / z
        num = abs(_horner(rev, w))
        den = sum(abs(c) * abs(w) ** k for k, c in enumerate(rev))
    return num / den if den else num


def _bini_initial_guesses(coeffs: list[float]) -> list[complex]:
    """Initial points on circles whose radii come from the Newton polygon
    of (k, log|a_k|), the standard Aberth start."""
    n = len(coeffs) - 1
    logs = [math.log(abs(c)) if c != 0 else -math.inf for c in coeffs]
    # upper convex hull from k=0 to k=n
    hull = [0]
    for k in range(1, n + 1):
        if logs[k] == -math.inf:
            continue
        while len(hull) >= 2:
            k1, k2 = hull[-2], hull[-1]
            if (logs[k] - logs[k1]) * (k2 - k1) >= (logs[k2] - logs[k1]) * (k - k1):
                hull.pop()
            else:
                break
        hull.append(k)
    if hull[-1] != n:
        hull.append(n)
    zs: list[complex] = []
    idx = 0
    for k1, k2 in zip(hull, hull[1:]):
        m = k2 - k1
        if logs[k1] == -math.inf:
            radius = 1.0
        else:
            radius = math.exp((logs[k1] - logs[k2]) / m)
        for t in range(m):
            ang = 2 * math.pi * (idx / n + t / m) + 0.693 / n
            zs.append(radius * cmath.exp(1j * ang) + 1e-3 * radius * cmath.exp(3.1j * idx))
            idx += 1
    return zs[:n]


def complex_roots(p: Poly, tol: float = 1e-13, max_iter: int = 1000) -> RootSet:
    """All complex roots by Aberth-Ehrlich iteration plus Newton polish.

    Coefficients are scaled by the max-magnitude coefficient before float
    conversion; the scale is reported in residual_scale.  For real input the
    root multiset is symmetrized under conjugation by pairing.
    """
    if p.degree < 1:
        raise ValueError("degree must be >= 1")
    scale = max(abs(c) for c in p.coeffs)
    inv = rat(1) / scale
    coeffs = [as_float(c * inv) for c in p.coeffs]
    if any(math.isinf(c) or math.isnan(c) for c in coeffs):
        raise OverflowError("coefficients not representable after scaling")
    n = p.degree
    rev = coeffs[::-1]
    zs = _bini_initial_guesses(coeffs)
    converged = False
    for _ in range(max_iter):
        moved = 0.0
        for k in range(n):
            w = _newton_step(coeffs, rev, zs[k])
            if w is None:
                zs[k] += 1e-6 * (1 + abs(zs[k]))
                moved = math.inf
                continue
            if w == 0:
                continue
            s = sum(1.0 / (zs[k] - zs[j]) for j in range(n) if j != k)
            denom = 1.0 - w * s
            step = w / denom if denom != 0 else w
            zs[k] -= step
            moved = max(moved, abs(step) / max(1.0, abs(zs[k])))
        if moved < tol:
            converged = True
            break
    roots = _pair_conjugates([_newton_polish(coeffs, rev, z) for z in zs])
    rs = RootSet(tuple(roots), as_float(scale), n)
    if not converged and rs.max_relative_residual(coeffs) > 1e-9:
        raise RootSolveError("Aberth iteration did not converge", rs)
    return rs


def _newton_polish(coeffs, rev, z: complex, steps: int = 12) -> complex:
    for _ in range(steps):
        w = _newton_step(coeffs, rev, z)
        if w is None or w == 0:
            break
        if abs(w) < 1e-17 * max(1.0, abs(z)):
            break
        z = z - w
    return z


def _pair_conjugates(roots: list[complex]) -> list[complex]:
    """Greedy conjugate pairing for real-coefficient inputs."""
    out: list[complex] = []
    pool = list(roots)
    while pool:
        z = pool.pop()
        if not pool:
            out.append(z)
            break
        partner = min(pool, key=lambda w: abs(w - z.conjugate()))
        if abs(partner - z.conjugate()) <= 1e-6 * max(1.0, abs(z)):
            pool.remove(partner)
            avg = (z + partner.conjugate()) / 2
            out.append(avg)
            out.append(avg.conjugate())
        else:
            out.append(z)
    out.sort(key=lambda w: (w.real, w.imag))
    return out


def rootset_to_csv_rows(rs: RootSet, series: str) -> list[tuple[str, str, str]]:
    return [("%.17g" % z.real, "%.17g" % z.imag, series) for z in rs.roots]


def write_roots_csv(rows: Iterable[tuple[str, str, str]]) -> str:
    buf = StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["re", "im", "series"])
    for row in rows:
        w.writerow(row)
    return buf.getvalue()


# -- type I Wronskian grid signs (heuristic, high precision) -----------------


def type1_wronskian_grid_sign(family, path, grid, precision_bits: int = 200) -> dict:
    """Signs of the type I Wronskian at grid points.

    The k-th derivative of Q = sum_j A_j w_j is carried symbolically as
    sum_j B_{j,k} w_j with Laurent-polynomial B, so only the weights
    themselves are evaluated in floating point (at precision_bits).  This
    is a labeled heuristic check, not an exact certificate: the type I
    Wronskian is not a polynomial.
    """
    import mpmath as mp

    from .construct import construct_type1
    from .indices import validate_path
    from .laurent import Laurent, log_derivative
    from .weights import CUSTOM

    if family.kind == CUSTOM:
        raise ValueError("grid-sign check needs a named weight family")
    indices = validate_path(path)
    l = len(indices)
    if l % 2 != 0:
        raise ValueError("the constant-sign statement needs even path length")
    lam = [log_derivative(family, j) for j in range(1, family.r + 1)]
    # derivative tables: per path position, per weight, per derivative order
    tables = []
    for n in indices:
        form = construct_type1(family, n)
        bs = [[Laurent.from_poly(a) for a in form.coeff_polys]]
        for _ in range(l - 1):
            bs.append(
                [b.derivative() + b * lam[j] for j, b in enumerate(bs[-1])]
            )
        tables.append(bs)
    signs = []
    with mp.workprec(precision_bits):
        for x in grid:
            x = rat(x)
            if family.support_positive and x <= 0:
                raise ValueError("grid point outside the weight support")
            wvals = [_normalized_weight(family, j, x, mp) for j in range(1, family.r + 1)]
            rows = []
            for k in range(l):
                row = []
                for bs in tables:
                    total = mp.mpf(0)
                    for j in range(family.r):
                        total += mp.mpf(float(bs[k][j](x))) * wvals[j]
                    row.append(total)
                rows.append(row)
            det = mp.det(mp.matrix(rows))
            signs.append(1 if det > 0 else (-1 if det < 0 else 0))
    constant = len(set(signs)) <= 1 and (not signs or signs[0] != 0)
    return {"signs": signs, "constant_sign": constant}


def _normalized_weight(family, j: int, x, mp):
    """Unit-mass weight value: w_j(x) divided by its total integral."""
    from .weights import HERMITE, LAGUERRE1, LAGUERRE2

    xf = mp.mpf(float(x))
    if family.kind == HERMITE:
        c = mp.mpf(float(family.c[j - 1]))
        mass = mp.sqrt(mp.pi) * mp.exp(c * c / 4)
        return mp.exp(-xf * xf + c * xf) / mass
    if family.kind == LAGUERRE1:
        a = mp.mpf(float(family.alpha[j - 1]))
        return xf**a * mp.exp(-xf) / mp.gamma(a + 1)
    if family.kind == LAGUERRE2:
        a = mp.mpf(float(family.alpha[0]))
        c = mp.mpf(float(family.c[j - 1]))
        mass = mp.gamma(a + 1) / c ** (a + 1)
        return xf**a * mp.exp(-c * xf) / mass
    raise ValueError("unsupported family")
