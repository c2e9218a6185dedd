"""Construction of multiple orthogonal polynomials.

Two independent routes are provided: exact moment-system solves (any
family, including custom moment oracles) and the closed-form sums for the
multiple Hermite and multiple Laguerre families.  The two routes agree
coefficient-by-coefficient and are tested against each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from random import Random

from .indices import MultiIndex
from .poly import Poly
from .rationals import ONE, ZERO, rat
from .weights import (
    HERMITE,
    LAGUERRE1,
    LAGUERRE2,
    InvalidFamilyError,
    MomentTable,
    WeightFamily,
)


class SingularSystemError(ValueError):
    """The defining moment system is singular: index not normal for this family."""


def solve_exact(a: list[list], b: list) -> list:
    """Solve a square rational system by Gaussian elimination with exact pivots."""
    n = len(a)
    m = [row[:] + [rhs] for row, rhs in zip(a, b)]
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col] != 0), None)
        if piv is None:
            raise SingularSystemError("singular linear system")
        m[col], m[piv] = m[piv], m[col]
        inv = ONE / m[col][col]
        m[col] = [v * inv for v in m[col]]
        for i in range(n):
            if i != col and m[i][col] != 0:
                f = m[i][col]
                m[i] = [vi - f * vc for vi, vc in zip(m[i], m[col])]
    return [m[i][n] for i in range(n)]


def construct_type2(family: WeightFamily, n: MultiIndex, table: MomentTable | None = None) -> Poly:
    """Monic type II polynomial of degree |n| from the exact moment system."""
    _check_r(family, n)
    size = n.size
    if size == 0:
        return Poly.one()
    table = table or MomentTable(family)
    rows: list[list] = []
    rhs: list = []
    for j in range(1, family.r + 1):
        for s in range(n[j - 1]):
            rows.append([table.get(j, k + s) for k in range(size)])
            rhs.append(-table.get(j, size + s))
    try:
        coeffs = solve_exact(rows, rhs)
    except SingularSystemError:
        raise SingularSystemError(
            "index not normal for this family/parameters"
        ) from None
    return Poly(coeffs + [ONE])


@dataclass(frozen=True)
class LinearForm:
    """Type I object: sum over j of coeff_polys[j] * w_j (unit-mass weights)."""

    family: WeightFamily
    coeff_polys: tuple[Poly, ...]

    def moment(self, table: MomentTable, k: int):
        """Exact integral of x^k times the form, from the moment table."""
        total = ZERO
        for j, a in enumerate(self.coeff_polys, start=1):
            for t, c in enumerate(a.coeffs):
                if c != 0:
                    total = total + c * table.get(j, t + k)
        return total


def construct_type1(family: WeightFamily, n: MultiIndex, table: MomentTable | None = None) -> LinearForm:
    """Type I coefficient polynomials for unit-mass normalized weights.

    Solves integral(Q x^k) = 0 for k <= |n|-2 and = 1 for k = |n|-1, where
    Q = sum_j A_j w_j with deg A_j <= n_j - 1.
    """
    _check_r(family, n)
    size = n.size
    if size < 1:
        raise ValueError("type I needs |n| >= 1")
    table = table or MomentTable(family)
    # unknown layout: coefficients of A_1 (n_1 of them), then A_2, ...
    cols: list[tuple[int, int]] = [
        (j, t) for j in range(1, family.r + 1) for t in range(n[j - 1])
    ]
    rows = [[table.get(j, t + k) for (j, t) in cols] for k in range(size)]
    rhs = [ZERO] * (size - 1) + [ONE]
    try:
        sol = solve_exact(rows, rhs)
    except SingularSystemError:
        raise SingularSystemError("index not normal") from None
    polys = []
    pos = 0
    for j in range(1, family.r + 1):
        nj = n[j - 1]
        polys.append(Poly(sol[pos : pos + nj]))
        pos += nj
    return LinearForm(family, tuple(polys))


# -- closed forms -------------------------------------------------------


def classical_hermite(m: int) -> Poly:
    """Physicists' Hermite polynomial with leading coefficient 2^m."""
    h_prev, h = Poly.one(), Poly([0, 2])
    if m == 0:
        return h_prev
    for k in range(1, m):
        h_prev, h = h, Poly([0, 2]) * h - h_prev.scale(2 * k)
    return h


def _index_boxes(n: MultiIndex):
    """All k-vectors with 0 <= k_j <= n_j."""
    boxes = [()]
    for nj in n.entries:
        boxes = [k + (kj,) for k in boxes for kj in range(nj + 1)]
    return boxes


def _rat_binom(top, k: int):
    """Generalized binomial with a rational top argument."""
    num = ONE
    for i in range(k):
        num = num * (top - i)
    return num / math.factorial(k)


def hermite_closed_form(n: MultiIndex, c) -> Poly:
    """Explicit double-sum formula for multiple Hermite polynomials (monic)."""
    family = WeightFamily.hermite(c)
    _check_r(family, n)
    c = family.c
    size = n.size
    total = Poly.zero()
    hermites = [classical_hermite(m) for m in range(size + 1)]
    for k in _index_boxes(n):
        ksize = sum(k)
        coeff = rat((-1) ** ksize)
        for j, (nj, kj) in enumerate(zip(n.entries, k)):
            coeff = coeff * math.comb(nj, kj)
            power = nj - kj
            if power:
                if c[j] == 0:
                    coeff = ZERO
                    break
                coeff = coeff * c[j] ** power
        if coeff != 0:
            total = total + hermites[ksize].scale(coeff)
    pref = rat((-1) ** size, 2**size)
    return total.scale(pref)


def laguerre1_closed_form(n: MultiIndex, alpha) -> Poly:
    """Explicit multiple-sum formula for multiple Laguerre polynomials of the
    first kind (monic)."""
    family = WeightFamily.laguerre1(alpha)
    _check_r(family, n)
    alpha = family.alpha
    r = family.r
    out = [ZERO] * (n.size + 1)
    for k in _index_boxes(n):
        ksize = sum(k)
        coeff = rat((-1) ** ksize)
        for j in range(r):
            # binomial top: n_j plus the not-yet-consumed budget of the
            # higher-numbered weights, shifted by alpha_j
            tail = sum(n[i] - k[i] for i in range(j + 1, r))
            coeff = coeff * math.comb(n[j], k[j]) * math.factorial(k[j])
            coeff = coeff * _rat_binom(n[j] + tail + alpha[j], k[j])
        out[n.size - ksize] = out[n.size - ksize] + coeff
    return Poly(out)


def laguerre2_closed_form(n: MultiIndex, alpha, c) -> Poly:
    """Explicit formula for multiple Laguerre polynomials of the second kind
    (monic)."""
    family = WeightFamily.laguerre2(alpha, c)
    _check_r(family, n)
    a = family.alpha[0]
    c = family.c
    out = [ZERO] * (n.size + 1)
    for k in _index_boxes(n):
        ksize = sum(k)
        coeff = _rat_binom(n.size + a, ksize) * math.factorial(ksize)
        coeff = coeff * rat((-1) ** ksize)
        for j, (nj, kj) in enumerate(zip(n.entries, k)):
            coeff = coeff * math.comb(nj, kj)
            if kj:
                coeff = coeff / c[j] ** kj
        out[n.size - ksize] = out[n.size - ksize] + coeff
    return Poly(out)


def type2(family: WeightFamily, n: MultiIndex, method: str = "closed-form") -> Poly:
    """Dispatch: closed form for the named families (fast), moment solve
    otherwise or on request."""
    if method == "moments" or family.kind not in (HERMITE, LAGUERRE1, LAGUERRE2):
        return construct_type2(family, n)
    if family.kind == HERMITE:
        return hermite_closed_form(n, family.c)
    if family.kind == LAGUERRE1:
        return laguerre1_closed_form(n, family.alpha)
    return laguerre2_closed_form(n, family.alpha[0], family.c)


# -- raising operators ---------------------------------------------------


def raising_apply(family: WeightFamily, n: MultiIndex, j: int) -> Poly:
    """Polynomial at n + e_j obtained from the family's raising relation.

    The relation lowers a weight parameter for the Laguerre families, so the
    base polynomial is constructed at the *raised* parameter and the result
    lives at the lowered one:

      hermite:   H_{n+e_j}            = ((2x - c_j) H_n - H_n') / 2
      laguerre1: L^{a-e_j}_{n+e_j}    = (x - a_j) L^a_n - x dL^a_n/dx
      laguerre2: L^{(a-1,c)}_{n+e_j}  = ((c_j x - a) L^(a,c)_n - x dL/dx) / c_j
    """
    if not 1 <= j <= family.r:
        raise ValueError(f"direction {j} out of range 1..{family.r}")
    x = Poly.x()
    if family.kind == HERMITE:
        h = hermite_closed_form(n, family.c)
        cj = family.c[j - 1]
        return ((Poly([-cj, 2]) * h) - h.derivative()).scale(rat(1, 2))
    if family.kind == LAGUERRE1:
        aj = family.alpha[j - 1]
        if aj <= 0:
            raise InvalidFamilyError("raising for laguerre1 needs alpha_j > 0")
        p = laguerre1_closed_form(n, family.alpha)
        return Poly([-aj, 1]) * p - x * p.derivative()
    if family.kind == LAGUERRE2:
        a = family.alpha[0]
        if a <= 0:
            raise InvalidFamilyError("raising for laguerre2 needs alpha > 0")
        cj = family.c[j - 1]
        p = laguerre2_closed_form(n, a, family.c)
        return (Poly([-a, cj]) * p - x * p.derivative()).scale(ONE / cj)
    raise InvalidFamilyError("raising operators exist only for the named families")


def lowered_family(family: WeightFamily, j: int) -> WeightFamily:
    """Family with the parameter shift produced by the raising relation."""
    if family.kind == HERMITE:
        return family
    if family.kind == LAGUERRE1:
        alpha = list(family.alpha)
        alpha[j - 1] = alpha[j - 1] - 1
        return WeightFamily.laguerre1(alpha)
    if family.kind == LAGUERRE2:
        return WeightFamily.laguerre2(family.alpha[0] - 1, family.c)
    raise InvalidFamilyError("no parameter shift for this family")


# -- AT-system diagnostic --------------------------------------------------


def at_system_probe(family: WeightFamily, n: MultiIndex, trials: int = 20, seed: int = 0) -> dict:
    """Numerically probe the Chebyshev determinant at random rational points.

    Draws |n| distinct points in the weight support per trial and evaluates
    det(x_t^k w_j(x_t)) in high-precision floating point with rows scaled to
    unit max.  A (near-)zero determinant flags a probable AT violation; this
    is a diagnostic, not a certificate.
    """
    import mpmath as mp

    _check_r(family, n)
    if trials < 1:
        raise ValueError("trials must be >= 1")
    size = n.size
    if size == 0:
        return {"min_abs_det": float("inf"), "trials": trials, "suspect": False}
    rng = Random(seed)
    lo, hi = (rat(1, 100), rat(8)) if family.support_positive else (rat(-4), rat(4))
    min_det = None
    with mp.workprec(200):
        for _ in range(trials):
            pts: set = set()
            while len(pts) < size:
                pts.add(lo + (hi - lo) * rat(rng.randrange(1, 10**6), 10**6))
            xs = sorted(pts)
            rows = []
            for j in range(1, family.r + 1):
                w = [_weight_value(family, j, x) for x in xs]
                for k in range(n[j - 1]):
                    row = [mp.mpf(float(x)) ** k * wv for x, wv in zip(xs, w)]
                    m = max(abs(v) for v in row)
                    rows.append([v / m for v in row])
            det = abs(mp.det(mp.matrix(rows)))
            if min_det is None or det < min_det:
                min_det = det
    val = float(min_det)
    return {"min_abs_det": val, "trials": trials, "suspect": val < 1e-12}


def _weight_value(family: WeightFamily, j: int, x):
    import mpmath as mp

    xf = mp.mpf(float(x))
    if family.kind == HERMITE:
        return mp.exp(-xf * xf + float(family.c[j - 1]) * xf)
    if family.kind == LAGUERRE1:
        return xf ** mp.mpf(float(family.alpha[j - 1])) * mp.exp(-xf)
    if family.kind == LAGUERRE2:
        return xf ** mp.mpf(float(family.alpha[0])) * mp.exp(-float(family.c[j - 1]) * xf)
    raise InvalidFamilyError("custom families have no pointwise weights")


def _check_r(family: WeightFamily, n: MultiIndex):
    if family.r != n.r:
        raise ValueError(
            f"multi-index length {n.r} does not match family with r={family.r}"
        )
