"""Wronskian and Hankel (Turanian) determinants along multi-index paths."""

from __future__ import annotations

import math
from dataclasses import dataclass
from random import Random

from .construct import hermite_closed_form, type2
from .indices import MultiIndex, PathSpec, enumerate_paths, validate_path
from .poly import Poly
from .polymatrix import PolyMatrix, polymat_det
from .rationals import rat
from .weights import HERMITE, LAGUERRE1, LAGUERRE2, InvalidFamilyError, WeightFamily


@dataclass(frozen=True)
class WronskianRequest:
    family: WeightFamily
    path: PathSpec


def wronskian_of_polys(polys: list[Poly]) -> Poly:
    """det of the matrix whose (i, j) entry is the i-th derivative of polys[j]."""
    l = len(polys)
    rows = [list(polys)]
    for _ in range(l - 1):
        rows.append([p.derivative() for p in rows[-1]])
    return polymat_det(PolyMatrix.from_rows(rows))


def path_polys(family: WeightFamily, path: PathSpec) -> list[Poly]:
    return [type2(family, n) for n in validate_path(path)]


def wronskian(req: WronskianRequest) -> Poly:
    """W(n, l; x) for the request's path; degree l*|n|, leading prod_{k<l} k!."""
    return wronskian_of_polys(path_polys(req.family, req.path))


def hankel_det(family: WeightFamily, n: MultiIndex, j: int, l: int) -> Poly:
    """Raw determinant of the l x l Hankel matrix with entry (a, b) equal to
    the polynomial at n + (a+b) e_j (a, b zero-based)."""
    if l < 1:
        raise ValueError("l must be >= 1")
    polys = [type2(family, _shift(n, j, k)) for k in range(2 * l - 1)]
    rows = [[polys[a + b] for b in range(l)] for a in range(l)]
    return polymat_det(PolyMatrix.from_rows(rows))


def turanian(family: WeightFamily, n: MultiIndex, j: int, l: int) -> Poly:
    """Turanian with the classical sign convention.

    This is (-1)^{l(l-1)/2} times the raw Hankel determinant, so that for
    l = 2 it reads P_{n+e_j}^2 - P_n P_{n+2e_j}, the quantity the Turan
    inequalities bound.
    """
    det = hankel_det(family, n, j, l)
    return det if (l * (l - 1) // 2) % 2 == 0 else -det


def hankel_wronskian_identity_check(n: MultiIndex, c, j: int, l: int) -> bool:
    """For multiple Hermite: Wronskian along the e_j path equals
    (-2)^{l(l-1)/2} times the raw Hankel determinant, exactly."""
    family = WeightFamily.hermite(c)
    path = PathSpec.horizontal(n, l, j)
    w = wronskian(WronskianRequest(family, path))
    h = hankel_det(family, n, j, l)
    return w == h.scale(rat(-2) ** (l * (l - 1) // 2))


def sylvester_check(m: PolyMatrix, m1: int, m2: int, n1: int, n2: int) -> bool:
    """Verify det A * det A[m1,m2; n1,n2] against the 2x2 matrix of the
    single-deletion minors (indices 1-based; the empty 0x0 minor is 1)."""
    if m.rows != m.cols:
        raise ValueError("matrix must be square")
    size = m.rows
    for idx in (m1, m2, n1, n2):
        if not 1 <= idx <= size:
            raise ValueError("index out of range")
    if not (m1 >= m2 and n1 > n2):
        raise ValueError("requires m1 >= m2 and n1 > n2")
    if m1 == m2:
        raise ValueError("row indices must be distinct")
    lhs_big = polymat_det(m)
    if size == 2:
        lhs_small = Poly.one()
    else:
        lhs_small = polymat_det(m.delete([m1 - 1, m2 - 1], [n1 - 1, n2 - 1]))
    d11 = polymat_det(m.delete([m1 - 1], [n1 - 1]))
    d12 = polymat_det(m.delete([m1 - 1], [n2 - 1]))
    d21 = polymat_det(m.delete([m2 - 1], [n1 - 1]))
    d22 = polymat_det(m.delete([m2 - 1], [n2 - 1]))
    return lhs_big * lhs_small == d11 * d22 - d12 * d21


def moment_acp(family: WeightFamily, path: PathSpec, z) -> tuple:
    """m-th moment of the average characteristic polynomial along a path:
    W(path) / prod_{i<m} i!, as a polynomial and its value at z."""
    m = path.length
    w = wronskian(WronskianRequest(family, path))
    denom = rat(1)
    for i in range(m):
        denom = denom * math.factorial(i)
    p = w.scale(1 / denom)
    return p(rat(z)), p


def confluent_check(family: WeightFamily, path: PathSpec, z, eps_list) -> list:
    """Residuals of the confluence of the multi-point determinant formula.

    For each eps, evaluates D(eps) = det(P_{n_j}(z_i)) / Vandermonde at the
    points z_i = z + (i-1) eps and reports D(eps) - W(path; z)/prod i!,
    exactly.  The residual shrinks like O(eps).
    """
    z = rat(z)
    m = path.length
    target, _ = moment_acp(family, path, z)
    polys = path_polys(family, path)
    out = []
    for eps in eps_list:
        eps = rat(eps)
        if eps <= 0:
            raise ValueError("eps must be positive")
        if m == 1:
            out.append((eps, rat(0)))
            continue
        zs = [z + i * eps for i in range(m)]
        rows = [[Poly.constant(p(zi)) for p in polys] for zi in zs]
        det = polymat_det(PolyMatrix.from_rows(rows))
        vand = rat(1)
        for i in range(m):
            for jj in range(i + 1, m):
                vand = vand * (zs[jj] - zs[i])
        d_eps = det(rat(0)) / vand
        out.append((eps, d_eps - target))
    return out


def path_independence_check(
    family: WeightFamily, n: MultiIndex, l: int, cap: int = 50, seed: int = 0
) -> bool:
    """All monotone length-l paths from n give literally the same Wronskian.

    Beyond `cap` paths a seeded random subset of that size is checked.
    """
    if l < 2:
        raise ValueError("needs l >= 2")
    total = n.r ** (l - 1)
    paths = list(enumerate_paths(n, l))
    if total > cap:
        rng = Random(seed)
        paths = rng.sample(paths, cap)
    ref = wronskian(WronskianRequest(family, paths[0]))
    return all(
        wronskian(WronskianRequest(family, p)) == ref for p in paths[1:]
    )


# -- Turan-type expressions ------------------------------------------------


@dataclass(frozen=True)
class TuranVariant:
    """Which Turan-type left-hand side to build.

    tags: hermite-pair (j, k), hermite-diag (j), laguerre1-two-param (j, k),
    laguerre2-two-param (j, k), plain (j).
    """

    tag: str
    j: int = 1
    k: int = 1

    @staticmethod
    def hermite_pair(j: int, k: int) -> "TuranVariant":
        return TuranVariant("hermite-pair", j, k)

    @staticmethod
    def hermite_diag(j: int) -> "TuranVariant":
        return TuranVariant("hermite-diag", j, j)

    @staticmethod
    def laguerre1_two_param(j: int, k: int) -> "TuranVariant":
        return TuranVariant("laguerre1-two-param", j, k)

    @staticmethod
    def laguerre2_two_param(j: int, k: int) -> "TuranVariant":
        return TuranVariant("laguerre2-two-param", j, k)

    @staticmethod
    def plain(j: int) -> "TuranVariant":
        return TuranVariant("plain", j, j)


def turan_expression(family: WeightFamily, n: MultiIndex, variant: TuranVariant) -> Poly:
    """The exact polynomial on the left-hand side of the requested
    Turan-type inequality (positive cases) or counterexample (plain)."""
    j, k = variant.j, variant.k
    for d in (j, k):
        if not 1 <= d <= family.r:
            raise ValueError(f"direction {d} out of range 1..{family.r}")
    tag = variant.tag
    if tag in ("hermite-pair", "hermite-diag"):
        if family.kind != HERMITE:
            raise InvalidFamilyError("hermite variants need a hermite family")
        p = lambda idx: hermite_closed_form(idx, family.c)
        return p(n.step(j)) * p(n.step(k)) - p(n) * p(n.step(j).step(k))
    if tag == "plain":
        base = lambda idx: type2(family, idx)
        return base(n.step(j)) * base(n.step(j)) - base(n) * base(n.step(j).step(j))
    if tag == "laguerre1-two-param":
        if family.kind != LAGUERRE1:
            raise InvalidFamilyError("variant needs a laguerre1 family")
        if family.alpha[j - 1] <= 0:
            raise InvalidFamilyError("two-parameter variant needs alpha_j > 0")
        from .construct import laguerre1_closed_form, lowered_family

        low = lowered_family(family, j)
        hi = lambda idx: laguerre1_closed_form(idx, family.alpha)
        lo = lambda idx: laguerre1_closed_form(idx, low.alpha)
        return hi(n.step(k)) * lo(n.step(j)) - hi(n) * lo(n.step(j).step(k))
    if tag == "laguerre2-two-param":
        if family.kind != LAGUERRE2:
            raise InvalidFamilyError("variant needs a laguerre2 family")
        a = family.alpha[0]
        if a <= 0:
            raise InvalidFamilyError("two-parameter variant needs alpha > 0")
        from .construct import laguerre2_closed_form

        hi = lambda idx: laguerre2_closed_form(idx, a, family.c)
        lo = lambda idx: laguerre2_closed_form(idx, a - 1, family.c)
        return hi(n.step(k)) * lo(n.step(j)) - hi(n) * lo(n.step(j).step(k))
    raise ValueError(f"unknown variant tag {tag!r}")


def _shift(n: MultiIndex, j: int, count: int) -> MultiIndex:
    out = n
    for _ in range(count):
        out = out.step(j)
    return out
