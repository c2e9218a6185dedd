"""Weight families and their exact normalized moment tables.

Every family is reduced to a table of unit-mass moments
nu_{j,k} = (integral of x^k w_j) / (integral of w_j), which are rational
for all supported families:

  - Hermite-type weights exp(-x^2 + c_j x): Gaussian with mean c_j/2 and
    variance 1/2, so nu_k = (c_j/2) nu_{k-1} + ((k-1)/2) nu_{k-2}.
  - Laguerre weights of the first kind x^{a_j} exp(-x): nu_k = (a_j+1)_k.
  - Laguerre weights of the second kind x^a exp(-c_j x): nu_k = (a+1)_k / c_j^k.

Working with normalized weights keeps the whole moment system free of
Gamma / sqrt(pi) factors.  Type II polynomials are unaffected (their
defining conditions are homogeneous); type I linear forms come out
rescaled per weight relative to the un-normalized convention, which
preserves their sign and zero structure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .rationals import ONE, rat, rat_from_str, rat_str

HERMITE = "hermite"
LAGUERRE1 = "laguerre1"
LAGUERRE2 = "laguerre2"
CUSTOM = "custom"


class InvalidFamilyError(ValueError):
    """Weight-family parameters violate the family's defining constraints."""


@dataclass(frozen=True)
class WeightFamily:
    kind: str
    c: tuple = ()        # hermite shifts, or laguerre2 rates
    alpha: tuple = ()    # laguerre1 exponents, or (alpha,) for laguerre2
    oracle: Callable | None = field(default=None, compare=False)
    r_custom: int = 0

    # -- constructors --------------------------------------------------

    @staticmethod
    def hermite(c) -> "WeightFamily":
        c = tuple(rat(x) for x in c)
        if len(set(c)) != len(c):
            raise InvalidFamilyError("hermite shifts c_j must be pairwise distinct")
        return WeightFamily(HERMITE, c=c)

    @staticmethod
    def laguerre1(alpha) -> "WeightFamily":
        alpha = tuple(rat(a) for a in alpha)
        if any(a <= -1 for a in alpha):
            raise InvalidFamilyError("laguerre1 requires every alpha_j > -1")
        for i in range(len(alpha)):
            for j in range(i + 1, len(alpha)):
                if (alpha[i] - alpha[j]).denominator == 1:
                    raise InvalidFamilyError(
                        "laguerre1 requires alpha_i - alpha_j to be non-integer"
                    )
        return WeightFamily(LAGUERRE1, alpha=alpha)

    @staticmethod
    def laguerre2(alpha, c) -> "WeightFamily":
        alpha = rat(alpha)
        c = tuple(rat(x) for x in c)
        if alpha <= -1:
            raise InvalidFamilyError("laguerre2 requires alpha > -1")
        if any(x <= 0 for x in c):
            raise InvalidFamilyError("laguerre2 requires every c_j > 0")
        if len(set(c)) != len(c):
            raise InvalidFamilyError("laguerre2 rates c_j must be pairwise distinct")
        return WeightFamily(LAGUERRE2, c=c, alpha=(alpha,))

    @staticmethod
    def custom(oracle: Callable, r: int) -> "WeightFamily":
        """oracle(j, k) -> rational nu_{j,k}; j is 1-based, nu_{j,0} must be 1."""
        if r < 1:
            raise InvalidFamilyError("custom family needs r >= 1")
        return WeightFamily(CUSTOM, oracle=oracle, r_custom=r)

    # -- queries ---------------------------------------------------------

    @property
    def r(self) -> int:
        if self.kind == HERMITE:
            return len(self.c)
        if self.kind == LAGUERRE1:
            return len(self.alpha)
        if self.kind == LAGUERRE2:
            return len(self.c)
        return self.r_custom

    @property
    def support_positive(self) -> bool:
        """True when the weights live on (0, inf) rather than all of R."""
        return self.kind in (LAGUERRE1, LAGUERRE2)

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        if self.kind == HERMITE:
            return {"kind": HERMITE, "c": [rat_str(x) for x in self.c]}
        if self.kind == LAGUERRE1:
            return {"kind": LAGUERRE1, "alpha": [rat_str(a) for a in self.alpha]}
        if self.kind == LAGUERRE2:
            return {
                "kind": LAGUERRE2,
                "alpha": rat_str(self.alpha[0]),
                "c": [rat_str(x) for x in self.c],
            }
        raise ValueError("custom families do not serialize")

    @staticmethod
    def from_json(obj: dict) -> "WeightFamily":
        kind = obj.get("kind")
        if kind == HERMITE:
            return WeightFamily.hermite([rat_from_str(s) for s in obj["c"]])
        if kind == LAGUERRE1:
            return WeightFamily.laguerre1([rat_from_str(s) for s in obj["alpha"]])
        if kind == LAGUERRE2:
            return WeightFamily.laguerre2(
                rat_from_str(obj["alpha"]), [rat_from_str(s) for s in obj["c"]]
            )
        raise InvalidFamilyError(f"unknown family kind: {kind!r}")


def normalized_moments(family: WeightFamily, j: int, k_max: int) -> list:
    """nu_{j,0..k_max} for 1-based weight index j."""
    if not 1 <= j <= family.r:
        raise InvalidFamilyError(f"weight index {j} out of range 1..{family.r}")
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    if family.kind == HERMITE:
        half_c = family.c[j - 1] / 2
        nu = [ONE]
        for k in range(1, k_max + 1):
            v = half_c * nu[k - 1]
            if k >= 2:
                v = v + rat(k - 1, 2) * nu[k - 2]
            nu.append(v)
        return nu
    if family.kind == LAGUERRE1:
        a = family.alpha[j - 1]
        nu = [ONE]
        for k in range(1, k_max + 1):
            nu.append(nu[-1] * (a + k))
        return nu
    if family.kind == LAGUERRE2:
        a = family.alpha[0]
        cj = family.c[j - 1]
        nu = [ONE]
        for k in range(1, k_max + 1):
            nu.append(nu[-1] * (a + k) / cj)
        return nu
    # custom
    nu = [rat(family.oracle(j, k)) for k in range(k_max + 1)]
    if nu[0] != 1:
        raise InvalidFamilyError("custom moment oracle must return nu_{j,0} = 1")
    return nu


class MomentTable:
    """Cache of normalized moments for one family (built per request)."""

    def __init__(self, family: WeightFamily):
        self.family = family
        self._rows: dict[int, list] = {}

    def get(self, j: int, k: int):
        row = self._rows.get(j)
        if row is None or len(row) <= k:
            row = normalized_moments(self.family, j, max(k, 8))
            self._rows[j] = row
        return row[k]
