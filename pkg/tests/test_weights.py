import math

import pytest

from mopw.rationals import rat
from mopw.weights import (
    InvalidFamilyError,
    MomentTable,
    WeightFamily,
    normalized_moments,
)


def test_hermite_centered_moments():
    fam = WeightFamily.hermite([0])
    # Gaussian exp(-x^2): unit-mass moments 1, 0, 1/2, 0, 3/4, 0, 15/8
    assert normalized_moments(fam, 1, 6) == [
        rat(1), rat(0), rat(1, 2), rat(0), rat(3, 4), rat(0), rat(15, 8)
    ]


def test_hermite_shifted_moments():
    fam = WeightFamily.hermite([2])
    # mean 1, variance 1/2
    nu = normalized_moments(fam, 1, 2)
    assert nu == [rat(1), rat(1), rat(3, 2)]


def test_laguerre1_moments():
    fam = WeightFamily.laguerre1([0, rat(1, 2)])
    assert normalized_moments(fam, 1, 5) == [rat(math.factorial(k)) for k in range(6)]
    # Pochhammer (3/2)_k for alpha = 1/2
    assert normalized_moments(fam, 2, 3) == [rat(1), rat(3, 2), rat(15, 4), rat(105, 8)]


def test_laguerre2_moments():
    fam = WeightFamily.laguerre2(0, [2, 1])
    assert normalized_moments(fam, 1, 3) == [rat(1), rat(1, 2), rat(1, 2), rat(3, 4)]


def test_custom_oracle():
    fam = WeightFamily.custom(lambda j, k: rat(1, (k + 1) ** j), r=2)
    assert fam.r == 2
    assert normalized_moments(fam, 2, 2) == [rat(1), rat(1, 4), rat(1, 9)]
    bad = WeightFamily.custom(lambda j, k: rat(2), r=1)
    with pytest.raises(InvalidFamilyError):
        normalized_moments(bad, 1, 1)


def test_family_validation():
    with pytest.raises(InvalidFamilyError):
        WeightFamily.hermite([1, 1])
    with pytest.raises(InvalidFamilyError):
        WeightFamily.laguerre1([-2])
    with pytest.raises(InvalidFamilyError):
        WeightFamily.laguerre1([rat(1, 2), rat(3, 2)])  # integer difference
    with pytest.raises(InvalidFamilyError):
        WeightFamily.laguerre2(rat(-3, 2), [1])
    with pytest.raises(InvalidFamilyError):
        WeightFamily.laguerre2(0, [1, 1])
    with pytest.raises(InvalidFamilyError):
        WeightFamily.laguerre2(0, [0, 1])
    with pytest.raises(InvalidFamilyError):
        WeightFamily.custom(lambda j, k: rat(1), r=0)


def test_support():
    assert not WeightFamily.hermite([0]).support_positive
    assert WeightFamily.laguerre1([0]).support_positive
    assert WeightFamily.laguerre2(0, [1]).support_positive


def test_json_round_trip():
    for fam in (
        WeightFamily.hermite([rat(1, 3), rat(34, 35)]),
        WeightFamily.laguerre1([rat(1, 2), rat(1, 3)]),
        WeightFamily.laguerre2(rat(1, 2), [2, rat(3, 5)]),
    ):
        assert WeightFamily.from_json(fam.to_json()) == fam
    with pytest.raises(InvalidFamilyError):
        WeightFamily.from_json({"kind": "nope"})


def test_moment_table_cache():
    fam = WeightFamily.hermite([0, 1])
    table = MomentTable(fam)
    assert table.get(1, 2) == rat(1, 2)
    assert table.get(2, 0) == rat(1)
    assert table.get(2, 20) == normalized_moments(fam, 2, 20)[20]


def test_index_out_of_range():
    fam = WeightFamily.hermite([0])
    with pytest.raises(InvalidFamilyError):
        normalized_moments(fam, 2, 1)
    with pytest.raises(ValueError):
        normalized_moments(fam, 1, -1)
