import pytest

from superpic.superalg import SuperElement, canonical_unit_power

from chart_fixtures import CHARTS, N, nilpotent_support

t, one = SuperElement.t, SuperElement.one()


def test_chart_units_are_canonical():
    assert CHARTS["U12"][1][0] == canonical_unit_power((1, -1), -1)
    assert CHARTS["U2"][1][0] == canonical_unit_power((1, -1), 1)


def test_nilpotent_supports():
    assert all(b >= 1 for _, b in nilpotent_support("U01"))
    assert all(a >= 1 for a, _ in nilpotent_support("U02"))
    assert all(a + b <= -1 for a, b in nilpotent_support("U12"))


@pytest.mark.parametrize("ell", range(-3, 4))
def test_correction_terms_cannot_carry_exponent(ell):
    # f2/f1 = t1^-l t2^l (1 + (C - B) x1x2) must equal u^l (1 + g x1x2) with
    # u the U12 unit, B, C, g supported as above; u^l = t1^-l t2^l (1 + l x1x2),
    # so l is the constant term of C - B - g
    u = CHARTS["U12"][1][0]
    assert u ** ell == t(1, -ell) * t(2, ell) * (one + ell * N)
    reachable = set().union(*(nilpotent_support(k) for k in ("U01", "U02", "U12")))
    assert ((0, 0) in reachable or ell == 0) == (ell == 0)
