import pytest

import noncross as nc


def test_relation_and_normal_form():
    c = nc.Config([2])
    assert nc.parse("x1*y1 - z*y1*x1", c).is_zero()
    assert str(nc.parse("y1*x1", c)) == "-x1*y1"
    f = nc.parse("x1 + y1", c)
    g = nc.parse("x1 - y1", c)
    assert str(f * g) == "x1^2 - 2*x1*y1 - y1^2"
    assert nc.normalize("(x1*y1)^2", c) == "-x1^2*y1^2"


def test_valuation_and_residue():
    c = nc.Config([2])
    assert nc.val(nc.parse("x1 + y1", c)) == [1, 0]
    assert nc.val(nc.parse("0", c)) is None
    assert nc.residue(nc.parse("(1+x1)*(2+y1)", c)) == "2"


def test_inverse_and_root():
    c = nc.Config([2])
    assert str(nc.inv(nc.parse("1 - x1*y1", c), 4)) == "1 + x1*y1 - x1^2*y1^2"
    root = nc.nth_root(nc.parse("1 + x1", c), 2, 3)
    assert str(root) == "1 + 1/2*x1 - 1/8*x1^2 + 1/16*x1^3"
    assert root.precision == 3


def test_lattice():
    c = nc.Config([2, 3])
    assert nc.value_group_quotient(c) == ([1, 1, 6, 6], 0)
    assert nc.quotient_image(c, [1, 2, 4, 5]) == [1, 0, 1, 2]
    assert nc.pairing(nc.Config([2]), [1, 0], [0, 1]) == (1, 2)
    assert nc.is_central(nc.Config([2]), [2, 0])
    assert nc.snf([[2, 4], [6, 8]])["invariant_factors"] == [2, 4]
    assert nc.rank([2, 2, 2]) == 3


def test_obstruction():
    assert nc.factorize(360) == [2, 2, 2, 3, 3, 5]
    assert nc.obstruction(8)["verdict"] == "NONCROSSED"
    assert nc.obstruction(12)["verdict"] == "INCONCLUSIVE"
    assert nc.obstruction(8, char=2)["verdict"] == "INAPPLICABLE"
    d1, d2 = nc.witness_configs(8)
    assert d1.blocks == [2, 2, 2] and d2.blocks == [8]
    assert nc.cyclotomic_poly(6) == [1, -1, 1]


def test_errors():
    c = nc.Config([2])
    with pytest.raises(nc.NoncrossError, match="E_NONUNIT_POW"):
        nc.parse("(1+x1)^-1", c)
    with pytest.raises(nc.NoncrossError, match="E_NOT_CONE_REGULAR"):
        nc.inv(nc.parse("x1 + y1", c), 4)
    with pytest.raises(nc.NoncrossError):
        nc.Config([1])
