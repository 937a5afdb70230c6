import pytest

import gl3branch as g


def test_qpoly_values():
    p = g.intertwine_VV((2, 2, 3), (2, 2, 3))
    assert p["total"] == [-2, 1]
    assert g.catalog_count((1, 1, 1), (1, 1, 1)).coeffs == [6]
    assert str(g.dim_V((1, 2, 2)).factored()) == "(q-1)^2(q+1)(q^2+q+1)"
    assert g.index_in_K((1, 1, 1))(3) == 52


def test_triples():
    assert g.in_T(2, 3, 4)
    assert not g.in_T(1, 2, 4)
    assert g.descendants((0, 2, 2)) == [(3, (0, 1, 1))]
    with pytest.raises(ValueError):
        g.catalog_count((1, 2, 4), (1, 1, 1))


def test_intertwining():
    assert g.intertwine_VU((0, 2, 2), (2, 2, 2)).coeffs == [3]
    assert g.intertwine_restricted((4, 4, 6), 2) == g.QPoly([1, -2, 1])
    with pytest.raises(ValueError):
        g.intertwine_restricted((2, 2, 3), 2)


def test_oracle_agrees_with_catalog():
    o = g.Oracle(3, 2)
    assert o.count((2, 2, 2), (2, 2, 2)) == g.catalog_count((2, 2, 2), (2, 2, 2))(3)
    assert o.intertwine_VV((1, 2, 2), (1, 2, 2)) == 1
    assert len(g.materialize((1, 1, 1), (1, 1, 1), 3, 1)) == 6
    assert g.cross_validate(3, 2, (1, 1, 2))["status"] == "pass"


def test_verify_and_steinberg():
    assert g.verify("restricted", 5)["status"] == "pass"
    s3 = g.steinberg_positivity(3)
    assert not s3["true_representation"]
    assert s3["witness"] == ((2, 2, 3), -1)
    assert g.steinberg_positivity(2)["true_representation"]
    assert g.steinberg(1)["terms"] == [{"c": [1, 1, 1], "coeff": 1}]
