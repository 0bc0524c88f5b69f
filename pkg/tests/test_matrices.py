import pytest
from hypothesis import given

import hypothesis.strategies as st
from conftest import rationals
from jacobi_orbits.errors import SingularMatrixError
from jacobi_orbits.matrices import Mat, mat2, mat_rank
from jacobi_orbits.scalars import Rat, gauss, rat


def test_identity_product():
    i2 = Mat.identity(2)
    assert i2 * i2 == i2


def test_basis_product_frozen():
    # Hand multiplication: diag(1,-1) * [[0,1],[1,0]] = [[0,1],[-1,0]].
    x = mat2(1, 0, 0, -1)
    y = mat2(0, 1, 1, 0)
    assert x * y == mat2(0, 1, -1, 0)


def test_inverse_examples():
    assert Mat.identity(4).inverse() == Mat.identity(4)
    assert mat2(1, 1, 0, 1).inverse() == mat2(1, -1, 0, 1)
    with pytest.raises(SingularMatrixError):
        mat2(1, 2, 2, 4).inverse()


def test_rank_examples():
    assert mat_rank([[rat(0)] * 3 for _ in range(3)]) == 0
    assert mat_rank(Mat.identity(4).rows) == 4
    assert mat_rank([[rat(1), rat(2)], [rat(2), rat(4)], [rat(3), rat(6)]]) == 1


@st.composite
def nonsingular_mats(draw):
    # L * U with unit diagonals scaled by a nonzero pivot: det != 0 exactly.
    a = draw(rationals(nonzero=True))
    b = draw(rationals())
    c = draw(rationals())
    d = draw(rationals(nonzero=True))
    return mat2(1, 0, c, 1) * mat2(a, b, 0, d)


@given(nonsingular_mats())
def test_inverse_round_trip(m):
    assert m * m.inverse() == Mat.identity(2)
    assert m.inverse() * m == Mat.identity(2)


@given(nonsingular_mats(), nonsingular_mats())
def test_det_multiplicative(m1, m2):
    assert (m1 * m2).det() == m1.det() * m2.det()


def test_pow():
    m = mat2(1, 1, 0, 1)
    assert m ** 0 == Mat.identity(2)
    assert m ** 3 == mat2(1, 3, 0, 1)
    assert m ** -2 == mat2(1, -2, 0, 1)


def test_complex_entries():
    i = gauss(0, 1)
    m = Mat([[i, gauss(0)], [gauss(0), -i]])
    assert m * m == Mat.identity(2, one=gauss(1)).scale(gauss(-1))
    assert m.conjugate() == -m
    assert m.transpose() == m


def test_immutability():
    m = Mat.identity(2)
    with pytest.raises(AttributeError):
        m.rows = ()
    with pytest.raises(ValueError):
        Mat([[Rat(1)], [Rat(0), Rat(1)]])


def test_inverse_round_trip_bulk():
    # Module contract: 1000 random nonsingular matrices invert exactly.
    from jacobi_orbits.sampling import Stream
    s = Stream(101, "mat-inv")
    for _ in range(1000):
        m = mat2(1, 0, s.rational(), 1) * mat2(s.nonzero_rational(), s.rational(),
                                               0, s.nonzero_rational())
        assert m * m.inverse() == Mat.identity(2)
