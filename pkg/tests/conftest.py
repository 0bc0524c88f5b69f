"""Shared hypothesis strategies for exact elements."""

import hypothesis.strategies as st
from hypothesis import settings

from jacobi_orbits.complex_orbits import KcElem, PcElem
from jacobi_orbits.jacobi import AlgebraElement, GroupElement, group_mul
from jacobi_orbits.scalars import GaussRational, Rat
from jacobi_orbits.sl2 import Sl2Elem

settings.register_profile("suite", max_examples=60, deadline=None)
settings.load_profile("suite")

_COEF = 12


def rationals(nonzero=False):
    num = st.integers(-_COEF, _COEF).filter(lambda n: n != 0) if nonzero \
        else st.integers(-_COEF, _COEF)
    return st.builds(Rat, num, st.integers(1, _COEF))


def gauss_rationals(nonzero=False):
    strat = st.builds(GaussRational, rationals(), rationals())
    if nonzero:
        strat = strat.filter(bool)
    return strat


def algebra_elements():
    return st.builds(AlgebraElement, *(rationals() for _ in range(6)))


@st.composite
def group_elements(draw):
    # Triangular-factor construction keeps ad - bc = 1 exact by design.
    u = draw(rationals())
    t = draw(rationals(nonzero=True))
    low = draw(rationals())
    sl2_part = group_mul(
        group_mul(GroupElement.of(1, u, 0, 1), GroupElement.of(t, 0, 0, 1 / t)),
        GroupElement.of(1, 0, low, 1),
    )
    return GroupElement(sl2_part.a, sl2_part.b, sl2_part.c, sl2_part.d,
                        draw(rationals()), draw(rationals()), draw(rationals()))


@st.composite
def cone_points(draw):
    # All rational points of the punctured cone x^2 + y^2 = z^2.
    m = draw(st.integers(-_COEF, _COEF))
    n = draw(st.integers(-_COEF, _COEF))
    if not (m or n):
        m = 1
    k = draw(rationals(nonzero=True))
    return (k * (m * m - n * n), k * 2 * m * n, k * (m * m + n * n))


@st.composite
def nilpotent_elements(draw):
    x, y, z = draw(cone_points())
    return AlgebraElement(x, y, z, draw(rationals()), draw(rationals()),
                          draw(rationals()))


def sl2_elements():
    return st.builds(Sl2Elem, rationals(), rationals(), rationals())


def pc_elements():
    return st.builds(PcElem, *(gauss_rationals() for _ in range(4)))


@st.composite
def kc_elements(draw):
    return KcElem.from_u(draw(gauss_rationals(nonzero=True)),
                         kappa=draw(gauss_rationals()))
