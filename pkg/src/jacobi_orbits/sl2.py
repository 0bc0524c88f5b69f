"""sl(2,R) orbit classification and the triple machinery behind it.

This module carries the rank-one warm-up for the full Jacobi machinery:
exact orbit classification of F(x,y,z) = [[x, y+z], [y-z, -x]], validators
and constructors for sl2-triples and KS-triples, the Cayley transform from
a real KS-triple to a complexified one, and the orbit-level correspondence
between nilpotent cone orbits and the two complex lines y = +-ix.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    NotKsRealError,
    NotNilpotentError,
    NotNilpotentLabelError,
    ZeroElementError,
)
from .labels import Label, label
from .matrices import Mat, mat2
from .scalars import GaussRational, I_UNIT, Rat, gauss, rat, rat_str

_HALF = Rat(1, 2)


@dataclass(frozen=True)
class Sl2Elem:
    """Element of sl(2,R) in cone coordinates."""

    x: Rat
    y: Rat
    z: Rat

    def __post_init__(self):
        for name in ("x", "y", "z"):
            object.__setattr__(self, name, rat(getattr(self, name)))

    @classmethod
    def of(cls, x=0, y=0, z=0) -> "Sl2Elem":
        return cls(rat(x), rat(y), rat(z))

    def coords(self) -> tuple:
        return (self.x, self.y, self.z)

    def matrix(self) -> Mat:
        """Complexified 2x2 realization [[x, y+z], [y-z, -x]]."""
        return mat2(gauss(self.x), gauss(self.y + self.z),
                    gauss(self.y - self.z), gauss(-self.x))

    def c1(self) -> Rat:
        return self.x * self.x + self.y * self.y - self.z * self.z

    def is_zero(self) -> bool:
        return not any(self.coords())

    def __neg__(self) -> "Sl2Elem":
        return Sl2Elem(-self.x, -self.y, -self.z)

    def scale(self, c) -> "Sl2Elem":
        c = rat(c)
        return Sl2Elem(c * self.x, c * self.y, c * self.z)

    def to_json(self) -> dict:
        return {k: rat_str(v) for k, v in zip("xyz", self.coords())}

    @classmethod
    def from_json(cls, data: dict) -> "Sl2Elem":
        return cls.of(*(data.get(k, 0) for k in "xyz"))


X = Sl2Elem.of(x=1)
Y = Sl2Elem.of(y=1)
Z = Sl2Elem.of(z=1)
S = Sl2Elem.of(y=_HALF, z=_HALF)   # [[0,1],[0,0]]
T = Sl2Elem.of(y=_HALF, z=-_HALF)  # [[0,0],[1,0]]


@dataclass(frozen=True)
class Triple:
    """Ordered triple of 2x2 complexified matrices; validity is checked, not assumed."""

    z1: Mat
    z2: Mat
    z3: Mat

    def mats(self) -> tuple:
        return (self.z1, self.z2, self.z3)

    @classmethod
    def from_sl2(cls, e1: Sl2Elem, e2: Sl2Elem, e3: Sl2Elem) -> "Triple":
        return cls(e1.matrix(), e2.matrix(), e3.matrix())

    def to_json(self) -> list:
        return [
            [[entry.to_json() for entry in row] for row in m.rows]
            for m in self.mats()
        ]

    @classmethod
    def from_json(cls, data) -> "Triple":
        mats = [
            Mat([[GaussRational.from_json(e) for e in row] for row in m])
            for m in data
        ]
        if len(mats) != 3 or any(m.n != 2 for m in mats):
            raise ValueError("a triple is three 2x2 matrices")
        return cls(*mats)


def commutator(a: Mat, b: Mat) -> Mat:
    return a * b - b * a


def validate_sl2_triple(t: Triple) -> bool:
    """True iff [Z1,Z2] = 2 Z2, [Z1,Z3] = -2 Z3, [Z2,Z3] = Z1, exactly."""
    z1, z2, z3 = t.mats()
    return (
        commutator(z1, z2) == z2.scale(gauss(2))
        and commutator(z1, z3) == z3.scale(gauss(-2))
        and commutator(z2, z3) == z1
    )


def _all_real(m: Mat) -> bool:
    return all(e.is_real() for row in m.rows for e in row)


def is_ks_real(t: Triple) -> bool:
    """Real KS-triple test: valid triple, real entries, theta(E) = -F.

    theta(A) = -A^t, so the condition reads F = E^t.  Triples that fail
    the defining relations are reported as not KS.
    """
    if not validate_sl2_triple(t):
        return False
    if not all(_all_real(m) for m in t.mats()):
        return False
    return t.z2.transpose() == t.z3


def _in_k_complex(m: Mat) -> bool:
    # [[0, w], [-w, 0]]
    return not m[0, 0] and not m[1, 1] and m[1, 0] == -m[0, 1]


def _in_p_complex(m: Mat) -> bool:
    # [[x, y], [y, -x]]
    return m[0, 1] == m[1, 0] and m[1, 1] == -m[0, 0]


def is_ks_complex(t: Triple) -> bool:
    """Complexified KS-triple test: valid, normal, and f = sigma(e).

    Normal means Z1 lies in the complexified rotation algebra and Z2, Z3
    in the symmetric-traceless space; sigma is entrywise conjugation.
    """
    if not validate_sl2_triple(t):
        return False
    if not (_in_k_complex(t.z1) and _in_p_complex(t.z2) and _in_p_complex(t.z3)):
        return False
    return t.z2.conjugate() == t.z3


def sl2_triple_through(e: Sl2Elem) -> Triple:
    """Complete a nonzero nilpotent E to the sl2-triple it generates.

    With H0 = [E, E^t], the ratio lam defined by [H0, E] = lam E is
    rational and positive (it equals 8 z^2), and
    {(2/lam) H0, E, (2/lam) E^t} is a valid triple.  The triple is a
    KS-triple precisely when lam = 2.
    """
    if e.is_zero():
        raise ZeroElementError("cannot build a triple through 0")
    if e.c1():
        raise NotNilpotentError("element is not nilpotent: x^2+y^2-z^2 != 0")
    em = e.matrix()
    et = em.transpose()
    h0 = commutator(em, et)
    he = commutator(h0, em)
    # lam from any nonzero coordinate of E; then verify proportionality.
    witness = next(
        (i, j) for i in range(2) for j in range(2) if em[i, j]
    )
    lam = he[witness] / em[witness]
    assert he == em.scale(lam), "[H0, E] is not proportional to E"
    factor = gauss(2) / lam
    return Triple(h0.scale(factor), em, et.scale(factor))


def cayley(t: Triple) -> Triple:
    """Cayley transform of a real KS-triple {H, E, F}.

    Returns {i(E-F), (E+F+iH)/2, (E+F-iH)/2}, which is a complexified
    KS-triple; raises NotKsRealError otherwise.
    """
    if not is_ks_real(t):
        raise NotKsRealError("input must be a real KS-triple")
    h, e, f = t.mats()
    ih = h.scale(I_UNIT)
    half = gauss(_HALF)
    out = Triple(
        (e - f).scale(I_UNIT),
        (e + f + ih).scale(half),
        (e + f - ih).scale(half),
    )
    assert is_ks_complex(out)
    return out


# -- orbit labels -------------------------------------------------------------


def classify_sl2(v: Sl2Elem) -> Label:
    """Adjoint-orbit label of an sl(2,R) element.

    Decided by the exact sign of c1 = x^2+y^2-z^2 and, on c1 <= 0, the sign
    of z.  The elliptic two-sheeted locus carries a sheet label: the orbit
    of Z sits on the z > 0 sheet.
    """
    c1 = v.c1()
    if c1 > 0:
        return label("Hyperbolic", c1=c1)
    if c1 < 0:
        return label("Elliptic", c1=c1, sheet=1 if v.z > 0 else -1)
    if v.is_zero():
        return label("Zero")
    return label("NPlus") if v.z > 0 else label("NMinus")


def classify_pc(x: GaussRational, y: GaussRational) -> Label:
    """Orbit label of [[x, y], [y, -x]] under the complexified rotations.

    The nilpotent locus x^2 + y^2 = 0 splits into the two lines y = ix and
    y = -ix (minus the origin); everything else is labeled by the invariant
    x^2 + y^2.
    """
    if not x and not y:
        return label("Zero")
    if y == I_UNIT * x:
        return label("NThetaPlus")
    if y == -(I_UNIT * x):
        return label("NThetaMinus")
    return label("NonNilpotent", c=x * x + y * y)


def pc_components(m: Mat) -> tuple:
    """Extract (x, y) from a symmetric-traceless 2x2 matrix."""
    if not _in_p_complex(m):
        raise ValueError("matrix is not symmetric-traceless")
    return m[0, 0], m[0, 1]


_KS_MAP = {"NPlus": "NThetaMinus", "Zero": "Zero", "NMinus": "NThetaPlus"}


def ks_map(l: Label) -> Label:
    """Orbit-level correspondence on nilpotent labels.

    NPlus -> NThetaMinus, Zero -> Zero, NMinus -> NThetaPlus; raises
    NotNilpotentLabelError on hyperbolic/elliptic labels.
    """
    target = _KS_MAP.get(l.family)
    if target is None:
        raise NotNilpotentLabelError(f"not a nilpotent orbit label: {l.family}")
    return label(target)


# Complexified reference triple {H_theta, Y_theta, X_theta}.  H_theta is
# pinned by H_theta = i(S - T), the convention under which the triple
# relations [H,Y] = 2Y, [H,X] = -2X, [Y,X] = H all hold exactly.
H_THETA = mat2(gauss(0), gauss(0, 1), gauss(0, -1), gauss(0))
X_THETA = mat2(gauss(0, -_HALF), gauss(_HALF), gauss(_HALF), gauss(0, _HALF))
Y_THETA = mat2(gauss(0, _HALF), gauss(_HALF), gauss(_HALF), gauss(0, -_HALF))
