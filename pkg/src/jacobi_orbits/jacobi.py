"""The Jacobi group SL(2,R) x| H(R) and its Lie algebra.

Group elements are pairs (M, (lambda, mu, kappa)) with M in SL(2,R); the
group law is

    (M, (l, m, k)) . (M', (l', m', k'))
        = (MM', (lt + l', mt + m', k + k' + lt*m' - l'*mt)),

where (lt, mt) := (l, m) M' (row vector times matrix).  Algebra elements
are held in cone coordinates (x, y, z, p, q, r): the sl2 block is
[[x, y+z], [y-z, -x]], so the nilpotent locus is the rational cone
x^2 + y^2 - z^2 = 0.

Everything here is exact.  The one floating-point operation is the Moebius
action on the upper-half-plane model (``sj_action``), which exists for
demonstration and is never used in classification.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import NotUnimodularError
from .matrices import Mat, mat_rank
from .scalars import Rat, rat, rat_str

_HALF = Rat(1, 2)


@dataclass(frozen=True)
class AlgebraElement:
    """Algebra element in cone coordinates (x, y, z, p, q, r)."""

    x: Rat
    y: Rat
    z: Rat
    p: Rat
    q: Rat
    r: Rat

    def __post_init__(self):
        for name in ("x", "y", "z", "p", "q", "r"):
            object.__setattr__(self, name, rat(getattr(self, name)))

    @classmethod
    def of(cls, x=0, y=0, z=0, p=0, q=0, r=0) -> "AlgebraElement":
        return cls(rat(x), rat(y), rat(z), rat(p), rat(q), rat(r))

    def coords(self) -> tuple:
        return (self.x, self.y, self.z, self.p, self.q, self.r)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(*(a + b for a, b in zip(self.coords(), other.coords())))

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(*(a - b for a, b in zip(self.coords(), other.coords())))

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(*(-a for a in self.coords()))

    def scale(self, c) -> "AlgebraElement":
        c = rat(c)
        return AlgebraElement(*(c * a for a in self.coords()))

    def __rmul__(self, c) -> "AlgebraElement":
        return self.scale(c)

    def is_zero(self) -> bool:
        return not any(self.coords())

    def sl2_is_zero(self) -> bool:
        return not (self.x or self.y or self.z)

    def to_json(self) -> dict:
        return {k: rat_str(v) for k, v in zip("xyzpqr", self.coords())}

    @classmethod
    def from_json(cls, data: dict) -> "AlgebraElement":
        return cls.of(*(data.get(k, 0) for k in "xyzpqr"))


# Standard basis and the two nilpotent ray generators.
X_J = AlgebraElement.of(x=1)
Y_J = AlgebraElement.of(y=1)
Z_J = AlgebraElement.of(z=1)
P_J = AlgebraElement.of(p=1)
Q_J = AlgebraElement.of(q=1)
R_J = AlgebraElement.of(r=1)
S_J = AlgebraElement.of(y=_HALF, z=_HALF)   # (1/2)(Y + Z), upper-triangular nilpotent
T_J = AlgebraElement.of(y=_HALF, z=-_HALF)  # (1/2)(Y - Z), lower-triangular nilpotent
BASIS = (X_J, Y_J, Z_J, P_J, Q_J, R_J)


@dataclass(frozen=True)
class GroupElement:
    """Group element (M, (lambda, mu, kappa)); requires ad - bc = 1 exactly."""

    a: Rat
    b: Rat
    c: Rat
    d: Rat
    lam: Rat
    mu: Rat
    kappa: Rat

    def __post_init__(self):
        for name in ("a", "b", "c", "d", "lam", "mu", "kappa"):
            object.__setattr__(self, name, rat(getattr(self, name)))
        if self.a * self.d - self.b * self.c != 1:
            raise NotUnimodularError("ad - bc must equal 1 exactly")

    @classmethod
    def of(cls, a=1, b=0, c=0, d=1, lam=0, mu=0, kappa=0) -> "GroupElement":
        return cls(rat(a), rat(b), rat(c), rat(d), rat(lam), rat(mu), rat(kappa))

    @classmethod
    def identity(cls) -> "GroupElement":
        return cls.of()

    @classmethod
    def translation(cls, lam=0, mu=0, kappa=0) -> "GroupElement":
        """Pure Heisenberg element (I, (lam, mu, kappa))."""
        return cls.of(lam=lam, mu=mu, kappa=kappa)

    def params(self) -> tuple:
        return (self.a, self.b, self.c, self.d, self.lam, self.mu, self.kappa)

    def to_json(self) -> dict:
        keys = ("a", "b", "c", "d", "lambda", "mu", "kappa")
        return {k: rat_str(v) for k, v in zip(keys, self.params())}

    @classmethod
    def from_json(cls, data: dict) -> "GroupElement":
        return cls.of(
            data.get("a", 1), data.get("b", 0), data.get("c", 0), data.get("d", 1),
            data.get("lambda", 0), data.get("mu", 0), data.get("kappa", 0),
        )


def group_mul(g1: GroupElement, g2: GroupElement) -> GroupElement:
    """Product in the Jacobi group."""
    a = g1.a * g2.a + g1.b * g2.c
    b = g1.a * g2.b + g1.b * g2.d
    c = g1.c * g2.a + g1.d * g2.c
    d = g1.c * g2.b + g1.d * g2.d
    # (lt, mt) = (lam1, mu1) M2
    lt = g1.lam * g2.a + g1.mu * g2.c
    mt = g1.lam * g2.b + g1.mu * g2.d
    return GroupElement(
        a, b, c, d,
        lt + g2.lam,
        mt + g2.mu,
        g1.kappa + g2.kappa + lt * g2.mu - g2.lam * mt,
    )


def group_inv(g: GroupElement) -> GroupElement:
    """Inverse; matches the closed-form inverse of the embedded 4x4 matrix."""
    return GroupElement(
        g.d, -g.b, -g.c, g.a,
        g.c * g.mu - g.d * g.lam,
        g.b * g.lam - g.a * g.mu,
        -g.kappa,
    )


def embed_group(g: GroupElement) -> Mat:
    """Faithful 4x4 symplectic embedding of a group element."""
    zero, one = Rat(0), Rat(1)
    return Mat([
        [g.a, zero, g.b, g.a * g.mu - g.b * g.lam],
        [g.lam, one, g.mu, g.kappa],
        [g.c, zero, g.d, g.c * g.mu - g.d * g.lam],
        [zero, zero, zero, one],
    ])


def embed_algebra(v: AlgebraElement) -> Mat:
    """4x4 matrix realization of an algebra element."""
    zero = Rat(0)
    return Mat([
        [v.x, zero, v.y + v.z, v.q],
        [v.p, zero, v.q, v.r],
        [v.y - v.z, zero, -v.x, -v.p],
        [zero, zero, zero, zero],
    ])


def algebra_from_matrix(m: Mat) -> AlgebraElement:
    """Pull a matrix in the image of ``embed_algebra`` back to coordinates.

    Raises ValueError when the matrix does not have the required shape;
    this guards the commutator-based bracket against convention drift.
    """
    zero = Rat(0)
    x = m[0, 0]
    ypz = m[0, 2]
    ymz = m[2, 0]
    q = m[0, 3]
    p = m[1, 0]
    r = m[1, 3]
    expected = (
        (m[1, 2], q), (m[2, 2], -x), (m[2, 3], -p),
        (m[0, 1], zero), (m[1, 1], zero), (m[2, 1], zero),
        (m[3, 0], zero), (m[3, 1], zero), (m[3, 2], zero), (m[3, 3], zero),
    )
    if any(got != want for got, want in expected):
        raise ValueError("matrix is not in the algebra's image")
    half = _HALF
    return AlgebraElement(x, half * (ypz + ymz), half * (ypz - ymz), p, q, r)


def bracket(v1: AlgebraElement, v2: AlgebraElement) -> AlgebraElement:
    """Lie bracket, computed as the commutator of the 4x4 realizations.

    The commutator is convention-free; the closed coordinate form (which
    uses matrix-entry coordinates for the sl2 block) is kept separately in
    ``bracket_closed_form`` as a cross-check.
    """
    m1, m2 = embed_algebra(v1), embed_algebra(v2)
    return algebra_from_matrix(m1 * m2 - m2 * m1)


def bracket_closed_form(v1: AlgebraElement, v2: AlgebraElement) -> AlgebraElement:
    """Closed-form bracket in entry coordinates, converted from cone coordinates.

    With sl2 entries (x, yE, zE) = (x, y+z, y-z) the component formulas are
        pt = p1 x2 + q1 zE2 - p2 x1 - q2 zE1,
        qt = q2 x1 + p1 yE2 - q1 x2 - p2 yE1,
        rt = 2 (p1 q2 - p2 q1),
    and the sl2 part is the 2x2 commutator.
    """
    x1, ye1, ze1 = v1.x, v1.y + v1.z, v1.y - v1.z
    x2, ye2, ze2 = v2.x, v2.y + v2.z, v2.y - v2.z
    # 2x2 commutator of [[x, yE], [zE, -x]] matrices, in entry coordinates.
    xt = ye1 * ze2 - ze1 * ye2
    yet = 2 * (x1 * ye2 - x2 * ye1)
    zet = 2 * (ze1 * x2 - ze2 * x1)
    pt = v1.p * x2 + v1.q * ze2 - v2.p * x1 - v2.q * ze1
    qt = v2.q * x1 + v1.p * ye2 - v1.q * x2 - v2.p * ye1
    rt = 2 * (v1.p * v2.q - v2.p * v1.q)
    return AlgebraElement(xt, _HALF * (yet + zet), _HALF * (yet - zet), pt, qt, rt)


def adjoint_coords(gp: tuple, vc: tuple) -> tuple:
    """Closed-form adjoint action on raw coordinate tuples.

    Works over any field the coordinates live in (exact rationals for
    classification, floats for witness residual checks).  ``gp`` is
    (a, b, c, d, lam, mu, kappa) and ``vc`` is (x, y, z, p, q, r).
    """
    a, b, c, d, lam, mu, _ = gp
    x, y, z, p, q, r = vc
    ypz, ymz = y + z, y - z
    xt = (a * d + b * c) * x - a * c * ypz + b * d * ymz
    ypzt = -2 * a * b * x + a * a * ypz - b * b * ymz
    ymzt = 2 * c * d * x - c * c * ypz + d * d * ymz
    u = lam * x + mu * ymz + p
    w = mu * x - lam * ypz - q
    pt = d * u + c * w
    qt = -b * u - a * w
    rt = (
        -2 * lam * mu * x + lam * lam * ypz - mu * mu * ymz
        - 2 * p * mu + 2 * q * lam + r
    )
    half = 0.5 if isinstance(xt, float) else _HALF
    return (xt, half * (ypzt + ymzt), half * (ypzt - ymzt), pt, qt, rt)


def adjoint(g: GroupElement, v: AlgebraElement) -> AlgebraElement:
    """Adjoint action g . v, by the closed form.

    Agrees exactly with conjugation of the 4x4 realizations
    (``adjoint_via_embedding``); the audit harness checks this.
    """
    return AlgebraElement(*adjoint_coords(g.params(), v.coords()))


def adjoint_via_embedding(g: GroupElement, v: AlgebraElement) -> AlgebraElement:
    """Oracle for ``adjoint``: conjugate the embedded matrices."""
    gm = embed_group(g)
    return algebra_from_matrix(gm * embed_algebra(v) * gm.inverse())


@dataclass(frozen=True)
class Invariants:
    """Exact orbit invariants of an algebra element.

    c1 = x^2 + y^2 - z^2 and f = 2pqx - p^2(y+z) + q^2(y-z) are polynomial
    invariants; i = f - c1*r is constant along orbits and drives the
    semisimple classification; rho is the central-shift invariant on the
    locus {c1 = 0, (x,y,z) != 0, f = 0} and is None elsewhere.
    """

    c1: Rat
    f: Rat
    i: Rat
    rho: Optional[Rat]

    def to_json(self) -> dict:
        return {
            "c1": rat_str(self.c1),
            "f": rat_str(self.f),
            "I": rat_str(self.i),
            "rho": None if self.rho is None else rat_str(self.rho),
        }


def c1_invariant(v: AlgebraElement) -> Rat:
    return v.x * v.x + v.y * v.y - v.z * v.z


def f_invariant(v: AlgebraElement) -> Rat:
    return 2 * v.p * v.q * v.x - v.p * v.p * (v.y + v.z) + v.q * v.q * (v.y - v.z)


def rho_invariant(v: AlgebraElement) -> Optional[Rat]:
    """Central-shift invariant r - q^2/(y+z) (equivalently r + p^2/(y-z)).

    Defined only on {c1 = 0, (x,y,z) != 0, f = 0}.  On that locus
    p^2(y+z) + q^2(y-z) = 0, so the two expressions agree whenever both
    denominators are nonzero; this is asserted rather than assumed.
    """
    if c1_invariant(v) or v.sl2_is_zero() or f_invariant(v):
        return None
    ypz, ymz = v.y + v.z, v.y - v.z
    candidates = []
    if ypz:
        candidates.append(v.r - v.q * v.q / ypz)
    if ymz:
        candidates.append(v.r + v.p * v.p / ymz)
    assert candidates, "(x,y,z) != 0 on the cone forces y+z or y-z nonzero"
    assert all(c == candidates[0] for c in candidates), "rho formulas disagree"
    return candidates[0]


def invariants(v: AlgebraElement) -> Invariants:
    c1 = c1_invariant(v)
    f = f_invariant(v)
    return Invariants(c1=c1, f=f, i=f - c1 * v.r, rho=rho_invariant(v))


def is_nilpotent(v: AlgebraElement) -> bool:
    """True iff c1 = 0; equivalent to the 4x4 realization being nilpotent."""
    return not c1_invariant(v)


def power_identity_check(v: AlgebraElement, k: int) -> bool:
    """Check M^(2k) = c1^(k-1) M^2 for the 4x4 realization M, exactly."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    m = embed_algebra(v)
    m2 = m * m
    return m2 ** k == m2.scale(c1_invariant(v) ** (k - 1))


def orbit_dimension(v: AlgebraElement) -> int:
    """Dimension of the adjoint orbit through v.

    This is the rank of the 6x6 matrix of w |-> [w, v] in the standard
    basis, i.e. the dimension of the orbit's tangent space at v.
    """
    columns = [bracket(e, v).coords() for e in BASIS]
    return mat_rank(list(zip(*columns)))


@dataclass(frozen=True)
class SiegelJacobiPoint:
    """Point (tau, zeta) of the upper-half-plane model; float precision."""

    tau: complex
    zeta: complex

    def __post_init__(self):
        if not self.tau.imag > 0:
            raise ValueError("tau must have positive imaginary part")

    def to_json(self) -> dict:
        return {
            "tau": {"re": self.tau.real, "im": self.tau.imag},
            "zeta": {"re": self.zeta.real, "im": self.zeta.imag},
        }

    @classmethod
    def from_json(cls, data: dict) -> "SiegelJacobiPoint":
        tau = complex(data["tau"]["re"], data["tau"]["im"])
        zeta = complex(data["zeta"]["re"], data["zeta"]["im"])
        return cls(tau, zeta)


def sj_action(g: GroupElement, pt: SiegelJacobiPoint) -> SiegelJacobiPoint:
    """Moebius-type action on (tau, zeta); the package's only float operation."""
    a, b, c, d = (float(g.a), float(g.b), float(g.c), float(g.d))
    lam, mu = float(g.lam), float(g.mu)
    denom = c * pt.tau + d
    tau = (a * pt.tau + b) / denom
    zeta = (pt.zeta + lam * pt.tau + mu) / denom
    return SiegelJacobiPoint(tau, zeta)
