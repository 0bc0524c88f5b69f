"""The complexified side: H(x,y,p,q) elements and the rotation-group action.

Elements H(x,y,p,q) over Q(i) carry an action of the complexified rotation
group (a, b, kappa) with a^2 + b^2 = 1, kappa acting trivially:

    x* = (a^2 - b^2) x + 2ab y,      p* = a p + b q,
    y* = -2ab x + (a^2 - b^2) y,     q* = a q - b p.

Substituting u = a + ib (any nonzero complex number, since a - ib = 1/u)
diagonalizes the action on the weight coordinates

    xi+ = x + iy,  xi- = x - iy,  pi+ = p + iq,  pi- = p - iq,

which scale by u^-2, u^2, u^-1, u respectively.  Orbit equality is decided
exactly in these coordinates, and orbit labels are the weight-coordinate
zero pattern together with the weight-zero invariants that pin the orbit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import NotOnComplexCircleError, UnknownSetIdError
from .labels import Label, label
from .matrices import Mat
from .scalars import GZERO, GaussRational, I_UNIT, gauss

_TWO = gauss(2)


@dataclass(frozen=True)
class PcElem:
    """Element H(x, y, p, q) with Gaussian-rational coordinates."""

    x: GaussRational
    y: GaussRational
    p: GaussRational
    q: GaussRational

    @classmethod
    def of(cls, x=0, y=0, p=0, q=0) -> "PcElem":
        return cls(*(v if isinstance(v, GaussRational) else gauss(v) for v in (x, y, p, q)))

    def coords(self) -> tuple:
        return (self.x, self.y, self.p, self.q)

    def is_zero(self) -> bool:
        return not any(self.coords())

    def to_json(self) -> dict:
        return {k: v.to_json() for k, v in zip("xypq", self.coords())}

    @classmethod
    def from_json(cls, data: dict) -> "PcElem":
        return cls(*(GaussRational.from_json(data.get(k, {"re": "0", "im": "0"})) for k in "xypq"))


# Basis of the space: two cone-line generators and the two "Heisenberg" ones.
X_THETA_J = PcElem.of(gauss(0, "-1/2"), gauss("1/2"))
Y_THETA_J = PcElem.of(gauss(0, "1/2"), gauss("1/2"))
P_THETA_J = PcElem.of(p=1)
Q_THETA_J = PcElem.of(q=1)


@dataclass(frozen=True)
class KcElem:
    """Complexified rotation (a, b, kappa); requires a^2 + b^2 = 1 exactly."""

    a: GaussRational
    b: GaussRational
    kappa: GaussRational

    def __post_init__(self):
        if self.a * self.a + self.b * self.b != gauss(1):
            raise NotOnComplexCircleError("a^2 + b^2 must equal 1 exactly")

    @classmethod
    def of(cls, a=1, b=0, kappa=0) -> "KcElem":
        return cls(*(v if isinstance(v, GaussRational) else gauss(v) for v in (a, b, kappa)))

    @classmethod
    def from_u(cls, u: GaussRational, kappa=0) -> "KcElem":
        """Element with a = (u + 1/u)/2, b = (u - 1/u)/(2i); needs u != 0."""
        uinv = gauss(1) / u
        half = gauss("1/2")
        a = (u + uinv) * half
        b = (u - uinv) * half * (-I_UNIT)
        return cls.of(a, b, kappa)

    def u(self) -> GaussRational:
        return self.a + I_UNIT * self.b

    def to_json(self) -> dict:
        return {"a": self.a.to_json(), "b": self.b.to_json(), "kappa": self.kappa.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "KcElem":
        return cls(
            GaussRational.from_json(data.get("a", {"re": "1", "im": "0"})),
            GaussRational.from_json(data.get("b", {"re": "0", "im": "0"})),
            GaussRational.from_json(data.get("kappa", {"re": "0", "im": "0"})),
        )


@dataclass(frozen=True)
class WeightCoords:
    """Diagonalizing coordinates (xi+, xi-, pi+, pi-); weights (-2, 2, -1, 1)."""

    xi_plus: GaussRational
    xi_minus: GaussRational
    pi_plus: GaussRational
    pi_minus: GaussRational

    def coords(self) -> tuple:
        return (self.xi_plus, self.xi_minus, self.pi_plus, self.pi_minus)

    def zero_pattern(self) -> tuple:
        return tuple(bool(c) for c in self.coords())


def weight_coords(h: PcElem) -> WeightCoords:
    return WeightCoords(
        h.x + I_UNIT * h.y,
        h.x - I_UNIT * h.y,
        h.p + I_UNIT * h.q,
        h.p - I_UNIT * h.q,
    )


def from_weight_coords(w: WeightCoords) -> PcElem:
    half = gauss("1/2")
    mihalf = half * (-I_UNIT)  # 1/(2i)
    return PcElem(
        (w.xi_plus + w.xi_minus) * half,
        (w.xi_plus - w.xi_minus) * mihalf,
        (w.pi_plus + w.pi_minus) * half,
        (w.pi_plus - w.pi_minus) * mihalf,
    )


def kc_action(k: KcElem, h: PcElem) -> PcElem:
    """Action of (a, b, kappa) on H(x, y, p, q); kappa has no effect."""
    a, b = k.a, k.b
    aabb = a * a - b * b
    two_ab = _TWO * a * b
    return PcElem(
        aabb * h.x + two_ab * h.y,
        aabb * h.y - two_ab * h.x,
        a * h.p + b * h.q,
        a * h.q - b * h.p,
    )


def embed_pc(h: PcElem) -> Mat:
    """4x4 realization of H(x, y, p, q)."""
    z = GZERO
    return Mat([
        [h.x, z, h.y, h.q],
        [h.p, z, h.q, z],
        [h.y, z, -h.x, -h.p],
        [z, z, z, z],
    ])


def embed_kc(k: KcElem) -> Mat:
    """4x4 realization of a complexified rotation element."""
    z, one = GZERO, gauss(1)
    return Mat([
        [k.a, z, k.b, z],
        [z, one, z, k.kappa],
        [-k.b, z, k.a, z],
        [z, z, z, one],
    ])


def is_nilpotent_pc(h: PcElem) -> bool:
    """True iff x^2 + y^2 = 0 (equivalently the 4x4 realization is nilpotent)."""
    return not (h.x * h.x + h.y * h.y)


@dataclass(frozen=True)
class OrbitMatch:
    """Result of an orbit-equality decision, with the scaling witness.

    ``u`` is set when the group parameter is uniquely determined, and
    ``u_squared`` when only its square is constrained (the weight +-1
    coordinates all vanish); both are None for the fixed point 0.
    """

    same: bool
    u: Optional[GaussRational] = None
    u_squared: Optional[GaussRational] = None

    def __bool__(self) -> bool:
        return self.same

    def to_json(self) -> dict:
        return {
            "same": self.same,
            "u": None if self.u is None else self.u.to_json(),
            "u_squared": None if self.u_squared is None else self.u_squared.to_json(),
        }


_NO = OrbitMatch(False)


def same_kc_orbit(h1: PcElem, h2: PcElem) -> OrbitMatch:
    """Decide whether two elements lie on the same orbit, exactly.

    The zero patterns of the weight coordinates must agree.  A nonzero
    weight +-1 coordinate determines u in Q(i) and every remaining
    component is checked exactly.  When only weight +-2 coordinates are
    nonzero, just u^2 is constrained; a complex square root always exists,
    so orbit equality reduces to the weight-zero product invariant.
    """
    w1, w2 = weight_coords(h1), weight_coords(h2)
    if w1.zero_pattern() != w2.zero_pattern():
        return _NO
    xi1p, xi1m, pi1p, pi1m = w1.coords()
    xi2p, xi2m, pi2p, pi2m = w2.coords()

    if pi1m or pi1p:
        u = (pi2m / pi1m) if pi1m else (pi1p / pi2p)
        uinv = gauss(1) / u
        ok = (
            pi2m == u * pi1m
            and pi2p == uinv * pi1p
            and xi2m == u * u * xi1m
            and xi2p == uinv * uinv * xi1p
        )
        return OrbitMatch(True, u=u) if ok else _NO

    if xi1m or xi1p:
        if xi1m and xi1p:
            if xi2p * xi2m != xi1p * xi1m:
                return _NO
            return OrbitMatch(True, u_squared=xi2m / xi1m)
        u_sq = (xi2m / xi1m) if xi1m else (xi1p / xi2p)
        return OrbitMatch(True, u_squared=u_sq)

    return OrbitMatch(True)  # both zero


def classify_kc(h: PcElem) -> Label:
    """Orbit label: weight-coordinate zero pattern plus pinning invariants.

    Nilpotent families: Zero; NJPlus / NJMinus (one xi line, no p, q);
    PIsotropic (xi = 0, exactly one pi zero); NJP(delta_sq = pi+ pi-);
    MixedPlus / MixedMinus (one xi with both pi, carrying delta_sq and the
    weight-zero product w0 = xi -+ pi +-^2); MixedIsotropic (one xi with one
    pi).  Non-nilpotent zero patterns fall into a NonNilpotent label that
    stores the pattern and its pinning invariants.  Two elements receive
    equal labels iff ``same_kc_orbit`` puts them on one orbit.
    """
    w = weight_coords(h)
    xp, xm, pp, pm = w.coords()
    has = w.zero_pattern()

    match has:
        case (False, False, False, False):
            return label("Zero")
        case (False, True, False, False):
            return label("NJPlus")
        case (True, False, False, False):
            return label("NJMinus")
        case (False, False, False, True):
            return label("PIsotropic", sign=1)
        case (False, False, True, False):
            return label("PIsotropic", sign=-1)
        case (False, False, True, True):
            return label("NJP", delta_sq=pp * pm)
        case (False, True, True, True):
            return label("MixedPlus", delta_sq=pp * pm, w0=xm * pp * pp)
        case (True, False, True, True):
            return label("MixedMinus", delta_sq=pp * pm, w0=xp * pm * pm)
        case (False, True, False, True):
            return label("MixedIsotropic", sign=1, side="xi_minus", w0=xm / (pm * pm))
        case (False, True, True, False):
            return label("MixedIsotropic", sign=-1, side="xi_minus", w0=xm * pp * pp)
        case (True, False, False, True):
            return label("MixedIsotropic", sign=1, side="xi_plus", w0=xp * pm * pm)
        case (True, False, True, False):
            return label("MixedIsotropic", sign=-1, side="xi_plus", w0=xp / (pp * pp))
        case (True, True, False, False):
            return label("NonNilpotent", pattern="xi", xi_prod=xp * xm)
        case (True, True, True, False):
            return label("NonNilpotent", pattern="xi-pi_plus", xi_prod=xp * xm, w0=xm * pp * pp)
        case (True, True, False, True):
            return label("NonNilpotent", pattern="xi-pi_minus", xi_prod=xp * xm, w0=xp * pm * pm)
        case _:
            return label(
                "NonNilpotent",
                pattern="full",
                delta_sq=pp * pm,
                w_plus=xm * pp * pp,
                w_minus=xp * pm * pm,
            )


# -- closed-form orbit-set descriptions (audited against the decision procedure) --


def displayed_set_contains(set_id: str, h: PcElem, delta: GaussRational = None) -> bool:
    """Membership in one of the closed-form orbit-set descriptions.

    These are the literal displayed conditions for the complexified orbit
    families; the audit compares them against ``same_kc_orbit`` /
    ``classify_kc``, which is where the B-series findings come from.
    """
    ix = I_UNIT * h.x
    if set_id == "nilpotent_cone":
        return is_nilpotent_pc(h)
    if set_id == "NJplus":
        return h.y == ix and bool(h.x) and not h.p and not h.q
    if set_id == "NJminus":
        return h.y == -ix and bool(h.x) and not h.p and not h.q
    if set_id == "NJP":
        _require_delta(delta)
        return (not h.x) and (not h.y) and h.p * h.p + h.q * h.q == delta * delta
    if set_id == "NJplus_x_delta":
        # The displayed set leaves z unrestricted; it depends on delta only.
        _require_delta(delta)
        return h.y == ix and h.p * h.p + h.q * h.q == delta * delta
    if set_id == "NJminus_x_delta":
        _require_delta(delta)
        return h.y == -ix and h.p * h.p + h.q * h.q == delta * delta
    raise UnknownSetIdError(set_id)


def _require_delta(delta):
    if delta is None or not delta:
        raise ValueError("this set description requires a nonzero delta")


_CORE_LISTED = ("Zero", "NJPlus", "NJMinus")


def in_listed_nilpotent_family(h: PcElem) -> bool:
    """True iff h belongs to a family listed in the nilpotent decomposition.

    The listed union is {0}, the two xi lines, the delta-circle family
    NJP(delta), and the two mixed families with delta != 0; isotropic
    (p, q) with p^2 + q^2 = 0 is in none of them (audit finding B2).
    """
    if not is_nilpotent_pc(h):
        raise ValueError("element is not nilpotent")
    lab = classify_kc(h)
    if lab.family in _CORE_LISTED:
        return True
    if lab.family in ("NJP", "MixedPlus", "MixedMinus"):
        return bool(lab.param("delta_sq"))
    return False
