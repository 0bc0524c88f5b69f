"""Adjoint-orbit classification over the reals.

``classify`` sends any algebra element to an exact orbit label; families:

    Zero, PiR(alpha)            -- central fixed points
    PiP                         -- the single orbit with zero sl2 part, (p,q) != 0
    PiS, PiT, PiS_R(rho), PiT_R(rho)
                                -- cone rays (sign of z) with f = 0, split by rho
    Cone(sign_z, f)             -- cone with f != 0 (sign_z * f < 0 always)
    Hyperbolic(c1, c), Elliptic(c1, sheet, c)
                                -- semisimple sl2 part, split by c = -I/c1

Labels store exact data only (never radicals), so equal labels decide orbit
equality exactly.  ``canonical_rep`` materializes a representative (exact
when the radicands involved are rational squares, floats otherwise), and
``witness`` produces a group element conjugating the representative to a
given element, again exact whenever possible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import gmpy2

from .errors import InternalInconsistencyError, UnknownSetIdError
from .jacobi import (
    AlgebraElement,
    GroupElement,
    P_J,
    R_J,
    S_J,
    T_J,
    X_J,
    Z_J,
    adjoint,
    adjoint_coords,
    invariants,
)
from .labels import Label, label
from .scalars import Rat, rat, sqrt_exact, sum_of_two_squares

_HALF = Rat(1, 2)

REAL_FAMILIES = (
    "Zero", "PiR", "PiP", "PiS", "PiT", "PiS_R", "PiT_R",
    "Cone", "Hyperbolic", "Elliptic",
)

# Families of the listed nilpotent decomposition.  PiT_R is absent from the
# listed union; the audit reports that gap as finding A2.
_LISTED_NILPOTENT = ("Zero", "PiR", "PiP", "PiS", "PiT", "PiS_R", "Cone")


def classify(v: AlgebraElement) -> Label:
    """Exact orbit label of v; a total function with no tolerances."""
    inv = invariants(v)
    if inv.c1 > 0:
        return label("Hyperbolic", c1=inv.c1, c=-inv.i / inv.c1)
    if inv.c1 < 0:
        return label("Elliptic", c1=inv.c1, sheet=1 if v.z > 0 else -1, c=-inv.i / inv.c1)
    if v.sl2_is_zero():
        if not v.p and not v.q:
            return label("Zero") if not v.r else label("PiR", alpha=v.r)
        return label("PiP")
    sign_z = 1 if v.z > 0 else -1  # z != 0 off the cone vertex
    if inv.f:
        return label("Cone", sign_z=sign_z, f=inv.f)
    rho = inv.rho
    if sign_z > 0:
        return label("PiS") if not rho else label("PiS_R", rho=rho)
    return label("PiT") if not rho else label("PiT_R", rho=rho)


def in_listed_nilpotent_family(lab: Label) -> bool:
    """Whether a nilpotent orbit label appears in the listed disjoint union."""
    return lab.family in _LISTED_NILPOTENT


@dataclass(frozen=True)
class Representative:
    """Canonical orbit representative; coords are exact or all-float."""

    coords: tuple
    exact: bool

    def element(self) -> AlgebraElement:
        if not self.exact:
            raise ValueError("representative is a float approximation")
        return AlgebraElement(*self.coords)

    def float_coords(self) -> tuple:
        return tuple(float(c) for c in self.coords)

    def to_json(self) -> dict:
        keys = "xyzpqr"
        if self.exact:
            return {"exact": True, **self.element().to_json()}
        return {"exact": False, **{k: c for k, c in zip(keys, self.coords)}}


def _exact_rep(elem: AlgebraElement) -> Representative:
    return Representative(elem.coords(), exact=True)


def canonical_rep(lab: Label) -> Representative:
    """Representative named by the label; float-flagged when radicals appear."""
    fam = lab.family
    if fam == "Zero":
        return _exact_rep(AlgebraElement.of())
    if fam == "PiR":
        return _exact_rep(lab.param("alpha") * R_J)
    if fam == "PiP":
        return _exact_rep(P_J)
    if fam == "PiS":
        return _exact_rep(S_J)
    if fam == "PiT":
        return _exact_rep(T_J)
    if fam == "PiS_R":
        return _exact_rep(S_J + lab.param("rho") * R_J)
    if fam == "PiT_R":
        return _exact_rep(T_J + lab.param("rho") * R_J)
    if fam == "Cone":
        f = lab.param("f")
        if lab.param("sign_z") > 0:
            beta = sqrt_exact(-f)
            if beta is not None:
                return _exact_rep(S_J + beta * P_J)
            return Representative((0.0, 0.5, 0.5, math.sqrt(float(-f)), 0.0, 0.0), exact=False)
        plus = canonical_rep(label("Cone", sign_z=1, f=-f))
        if plus.exact:
            return _exact_rep(-plus.element())
        return Representative(tuple(-c for c in plus.coords), exact=False)
    if fam == "Hyperbolic":
        c1, c = lab.param("c1"), lab.param("c")
        alpha = sqrt_exact(c1)
        if alpha is not None:
            return _exact_rep(alpha * X_J + c * R_J)
        return Representative(
            (math.sqrt(float(c1)), 0.0, 0.0, 0.0, 0.0, float(c)), exact=False)
    if fam == "Elliptic":
        c1, c, sheet = lab.param("c1"), lab.param("c"), lab.param("sheet")
        alpha = sqrt_exact(-c1)
        if alpha is not None:
            return _exact_rep((sheet * alpha) * Z_J + c * R_J)
        return Representative(
            (0.0, 0.0, sheet * math.sqrt(float(-c1)), 0.0, 0.0, float(c)), exact=False)
    raise ValueError(f"unknown orbit family: {fam}")


@dataclass(frozen=True)
class ConjugationWitness:
    """Group element g with adjoint(g, representative) = target.

    ``params`` holds (a, b, c, d, lam, mu, kappa), exact rationals when
    ``exact`` and floats otherwise; ``residual`` is the max-abs coordinate
    error of the float verification (0.0 for exact witnesses).
    """

    params: tuple
    exact: bool
    residual: float

    def group_element(self) -> GroupElement:
        if not self.exact:
            raise ValueError("witness is a float approximation")
        return GroupElement(*self.params)

    def to_json(self) -> dict:
        keys = ("a", "b", "c", "d", "lambda", "mu", "kappa")
        if self.exact:
            vals = {k: str(v) for k, v in zip(keys, self.params)}
        else:
            vals = {k: float(v) for k, v in zip(keys, self.params)}
        return {**vals, "exact": self.exact, "residual": self.residual}


class _ExactOps:
    """Field hooks for the exact witness path; sqrt may report failure."""

    exact = True

    @staticmethod
    def num(value):
        return value

    @staticmethod
    def sqrt(value):
        return sqrt_exact(value)

    @staticmethod
    def two_squares(value):
        return sum_of_two_squares(value)


class _FloatOps:
    """Same hooks in 150-bit binary floats; used after exact solving fails.

    Plain doubles amplify rounding error through the cubic invariant far
    past the 1e-9 residual contract on moderately sized inputs; mpfr at 150
    bits keeps float witnesses verifiable for any height-bounded input.
    """

    exact = False

    @staticmethod
    def num(value):
        return gmpy2.mpfr(value)

    @staticmethod
    def sqrt(value):
        return gmpy2.sqrt(gmpy2.mpfr(value))

    @staticmethod
    def two_squares(value):
        root = gmpy2.sqrt(gmpy2.mpfr(value))
        return (root, root - root)


class _SolverFailed(Exception):
    """Raised internally when the exact path hits an irrational radical."""


def _sqrt_or_fail(ops, value):
    root = ops.sqrt(value)
    if root is None:
        raise _SolverFailed
    return root


def _solve_heis_orbit(v: AlgebraElement, ops) -> tuple:
    # Target (0,0,0,p,q,r), (p,q) != 0: d = p, b = -q, mu = -r/2, ap + cq = 1.
    p, q, r = ops.num(v.p), ops.num(v.q), ops.num(v.r)
    zero = p - p
    one = zero + 1
    if v.p:
        a, c = one / p, zero
    else:
        a, c = zero, one / q
    return (a, -q, c, p, zero, -r / 2, zero)


def _solve_s_ray(v: AlgebraElement, ops) -> tuple:
    # v is the target with its central shift removed: z > 0, f = 0, rho = 0.
    ypz, ymz = v.y + v.z, v.y - v.z
    x, p, q = ops.num(v.x), ops.num(v.p), ops.num(v.q)
    zero = x - x
    if ypz:
        a = _sqrt_or_fail(ops, ypz)
        return (a, zero, -x / a, 1 / a, q / a, zero, zero)
    c = _sqrt_or_fail(ops, -ymz)  # y + z = 0 forces x = 0, y - z = -2z < 0
    return (zero, -1 / c, c, zero, -p / c, zero, zero)


def _solve_t_ray(v: AlgebraElement, ops) -> tuple:
    # Mirror of the S-ray solver on the z < 0 side.
    ypz, ymz = v.y + v.z, v.y - v.z
    x, p, q = ops.num(v.x), ops.num(v.p), ops.num(v.q)
    zero = x - x
    if ymz:
        d = _sqrt_or_fail(ops, ymz)
        return (1 / d, x / d, zero, d, zero, p / d, zero)
    b = _sqrt_or_fail(ops, -ypz)  # y - z = 0 forces x = 0, y + z = 2z < 0
    return (zero, b, -1 / b, zero, zero, -q / b, zero)


def _solve_cone_plus(v: AlgebraElement, f, ops) -> tuple:
    # Target z > 0, f < 0; conjugate S + beta P with beta^2 = -f.
    beta = _sqrt_or_fail(ops, -f)
    x, p, q, r = (ops.num(c) for c in (v.x, v.p, v.q, v.r))
    zero = x - x
    if v.y + v.z:
        # a^2 = y+z holds automatically for a = (p(y+z) - xq)/beta, because
        # (p(y+z) - xq)^2 = -f (y+z) on this locus; likewise a*p + c*q = beta.
        a = (p * ops.num(v.y + v.z) - x * q) / beta
        c = -x / a
        lam = q / a
        return (a, zero, c, 1 / a, lam, (lam * lam - r) / (2 * beta), zero)
    # y + z = 0 forces x = 0 and beta^2 = 2 z q^2, so c = beta/q has c^2 = 2z.
    c = beta / q
    return (zero, -1 / c, c, p / beta, zero, -r / (2 * beta), zero)


def _solve_hyperbolic(v: AlgebraElement, lab: Label, ops) -> tuple:
    # Conjugate alpha*X; columns of the sl2 conjugator are eigenvectors for
    # +-alpha, the first scaled to make the determinant 1.  Branching is on
    # exact data only: y+z = 0 forces x = +-alpha, and the sign of x picks
    # the eigenvector formula that stays nonzero.
    alpha = _sqrt_or_fail(ops, lab.param("c1"))
    x = ops.num(v.x)
    ypz, ymz = ops.num(v.y + v.z), ops.num(v.y - v.z)
    p, q = ops.num(v.p), ops.num(v.q)
    if v.y + v.z:
        e_plus = (ypz, alpha - x)
        e_minus = (ypz, -alpha - x)
    elif v.x > 0:
        e_plus = (x + alpha, ymz)
        e_minus = (ypz, -alpha - x)
    else:
        e_plus = (ypz, alpha - x)
        e_minus = (x - alpha, ymz)
    det = e_plus[0] * e_minus[1] - e_plus[1] * e_minus[0]
    a, c = e_plus[0] / det, e_plus[1] / det
    b, d = e_minus
    lam = (a * p + c * q) / alpha
    mu = -(d * q + b * p) / alpha
    return (a, b, c, d, lam, mu, lam - lam)


def _solve_elliptic(v: AlgebraElement, lab: Label, ops) -> tuple:
    # Conjugate alpha*Z to sheet*(v - c*R); caller pre-flips by the sheet.
    # (y+z)/alpha > 0 here, and a rational point (a, b) on the circle
    # a^2 + b^2 = (y+z)/alpha exists iff the exact decomposition does.
    alpha = _sqrt_or_fail(ops, -lab.param("c1"))
    s = ops.num(v.y + v.z) / alpha
    pair = ops.two_squares(s)
    if pair is None:
        raise _SolverFailed
    a, b = pair
    x, p, q = ops.num(v.x), ops.num(v.p), ops.num(v.q)
    c = (-a * x / alpha - b) / s
    d = (-b * x / alpha + a) / s
    lam = (b * p + d * q) / alpha
    mu = -(a * p + c * q) / alpha
    return (a, b, c, d, lam, mu, lam - lam)


def _solve(lab: Label, v: AlgebraElement, ops) -> tuple:
    fam = lab.family
    if fam in ("Zero", "PiR"):
        one, zero = ops.num(rat(1)), ops.num(rat(0))
        return (one, zero, zero, one, zero, zero, zero)
    if fam == "PiP":
        return _solve_heis_orbit(v, ops)
    if fam in ("PiS", "PiS_R"):
        rho = lab.param("rho") if fam == "PiS_R" else rat(0)
        return _solve_s_ray(v - rho * R_J, ops)
    if fam in ("PiT", "PiT_R"):
        rho = lab.param("rho") if fam == "PiT_R" else rat(0)
        return _solve_t_ray(v - rho * R_J, ops)
    if fam == "Cone":
        if lab.param("sign_z") > 0:
            return _solve_cone_plus(v, lab.param("f"), ops)
        return _solve_cone_plus(-v, -lab.param("f"), ops)
    if fam == "Hyperbolic":
        return _solve_hyperbolic(v - lab.param("c") * R_J, lab, ops)
    if fam == "Elliptic":
        sheet = lab.param("sheet")
        target = v - lab.param("c") * R_J
        if sheet < 0:
            target = -target
        return _solve_elliptic(target, lab, ops)
    raise ValueError(f"unknown orbit family: {fam}")


def witness(v: AlgebraElement, tol: float = 1e-9) -> ConjugationWitness:
    """Conjugating witness from the canonical representative to v.

    Exact whenever every radicand met along the way is a rational square
    (always for Zero/PiR/PiP, and for any element reached from an exact
    representative by a rational conjugation); float otherwise, verified to
    max-abs residual <= tol.  A failed verification raises
    InternalInconsistencyError: it would indicate a bug, not bad input.
    """
    lab = classify(v)
    rep = canonical_rep(lab)
    if rep.exact:
        try:
            params = _solve(lab, v, _ExactOps)
        except _SolverFailed:
            params = None
        if params is not None:
            g = GroupElement(*params)
            if adjoint(g, rep.element()) != v:
                raise InternalInconsistencyError("exact witness failed to verify")
            return ConjugationWitness(params, exact=True, residual=0.0)
    with gmpy2.context(precision=150):
        params = _solve(lab, v, _FloatOps)
        got = adjoint_coords(params, _rep_coords_hp(lab, rep))
        residual = float(max(abs(a - gmpy2.mpfr(b)) for a, b in zip(got, v.coords())))
    if residual > tol:
        raise InternalInconsistencyError(
            f"float witness residual {residual} exceeds {tol}")
    return ConjugationWitness(params, exact=False, residual=residual)


def _rep_coords_hp(lab: Label, rep: Representative) -> tuple:
    """Representative coordinates at the verification precision."""
    if rep.exact:
        return tuple(gmpy2.mpfr(c) for c in rep.coords)
    fam = lab.family
    half = gmpy2.mpfr("0.5")
    zero = half - half
    if fam == "Cone":
        sign_z = lab.param("sign_z")
        beta = gmpy2.sqrt(gmpy2.mpfr(-sign_z * lab.param("f")))
        return (zero, sign_z * half, sign_z * half, sign_z * beta, zero, zero)
    if fam == "Hyperbolic":
        alpha = gmpy2.sqrt(gmpy2.mpfr(lab.param("c1")))
        return (alpha, zero, zero, zero, zero, gmpy2.mpfr(lab.param("c")))
    if fam == "Elliptic":
        alpha = gmpy2.sqrt(gmpy2.mpfr(-lab.param("c1")))
        return (zero, zero, lab.param("sheet") * alpha, zero, zero,
                gmpy2.mpfr(lab.param("c")))
    raise InternalInconsistencyError(f"no float representative for {fam}")


# -- closed-form orbit-set descriptions ---------------------------------------


def displayed_set_contains(set_id: str, v: AlgebraElement,
                           alpha: Optional[Rat] = None,
                           beta: Optional[Rat] = None) -> bool:
    """Membership in one of the closed-form orbit-set descriptions.

    These evaluate the displayed defining conditions verbatim; the audit
    compares them with the computed orbits.  The r-dependence condition on
    the cone rays is evaluated as rho = 0 (its reconstructed form).
    """
    inv = invariants(v)
    if set_id == "nilpotent_cone":
        return not inv.c1
    if set_id == "PiP":
        return v.sl2_is_zero() and bool(v.p * v.q)  # the literal "pq != 0"
    if set_id == "PiR":
        _require(alpha)
        return v == alpha * R_J
    if set_id == "PiX":
        _require(alpha)
        return inv.c1 == alpha * alpha and inv.f == alpha * alpha * v.r
    if set_id == "PiZ":
        _require(alpha)
        return inv.c1 == -alpha * alpha and inv.f == -alpha * alpha * v.r
    if set_id == "PiS":
        _require(alpha)
        return not inv.c1 and v.z / alpha > 0 and not inv.f and inv.rho == 0
    if set_id == "PiT":
        _require(alpha)
        return not inv.c1 and v.z / alpha < 0 and not inv.f and inv.rho == 0
    if set_id == "PiSP":
        _require(alpha)
        _require(beta)
        return (not inv.c1 and v.z / alpha > 0
                and inv.f == -(alpha ** 3) * beta * beta)
    raise UnknownSetIdError(set_id)


def _require(param):
    if param is None or not param:
        raise ValueError("this set description requires a nonzero parameter")


# -- human-readable rendering --------------------------------------------------


def _coef(value, symbol: str) -> str:
    value = rat(value)
    if value == 1:
        return symbol
    if value == -1:
        return f"-{symbol}"
    return f"{value}{symbol}"


def _with_central(base: str, c) -> str:
    if not c:
        return base
    sign = " + " if c > 0 else " - "
    return base + sign + _coef(abs(c), "R^J")


def render_label(lab: Label) -> str:
    """Render a real orbit label like "Π(S^J + 3R^J)"."""
    fam = lab.family
    if fam == "Zero":
        return "{0}"
    if fam == "PiR":
        return f"Π({_coef(lab.param('alpha'), 'R^J')})"
    if fam == "PiP":
        return "Π(P^J)"
    if fam == "PiS":
        return "Π(S^J)"
    if fam == "PiT":
        return "Π(T^J)"
    if fam == "PiS_R":
        return f"Π({_with_central('S^J', lab.param('rho'))})"
    if fam == "PiT_R":
        return f"Π({_with_central('T^J', lab.param('rho'))})"
    if fam == "Cone":
        return f"Π(α(S^J + P^J)), α^3 = {-lab.param('f')}"
    if fam == "Hyperbolic":
        return (f"Π({_with_central('αX^J', lab.param('c'))}), "
                f"α^2 = {lab.param('c1')}")
    if fam == "Elliptic":
        sym = "αZ^J" if lab.param("sheet") > 0 else "-αZ^J"
        return (f"Π({_with_central(sym, lab.param('c'))}), "
                f"α^2 = {-lab.param('c1')}")
    raise ValueError(f"unknown orbit family: {fam}")
