"""Deterministic height-bounded samplers for the audit harness.

Every sampler draws from a ``Stream``, which is seeded from (seed,
stream id) through SHA-256, so each audit claim owns an independent and
reproducible sample sequence: adding claims never perturbs the samples of
existing ones.  All primitives reduce to ``getrandbits``, whose behaviour
is stable across Python versions.

Group elements are built as products of an upper-unipotent, a diagonal
(t, 1/t), and a lower-unipotent factor, which lands surjectively on a
Zariski-dense, height-bounded subset of SL(2,Q) without rejection.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass

from .complex_orbits import KcElem, PcElem
from .jacobi import AlgebraElement, GroupElement, group_mul
from .scalars import GaussRational, Rat
from .sl2 import Sl2Elem


@dataclass(frozen=True)
class SamplerConfig:
    """Audit configuration: RNG seed, trial count, and coefficient height."""

    seed: int
    trials: int
    height_bound: int = 10

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.height_bound < 2:
            raise ValueError("height_bound must be >= 2")

    def stream(self, stream_id: str) -> "Stream":
        return Stream(self.seed, stream_id, self.height_bound)


class Stream:
    """Deterministic sample stream, independent per (seed, stream_id)."""

    def __init__(self, seed: int, stream_id: str, height_bound: int = 10):
        digest = hashlib.sha256(f"{seed}:{stream_id}".encode()).digest()
        self._rng = random.Random(int.from_bytes(digest[:8], "big"))
        self.height = height_bound

    # -- integer primitives (getrandbits only, for cross-version stability) --

    def int_below(self, n: int) -> int:
        if n <= 0:
            raise ValueError("n must be positive")
        k = (n - 1).bit_length()
        if k == 0:
            return 0
        while True:
            value = self._rng.getrandbits(k)
            if value < n:
                return value

    def int_between(self, lo: int, hi: int) -> int:
        return lo + self.int_below(hi - lo + 1)

    def sign(self) -> int:
        return 1 if self._rng.getrandbits(1) else -1

    def bool(self) -> bool:
        return bool(self._rng.getrandbits(1))

    # -- rationals ---------------------------------------------------------

    def rational(self) -> Rat:
        num = self.int_between(-self.height, self.height)
        den = self.int_between(1, self.height)
        return Rat(num, den)

    def nonzero_rational(self) -> Rat:
        num = self.sign() * self.int_between(1, self.height)
        den = self.int_between(1, self.height)
        return Rat(num, den)

    def gauss_rational(self) -> GaussRational:
        return GaussRational(self.rational(), self.rational())

    def nonzero_gauss_rational(self) -> GaussRational:
        value = GaussRational(self.rational(), self.rational())
        while not value:
            value = GaussRational(self.rational(), self.rational())
        return value

    # -- group and algebra elements ----------------------------------------

    def group_element(self) -> GroupElement:
        u = self.rational()
        t = self.nonzero_rational()
        low = self.rational()
        upper = GroupElement.of(1, u, 0, 1)
        diag = GroupElement.of(t, 0, 0, 1 / t)
        lower = GroupElement.of(1, 0, low, 1)
        sl2 = group_mul(group_mul(upper, diag), lower)
        return GroupElement(
            sl2.a, sl2.b, sl2.c, sl2.d,
            self.rational(), self.rational(), self.rational(),
        )

    def algebra_element(self) -> AlgebraElement:
        return AlgebraElement(*(self.rational() for _ in range(6)))

    def cone_point(self) -> tuple:
        """Nonzero rational (x, y, z) with x^2 + y^2 = z^2.

        Scaled Pythagorean parametrization; covers every rational point of
        the punctured cone as (m, n, k) range over their domains.
        """
        while True:
            m = self.int_between(-self.height, self.height)
            n = self.int_between(-self.height, self.height)
            if m or n:
                break
        k = self.nonzero_rational()
        return (k * (m * m - n * n), k * 2 * m * n, k * (m * m + n * n))

    def nilpotent_element(self, zero_sl2_fraction: int = 0) -> AlgebraElement:
        """Nilpotent algebra element: cone point plus free (p, q, r).

        With probability zero_sl2_fraction/8, the sl2 part is zero (the
        degenerate stratum of the nilpotent variety).
        """
        if zero_sl2_fraction and self.int_below(8) < zero_sl2_fraction:
            x = y = z = Rat(0)
        else:
            x, y, z = self.cone_point()
        return AlgebraElement(x, y, z, self.rational(), self.rational(), self.rational())

    def flat_nilpotent_element(self) -> AlgebraElement:
        """Nilpotent element with f = 0: (p, q) proportional to (x, y+z).

        On the cone, (p, q) = s (x, y+z) forces f = s^2 (y+z) c1 = 0; when
        y + z = 0 the f = 0 solutions are (p, 0).  r remains free, so these
        samples sweep all central shifts of the cone rays.
        """
        x, y, z = self.cone_point()
        s = self.rational()
        if y + z:
            p, q = s * x, s * (y + z)
        else:
            p, q = s, Rat(0)
        return AlgebraElement(x, y, z, p, q, self.rational())

    def semisimple_sl2_part(self, positive: bool) -> tuple:
        """Random (x, y, z) with c1 > 0 (positive=True) or c1 < 0."""
        while True:
            x, y, z = (self.rational() for _ in range(3))
            c1 = x * x + y * y - z * z
            if positive and c1 > 0:
                return (x, y, z)
            if not positive and c1 < 0:
                return (x, y, z)

    # -- sl2 side ------------------------------------------------------------

    def sl2_element(self) -> Sl2Elem:
        return Sl2Elem(self.rational(), self.rational(), self.rational())

    def nilpotent_sl2(self) -> Sl2Elem:
        return Sl2Elem(*self.cone_point())

    def ks_locus_nilpotent(self) -> Sl2Elem:
        """Nilpotent sl2 element whose generated triple is a KS-triple.

        These are the cone points with z = +-1/2 (so x^2 + y^2 = 1/4),
        rationally parametrized through Pythagorean pairs.
        """
        while True:
            m = self.int_between(-self.height, self.height)
            n = self.int_between(-self.height, self.height)
            if m or n:
                break
        denom = 2 * (m * m + n * n)
        x = Rat(m * m - n * n, denom)
        y = Rat(2 * m * n, denom)
        z = Rat(self.sign(), 2)
        return Sl2Elem(x, y, z)

    # -- complexified side ----------------------------------------------------

    def pc_elem(self) -> PcElem:
        return PcElem(*(self.gauss_rational() for _ in range(4)))

    def nilpotent_pc_elem(self) -> PcElem:
        """Element with x^2 + y^2 = 0: y = +-ix with free (p, q)."""
        x = self.gauss_rational()
        y = GaussRational(-x.im, x.re) if self.bool() else GaussRational(x.im, -x.re)
        return PcElem(x, y, self.gauss_rational(), self.gauss_rational())

    def kc_elem(self) -> KcElem:
        """Exact element of the complexified circle, via u = a + ib != 0."""
        return KcElem.from_u(self.nonzero_gauss_rational(), kappa=self.gauss_rational())
