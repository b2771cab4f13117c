"""Numeric invariants of the bundle and its associated subvariety.

All divisor and cycle arithmetic is scalar: classes are stored as rational
multiples of the hyperplane class H, with H^m = d as the intersection
normalizer.  The two chain evaluators (rank 2 and rank 3) produce every
number the contradiction pipeline needs, including the structure-sheaf chi
by both available routes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .exactcore import binom, scalar_str
from .euler import ChiProfile, chi_subvariety


@dataclass(frozen=True)
class CIContext:
    """A complete-intersection input in canonical form (degrees sorted
    descending)."""

    profile: ChiProfile

    def __post_init__(self):
        if self.profile.r > 3:
            raise ValueError("pipeline handles rank r <= 3 only")
        canonical = tuple(sorted(self.profile.degrees, reverse=True))
        if canonical != self.profile.degrees:
            object.__setattr__(
                self,
                "profile",
                ChiProfile(self.profile.m, canonical, self.profile.a, self.profile.r),
            )

    @classmethod
    def from_data(cls, m: int, degrees: Sequence[int], a: int, r: int) -> "CIContext":
        return cls(ChiProfile(m=m, degrees=tuple(degrees), a=a, r=r))

    @property
    def m(self) -> int:
        return self.profile.m

    @property
    def s(self) -> int:
        return self.profile.s

    @property
    def degrees(self) -> tuple:
        return self.profile.degrees

    @property
    def a(self) -> int:
        return self.profile.a

    @property
    def r(self) -> int:
        return self.profile.r

    @property
    def d(self) -> int:
        return self.profile.d

    @property
    def S(self) -> int:
        return self.profile.S

    @property
    def Sprime(self) -> int:
        return self.profile.Sprime


def canonical_coeff(ctx: CIContext) -> Fraction:
    """K_X = (S - s - m - 1) H."""
    return Fraction(ctx.S - ctx.s - ctx.m - 1)


def c2_tangent_coeff(ctx: CIContext) -> Fraction:
    """c2(X) = [binom(m+s+1, 2) + S(S - s - m - 1) - S'] H^2."""
    return binom(ctx.m + ctx.s + 1, 2) + ctx.S * (ctx.S - ctx.s - ctx.m - 1) - ctx.Sprime


def c1_coeff(ctx: CIContext) -> Fraction:
    """c1(E) = u H with u = (r/2)[(m+1)(a-1) + S - s].

    u can be a non-integer rational for odd r; nothing downstream assumes
    integrality.
    """
    if ctx.r < 2:
        raise ValueError("c1 coefficient is defined for rank r >= 2")
    return Fraction(ctx.r, 2) * ((ctx.m + 1) * (ctx.a - 1) + ctx.S - ctx.s)


def _bracket24(m: int, r: int, a: int, s: int, S: int, S2: int) -> int:
    """The shared degree bracket of the subvariety-degree and c2(E) formulas."""
    return (
        -4
        + 6 * a
        - 2 * a**2
        - 7 * m
        + 12 * a * m
        - 5 * a**2 * m
        - 3 * m**2
        + 6 * a * m**2
        - 3 * a**2 * m**2
        + 3 * r
        - 6 * a * r
        + 3 * a**2 * r
        + 6 * m * r
        - 12 * a * m * r
        + 6 * a**2 * m * r
        + 3 * m**2 * r
        - 6 * a * m**2 * r
        + 3 * a**2 * m**2 * r
        - 7 * s
        + 6 * a * s
        - 6 * m * s
        + 6 * a * m * s
        + 6 * r * s
        - 6 * a * r * s
        + 6 * m * r * s
        - 6 * a * m * r * s
        - 3 * s**2
        + 3 * r * s**2
        + 6 * S
        - 6 * a * S
        + 6 * m * S
        - 6 * a * m * S
        - 6 * r * S
        + 6 * a * r * S
        - 6 * m * r * S
        + 6 * a * m * r * S
        + 6 * s * S
        - 6 * r * s * S
        - 2 * S**2
        + 3 * r * S**2
        - 2 * S2
    )


def c2_bundle_coeff(ctx: CIContext) -> Fraction:
    """c2(E) = e H^2; e is r/24 times the shared degree bracket."""
    if ctx.r < 2:
        raise ValueError("c2 coefficient is defined for rank r >= 2")
    return Fraction(ctx.r, 24) * _bracket24(ctx.m, ctx.r, ctx.a, ctx.s, ctx.S, ctx.Sprime)


def subvariety_degree(ctx: CIContext) -> Fraction:
    """deg_H(Z) = e d, via the closed bracket."""
    return ctx.d * c2_bundle_coeff(ctx)


def subvariety_degree_chern(ctx: CIContext) -> Fraction:
    """deg_H(Z) recomputed from the general rank-r surface-restriction
    identity for c2 of an Ulrich bundle, with L = aH and H^m = d.

    An independent route: it never touches the closed bracket.
    """
    if ctx.r < 2:
        raise ValueError("defined for rank r >= 2")
    u = c1_coeff(ctx)
    kx = canonical_coeff(ctx)
    c2x = c2_tangent_coeff(ctx)
    m, a, r = ctx.m, ctx.a, ctx.r
    e = Fraction(1, 2) * (u**2 - u * kx) + Fraction(r, 12) * (
        kx**2 + c2x - Fraction(3 * m**2 + 5 * m + 2, 2) * a**2
    )
    return ctx.d * e


@dataclass(frozen=True)
class UlrichNumerics:
    """Exact invariants of the subvariety attached to one input."""

    u: Fraction
    e: Fraction
    degZ: Fraction
    kX: Fraction
    c2X: Fraction
    kZ: Optional[Fraction]  # hyperplane coefficient of K_Z; rank 2 only
    kZH: Fraction  # K_Z . H_Z
    kZ2: Fraction  # K_Z^2
    c2Z: Fraction
    chiZ_noether: Fraction  # (K_Z^2 + c2(Z)) / 12
    chiZ_rr: Fraction  # chi(O_Z) via the resolution route

    def to_json(self) -> dict:
        return {
            "u": scalar_str(self.u),
            "e": scalar_str(self.e),
            "degZ": scalar_str(self.degZ),
            "kX": scalar_str(self.kX),
            "c2X": scalar_str(self.c2X),
            "kZ": None if self.kZ is None else scalar_str(self.kZ),
            "kZ2": scalar_str(self.kZ2),
            "c2Z": scalar_str(self.c2Z),
            "chiZ_noether": scalar_str(self.chiZ_noether),
            "chiZ_rr": scalar_str(self.chiZ_rr),
        }


def _common_invariants(ctx: CIContext):
    return (
        c1_coeff(ctx),
        c2_bundle_coeff(ctx),
        subvariety_degree(ctx),
        canonical_coeff(ctx),
        c2_tangent_coeff(ctx),
    )


def rank2_numerics(ctx: CIContext) -> UlrichNumerics:
    """The rank-2 chain on a 4-dimensional complete intersection.

    K_Z is a known multiple of the hyperplane section, so K_Z^2 and c2(Z)
    reduce to multiples of deg_H(Z); the structure-sheaf chi then follows
    from Noether's formula.
    """
    if ctx.m != 4 or ctx.r != 2:
        raise ValueError(f"rank-2 chain needs m=4, r=2, got m={ctx.m}, r={ctx.r}")
    a, s, S, S2 = ctx.a, ctx.s, ctx.S, ctx.Sprime
    u, e, degz, kx, c2x = _common_invariants(ctx)

    kz = Fraction(2 * S - 2 * s + 5 * (a - 2))
    kzh = kz * degz
    kz2 = kz**2 * degz
    c2z = (
        Fraction(
            650
            - 750 * a
            + 220 * a**2
            + 265 * s
            - 150 * a * s
            + 27 * s**2
            - 270 * S
            + 150 * a * S
            - 54 * s * S
            + 32 * S**2
            - 10 * S2,
            12,
        )
        * degz
    )
    chi_noether = (kz2 + c2z) / 12
    chi_rr = chi_subvariety(0, ctx.profile, u)
    return UlrichNumerics(u, e, degz, kx, c2x, kz, kzh, kz2, c2z, chi_noether, chi_rr)


def rank3_numerics(ctx: CIContext) -> UlrichNumerics:
    """The rank-3 chain on a 4-dimensional complete intersection.

    K_Z . H_Z comes from Riemann-Roch on the surface using chi at twists 0
    and 1; K_Z^2 from the vanishing square [K_Z - (5/2)(S-s+3a-5) H_Z]^2 = 0;
    c2(Z) from the Chern-class relation of the subvariety; chi again by
    Noether.
    """
    if ctx.m != 4 or ctx.r != 3:
        raise ValueError(f"rank-3 chain needs m=4, r=3, got m={ctx.m}, r={ctx.r}")
    a, s, S, S2 = ctx.a, ctx.s, ctx.S, ctx.Sprime
    u, e, degz, kx, c2x = _common_invariants(ctx)

    chi0 = chi_subvariety(0, ctx.profile, u)
    chi1 = chi_subvariety(1, ctx.profile, u)
    kzh = -2 * chi1 + 2 * chi0 + degz
    t = S - s + 3 * a - 5
    kz2 = 5 * t * kzh - Fraction(25, 4) * t**2 * degz
    c2z = (
        Fraction(
            -1315
            + 1800 * a
            - 605 * a**2
            - 523 * s
            + 360 * a * s
            - 52 * s**2
            + 520 * S
            - 360 * a * S
            + 104 * s * S
            - 49 * S**2
            - 6 * S2,
            8,
        )
        * degz
        + (4 * S - 4 * s - 20 + 15 * a) * kzh
    )
    chi_noether = (kz2 + c2z) / 12
    return UlrichNumerics(u, e, degz, kx, c2x, None, kzh, kz2, c2z, chi_noether, chi0)
