"""The eleven-term fiber/cofiber sequence of a square.

    0 -> Pip u -> Omega A -> Omega B -> Ker u -> A -> B
      -> Coker u -> Sigma A -> Sigma B -> Copip u -> 0

Each arrow left of u is the kernel of the next one, each arrow right of u
the cokernel of the previous one; the seven connecting identities and the
loop mu_u = zeta*k . q*kappa^{-1} are produced with strict matrices and
asserted exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .basemor import BaseMorphism, compose, zero_mor
from .core2 import (
    TwoCell,
    TwoMorphism,
    TwoObject,
    cell_to_zero,
    compose2,
    loop_cell,
    two_morphism,
)
from .limits2 import (
    cokernel2,
    factor_through_epi,
    factor_through_mono,
    joint_factor_pullback,
    kernel2,
    omega_obj,
    omega_mor,
    pip2,
    sigma_mor,
    sigma_obj,
)


@dataclass(frozen=True)
class PuppeSequence:
    objects: tuple[TwoObject, ...]  # Pip, OmegaA, OmegaB, Ker, A, B, Coker, SigmaA, SigmaB, Copip
    maps: tuple[TwoMorphism, ...]  # nine arrows
    cells: tuple[TwoCell, ...]  # eight nullhomotopies of consecutive pairs
    mu: TwoCell  # the loop Ker u -> Coker u


def puppe(u: TwoMorphism) -> PuppeSequence:
    a, b = u.src, u.dst
    kd = kernel2(u)
    cd = cokernel2(u)
    om_a, om_b = omega_obj(a), omega_obj(b)
    sg_a, sg_b = sigma_obj(a), sigma_obj(b)
    pp = pip2(u)
    sg_q = sigma_obj(cd.obj)

    # m1: Pip u -> Omega A restricts the pip inclusion
    j1 = factor_through_mono(om_a.loop.mat, pp.loop.mat)
    m1 = two_morphism(pp.obj, om_a.obj, zero_mor(pp.obj.top, om_a.obj.top), j1)
    m2 = omega_mor(u, om_a, om_b)
    # m3: Omega B -> Ker u with kappa . d0 = -incl(Ker dB)
    d0 = joint_factor_pullback(
        kd.k,
        kd.kap,
        zero_mor(om_b.obj.bottom, a.bottom),
        -om_b.loop.mat,
    )
    m3 = two_morphism(om_b.obj, kd.obj, zero_mor(om_b.obj.top, kd.obj.top), d0)
    m4 = kd.kmor
    m5 = u
    m6 = cd.qmor
    # m7: Coker u -> Sigma A collapses the A0 part
    w7 = compose(sg_a.loop.mat, _proj_part(cd, 0))
    d7 = factor_through_epi(cd.qfull, w7)
    m7 = two_morphism(cd.obj, sg_a.obj, d7, zero_mor(cd.obj.bottom, sg_a.obj.bottom))
    m8 = sigma_mor(u, sg_a, sg_b)
    m9 = sigma_mor(cd.qmor, sg_b, sg_q)

    c1 = cell_to_zero(compose2(m2, m1), zero_mor(pp.obj.bottom, om_b.obj.top))
    c2 = cell_to_zero(compose2(m3, m2), -om_a.loop.mat)
    c3 = cell_to_zero(compose2(m4, m3), zero_mor(om_b.obj.bottom, a.top))
    c4 = kd.kappa
    c5 = cd.zeta
    c6 = cell_to_zero(compose2(m7, m6), zero_mor(b.bottom, sg_a.obj.top))
    c7 = cell_to_zero(compose2(m8, m7), sg_b.loop.mat)
    c8 = cell_to_zero(compose2(m9, m8), zero_mor(sg_a.obj.bottom, sg_q.obj.top))

    mu_mat = compose(cd.zeta.mat, kd.kmor.bottom) - compose(cd.qmor.top, kd.kappa.mat)
    mu = loop_cell(kd.obj, cd.obj, mu_mat)

    _assert_identities(u, kd, cd, om_a, om_b, sg_a, sg_b, sg_q, pp, m1, m9, c2, d0, d7)

    return PuppeSequence(
        objects=(pp.obj, om_a.obj, om_b.obj, kd.obj, a, b, cd.obj, sg_a.obj, sg_b.obj, sg_q.obj),
        maps=(m1, m2, m3, m4, m5, m6, m7, m8, m9),
        cells=(c1, c2, c3, c4, c5, c6, c7, c8),
        mu=mu,
    )


def _proj_part(cd, which: int) -> BaseMorphism:
    from .limits2 import _proj

    return _proj(cd, which)


def _assert_identities(u, kd, cd, om_a, om_b, sg_a, sg_b, sg_q, pp, m1, m9, c2, d0, d7):
    # 1. eps * (Pip -> OmegaA) is the negative of the pip loop
    if compose(c2.mat, m1.bottom) != -pp.loop.mat:
        raise AssertionError("Puppe identity 1 fails")
    # 2. -eps = omega_A
    if -c2.mat != om_a.loop.mat:
        raise AssertionError("Puppe identity 2 fails")
    # 3. kappa * d = -omega_B
    if compose(kd.kap, d0) != -om_b.loop.mat:
        raise AssertionError("Puppe identity 3 fails")
    # 5. d' * zeta = sigma_A
    if compose(d7, cd.zeta.mat) != sg_a.loop.mat:
        raise AssertionError("Puppe identity 5 fails")
    # 6. eps' = sigma_B (built as such); 4 defines mu; 7. Sigma(q) * eps' = sigma_{Coker}
    if compose(m9.top, sg_b.loop.mat) != sg_q.loop.mat:
        raise AssertionError("Puppe identity 7 fails")
