"""Limits and colimits of the 2-dimensional layer.

All constructions are the canonical ones: the kernel of a square is built on
the pullback of (u0, boundary) with the A0 block first, the cokernel on the
dual pushout, loops/suspensions on base kernels/cokernels of the boundary.
Factorizations through canonical (co)kernels are strict (the connecting cell
is an identity); factorizations through abstractly-given (co)kernel data are
produced by the linear solver.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import intmat
from .baselin import (
    LinearSystem,
    biproduct_base,
    cokernel_base,
    kernel_base,
    solve_base,
)
from .basemor import BaseMorphism, compose, identity_mor, zero_mor
from .baseobj import zero_object
from .core2 import (
    TwoCell,
    TwoMorphism,
    TwoObject,
    cell_to_zero,
    compose2,
    loop_cell,
    two_morphism,
    whisker_right,
)


def factor_through_epi(e: BaseMorphism, h: BaseMorphism) -> BaseMorphism:
    """x with x.e = h (e epi onto its image containing what h needs)."""
    sys = LinearSystem(e.ring)
    sys.add_unknown("x", e.dst, h.dst)
    sys.add_equation([(1, intmat.identity(h.dst.ngens), "x", e.mat)], h.mat, h.dst, e.src.ngens)
    sol = sys.solve()
    if sol is None:
        raise AssertionError("factorization through quotient does not exist")
    return sol["x"]


def factor_through_mono(m: BaseMorphism, h: BaseMorphism) -> BaseMorphism:
    x = solve_base(m, h)
    if x is None:
        raise AssertionError("factorization through subobject does not exist")
    return x


def joint_factor_pullback(k: BaseMorphism, kappa: BaseMorphism, a: BaseMorphism, b: BaseMorphism) -> BaseMorphism:
    """The unique s with k.s = a and kappa.s = b ((k, kappa) jointly mono)."""
    sys = LinearSystem(k.ring)
    sys.add_unknown("s", a.src, k.src)
    eye = intmat.identity(a.src.ngens)
    sys.add_equation([(1, k.mat, "s", eye)], a.mat, k.dst, a.src.ngens)
    sys.add_equation([(1, kappa.mat, "s", eye)], b.mat, kappa.dst, a.src.ngens)
    sol = sys.solve()
    if sol is None:
        raise AssertionError("pullback factorization does not exist")
    return sol["s"]


# ---------------------------------------------------------------------------
# Kernel and cokernel
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class KernelData:
    obj: TwoObject
    kmor: TwoMorphism  # obj -> src(u)
    kappa: TwoCell  # u . kmor => 0
    # base-level pieces of the pullback presentation
    k: BaseMorphism  # P -> A0
    kap: BaseMorphism  # P -> B1


def kernel2(u: TwoMorphism) -> KernelData:
    a, b = u.src, u.dst
    from .baselin import pullback_base

    p_obj, k, kap = pullback_base(u.bottom, b.boundary)
    kprime = joint_factor_pullback(k, kap, a.boundary, u.top)
    obj = TwoObject(kprime)
    kmor = two_morphism(obj, a, identity_mor(a.top), k)
    kappa = cell_to_zero(compose2(u, kmor), kap)
    return KernelData(obj, kmor, kappa, k, kap)


def factor_kernel2(kd: KernelData, t: TwoMorphism, beta: TwoCell) -> TwoMorphism:
    """The strict factorization t' with kmor . t' = t and kappa . t' = beta."""
    bottom = joint_factor_pullback(kd.k, kd.kap, t.bottom, beta.mat)
    return two_morphism(t.src, kd.obj, t.top, bottom)


@dataclass(frozen=True)
class CokernelData:
    obj: TwoObject
    qmor: TwoMorphism  # dst(u) -> obj
    zeta: TwoCell  # qmor . u => 0
    qfull: BaseMorphism  # A0 (+) B1 -> Q
    inj0: BaseMorphism  # A0 -> A0 (+) B1
    inj1: BaseMorphism  # B1 -> A0 (+) B1


def cokernel2(u: TwoMorphism) -> CokernelData:
    a, b = u.src, u.dst
    ab, (i0, i1), (p0, p1) = biproduct_base([a.bottom, b.top])
    iota = compose(i0, -a.boundary) + compose(i1, u.top)
    q_obj, qfull = cokernel_base(iota)
    zeta_m = compose(qfull, i0)
    q_m = compose(qfull, i1)
    w = compose(u.bottom, p0) + compose(b.boundary, p1)
    qprime = factor_through_epi(qfull, w)
    obj = TwoObject(qprime)
    qmor = two_morphism(b, obj, q_m, identity_mor(b.bottom))
    zeta = cell_to_zero(compose2(qmor, u), zeta_m)
    return CokernelData(obj, qmor, zeta, qfull, i0, i1)


def factor_cokernel2(cd: CokernelData, w: TwoMorphism, theta: TwoCell) -> TwoMorphism:
    """The strict factorization w' with w' . qmor = w and w' transporting zeta to theta."""
    h = compose(theta.mat, _proj(cd, 0)) + compose(w.top, _proj(cd, 1))
    top = factor_through_epi(cd.qfull, h)
    return two_morphism(cd.obj, w.dst, top, w.bottom)


def _proj(cd: CokernelData, which: int) -> BaseMorphism:
    ab = cd.qfull.src
    # recover projections of the biproduct A0 (+) B1 from stored injections
    from .baselin import LinearSystem

    inj = (cd.inj0, cd.inj1)[which]
    other = (cd.inj1, cd.inj0)[which]
    sys = LinearSystem(inj.ring)
    sys.add_unknown("p", ab, inj.src)
    eye = intmat.identity(inj.src.ngens)
    sys.add_equation([(1, intmat.identity(inj.src.ngens), "p", inj.mat)], eye, inj.src, inj.src.ngens)
    sys.add_equation(
        [(1, intmat.identity(inj.src.ngens), "p", other.mat)],
        intmat.zeros(inj.src.ngens, other.src.ngens),
        inj.src,
        other.src.ngens,
    )
    sol = sys.solve()
    assert sol is not None
    return sol["p"]


# ---------------------------------------------------------------------------
# Loops, suspensions, pips, copips, roots, coroots
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LoopData:
    obj: TwoObject
    loop: TwoCell


def omega_obj(x: TwoObject) -> LoopData:
    kd, incl = kernel_base(x.boundary)
    obj = TwoObject(zero_mor(zero_object(x.ring), kd))
    return LoopData(obj, loop_cell(obj, x, incl))


def sigma_obj(x: TwoObject) -> LoopData:
    qd, proj = cokernel_base(x.boundary)
    obj = TwoObject(zero_mor(qd, zero_object(x.ring)))
    return LoopData(obj, loop_cell(x, obj, proj))


@dataclass(frozen=True)
class UnitData:
    obj: TwoObject
    unit: TwoMorphism


def pi0_obj(x: TwoObject) -> UnitData:
    qd, proj = cokernel_base(x.boundary)
    obj = TwoObject(zero_mor(zero_object(x.ring), qd))
    eta = two_morphism(x, obj, zero_mor(x.top, obj.top), proj)
    return UnitData(obj, eta)


def pi1_obj(x: TwoObject) -> UnitData:
    kd, incl = kernel_base(x.boundary)
    obj = TwoObject(zero_mor(kd, zero_object(x.ring)))
    eps = two_morphism(obj, x, incl, zero_mor(obj.bottom, x.bottom))
    return UnitData(obj, eps)


def omega_mor(u: TwoMorphism, om_src: LoopData | None = None, om_dst: LoopData | None = None) -> TwoMorphism:
    om_src = om_src or omega_obj(u.src)
    om_dst = om_dst or omega_obj(u.dst)
    restr = factor_through_mono(om_dst.loop.mat, compose(u.top, om_src.loop.mat))
    return two_morphism(
        om_src.obj, om_dst.obj, zero_mor(om_src.obj.top, om_dst.obj.top), restr
    )


def sigma_mor(u: TwoMorphism, sg_src: LoopData | None = None, sg_dst: LoopData | None = None) -> TwoMorphism:
    sg_src = sg_src or sigma_obj(u.src)
    sg_dst = sg_dst or sigma_obj(u.dst)
    ind = factor_through_epi(sg_src.loop.mat, compose(sg_dst.loop.mat, u.bottom))
    return two_morphism(
        sg_src.obj, sg_dst.obj, ind, zero_mor(sg_src.obj.bottom, sg_dst.obj.bottom)
    )


def pi0_mor(u: TwoMorphism, p_src: UnitData | None = None, p_dst: UnitData | None = None) -> TwoMorphism:
    p_src = p_src or pi0_obj(u.src)
    p_dst = p_dst or pi0_obj(u.dst)
    ind = factor_through_epi(p_src.unit.bottom, compose(p_dst.unit.bottom, u.bottom))
    return two_morphism(
        p_src.obj, p_dst.obj, zero_mor(p_src.obj.top, p_dst.obj.top), ind
    )


def pi1_mor(u: TwoMorphism, p_src: UnitData | None = None, p_dst: UnitData | None = None) -> TwoMorphism:
    p_src = p_src or pi1_obj(u.src)
    p_dst = p_dst or pi1_obj(u.dst)
    restr = factor_through_mono(p_dst.unit.top, compose(u.top, p_src.unit.top))
    return two_morphism(
        p_src.obj, p_dst.obj, restr, zero_mor(p_src.obj.bottom, p_dst.obj.bottom)
    )


def pip2(u: TwoMorphism) -> LoopData:
    a = u.src
    ab, (i0, i1), _ = biproduct_base([a.bottom, u.dst.top])
    iota = compose(i0, -a.boundary) + compose(i1, u.top)
    kp, incl = kernel_base(iota)
    obj = TwoObject(zero_mor(zero_object(a.ring), kp))
    return LoopData(obj, loop_cell(obj, a, incl))


def copip2(u: TwoMorphism) -> LoopData:
    b = u.dst
    ab, (i0, i1), (p0, p1) = biproduct_base([u.src.bottom, b.top])
    p = compose(u.bottom, p0) + compose(b.boundary, p1)
    rq, proj = cokernel_base(p)
    obj = TwoObject(zero_mor(rq, zero_object(b.ring)))
    return LoopData(obj, loop_cell(b, obj, proj))


@dataclass(frozen=True)
class RootData:
    obj: TwoObject
    rmor: TwoMorphism  # obj -> src for roots; src -> obj for coroots
    kalpha: BaseMorphism


def root2(alpha: TwoCell) -> RootData:
    """Root of a loop 0 => 0: A -> B."""
    if not (alpha.cfrom.is_zero_mor() and alpha.cto.is_zero_mor()):
        raise ValueError("root needs a loop 0 => 0")
    a = alpha.src
    ka, incl = kernel_base(alpha.mat)
    fprime = factor_through_mono(incl, a.boundary)
    obj = TwoObject(fprime)
    rmor = two_morphism(obj, a, identity_mor(a.top), incl)
    return RootData(obj, rmor, incl)


def coroot2(alpha: TwoCell) -> RootData:
    if not (alpha.cfrom.is_zero_mor() and alpha.cto.is_zero_mor()):
        raise ValueError("coroot needs a loop 0 => 0")
    b = alpha.dst
    qa, proj = cokernel_base(alpha.mat)
    gbar = factor_through_epi(proj, b.boundary)
    obj = TwoObject(gbar)
    rmor = two_morphism(b, obj, proj, identity_mor(b.bottom))
    return RootData(obj, rmor, proj)


# ---------------------------------------------------------------------------
# Relative kernel / cokernel
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RelKernelData:
    obj: TwoObject
    kmor: TwoMorphism
    kappa: TwoCell
    kernel: KernelData
    root: RootData


def rel_kernel2(b: TwoMorphism, y: TwoMorphism, psi: TwoCell) -> RelKernelData:
    """Kernel of b relative to psi: y.b => 0."""
    kd = kernel2(b)
    pi_mat = compose(y.top, kd.kappa.mat) - compose(psi.mat, kd.kmor.bottom)
    pi = loop_cell(kd.obj, y.dst, pi_mat)
    rt = root2(pi)
    kmor = compose2(kd.kmor, rt.rmor)
    kappa = whisker_right(kd.kappa, rt.rmor)
    kappa = cell_to_zero(compose2(b, kmor), kappa.mat)
    return RelKernelData(rt.obj, kmor, kappa, kd, rt)


def factor_rel_kernel2(rkd: RelKernelData, t: TwoMorphism, beta: TwoCell) -> TwoMorphism:
    t1 = factor_kernel2(rkd.kernel, t, beta)
    bottom = factor_through_mono(rkd.root.kalpha, t1.bottom)
    return two_morphism(t.src, rkd.obj, t.top, bottom)


@dataclass(frozen=True)
class RelCokernelData:
    obj: TwoObject
    qmor: TwoMorphism
    zeta: TwoCell
    cokernel: CokernelData
    coroot: RootData


def rel_cokernel2(a: TwoMorphism, x: TwoMorphism, phi: TwoCell) -> RelCokernelData:
    """Cokernel of a relative to phi: a.x => 0."""
    cd = cokernel2(a)
    rho_mat = compose(cd.qmor.top, phi.mat) - compose(cd.zeta.mat, x.bottom)
    rho = loop_cell(x.src, cd.obj, rho_mat)
    rt = coroot2(rho)
    qmor = compose2(rt.rmor, cd.qmor)
    zeta = cell_to_zero(compose2(qmor, a), compose(rt.kalpha, cd.zeta.mat))
    return RelCokernelData(rt.obj, qmor, zeta, cd, rt)


def factor_rel_cokernel2(rcd: RelCokernelData, w: TwoMorphism, theta: TwoCell) -> TwoMorphism:
    w1 = factor_cokernel2(rcd.cokernel, w, theta)
    top = factor_through_epi(rcd.coroot.kalpha, w1.top)
    return two_morphism(rcd.obj, w.dst, top, w.bottom)


# ---------------------------------------------------------------------------
# Biproducts, pullbacks, pushouts of squares
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Biproduct2:
    obj: TwoObject
    injections: tuple[TwoMorphism, ...]
    projections: tuple[TwoMorphism, ...]


def biproduct2(parts: list[TwoObject]) -> Biproduct2:
    tops = [p.top for p in parts]
    bottoms = [p.bottom for p in parts]
    t_obj, t_inj, t_proj = biproduct_base(tops)
    b_obj, b_inj, b_proj = biproduct_base(bottoms)
    boundary = None
    for part, it, ib in zip(parts, t_inj, b_inj):
        term = compose(ib, compose(part.boundary, _proj_of(t_obj, t_inj, t_proj, it)))
        boundary = term if boundary is None else boundary + term
    obj = TwoObject(boundary)
    injections = tuple(
        two_morphism(p, obj, it, ib) for p, it, ib in zip(parts, t_inj, b_inj)
    )
    projections = tuple(
        two_morphism(obj, p, pt, pb) for p, pt, pb in zip(parts, t_proj, b_proj)
    )
    return Biproduct2(obj, injections, projections)


def _proj_of(obj, injs, projs, inj):
    for i, m in enumerate(injs):
        if m is inj:
            return projs[i]
    raise AssertionError


@dataclass(frozen=True)
class Pullback2:
    obj: TwoObject
    p1: TwoMorphism
    p2: TwoMorphism
    cell: TwoCell  # f.p1 => g.p2
    kernel: KernelData
    biprod: Biproduct2


def pullback2(f: TwoMorphism, g: TwoMorphism) -> Pullback2:
    if f.dst != g.dst:
        raise ValueError("pullback needs a common target")
    bp = biproduct2([f.src, g.src])
    diff = compose2(f, bp.projections[0]) - compose2(g, bp.projections[1])
    kd = kernel2(diff)
    p1 = compose2(bp.projections[0], kd.kmor)
    p2 = compose2(bp.projections[1], kd.kmor)
    cell = TwoCell(compose2(f, p1), compose2(g, p2), kd.kappa.mat)
    return Pullback2(kd.obj, p1, p2, cell, kd, bp)


@dataclass(frozen=True)
class Pushout2:
    obj: TwoObject
    i1: TwoMorphism
    i2: TwoMorphism
    cell: TwoCell  # i1.f => i2.g
    cokernel: CokernelData
    biprod: Biproduct2


def pushout2(f: TwoMorphism, g: TwoMorphism) -> Pushout2:
    if f.src != g.src:
        raise ValueError("pushout needs a common source")
    bp = biproduct2([f.dst, g.dst])
    diff = compose2(bp.injections[0], f) - compose2(bp.injections[1], g)
    cd = cokernel2(diff)
    i1 = compose2(cd.qmor, bp.injections[0])
    i2 = compose2(cd.qmor, bp.injections[1])
    cell = TwoCell(compose2(i1, f), compose2(i2, g), cd.zeta.mat)
    return Pushout2(cd.obj, i1, i2, cell, cd, bp)


# ---------------------------------------------------------------------------
# Factorizations through abstractly-given kernel/cokernel data
# ---------------------------------------------------------------------------


def factor_through_kernel_data(
    g: TwoMorphism, kmor: TwoMorphism, kappa: TwoCell, t: TwoMorphism, beta: TwoCell
):
    """(m, theta) with theta: t => kmor.m and kappa*m . g*theta = beta.

    A strict solution (theta the identity) is preferred when one exists.
    """
    strict = _strict_kernel_factor(kmor, kappa, t, beta)
    if strict is not None:
        return strict, TwoCell(t, compose2(kmor, strict), zero_mor(t.src.bottom, g.src.top))
    x, k_obj, b_obj = t.src, kmor.src, g.src
    sys = LinearSystem(g.top.ring)
    sys.add_unknown("mt", x.top, k_obj.top)
    sys.add_unknown("mb", x.bottom, k_obj.bottom)
    sys.add_unknown("th", x.bottom, b_obj.top)
    eye_t = intmat.identity(x.top.ngens)
    eye_b = intmat.identity(x.bottom.ngens)
    # square condition for m
    sys.add_equation(
        [
            (1, k_obj.boundary.mat, "mt", eye_t),
            (-1, intmat.identity(k_obj.bottom.ngens), "mb", x.boundary.mat),
        ],
        intmat.zeros(k_obj.bottom.ngens, x.top.ngens),
        k_obj.bottom,
        x.top.ngens,
    )
    # theta top: t.top - kmor.top.mt = th . dX
    sys.add_equation(
        [
            (1, kmor.top.mat, "mt", eye_t),
            (1, intmat.identity(b_obj.top.ngens), "th", x.boundary.mat),
        ],
        t.top.mat,
        b_obj.top,
        x.top.ngens,
    )
    # theta bottom: t.bottom - kmor.bottom.mb = dB . th
    sys.add_equation(
        [
            (1, kmor.bottom.mat, "mb", eye_b),
            (1, b_obj.boundary.mat, "th", eye_b),
        ],
        t.bottom.mat,
        b_obj.bottom,
        x.bottom.ngens,
    )
    # pasting: kappa.mb + g.top.th = beta
    sys.add_equation(
        [
            (1, kappa.mat.mat, "mb", eye_b),
            (1, g.top.mat, "th", eye_b),
        ],
        beta.mat.mat,
        g.dst.top,
        x.bottom.ngens,
    )
    sol = sys.solve()
    if sol is None:
        raise AssertionError("kernel-data factorization does not exist")
    m = two_morphism(x, k_obj, sol["mt"], sol["mb"])
    theta = TwoCell(t, compose2(kmor, m), sol["th"])
    return m, theta


def factor_through_cokernel_data(
    u: TwoMorphism, qmor: TwoMorphism, zeta: TwoCell, w: TwoMorphism, theta: TwoCell
):
    """(m, psi) with psi: w => m.qmor and m*zeta . psi*u = theta.

    A strict solution (psi the identity) is preferred when one exists.
    """
    strict = _strict_cokernel_factor(qmor, zeta, w, theta)
    if strict is not None:
        return strict, TwoCell(w, compose2(strict, qmor), zero_mor(w.src.bottom, w.dst.top))
    q_obj, b_obj, z_obj = qmor.dst, qmor.src, w.dst
    sys = LinearSystem(u.top.ring)
    sys.add_unknown("mt", q_obj.top, z_obj.top)
    sys.add_unknown("mb", q_obj.bottom, z_obj.bottom)
    sys.add_unknown("ps", b_obj.bottom, z_obj.top)
    eye_t = intmat.identity(q_obj.top.ngens)
    eye_b = intmat.identity(q_obj.bottom.ngens)
    eye_bb = intmat.identity(b_obj.bottom.ngens)
    sys.add_equation(
        [
            (1, z_obj.boundary.mat, "mt", eye_t),
            (-1, intmat.identity(z_obj.bottom.ngens), "mb", q_obj.boundary.mat),
        ],
        intmat.zeros(z_obj.bottom.ngens, q_obj.top.ngens),
        z_obj.bottom,
        q_obj.top.ngens,
    )
    # psi top: w.top - mt.qmor.top = ps . dB
    sys.add_equation(
        [
            (1, intmat.identity(z_obj.top.ngens), "mt", qmor.top.mat),
            (1, intmat.identity(z_obj.top.ngens), "ps", b_obj.boundary.mat),
        ],
        w.top.mat,
        z_obj.top,
        b_obj.top.ngens,
    )
    # psi bottom: w.bottom - mb.qmor.bottom = dZ . ps
    sys.add_equation(
        [
            (1, intmat.identity(z_obj.bottom.ngens), "mb", qmor.bottom.mat),
            (1, z_obj.boundary.mat, "ps", eye_bb),
        ],
        w.bottom.mat,
        z_obj.bottom,
        b_obj.bottom.ngens,
    )
    # pasting: mt.zeta + ps.u.bottom = theta
    sys.add_equation(
        [
            (1, intmat.identity(z_obj.top.ngens), "mt", zeta.mat.mat),
            (1, intmat.identity(z_obj.top.ngens), "ps", u.bottom.mat),
        ],
        theta.mat.mat,
        z_obj.top,
        u.src.bottom.ngens,
    )
    sol = sys.solve()
    if sol is None:
        raise AssertionError("cokernel-data factorization does not exist")
    m = two_morphism(q_obj, z_obj, sol["mt"], sol["mb"])
    psi = TwoCell(w, compose2(m, qmor), sol["ps"])
    return m, psi


def _strict_kernel_factor(kmor, kappa, t, beta):
    """m with kmor.m = t and kappa*m = beta exactly, or None."""
    x, k_obj = t.src, kmor.src
    sys = LinearSystem(kmor.top.ring)
    sys.add_unknown("mt", x.top, k_obj.top)
    sys.add_unknown("mb", x.bottom, k_obj.bottom)
    eye_t = intmat.identity(x.top.ngens)
    eye_b = intmat.identity(x.bottom.ngens)
    sys.add_equation(
        [
            (1, k_obj.boundary.mat, "mt", eye_t),
            (-1, intmat.identity(k_obj.bottom.ngens), "mb", x.boundary.mat),
        ],
        intmat.zeros(k_obj.bottom.ngens, x.top.ngens),
        k_obj.bottom,
        x.top.ngens,
    )
    sys.add_equation([(1, kmor.top.mat, "mt", eye_t)], t.top.mat, kmor.dst.top, x.top.ngens)
    sys.add_equation([(1, kmor.bottom.mat, "mb", eye_b)], t.bottom.mat, kmor.dst.bottom, x.bottom.ngens)
    sys.add_equation([(1, kappa.mat.mat, "mb", eye_b)], beta.mat.mat, kappa.mat.dst, x.bottom.ngens)
    sol = sys.solve()
    if sol is None:
        return None
    return two_morphism(x, k_obj, sol["mt"], sol["mb"])


def _strict_cokernel_factor(qmor, zeta, w, theta):
    """m with m.qmor = w and m*zeta = theta exactly, or None."""
    q_obj, z_obj = qmor.dst, w.dst
    sys = LinearSystem(qmor.top.ring)
    sys.add_unknown("mt", q_obj.top, z_obj.top)
    sys.add_unknown("mb", q_obj.bottom, z_obj.bottom)
    eye_t = intmat.identity(q_obj.top.ngens)
    sys.add_equation(
        [
            (1, z_obj.boundary.mat, "mt", eye_t),
            (-1, intmat.identity(z_obj.bottom.ngens), "mb", q_obj.boundary.mat),
        ],
        intmat.zeros(z_obj.bottom.ngens, q_obj.top.ngens),
        z_obj.bottom,
        q_obj.top.ngens,
    )
    sys.add_equation(
        [(1, intmat.identity(z_obj.top.ngens), "mt", qmor.top.mat)],
        w.top.mat,
        z_obj.top,
        qmor.src.top.ngens,
    )
    sys.add_equation(
        [(1, intmat.identity(z_obj.bottom.ngens), "mb", qmor.bottom.mat)],
        w.bottom.mat,
        z_obj.bottom,
        qmor.src.bottom.ngens,
    )
    sys.add_equation(
        [(1, intmat.identity(z_obj.top.ngens), "mt", zeta.mat.mat)],
        theta.mat.mat,
        z_obj.top,
        zeta.mat.src.ngens,
    )
    sol = sys.solve()
    if sol is None:
        return None
    return two_morphism(q_obj, z_obj, sol["mt"], sol["mb"])


def solve_cell(u: TwoMorphism, v: TwoMorphism) -> TwoCell | None:
    """Some cell u => v between parallel squares, or None."""
    sys = LinearSystem(u.top.ring)
    sys.add_unknown("al", u.src.bottom, u.dst.top)
    eye_t = intmat.identity(u.src.top.ngens)
    eye_b = intmat.identity(u.src.bottom.ngens)
    sys.add_equation(
        [(1, intmat.identity(u.dst.top.ngens), "al", u.src.boundary.mat)],
        (u.top - v.top).mat,
        u.dst.top,
        u.src.top.ngens,
    )
    sys.add_equation(
        [(1, u.dst.boundary.mat, "al", eye_b)],
        (u.bottom - v.bottom).mat,
        u.dst.bottom,
        u.src.bottom.ngens,
    )
    sol = sys.solve()
    return None if sol is None else TwoCell(u, v, sol["al"])
