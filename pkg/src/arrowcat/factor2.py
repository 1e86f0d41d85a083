"""Factorizations, canonical comparisons, orthogonality.

Every square factors three ways: through the cokernel of its kernel
(cofaithful then fully faithful), through the coroot of its pip (fully
cofaithful then faithful), and as the three-stage composite
fully-cofaithful . (faithful and cofaithful) . fully-faithful.  The
comparison arrows Coker(Ker u) -> Root(Copip u) and Coroot(Pip u) ->
Ker(Coker u) witness 2-Puppe-exactness when they are equivalences.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import intmat
from .baselin import LinearSystem
from .basemor import BaseMorphism, zero_mor
from .classify2 import ArrowClassification, classify2
from .core2 import (
    TwoMorphism,
    TwoObject,
    cell_to_zero,
    compose2,
    two_morphism,
)
from .limits2 import (
    KernelData,
    RootData,
    cokernel2,
    copip2,
    factor_cokernel2,
    factor_kernel2,
    factor_through_epi,
    factor_through_mono,
    kernel2,
    pi0_obj,
    pi1_obj,
    pip2,
    root2,
    coroot2,
)


def factor_root2(rt: RootData, t: TwoMorphism) -> TwoMorphism:
    """Factor t: X -> A through the root R -> A (needs loop * t = 0)."""
    bottom = factor_through_mono(rt.kalpha, t.bottom)
    return two_morphism(t.src, rt.obj, t.top, bottom)


def factor_coroot2(rt: RootData, t: TwoMorphism) -> TwoMorphism:
    """Factor t: B -> X through the coroot B -> R (needs t * loop = 0)."""
    top = factor_through_epi(rt.kalpha, t.top)
    return two_morphism(rt.obj, t.dst, top, t.bottom)


@dataclass(frozen=True)
class Factorization:
    # three-stage: u = mhat . l . e strictly
    e: TwoMorphism  # fully cofaithful
    l: TwoMorphism  # faithful and cofaithful
    mhat: TwoMorphism  # fully faithful
    im_obj: TwoObject  # Coroot(Pip u) route image
    imfull_obj: TwoObject  # Coker(Ker u) route image
    # two-stage routes: u = mbar . ehat = m . e strictly
    ehat: TwoMorphism  # cofaithful (Coker(Ker u) quotient)
    mbar: TwoMorphism  # fully faithful companion of ehat
    m: TwoMorphism  # faithful (coroot route companion of e)
    # canonical 2-Puppe comparisons with their classifications
    wbar: TwoMorphism  # Coker(Ker u) -> Root(Copip u)
    wbar_flags: ArrowClassification
    w: TwoMorphism  # Coroot(Pip u) -> Ker(Coker u)
    w_flags: ArrowClassification
    e_flags: ArrowClassification
    l_flags: ArrowClassification
    mhat_flags: ArrowClassification


def factor2(u: TwoMorphism) -> Factorization:
    a, b = u.src, u.dst
    # fully cofaithful stage: cokernel of kmor . (counit of pi1 on Ker u)
    kd = kernel2(u)
    p1k = pi1_obj(kd.obj)
    into_a = compose2(kd.kmor, p1k.unit)
    ecd = cokernel2(into_a)
    e = ecd.qmor
    theta_m = cell_to_zero(
        compose2(u, into_a), zero_mor(into_a.src.bottom, b.top)
    )
    m = factor_cokernel2(ecd, u, theta_m)
    # fully faithful stage: kernel of (unit of pi0 on Coker u) . qmor
    cd = cokernel2(u)
    p0q = pi0_obj(cd.obj)
    onto_pi0 = compose2(p0q.unit, cd.qmor)
    mkd = kernel2(onto_pi0)
    mhat = mkd.kmor
    beta_e = cell_to_zero(
        compose2(onto_pi0, u), zero_mor(a.bottom, p0q.obj.top)
    )
    ehat = factor_kernel2(mkd, u, beta_e)
    # connecting stage: factor ehat through the fully cofaithful e
    theta_l = cell_to_zero(
        compose2(ehat, into_a), zero_mor(into_a.src.bottom, mkd.obj.top)
    )
    l = factor_cokernel2(ecd, ehat, theta_l)
    if compose2(mhat, compose2(l, e)) != u:
        raise AssertionError("three-stage factorization is not strict")
    # comparisons
    cp = copip2(u)
    rt_bar = root2(cp.loop)
    imfull, ehat_full, mhat_full = _coker_ker_route(u, kd)
    wbar = factor_root2(rt_bar, mhat_full)
    pp = pip2(u)
    crt = coroot2(pp.loop)
    kq = kernel2(cd.qmor)
    m1 = factor_kernel2(kq, u, cd.zeta)
    w = factor_coroot2(crt, m1)
    return Factorization(
        e=e,
        l=l,
        mhat=mhat,
        im_obj=ecd.obj,
        imfull_obj=imfull,
        ehat=ehat_full,
        mbar=mhat_full,
        m=m,
        wbar=wbar,
        wbar_flags=classify2(wbar),
        w=w,
        w_flags=classify2(w),
        e_flags=classify2(e),
        l_flags=classify2(l),
        mhat_flags=classify2(mhat),
    )


def _coker_ker_route(u: TwoMorphism, kd: KernelData):
    """imfull = Coker(Ker u) with A -> imfull -> B multiplying to u strictly."""
    ecd2 = cokernel2(kd.kmor)
    ehat = ecd2.qmor
    mhat = factor_cokernel2(ecd2, u, kd.kappa)
    return ecd2.obj, ehat, mhat


@dataclass(frozen=True)
class OrthogonalityReport:
    holds: bool
    fillers: tuple
    unique: bool


def orthogonal2(e: TwoMorphism, m: TwoMorphism, rivals) -> OrthogonalityReport:
    """Orthogonality e | m tested on a list of rival squares.

    A rival is (a, psi, b) with a: dom(e) -> dom(m), b: cod(e) -> cod(m) and
    psi: m.a => b.e.  For each rival a diagonal filler c with cells nu:
    c.e => a and mu: m.c => b is solved for; uniqueness of fillers is the
    triviality of the loop-cell system.
    """
    fillers = []
    holds = True
    for a, psi, b in rivals:
        filler = _solve_filler(e, m, a, psi, b)
        fillers.append(filler)
        if filler is None:
            holds = False
    unique = _fillers_unique(e, m)
    return OrthogonalityReport(holds and unique, tuple(fillers), unique)


def _solve_filler(e, m, a, psi, b):
    x, y = e.dst, m.src
    sys = LinearSystem(e.top.ring)
    sys.add_unknown("c1", x.top, y.top)
    sys.add_unknown("c0", x.bottom, y.bottom)
    sys.add_unknown("nu", e.src.bottom, y.top)
    sys.add_unknown("mu", x.bottom, m.dst.top)
    eye_et = intmat.identity(e.src.top.ngens)
    eye_eb = intmat.identity(e.src.bottom.ngens)
    eye_xb = intmat.identity(x.bottom.ngens)
    # square condition for c
    sys.add_equation(
        [
            (1, y.boundary.mat, "c1", intmat.identity(x.top.ngens)),
            (-1, intmat.identity(y.bottom.ngens), "c0", x.boundary.mat),
        ],
        intmat.zeros(y.bottom.ngens, x.top.ngens),
        y.bottom,
        x.top.ngens,
    )
    # nu: c.e => a
    sys.add_equation(
        [
            (1, intmat.identity(y.top.ngens), "c1", e.top.mat),
            (-1, intmat.identity(y.top.ngens), "nu", e.src.boundary.mat),
        ],
        a.top.mat,
        y.top,
        e.src.top.ngens,
    )
    sys.add_equation(
        [
            (1, intmat.identity(y.bottom.ngens), "c0", e.bottom.mat),
            (-1, y.boundary.mat, "nu", eye_eb),
        ],
        a.bottom.mat,
        y.bottom,
        e.src.bottom.ngens,
    )
    # mu: m.c => b
    sys.add_equation(
        [
            (1, m.top.mat, "c1", intmat.identity(x.top.ngens)),
            (-1, intmat.identity(m.dst.top.ngens), "mu", x.boundary.mat),
        ],
        b.top.mat,
        m.dst.top,
        x.top.ngens,
    )
    sys.add_equation(
        [
            (1, m.bottom.mat, "c0", eye_xb),
            (-1, m.dst.boundary.mat, "mu", eye_xb),
        ],
        b.bottom.mat,
        m.dst.bottom,
        x.bottom.ngens,
    )
    # pasting: psi = mu*e - m*nu  (as matrices)
    sys.add_equation(
        [
            (1, intmat.identity(m.dst.top.ngens), "mu", e.bottom.mat),
            (-1, m.top.mat, "nu", eye_eb),
        ],
        psi.mat.mat,
        m.dst.top,
        e.src.bottom.ngens,
    )
    sol = sys.solve()
    if sol is None:
        return None
    c = two_morphism(x, y, sol["c1"], sol["c0"])
    return c, sol["nu"], sol["mu"]


def _fillers_unique(e, m) -> bool:
    """No nonzero loop cell gamma on cod(e) -> dom(m) is killed by both whiskers."""
    x, y = e.dst, m.src
    sys = LinearSystem(e.top.ring)
    sys.add_unknown("g", x.bottom, y.top)
    eye_xb = intmat.identity(x.bottom.ngens)
    sys.add_equation(
        [(1, intmat.identity(y.top.ngens), "g", x.boundary.mat)],
        intmat.zeros(y.top.ngens, x.top.ngens),
        y.top,
        x.top.ngens,
    )
    sys.add_equation(
        [(1, y.boundary.mat, "g", eye_xb)],
        intmat.zeros(y.bottom.ngens, x.bottom.ngens),
        y.bottom,
        x.bottom.ngens,
    )
    sys.add_equation(
        [(1, intmat.identity(y.top.ngens), "g", e.bottom.mat)],
        intmat.zeros(y.top.ngens, e.src.bottom.ngens),
        y.top,
        e.src.bottom.ngens,
    )
    sys.add_equation(
        [(1, m.top.mat, "g", eye_xb)],
        intmat.zeros(m.dst.top.ngens, x.bottom.ngens),
        m.dst.top,
        x.bottom.ngens,
    )
    from .basemor import base_morphism

    for entry in sys.homogeneous_basis():
        g = base_morphism(x.bottom, y.top, entry["g"])
        if not g.is_zero_mor():
            return False
    return True


@dataclass(frozen=True)
class GoodnessReport:
    a_comparison: BaseMorphism  # pi0 Ker u -> Ker pi0 u (bottom component)
    b_comparison: BaseMorphism  # Coker pi1 u -> pi1 Coker u (top component)
    a_epi: bool
    b_mono: bool


def goodness_comparisons(u: TwoMorphism) -> GoodnessReport:
    """The comparisons pi0(Ker u) -> Ker(pi0 u) and Coker(pi1 u) -> pi1(Coker u)."""
    from .baselin import cokernel_base, kernel_base
    from .limits2 import pi0_mor, pi0_obj, pi1_mor, pi1_obj

    kd = kernel2(u)
    p0_ker = pi0_obj(kd.obj)
    p0_src, p0_dst = pi0_obj(u.src), pi0_obj(u.dst)
    p0_u = pi0_mor(u, p0_src, p0_dst)
    kd0 = kernel2(p0_u)
    rival = pi0_mor(kd.kmor, p0_ker, p0_src)
    beta = cell_to_zero(
        compose2(p0_u, rival), zero_mor(p0_ker.obj.bottom, p0_dst.obj.top)
    )
    a_cmp = factor_kernel2(kd0, rival, beta)

    cd = cokernel2(u)
    p1_coker = pi1_obj(cd.obj)
    p1_src, p1_dst = pi1_obj(u.src), pi1_obj(u.dst)
    p1_u = pi1_mor(u, p1_src, p1_dst)
    cd1 = cokernel2(p1_u)
    rival2 = pi1_mor(cd.qmor, p1_dst, p1_coker)
    theta = cell_to_zero(
        compose2(rival2, p1_u), zero_mor(p1_src.obj.bottom, p1_coker.obj.top)
    )
    b_cmp = factor_cokernel2(cd1, rival2, theta)

    a_epi = cokernel_base(a_cmp.bottom)[0].is_zero
    b_mono = kernel_base(b_cmp.top)[0].is_zero
    return GoodnessReport(a_cmp.bottom, b_cmp.top, a_epi, b_mono)
