"""Snake lemmas: the six-term kernel-cokernel sequence of a column map.

The plain snake expects both rows to be extensions; the connecting morphism
is built through the pushout of the left square (two-square lemma) and the
triangle construction d = q'_a . k'_c.  The generalized snake only expects
(g, eta) = Coker f in the top row and (f', eta') = Ker g' in the bottom one;
it reduces to the plain snake on the kernel/cokernel rows as in the proof.
All connecting 2-cells are produced by pinned linear solves and the three
mu-identities are asserted exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import intmat
from .baselin import LinearSystem
from .basemor import compose, zero_mor
from .core2 import (
    TwoCell,
    TwoMorphism,
    TwoObject,
    cell_to_zero,
    compose2,
    loop_cell,
    two_morphism,
    vcomp2,
    whisker_left,
    whisker_right,
)
from .limits2 import (
    CokernelData,
    KernelData,
    cokernel2,
    factor_cokernel2,
    factor_kernel2,
    factor_through_cokernel_data,
    factor_through_kernel_data,
    kernel2,
    pushout2,
    solve_cell,
)


@dataclass(frozen=True)
class KernelSide:
    obj: TwoObject
    kmor: TwoMorphism
    kappa: TwoCell
    canonical: KernelData | None = None


@dataclass(frozen=True)
class CokernelSide:
    obj: TwoObject
    qmor: TwoMorphism
    zeta: TwoCell
    canonical: CokernelData | None = None


@dataclass(frozen=True)
class ColumnData:
    mor: TwoMorphism
    ker: KernelSide
    coker: CokernelSide


def column_data(col: TwoMorphism, ker: KernelSide | None = None, coker: CokernelSide | None = None) -> ColumnData:
    if ker is None:
        kd = kernel2(col)
        ker = KernelSide(kd.obj, kd.kmor, kd.kappa, kd)
    if coker is None:
        cd = cokernel2(col)
        coker = CokernelSide(cd.obj, cd.qmor, cd.zeta, cd)
    return ColumnData(col, ker, coker)


def _factor_ker(side: KernelSide, col: TwoMorphism, t: TwoMorphism, beta: TwoCell):
    if side.canonical is not None:
        m = factor_kernel2(side.canonical, t, beta)
        theta = TwoCell(t, compose2(side.kmor, m), zero_mor(t.src.bottom, col.src.top))
        return m, theta
    return factor_through_kernel_data(col, side.kmor, side.kappa, t, beta)


def _factor_coker(side: CokernelSide, col: TwoMorphism, w: TwoMorphism, theta: TwoCell):
    if side.canonical is not None:
        m = factor_cokernel2(side.canonical, w, theta)
        psi = TwoCell(w, compose2(m, side.qmor), zero_mor(w.src.bottom, w.dst.top))
        return m, psi
    return factor_through_cokernel_data(col, side.qmor, side.zeta, w, theta)


def mu_loop(cdata: ColumnData) -> TwoCell:
    """The loop zeta*k . q*kappa^{-1}: Ker -> Coker of a column."""
    mat = compose(cdata.coker.zeta.mat, cdata.ker.kmor.bottom) - compose(
        cdata.coker.qmor.top, cdata.ker.kappa.mat
    )
    return loop_cell(cdata.ker.obj, cdata.coker.obj, mat)


@dataclass(frozen=True)
class SnakeResult:
    fbar: TwoMorphism
    etabar: TwoCell
    gbar: TwoMorphism
    delta: TwoCell
    d: TwoMorphism
    delta_prime: TwoCell
    fbar2: TwoMorphism
    etabar2: TwoCell
    gbar2: TwoMorphism
    mu_a: TwoCell
    mu_b: TwoCell
    mu_c: TwoCell
    col_a: ColumnData
    col_b: ColumnData
    col_c: ColumnData

    def sequence(self):
        """(maps, cells) of the six-term sequence Ka..Qc."""
        maps = (self.fbar, self.gbar, self.d, self.fbar2, self.gbar2)
        cells = (self.etabar, self.delta, self.delta_prime, self.etabar2)
        return maps, cells


def check_pasting(f, eta, g, f2, eta2, g2, a, b, c, phi, psi):
    lhs = (
        compose(eta2.mat, a.bottom)
        + compose(g2.top, phi.mat)
        + compose(psi.mat, f.bottom)
    )
    if lhs != compose(c.top, eta.mat):
        raise ValueError("snake diagram does not commute (pasting condition)")


def plain_snake(
    f: TwoMorphism,
    eta: TwoCell,
    g: TwoMorphism,
    f2: TwoMorphism,
    eta2: TwoCell,
    g2: TwoMorphism,
    a: ColumnData,
    b: ColumnData,
    c: ColumnData,
    phi: TwoCell,
    psi: TwoCell,
) -> SnakeResult:
    """Rows (f, eta, g) and (f2, eta2, g2) extensions; phi: b.f => f2.a,
    psi: c.g => g2.b."""
    check_pasting(f, eta, g, f2, eta2, g2, a.mor, b.mor, c.mor, phi, psi)

    # induced maps on kernels and cokernels
    beta_f = vcomp2(whisker_left(f2, a.ker.kappa), whisker_right(phi, a.ker.kmor))
    fbar, _ = _factor_ker(b.ker, b.mor, compose2(f, a.ker.kmor), beta_f)
    beta_g = vcomp2(whisker_left(g2, b.ker.kappa), whisker_right(psi, b.ker.kmor))
    gbar, _ = _factor_ker(c.ker, c.mor, compose2(g, b.ker.kmor), beta_g)
    theta_f = vcomp2(whisker_right(b.coker.zeta, f), whisker_left(b.coker.qmor, phi.inverse()))
    fbar2, _ = _factor_coker(a.coker, a.mor, compose2(b.coker.qmor, f2), theta_f)
    theta_g = vcomp2(whisker_right(c.coker.zeta, g), whisker_left(c.coker.qmor, psi.inverse()))
    gbar2, _ = _factor_coker(b.coker, b.mor, compose2(c.coker.qmor, g2), theta_g)

    # two-square construction on the left square (f, a; f2, b)
    po = pushout2(f, a.mor)
    i1, i2, phi1 = po.i1, po.i2, po.cell
    diff = compose2(po.biprod.injections[0], f) - compose2(po.biprod.injections[1], a.mor)
    w_j = compose2(g, po.biprod.projections[0])
    j = factor_cokernel2(po.cokernel, w_j, cell_to_zero(compose2(w_j, diff), eta.mat))
    w_c = compose2(b.mor, po.biprod.projections[0]) + compose2(f2, po.biprod.projections[1])
    cprime = factor_cokernel2(po.cokernel, w_c, cell_to_zero(compose2(w_c, diff), phi.mat))
    chi = compose(eta2.mat, po.biprod.projections[1].bottom) - compose(
        psi.mat, po.biprod.projections[0].bottom
    )
    try:
        psi2 = TwoCell(compose2(g2, cprime), compose2(c.mor, j), chi)
    except ValueError:
        got = solve_cell(compose2(g2, cprime), compose2(c.mor, j))
        if got is None:
            raise AssertionError("two-square comparison cell does not exist")
        psi2 = got

    # k'_c: Kc -> I with cells xi and kappa'_c
    iobj = po.obj
    kc = c.ker
    sys = LinearSystem(f.top.ring)
    sys.add_unknown("s1", kc.obj.top, iobj.top)
    sys.add_unknown("s0", kc.obj.bottom, iobj.bottom)
    sys.add_unknown("kp", kc.obj.bottom, b.mor.dst.top)
    sys.add_unknown("xi", kc.obj.bottom, c.mor.src.top)
    eye_kt = intmat.identity(kc.obj.top.ngens)
    eye_kb = intmat.identity(kc.obj.bottom.ngens)
    sys.add_equation(
        [
            (1, iobj.boundary.mat, "s1", eye_kt),
            (-1, intmat.identity(iobj.bottom.ngens), "s0", kc.obj.boundary.mat),
        ],
        intmat.zeros(iobj.bottom.ngens, kc.obj.top.ngens),
        iobj.bottom,
        kc.obj.top.ngens,
    )
    # xi: kc_mor => j . s
    sys.add_equation(
        [
            (1, j.top.mat, "s1", eye_kt),
            (1, intmat.identity(c.mor.src.top.ngens), "xi", kc.obj.boundary.mat),
        ],
        kc.kmor.top.mat,
        c.mor.src.top,
        kc.obj.top.ngens,
    )
    sys.add_equation(
        [
            (1, j.bottom.mat, "s0", eye_kb),
            (1, c.mor.src.boundary.mat, "xi", eye_kb),
        ],
        kc.kmor.bottom.mat,
        c.mor.src.bottom,
        kc.obj.bottom.ngens,
    )
    # kp: c' . s => 0
    sys.add_equation(
        [
            (1, cprime.top.mat, "s1", eye_kt),
            (-1, intmat.identity(b.mor.dst.top.ngens), "kp", kc.obj.boundary.mat),
        ],
        intmat.zeros(b.mor.dst.top.ngens, kc.obj.top.ngens),
        b.mor.dst.top,
        kc.obj.top.ngens,
    )
    sys.add_equation(
        [
            (1, cprime.bottom.mat, "s0", eye_kb),
            (-1, b.mor.dst.boundary.mat, "kp", eye_kb),
        ],
        intmat.zeros(b.mor.dst.bottom.ngens, kc.obj.bottom.ngens),
        b.mor.dst.bottom,
        kc.obj.bottom.ngens,
    )
    # pasting: c.xi - psi2.s0 + g2.kp = kappa_c
    sys.add_equation(
        [
            (1, c.mor.top.mat, "xi", eye_kb),
            (-1, psi2.mat.mat, "s0", eye_kb),
            (1, g2.top.mat, "kp", eye_kb),
        ],
        kc.kappa.mat.mat,
        c.mor.dst.top,
        kc.obj.bottom.ngens,
    )
    sol = sys.solve()
    if sol is None:
        raise AssertionError("k'_c system is not solvable")
    kprime_c = two_morphism(kc.obj, iobj, sol["s1"], sol["s0"])
    kappa_pc = sol["kp"]

    # q'_a: I -> Qa with cells zeta'_a and pi
    qa = a.coker
    sys = LinearSystem(f.top.ring)
    sys.add_unknown("t1", iobj.top, qa.obj.top)
    sys.add_unknown("t0", iobj.bottom, qa.obj.bottom)
    sys.add_unknown("zp", b.mor.src.bottom, qa.obj.top)
    sys.add_unknown("pi", a.mor.dst.bottom, qa.obj.top)
    eye_it = intmat.identity(iobj.top.ngens)
    eye_ib = intmat.identity(iobj.bottom.ngens)
    sys.add_equation(
        [
            (1, qa.obj.boundary.mat, "t1", eye_it),
            (-1, intmat.identity(qa.obj.bottom.ngens), "t0", iobj.boundary.mat),
        ],
        intmat.zeros(qa.obj.bottom.ngens, iobj.top.ngens),
        qa.obj.bottom,
        iobj.top.ngens,
    )
    # zp: q'_a . i1 => 0
    sys.add_equation(
        [
            (1, intmat.identity(qa.obj.top.ngens), "t1", i1.top.mat),
            (-1, intmat.identity(qa.obj.top.ngens), "zp", b.mor.src.boundary.mat),
        ],
        intmat.zeros(qa.obj.top.ngens, b.mor.src.top.ngens),
        qa.obj.top,
        b.mor.src.top.ngens,
    )
    sys.add_equation(
        [
            (1, intmat.identity(qa.obj.bottom.ngens), "t0", i1.bottom.mat),
            (-1, qa.obj.boundary.mat, "zp", intmat.identity(b.mor.src.bottom.ngens)),
        ],
        intmat.zeros(qa.obj.bottom.ngens, b.mor.src.bottom.ngens),
        qa.obj.bottom,
        b.mor.src.bottom.ngens,
    )
    # pi: qa_mor => q'_a . i2
    sys.add_equation(
        [
            (1, intmat.identity(qa.obj.top.ngens), "t1", i2.top.mat),
            (1, intmat.identity(qa.obj.top.ngens), "pi", a.mor.dst.boundary.mat),
        ],
        qa.qmor.top.mat,
        qa.obj.top,
        a.mor.dst.top.ngens,
    )
    sys.add_equation(
        [
            (1, intmat.identity(qa.obj.bottom.ngens), "t0", i2.bottom.mat),
            (1, qa.obj.boundary.mat, "pi", intmat.identity(a.mor.dst.bottom.ngens)),
        ],
        qa.qmor.bottom.mat,
        qa.obj.bottom,
        a.mor.dst.bottom.ngens,
    )
    # pasting: zp.f0 = t1.phi1 - pi.a0 + zeta_a
    sys.add_equation(
        [
            (1, intmat.identity(qa.obj.top.ngens), "zp", f.bottom.mat),
            (-1, intmat.identity(qa.obj.top.ngens), "t1", phi1.mat.mat),
            (1, intmat.identity(qa.obj.top.ngens), "pi", a.mor.bottom.mat),
        ],
        qa.zeta.mat.mat,
        qa.obj.top,
        a.mor.src.bottom.ngens,
    )
    sol = sys.solve()
    if sol is None:
        raise AssertionError("q'_a system is not solvable")
    qprime_a = two_morphism(iobj, qa.obj, sol["t1"], sol["t0"])
    zeta_pa = sol["zp"]

    d = compose2(qprime_a, kprime_c)

    # mu2: k'_c . gbar => i1 . kb_mor pinned by kappa_b = kappa'_c*gbar . c'*mu2
    mu2 = _solve_pinned_cell(
        compose2(kprime_c, gbar),
        compose2(i1, b.ker.kmor),
        pin_left=cprime.top,
        pin_rhs=compose(kappa_pc, gbar.bottom) - b.ker.kappa.mat,
    )

    delta = cell_to_zero(
        compose2(d, gbar),
        compose(qprime_a.top, mu2.mat) + compose(zeta_pa, b.ker.kmor.bottom),
    )

    # nu1: fbar2 . q'_a => qb . c' pinned by fbar2*zeta'_a + nu1*i1 = zeta_b
    nu1 = _solve_pinned_cell(
        compose2(fbar2, qprime_a),
        compose2(b.coker.qmor, cprime),
        pin_right=i1.bottom,
        pin_rhs=compose(fbar2.top, zeta_pa) - b.coker.zeta.mat,
    )

    delta_prime = cell_to_zero(
        compose2(fbar2, d),
        compose(nu1.mat, kprime_c.bottom) + compose(b.coker.qmor.top, kappa_pc),
    )

    # the triangle lemma's own kernel/cokernel cells, pinned as in its proof
    kappa_1 = compose(i2.top, a.ker.kappa.mat) + compose(phi1.mat, a.ker.kmor.bottom)
    etabar = _solve_pinned_cell(
        compose2(gbar, fbar),
        _zero_of(compose2(gbar, fbar)),
        pin_left=kprime_c.top,
        pin_rhs=kappa_1 + compose(mu2.mat, fbar.bottom),
    )
    zeta_3 = compose(c.coker.qmor.top, psi2.mat) + compose(c.coker.zeta.mat, j.bottom)
    etabar2 = _solve_pinned_cell(
        compose2(gbar2, fbar2),
        _zero_of(compose2(gbar2, fbar2)),
        pin_right=qprime_a.bottom,
        pin_rhs=zeta_3 + compose(gbar2.top, nu1.mat),
    )

    mu_a, mu_b, mu_c = mu_loop(a), mu_loop(b), mu_loop(c)
    _assert_mu_identities(
        fbar, etabar, gbar, delta, d, delta_prime, fbar2, etabar2, gbar2, mu_a, mu_b, mu_c
    )
    return SnakeResult(
        fbar, etabar, gbar, delta, d, delta_prime, fbar2, etabar2, gbar2,
        mu_a, mu_b, mu_c, a, b, c,
    )


def _solve_pinned_cell(u: TwoMorphism, v: TwoMorphism, pin_left=None, pin_right=None, pin_rhs=None) -> TwoCell:
    """A cell u => v whose left or right whisker is pinned to pin_rhs."""
    sys = LinearSystem(u.top.ring)
    sys.add_unknown("al", u.src.bottom, u.dst.top)
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
    if pin_left is not None:
        sys.add_equation(
            [(1, pin_left.mat, "al", eye_b)],
            pin_rhs.mat,
            pin_rhs.dst,
            u.src.bottom.ngens,
        )
    if pin_right is not None:
        sys.add_equation(
            [(1, intmat.identity(u.dst.top.ngens), "al", pin_right.mat)],
            pin_rhs.mat,
            pin_rhs.dst,
            pin_right.src.ngens,
        )
    sol = sys.solve()
    if sol is None:
        raise AssertionError("pinned connecting cell does not exist")
    return TwoCell(u, v, sol["al"])


def _assert_mu_identities(fbar, etabar, gbar, delta, d, delta_prime, fbar2, etabar2, gbar2, mu_a, mu_b, mu_c):
    id1 = compose(delta.mat, fbar.bottom) - compose(d.top, etabar.mat)
    if id1 != mu_a.mat:
        raise AssertionError("snake mu-identity 1 fails")
    id2 = compose(delta_prime.mat, gbar.bottom) - compose(fbar2.top, delta.mat)
    if id2 != -mu_b.mat:
        raise AssertionError("snake mu-identity 2 fails")
    id3 = compose(etabar2.mat, d.bottom) - compose(gbar2.top, delta_prime.mat)
    if id3 != mu_c.mat:
        raise AssertionError("snake mu-identity 3 fails")


def generalized_snake(
    f: TwoMorphism,
    eta: TwoCell,
    g: TwoMorphism,
    f2: TwoMorphism,
    eta2: TwoCell,
    g2: TwoMorphism,
    a: ColumnData,
    b: ColumnData,
    c: ColumnData,
    phi: TwoCell,
    psi: TwoCell,
) -> SnakeResult:
    """Rows with (g, eta) = Coker f and (f2, eta2) = Ker g2 only."""
    check_pasting(f, eta, g, f2, eta2, g2, a.mor, b.mor, c.mor, phi, psi)
    ring = f.top.ring

    # reduce the rows to extensions
    khat = kernel2(g)
    fhat, etahat = khat.kmor, khat.kappa
    m = factor_kernel2(khat, f, eta)
    chat_d = cokernel2(f2)
    ghat2, etahat2 = chat_d.qmor, chat_d.zeta
    nprime = factor_cokernel2(chat_d, g2, eta2)

    # columns of the inner diagram
    beta_ahat = vcomp2(whisker_left(c.mor, etahat), whisker_right(psi.inverse(), fhat))
    ahat, theta_a = factor_through_kernel_data(
        g2, f2, eta2, compose2(b.mor, fhat), beta_ahat
    )
    theta_chat_cell = vcomp2(whisker_right(etahat2, a.mor), whisker_left(ghat2, phi))
    chat, theta_c = factor_through_cokernel_data(
        f, g, eta, compose2(ghat2, b.mor), theta_chat_cell
    )

    # present Ker(chat) on Kc: solve nu: c => n'.chat with nu*g pinned,
    # then kappa_chat with n'*kappa_chat . nu*kc = kappa_c
    nu = _solve_pinned_cell(
        c.mor,
        compose2(nprime, chat),
        pin_right=g.bottom,
        pin_rhs=compose(nprime.top, theta_c.mat) + psi.mat,
    )
    kappa_chat = _solve_to_zero_pinned(
        compose2(chat, c.ker.kmor),
        pin_left=nprime.top,
        pin_rhs=c.ker.kappa.mat - compose(nu.mat, c.ker.kmor.bottom),
    )
    kc_side = KernelSide(c.ker.obj, c.ker.kmor, kappa_chat, None)

    # present Coker(ahat) on Qa: mu_m: a => ahat.m with f2-whisker pinned,
    # then zeta_ahat with zeta_ahat*m + qa*mu_m = zeta_a
    mu_m = _solve_pinned_cell(
        a.mor,
        compose2(ahat, m),
        pin_left=f2.top,
        pin_rhs=compose(theta_a.mat, m.bottom) - phi.mat,
    )
    zeta_ahat = _solve_to_zero_pinned(
        compose2(a.coker.qmor, ahat),
        pin_right=m.bottom,
        pin_rhs=a.coker.zeta.mat - compose(a.coker.qmor.top, mu_m.mat),
    )
    qa_side = CokernelSide(a.coker.obj, a.coker.qmor, zeta_ahat, None)

    inner = plain_snake(
        fhat,
        etahat,
        g,
        f2,
        etahat2,
        ghat2,
        ColumnData(ahat, column_data(ahat).ker, qa_side),
        b,
        ColumnData(chat, kc_side, column_data(chat).coker),
        theta_a,
        theta_c.inverse(),
    )

    # outer induced maps on the original columns
    beta_f = vcomp2(whisker_left(f2, a.ker.kappa), whisker_right(phi, a.ker.kmor))
    fbar, _ = _factor_ker(b.ker, b.mor, compose2(f, a.ker.kmor), beta_f)
    beta_g = vcomp2(whisker_left(g2, b.ker.kappa), whisker_right(psi, b.ker.kmor))
    gbar, _ = _factor_ker(c.ker, c.mor, compose2(g, b.ker.kmor), beta_g)
    theta_f = vcomp2(whisker_right(b.coker.zeta, f), whisker_left(b.coker.qmor, phi.inverse()))
    fbar2, _ = _factor_coker(a.coker, a.mor, compose2(b.coker.qmor, f2), theta_f)
    theta_g = vcomp2(whisker_right(c.coker.zeta, g), whisker_left(c.coker.qmor, psi.inverse()))
    gbar2, _ = _factor_coker(b.coker, b.mor, compose2(c.coker.qmor, g2), theta_g)
    etabar = cell_to_zero(compose2(gbar, fbar), compose(eta.mat, a.ker.kmor.bottom))
    etabar2 = cell_to_zero(compose2(gbar2, fbar2), compose(c.coker.qmor.top, eta2.mat))

    d = inner.d
    mu_a, mu_b, mu_c = mu_loop(a), mu_loop(b), mu_loop(c)
    # re-solve the connecting cells against the outer data, pinned by the
    # three mu-identities
    sys = LinearSystem(ring)
    kb_bottom = b.ker.obj.bottom
    sys.add_unknown("de", kb_bottom, a.coker.obj.top)
    sys.add_unknown("dp", c.ker.obj.bottom, b.coker.obj.top)
    dg = compose2(d, gbar)
    fd = compose2(fbar2, d)
    eye_kb = intmat.identity(kb_bottom.ngens)
    eye_kc = intmat.identity(c.ker.obj.bottom.ngens)
    # delta: d.gbar => 0
    sys.add_equation(
        [(1, intmat.identity(a.coker.obj.top.ngens), "de", b.ker.obj.boundary.mat)],
        dg.top.mat,
        a.coker.obj.top,
        b.ker.obj.top.ngens,
    )
    sys.add_equation(
        [(1, a.coker.obj.boundary.mat, "de", eye_kb)],
        dg.bottom.mat,
        a.coker.obj.bottom,
        kb_bottom.ngens,
    )
    # delta': fbar2.d => 0
    sys.add_equation(
        [(1, intmat.identity(b.coker.obj.top.ngens), "dp", c.ker.obj.boundary.mat)],
        fd.top.mat,
        b.coker.obj.top,
        c.ker.obj.top.ngens,
    )
    sys.add_equation(
        [(1, b.coker.obj.boundary.mat, "dp", eye_kc)],
        fd.bottom.mat,
        b.coker.obj.bottom,
        c.ker.obj.bottom.ngens,
    )
    # identity 1: delta.fbar0 = mu_a + d1.etabar
    sys.add_equation(
        [(1, intmat.identity(a.coker.obj.top.ngens), "de", fbar.bottom.mat)],
        (mu_a.mat + compose(d.top, etabar.mat)).mat,
        a.coker.obj.top,
        a.ker.obj.bottom.ngens,
    )
    # identity 2: delta'.gbar0 - fbar2_1.delta = -mu_b
    sys.add_equation(
        [
            (1, intmat.identity(b.coker.obj.top.ngens), "dp", gbar.bottom.mat),
            (-1, fbar2.top.mat, "de", eye_kb),
        ],
        (-mu_b.mat).mat,
        b.coker.obj.top,
        kb_bottom.ngens,
    )
    # identity 3: gbar2_1.delta' = etabar2.d0 - mu_c
    sys.add_equation(
        [(1, gbar2.top.mat, "dp", eye_kc)],
        (compose(etabar2.mat, d.bottom) - mu_c.mat).mat,
        c.coker.obj.top,
        c.ker.obj.bottom.ngens,
    )
    sol = sys.solve()
    if sol is None:
        raise AssertionError("generalized snake connecting cells do not exist")
    delta = TwoCell(dg, _zero_of(dg), sol["de"])
    delta_prime = TwoCell(fd, _zero_of(fd), sol["dp"])
    _assert_mu_identities(
        fbar, etabar, gbar, delta, d, delta_prime, fbar2, etabar2, gbar2, mu_a, mu_b, mu_c
    )
    return SnakeResult(
        fbar, etabar, gbar, delta, d, delta_prime, fbar2, etabar2, gbar2,
        mu_a, mu_b, mu_c, a, b, c,
    )


def _zero_of(u: TwoMorphism) -> TwoMorphism:
    from .core2 import zero2

    return zero2(u.src, u.dst)


def _solve_to_zero_pinned(u: TwoMorphism, pin_left=None, pin_right=None, pin_rhs=None) -> TwoCell:
    """A cell u => 0 with a pinned whisker."""
    return _solve_pinned_cell(u, _zero_of(u), pin_left=pin_left, pin_right=pin_right, pin_rhs=pin_rhs)
