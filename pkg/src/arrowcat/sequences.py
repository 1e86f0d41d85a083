"""Sequences, exactness oracles, homology.

Exactness at an object is decided through both canonical routes - the
comparison out of the cokernel must be fully faithful, the comparison into
the kernel fully cofaithful - and the two verdicts are asserted to agree.
Relative exactness is decided by triviality of the homology object, whose
two constructions (relative cokernel of the induced arrow, relative kernel
of the dual one) are built and compared by an explicit equivalence.
"""

from __future__ import annotations

from dataclasses import dataclass

from .basemor import compose, zero_mor
from .classify2 import ArrowClassification, classify2
from .core2 import (
    TwoCell,
    TwoMorphism,
    TwoObject,
    cell_to_zero,
    compose2,
    identity_cell,
    is_zero_equivalent,
    zero2,
    zero_two_object,
)
from .limits2 import (
    RelCokernelData,
    RelKernelData,
    cokernel2,
    factor_cokernel2,
    factor_kernel2,
    factor_rel_cokernel2,
    factor_rel_kernel2,
    factor_through_epi,
    factor_through_mono,
    kernel2,
    omega_obj,
    rel_cokernel2,
    rel_kernel2,
    sigma_obj,
)


def is_compatible(t: TwoMorphism, alpha: TwoCell, v: TwoMorphism, beta: TwoCell) -> bool:
    """Compatibility of alpha: u.t => 0 with beta: v.u => 0 (shared middle u)."""
    if alpha.src != t.src or beta.dst != v.dst:
        raise ValueError("compatibility shapes do not match")
    if t.dst != beta.src or v.src != alpha.dst:
        raise ValueError("compatibility shapes do not match")
    return compose(v.top, alpha.mat) == compose(beta.mat, t.bottom)


def exact_at(a: TwoMorphism, alpha: TwoCell, b: TwoMorphism) -> bool:
    """Exactness of the sequence (a, alpha, b) at the middle object.

    alpha must be a cell b.a => 0; both dual decision routes are computed
    and must agree.
    """
    _check_nullhomotopy(a, alpha, b)
    cd = cokernel2(a)
    b_prime = factor_cokernel2(cd, b, alpha)
    via_coker = classify2(b_prime).fully_faithful
    kd = kernel2(b)
    a_prime = factor_kernel2(kd, a, alpha)
    via_ker = classify2(a_prime).fully_cofaithful
    if via_coker != via_ker:
        raise AssertionError("the two exactness routes disagree")
    return via_coker


def _check_nullhomotopy(a: TwoMorphism, alpha: TwoCell, b: TwoMorphism):
    if a.dst != b.src:
        raise ValueError("sequence does not compose")
    if alpha.cfrom != compose2(b, a) or not alpha.cto.is_zero_mor():
        raise ValueError("alpha must be a cell b.a => 0")


def loop_exact(pi: TwoCell) -> bool:
    """Exactness of a loop 0 => 0: A -> B (the middle object is 0)."""
    z = zero_two_object(pi.src.ring)
    a = zero2(pi.src, z)
    b = zero2(z, pi.dst)
    alpha = cell_to_zero(compose2(b, a), pi.mat)
    return exact_at(a, alpha, b)


def loop_bar(pi: TwoCell) -> TwoMorphism:
    """pi_bar: Sigma A -> B with pi = pi_bar * sigma_A."""
    sg = sigma_obj(pi.src)
    top = factor_through_epi(sg.loop.mat, pi.mat)
    return TwoMorphism(sg.obj, pi.dst, top, zero_mor(sg.obj.bottom, pi.dst.bottom))


def loop_tilde(pi: TwoCell) -> TwoMorphism:
    """pi_tilde: A -> Omega B with pi = omega_B * pi_tilde."""
    om = omega_obj(pi.dst)
    bottom = factor_through_mono(om.loop.mat, pi.mat)
    return TwoMorphism(pi.src, om.obj, zero_mor(pi.src.top, om.obj.top), bottom)


def is_extension(a: TwoMorphism, alpha: TwoCell, b: TwoMorphism) -> bool:
    """(a, alpha) = Ker b and (b, alpha) = Coker a, both up to equivalence."""
    _check_nullhomotopy(a, alpha, b)
    kd = kernel2(b)
    a_prime = factor_kernel2(kd, a, alpha)
    if not classify2(a_prime).equivalence:
        return False
    cd = cokernel2(a)
    b_prime = factor_cokernel2(cd, b, alpha)
    return classify2(b_prime).equivalence


@dataclass(frozen=True)
class HomologyResult:
    obj: TwoObject
    qprime: TwoMorphism  # K(b, psi) -> H
    kprime: TwoMorphism  # H -> Q(a, phi)
    zeta_prime: TwoCell  # qprime . a' => 0
    kappa_prime: TwoCell  # b' . kprime => 0
    eta: TwoCell  # q.k => kprime.qprime
    comparison: TwoMorphism  # the coker-route H -> ker-route H
    comparison_flags: ArrowClassification
    rel_kernel: RelKernelData
    rel_cokernel: RelCokernelData
    a_induced: TwoMorphism
    b_induced: TwoMorphism


def homology_at(
    x: TwoMorphism,
    phi: TwoCell,
    a: TwoMorphism,
    alpha: TwoCell,
    b: TwoMorphism,
    psi: TwoCell,
    y: TwoMorphism,
) -> HomologyResult:
    """Homology at the middle object of x -> A -a-> B -b-> C -> y."""
    _check_nullhomotopy(x, phi, a)
    _check_nullhomotopy(a, alpha, b)
    _check_nullhomotopy(b, psi, y)
    if not is_compatible(x, phi, b, alpha):
        raise ValueError("phi and alpha are not compatible")
    if not is_compatible(a, alpha, y, psi):
        raise ValueError("alpha and psi are not compatible")
    rk = rel_kernel2(b, y, psi)
    rc = rel_cokernel2(a, x, phi)
    a_ind = factor_rel_kernel2(rk, a, alpha)
    b_ind = factor_rel_cokernel2(rc, b, alpha)
    phi_prime = cell_to_zero(compose2(a_ind, x), phi.mat)
    psi_prime = cell_to_zero(compose2(y, b_ind), psi.mat)
    h_coker = rel_cokernel2(a_ind, x, phi_prime)
    h_kernel = rel_kernel2(b_ind, y, psi_prime)
    s = compose2(rc.qmor, rk.kmor)
    zeta_s = cell_to_zero(compose2(s, a_ind), rc.zeta.mat)
    w_tilde = factor_rel_cokernel2(h_coker, s, zeta_s)
    kappa_w = cell_to_zero(compose2(b_ind, w_tilde), rk.kappa.mat)
    w = factor_rel_kernel2(h_kernel, w_tilde, kappa_w)
    flags = classify2(w)
    if not flags.equivalence:
        raise AssertionError("the two homology constructions are not equivalent")
    eta = identity_cell(compose2(w_tilde, h_coker.qmor))
    if compose2(w_tilde, h_coker.qmor) != s:
        raise AssertionError("homology comparison is not strict")
    return HomologyResult(
        obj=h_coker.obj,
        qprime=h_coker.qmor,
        kprime=w_tilde,
        zeta_prime=h_coker.zeta,
        kappa_prime=kappa_w,
        eta=eta,
        comparison=w,
        comparison_flags=flags,
        rel_kernel=rk,
        rel_cokernel=rc,
        a_induced=a_ind,
        b_induced=b_ind,
    )


def relative_exact_at(
    x: TwoMorphism,
    phi: TwoCell,
    a: TwoMorphism,
    alpha: TwoCell,
    b: TwoMorphism,
    psi: TwoCell,
    y: TwoMorphism,
) -> bool:
    """Relative exactness decided by triviality of the homology object."""
    h = homology_at(x, phi, a, alpha, b, psi, y)
    return is_zero_equivalent(h.obj)


def pad_exact_at(a: TwoMorphism, alpha: TwoCell, b: TwoMorphism) -> bool:
    """Plain exactness embedded as relative exactness with zero ends."""
    z_src = zero_two_object(a.top.ring)
    z_dst = zero_two_object(a.top.ring)
    x = zero2(z_src, a.src)
    y = zero2(b.dst, z_dst)
    phi = identity_cell(compose2(a, x))
    psi = identity_cell(compose2(y, b))
    return relative_exact_at(x, phi, a, alpha, b, psi, y)


@dataclass(frozen=True)
class ComplexSequence:
    """A finite window of a chain complex of squares.

    objects[i] sits in degree lo + i; diffs[i]: objects[i] -> objects[i+1];
    cells[i]: diffs[i+1] . diffs[i] => 0.  Everything outside the window is
    the zero object.  Adjacent nullhomotopies must be compatible.
    """

    lo: int
    objects: tuple[TwoObject, ...]
    diffs: tuple[TwoMorphism, ...]
    cells: tuple[TwoCell, ...]

    def __post_init__(self):
        n = len(self.objects)
        if len(self.diffs) != max(n - 1, 0) or len(self.cells) != max(n - 2, 0):
            raise ValueError("window lengths do not match")
        for i, d in enumerate(self.diffs):
            if d.src != self.objects[i] or d.dst != self.objects[i + 1]:
                raise ValueError(f"differential {i} has wrong endpoints")
        for i, c in enumerate(self.cells):
            if c.cfrom != compose2(self.diffs[i + 1], self.diffs[i]) or not c.cto.is_zero_mor():
                raise ValueError(f"cell {i} is not a nullhomotopy of the composite")
        for i in range(len(self.cells) - 1):
            if not is_compatible(self.diffs[i], self.cells[i], self.diffs[i + 2], self.cells[i + 1]):
                raise ValueError(f"cells {i} and {i + 1} are not compatible")

    @property
    def hi(self) -> int:
        return self.lo + len(self.objects) - 1

    def ring(self):
        return self.objects[0].ring if self.objects else None


def padded_window(cx: ComplexSequence, n: int):
    """(x, phi, a, alpha, b, psi, y) centered at degree n, zero-padded."""
    ring = cx.ring()
    z = zero_two_object(ring)

    def obj(k: int) -> TwoObject:
        return cx.objects[k - cx.lo] if cx.lo <= k <= cx.hi else z

    def diff(k: int) -> TwoMorphism:
        if cx.lo <= k <= cx.hi - 1:
            return cx.diffs[k - cx.lo]
        return zero2(obj(k), obj(k + 1))

    def cell(k: int) -> TwoCell:
        if cx.lo <= k <= cx.hi - 2:
            return cx.cells[k - cx.lo]
        return cell_to_zero(
            compose2(diff(k + 1), diff(k)), zero_mor(obj(k).bottom, obj(k + 2).top)
        )

    return (
        diff(n - 2),
        cell(n - 2),
        diff(n - 1),
        cell(n - 1),
        diff(n),
        cell(n),
        diff(n + 1),
    )


def complex_homology_at(cx: ComplexSequence, n: int) -> HomologyResult:
    """Homology of the padded complex at the object in degree n."""
    x, phi, a, alpha, b, psi, y = padded_window(cx, n)
    return homology_at(x, phi, a, alpha, b, psi, y)
