"""The long exact sequence of homology of an extension of chain complexes.

Per degree the connecting morphism comes from the generalized snake applied
to the rows  Q_n -> K_n  (relative cokernels over relative kernels) with
columns h_n, whose kernel/cokernel data are the homology presentations; the
assembled sequence ... H_n(A) -> H_n(B) -> H_n(C) -> H_{n+1}(A) ... is
verified exact at every point by the oracle, and over prime fields the pi0
and Omega shadows are checked classically by rank.
"""

from __future__ import annotations

from dataclasses import dataclass

from .basemor import compose, zero_mor
from .core2 import (
    TwoCell,
    TwoMorphism,
    TwoObject,
    cell_to_zero,
    compose2,
    vcomp2,
    whisker_left,
    whisker_right,
    zero2,
    zero_two_object,
)
from .limits2 import factor_rel_cokernel2, factor_rel_kernel2, solve_cell
from .sequences import ComplexSequence, HomologyResult, complex_homology_at, padded_window
from .snake import CokernelSide, ColumnData, KernelSide, generalized_snake


@dataclass(frozen=True)
class ChainMap:
    """A degreewise map of complexes with its connecting homotopies.

    squares[i]: src.objects[i] -> dst.objects[i]; cells[i] fills
    dst.diffs[i] . squares[i] => squares[i+1] . src.diffs[i].
    """

    src: ComplexSequence
    dst: ComplexSequence
    squares: tuple[TwoMorphism, ...]
    cells: tuple[TwoCell, ...]

    def __post_init__(self):
        n = len(self.src.objects)
        if len(self.dst.objects) != n or self.src.lo != self.dst.lo:
            raise ValueError("chain map between different windows")
        if len(self.squares) != n or len(self.cells) != max(n - 1, 0):
            raise ValueError("chain map data lengths are wrong")
        for i, c in enumerate(self.cells):
            if c.cfrom != compose2(self.dst.diffs[i], self.squares[i]):
                raise ValueError(f"chain cell {i} has the wrong source")
            if c.cto != compose2(self.squares[i + 1], self.src.diffs[i]):
                raise ValueError(f"chain cell {i} has the wrong target")
        for i in range(n - 2):
            lhs = (
                compose(self.squares[i + 2].top, self.src.cells[i].mat)
                + compose(self.cells[i + 1].mat, self.src.diffs[i].bottom)
                + compose(self.dst.diffs[i + 1].top, self.cells[i].mat)
            )
            rhs = compose(self.dst.cells[i].mat, self.squares[i].bottom)
            if lhs != rhs:
                raise ValueError(f"chain map coherence fails at degree {i}")

    def padded_square(self, n: int) -> TwoMorphism:
        """The degree-n component, zero between padded zero objects outside."""
        from .sequences import padded_window

        idx = n - self.src.lo
        if 0 <= idx < len(self.squares):
            return self.squares[idx]
        return zero2(_padded_obj(self.src, n), _padded_obj(self.dst, n))

    def padded_cell(self, n: int) -> TwoCell:
        idx = n - self.src.lo
        if 0 <= idx < len(self.cells):
            return self.cells[idx]
        lhs = compose2(_padded_diff(self.dst, n), self.padded_square(n))
        rhs = compose2(self.padded_square(n + 1), _padded_diff(self.src, n))
        return TwoCell(lhs, rhs, zero_mor(lhs.src.bottom, lhs.dst.top))


def _padded_obj(cx: ComplexSequence, n: int) -> TwoObject:
    if cx.lo <= n <= cx.hi:
        return cx.objects[n - cx.lo]
    return zero_two_object(cx.ring())


def _padded_diff(cx: ComplexSequence, n: int) -> TwoMorphism:
    if cx.lo <= n <= cx.hi - 1:
        return cx.diffs[n - cx.lo]
    return zero2(_padded_obj(cx, n), _padded_obj(cx, n + 1))


@dataclass(frozen=True)
class LesResult:
    degrees: tuple[int, ...]
    h_objects: dict
    maps: tuple[TwoMorphism, ...]
    cells: tuple[TwoCell, ...]
    snakes: tuple


def _h_map(cx: ComplexSequence, hr: dict[int, HomologyResult], n: int) -> TwoMorphism:
    """h_n: Q_n -> K_n through the homology presentations at n and n+1."""
    _, _, _, _, _, psi, y = padded_window(cx, n)
    avak = hr[n].b_induced  # Q_n -> X_{n+1}
    beta = cell_to_zero(compose2(y, avak), psi.mat)
    return factor_rel_kernel2(hr[n + 1].rel_kernel, avak, beta)


def les_homology(fmap: ChainMap, omegas: tuple[TwoCell, ...], gmap: ChainMap) -> LesResult:
    """fmap: A. -> B., gmap: B. -> C., omegas[i]: g_i f_i => 0; the extension
    must be pointwise (each (f_n, omega_n, g_n) an extension)."""
    ax, bx, cx = fmap.src, fmap.dst, gmap.dst
    if gmap.src != bx:
        raise ValueError("chain maps do not compose")
    lo, n_objs = ax.lo, len(ax.objects)
    degrees = list(range(lo - 1, lo + n_objs + 1))
    snake_degrees = degrees[:-1]
    complexes = (ax, bx, cx)
    hrs = [{n: complex_homology_at(x, n) for n in degrees} for x in complexes]
    h_maps = [
        {n: _h_map(x, hr, n) for n in snake_degrees}
        for x, hr in zip(complexes, hrs)
    ]

    snakes = []
    for n in snake_degrees:
        cols = []
        for hr, hm in zip(hrs, h_maps):
            hn = hm[n]
            ker_side = KernelSide(
                hr[n].obj,
                hr[n].kprime,
                cell_to_zero(compose2(hn, hr[n].kprime), hr[n].kappa_prime.mat),
                None,
            )
            coker_side = CokernelSide(
                hr[n + 1].obj,
                hr[n + 1].qprime,
                cell_to_zero(compose2(hr[n + 1].qprime, hn), hr[n + 1].zeta_prime.mat),
                None,
            )
            cols.append(ColumnData(hn, ker_side, coker_side))
        f_r = _coker_induced(fmap, hrs[0][n], hrs[1][n], n)
        g_r = _coker_induced(gmap, hrs[1][n], hrs[2][n], n)
        f_k = _ker_induced(fmap, hrs[0][n + 1], hrs[1][n + 1], n)
        g_k = _ker_induced(gmap, hrs[1][n + 1], hrs[2][n + 1], n)
        om_r = cell_to_zero(
            compose2(g_r, f_r),
            compose(hrs[2][n].rel_cokernel.qmor.top, _padded_omega(fmap, gmap, omegas, n).mat),
        )
        om_k = cell_to_zero(
            compose2(g_k, f_k),
            compose(_padded_omega(fmap, gmap, omegas, n + 1).mat, hrs[0][n + 1].rel_kernel.kmor.bottom),
        )
        # strictness of every factorization makes the chain homotopies the
        # canonical comparison cells between the induced rows
        phi_t = TwoCell(
            compose2(h_maps[1][n], f_r), compose2(f_k, h_maps[0][n]), fmap.padded_cell(n).mat
        )
        psi_t = TwoCell(
            compose2(h_maps[2][n], g_r), compose2(g_k, h_maps[1][n]), gmap.padded_cell(n).mat
        )
        snakes.append(
            generalized_snake(
                f_r, om_r, g_r, f_k, om_k, g_k, cols[0], cols[1], cols[2], phi_t, psi_t
            )
        )

    maps: list[TwoMorphism] = []
    cells: list[TwoCell] = []
    h_objects = {}
    for i in range(3):
        for n in degrees:
            h_objects[(i, n)] = hrs[i][n].obj
    for k, sn in enumerate(snakes):
        if k == 0:
            maps.extend([sn.fbar, sn.gbar])
            cells.append(sn.etabar)
        cells.append(sn.delta)
        maps.append(sn.d)
        if k + 1 < len(snakes):
            nxt = snakes[k + 1]
            seam = solve_cell(sn.fbar2, nxt.fbar)
            if seam is None:
                raise AssertionError("homology representatives do not match at a seam")
            dp = vcomp2(sn.delta_prime, whisker_right(seam.inverse(), sn.d))
            cells.append(dp)
            maps.extend([nxt.fbar, nxt.gbar])
            cells.append(nxt.etabar)
        else:
            cells.append(sn.delta_prime)
            maps.extend([sn.fbar2, sn.gbar2])
            cells.append(sn.etabar2)
    return LesResult(tuple(degrees), h_objects, tuple(maps), tuple(cells), tuple(snakes))


def les_full_sequence(res: LesResult):
    """Zero-capped maps and cells for exactness checking at every point."""
    ring = res.maps[0].top.ring
    z0, z1 = zero_two_object(ring), zero_two_object(ring)
    first = zero2(z0, res.maps[0].src)
    last = zero2(res.maps[-1].dst, z1)
    maps = (first,) + res.maps + (last,)
    head = cell_to_zero(
        compose2(res.maps[0], first), zero_mor(z0.bottom, res.maps[0].dst.top)
    )
    tail = cell_to_zero(
        compose2(last, res.maps[-1]), zero_mor(res.maps[-1].src.bottom, z1.top)
    )
    cells = (head,) + res.cells + (tail,)
    return maps, cells


def _padded_omega(fmap: ChainMap, gmap: ChainMap, omegas, n: int) -> TwoCell:
    idx = n - fmap.src.lo
    if 0 <= idx < len(omegas):
        return omegas[idx]
    comp = compose2(gmap.padded_square(n), fmap.padded_square(n))
    return cell_to_zero(comp, zero_mor(comp.src.bottom, comp.dst.top))


def _coker_induced(cmap: ChainMap, hr_src: HomologyResult, hr_dst: HomologyResult, n: int):
    rc_src, rc_dst = hr_src.rel_cokernel, hr_dst.rel_cokernel
    f_n = cmap.padded_square(n)
    w = compose2(rc_dst.qmor, f_n)
    theta = vcomp2(
        whisker_right(rc_dst.zeta, cmap.padded_square(n - 1)),
        whisker_left(rc_dst.qmor, cmap.padded_cell(n - 1).inverse()),
    )
    return factor_rel_cokernel2(rc_src, w, theta)


def _ker_induced(cmap: ChainMap, hr_src: HomologyResult, hr_dst: HomologyResult, n: int):
    rk_src, rk_dst = hr_src.rel_kernel, hr_dst.rel_kernel
    t = compose2(cmap.padded_square(n + 1), rk_src.kmor)
    beta = vcomp2(
        whisker_left(cmap.padded_square(n + 2), rk_src.kappa),
        whisker_right(cmap.padded_cell(n + 1), rk_src.kmor),
    )
    return factor_rel_kernel2(rk_dst, t, beta)


