"""Seeded random instances: objects, squares, cells, extensions, complexes.

Everything is driven by random.Random(seed), so identical seeds reproduce
identical instances.  Structured instances (extensions, chain-complex
extensions, lemma diagrams) are built constructively - biproduct skeletons
conjugated by homotopy deformations - never by rejection, so the advertised
hypotheses hold by construction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd

from . import intmat
from .baselin import LinearSystem
from .baseobj import BaseObject, field_object, make_object, zero_object
from .basemor import BaseMorphism, base_morphism, compose, zero_mor
from .core2 import (
    TwoCell,
    TwoMorphism,
    TwoObject,
    cell_to_zero,
    compose2,
    deform,
    identity_cell,
    two_morphism,
    vcomp2,
    whisker_left,
    whisker_right,
)
from .limits2 import biproduct2
from .rings import BaseRing


@dataclass
class Bounds:
    max_dim: int = 3
    max_entry: int = 4
    max_torsion: int = 8

    def __post_init__(self):
        if self.max_dim > 6:
            raise ValueError("max dimension is 6")
        if self.max_entry > 9:
            raise ValueError("entries are bounded by 9")


def random_base_object(rng: random.Random, ring: BaseRing, bounds: Bounds) -> BaseObject:
    n = rng.randrange(0, bounds.max_dim + 1)
    if ring.is_field:
        return field_object(ring, n)
    free = 0
    tors = []
    d = 1
    for _ in range(n):
        if rng.random() < 0.45:
            free += 1
            continue
        d = rng.choice([2, 2, 3, 4]) if d == 1 else d * rng.choice([1, 1, 2])
        if d > bounds.max_torsion:
            free += 1
        else:
            tors.append(d)
    return make_object(ring, tuple(tors) + (0,) * free)


def random_finite_object(rng: random.Random, ring: BaseRing, max_order: int = 64) -> BaseObject:
    """A finite object of total order at most max_order (used by brute-force oracles)."""
    if ring.is_field:
        p = ring.p
        n = 0
        while p ** (n + 1) <= max_order and n < 6 and rng.random() < 0.7:
            n += 1
        return field_object(ring, n)
    orders = []
    total = 1
    d = rng.choice([2, 2, 3, 4])
    while total * d <= max_order and rng.random() < 0.75:
        orders.append(d)
        total *= d
        d = d * rng.choice([1, 1, 2])
    return make_object(ring, tuple(orders))


def random_base_morphism(rng: random.Random, src: BaseObject, dst: BaseObject, bounds: Bounds) -> BaseMorphism:
    rows = []
    for e in dst.orders:
        row = []
        for d in src.orders:
            if d == 0:
                hi = e if e else 2 * bounds.max_entry + 1
                x = rng.randrange(0, hi) if e else rng.randint(-bounds.max_entry, bounds.max_entry)
            elif e == 0:
                x = 0
            else:
                step = e // gcd(e, d)
                x = step * rng.randrange(0, e // step)
            row.append(x)
        rows.append(row)
    return base_morphism(src, dst, rows)


def random_two_object(rng: random.Random, ring: BaseRing, bounds: Bounds) -> TwoObject:
    top = random_base_object(rng, ring, bounds)
    bottom = random_base_object(rng, ring, bounds)
    return TwoObject(random_base_morphism(rng, top, bottom, bounds))


def _sample_system(rng: random.Random, sys: LinearSystem, spread: int = 2) -> dict[str, BaseMorphism]:
    sol = sys.solve()
    if sol is None:
        raise AssertionError("sampling system must be solvable")
    basis = sys.homogeneous_basis()
    coeffs = [rng.randint(-spread, spread) for _ in basis]
    picks = {}
    for name, m in sol.items():
        acc = [list(r) for r in m.mat]
        for c, entry in zip(coeffs, basis):
            if c == 0:
                continue
            raw = entry[name]
            for i, row in enumerate(raw):
                for j, x in enumerate(row):
                    acc[i][j] += c * x
        picks[name] = base_morphism(m.src, m.dst, acc)
    return picks


def random_square(rng: random.Random, a: TwoObject, b: TwoObject) -> TwoMorphism:
    sys = LinearSystem(a.ring)
    sys.add_unknown("u1", a.top, b.top)
    sys.add_unknown("u0", a.bottom, b.bottom)
    sys.add_equation(
        [
            (1, b.boundary.mat, "u1", intmat.identity(a.top.ngens)),
            (-1, intmat.identity(b.bottom.ngens), "u0", a.boundary.mat),
        ],
        intmat.zeros(b.bottom.ngens, a.top.ngens),
        b.bottom,
        a.top.ngens,
    )
    picks = _sample_system(rng, sys)
    return two_morphism(a, b, picks["u1"], picks["u0"])


def random_cell_on(rng: random.Random, u: TwoMorphism, bounds: Bounds) -> TwoCell:
    alpha = random_base_morphism(rng, u.src.bottom, u.dst.top, bounds)
    return deform(u, alpha)


def random_self_equivalence(rng: random.Random, x: TwoObject, bounds: Bounds) -> TwoMorphism:
    """A square x -> x homotopic to the identity (hence an equivalence)."""
    from .core2 import identity2

    alpha = random_base_morphism(rng, x.bottom, x.top, bounds)
    return deform(identity2(x), alpha).cto


@dataclass(frozen=True)
class ExtensionInstance:
    m: TwoMorphism  # A -> M
    cell: TwoCell  # e.m => 0
    e: TwoMorphism  # M -> C


def random_extension(rng: random.Random, ring: BaseRing, bounds: Bounds) -> ExtensionInstance:
    a = random_two_object(rng, ring, bounds)
    c = random_two_object(rng, ring, bounds)
    return extension_on(rng, a, c, bounds)


def extension_on(rng: random.Random, a: TwoObject, c: TwoObject, bounds: Bounds) -> ExtensionInstance:
    bp = biproduct2([a, c])
    m = bp.injections[0]
    e = bp.projections[1]
    cell = cell_to_zero(compose2(e, m), zero_mor(a.bottom, c.top))
    # deform both legs, transporting the nullhomotopy along the whiskers
    chi = random_base_morphism(rng, a.bottom, bp.obj.top, bounds)
    dm = deform(m, chi)
    m2 = dm.cto
    xi = random_base_morphism(rng, bp.obj.bottom, c.top, bounds)
    de = deform(e, xi)
    e2 = de.cto
    # e2.m2 => e2.m => e.m => 0
    c1 = whisker_left(e2, dm.inverse())
    c2 = whisker_right(de.inverse(), m)
    total = vcomp2(cell, vcomp2(c2, c1))
    return ExtensionInstance(m2, total, e2)


@dataclass(frozen=True)
class ComplexInstance:
    lo: int
    hi: int
    objects: list[TwoObject]
    diffs: list[TwoMorphism]  # diffs[i]: objects[i] -> objects[i+1]
    cells: list[TwoCell]  # cells[i]: diffs[i+1] . diffs[i] => 0


def random_complex(rng: random.Random, ring: BaseRing, length: int, bounds: Bounds) -> ComplexInstance:
    objs = [random_two_object(rng, ring, bounds) for _ in range(length)]
    diffs: list[TwoMorphism] = []
    cells: list[TwoCell] = []
    for i in range(length - 1):
        if i == 0:
            diffs.append(random_square(rng, objs[0], objs[1]))
            continue
        prev = diffs[i - 1]
        nxt, cell = _next_differential(rng, prev, objs[i + 1], cells[-1] if cells else None, diffs)
        diffs.append(nxt)
        cells.append(cell)
    return ComplexInstance(0, length - 1, objs, diffs, cells)


def _next_differential(rng, prev: TwoMorphism, target: TwoObject, prev_cell: TwoCell | None, diffs):
    """Sample (d, alpha) with alpha: d.prev => 0 and alpha compatible with the
    previous nullhomotopy."""
    a, b = prev.src, prev.dst
    sys = LinearSystem(a.ring)
    sys.add_unknown("d1", b.top, target.top)
    sys.add_unknown("d0", b.bottom, target.bottom)
    sys.add_unknown("al", a.bottom, target.top)
    eye_at = intmat.identity(a.top.ngens)
    eye_ab = intmat.identity(a.bottom.ngens)
    # square condition for d
    sys.add_equation(
        [
            (1, target.boundary.mat, "d1", intmat.identity(b.top.ngens)),
            (-1, intmat.identity(target.bottom.ngens), "d0", b.boundary.mat),
        ],
        intmat.zeros(target.bottom.ngens, b.top.ngens),
        target.bottom,
        b.top.ngens,
    )
    # cell condition: (d.prev).top = al . dA, (d.prev).bottom = dT . al
    sys.add_equation(
        [
            (1, intmat.identity(target.top.ngens), "d1", prev.top.mat),
            (-1, intmat.identity(target.top.ngens), "al", a.boundary.mat),
        ],
        intmat.zeros(target.top.ngens, a.top.ngens),
        target.top,
        a.top.ngens,
    )
    sys.add_equation(
        [
            (1, intmat.identity(target.bottom.ngens), "d0", prev.bottom.mat),
            (-1, target.boundary.mat, "al", eye_ab),
        ],
        intmat.zeros(target.bottom.ngens, a.bottom.ngens),
        target.bottom,
        a.bottom.ngens,
    )
    if prev_cell is not None:
        # compatibility with the previous cell: d1 . prev_cell = al . (prev prev).bottom
        pp = prev_cell.src  # object two steps back
        sys.add_equation(
            [
                (1, intmat.identity(target.top.ngens), "d1", prev_cell.mat.mat),
                (-1, intmat.identity(target.top.ngens), "al", diffs[-2].bottom.mat),
            ],
            intmat.zeros(target.top.ngens, pp.bottom.ngens),
            target.top,
            pp.bottom.ngens,
        )
    picks = _sample_system(rng, sys)
    d = two_morphism(b, target, picks["d1"], picks["d0"])
    alpha = cell_to_zero(compose2(d, prev), picks["al"])
    return d, alpha


@dataclass(frozen=True)
class ComplexExtensionInstance:
    sub: ComplexInstance  # A.
    total: ComplexInstance  # B. = A. (+) C. degreewise
    quot: ComplexInstance  # C.
    maps_in: list[TwoMorphism]  # f_n: A_n -> B_n
    maps_in_cells: list[TwoCell]  # b_n f_n => f_{n+1} a_n
    maps_out: list[TwoMorphism]  # g_n: B_n -> C_n
    maps_out_cells: list[TwoCell]
    omegas: list[TwoCell]  # g_n f_n => 0


def random_complex_extension(rng, ring, length, bounds) -> ComplexExtensionInstance:
    sub = random_complex(rng, ring, length, bounds)
    quot = random_complex(rng, ring, length, bounds)
    objs = []
    injs = []
    projs = []
    for an, cn in zip(sub.objects, quot.objects):
        bp = biproduct2([an, cn])
        objs.append(bp.obj)
        injs.append(bp.injections)
        projs.append(bp.projections)
    diffs = []
    cells = []
    for i in range(length - 1):
        bi = compose2(injs[i + 1][0], compose2(sub.diffs[i], projs[i][0])) + compose2(
            injs[i + 1][1], compose2(quot.diffs[i], projs[i][1])
        )
        diffs.append(bi)
    for i in range(length - 2):
        comp = compose2(diffs[i + 1], diffs[i])
        mat = (
            compose(
                compose(injs[i + 2][0].top, sub.cells[i].mat), projs[i][0].bottom
            )
            + compose(
                compose(injs[i + 2][1].top, quot.cells[i].mat), projs[i][1].bottom
            )
        )
        cells.append(cell_to_zero(comp, mat))
    total = ComplexInstance(0, length - 1, objs, diffs, cells)
    maps_in = [injs[i][0] for i in range(length)]
    maps_out = [projs[i][1] for i in range(length)]
    in_cells = []
    out_cells = []
    omegas = []
    for i in range(length):
        omegas.append(cell_to_zero(compose2(maps_out[i], maps_in[i]), zero_mor(sub.objects[i].bottom, quot.objects[i].top)))
        if i < length - 1:
            in_cells.append(
                identity_like_cell(compose2(total.diffs[i], maps_in[i]), compose2(maps_in[i + 1], sub.diffs[i]))
            )
            out_cells.append(
                identity_like_cell(compose2(quot.diffs[i], maps_out[i]), compose2(maps_out[i + 1], total.diffs[i]))
            )
    return ComplexExtensionInstance(sub, total, quot, maps_in, in_cells, maps_out, out_cells, omegas)


def identity_like_cell(u: TwoMorphism, v: TwoMorphism) -> TwoCell:
    """The zero cell between two squares that are strictly equal."""
    if u != v:
        raise AssertionError("expected strictly equal composites")
    return identity_cell(u)


@dataclass(frozen=True)
class SnakeInstance:
    row1: tuple  # (f, eta, g)
    row2: tuple  # (f2, eta2, g2)
    cols: tuple  # (a, b, c)
    cells: tuple  # (phi, psi)


def random_snake_instance(rng: random.Random, ring: BaseRing, bounds: Bounds) -> SnakeInstance:
    """Two extension rows with jointly sampled columns and commuting cells."""
    a_obj = random_two_object(rng, ring, bounds)
    c_obj = random_two_object(rng, ring, bounds)
    a2_obj = random_two_object(rng, ring, bounds)
    c2_obj = random_two_object(rng, ring, bounds)
    r1 = extension_on(rng, a_obj, c_obj, bounds)
    r2 = extension_on(rng, a2_obj, c2_obj, bounds)
    return _connect_rows(rng, r1, r2)


def _connect_rows(rng, r1: ExtensionInstance, r2: ExtensionInstance) -> SnakeInstance:
    f, eta, g = r1.m, r1.cell, r1.e
    f2, eta2, g2 = r2.m, r2.cell, r2.e
    A, C, A2, C2 = f.src, g.dst, f2.src, g2.dst
    B1, B2 = f.dst, f2.dst
    ring = f.top.ring
    sys = LinearSystem(ring)
    for nm, (s, d) in dict(
        a1=(A.top, A2.top), a0=(A.bottom, A2.bottom),
        b1=(B1.top, B2.top), b0=(B1.bottom, B2.bottom),
        c1=(C.top, C2.top), c0=(C.bottom, C2.bottom),
        ph=(A.bottom, B2.top), ps=(B1.bottom, C2.top),
    ).items():
        sys.add_unknown(nm, s, d)

    def square(top, bot, x, y):
        sys.add_equation(
            [
                (1, y.boundary.mat, top, intmat.identity(x.top.ngens)),
                (-1, intmat.identity(y.bottom.ngens), bot, x.boundary.mat),
            ],
            intmat.zeros(y.bottom.ngens, x.top.ngens),
            y.bottom,
            x.top.ngens,
        )

    square("a1", "a0", A, A2)
    square("b1", "b0", B1, B2)
    square("c1", "c0", C, C2)
    sys.add_equation(
        [
            (1, intmat.identity(B2.top.ngens), "b1", f.top.mat),
            (-1, f2.top.mat, "a1", intmat.identity(A.top.ngens)),
            (-1, intmat.identity(B2.top.ngens), "ph", A.boundary.mat),
        ],
        intmat.zeros(B2.top.ngens, A.top.ngens),
        B2.top,
        A.top.ngens,
    )
    sys.add_equation(
        [
            (1, intmat.identity(B2.bottom.ngens), "b0", f.bottom.mat),
            (-1, f2.bottom.mat, "a0", intmat.identity(A.bottom.ngens)),
            (-1, B2.boundary.mat, "ph", intmat.identity(A.bottom.ngens)),
        ],
        intmat.zeros(B2.bottom.ngens, A.bottom.ngens),
        B2.bottom,
        A.bottom.ngens,
    )
    sys.add_equation(
        [
            (1, intmat.identity(C2.top.ngens), "c1", g.top.mat),
            (-1, g2.top.mat, "b1", intmat.identity(B1.top.ngens)),
            (-1, intmat.identity(C2.top.ngens), "ps", B1.boundary.mat),
        ],
        intmat.zeros(C2.top.ngens, B1.top.ngens),
        C2.top,
        B1.top.ngens,
    )
    sys.add_equation(
        [
            (1, intmat.identity(C2.bottom.ngens), "c0", g.bottom.mat),
            (-1, g2.bottom.mat, "b0", intmat.identity(B1.bottom.ngens)),
            (-1, C2.boundary.mat, "ps", intmat.identity(B1.bottom.ngens)),
        ],
        intmat.zeros(C2.bottom.ngens, B1.bottom.ngens),
        C2.bottom,
        B1.bottom.ngens,
    )
    sys.add_equation(
        [
            (1, eta2.mat.mat, "a0", intmat.identity(A.bottom.ngens)),
            (1, g2.top.mat, "ph", intmat.identity(A.bottom.ngens)),
            (1, intmat.identity(C2.top.ngens), "ps", f.bottom.mat),
            (-1, intmat.identity(C2.top.ngens), "c1", eta.mat.mat),
        ],
        intmat.zeros(C2.top.ngens, A.bottom.ngens),
        C2.top,
        A.bottom.ngens,
    )
    picks = _sample_system(rng, sys)
    a = two_morphism(f.src, f2.src, picks["a1"], picks["a0"])
    b = two_morphism(B1, B2, picks["b1"], picks["b0"])
    c = two_morphism(C, C2, picks["c1"], picks["c0"])
    phi = TwoCell(compose2(b, f), compose2(f2, a), picks["ph"])
    psi = TwoCell(compose2(c, g), compose2(g2, b), picks["ps"])
    return SnakeInstance((f, eta, g), (f2, eta2, g2), (a, b, c), (phi, psi))


def random_generalized_snake_instance(rng, ring, bounds) -> SnakeInstance:
    """Rows with (g, eta) = Coker f and (f2, eta2) = Ker g2 only.

    Built from a plain instance by precomposing the top row with a fully
    cofaithful square and postcomposing the bottom row with a fully faithful
    one, transporting the cells along the whiskers.
    """
    inst = random_snake_instance(rng, ring, bounds)
    f, eta, g = inst.row1
    f2, eta2, g2 = inst.row2
    a, b, c = inst.cols
    phi, psi = inst.cells
    # top row: precompose f with the projection that collapses a connected
    # summand (projections along connected objects are fully cofaithful)
    from .baseobj import zero_object

    w = random_base_object(rng, ring, bounds)
    pad = TwoObject(zero_mor(w, zero_object(ring)))
    bp = biproduct2([pad, f.src])
    r = bp.projections[1]
    f = compose2(f, r)
    eta = whisker_right(eta, r)
    a = compose2(a, r)
    phi = whisker_right(phi, r)
    # bottom row: postcompose g2 with the injection next to a discrete
    # summand (such injections are fully faithful)
    v = random_base_object(rng, ring, bounds)
    pad2 = TwoObject(zero_mor(zero_object(ring), v))
    bp2 = biproduct2([g2.dst, pad2])
    n = bp2.injections[0]
    g2 = compose2(n, g2)
    eta2 = whisker_left(n, eta2)
    c = compose2(n, c)
    psi = whisker_left(n, psi)
    return SnakeInstance((f, eta, g), (f2, eta2, g2), (a, b, c), (phi, psi))


def to_complex_sequence(ci: ComplexInstance):
    from .sequences import ComplexSequence

    return ComplexSequence(ci.lo, tuple(ci.objects), tuple(ci.diffs), tuple(ci.cells))


def to_chain_maps(ce: ComplexExtensionInstance):
    """(fmap, omegas, gmap) of a generated complex extension."""
    from .les import ChainMap

    sub = to_complex_sequence(ce.sub)
    tot = to_complex_sequence(ce.total)
    quo = to_complex_sequence(ce.quot)
    fmap = ChainMap(sub, tot, tuple(ce.maps_in), tuple(ce.maps_in_cells))
    gmap = ChainMap(tot, quo, tuple(ce.maps_out), tuple(ce.maps_out_cells))
    return fmap, tuple(ce.omegas), gmap


def _transport_square_cell(theta, dv, du, dw, dx):
    """theta: v.u => w.x transported along edge deformations d_e: e => e'.

    Path: v'.u' => v'.u => v.u => w.x => w'.x => w'.x'.
    """
    c1 = whisker_left(dv.cto, du.inverse())
    c2 = whisker_right(dv.inverse(), du.cfrom)
    c3 = whisker_right(dw, dx.cfrom)
    c4 = whisker_left(dw.cto, dx)
    return vcomp2(c4, vcomp2(c3, vcomp2(theta, vcomp2(c2, c1))))


def _transport_null_cell(eta, dg, df):
    """eta: g.f => 0 transported to g'.f' => 0."""
    c1 = whisker_left(dg.cto, df.inverse())
    c2 = whisker_right(dg.inverse(), df.cfrom)
    return vcomp2(eta, vcomp2(c2, c1))


@dataclass(frozen=True)
class ThreeByThreeInstance:
    f: tuple
    g: tuple
    eta: tuple
    a: tuple
    b: tuple
    c: tuple
    alpha: TwoCell
    beta: TwoCell
    gamma: TwoCell
    phi: tuple
    psi: tuple


def random_3x3_instance(rng: random.Random, ring: BaseRing, bounds: Bounds) -> ThreeByThreeInstance:
    """A commuting 3x3 grid with extension rows and columns: a block-diagonal
    skeleton on four random objects, deformed edgewise by homotopies with
    all ten cells transported along the whiskers."""
    from .core2 import identity2

    x = random_two_object(rng, ring, bounds)
    y = random_two_object(rng, ring, bounds)
    p = random_two_object(rng, ring, bounds)
    q = random_two_object(rng, ring, bounds)
    b1 = biproduct2([x, y])
    a2 = biproduct2([x, p])
    c2 = biproduct2([y, q])
    b3 = biproduct2([p, q])
    b2 = biproduct2([x, y, p, q])

    def blocks(src_bp, dst_bp, pairs):
        total = None
        for si, di in pairs:
            term = compose2(dst_bp.injections[di], src_bp.projections[si])
            total = term if total is None else total + term
        return total

    f1 = b1.injections[0]
    g1 = b1.projections[1]
    f2 = blocks(a2, b2, [(0, 0), (1, 2)])
    g2 = blocks(b2, c2, [(1, 0), (3, 1)])
    f3 = b3.injections[0]
    g3 = b3.projections[1]
    a1 = a2.injections[0]
    a2m = a2.projections[1]
    b1m = blocks(b1, b2, [(0, 0), (1, 1)])
    b2m = blocks(b2, b3, [(2, 0), (3, 1)])
    c1m = c2.injections[0]
    c2m = c2.projections[1]

    edges = {
        "f1": f1, "f2": f2, "f3": f3, "g1": g1, "g2": g2, "g3": g3,
        "a1": a1, "a2": a2m, "b1": b1m, "b2": b2m, "c1": c1m, "c2": c2m,
    }
    defs = {}
    for name, e in edges.items():
        alpha = random_base_morphism(rng, e.src.bottom, e.dst.top, bounds)
        defs[name] = deform(e, alpha)
    new = {k: d.cto for k, d in defs.items()}

    def zero_null(gm, fm):
        return cell_to_zero(compose2(gm, fm), zero_mor(fm.src.bottom, gm.dst.top))

    def zero_sq(vm, um, wm, xm):
        return TwoCell(compose2(vm, um), compose2(wm, xm), zero_mor(um.src.bottom, vm.dst.top))

    eta = tuple(
        _transport_null_cell(zero_null(edges[g_], edges[f_]), defs[g_], defs[f_])
        for f_, g_ in (("f1", "g1"), ("f2", "g2"), ("f3", "g3"))
    )
    alpha = _transport_null_cell(zero_null(edges["a2"], edges["a1"]), defs["a2"], defs["a1"])
    beta = _transport_null_cell(zero_null(edges["b2"], edges["b1"]), defs["b2"], defs["b1"])
    gamma = _transport_null_cell(zero_null(edges["c2"], edges["c1"]), defs["c2"], defs["c1"])
    phi = tuple(
        _transport_square_cell(
            zero_sq(edges[v], edges[u], edges[w], edges[xx]),
            defs[v], defs[u], defs[w], defs[xx],
        )
        for v, u, w, xx in (("b1", "f1", "f2", "a1"), ("b2", "f2", "f3", "a2"))
    )
    psi = tuple(
        _transport_square_cell(
            zero_sq(edges[v], edges[u], edges[w], edges[xx]),
            defs[v], defs[u], defs[w], defs[xx],
        )
        for v, u, w, xx in (("c1", "g1", "g2", "b1"), ("c2", "g2", "g3", "b2"))
    )
    return ThreeByThreeInstance(
        f=(new["f1"], new["f2"], new["f3"]),
        g=(new["g1"], new["g2"], new["g3"]),
        eta=eta,
        a=(new["a1"], new["a2"]),
        b=(new["b1"], new["b2"]),
        c=(new["c1"], new["c2"]),
        alpha=alpha, beta=beta, gamma=gamma,
        phi=phi, psi=psi,
    )


def random_shortfive_instance(rng, ring, bounds, flanks="random"):
    """A map of extensions; flanks: 'random' or 'equivalence'."""
    inst = random_snake_instance(rng, ring, bounds)
    if flanks == "random":
        return inst
    f, eta, g = inst.row1
    f2, eta2, g2 = inst.row2
    a = random_self_equivalence(rng, f.src, bounds)
    c = random_self_equivalence(rng, g.dst, bounds)
    # reuse the rows with equivalence flanks by re-solving the middle column
    sys = LinearSystem(ring)
    B1, B2 = f.dst, f2.dst
    # only valid when both rows share their end objects
    if f2.src != f.src or g2.dst != g.dst:
        return inst
    sys.add_unknown("b1", B1.top, B2.top)
    sys.add_unknown("b0", B1.bottom, B2.bottom)
    sys.add_unknown("ph", f.src.bottom, B2.top)
    sys.add_unknown("ps", B1.bottom, g2.dst.top)
    A, C = f.src, g.dst
    sys.add_equation(
        [
            (1, B2.boundary.mat, "b1", intmat.identity(B1.top.ngens)),
            (-1, intmat.identity(B2.bottom.ngens), "b0", B1.boundary.mat),
        ],
        intmat.zeros(B2.bottom.ngens, B1.top.ngens), B2.bottom, B1.top.ngens,
    )
    sys.add_equation(
        [
            (1, intmat.identity(B2.top.ngens), "b1", f.top.mat),
            (-1, intmat.identity(B2.top.ngens), "ph", A.boundary.mat),
        ],
        compose(f2.top, a.top).mat, B2.top, A.top.ngens,
    )
    sys.add_equation(
        [
            (1, intmat.identity(B2.bottom.ngens), "b0", f.bottom.mat),
            (-1, B2.boundary.mat, "ph", intmat.identity(A.bottom.ngens)),
        ],
        compose(f2.bottom, a.bottom).mat, B2.bottom, A.bottom.ngens,
    )
    sys.add_equation(
        [
            (1, g2.top.mat, "b1", intmat.identity(B1.top.ngens)),
            (-1, intmat.identity(C.top.ngens), "ps", B1.boundary.mat),
        ],
        compose(c.top, g.top).mat, C.top, B1.top.ngens,
    )
    sys.add_equation(
        [
            (1, g2.bottom.mat, "b0", intmat.identity(B1.bottom.ngens)),
            (-1, C.boundary.mat, "ps", intmat.identity(B1.bottom.ngens)),
        ],
        compose(c.bottom, g.bottom).mat, C.bottom, B1.bottom.ngens,
    )
    sys.add_equation(
        [
            (1, intmat.identity(C.top.ngens), "ps", f.bottom.mat),
            (1, g2.top.mat, "ph", intmat.identity(A.bottom.ngens)),
        ],
        (compose(c.top, eta.mat) - compose(eta2.mat, a.bottom)).mat,
        C.top, A.bottom.ngens,
    )
    sol = sys.solve()
    if sol is None:
        return inst
    b = two_morphism(B1, B2, sol["b1"], sol["b0"])
    phi = TwoCell(compose2(b, f), compose2(f2, a), sol["ph"])
    psi = TwoCell(compose2(c, g), compose2(g2, b), sol["ps"])
    return SnakeInstance((f, eta, g), (f2, eta2, g2), (a, b, c), (phi, psi))
