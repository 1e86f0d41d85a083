"""Exact computational abelian category over F_p and Z.

Everything here reduces to integer congruence solving through the Smith
normal form: kernels, cokernels, biproducts, pullbacks/pushouts, morphism
solving, von Neumann splitting and arrow classification.  Objects are kept
in invariant-factor form at all times; morphisms produced here are always
re-expressed in the canonical generators.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import intmat
from .baseobj import BaseObject, make_object
from .basemor import BaseMorphism, base_morphism, compose, identity_mor, zero_mor
from .intmat import Matrix
from .rings import BaseRing
from .snf import kernel_lattice, smith_normal_form, solve_int


def relation_columns(x: BaseObject) -> Matrix:
    """Columns d_i * e_i for every torsion generator (n x ntors)."""
    cols = [(i, d) for i, d in enumerate(x.orders) if d != 0]
    m = [[0] * len(cols) for _ in range(x.ngens)]
    for j, (i, d) in enumerate(cols):
        m[i][j] = d
    return intmat.mat(m)


def _presentation_orders(ring: BaseRing, diag: list[int], ngens: int):
    """Orders of the canonical form given the SNF diagonal of the relations."""
    orders = []
    kept = []
    for i in range(ngens):
        d = diag[i] if i < len(diag) else 0
        if d == 1:
            continue
        kept.append(i)
        orders.append(d)
    return tuple(orders), kept


@dataclass(frozen=True)
class Presentation:
    """Canonical form of <ngens generators | relation columns>."""

    obj: BaseObject
    # coordinates of old generators in the canonical basis (obj.ngens x ngens)
    to_canon: Matrix
    # canonical generators expressed in the old coordinates (ngens x obj.ngens)
    from_canon: Matrix


def canonicalize(ring: BaseRing, ngens: int, relations: Matrix, nrel: int) -> Presentation:
    snf = smith_normal_form(relations, ngens, nrel)
    diag = [snf.d[i][i] for i in range(min(ngens, nrel))]
    orders, kept = _presentation_orders(ring, diag, ngens)
    obj = make_object(ring, orders)
    to_canon = tuple(
        tuple(_red(snf.u[i][j], orders[r]) for j in range(ngens))
        for r, i in enumerate(kept)
    )
    from_canon = tuple(tuple(snf.u_inv[i][j] for j in kept) for i in range(ngens))
    return Presentation(obj, to_canon, from_canon)


def _red(x: int, order: int) -> int:
    return x % order if order else x


def subgroup(ambient: BaseObject, gen_cols: Matrix, ncols: int):
    """The subgroup generated by columns of gen_cols, with its inclusion."""
    stacked = intmat.hstack([gen_cols, relation_columns(ambient)], ambient.ngens)
    ntors = sum(1 for d in ambient.orders if d != 0)
    basis = kernel_lattice(stacked, ambient.ngens, ncols + ntors)
    rel = tuple(tuple(v[j] for v in basis) for j in range(ncols))
    pres = canonicalize(ambient.ring, ncols, rel, len(basis))
    incl_cols = intmat.mul(gen_cols, pres.from_canon, ncols)
    incl = base_morphism(pres.obj, ambient, incl_cols)
    return pres.obj, incl, pres


def quotient(ambient: BaseObject, kill_cols: Matrix, ncols: int):
    """The quotient by the subgroup generated by kill_cols, with its projection."""
    rel = intmat.hstack([kill_cols, relation_columns(ambient)], ambient.ngens)
    ntors = sum(1 for d in ambient.orders if d != 0)
    pres = canonicalize(ambient.ring, ambient.ngens, rel, ncols + ntors)
    proj = base_morphism(ambient, pres.obj, pres.to_canon)
    return pres.obj, proj, pres


def kernel_base(f: BaseMorphism):
    """(K, k) with k mono, f.k = 0, universal among such."""
    if f.is_zero_mor():
        return f.src, identity_mor(f.src)
    stacked = intmat.hstack([f.mat, relation_columns(f.dst)], f.dst.ngens)
    ntors = sum(1 for d in f.dst.orders if d != 0)
    basis = kernel_lattice(stacked, f.dst.ngens, f.src.ngens + ntors)
    gen_cols = tuple(tuple(v[i] for v in basis) for i in range(f.src.ngens))
    k_obj, incl, _ = subgroup(f.src, gen_cols, len(basis))
    return k_obj, incl


def cokernel_base(f: BaseMorphism):
    """(Q, q) with q epi, q.f = 0, universal among such."""
    if f.is_zero_mor():
        return f.dst, identity_mor(f.dst)
    q_obj, proj, _ = quotient(f.dst, f.mat, f.src.ngens)
    return q_obj, proj


def image_comparison(f: BaseMorphism):
    """(I, m, e) with m mono, e epi and m.e = f."""
    i_obj, incl, pres = subgroup(f.dst, f.mat, f.src.ngens)
    # express each generator image of f in the canonical subgroup basis
    e = solve_base(incl, f)
    if e is None:
        raise AssertionError("image factorization must exist")
    return i_obj, incl, e


def biproduct_base(parts: list[BaseObject]):
    """(sum, injections, projections) with strict delta identities."""
    if not parts:
        raise ValueError("empty biproduct")
    ring = parts[0].ring
    if any(p.ring != ring for p in parts):
        raise ValueError("biproduct across rings")
    orders = [d for p in parts for d in p.orders]
    n = len(orders)
    rel_cols = [(i, d) for i, d in enumerate(orders) if d != 0]
    m = [[0] * len(rel_cols) for _ in range(n)]
    for j, (i, d) in enumerate(rel_cols):
        m[i][j] = d
    pres = canonicalize(ring, n, intmat.mat(m), len(rel_cols))
    injections = []
    projections = []
    off = 0
    for p in parts:
        cols = tuple(tuple(row[off + j] for j in range(p.ngens)) for row in pres.to_canon)
        injections.append(base_morphism(p, pres.obj, cols))
        rows = tuple(pres.from_canon[off + i] for i in range(p.ngens))
        projections.append(base_morphism(pres.obj, p, rows))
        off += p.ngens
    return pres.obj, injections, projections


def pullback_base(f: BaseMorphism, g: BaseMorphism):
    """(P, pA, pB) universal over the cospan f: A->C, g: B->C."""
    if f.dst != g.dst:
        raise ValueError("pullback needs a common target")
    ab, (ia, ib), (pa, pb) = biproduct_base([f.src, g.src])
    diff = compose(f, pa) - compose(g, pb)
    p_obj, incl = kernel_base(diff)
    return p_obj, compose(pa, incl), compose(pb, incl)


def pushout_base(f: BaseMorphism, g: BaseMorphism):
    """(P, iA, iB) universal under the span f: C->A, g: C->B."""
    if f.src != g.src:
        raise ValueError("pushout needs a common source")
    ab, (ia, ib), (pa, pb) = biproduct_base([f.dst, g.dst])
    diff = compose(ia, f) - compose(ib, g)
    q_obj, proj = cokernel_base(diff)
    return q_obj, compose(proj, ia), compose(proj, ib)


# ---------------------------------------------------------------------------
# Linear systems over the base: the workhorse behind solveBase, splitting and
# every universal-property factorization of the 2-dimensional layer.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _Unknown:
    src: BaseObject
    dst: BaseObject
    offset: int
    morphism: bool


class LinearSystem:
    """Linear equations in unknown matrices, solved as one integer system.

    Unknowns are matrices dst x src; declaring one as a morphism adds the
    well-definedness congruences.  Equations have the form

        sum_i  coef_i * L_i @ X_{name_i} @ R_i  ==  rhs   (mod target orders)
    """

    def __init__(self, ring: BaseRing):
        self.ring = ring
        self._unknowns: dict[str, _Unknown] = {}
        self._ncols = 0
        self._rows: list[list[int]] = []
        self._rhs: list[int] = []
        self._mods: list[int] = []

    def add_unknown(self, name: str, src: BaseObject, dst: BaseObject, morphism: bool = True):
        if name in self._unknowns:
            raise ValueError(f"duplicate unknown {name}")
        u = _Unknown(src, dst, self._ncols, morphism)
        self._unknowns[name] = u
        self._ncols += src.ngens * dst.ngens
        # over a field every generator has order p and the well-definedness
        # congruences are vacuous
        if morphism and not self.ring.is_field:
            for j, d in enumerate(src.orders):
                if d == 0:
                    continue
                for i, e in enumerate(dst.orders):
                    row = [0] * self._ncols
                    row[u.offset + i * src.ngens + j] = d
                    self._rows.append(row)
                    self._rhs.append(0)
                    self._mods.append(e)
        return u

    def _entry(self, name: str, i: int, j: int) -> int:
        u = self._unknowns[name]
        return u.offset + i * u.src.ngens + j

    def add_equation(self, terms, rhs: Matrix, target: BaseObject, eq_cols: int):
        """terms: list of (coef, lmat, name, rmat); lmat is target.ngens x dst.ngens,
        rmat is src.ngens x eq_cols."""
        for r in range(target.ngens):
            for c in range(eq_cols):
                row = [0] * self._ncols
                for coef, lmat, name, rmat in terms:
                    u = self._unknowns[name]
                    for i in range(u.dst.ngens):
                        li = lmat[r][i]
                        if li == 0:
                            continue
                        for j in range(u.src.ngens):
                            rj = rmat[j][c]
                            if rj:
                                row[self._entry(name, i, j)] += coef * li * rj
                self._rows.append(row)
                self._rhs.append(rhs[r][c])
                self._mods.append(target.orders[r])

    def _assemble(self):
        nrows = len(self._rows)
        slack = [i for i in range(nrows) if self._mods[i] != 0]
        ncols = self._ncols + len(slack)
        a = []
        self._reduced_rhs = list(self._rhs)
        for i in range(nrows):
            row = list(self._rows[i])
            if len(row) < self._ncols:
                row += [0] * (self._ncols - len(row))
            m = self._mods[i]
            if m:
                row = [x % m for x in row]
                self._reduced_rhs[i] = self._rhs[i] % m
            row += [0] * len(slack)
            a.append(row)
        for s_idx, i in enumerate(slack):
            a[i][self._ncols + s_idx] = self._mods[i]
        return intmat.mat(a), nrows, ncols

    def solve(self) -> dict[str, BaseMorphism] | None:
        if self.ring.is_field:
            from .modsolve import solve_mod_p

            nrows = len(self._rows)
            rows = [r + [0] * (self._ncols - len(r)) for r in self._rows]
            x = solve_mod_p(rows, self._rhs, nrows, self._ncols, self.ring.p)
            return None if x is None else self._extract(tuple(x))
        a, nrows, ncols = self._assemble()
        b = tuple((x,) for x in self._reduced_rhs)
        if nrows == 0:
            x = intmat.zeros(ncols, 1)
        else:
            x = solve_int(a, b, nrows, ncols)
        if x is None:
            return None
        return self._extract(tuple(r[0] for r in x))

    def _extract(self, vec) -> dict[str, BaseMorphism]:
        out = {}
        for name, u in self._unknowns.items():
            rows = [
                [vec[u.offset + i * u.src.ngens + j] for j in range(u.src.ngens)]
                for i in range(u.dst.ngens)
            ]
            out[name] = base_morphism(u.src, u.dst, rows)
        return out

    def homogeneous_basis(self) -> list[dict[str, Matrix]]:
        """Basis of the solution lattice of the homogeneous system, projected
        to the unknowns (raw integer matrices, not reduced)."""
        if self.ring.is_field:
            from .modsolve import nullspace_mod_p

            nrows = len(self._rows)
            rows = [r + [0] * (self._ncols - len(r)) for r in self._rows]
            basis = nullspace_mod_p(rows, nrows, self._ncols, self.ring.p)
        else:
            a, nrows, ncols = self._assemble()
            basis = kernel_lattice(a, nrows, ncols)
        out = []
        for v in basis:
            entry = {}
            hit = False
            for name, u in self._unknowns.items():
                rows = tuple(
                    tuple(v[u.offset + i * u.src.ngens + j] for j in range(u.src.ngens))
                    for i in range(u.dst.ngens)
                )
                entry[name] = rows
                if not intmat.is_zero(rows):
                    hit = True
            if hit:
                out.append(entry)
        return out


def solve_base(a: BaseMorphism, b: BaseMorphism) -> BaseMorphism | None:
    """A morphism s with a.s = b, or None; unique when a is mono."""
    if a.dst != b.dst:
        raise ValueError("solveBase needs a common target")
    sys = LinearSystem(a.ring)
    sys.add_unknown("s", b.src, a.src)
    sys.add_equation(
        [(1, a.mat, "s", intmat.identity(b.src.ngens))], b.mat, a.dst, b.src.ngens
    )
    sol = sys.solve()
    return None if sol is None else sol["s"]


def split_data_base(f: BaseMorphism) -> BaseMorphism | None:
    """g with f.g.f = f and g.f.g = g, when f splits.

    f = m.e through its image splits exactly when m is a split mono and e a
    split epi; then g = section(e) . retraction(m).  The two one-sided
    inverse problems stay linear in f's entries.
    """
    i_obj, m, e = image_comparison(f)
    r = left_inverse(m)
    if r is None:
        return None
    s = right_inverse(e)
    if s is None:
        return None
    g = compose(s, r)
    assert compose(f, compose(g, f)) == f and compose(g, compose(f, g)) == g
    return g


def left_inverse(f: BaseMorphism) -> BaseMorphism | None:
    sys = LinearSystem(f.ring)
    sys.add_unknown("h", f.dst, f.src)
    sys.add_equation(
        [(1, intmat.identity(f.src.ngens), "h", f.mat)],
        intmat.identity(f.src.ngens),
        f.src,
        f.src.ngens,
    )
    sol = sys.solve()
    return None if sol is None else sol["h"]


def right_inverse(f: BaseMorphism) -> BaseMorphism | None:
    sys = LinearSystem(f.ring)
    sys.add_unknown("h", f.dst, f.src)
    sys.add_equation(
        [(1, f.mat, "h", intmat.identity(f.dst.ngens))],
        intmat.identity(f.dst.ngens),
        f.dst,
        f.dst.ngens,
    )
    sol = sys.solve()
    return None if sol is None else sol["h"]


def invert_base(f: BaseMorphism) -> BaseMorphism:
    h = right_inverse(f)
    if h is None or compose(h, f) != identity_mor(f.src):
        raise ValueError("morphism is not invertible")
    return h


@dataclass(frozen=True)
class BaseFlags:
    mono: bool
    epi: bool
    iso: bool
    zero: bool
    split_mono: bool
    split_epi: bool


def classify_base(f: BaseMorphism) -> BaseFlags:
    mono = kernel_base(f)[0].is_zero
    epi = cokernel_base(f)[0].is_zero
    iso = mono and epi
    split_mono = left_inverse(f) is not None
    split_epi = right_inverse(f) is not None
    flags = BaseFlags(
        mono=mono,
        epi=epi,
        iso=iso,
        zero=f.is_zero_mor(),
        split_mono=split_mono,
        split_epi=split_epi,
    )
    if iso and not (split_mono and split_epi):
        raise AssertionError("iso must split on both sides")
    return flags


def exact_at_base(f: BaseMorphism, g: BaseMorphism) -> bool:
    """Exactness of X -f-> Y -g-> Z at Y (requires g.f = 0)."""
    if compose(g, f).mat != zero_mor(f.src, g.dst).mat:
        raise ValueError("composite is not zero")
    k_obj, k = kernel_base(g)
    induced = solve_base(k, f)
    if induced is None:
        raise AssertionError("image must land in the kernel")
    return cokernel_base(induced)[0].is_zero
