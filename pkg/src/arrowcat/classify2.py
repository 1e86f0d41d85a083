"""Arrow classification and equivalence witnesses.

Every flag is computed from the three-term base sequence

    A1 --[-d; u1]--> A0 (+) B1 --(u0 d')--> B0

attached to a square: faithfulness is injectivity on the left, fullness is
exactness in the middle, cofaithfulness surjectivity on the right; the
normal variants add a splitting witness and equivalences are the split exact
case.  Witness data for an equivalence is extracted from an actual splitting
and all twelve equations are checked before returning.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import intmat
from .baselin import (
    LinearSystem,
    biproduct_base,
    cokernel_base,
    exact_at_base,
    kernel_base,
    split_data_base,
)
from .basemor import BaseMorphism, compose, identity_mor, zero_mor
from .core2 import TwoMorphism


@dataclass(frozen=True)
class ArrowClassification:
    faithful: bool
    full: bool
    fully_faithful: bool
    cofaithful: bool
    fully_cofaithful: bool
    normal_faithful: bool
    normal_fully_faithful: bool
    normal_cofaithful: bool
    normal_fully_cofaithful: bool
    equivalence: bool
    discrete_source: bool
    connected_source: bool
    split_source: bool


@dataclass(frozen=True)
class SequenceData:
    """The three-term sequence of a square, with the biproduct glue."""

    iota: BaseMorphism  # A1 -> A0 (+) B1
    pmap: BaseMorphism  # A0 (+) B1 -> B0
    i0: BaseMorphism
    i1: BaseMorphism
    p0: BaseMorphism
    p1: BaseMorphism


def sequence_of(u: TwoMorphism) -> SequenceData:
    a, b = u.src, u.dst
    ab, (i0, i1), (p0, p1) = biproduct_base([a.bottom, b.top])
    iota = compose(i0, -a.boundary) + compose(i1, u.top)
    pmap = compose(u.bottom, p0) + compose(b.boundary, p1)
    return SequenceData(iota, pmap, i0, i1, p0, p1)


def classify2(u: TwoMorphism) -> ArrowClassification:
    seq = sequence_of(u)
    iota, pmap = seq.iota, seq.pmap
    faithful = kernel_base(iota)[0].is_zero
    cofaithful = cokernel_base(pmap)[0].is_zero
    full = exact_at_base(iota, pmap)
    fully_faithful = faithful and full
    fully_cofaithful = cofaithful and full
    split_iota = split_data_base(iota) is not None
    split_p = split_data_base(pmap) is not None
    equivalence = fully_faithful and cofaithful and split_iota
    d = u.src.boundary
    flags = ArrowClassification(
        faithful=faithful,
        full=full,
        fully_faithful=fully_faithful,
        cofaithful=cofaithful,
        fully_cofaithful=fully_cofaithful,
        normal_faithful=faithful and split_iota,
        normal_fully_faithful=fully_faithful and split_iota,
        normal_cofaithful=cofaithful and split_p,
        normal_fully_cofaithful=fully_cofaithful and split_p,
        equivalence=equivalence,
        discrete_source=kernel_base(d)[0].is_zero,
        connected_source=cokernel_base(d)[0].is_zero,
        split_source=split_data_base(d) is not None,
    )
    if flags.equivalence and not (
        flags.faithful
        and flags.full
        and flags.fully_faithful
        and flags.cofaithful
        and flags.fully_cofaithful
        and flags.normal_faithful
        and flags.normal_fully_faithful
        and flags.normal_cofaithful
        and flags.normal_fully_cofaithful
    ):
        raise AssertionError("equivalence must imply every positive flag")
    return flags


@dataclass(frozen=True)
class EquivalenceData:
    v1: BaseMorphism  # B1 -> A1
    v0: BaseMorphism  # B0 -> A0
    epsilon: BaseMorphism  # B0 -> B1
    eta: BaseMorphism  # A0 -> A1


def equivalence_data2(u: TwoMorphism) -> EquivalenceData | None:
    """The twelve-equation witness, or None when u is not an equivalence.

    Equivalence is decided by a splitting of [-d; u1] plus exactness.  The
    witness prefers a strict inverse (epsilon = eta = 0, a linear solve) so
    honest isomorphisms return their actual inverses; otherwise it is
    extracted from the splitting, which forces all twelve equations.
    """
    seq = sequence_of(u)
    iota, pmap = seq.iota, seq.pmap
    g = split_data_base(iota)
    if g is None:
        return None
    if not (
        kernel_base(iota)[0].is_zero
        and cokernel_base(pmap)[0].is_zero
        and exact_at_base(iota, pmap)
    ):
        return None
    strict = _strict_witness(u)
    if strict is not None:
        _verify_equivalence(u, strict)
        return strict
    r = g  # retraction: r . iota = 1 since iota is mono and iota.g.iota = iota
    e = identity_mor(iota.dst) - compose(iota, r)
    # e factors through pmap: e = s~ . pmap, and then r . s~ = 0 automatically
    sys = LinearSystem(u.top.ring)
    sys.add_unknown("s", pmap.dst, iota.dst)
    sys.add_equation(
        [(1, intmat.identity(iota.dst.ngens), "s", pmap.mat)],
        e.mat,
        iota.dst,
        pmap.src.ngens,
    )
    sol = sys.solve()
    if sol is None:
        raise AssertionError("split exact sequence must provide a section")
    s = sol["s"]
    data = EquivalenceData(
        v1=compose(r, seq.i1),
        v0=compose(seq.p0, s),
        epsilon=compose(seq.p1, s),
        eta=-(compose(r, seq.i0)),
    )
    _verify_equivalence(u, data)
    return data


def _strict_witness(u: TwoMorphism) -> EquivalenceData | None:
    """A strict quasi-inverse (epsilon = eta = 0) when one exists."""
    a, b = u.src, u.dst
    f, g = a.boundary, b.boundary
    u1, u0 = u.top, u.bottom
    sys = LinearSystem(u.top.ring)
    sys.add_unknown("v1", b.top, a.top)
    sys.add_unknown("v0", b.bottom, a.bottom)
    eye_bt = intmat.identity(b.top.ngens)
    eye_bb = intmat.identity(b.bottom.ngens)
    sys.add_equation(
        [
            (1, f.mat, "v1", eye_bt),
            (-1, intmat.identity(a.bottom.ngens), "v0", g.mat),
        ],
        intmat.zeros(a.bottom.ngens, b.top.ngens),
        a.bottom,
        b.top.ngens,
    )
    sys.add_equation(
        [(1, intmat.identity(a.top.ngens), "v1", u1.mat)],
        intmat.identity(a.top.ngens),
        a.top,
        a.top.ngens,
    )
    sys.add_equation(
        [(1, intmat.identity(a.bottom.ngens), "v0", u0.mat)],
        intmat.identity(a.bottom.ngens),
        a.bottom,
        a.bottom.ngens,
    )
    sys.add_equation(
        [(1, u1.mat, "v1", eye_bt)],
        intmat.identity(b.top.ngens),
        b.top,
        b.top.ngens,
    )
    sys.add_equation(
        [(1, u0.mat, "v0", eye_bb)],
        intmat.identity(b.bottom.ngens),
        b.bottom,
        b.bottom.ngens,
    )
    sol = sys.solve()
    if sol is None:
        return None
    return EquivalenceData(
        v1=sol["v1"],
        v0=sol["v0"],
        epsilon=zero_mor(b.bottom, b.top),
        eta=zero_mor(a.bottom, a.top),
    )


def _verify_equivalence(u: TwoMorphism, d: EquivalenceData):
    a, b = u.src, u.dst
    f, g = a.boundary, b.boundary
    u1, u0 = u.top, u.bottom
    v1, v0, eps, eta = d.v1, d.v0, d.epsilon, d.eta
    checks = [
        compose(g, u1) == compose(u0, f),
        compose(f, v1) == compose(v0, g),
        compose(eps, u0) == compose(u1, eta),
        compose(eta, v0) == compose(v1, eps),
        compose(eta, f) + compose(v1, u1) == identity_mor(a.top),
        compose(f, eta) + compose(v0, u0) == identity_mor(a.bottom),
        compose(eps, g) + compose(u1, v1) == identity_mor(b.top),
        compose(g, eps) + compose(u0, v0) == identity_mor(b.bottom),
    ]
    if not all(checks):
        raise AssertionError(f"equivalence witness fails equations: {checks}")


def inverse_from_data(u: TwoMorphism, d: EquivalenceData) -> TwoMorphism:
    """The quasi-inverse square carried by an equivalence witness."""
    return TwoMorphism(u.dst, u.src, d.v1, d.v0)
