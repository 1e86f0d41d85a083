"""Arrows, squares and homotopies: the groupoid-enriched layer.

An object is a boundary morphism top -> bottom in the base.  A morphism is a
commutative square (u1, u0); a 2-cell alpha: (u1,u0) => (u1',u0') is a base
morphism bottom(source) -> top(target) with

    u1 - u1' = alpha . d_src        u0 - u0' = d_dst . alpha

exactly.  Vertical composition adds the matrices, horizontal composition is
beta * alpha = v1' . alpha + beta . u0 (the alternative formula is asserted
equal), and identities/zeros are strict.
"""

from __future__ import annotations

from dataclasses import dataclass

from .baseobj import BaseObject, zero_object
from .basemor import BaseMorphism, compose, identity_mor, zero_mor
from .rings import BaseRing


@dataclass(frozen=True)
class TwoObject:
    boundary: BaseMorphism

    def __post_init__(self):
        pass

    @property
    def top(self) -> BaseObject:
        return self.boundary.src

    @property
    def bottom(self) -> BaseObject:
        return self.boundary.dst

    @property
    def ring(self) -> BaseRing:
        return self.boundary.ring

    def __str__(self) -> str:
        return f"({self.top} -> {self.bottom})"


def two_object(boundary: BaseMorphism) -> TwoObject:
    return TwoObject(boundary)


def zero_two_object(ring: BaseRing) -> TwoObject:
    z = zero_object(ring)
    return TwoObject(zero_mor(z, z))


def is_zero_equivalent(x: TwoObject) -> bool:
    """An object is equivalent to 0 exactly when its boundary is invertible."""
    from .baselin import classify_base

    return classify_base(x.boundary).iso


@dataclass(frozen=True)
class TwoMorphism:
    src: TwoObject
    dst: TwoObject
    top: BaseMorphism
    bottom: BaseMorphism

    def __post_init__(self):
        if self.top.src != self.src.top or self.top.dst != self.dst.top:
            raise ValueError("top component has the wrong endpoints")
        if self.bottom.src != self.src.bottom or self.bottom.dst != self.dst.bottom:
            raise ValueError("bottom component has the wrong endpoints")
        if compose(self.dst.boundary, self.top) != compose(self.bottom, self.src.boundary):
            raise ValueError("square does not commute")

    def __add__(self, other: "TwoMorphism") -> "TwoMorphism":
        if self.src != other.src or self.dst != other.dst:
            raise ValueError("sum of non-parallel squares")
        return TwoMorphism(self.src, self.dst, self.top + other.top, self.bottom + other.bottom)

    def __sub__(self, other: "TwoMorphism") -> "TwoMorphism":
        return self + (-other)

    def __neg__(self) -> "TwoMorphism":
        return TwoMorphism(self.src, self.dst, -self.top, -self.bottom)

    def is_zero_mor(self) -> bool:
        return self.top.is_zero_mor() and self.bottom.is_zero_mor()


def two_morphism(src: TwoObject, dst: TwoObject, top: BaseMorphism, bottom: BaseMorphism) -> TwoMorphism:
    return TwoMorphism(src, dst, top, bottom)


def identity2(x: TwoObject) -> TwoMorphism:
    return TwoMorphism(x, x, identity_mor(x.top), identity_mor(x.bottom))


def zero2(src: TwoObject, dst: TwoObject) -> TwoMorphism:
    return TwoMorphism(src, dst, zero_mor(src.top, dst.top), zero_mor(src.bottom, dst.bottom))


def compose2(b: TwoMorphism, a: TwoMorphism) -> TwoMorphism:
    """b after a, componentwise."""
    if a.dst != b.src:
        raise ValueError("non-composable squares")
    return TwoMorphism(a.src, b.dst, compose(b.top, a.top), compose(b.bottom, a.bottom))


@dataclass(frozen=True)
class TwoCell:
    """alpha: cfrom => cto between parallel squares."""

    cfrom: TwoMorphism
    cto: TwoMorphism
    mat: BaseMorphism  # src.bottom -> dst.top

    def __post_init__(self):
        f, t = self.cfrom, self.cto
        if f.src != t.src or f.dst != t.dst:
            raise ValueError("cell between non-parallel squares")
        if self.mat.src != f.src.bottom or self.mat.dst != f.dst.top:
            raise ValueError("cell matrix has the wrong endpoints")
        if f.top - t.top != compose(self.mat, f.src.boundary):
            raise ValueError("cell fails the top homotopy equation")
        if f.bottom - t.bottom != compose(f.dst.boundary, self.mat):
            raise ValueError("cell fails the bottom homotopy equation")

    @property
    def src(self) -> TwoObject:
        return self.cfrom.src

    @property
    def dst(self) -> TwoObject:
        return self.cfrom.dst

    def inverse(self) -> "TwoCell":
        return TwoCell(self.cto, self.cfrom, -self.mat)


def two_cell(cfrom: TwoMorphism, cto: TwoMorphism, mat: BaseMorphism) -> TwoCell:
    return TwoCell(cfrom, cto, mat)


def identity_cell(u: TwoMorphism) -> TwoCell:
    return TwoCell(u, u, zero_mor(u.src.bottom, u.dst.top))


def cell_to_zero(u: TwoMorphism, mat: BaseMorphism) -> TwoCell:
    """The cell u => 0 with the given matrix."""
    return TwoCell(u, zero2(u.src, u.dst), mat)


def deform(u: TwoMorphism, mat: BaseMorphism) -> TwoCell:
    """The cell u => u' obtained by pushing u along an arbitrary matrix."""
    top = u.top - compose(mat, u.src.boundary)
    bottom = u.bottom - compose(u.dst.boundary, mat)
    return TwoCell(u, TwoMorphism(u.src, u.dst, top, bottom), mat)


def vcomp2(c2: TwoCell, c1: TwoCell) -> TwoCell:
    """c2 after c1 (vertical composition: matrix sum)."""
    if c1.cto != c2.cfrom:
        raise ValueError("cells do not meet")
    return TwoCell(c1.cfrom, c2.cto, c1.mat + c2.mat)


def whisker_left(v: TwoMorphism, c: TwoCell) -> TwoCell:
    """v * c : v.cfrom => v.cto."""
    if c.dst != v.src:
        raise ValueError("whisker mismatch")
    return TwoCell(
        compose2(v, c.cfrom), compose2(v, c.cto), compose(v.top, c.mat)
    )


def whisker_right(c: TwoCell, u: TwoMorphism) -> TwoCell:
    """c * u : cfrom.u => cto.u."""
    if u.dst != c.src:
        raise ValueError("whisker mismatch")
    return TwoCell(
        compose2(c.cfrom, u), compose2(c.cto, u), compose(c.mat, u.bottom)
    )


def hcomp2(beta: TwoCell, alpha: TwoCell) -> TwoCell:
    """beta * alpha, with both defining formulas asserted equal."""
    if alpha.dst != beta.src:
        raise ValueError("horizontal composition mismatch")
    first = compose(beta.cto.top, alpha.mat) + compose(beta.mat, alpha.cfrom.bottom)
    second = compose(beta.mat, alpha.cto.bottom) + compose(beta.cfrom.top, alpha.mat)
    if first != second:
        raise AssertionError("the two horizontal composition formulas disagree")
    return TwoCell(
        compose2(beta.cfrom, alpha.cfrom), compose2(beta.cto, alpha.cto), first
    )


def is_loop(c: TwoCell) -> bool:
    return c.cfrom.is_zero_mor() and c.cto.is_zero_mor()


def loop_cell(src: TwoObject, dst: TwoObject, mat: BaseMorphism) -> TwoCell:
    """A cell 0 => 0 given by a matrix with alpha.d = 0 and d.alpha = 0."""
    return TwoCell(zero2(src, dst), zero2(src, dst), mat)


def cells_equal(a: TwoCell, b: TwoCell) -> bool:
    return a.cfrom == b.cfrom and a.cto == b.cto and a.mat == b.mat
