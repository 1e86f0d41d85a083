"""Exact 2-dimensional homological algebra on length-1 chain complexes.

The base layer is an exact computational abelian category (prime fields and
finitely generated abelian groups); on top of it live arrows, commutative
squares and homotopies with all their limits, colimits, classifications,
factorizations, exactness oracles, homology and diagram lemmas.
"""

from .rings import GF, ZZ, BaseRing
from .baseobj import BaseObject, field_object, make_object, z_object, zero_object
from .basemor import BaseMorphism, base_morphism, compose, identity_mor, zero_mor
from .core2 import (
    TwoCell,
    TwoMorphism,
    TwoObject,
    cell_to_zero,
    compose2,
    hcomp2,
    identity2,
    identity_cell,
    loop_cell,
    two_cell,
    two_morphism,
    two_object,
    vcomp2,
    whisker_left,
    whisker_right,
    zero2,
    zero_two_object,
)

__all__ = [
    "GF",
    "ZZ",
    "BaseRing",
    "BaseObject",
    "BaseMorphism",
    "TwoObject",
    "TwoMorphism",
    "TwoCell",
    "field_object",
    "make_object",
    "z_object",
    "zero_object",
    "base_morphism",
    "compose",
    "identity_mor",
    "zero_mor",
    "two_object",
    "two_morphism",
    "two_cell",
    "identity2",
    "zero2",
    "zero_two_object",
    "compose2",
    "vcomp2",
    "hcomp2",
    "whisker_left",
    "whisker_right",
    "identity_cell",
    "cell_to_zero",
    "loop_cell",
]
