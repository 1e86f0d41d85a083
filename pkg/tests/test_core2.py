import random

import pytest

from arrowcat import GF, ZZ
from arrowcat.core2 import (
    cells_equal,
    compose2,
    hcomp2,
    identity2,
    identity_cell,
    vcomp2,
    whisker_left,
    whisker_right,
    zero2,
)
from arrowcat.generators import Bounds, random_cell_on, random_square, random_two_object


@pytest.fixture
def setup(rng, bounds):
    ring = GF(3)
    a = random_two_object(rng, ring, bounds)
    b = random_two_object(rng, ring, bounds)
    c = random_two_object(rng, ring, bounds)
    return a, b, c


def test_compose_unit_and_zero(setup, rng):
    a, b, c = setup
    u = random_square(rng, a, b)
    assert compose2(u, identity2(a)) == u
    assert compose2(identity2(b), u) == u
    assert compose2(zero2(b, c), u) == zero2(a, c)


def test_compose_is_componentwise(setup, rng):
    a, b, c = setup
    u = random_square(rng, a, b)
    v = random_square(rng, b, c)
    w = compose2(v, u)
    from arrowcat.basemor import compose

    assert w.top == compose(v.top, u.top)
    assert w.bottom == compose(v.bottom, u.bottom)


def test_vertical_composition(setup, rng, bounds):
    a, b, _ = setup
    u = random_square(rng, a, b)
    cell = random_cell_on(rng, u, bounds)
    assert cells_equal(vcomp2(cell, identity_cell(u)), cell)
    inv = vcomp2(cell.inverse(), cell)
    assert inv.mat.is_zero_mor() and inv.cfrom == u and inv.cto == u
    c2 = random_cell_on(rng, cell.cto, bounds)
    total = vcomp2(c2, cell)
    assert total.mat == cell.mat + c2.mat


def test_horizontal_composition_and_whiskers(setup, rng, bounds):
    a, b, c = setup
    u = random_square(rng, a, b)
    v = random_square(rng, b, c)
    alpha = random_cell_on(rng, u, bounds)
    beta = random_cell_on(rng, v, bounds)
    # whiskering by identities changes nothing
    assert cells_equal(whisker_left(identity2(b), alpha), alpha)
    assert cells_equal(whisker_right(beta, identity2(b)), beta)
    # identity cells compose to the identity cell
    h = hcomp2(identity_cell(v), identity_cell(u))
    assert h.mat.is_zero_mor() and h.cfrom == compose2(v, u)
    # both defining formulas agree (asserted inside hcomp2 as well)
    from arrowcat.basemor import compose

    got = hcomp2(beta, alpha)
    assert got.mat == compose(beta.cto.top, alpha.mat) + compose(beta.mat, alpha.cfrom.bottom)


def test_interchange_random():
    rng = random.Random(515)
    b = Bounds(max_dim=2)
    for ring in (GF(2), GF(5), ZZ):
        for _ in range(10):
            x = random_two_object(rng, ring, b)
            y = random_two_object(rng, ring, b)
            z = random_two_object(rng, ring, b)
            u = random_square(rng, x, y)
            v = random_square(rng, y, z)
            a1 = random_cell_on(rng, u, b)
            a2 = random_cell_on(rng, a1.cto, b)
            b1 = random_cell_on(rng, v, b)
            b2 = random_cell_on(rng, b1.cto, b)
            lhs = hcomp2(vcomp2(b2, b1), vcomp2(a2, a1))
            rhs = vcomp2(hcomp2(b2, a2), hcomp2(b1, a1))
            assert cells_equal(lhs, rhs)


def test_square_must_commute(setup):
    a, b, _ = setup
    from arrowcat.basemor import zero_mor
    from arrowcat.core2 import TwoMorphism

    if a.top.ngens and b.bottom.ngens:
        pass  # construction below uses zero pieces, valid for any shapes
    with pytest.raises(ValueError):
        # a deliberately non-commuting square on the doubling object
        from arrowcat import base_morphism, z_object, two_object

        zz = two_object(base_morphism(z_object(1), z_object(1), [[2]]))
        TwoMorphism(
            zz,
            zz,
            base_morphism(z_object(1), z_object(1), [[1]]),
            base_morphism(z_object(1), z_object(1), [[2]]),
        )
