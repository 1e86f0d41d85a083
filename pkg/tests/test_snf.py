import random

from arrowcat.intmat import det, identity, mat, mul, zeros
from arrowcat.snf import kernel_lattice, smith_normal_form, solve_int


def decompose(rows):
    m = mat(rows)
    return m, smith_normal_form(m, len(rows), len(rows[0]) if rows else 0)


def test_two_by_two_example():
    # oracle: multiply back and compare determinants
    m, s = decompose([[2, 4], [6, 8]])
    assert s.d == ((2, 0), (0, 4))
    assert mul(mul(s.u, m, 2), s.v, 2) == s.d
    assert abs(det(s.u)) == 1 and abs(det(s.v)) == 1
    assert s.diagonal()[0] * s.diagonal()[1] == abs(det(m)) == 8


def test_identity_case():
    m, s = decompose([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert s.u == identity(3) and s.v == identity(3) and s.d == m


def test_zero_case():
    m, s = decompose([[0, 0], [0, 0], [0, 0]])
    assert s.d == zeros(3, 2)
    assert s.u == identity(3) and s.v == identity(2)


def test_random_decompositions():
    rng = random.Random(99)
    for _ in range(250):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        m = mat([[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)])
        s = smith_normal_form(m, r, c)
        assert mul(mul(s.u, m, r), s.v, c) == s.d
        assert abs(det(s.u)) == 1 and abs(det(s.v)) == 1
        assert mul(s.u, s.u_inv, r) == identity(r)
        assert mul(s.v, s.v_inv, c) == identity(c)
        diag = s.diagonal()
        for x, y in zip(diag, diag[1:]):
            assert x >= 0 and y >= 0
            assert not (x == 0 and y != 0)
            if x and y:
                assert y % x == 0


def test_solve_and_kernel():
    a = mat([[2, 0], [0, 3]])
    x = solve_int(a, mat([[4], [9]]), 2, 2)
    assert x == ((2,), (3,))
    assert solve_int(a, mat([[1], [0]]), 2, 2) is None
    basis = kernel_lattice(mat([[1, 2]]), 1, 2)
    assert len(basis) == 1
    v = basis[0]
    assert v[0] + 2 * v[1] == 0 and v != (0, 0)
