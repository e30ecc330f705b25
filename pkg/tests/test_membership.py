import random

import pytest

from carlitz_lab.algebra import QQ, MultiPoly, parse_poly
from carlitz_lab.coefficients import d_family, h_table
from carlitz_lab.identities import ehbauer_lhs
from carlitz_lab.membership import ideal_membership_linear, is_certificate, solve_exact


def test_reflexive():
    D0 = d_family(4)(0)
    cert = ideal_membership_linear(D0, [D0], 0)
    assert cert.render() == ["1"]
    assert cert.unique


@pytest.mark.parametrize("m", range(1, 7))
def test_h0j_cofactors(m):
    D0 = d_family(m)(0)
    for j in range(m + 1):
        cert = ideal_membership_linear(h_table(m, 1).get(0, j), [D0], 1)
        assert cert is not None
        assert cert.cofactors[0] == MultiPoly.a(j).scale((-1) ** j)


@pytest.mark.parametrize("m", range(4, 7))
def test_ehbauer_cofactors_unique(m):
    D = d_family(m)
    cert = ideal_membership_linear(ehbauer_lhs(m), [D(0), D(1)], 2)
    assert cert.unique
    assert cert.render() == ["-2*a0 - 2*a1", "-2*a0^2"]


@pytest.mark.parametrize("m", [2, 3])
def test_ehbauer_small_m_has_syzygies(m):
    D = d_family(m)
    basis = [D(0), D(1)]
    cert = ideal_membership_linear(ehbauer_lhs(m), basis, 2)
    assert not cert.unique
    assert is_certificate(ehbauer_lhs(m), basis, cert.cofactors)
    for syz in cert.syzygies:
        assert is_certificate(MultiPoly.zero(), basis, syz)
    expected = [parse_poly("-2*a0 - 2*a1"), parse_poly("-2*a0^2")]
    assert is_certificate(ehbauer_lhs(m), basis, expected)


def test_not_in_ideal():
    assert ideal_membership_linear(parse_poly("a1^2"), [parse_poly("a0")], 1) is None
    # right ideal, cofactor degree too high
    assert ideal_membership_linear(parse_poly("a0^3"), [parse_poly("a0")], 1) is None


def test_rational_cofactors():
    cert = ideal_membership_linear(parse_poly("a0"), [parse_poly("2*a0")], 0)
    assert cert.cofactors[0].ring == QQ
    assert cert.render() == ["1/2"]


def test_zero_target_and_homogeneity_check():
    cert = ideal_membership_linear(MultiPoly.zero(), [parse_poly("a0")], 2)
    assert cert.cofactors[0].is_zero()
    with pytest.raises(ValueError):
        ideal_membership_linear(parse_poly("a0 + a1^2"), [parse_poly("a0")], 1)
    with pytest.raises(ValueError):
        ideal_membership_linear(parse_poly("a0*t"), [parse_poly("a0")], 1)


def test_random_certificates_expand_to_target():
    rng = random.Random(5)
    gens = [parse_poly("a0*a1 - a2^2"), parse_poly("a1^2 + a0*a2")]
    for _ in range(20):
        c = [sum((MultiPoly.const(rng.randint(-3, 3)) * MultiPoly.a(rng.randrange(3))
                  for _ in range(3)), MultiPoly.zero()) for _ in gens]
        target = c[0] * gens[0] + c[1] * gens[1]
        cert = ideal_membership_linear(target, gens, 1)
        assert cert is not None
        assert cert.expand(gens) == target.change_ring(cert.cofactors[0].ring)


def test_solver_small_system():
    x, null = solve_exact([[2, 4], [1, 3]], [6, 5])
    assert x == [-1, 2] and null == []
    x, null = solve_exact([[1, 1], [2, 2]], [1, 2])
    assert x[0] + x[1] == 1 and len(null) == 1
    assert solve_exact([[1, 1], [1, 1]], [1, 2]) is None
