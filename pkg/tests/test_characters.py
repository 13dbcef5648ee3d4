import itertools
from fractions import Fraction

import pytest

from qsymx import characters as ch
from qsymx import compositions as co
from qsymx import exactnum as en
from qsymx import qsym as qs

ALL_IDS = list(ch.CHARACTER_IDS) + [ch.zeta_power(m) for m in (-3, -1, 2, 3)]


def comps_up_to(max_degree):
    return [a for n in range(max_degree + 1) for a in co.all_compositions(n)]


def test_eval_M_examples():
    assert ch.eval_M(ch.ZETA_PLUS, (2,)) == 1
    assert ch.eval_M(ch.ZETA_MINUS, (1, 1)) == Fraction(1, 2)
    assert ch.eval_M(ch.ZETA_INV, (2, 1)) == 1
    assert ch.eval_M(ch.zeta_power(2), (1, 1)) == 1
    assert ch.eval_M(ch.ZETA, (3,)) == 1
    assert ch.eval_M(ch.ZETA, (1, 2)) == 0
    assert ch.eval_M(ch.ZETA_PLUS, (3,)) == 0
    assert ch.eval_M(ch.COUNIT, ()) == 1
    assert ch.eval_M(ch.COUNIT, (3,)) == 0


def test_eval_M_value_at_unit():
    for char_id in ALL_IDS:
        assert ch.eval_M(char_id, ()) == 1
        assert ch.eval_F(char_id, ()) == 1


def test_unknown_id():
    with pytest.raises(ValueError):
        ch.eval_M("zeta-bogus", (1,))
    with pytest.raises(ValueError):
        ch.eval_M("zeta-pow:x", (1,))


def test_eval_F_examples():
    assert ch.eval_F(ch.ZETA_MINUS, (2,)) == Fraction(1, 2)
    assert ch.eval_F(ch.ZETA_PLUS, (2,)) == Fraction(1, 2)
    assert ch.eval_F(ch.ZETA_INV, (1, 1, 1)) == -1
    assert ch.eval_F(ch.ZETA_INV, (2, 1)) == 0
    assert ch.eval_F(ch.ZETA, (5,)) == 1


def test_eval_element():
    assert ch.eval_element(ch.ZETA, qs.qsym_basis("M", (3,))) == 1
    assert ch.eval_element(ch.ZETA_MINUS, qs.qsym_zero("M")) == 0
    # value of zeta-minus on M_(2) through its F expansion: 1/2 - 1/2 = 0
    x = qs.to_F(qs.qsym_basis("M", (2,)))
    assert ch.eval_element(ch.ZETA_MINUS, x) == 0
    assert ch.eval_M(ch.ZETA_MINUS, (2,)) == 0


def test_eval_perm_examples():
    assert ch.eval_perm(ch.ZETA_MINUS, (1, 3, 2)) == Fraction(-1, 2)
    for sigma in itertools.permutations((1, 2, 3)):
        assert ch.eval_perm(ch.ZETA_PLUS, sigma) == 0
    assert ch.eval_perm(ch.ZETA_MINUS, (1, 2)) == Fraction(1, 2)
    assert ch.eval_perm(ch.ZETA, (1, 2, 3)) == 1
    assert ch.eval_perm(ch.ZETA, (2, 1, 3)) == 0
    with pytest.raises(ValueError):
        ch.eval_perm(ch.ZETA_INV, (1, 2))


def test_restrict_examples():
    eps = ch.restrict(ch.COUNIT, 3)
    for n in range(4):
        for alpha in co.all_compositions(n):
            assert eps.value(alpha) == (1 if alpha == () else 0)
    z = ch.restrict(ch.ZETA, 2)
    assert z.value((1,)) == 1 and z.value((2,)) == 1 and z.value((1, 1)) == 0
    zm = ch.restrict(ch.ZETA_MINUS, 2)
    assert zm.value((1,)) == 1 and zm.value((2,)) == 0
    assert zm.value((1, 1)) == Fraction(1, 2)
    with pytest.raises(ValueError):
        zm.value((3,))


def test_truncated_character_validation():
    with pytest.raises(ValueError):
        ch.TruncatedCharacter(1, [[Fraction(1)]])
    with pytest.raises(ValueError):
        ch.TruncatedCharacter(1, [[Fraction(1)], [Fraction(1), Fraction(0)]])


def test_convolve_matches_coproduct_route():
    # convolution is evaluation through the coproduct; check the internal
    # deconcatenation sum against the qsym coproduct, term by term
    phi = ch.restrict(ch.ZETA_PLUS, 5)
    psi = ch.restrict(ch.ZETA_MINUS, 5)
    conv = ch.convolve(phi, psi)
    for alpha in comps_up_to(5):
        through_coproduct = Fraction(0)
        for (left, right), c in qs.coproduct(qs.qsym_basis("M", alpha)).terms.items():
            through_coproduct += c * phi.value(left) * psi.value(right)
        assert conv.value(alpha) == through_coproduct


def test_decompose_contract_on_generic_character():
    # a character with no closed-form even/odd parts still decomposes into
    # an even times an odd factor
    phi = ch.restrict(ch.zeta_power(3), 6)
    plus, minus = ch.decompose(phi)
    eps = ch.restrict(ch.COUNIT, 6)
    assert ch.convolve(plus, minus) == phi
    assert ch.bar(plus) == plus
    assert ch.convolve(minus, ch.bar(minus)) == eps
    assert ch.convolve(ch.bar(minus), minus) == eps


def test_convolve_examples():
    zp = ch.restrict(ch.ZETA_PLUS, 2)
    zm = ch.restrict(ch.ZETA_MINUS, 2)
    assert ch.convolve(zp, zm).value((1, 1)) == 0
    eps = ch.restrict(ch.COUNIT, 4)
    phi = ch.restrict(ch.ZETA_MINUS, 4)
    assert ch.convolve(eps, phi) == phi
    assert ch.convolve(phi, eps) == phi
    z3 = ch.restrict(ch.ZETA, 3)
    assert ch.convolve(z3, ch.restrict(ch.ZETA_INV, 3)) == ch.restrict(ch.COUNIT, 3)
    with pytest.raises(ValueError):
        ch.convolve(z3, ch.restrict(ch.ZETA, 4))


def test_inverse():
    z = ch.restrict(ch.ZETA, 4)
    assert ch.inverse(z) == ch.restrict(ch.ZETA_INV, 4)
    eps = ch.restrict(ch.COUNIT, 4)
    assert ch.inverse(eps) == eps
    phi = ch.restrict(ch.ZETA_MINUS, 5)
    assert ch.inverse(ch.inverse(phi)) == phi
    bad = ch.TruncatedCharacter(0, [[Fraction(0)]])
    with pytest.raises(ValueError):
        ch.inverse(bad)


def test_bar():
    z = ch.restrict(ch.ZETA, 2)
    assert ch.bar(z).value((1,)) == -1
    phi = ch.restrict(ch.ZETA_MINUS, 5)
    assert ch.bar(ch.bar(phi)) == phi
    zp = ch.restrict(ch.ZETA_PLUS, 4)
    assert ch.bar(zp) == zp
    psi = ch.restrict(ch.ZETA, 4)
    rho = ch.restrict(ch.ZETA_INV, 4)
    assert ch.bar(ch.convolve(rho, psi)) == ch.convolve(ch.bar(rho), ch.bar(psi))


def test_decompose_oracle_equivalence_midsize():
    plus, minus = ch.decompose(ch.restrict(ch.ZETA, 7))
    assert plus == ch.restrict(ch.ZETA_PLUS, 7)
    assert minus == ch.restrict(ch.ZETA_MINUS, 7)


def test_decompose_counit_and_contract():
    eps = ch.restrict(ch.COUNIT, 4)
    assert ch.decompose(eps) == (eps, eps)
    phi = ch.restrict(ch.ZETA, 6)
    plus, minus = ch.decompose(phi)
    assert ch.convolve(plus, minus) == phi
    assert ch.bar(plus) == plus
    assert ch.convolve(minus, ch.bar(minus)) == ch.restrict(ch.COUNIT, 6)
    with pytest.raises(ValueError):
        ch.decompose(ch.TruncatedCharacter(0, [[Fraction(2)]]))


def test_decompose_zeta_inverse():
    plus, minus = ch.decompose(ch.restrict(ch.ZETA_INV, 7))
    assert plus == ch.restrict(ch.ZETA_INV_PLUS, 7)
    assert minus == ch.restrict(ch.ZETA_INV_MINUS, 7)


def test_compose_antipode_and_T():
    z = ch.restrict(ch.ZETA, 4)
    assert ch.compose_antipode(z) == ch.inverse(z)
    zp = ch.restrict(ch.ZETA_PLUS, 4)
    assert ch.compose_T(zp) == zp
    phi = ch.restrict(ch.ZETA_MINUS, 5)
    assert ch.compose_T(ch.compose_T(phi)) == phi


def test_parity_relations():
    n_max = 6
    zm = ch.restrict(ch.ZETA_MINUS, n_max)
    zp = ch.restrict(ch.ZETA_PLUS, n_max)
    assert ch.compose_antipode(zm) == ch.bar(zm)  # zeta-minus is odd
    assert ch.bar(zp) == zp                       # zeta-plus is even
    assert ch.compose_T(zp) == zp
    assert ch.restrict(ch.ZETA_INV_MINUS, n_max) == ch.compose_T(ch.bar(zm))
    assert ch.restrict(ch.ZETA_INV_PLUS, n_max) == ch.inverse(zp)


def test_convolution_group_laws():
    n_max = 6
    eps = ch.restrict(ch.COUNIT, n_max)
    members = [
        ch.restrict(ch.ZETA, n_max),
        ch.restrict(ch.ZETA_PLUS, n_max),
        ch.restrict(ch.ZETA_MINUS, n_max),
        ch.restrict(ch.ZETA_INV, n_max),
    ]
    for phi in members:
        assert ch.convolve(eps, phi) == phi
        assert ch.convolve(phi, eps) == phi
        assert ch.convolve(phi, ch.inverse(phi)) == eps
        assert ch.convolve(ch.inverse(phi), phi) == eps
    for a, b, c in itertools.product(members, repeat=3):
        assert ch.convolve(ch.convolve(a, b), c) == ch.convolve(a, ch.convolve(b, c))


def test_f_m_consistency():
    for char_id in ALL_IDS:
        for alpha in comps_up_to(6):
            expanded = ch.eval_element(char_id, qs.to_M(qs.qsym_basis("F", alpha)))
            assert ch.eval_F(char_id, alpha) == expanded
            # and the other way: pushing an M element into the F basis does
            # not change any character value
            m_elt = qs.qsym_basis("M", alpha)
            assert ch.eval_element(char_id, qs.to_F(m_elt)) == ch.eval_M(char_id, alpha)


def test_multiplicativity_small():
    ids = [ch.ZETA, ch.ZETA_PLUS, ch.ZETA_MINUS, ch.ZETA_INV,
           ch.ZETA_INV_PLUS, ch.ZETA_INV_MINUS]
    comps = comps_up_to(5)
    tables = {char_id: ch.restrict(char_id, 5) for char_id in ids}
    for alpha, beta in itertools.product(comps, repeat=2):
        if sum(alpha) + sum(beta) > 5:
            continue
        product = qs.multiply(qs.qsym_basis("M", alpha), qs.qsym_basis("M", beta))
        for char_id, table in tables.items():
            lhs = sum(
                (c * table.value(gamma) for gamma, c in product.coeffs.items()),
                Fraction(0),
            )
            assert lhs == table.value(alpha) * table.value(beta)


def test_perm_consistency():
    from qsymx.permutations import descent_composition

    for n in range(6):
        for sigma in itertools.permutations(range(1, n + 1)):
            alpha = descent_composition(sigma)
            for char_id in (ch.ZETA, ch.ZETA_MINUS, ch.ZETA_PLUS):
                assert ch.eval_perm(char_id, sigma) == ch.eval_F(char_id, alpha)


def test_h_sums():
    assert ch.h_minus((1,)) == 1
    assert ch.h_minus((2,)) == 0
    assert ch.h_plus((2,)) == 4
    with pytest.raises(ValueError):
        ch.h_plus((2, 1))
    # closed forms on a couple of hand-sized compositions
    assert ch.h_minus((2, 1)) == (-1) ** 2 * 2 ** (3 - 1) * en.bivariate_catalan(0, 0)
    assert ch.h_plus((1, 2, 1)) == 2 ** (4 - 2) * en.bivariate_catalan(1, 0)


def test_zeta_power_values():
    # binomial closed form against the convolution-group definition
    z = ch.restrict(ch.ZETA, 5)
    square = ch.convolve(z, z)
    assert ch.restrict(ch.zeta_power(2), 5) == square
    assert ch.restrict(ch.zeta_power(-2), 5) == ch.inverse(square)
    assert ch.restrict(ch.zeta_power(1), 5) == z
    assert ch.restrict(ch.zeta_power(0), 5) == ch.restrict(ch.COUNIT, 5)
    assert ch.eval_M(ch.zeta_power(-1), (2, 1)) == ch.eval_M(ch.ZETA_INV, (2, 1))
