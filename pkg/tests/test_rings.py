from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quillen_strata.rings import (GF, CycloField, Poly, QQ,
                                  RingError, ZZ, compose_mod,
                                  cyclic_spectrum_ring, cyclotomic_poly,
                                  divides, factor, factor_count,
                                  is_irreducible, is_separable,
                                  is_squarefree_mod, level_polynomial_P,
                                  p_series_mult, poly_gcd, powmod,
                                  prime_splitting, reduce_cyclo_mod_p,
                                  residue_field_label)

from conftest import frac_poly_divmod, frac_poly_mul, naive_factor_count


# -- cyclotomic polynomials ----------------------------------------------------

def test_cyclotomic_small():
    assert cyclotomic_poly(1).coeffs == (-1, 1)
    assert cyclotomic_poly(2).coeffs == (1, 1)


def test_cyclotomic_phi4_against_fraction_oracle():
    # oracle: divide X^4 - 1 by Phi_1 * Phi_2 using Fraction arithmetic
    num = [Fraction(-1), 0, 0, 0, Fraction(1)]
    den = frac_poly_mul([Fraction(-1), Fraction(1)], [Fraction(1), Fraction(1)])
    quot, rem = frac_poly_divmod(num, den)
    assert not rem
    assert [Fraction(c) for c in cyclotomic_poly(4).coeffs] == quot
    assert cyclotomic_poly(4).coeffs == (1, 0, 1)


@pytest.mark.parametrize("d", list(range(1, 61)) + [105, 128, 200])
def test_cyclotomic_product_identity(d):
    prod = Poly.one(ZZ)
    for e in range(1, d + 1):
        if d % e == 0:
            prod = prod * cyclotomic_poly(e)
    assert prod == Poly.from_ints([-1] + [0] * (d - 1) + [1], ZZ)


def test_cyclotomic_degree_is_phi():
    from quillen_strata.rings import euler_phi
    for d in (1, 2, 3, 8, 12, 30, 64):
        assert cyclotomic_poly(d).degree == euler_phi(d)


def test_cyclotomic_bound():
    with pytest.raises(RingError):
        cyclotomic_poly(5000)


# -- prime splitting -----------------------------------------------------------

def test_prime_splitting_examples():
    assert prime_splitting(1, 3).count == 1
    s = prime_splitting(5, 2)
    assert (s.count, s.residue_degree) == (1, 4)
    s = prime_splitting(8, 7)
    assert (s.count, s.residue_degree) == (2, 2)
    with pytest.raises(RingError):
        prime_splitting(6, 3)


@pytest.mark.parametrize("d", list(range(1, 11)) + [12])
@pytest.mark.parametrize("q", [2, 3, 5, 7, 11, 13])
def test_splitting_against_naive_trial_division(d, q):
    if d % q == 0:
        return
    phi = cyclotomic_poly(d)
    if phi.degree == 0:
        return
    expected = naive_factor_count(list(phi.coeffs), q)
    assert prime_splitting(d, q).count == expected
    dom = GF(q)
    assert factor_count(phi.map_domain(dom, dom.of_int)) == expected


def test_splitting_matches_package_factorization():
    for d in range(1, 41):
        for q in (2, 3, 5, 7, 11, 13, 17, 97):
            if d % q == 0:
                continue
            dom = GF(q)
            phi = cyclotomic_poly(d).map_domain(dom, dom.of_int)
            if phi.degree == 0:
                continue
            split = prime_splitting(d, q)
            factors = factor(phi)
            assert len(factors) == split.count
            assert all(g.degree == split.residue_degree for g, _ in factors)
            assert all(e == 1 for _, e in factors)
            assert is_squarefree_mod(phi)


# -- finite fields -------------------------------------------------------------

def test_gf4_structure():
    F4 = GF(2, 2)
    a = F4.gen()
    assert F4.mul(a, a) == F4.add(a, F4.one)      # a^2 = a + 1
    assert F4.mul(a, F4.mul(a, a)) == F4.one      # a^3 = 1
    assert F4.repr_elem(F4.mul(a, a)) == "a+1"
    assert F4.inv(a) == F4.mul(a, a)


@given(st.sampled_from([2, 3, 5, 7]), st.data())
@settings(max_examples=60, deadline=None)
def test_gf_field_axioms(p, data):
    f = data.draw(st.sampled_from([1, 2]))
    dom = GF(p, f)
    xs = st.integers(min_value=0, max_value=dom.q - 1)
    a, b, c = data.draw(xs), data.draw(xs), data.draw(xs)
    assert dom.mul(a, dom.add(b, c)) == dom.add(dom.mul(a, b), dom.mul(a, c))
    assert dom.mul(dom.mul(a, b), c) == dom.mul(a, dom.mul(b, c))
    if a:
        assert dom.mul(a, dom.inv(a)) == dom.one


@given(st.sampled_from([2, 3, 5]),
       st.lists(st.integers(min_value=0, max_value=6), min_size=1, max_size=9),
       st.lists(st.integers(min_value=0, max_value=6), min_size=2, max_size=7))
@settings(max_examples=80, deadline=None)
def test_poly_divmod_roundtrip(p, a_coeffs, b_coeffs):
    dom = GF(p)
    a = Poly(tuple(c % p for c in a_coeffs), dom)
    b = Poly(tuple(c % p for c in b_coeffs), dom)
    if b.is_zero():
        return
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.degree < b.degree


@given(st.sampled_from([2, 3, 5, 7]),
       st.lists(st.integers(min_value=0, max_value=9), min_size=3, max_size=9))
@settings(max_examples=80, deadline=None)
def test_factor_reassembles(p, coeffs):
    dom = GF(p)
    f = Poly(tuple(c % p for c in coeffs), dom)
    if f.degree < 1:
        return
    lead = f.leading()
    prod = Poly((lead,), dom)
    for g, e in factor(f):
        assert g.is_monic()
        assert is_irreducible(g)
        for _ in range(e):
            prod = prod * g
    assert prod == f


def test_factor_is_deterministic():
    dom = GF(13)
    f = cyclotomic_poly(36).map_domain(dom, dom.of_int)
    assert factor(f) == factor(f)


def test_is_irreducible_over_gf4():
    F4 = GF(2, 2)
    a = F4.gen()
    # x^2 + x + a is irreducible over F_4; x^2 + 1 = (x+1)^2 is not
    assert is_irreducible(Poly((a, F4.one, F4.one), F4))
    assert not is_irreducible(Poly((F4.one, F4.zero, F4.one), F4))


def test_powmod_and_compose_mod():
    dom = GF(5)
    f = Poly.from_ints([1, 0, 1], dom)     # X^2 + 1
    x = Poly.x(dom)
    assert powmod(x, 4, f) == Poly.from_ints([1], dom) * Poly.from_ints([1], dom) * Poly.from_ints([1], dom)
    # X^4 = (X^2)^2 = (-1)^2 = 1 mod X^2+1
    assert powmod(x, 4, f) == Poly.one(dom)
    g = Poly.from_ints([0, 0, 1], dom)     # t^2
    assert compose_mod(g, x, f) == (x * x) % f


# -- level polynomials and the p-series ------------------------------------------

def test_p_series_examples():
    assert p_series_mult(2).coeffs == (0, 2, 1)
    assert p_series_mult(3).coeffs == (0, 3, 3, 1)
    assert p_series_mult(5).coeffs == (0, 5, 10, 10, 5, 1)


def test_level_polynomial_p2_from_roots():
    # zeta_2 = -1: P = (X - 0)(X - (-2)) = X^2 + 2X
    data = level_polynomial_P(2)
    K = data.P.dom
    assert data.P == data.q_over_cyclo()
    assert [c for c in data.P.coeffs] == [K.zero, K.of_int(2), K.one]


def test_level_polynomial_p3_oracle():
    # expand prod_j (X - (zeta^j - 1)) by hand in Z[zeta], zeta^2 = -1 - zeta
    # roots: 0, zeta - 1, zeta^2 - 1 = -2 - zeta
    # (X - (zeta-1))(X - (-2-zeta)) = X^2 + 3X + (zeta-1)(-2-zeta) hand-checked:
    # (zeta-1)(-2-zeta) = -2zeta - zeta^2 + 2 + zeta = -zeta - (-1-zeta) + 2 = 3
    data = level_polynomial_P(3)
    K = data.P.dom
    expected = Poly((K.zero, K.of_int(3), K.of_int(3), K.one), K)
    assert data.P == expected


def test_level_polynomial_trivial_convention():
    data = level_polynomial_P(3, k=0)
    assert data.P.degree == 1
    assert data.P.coeffs[-1] == data.P.dom.one


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_level_divides_both_ways(p):
    data = level_polynomial_P(p)
    q = data.q_over_cyclo()
    ok1, quot1 = divides(data.P, q)
    ok2, quot2 = divides(q, data.P)
    assert ok1 and ok2
    assert quot1.is_one() and quot2.is_one()
    assert data.P == q


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_level_separability(p):
    data = level_polynomial_P(p)
    assert is_separable(data.q_over_cyclo())
    reduced = reduce_cyclo_mod_p(data.P, p)
    assert reduced.coeffs == tuple([0] * p + [1])  # X^p
    assert not is_separable(reduced)


def test_divides_examples():
    ok, quot = divides(Poly.from_ints([0, 1], ZZ), p_series_mult(2))
    assert ok and quot.coeffs == (2, 1)
    dom = GF(2)
    ok, rem = divides(Poly.from_ints([0, 0, 1], dom),
                      Poly.from_ints([0, 1, 0, 1], dom))
    assert not ok and not rem.is_zero()
    with pytest.raises(RingError):
        divides(Poly.from_ints([0, 2], ZZ), p_series_mult(2))


def test_is_separable_basics():
    assert is_separable(Poly.x(QQ))
    dom = GF(3)
    assert not is_separable(Poly.from_ints([0, 0, 0, 1], dom))  # X^3, f' = 0


# -- cyclotomic field arithmetic -------------------------------------------------

def test_cyclo_field_inverse_and_zeta():
    K = CycloField(5)
    z = K.zeta()
    assert K.power(z, 5) == K.one
    el = K.add(z, K.one)
    inv = K.inv(el)
    assert K.mul(el, inv) == K.one
    K2 = CycloField(2)
    assert K2.zeta() == K2.neg(K2.one)


def test_gcd_over_cyclotomic_field():
    K = CycloField(3)
    f = level_polynomial_P(3).P
    g = f.derivative()
    assert poly_gcd(f, g).degree == 0


# -- Spec(Z[X]/(X^n - 1)) ---------------------------------------------------------

def test_cyclic_spectrum_n1_is_spec_z():
    sr = cyclic_spectrum_ring(1, 10)
    assert [m.data for m in sr.minimal] == [("cyclo", 1)]
    assert [m.data[1] for m in sr.maximal] == [2, 3, 5, 7]
    assert sr.truncated


def test_cyclic_spectrum_n2_glued_at_two():
    sr = cyclic_spectrum_ring(2, 7)
    assert [m.data for m in sr.minimal] == [("cyclo", 1), ("cyclo", 2)]
    at2 = [j for j, m in enumerate(sr.maximal) if m.data[1] == 2]
    assert len(at2) == 1
    over_2 = [i for (i, j) in sr.contains if j == at2[0]]
    assert sorted(over_2) == [0, 1]  # both minimal primes glue at 2
    for q in (3, 5, 7):
        atq = [j for j, m in enumerate(sr.maximal) if m.data[1] == q]
        assert len(atq) == 2
        for j in atq:
            assert len([i for (i, jj) in sr.contains if jj == j]) == 1


def test_cyclic_spectrum_n3_at_3():
    sr = cyclic_spectrum_ring(3, 7)
    assert [m.data for m in sr.minimal] == [("cyclo", 1), ("cyclo", 3)]
    at3 = [j for j, m in enumerate(sr.maximal) if m.data[1] == 3]
    # X^3 - 1 = (X - 1)^3 mod 3: a single maximal prime over 3
    assert len(at3) == 1
    over_3 = sorted(i for (i, j) in sr.contains if j == at3[0])
    assert over_3 == [0, 1]  # (3, x-1) = (3, Phi_3(x)) contains both


def test_cyclic_spectrum_every_maximal_covers_a_minimal():
    for n in (1, 2, 4, 6, 12):
        sr = cyclic_spectrum_ring(n, 13)
        covered = {j for (_, j) in sr.contains}
        assert covered == set(range(len(sr.maximal)))


def test_cyclic_spectrum_counts_match_splitting():
    for n in (4, 6, 10):
        sr = cyclic_spectrum_ring(n, 13)
        divisors = [d for d in range(1, n + 1) if n % d == 0]
        for i, d in enumerate(divisors):
            for q in (3, 5, 7, 11, 13):
                if n % q == 0:
                    continue
                over = [j for (ii, j) in sr.contains
                        if ii == i and sr.maximal[j].data[1] == q]
                assert len(over) == prime_splitting(d, q).count


def test_residue_field_label():
    assert residue_field_label(3, 1) == "F_3"
    assert residue_field_label(3, 2) == "F_3^2"
