"""The torsion polynomial of the multiplicative group vs the p-series.

At height one the polynomial P(X) = prod_{j < p} (X - (zeta_p^j - 1)),
expanded exactly over Q(zeta_p), coincides with the p-series polynomial
(1+X)^p - 1.  Over Q(zeta_p) it is separable; its reduction at the unique
prime above p collapses to X^p, which is not.
"""

from quillen_strata.rings import (divides, is_separable, level_polynomial_P,
                                  p_series_mult, reduce_cyclo_mod_p)

for p in (2, 3, 5, 7):
    data = level_polynomial_P(p)
    q_poly = data.q_over_cyclo()
    ok_pq, quot = divides(data.P, q_poly)
    ok_qp, _ = divides(q_poly, data.P)
    reduced = reduce_cyclo_mod_p(data.P, p)
    print("p = %d" % p)
    print("  P            =", data.P.pretty())
    print("  (1+X)^p - 1  =", p_series_mult(p).pretty())
    print("  P | Q and Q | P:", ok_pq and ok_qp, " quotient:", quot.pretty())
    print("  separable over Q(zeta_%d): %s" % (p, is_separable(q_poly)))
    print("  reduction mod %d: %s  separable: %s"
          % (p, reduced.pretty(), is_separable(reduced)))
    assert ok_pq and ok_qp and quot.is_one()
