"""Shared independent oracles for the test suite.

These deliberately re-derive results with naive algorithms (subset
enumeration, trial division, Fraction arithmetic) that share no code with the
package, so the tests anchor the fast implementations to something dumb and
trustworthy.
"""

import itertools
from fractions import Fraction

import pytest


def compose(a, b):
    """Composition of image tuples: (a o b)(i) = a[b[i]]."""
    return tuple(a[b[i]] for i in range(len(a)))


def naive_closure(gens):
    """Closure of image tuples under composition, by saturation."""
    gens = [tuple(g) for g in gens]
    ident = tuple(range(len(gens[0])))
    els = {ident} | set(gens)
    changed = True
    while changed:
        changed = False
        for a in list(els):
            for b in list(els):
                c = compose(a, b)
                if c not in els:
                    els.add(c)
                    changed = True
    return els


def naive_subgroup_count(elements):
    """Count closed nonempty subsets by brute force (tiny groups only)."""
    els = sorted(elements)
    n = len(els)
    count = 0
    for r in range(1, n + 1):
        if n % r:
            continue
        for sub in itertools.combinations(els, r):
            s = set(sub)
            if all(compose(a, b) in s for a in sub for b in sub):
                count += 1
    return count


def frac_poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def frac_poly_divmod(a, b):
    a = [Fraction(c) for c in a]
    b = [Fraction(c) for c in b]
    while b and b[-1] == 0:
        b.pop()
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b) and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) < len(b):
            break
        c = a[-1] / b[-1]
        d = len(a) - len(b)
        q[d] = c
        for i, x in enumerate(b):
            a[d + i] -= c * x
    while a and a[-1] == 0:
        a.pop()
    return q, a


def naive_monic_polys(p, degree):
    for tail in itertools.product(range(p), repeat=degree):
        yield list(tail) + [1]


def _np_divmod(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    if len(a) - 1 < db:
        return [], a
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv % p
        for j in range(db + 1):
            a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    while a and a[-1] == 0:
        a.pop()
    return None, a


_SIEVES = {}


def naive_irreducibles(p, max_degree):
    """All monic irreducibles of degree <= max_degree over F_p, by sieve."""
    key = (p, max_degree)
    if key in _SIEVES:
        return _SIEVES[key]
    out = []
    for k in range(1, max_degree + 1):
        for cand in naive_monic_polys(p, k):
            if all(_np_divmod(cand, g, p)[1] for g in out if len(g) - 1 <= k // 2):
                out.append(cand)
    _SIEVES[key] = out
    return out


def _np_exact_div(f, g, p):
    q = []
    a = list(f)
    db = len(g) - 1
    inv = pow(g[-1], -1, p)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv % p
        q.append(c)
        for j in range(db + 1):
            a[i - db + j] = (a[i - db + j] - c * g[j]) % p
    f = list(reversed(q))
    while f and f[-1] == 0:
        f.pop()
    return f


def naive_factor_count(coeffs, p):
    """Number of irreducible factors (with multiplicity) by trial division.

    Divides by every irreducible of degree <= deg/2; whatever is left of
    positive degree is itself irreducible.
    """
    f = [c % p for c in coeffs]
    while f and f[-1] == 0:
        f.pop()
    count = 0
    sieve = naive_irreducibles(p, max(1, (len(f) - 1) // 2))
    for g in sieve:
        while len(f) > len(g) - 1:
            _, rem = _np_divmod(f, g, p)
            if rem:
                break
            count += 1
            f = _np_exact_div(f, g, p)
    if len(f) > 1:
        count += 1
    return count


@pytest.fixture(scope="session")
def corpus_groups():
    from quillen_strata.corpus import corpus_groups as cg
    return cg()
