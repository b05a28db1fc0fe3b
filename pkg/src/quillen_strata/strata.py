"""Per-subgroup strata of the supported coefficient theories.

For each theory and each subgroup class in its nilpotence family this module
produces the stratum: a finite labeled poset of prime descriptors (the
spectrum of the geometric fixed points) together with the action of the
appropriate Weyl group, plus the transition maps between full per-subgroup
spectra that the weak (colimit) assembly consumes.

Theories: height1 (p-complete K-theory for a prime p), ku (representation
rings), hz (integral constant coefficients over cyclic p-groups), modp
(group cohomology over F_q at elementary abelian subgroups of rank <= 2),
kr (real K-theory over C_2).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from . import rings
from .groups import FamilySpec, GroupError, subgroups_up_to_conjugacy, weyl
from .rings import (GF, Poly, PrimeDescriptor, compose_mod, cyclotomic_poly,
                    factor, is_prime, powmod, primes_upto,
                    residue_field_label)

DEFAULT_PRIME_BOUND = 19
DEFAULT_DEGREE_BOUND = 1
MAX_FORM_ENUM = 1 << 20


class TheoryError(Exception):
    """Malformed theory spec string."""


class UnsupportedTheory(Exception):
    """The (theory, group) pair is outside the computable range."""


@dataclass(frozen=True)
class TheorySpec:
    kind: str                  # height1 | ku | hz | modp | kr
    p: int = 0                 # prime (height1, hz, modp, kr)
    f: int = 1                 # modp: q = p^f
    prime_bound: int = DEFAULT_PRIME_BOUND
    degree_bound: int = DEFAULT_DEGREE_BOUND
    is_global: bool = True     # all built-in theories arise globally

    @property
    def q(self):
        return self.p ** self.f

    @property
    def name(self):
        if self.kind == "height1":
            return "height1:p=%d" % self.p
        if self.kind == "hz":
            return "hz:p=%d" % self.p
        if self.kind == "modp":
            return "modp:q=%d,deg=%d" % (self.q, self.degree_bound)
        return self.kind

    def family(self):
        if self.kind == "height1":
            return FamilySpec.cyclic_p(self.p)
        if self.kind == "ku":
            return FamilySpec.cyclic()
        if self.kind == "hz":
            return FamilySpec.all()
        if self.kind == "modp":
            return FamilySpec.elem_abelian_p(self.p)
        if self.kind == "kr":
            return FamilySpec.abelian_p_rank(2, 0)  # trivial subgroup only
        raise TheoryError("unknown theory kind %r" % (self.kind,))

    def has_transition_maps(self):
        return self.kind in ("height1", "ku", "hz")

    def check_supports(self, G):
        if self.kind == "hz":
            n = G.order
            while n % self.p == 0:
                n //= self.p
            if n != 1 or not G.is_cyclic():
                raise UnsupportedTheory(
                    "hz:p=%d supports only cyclic %d-groups, got order %d"
                    % (self.p, self.p, G.order))
        if self.kind == "kr":
            if G.order != 2:
                raise UnsupportedTheory(
                    "kr supports only the group of order 2, got order %d" % G.order)


def parse_theory(text, prime_bound=None, degree_bound=None):
    """Parse a theory spec string: height1:p=2 | ku | hz:p=3 | modp:q=4,deg=1 | kr."""
    text = text.strip()
    pb = DEFAULT_PRIME_BOUND if prime_bound is None else prime_bound
    db = DEFAULT_DEGREE_BOUND if degree_bound is None else degree_bound
    if text == "ku":
        return TheorySpec(kind="ku", prime_bound=pb, degree_bound=db)
    if text == "kr":
        return TheorySpec(kind="kr", p=2, prime_bound=pb, degree_bound=db)
    m = re.fullmatch(r"(height1|hz):p=(\d+)", text)
    if m:
        p = int(m.group(2))
        if not is_prime(p):
            raise TheoryError("p = %d is not prime" % p)
        return TheorySpec(kind=m.group(1), p=p, prime_bound=pb, degree_bound=db)
    m = re.fullmatch(r"modp:q=(\d+)(?:,deg=(\d+))?", text)
    if m:
        q = int(m.group(1))
        if m.group(2) is not None:
            db = int(m.group(2))
        p, f = _prime_power(q)
        return TheorySpec(kind="modp", p=p, f=f, prime_bound=pb, degree_bound=db)
    raise TheoryError("cannot parse theory spec %r" % (text,))


def _prime_power(q):
    for p in range(2, q + 1):
        if is_prime(p) and q % p == 0:
            f = 0
            n = q
            while n % p == 0:
                n //= p
                f += 1
            if n != 1:
                raise TheoryError("q = %d is not a prime power" % q)
            return p, f
    raise TheoryError("q = %d is not a prime power" % q)


def weyl_action_kind(theory, subgroup=None):
    """Which Weyl flavor acts on a stratum.

    Global theories with abelian family members get the Quillen-Weyl group
    N/C; a global theory at a non-abelian subgroup gets N/(H*C); a theory with
    no global structure falls back to the ordinary N/H.
    """
    if not theory.is_global:
        return "ordinary"
    if subgroup is None or subgroup.is_abelian():
        return "quillen"
    return "global"


# -- stratum models ------------------------------------------------------------

@dataclass(frozen=True)
class StratumPoint:
    local_id: str
    descriptor: PrimeDescriptor
    label: str
    closed: bool


@dataclass(frozen=True)
class StratumModel:
    subgroup: object               # SubgroupClass
    points: tuple                  # StratumPoint, canonical order
    internal_edges: tuple          # (i, j) index pairs, generic -> special
    weyl: object                   # WeylGroup or None for empty strata
    action: tuple                  # per sorted quotient element: point index images
    reason: str = ""               # non-empty iff the stratum is empty
    truncated: bool = False

    def is_empty(self):
        return not self.points

    def orbits(self):
        """Weyl orbits of point indices, each sorted, in canonical order."""
        n = len(self.points)
        parent = list(range(n))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for perm in self.action:
            for i, j in enumerate(perm):
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
        groups = {}
        for i in range(n):
            groups.setdefault(find(i), []).append(i)
        return [tuple(sorted(v)) for _, v in sorted(groups.items())]


def _trivial_action(weyl_group, npoints):
    ident = tuple(range(npoints))
    return tuple(ident for _ in weyl_group.sorted_quotient())


def _p_log(order, p):
    i = 0
    n = order
    while n % p == 0:
        n //= p
        i += 1
    return i if n == 1 else None


def _empty(cls, reason):
    return StratumModel(subgroup=cls, points=(), internal_edges=(),
                        weyl=None, action=(), reason=reason)


def stratum(theory, G, cls):
    """The stratum of one subgroup class: points, internal order, Weyl action.

    Classes outside the theory's family give an empty stratum with a reason
    (the geometric fixed points vanish there); group/theory combinations the
    engine cannot handle raise UnsupportedTheory.
    """
    theory.check_supports(G)
    if theory.kind == "height1":
        return _stratum_height1(theory, G, cls)
    if theory.kind == "ku":
        return _stratum_ku(theory, G, cls)
    if theory.kind == "hz":
        return _stratum_hz(theory, G, cls)
    if theory.kind == "modp":
        return _stratum_modp(theory, G, cls)
    if theory.kind == "kr":
        return _stratum_kr(theory, G, cls)
    raise TheoryError("unknown theory kind %r" % (theory.kind,))


def _stratum_height1(theory, G, cls):
    p = theory.p
    i = _p_log(cls.order, p)
    if i is None or not cls.is_cyclic():
        return _empty(cls, "outside family: geometric fixed points vanish")
    w = weyl(G, cls, weyl_action_kind(theory, cls))
    if i == 0:
        points = (
            StratumPoint("Q_%d" % p,
                         PrimeDescriptor("Z_p", "generic", ("zero",), "Q_%d" % p),
                         "Q_%d" % p, False),
            StratumPoint("F_%d" % p,
                         PrimeDescriptor("Z_p", "closed", ("rat", p), "F_%d" % p),
                         "F_%d" % p, True),
        )
        edges = ((0, 1),)
    else:
        lbl = "Q_%d(zeta_%d)" % (p, p ** i)
        points = (StratumPoint(
            lbl, PrimeDescriptor("Z_p", "generic", ("cyclo", p ** i), lbl),
            lbl, False),)
        edges = ()
    # the Quillen-Weyl group acts trivially on these spectra
    return StratumModel(subgroup=cls, points=points, internal_edges=edges,
                        weyl=w, action=_trivial_action(w, len(points)))


def _cyclic_generator(cls):
    for g in cls.sorted_elements():
        if g.order() == cls.order:
            return g
    raise GroupError("subgroup is not cyclic")


def _automorphism_exponent(cls, witness):
    """a with c_witness(h) = h^a on a cyclic subgroup with generator h."""
    h = _cyclic_generator(cls)
    target = witness * h * ~witness
    cur = h
    for a in range(1, cls.order + 1):
        if cur == target:
            return a
        cur = cur * h
    raise GroupError("conjugation does not restrict to the subgroup")


def _ku_points(d, prime_bound):
    """Points of truncated Spec(Z[zeta_d, 1/d]) plus the factor bookkeeping."""
    ring = "Z[zeta_%d,1/%d]" % (d, d)
    label0 = "Q" if d <= 2 else "Q(zeta_%d)" % d
    points = [StratumPoint(
        "0", PrimeDescriptor(ring, "generic", ("cyclo", d), label0), label0, False)]
    factors_at = {}
    for q in primes_upto(prime_bound):
        if d % q == 0:
            continue
        dom = GF(q)
        phi = cyclotomic_poly(d).map_domain(dom, dom.of_int)
        if phi.degree == 0:
            factors = []
        else:
            factors = [g for g, _ in factor(phi)]
        factors_at[q] = factors
        for idx, g in enumerate(factors):
            lbl = residue_field_label(q, g.degree)
            points.append(StratumPoint(
                "%d.%d" % (q, idx),
                PrimeDescriptor(ring, "closed", ("modular", q, tuple(g.coeffs)), lbl),
                lbl, True))
    edges = tuple((0, j) for j in range(1, len(points)))
    return tuple(points), edges, factors_at


def _modular_image(points, q, g_coeffs, exponent, dom):
    """Index of the point whose modular descriptor is the preimage of (q, g)
    under X -> X^exponent (contravariant prime correspondence)."""
    g = Poly(tuple(g_coeffs), dom)
    t = powmod(Poly.x(dom), exponent, g)
    for idx, pt in enumerate(points):
        data = pt.descriptor.data
        if data[0] != "modular" or data[1] != q:
            continue
        cand = Poly(tuple(data[2]), dom)
        if compose_mod(cand, t, g).is_zero():
            return idx
    raise GroupError("modular prime has no preimage (should not happen)")


def _stratum_ku(theory, G, cls):
    if not cls.is_cyclic():
        return _empty(cls, "outside family: geometric fixed points vanish")
    d = cls.order
    w = weyl(G, cls, weyl_action_kind(theory, cls))
    points, edges, _ = _ku_points(d, theory.prime_bound)
    action = []
    for qelem in w.sorted_quotient():
        n = w.witness_of(qelem)
        a = _automorphism_exponent(cls, n) if d > 1 else 1
        if a == 1 or a % d == 1:
            action.append(tuple(range(len(points))))
            continue
        images = [0]  # the generic point is Galois-stable
        for pt in points[1:]:
            _, q, coeffs = pt.descriptor.data
            images.append(_modular_image(points, q, coeffs, a, GF(q)))
        action.append(tuple(images))
    return StratumModel(subgroup=cls, points=points, internal_edges=edges,
                        weyl=w, action=tuple(action), truncated=True)


def _spec_z_points(prime_bound):
    points = [StratumPoint(
        "0", PrimeDescriptor("Z", "generic", ("zero",), "Q"), "Q", False)]
    for q in primes_upto(prime_bound):
        points.append(StratumPoint(
            "q%d" % q, PrimeDescriptor("Z", "closed", ("rat", q), "F_%d" % q),
            "F_%d" % q, True))
    edges = tuple((0, j) for j in range(1, len(points)))
    return tuple(points), edges


def _stratum_hz(theory, G, cls):
    p = theory.p
    i = _p_log(cls.order, p)
    w = weyl(G, cls, weyl_action_kind(theory, cls))
    if i == 0:
        points, edges = _spec_z_points(theory.prime_bound)
        return StratumModel(subgroup=cls, points=points, internal_edges=edges,
                            weyl=w, action=_trivial_action(w, len(points)),
                            truncated=True)
    ring = "Z/%d[t]^h" % p
    points = (
        StratumPoint("gen", PrimeDescriptor(ring, "generic", ("zero",),
                                            "F_%d(t)" % p), "F_%d(t)" % p, False),
        StratumPoint("t", PrimeDescriptor(ring, "closed", ("t",), "F_%d" % p),
                     "F_%d" % p, True),
    )
    return StratumModel(subgroup=cls, points=points, internal_edges=((0, 1),),
                        weyl=w, action=_trivial_action(w, 2))


def _stratum_kr(theory, G, cls):
    if cls.order != 1:
        return _empty(cls, "outside family: geometric fixed points vanish")
    w = weyl(G, cls, weyl_action_kind(theory, cls))
    points, edges = _spec_z_points(theory.prime_bound)
    return StratumModel(subgroup=cls, points=points, internal_edges=edges,
                        weyl=w, action=_trivial_action(w, len(points)),
                        truncated=True)


# -- mod-p strata over F_q ------------------------------------------------------

def form_label(coeffs, dom):
    """Pretty form sum c_i x^i y^(k-i) with canonical normalization applied."""
    k = len(coeffs) - 1
    if k == 1:
        c0, c1 = coeffs
        if c1 == dom.zero:
            return "y"
        if c0 == dom.zero:
            return "x"
        cs = dom.repr_elem(c0)
        return "x+%s*y" % (cs if "+" not in cs and "^" not in cs else "(%s)" % cs)
    terms = []
    for i in range(k, -1, -1):
        c = coeffs[i]
        if c == dom.zero:
            continue
        parts = []
        cs = dom.repr_elem(c)
        if cs != "1":
            parts.append(cs if "+" not in cs else "(%s)" % cs)
        if i:
            parts.append("x" if i == 1 else "x^%d" % i)
        if k - i:
            parts.append("y" if k - i == 1 else "y^%d" % (k - i))
        terms.append("*".join(parts) if parts else "1")
    return "+".join(terms)


def irreducible_forms(dom, max_degree):
    """Monic-normalized irreducible homogeneous forms in x, y of degree <= bound.

    Degree 1: y plus x + c*y for c in F_q.  Degree k >= 2: homogenizations of
    monic irreducible one-variable polynomials of degree k.  Coefficient
    tuples list the coefficient of x^i y^(k-i) at index i.
    """
    q = dom.q
    out = []
    for k in range(1, max_degree + 1):
        if q ** k > MAX_FORM_ENUM:
            raise UnsupportedTheory(
                "degree bound %d over F_%d enumerates too many forms" % (max_degree, q))
        if k == 1:
            out.append((dom.one, dom.zero))  # y
            for c in dom.elements():
                out.append((c, dom.one))
        else:
            for enc in range(q ** k):
                tail = []
                e = enc
                for _ in range(k):
                    tail.append(e % q)
                    e //= q
                cand = Poly(tuple(tail) + (dom.one,), dom)
                if rings.is_irreducible(cand):
                    out.append(tuple(cand.coeffs))
    return out


def _is_rational_linear(coeffs, dom):
    return len(coeffs) == 2 and all(dom.in_prime_field(c) for c in coeffs)


def _form_substitute(coeffs, M, dom):
    """Substitute x -> M[0][0]x + M[0][1]y, y -> M[1][0]x + M[1][1]y into a form."""
    k = len(coeffs) - 1
    a, b = M[0]
    c, d = M[1]
    out = [dom.zero] * (k + 1)

    def binom_pow(u, v, n):
        row = []
        for j in range(n + 1):
            term = dom.of_int(math.comb(n, j))
            term = dom.mul(term, dom.power(u, j))
            term = dom.mul(term, dom.power(v, n - j))
            row.append(term)
        return row  # coefficient of x^j y^(n-j)

    for i, ci in enumerate(coeffs):
        if ci == dom.zero:
            continue
        left = binom_pow(a, c, i)       # (a x + c y)^i  -- column-vector action
        right = binom_pow(b, d, k - i)  # (b x + d y)^(k-i)
        for j1, t1 in enumerate(left):
            if t1 == dom.zero:
                continue
            for j2, t2 in enumerate(right):
                if t2 == dom.zero:
                    continue
                out[j1 + j2] = dom.add(out[j1 + j2],
                                       dom.mul(ci, dom.mul(t1, t2)))
    return _normalize_form(tuple(out), dom)


def _normalize_form(coeffs, dom):
    k = len(coeffs) - 1
    if coeffs[k] != dom.zero:
        inv = dom.inv(coeffs[k])
        return tuple(dom.mul(inv, c) for c in coeffs)
    last = max(i for i, c in enumerate(coeffs) if c != dom.zero)
    inv = dom.inv(coeffs[last])
    return tuple(dom.mul(inv, c) for c in coeffs)


def _matrix_inverse_modp(M, p):
    (a, b), (c, d) = M
    det = (a * d - b * c) % p
    if det == 0:
        raise GroupError("Weyl matrix is singular (should not happen)")
    inv = pow(det, -1, p)
    return ((d * inv % p, -b * inv % p), (-c * inv % p, a * inv % p))


def _elem_abelian_basis(cls, p):
    """Canonical basis and coordinate map of an elementary abelian subgroup."""
    els = cls.sorted_elements()
    ident = els[0] if els[0].is_identity() else None
    basis = []
    span = {e for e in els if e.is_identity()}
    for g in els:
        if g in span:
            continue
        basis.append(g)
        new_span = set()
        for s in span:
            cur = s
            for _ in range(p):
                new_span.add(cur)
                cur = cur * g
        span = new_span
        if len(span) == cls.order:
            break
    coords = {}
    if len(basis) == 2:
        e1, e2 = basis
        cur1 = None
        x = e1 ** 0
        for i in range(p):
            y = x
            for j in range(p):
                coords[y] = (i, j)
                y = y * e2
            x = x * e1
    elif len(basis) == 1:
        x = basis[0] ** 0
        for i in range(p):
            coords[x] = (i,)
            x = x * basis[0]
    return basis, coords


def _weyl_matrix(cls, basis, coords, witness, p):
    cols = []
    for e in basis:
        img = witness * e * ~witness
        cols.append(coords[img])
    # coords gives (i, j) with img = e1^i e2^j: column vector per basis element
    return ((cols[0][0] % p, cols[1][0] % p),
            (cols[0][1] % p, cols[1][1] % p))


def _stratum_modp(theory, G, cls):
    p, q = theory.p, theory.q
    if not cls.is_elementary_abelian(p):
        return _empty(cls, "outside family: geometric fixed points vanish")
    r = cls.p_rank(p)
    if r > 2:
        raise UnsupportedTheory(
            "modp strata are implemented for elementary abelian rank <= 2; "
            "got rank %d" % r)
    dom = GF(theory.p, theory.f)
    ring = "F_%d[x,y]^h" % q
    w = weyl(G, cls, weyl_action_kind(theory, cls))
    if r == 0:
        points = (StratumPoint(
            "irr", PrimeDescriptor(ring, "closed", ("irrelevant",), "F_%d" % q),
            "F_%d" % q, True),)
        return StratumModel(subgroup=cls, points=points, internal_edges=(),
                            weyl=w, action=_trivial_action(w, 1))
    if r == 1:
        points = (StratumPoint(
            "0", PrimeDescriptor(ring, "generic", ("zero",), "F_%d(x)" % q),
            "F_%d(x)" % q, False),)
        return StratumModel(subgroup=cls, points=points, internal_edges=(),
                            weyl=w, action=_trivial_action(w, 1))
    forms = [cf for cf in irreducible_forms(dom, theory.degree_bound)
             if not _is_rational_linear(cf, dom)]
    forms.sort(key=lambda cf: (len(cf), cf))
    points = [StratumPoint(
        "0", PrimeDescriptor(ring, "generic", ("zero",), "F_%d(x,y)" % q),
        "F_%d(x,y)" % q, False)]
    index_of = {}
    for cf in forms:
        lbl = "(%s)" % form_label(cf, dom)
        index_of[cf] = len(points)
        points.append(StratumPoint(
            form_label(cf, dom),
            PrimeDescriptor(ring, "height-one", ("form", len(cf) - 1, cf), lbl),
            lbl, False))
    edges = tuple((0, j) for j in range(1, len(points)))
    basis, coords = _elem_abelian_basis(cls, p)
    action = []
    for qelem in w.sorted_quotient():
        n = w.witness_of(qelem)
        M = _weyl_matrix(cls, basis, coords, n, p)
        Minv = _matrix_inverse_modp(M, p)
        Mdom = tuple(tuple(dom.of_int(x) for x in row) for row in Minv)
        images = [0]
        for cf in forms:
            img = _form_substitute(cf, Mdom, dom)
            images.append(index_of[img])
        action.append(tuple(images))
    # the full homogeneous spectrum is infinite; the degree bound truncates it
    return StratumModel(subgroup=cls, points=tuple(points),
                        internal_edges=edges, weyl=w, action=tuple(action),
                        truncated=True)


# -- transition maps (weak assembly) -------------------------------------------

def transition_map(theory, morphism, src_cls, dst_cls, src_points, dst_points):
    """Point map induced by a morphism c_g: H -> K on full per-subgroup spectra.

    src_points / dst_points are the points of the assembled spectra of the
    source and target subgroups (duck-typed: .id, .label, .descriptor,
    .stratum_order, .local_id).  Returns {src id: dst id}.
    """
    if not theory.has_transition_maps():
        raise UnsupportedTheory(
            "theory %s has no transition maps" % theory.name)
    if theory.kind == "height1":
        by_label = {pt.label: pt.id for pt in dst_points}
        return {pt.id: by_label[pt.label] for pt in src_points}
    if theory.kind == "hz":
        by_key = {(pt.stratum_order, pt.local_id): pt.id for pt in dst_points}
        return {pt.id: by_key[(pt.stratum_order, pt.local_id)]
                for pt in src_points}
    # ku: contraction along R(K) -> R(H), X -> Y^u
    c, d = src_cls.order, dst_cls.order
    if c == 1:
        u = 1
    else:
        h = _cyclic_generator(src_cls)
        k = _cyclic_generator(dst_cls)
        img = morphism.witness * h * ~morphism.witness
        t = None
        cur = k
        for a in range(1, d + 1):
            if cur == img:
                t = a
                break
            cur = cur * k
        if t is None:
            raise GroupError("witness does not map generator into target")
        u = (t * c // d) % c
    by_cyclo = {}
    by_modular = {}
    for pt in dst_points:
        data = pt.descriptor.data
        if data[0] == "cyclo":
            by_cyclo[data[1]] = pt.id
        elif data[0] == "modular":
            by_modular.setdefault(data[1], []).append(pt)
    out = {}
    for pt in src_points:
        data = pt.descriptor.data
        if data[0] == "cyclo":
            out[pt.id] = by_cyclo[data[1]]
            continue
        _, q, coeffs = data
        dom = GF(q)
        g = Poly(tuple(coeffs), dom)
        tpoly = powmod(Poly.x(dom), u, g)
        image = None
        for cand in by_modular[q]:
            cpoly = Poly(tuple(cand.descriptor.data[2]), dom)
            if compose_mod(cpoly, tpoly, g).is_zero():
                image = cand.id
                break
        if image is None:
            raise GroupError("contraction of (%d, ...) not found" % q)
        out[pt.id] = image
    return out


def theory_family_classes(theory, G, classes=None):
    """Family members of the theory in G, in canonical class order."""
    theory.check_supports(G)
    if classes is None:
        classes = subgroups_up_to_conjugacy(G)
    fam = theory.family()
    members = [cls for cls in classes if fam.contains(cls)]
    if theory.kind == "modp":
        for cls in members:
            if cls.p_rank(theory.p) > 2:
                raise UnsupportedTheory(
                    "modp strata are implemented for elementary abelian "
                    "rank <= 2; group has a rank-%d subgroup"
                    % cls.p_rank(theory.p))
    return members
