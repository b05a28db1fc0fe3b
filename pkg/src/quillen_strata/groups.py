"""Finite permutation-group engine.

Elements are permutations of {0..n-1}; groups are closed element sets with a
generating set.  Everything here is brute force on purpose: the groups this
package cares about have order at most a few dozen, and determinism matters
more than asymptotics.  All outputs are canonically ordered so repeated runs
produce identical results.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
MAX_ORDER = 10_000
MAX_DSL_DEGREE = 64


class GroupError(Exception):
    """Base class for group-engine failures."""


class GroupParseError(GroupError):
    """Malformed group DSL string or selector."""


class BoundExceeded(GroupError):
    """Order or degree construction bound exceeded."""


class Perm:
    """A permutation of {0..n-1} stored as its tuple of images."""

    __slots__ = ("images", "_hash")

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise GroupError("not a bijection on 0..%d: %r" % (len(images) - 1, images))
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "_hash", hash(images))

    def __setattr__(self, name, value):
        raise AttributeError("Perm is immutable")

    @property
    def degree(self):
        return len(self.images)

    @staticmethod
    def identity(degree):
        return Perm(range(degree))

    @staticmethod
    def from_cycles(cycles, degree):
        images = list(range(degree))
        for cyc in cycles:
            if len(set(cyc)) != len(cyc):
                raise GroupParseError("repeated point in cycle %r" % (cyc,))
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                if not (0 <= a < degree):
                    raise GroupParseError("point %d out of range" % a)
                images[a] = b
        return Perm(images)

    def __mul__(self, other):
        # (a*b)(x) = a(b(x))
        bi = other.images
        ai = self.images
        return Perm(tuple(ai[bi[i]] for i in range(len(ai))))

    def __invert__(self):
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(inv)

    def __pow__(self, n):
        if n < 0:
            return (~self) ** (-n)
        out = Perm.identity(self.degree)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conj(self, g):
        """c_g(self) = g * self * g^-1."""
        return g * self * ~g

    def order(self):
        n = 1
        cur = self
        ident = Perm.identity(self.degree)
        while cur != ident:
            cur = cur * self
            n += 1
        return n

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self):
        """Non-trivial cycles, each rotated to start at its minimum, sorted."""
        seen = set()
        out = []
        for start in range(len(self.images)):
            if start in seen or self.images[start] == start:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self.images[start]
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self.images[nxt]
            out.append(tuple(cyc))
        return tuple(sorted(out))

    def cycle_string(self):
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(p) for p in c) + ")" for c in cycs)

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __le__(self, other):
        return self.images <= other.images

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "Perm%s" % (self.cycle_string(),)


def mulclose(gens, cap=MAX_ORDER, seed=None):
    """Closure of a generating set under multiplication (BFS)."""
    gens = list(gens)
    if not gens:
        raise GroupError("mulclose needs at least one element to fix the degree")
    els = set(seed) if seed is not None else set()
    els.update(gens)
    els.add(Perm.identity(gens[0].degree))
    bdy = list(els)
    while bdy:
        new = []
        for a in gens:
            for b in bdy:
                c = a * b
                if c not in els:
                    els.add(c)
                    if len(els) > cap:
                        raise BoundExceeded("group order exceeds bound %d" % cap)
                    new.append(c)
        bdy = new
    return frozenset(els)


class PermGroup:
    """A finite permutation group; the full element set is computed eagerly."""

    def __init__(self, degree, generators, _elements=None):
        self.degree = degree
        gens = tuple(generators)
        for g in gens:
            if g.degree != degree:
                raise GroupError("generator degree mismatch")
        if not gens:
            gens = (Perm.identity(degree),)
        self.generators = gens
        if _elements is not None:
            self.elements = frozenset(_elements)
        else:
            self.elements = mulclose(gens)
        self._sorted = None

    @property
    def order(self):
        return len(self.elements)

    @property
    def sorted_elements(self):
        if self._sorted is None:
            self._sorted = tuple(sorted(self.elements))
        return self._sorted

    def identity(self):
        return Perm.identity(self.degree)

    def __contains__(self, p):
        return p in self.elements

    def __iter__(self):
        return iter(self.sorted_elements)

    def __len__(self):
        return self.order

    def subgroup(self, elements):
        """The subgroup on a closed element subset (trusted, not re-closed)."""
        return PermGroup(self.degree, tuple(sorted(elements)), _elements=elements)

    def is_abelian(self):
        els = self.sorted_elements
        return all(a * b == b * a for a, b in itertools.combinations(els, 2))

    def is_cyclic(self):
        return any(g.order() == self.order for g in self.elements)

    def __repr__(self):
        return "PermGroup(degree=%d, order=%d)" % (self.degree, self.order)


def subgroup_key(elements):
    """Canonical key of a subgroup: the sorted tuple of element image-tuples."""
    return tuple(sorted(p.images for p in elements))


def conjugate_set(elements, g):
    return frozenset(g * s * ~g for s in elements)


def normalizer(G, elements):
    return frozenset(g for g in G.elements if conjugate_set(elements, g) == elements)


def centralizer(G, elements):
    return frozenset(
        g for g in G.elements if all(g * s == s * g for s in elements)
    )


def set_product(A, B):
    return frozenset(a * b for a in A for b in B)


# -- subgroup enumeration ----------------------------------------------------

def cyclic_subgroup_sets(G):
    out = set()
    for g in G.elements:
        cur = g
        els = {g}
        while not cur.is_identity():
            cur = cur * g
            els.add(cur)
        out.add(frozenset(els))
    return out


def all_subgroup_sets(G):
    """Every subgroup of G as a frozenset of elements.

    Brute force: start from cyclic subgroups and saturate under joins with
    cyclic subgroups.  Every subgroup arises this way because it is generated
    by its own cyclic subgroups.
    """
    cyc = sorted(cyclic_subgroup_sets(G), key=subgroup_key)
    subs = set(cyc)
    subs.add(frozenset({G.identity()}))
    frontier = list(subs)
    while frontier:
        new = []
        for S in frontier:
            for C in cyc:
                if C <= S:
                    continue
                J = mulclose(sorted(S | C), cap=G.order)
                if J not in subs:
                    subs.add(J)
                    new.append(J)
        frontier = new
    return subs


@dataclass(frozen=True)
class SubgroupClass:
    """A conjugacy class of subgroups, with canonical representative."""

    parent: PermGroup
    elements: frozenset          # representative subgroup
    order: int
    conjugates: int
    normalizer_elements: frozenset
    centralizer_elements: frozenset
    index: int                   # position in the canonical class list
    key: tuple

    def as_group(self):
        return self.parent.subgroup(self.elements)

    def sorted_elements(self):
        return tuple(sorted(self.elements))

    def is_abelian(self):
        els = self.sorted_elements()
        return all(a * b == b * a for a, b in itertools.combinations(els, 2))

    def is_cyclic(self):
        return any(g.order() == self.order for g in self.elements)

    def is_p_group(self, p):
        n = self.order
        while n % p == 0:
            n //= p
        return n == 1

    def is_elementary_abelian(self, p):
        if not self.is_p_group(p) or not self.is_abelian():
            return False
        return all(g.is_identity() or g.order() == p for g in self.elements)

    def p_rank(self, p):
        """Minimal generator count of an abelian p-group: rank of A/pA."""
        if self.order == 1:
            return 0
        if not (self.is_p_group(p) and self.is_abelian()):
            raise GroupError("p_rank needs an abelian p-group")
        ppowers = frozenset(g ** p for g in self.elements)
        quot = self.order // len(ppowers)
        rank = 0
        while quot > 1:
            quot //= p
            rank += 1
        return rank

    def generator_strings(self):
        grp = self.as_group()
        small = minimal_generators(grp)
        return tuple(g.cycle_string() for g in small)

    def __repr__(self):
        return "SubgroupClass(order=%d, index=%d, size=%d)" % (
            self.order, self.index, self.conjugates)


def minimal_generators(G):
    """A small (greedy, deterministic) generating set."""
    if G.order == 1:
        return (G.identity(),)
    gens = []
    span = frozenset({G.identity()})
    for g in G.sorted_elements:
        if g in span:
            continue
        gens.append(g)
        span = mulclose(gens, cap=G.order)
        if len(span) == G.order:
            break
    return tuple(gens)


def subgroups_up_to_conjugacy(G):
    """One SubgroupClass per conjugacy class, sorted by (order, canonical key)."""
    if G.order > MAX_ORDER:
        raise BoundExceeded("group order %d exceeds bound" % G.order)
    subs = all_subgroup_sets(G)
    remaining = dict.fromkeys(sorted(subs, key=lambda s: (len(s), subgroup_key(s))))
    raw = []
    for S in list(remaining):
        if S not in remaining:
            continue
        orbit = {conjugate_set(S, g) for g in G.elements}
        for T in orbit:
            remaining.pop(T, None)
        rep = min(orbit, key=subgroup_key)
        raw.append((rep, len(orbit)))
    raw.sort(key=lambda t: (len(t[0]), subgroup_key(t[0])))
    classes = []
    for idx, (rep, count) in enumerate(raw):
        N = normalizer(G, rep)
        C = centralizer(G, rep)
        cls = SubgroupClass(
            parent=G, elements=rep, order=len(rep), conjugates=count,
            normalizer_elements=N, centralizer_elements=C,
            index=idx, key=subgroup_key(rep))
        if count != G.order // len(N):
            raise GroupError("conjugate count mismatch for class %r" % (cls,))
        if not (rep <= N and C <= N):
            raise GroupError("normalizer inclusion violated")
        classes.append(cls)
    return classes


def class_containing(classes, elements):
    """The class whose orbit contains the given subgroup element set."""
    elements = frozenset(elements)
    G = classes[0].parent
    for cls in classes:
        if len(elements) != cls.order:
            continue
        if any(conjugate_set(cls.elements, g) == elements for g in G.elements):
            return cls
    raise GroupError("subgroup does not match any class")


# -- Weyl groups -------------------------------------------------------------

@dataclass(frozen=True)
class WeylGroup:
    """N_G(H)/X realized via its left action on the cosets of X in N_G(H).

    kind "ordinary" takes X = H, "global" X = H*C_G(H), "quillen" X = C_G(H).
    witnesses pairs each quotient element with its minimal representative in N.
    """

    kind: str
    order: int
    quotient: PermGroup
    witnesses: tuple  # ((quotient Perm, representative Perm in N), ...)

    def witness_of(self, qelem):
        for q, n in self.witnesses:
            if q == qelem:
                return n
        raise GroupError("element not in Weyl quotient")

    def sorted_quotient(self):
        return self.quotient.sorted_elements


def _quotient_by(n_elements, x_elements):
    """The quotient N/X as a permutation action on left cosets of X."""
    n_sorted = sorted(n_elements)
    coset_of = {}
    reps = []
    for n in n_sorted:
        if n in coset_of:
            continue
        idx = len(reps)
        reps.append(n)
        for x in x_elements:
            coset_of[n * x] = idx
    k = len(reps)
    images = {}
    for n in n_sorted:
        pi = Perm(tuple(coset_of[n * reps[i]] for i in range(k)))
        if pi not in images:
            images[pi] = n
    quotient = PermGroup(k, tuple(sorted(images)), _elements=frozenset(images))
    witnesses = tuple((q, images[q]) for q in sorted(images))
    return quotient, witnesses


def weyl(G, cls, kind):
    """Weyl group of a subgroup class: ordinary N/H, global N/(H*C), quillen N/C.

    The quillen quotient N/C is well-defined (as the image of N in Aut(H))
    for any H; the name is only standard for abelian H.
    """
    N = cls.normalizer_elements
    C = cls.centralizer_elements
    if kind == "ordinary":
        X = cls.elements
    elif kind == "global":
        X = set_product(cls.elements, C)
    elif kind == "quillen":
        X = C
    else:
        raise GroupError("unknown Weyl kind %r" % (kind,))
    quotient, witnesses = _quotient_by(N, X)
    w = WeylGroup(kind=kind, order=len(N) // len(X), quotient=quotient,
                  witnesses=witnesses)
    if w.order != quotient.order:
        raise GroupError("Weyl quotient order mismatch")
    return w


# -- families ----------------------------------------------------------------

@dataclass(frozen=True)
class FamilySpec:
    """A conjugation- and subgroup-closed family of subgroups."""

    kind: str            # all | cyclic | cyclic-p | elem-abelian-p | abelian-p-rank
    p: int = 0
    n: int = 0

    @staticmethod
    def all():
        return FamilySpec("all")

    @staticmethod
    def cyclic():
        return FamilySpec("cyclic")

    @staticmethod
    def cyclic_p(p):
        return FamilySpec("cyclic-p", p=p)

    @staticmethod
    def elem_abelian_p(p):
        return FamilySpec("elem-abelian-p", p=p)

    @staticmethod
    def abelian_p_rank(p, n):
        return FamilySpec("abelian-p-rank", p=p, n=n)

    @property
    def name(self):
        if self.kind == "all":
            return "all"
        if self.kind == "cyclic":
            return "cyclic"
        if self.kind == "cyclic-p":
            return "cyclic-%d" % self.p
        if self.kind == "elem-abelian-p":
            return "elem-abelian-%d" % self.p
        return "abelian-%d-rank<=%d" % (self.p, self.n)

    def contains(self, cls):
        if self.kind == "all":
            return True
        if self.kind == "cyclic":
            return cls.is_cyclic()
        if self.kind == "cyclic-p":
            return cls.is_p_group(self.p) and cls.is_cyclic()
        if self.kind == "elem-abelian-p":
            return cls.is_elementary_abelian(self.p)
        if self.kind == "abelian-p-rank":
            return (cls.is_p_group(self.p) and cls.is_abelian()
                    and cls.p_rank(self.p) <= self.n)
        raise GroupError("unknown family kind %r" % (self.kind,))


def family_members(G, fam, classes=None):
    """The conjugacy classes whose representative satisfies the family predicate."""
    if classes is None:
        classes = subgroups_up_to_conjugacy(G)
    return [cls for cls in classes if fam.contains(cls)]


# -- double cosets -----------------------------------------------------------

@dataclass(frozen=True)
class DoubleCoset:
    representative: Perm
    intersection: frozenset      # H^g cap K, as a subgroup of K
    size: int


@dataclass(frozen=True)
class DoubleCosetDecomposition:
    group_order: int
    h_order: int
    k_order: int
    pairs: tuple  # of DoubleCoset

    def mackey_ok(self):
        lhs = sum(self.group_order // len(dc.intersection) for dc in self.pairs)
        rhs = (self.group_order // self.h_order) * (self.group_order // self.k_order)
        return lhs == rhs


def double_cosets(G, h_elements, k_elements, h_gens=None, k_gens=None):
    """The decomposition of G into double cosets H\\G/K.

    Double cosets are the orbits of g |-> h*g and g |-> g*k, found by BFS from
    small generating sets.  Representatives are minimal in element order;
    intersections are H^g cap K = {k in K : g k g^-1 in H}.
    """
    H = frozenset(h_elements)
    K = frozenset(k_elements)
    if h_gens is None:
        h_gens = minimal_generators(G.subgroup(H))
    if k_gens is None:
        k_gens = minimal_generators(G.subgroup(K))
    remaining = set(G.elements)
    pairs = []
    for g in G.sorted_elements:
        if g not in remaining:
            continue
        orbit = {g}
        frontier = [g]
        while frontier:
            new = []
            for x in frontier:
                for h in h_gens:
                    y = h * x
                    if y not in orbit:
                        orbit.add(y)
                        new.append(y)
                for k in k_gens:
                    y = x * k
                    if y not in orbit:
                        orbit.add(y)
                        new.append(y)
            frontier = new
        remaining -= orbit
        ginv = ~g
        inter = frozenset(k for k in K if (g * k * ginv) in H)
        pairs.append(DoubleCoset(representative=g, intersection=inter,
                                 size=len(orbit)))
    dec = DoubleCosetDecomposition(
        group_order=G.order, h_order=len(H), k_order=len(K), pairs=tuple(pairs))
    if sum(dc.size for dc in pairs) != G.order:
        raise GroupError("double cosets do not cover G")
    return dec


# -- group DSL ---------------------------------------------------------------

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def _parse_cycles(text):
    cycles = []
    rest = text.replace(",", " ")
    consumed = "".join(_CYCLE_RE.findall(rest))
    stripped = re.sub(r"[\s(),0-9]", "", text)
    if stripped:
        raise GroupParseError("bad cycle syntax %r" % (text,))
    for body in _CYCLE_RE.findall(rest):
        pts = [int(t) for t in body.split()]
        if len(pts) >= 2:
            cycles.append(tuple(pts))
        elif len(pts) == 0 and not consumed:
            raise GroupParseError("empty cycle in %r" % (text,))
    return cycles


def _check_degree(degree):
    if degree > MAX_DSL_DEGREE:
        raise BoundExceeded("degree %d exceeds DSL bound %d" % (degree, MAX_DSL_DEGREE))


def build_group(spec):
    """Build a PermGroup from a DSL string.

    Accepted forms: cyclic:n, dihedral:n (order 2n), sym:n, alt:n,
    elem-abelian:p^k, product:<spec>x<spec>, perm:<cycles>[;<cycles>...].
    """
    spec = spec.strip()
    if spec.startswith("product:"):
        body = spec[len("product:"):]
        for pos in [m.start() for m in re.finditer("x", body)]:
            left, right = body[:pos], body[pos + 1:]
            try:
                A = build_group(left)
                B = build_group(right)
            except GroupError:
                continue
            return _direct_product(A, B)
        raise GroupParseError("cannot split product spec %r" % (spec,))

    if spec.startswith("perm:"):
        body = spec[len("perm:"):]
        gen_texts = [t for t in body.split(";") if t.strip()]
        if not gen_texts:
            raise GroupParseError("perm: needs at least one generator")
        all_cycles = [_parse_cycles(t) for t in gen_texts]
        degree = 0
        for cycles in all_cycles:
            for cyc in cycles:
                degree = max(degree, max(cyc) + 1)
        degree = max(degree, 1)
        _check_degree(degree)
        gens = [Perm.from_cycles(cycles, degree) for cycles in all_cycles]
        return PermGroup(degree, gens)

    m = re.fullmatch(r"(cyclic|dihedral|sym|alt):(\d+)", spec)
    if m:
        name, n = m.group(1), int(m.group(2))
        if n < 1:
            raise GroupParseError("%s:%d needs n >= 1" % (name, n))
        return _named_group(name, n)

    m = re.fullmatch(r"elem-abelian:(\d+)\^(\d+)", spec)
    if m:
        p, k = int(m.group(1)), int(m.group(2))
        return _elem_abelian(p, k)

    raise GroupParseError("cannot parse group spec %r" % (spec,))


def _named_group(name, n):
    if name == "cyclic":
        _check_degree(n)
        if n == 1:
            return PermGroup(1, ())
        return PermGroup(n, (Perm(tuple((i + 1) % n for i in range(n))),))
    if name == "dihedral":
        if 2 * n > MAX_ORDER:
            raise BoundExceeded("dihedral:%d exceeds order bound" % n)
        if n == 1:
            return PermGroup(2, (Perm((1, 0)),))
        if n == 2:
            return PermGroup(4, (Perm((1, 0, 2, 3)), Perm((0, 1, 3, 2))))
        _check_degree(n)
        rot = Perm(tuple((i + 1) % n for i in range(n)))
        ref = Perm(tuple((n - i) % n for i in range(n)))
        return PermGroup(n, (rot, ref))
    if name == "sym":
        _check_degree(n)
        if _factorial(n) > MAX_ORDER:
            raise BoundExceeded("sym:%d exceeds order bound" % n)
        if n == 1:
            return PermGroup(1, ())
        gens = [Perm.from_cycles([(0, 1)], n)]
        if n > 2:
            gens.append(Perm(tuple((i + 1) % n for i in range(n))))
        return PermGroup(n, gens)
    if name == "alt":
        _check_degree(n)
        if _factorial(n) // 2 > MAX_ORDER:
            raise BoundExceeded("alt:%d exceeds order bound" % n)
        if n <= 2:
            return PermGroup(max(n, 1), ())
        if n == 3:
            return PermGroup(3, (Perm.from_cycles([(0, 1, 2)], 3),))
        three = Perm.from_cycles([(0, 1, 2)], n)
        if n % 2 == 1:
            big = Perm(tuple((i + 1) % n for i in range(n)))
        else:
            big = Perm.from_cycles([tuple(range(1, n))], n)
        return PermGroup(n, (three, big))
    raise GroupParseError("unknown named group %r" % (name,))


def _factorial(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def _elem_abelian(p, k):
    if not _is_prime(p):
        raise GroupParseError("elem-abelian base %d is not prime" % p)
    if k < 1:
        raise GroupParseError("elem-abelian exponent must be >= 1")
    degree = p ** k
    _check_degree(degree)
    # regular representation of (Z/p)^k via mixed-radix translation
    gens = []
    for axis in range(k):
        step = p ** axis
        images = []
        for idx in range(degree):
            digit = (idx // step) % p
            images.append(idx + step if digit < p - 1 else idx - step * (p - 1))
        gens.append(Perm(images))
    return PermGroup(degree, gens)


def _direct_product(A, B):
    degree = A.degree + B.degree
    _check_degree(degree)
    if A.order * B.order > MAX_ORDER:
        raise BoundExceeded("product order exceeds bound")
    gens = []
    for g in A.generators:
        gens.append(Perm(tuple(g.images) + tuple(A.degree + i for i in range(B.degree))))
    for g in B.generators:
        gens.append(Perm(tuple(range(A.degree)) + tuple(A.degree + i for i in g.images)))
    return PermGroup(degree, gens)


def _is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


# -- subgroup selectors (CLI) ------------------------------------------------

def select_class(G, classes, selector):
    """Resolve a subgroup selector: 'order:index', 'gens:<cycles>' or 'A<n>'."""
    selector = selector.strip()
    m = re.fullmatch(r"(\d+):(\d+)", selector)
    if m:
        order, idx = int(m.group(1)), int(m.group(2))
        matching = [c for c in classes if c.order == order]
        if idx >= len(matching):
            raise GroupParseError(
                "no class of order %d with index %d (have %d)" % (order, idx, len(matching)))
        return matching[idx]
    if selector.startswith("gens:"):
        texts = [t for t in selector[len("gens:"):].split(";") if t.strip()]
        gens = [Perm.from_cycles(_parse_cycles(t), G.degree) for t in texts]
        for g in gens:
            if g not in G.elements:
                raise GroupParseError("generator %s not in group" % g.cycle_string())
        elements = mulclose(gens, cap=G.order) if gens else frozenset({G.identity()})
        return class_containing(classes, elements)
    m = re.fullmatch(r"[Aa](\d+)", selector)
    if m:
        even = frozenset(g for g in G.elements if _is_even(g))
        return class_containing(classes, even)
    raise GroupParseError("cannot parse subgroup selector %r" % (selector,))


def _is_even(p):
    return sum(len(c) - 1 for c in p.cycles()) % 2 == 0
