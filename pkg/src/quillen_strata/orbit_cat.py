"""Quillen categories of a finite group and colimits of diagrams over them.

Objects are conjugacy-class representatives of family subgroups.  A morphism
H -> K is witnessed by g with g H g^-1 <= K (the conjugation homomorphism
h |-> g h g^-1); in the orbit flavor, witnesses are deduplicated modulo the
double coset K g C_G(H).  Colimits of point-set diagrams are computed with
union-find.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .groups import (GroupError, Perm, conjugate_set, double_cosets,
                     minimal_generators, set_product, subgroups_up_to_conjugacy)


class DiagramError(Exception):
    """A diagram failed validation (named violation in args)."""


class UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}
        self.rank = {x: 0 for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x


@dataclass(frozen=True)
class Morphism:
    """c_g : H_src -> H_dst, h |-> g h g^-1, with gHg^-1 <= K."""

    src: int
    dst: int
    witness: Perm
    coset: frozenset = field(compare=False, repr=False)  # K * g * C_G(H)

    def key(self):
        return (self.src, self.dst, self.witness.images)


@dataclass
class QuillenOrbitCategory:
    """O^Q_F(G) on class representatives; homs[(i, j)] lists morphisms i -> j."""

    G: object
    objects: list           # SubgroupClass, family members in canonical order
    homs: dict              # (i, j) -> tuple of Morphism

    def hom(self, i, j):
        return self.homs[(i, j)]

    def identity(self, i):
        ident = self.G.identity()
        for m in self.homs[(i, i)]:
            if ident in m.coset:
                return m
        raise GroupError("identity morphism missing")

    def compose(self, f2, f1):
        """f2 o f1 for f1: i -> j, f2: j -> k."""
        if f1.dst != f2.src:
            raise GroupError("morphisms not composable")
        g = f2.witness * f1.witness
        for m in self.homs[(f1.src, f2.dst)]:
            if g in m.coset:
                return m
        raise DiagramError("composition not closed", f1.key(), f2.key())

    def all_morphisms(self):
        for (i, j) in sorted(self.homs):
            for m in self.homs[(i, j)]:
                yield m

    def automorphism_count(self, i):
        return len(self.homs[(i, i)])


def build_orbit_category(G, classes):
    """The Quillen orbit category on the given family classes.

    Every g with g H g^-1 <= K contributes exactly one morphism class;
    the canonical witness is the minimal element of its double coset.
    """
    homs = {}
    for i, Hc in enumerate(classes):
        H = Hc.elements
        CH = Hc.centralizer_elements
        for j, Kc in enumerate(classes):
            K = Kc.elements
            witnesses = [g for g in G.sorted_elements
                         if conjugate_set(H, g) <= K]
            morphs = []
            seen = set()
            for g in witnesses:  # sorted, so reps are minimal
                if g in seen:
                    continue
                coset = set_product(set_product(K, frozenset({g})), CH)
                seen |= coset
                morphs.append(Morphism(src=i, dst=j, witness=g, coset=coset))
            homs[(i, j)] = tuple(morphs)
    return QuillenOrbitCategory(G=G, objects=list(classes), homs=homs)


@dataclass
class OrbitDiagram:
    """A functor to point-sets: per object a finite point set, per morphism a map."""

    category: QuillenOrbitCategory
    point_sets: dict        # object index -> tuple of point keys
    maps: dict              # Morphism.key() -> dict point -> point

    def transition(self, m):
        return self.maps[m.key()]

    def validate(self):
        """Check functoriality on all composable pairs; raise a named violation."""
        cat = self.category
        for i in range(len(cat.objects)):
            ident = cat.identity(i)
            tid = self.transition(ident)
            for pt in self.point_sets[i]:
                if tid[pt] != pt:
                    raise DiagramError("identity moves a point", i, pt)
        for f1 in cat.all_morphisms():
            for k in range(len(cat.objects)):
                for f2 in cat.homs[(f1.dst, k)]:
                    comp = cat.compose(f2, f1)
                    t1, t2, tc = (self.transition(f1), self.transition(f2),
                                  self.transition(comp))
                    for pt in self.point_sets[f1.src]:
                        if t2[t1[pt]] != tc[pt]:
                            raise DiagramError(
                                "functoriality fails",
                                f1.key(), f2.key(), pt)
        return True


@dataclass(frozen=True)
class CoequalizerResult:
    """Partition of the disjoint union of point sets, with deterministic ids."""

    classes: tuple        # ((class_id, ((obj, point), ...)), ...) sorted
    projection: dict      # (obj, point) -> class_id

    def class_count(self):
        return len(self.classes)

    def members(self, class_id):
        for cid, mem in self.classes:
            if cid == class_id:
                return mem
        raise KeyError(class_id)


def _quotient(nodes, relations):
    """Union-find quotient; class ids are the minimal contained node keys."""
    uf = UnionFind(nodes)
    for a, b in relations:
        uf.union(a, b)
    groups = {}
    for x in nodes:
        groups.setdefault(uf.find(x), []).append(x)
    classes = []
    projection = {}
    for members in groups.values():
        members.sort()
        cid = members[0]
        classes.append((cid, tuple(members)))
        for x in members:
            projection[x] = cid
    classes.sort()
    return CoequalizerResult(classes=tuple(classes), projection=projection)


def colimit(diagram):
    """Colimit of an orbit diagram: points modulo x ~ (transition f)(x)."""
    diagram.validate()
    nodes = [(i, pt) for i, pts in sorted(diagram.point_sets.items())
             for pt in pts]
    relations = []
    for m in diagram.category.all_morphisms():
        t = diagram.transition(m)
        for pt in diagram.point_sets[m.src]:
            relations.append(((m.src, pt), (m.dst, t[pt])))
    return _quotient(nodes, relations)


def coequalize_raw(objects, maps):
    """Colimit of an explicit diagram: objects {id: [points]}, maps
    [(src, dst, {point: point})].  Used by the CLI coequalize command."""
    nodes = []
    for oid in sorted(objects):
        for pt in objects[oid]:
            nodes.append((oid, pt))
    node_set = set(nodes)
    relations = []
    for src, dst, table in maps:
        for a, b in table.items():
            if (src, a) not in node_set:
                raise DiagramError("map source point missing", src, a)
            if (dst, b) not in node_set:
                raise DiagramError("map target point missing", dst, b)
            relations.append(((src, a), (dst, b)))
    return _quotient(nodes, relations)


def verify_mackey(G, classes=None):
    """Check the double-coset cardinality identity for all class pairs.

    sum over [g] in H\\G/K of [G : H^g cap K] must equal [G:H] * [G:K].
    """
    if classes is None:
        classes = subgroups_up_to_conjugacy(G)
    gens = {cls.index: minimal_generators(cls.as_group()) for cls in classes}
    violations = []
    pairs = 0
    for Hc, Kc in itertools.product(classes, repeat=2):
        pairs += 1
        dec = double_cosets(G, Hc.elements, Kc.elements,
                            h_gens=gens[Hc.index], k_gens=gens[Kc.index])
        if not dec.mackey_ok():
            violations.append({
                "h": (Hc.order, Hc.index), "k": (Kc.order, Kc.index),
                "cosets": len(dec.pairs)})
    return {"group_order": G.order, "pairs_checked": pairs,
            "violations": violations, "ok": not violations}
