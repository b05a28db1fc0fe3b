"""Invariant suites behind the CLI verify command.

Each suite sweeps the built-in corpus (or the stated numeric ranges) and
returns a CheckResult; a violation anywhere fails the suite.  The same
functions back the pytest invariant tests.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from . import corpus as corpus_mod
from .groups import (FamilySpec, all_subgroup_sets, build_group,
                     family_members, subgroups_up_to_conjugacy, weyl)
from .orbit_cat import verify_mackey
from .rings import (GF, Poly, ZZ, cyclotomic_poly, factor,
                    is_squarefree_mod, prime_splitting, primes_upto)
from .spectrum import assemble_strong, assemble_weak, check_agreement
from .strata import parse_theory, stratum, theory_family_classes


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str
    seconds: float


def _timed(name, fn):
    t0 = time.perf_counter()
    ok, detail = fn()
    return CheckResult(name=name, ok=ok, detail=detail,
                       seconds=time.perf_counter() - t0)


def check_mackey(groups=None):
    def run():
        bad = []
        pairs = 0
        for dsl, G in groups or corpus_mod.corpus_groups():
            rep = verify_mackey(G)
            pairs += rep["pairs_checked"]
            if not rep["ok"]:
                bad.append((dsl, rep["violations"]))
        return not bad, "%d class pairs%s" % (pairs, "" if not bad else
                                              "; violations in %r" % bad)
    return _timed("mackey-double-cosets", run)


def check_weyl_divisibility(groups=None):
    def run():
        checked = 0
        for dsl, G in groups or corpus_mod.corpus_groups():
            for cls in subgroups_up_to_conjugacy(G):
                wo = weyl(G, cls, "ordinary")
                wg = weyl(G, cls, "global")
                wq = weyl(G, cls, "quillen")
                checked += 1
                if wo.order % wg.order or wq.order % wg.order:
                    return False, "divisibility fails for %s class %d" % (dsl, cls.index)
        return True, "%d classes" % checked
    return _timed("weyl-divisibility", run)


_FAMILIES = (FamilySpec.all(), FamilySpec.cyclic(), FamilySpec.cyclic_p(2),
             FamilySpec.cyclic_p(3), FamilySpec.elem_abelian_p(2),
             FamilySpec.elem_abelian_p(3), FamilySpec.abelian_p_rank(2, 1),
             FamilySpec.abelian_p_rank(2, 2))


def check_family_closure(groups=None):
    def run():
        checked = 0
        for dsl, G in groups or corpus_mod.small_corpus():
            classes = subgroups_up_to_conjugacy(G)
            for fam in _FAMILIES:
                members = family_members(G, fam, classes)
                if not any(c.order == 1 for c in members):
                    return False, "%s misses trivial class in %s" % (fam.name, dsl)
                for cls in members:
                    sub_classes = subgroups_up_to_conjugacy(cls.as_group())
                    checked += len(sub_classes)
                    if not all(fam.contains(sc) for sc in sub_classes):
                        return False, "%s not subgroup-closed at %s class %d" % (
                            fam.name, dsl, cls.index)
        return True, "%d member subgroups" % checked
    return _timed("family-closure", run)


def check_subgroup_counts(groups=None):
    def run():
        for dsl, G in groups or corpus_mod.corpus_groups():
            classes = subgroups_up_to_conjugacy(G)
            total = sum(c.conjugates for c in classes)
            brute = len(all_subgroup_sets(G))
            if total != brute:
                return False, "conjugate count sum %d != %d in %s" % (total, brute, dsl)
        return True, "checked %d groups" % len(corpus_mod.CORPUS)
    return _timed("subgroup-counts", run)


def check_cyclotomic_product(limit=200):
    def run():
        for d in range(1, limit + 1):
            prod = Poly.one(ZZ)
            for e in range(1, d + 1):
                if d % e == 0:
                    prod = prod * cyclotomic_poly(e)
            target = Poly.from_ints([-1] + [0] * (d - 1) + [1], ZZ)
            if prod != target:
                return False, "product of Phi_e != X^%d - 1" % d
        return True, "d <= %d" % limit
    return _timed("cyclotomic-product", run)


def check_splitting_oracle(max_d=40, max_q=100):
    def run():
        checked = 0
        for d in range(1, max_d + 1):
            for q in primes_upto(max_q):
                if d % q == 0:
                    continue
                checked += 1
                split = prime_splitting(d, q)
                dom = GF(q)
                phi = cyclotomic_poly(d).map_domain(dom, dom.of_int)
                if phi.degree == 0:
                    if split.count != 1:
                        return False, "d=%d q=%d trivial case" % (d, q)
                    continue
                if not is_squarefree_mod(phi):
                    return False, "Phi_%d mod %d not squarefree" % (d, q)
                factors = factor(phi)
                if len(factors) != split.count:
                    return False, "d=%d q=%d: %d factors, formula %d" % (
                        d, q, len(factors), split.count)
                if any(g.degree != split.residue_degree for g, _ in factors):
                    return False, "d=%d q=%d: residue degree mismatch" % (d, q)
                if any(e != 1 for _, e in factors):
                    return False, "d=%d q=%d: repeated factor" % (d, q)
        return True, "%d (d, q) pairs" % checked
    return _timed("cyclotomic-splitting-oracle", run)


def check_strata_actions(groups=None,
                         theories=("height1:p=2", "height1:p=3", "ku",
                                   "hz:p=2", "hz:p=3", "kr",
                                   "modp:q=4,deg=1", "modp:q=9,deg=1")):
    from .strata import UnsupportedTheory

    def run():
        checked = 0
        for dsl, G in groups or corpus_mod.small_corpus():
            for tname in theories:
                th = parse_theory(tname, prime_bound=11)
                try:
                    members = theory_family_classes(th, G)
                except UnsupportedTheory:
                    continue
                for cls in members:
                    model = stratum(th, G, cls)
                    if model.is_empty():
                        continue
                    checked += 1
                    if not _is_group_action(model):
                        return False, "action law fails: %s %s class %d" % (
                            dsl, tname, cls.index)
        return True, "%d strata" % checked
    return _timed("weyl-actions-are-actions", run)


def _is_group_action(model):
    w = model.weyl
    els = w.sorted_quotient()
    table = dict(zip(els, model.action))
    ident = w.quotient.identity()
    n = len(model.points)
    if table[ident] != tuple(range(n)):
        return False
    for a in els:
        for b in els:
            ab = a * b
            composed = tuple(table[a][table[b][i]] for i in range(n))
            if composed != table[ab]:
                return False
    return True


def check_agreement_suite(groups=None, primes=(2, 3), ku_max=12):
    def run():
        count = 0
        for dsl, G in groups or corpus_mod.small_corpus():
            for p in primes:
                th = parse_theory("height1:p=%d" % p)
                strong = assemble_strong(th, G, dsl)
                weak = assemble_weak(th, G, dsl)
                rep = check_agreement(strong, weak)
                count += 1
                if not rep.isomorphic:
                    return False, "height1:p=%d disagrees on %s (%s)" % (
                        p, dsl, rep.obstruction)
        for n in range(1, ku_max + 1):
            th = parse_theory("ku")
            dsl = "cyclic:%d" % n
            G = build_group(dsl)
            strong = assemble_strong(th, G, dsl)
            weak = assemble_weak(th, G, dsl)
            rep = check_agreement(strong, weak)
            count += 1
            if not rep.isomorphic:
                return False, "ku disagrees on %s (%s)" % (dsl, rep.obstruction)
        return True, "%d comparisons" % count
    return _timed("weak-strong-agreement", run)


def check_fan_shape(groups=None, primes=(2, 3)):
    def run():
        for dsl, G in groups or corpus_mod.small_corpus():
            for p in primes:
                th = parse_theory("height1:p=%d" % p)
                space = assemble_strong(th, G, dsl)
                closed = space.closed_points()
                if len(closed) != 1:
                    return False, "%s p=%d: %d closed points" % (dsl, p, len(closed))
                target = closed[0].id
                outgoing = {}
                for e in space.solid_edges():
                    outgoing.setdefault(e.src, []).append(e.dst)
                for pt in space.points:
                    if pt.id == target:
                        if pt.id in outgoing:
                            return False, "%s p=%d: closed point has an edge out" % (dsl, p)
                    elif outgoing.get(pt.id) != [target]:
                        return False, "%s p=%d: %s does not fan into the closed point" % (
                            dsl, p, pt.id)
        return True, "fan shape holds"
    return _timed("height1-fan-shape", run)


def check_colimit_quotient_laws():
    """Idempotence and relabeling invariance of the union-find colimit."""
    from .orbit_cat import coequalize_raw

    def run():
        objects = {"a": ["x", "y", "z"], "b": ["u", "v"]}
        maps = [("a", "b", {"x": "u", "y": "u", "z": "v"}),
                ("a", "b", {"x": "u", "y": "v", "z": "v"})]
        first = coequalize_raw(objects, maps)
        pts = ["%s|%s" % cid for cid, _ in first.classes]
        second = coequalize_raw({"q": pts}, [("q", "q", {p: p for p in pts})])
        if second.class_count() != first.class_count():
            return False, "colimit not idempotent"
        rename = {"x": "r0", "y": "r1", "z": "r2", "u": "r3", "v": "r4"}
        objects2 = {o: [rename[p] for p in ps] for o, ps in objects.items()}
        maps2 = [(s, d, {rename[a]: rename[b] for a, b in t.items()})
                 for s, d, t in maps]
        other = coequalize_raw(objects2, maps2)
        blocks = lambda res, conv: sorted(
            sorted(conv(m) for m in mem) for _, mem in res.classes)
        if blocks(first, lambda m: (m[0], rename[m[1]])) != \
                blocks(other, lambda m: m):
            return False, "colimit not relabeling-invariant"
        return True, "idempotence and relabeling hold"
    return _timed("colimit-quotient-laws", run)


def check_ku_stratum_counts():
    """Points above q in a KU stratum match the splitting formula."""
    from .strata import parse_theory as _pt

    def run():
        th = _pt("ku", prime_bound=13)
        checked = 0
        for n in (2, 3, 4, 6, 8, 12):
            G = build_group("cyclic:%d" % n)
            for cls in theory_family_classes(th, G):
                model = stratum(th, G, cls)
                d = cls.order
                for q in primes_upto(13):
                    if d % q == 0:
                        continue
                    pts = [p for p in model.points
                           if p.descriptor.data[0] == "modular"
                           and p.descriptor.data[1] == q]
                    checked += 1
                    if len(pts) != prime_splitting(d, q).count:
                        return False, "stratum C_%d at q=%d" % (d, q)
        return True, "%d (stratum, q) pairs" % checked
    return _timed("ku-stratum-splitting-counts", run)


def check_serialization_round_trip():
    from .spectrum import deserialize, serialize

    def run():
        cases = [("cyclic:4", "height1:p=2"), ("cyclic:2", "ku"),
                 ("cyclic:9", "hz:p=3"), ("cyclic:2", "kr"),
                 ("sym:3", "height1:p=3")]
        for dsl, tname in cases:
            th = parse_theory(tname)
            space = assemble_strong(th, build_group(dsl), dsl)
            txt = serialize(space, "json")
            if serialize(deserialize(txt), "json") != txt:
                return False, "round trip broke for %s / %s" % (dsl, tname)
        return True, "%d documents" % len(cases)
    return _timed("serialization-round-trip", run)


ALL_CHECKS = (
    check_mackey,
    check_weyl_divisibility,
    check_family_closure,
    check_subgroup_counts,
    check_cyclotomic_product,
    check_splitting_oracle,
    check_strata_actions,
    check_agreement_suite,
    check_fan_shape,
    check_colimit_quotient_laws,
    check_ku_stratum_counts,
    check_serialization_round_trip,
)


def run_all():
    return [fn() for fn in ALL_CHECKS]
