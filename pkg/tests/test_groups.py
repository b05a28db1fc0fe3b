import itertools

import pytest

from quillen_strata.groups import (BoundExceeded, FamilySpec, GroupParseError,
                                   Perm, all_subgroup_sets, build_group,
                                   class_containing, double_cosets,
                                   family_members, minimal_generators,
                                   mulclose, select_class,
                                   subgroups_up_to_conjugacy, weyl)

from conftest import naive_closure, naive_subgroup_count


def test_perm_basics():
    a = Perm((1, 2, 0))
    b = Perm((1, 0, 2))
    assert (a * b).images == (2, 1, 0)
    assert (~a * a).is_identity()
    assert a.order() == 3
    assert a.cycle_string() == "(0 1 2)"
    assert Perm.from_cycles([(0, 1, 2, 3)], 4).images == (1, 2, 3, 0)
    with pytest.raises(Exception):
        Perm((0, 0, 1))


def test_build_group_trivial_and_sym3():
    assert build_group("cyclic:1").order == 1
    assert build_group("sym:3").order == 6


def test_build_group_dihedral4_matches_naive_closure():
    # oracle: closure of {(0 1 2 3), (0 3)(1 2)} computed independently
    gens = [(1, 2, 3, 0), (3, 2, 1, 0)]
    expected = naive_closure(gens)
    G = build_group("dihedral:4")
    assert G.order == len(expected) == 8
    assert {p.images for p in G.elements} == expected


def test_build_group_products_and_elem_abelian():
    assert build_group("product:cyclic:2xcyclic:4").order == 8
    assert build_group("elem-abelian:2^3").order == 8
    assert build_group("elem-abelian:3^2").order == 9
    G = build_group("perm:(0 1 2);(3 4)")
    assert G.order == 6 and G.degree == 5


def test_build_group_errors():
    with pytest.raises(GroupParseError):
        build_group("frobnicate:7")
    with pytest.raises(GroupParseError):
        build_group("elem-abelian:4^2")
    with pytest.raises(BoundExceeded):
        build_group("sym:8")
    with pytest.raises(BoundExceeded):
        build_group("cyclic:65")


def test_small_dihedral_special_cases():
    assert build_group("dihedral:1").order == 2
    D2 = build_group("dihedral:2")
    assert D2.order == 4 and D2.is_abelian()


@pytest.mark.parametrize("dsl,nclasses,orders", [
    ("cyclic:1", 1, [1]),
    ("cyclic:4", 3, [1, 2, 4]),
    ("sym:3", 4, [1, 2, 3, 6]),
])
def test_subgroup_classes_examples(dsl, nclasses, orders):
    G = build_group(dsl)
    classes = subgroups_up_to_conjugacy(G)
    assert len(classes) == nclasses
    assert [c.order for c in classes] == orders


@pytest.mark.parametrize("dsl", ["cyclic:4", "sym:3", "dihedral:4"])
def test_subgroup_totals_match_naive_enumeration(dsl):
    G = build_group(dsl)
    classes = subgroups_up_to_conjugacy(G)
    total = sum(c.conjugates for c in classes)
    assert total == naive_subgroup_count([p.images for p in G.elements])


# subgroup totals frozen from the standard subgroup counts
@pytest.mark.parametrize("dsl,count", [
    ("sym:4", 30),
    ("alt:4", 10),
    ("dihedral:4", 10),
    ("dihedral:6", 16),
    ("elem-abelian:2^3", 16),
    ("elem-abelian:2^4", 67),
    ("cyclic:12", 6),
    ("perm:(0 1 4 5)(2 3 6 7);(0 2 4 6)(1 7 5 3)", 6),  # quaternion
])
def test_subgroup_totals_known_values(dsl, count):
    G = build_group(dsl)
    assert len(all_subgroup_sets(G)) == count


def test_quaternion_signature():
    Q8 = build_group("perm:(0 1 4 5)(2 3 6 7);(0 2 4 6)(1 7 5 3)")
    assert Q8.order == 8
    classes = subgroups_up_to_conjugacy(Q8)
    # unique involution, three cyclic subgroups of order 4
    assert [c.order for c in classes] == [1, 2, 4, 4, 4, 8]
    assert all(c.conjugates == 1 for c in classes)
    assert not Q8.is_abelian()


def test_class_invariants(corpus_groups):
    for dsl, G in corpus_groups:
        for cls in subgroups_up_to_conjugacy(G):
            assert cls.elements <= G.elements
            assert cls.elements <= cls.normalizer_elements
            assert cls.centralizer_elements <= cls.normalizer_elements
            assert cls.conjugates == G.order // len(cls.normalizer_elements)


def test_weyl_examples():
    G = build_group("sym:3")
    classes = subgroups_up_to_conjugacy(G)
    top = classes[-1]
    assert weyl(G, top, "ordinary").order == 1
    c3 = [c for c in classes if c.order == 3][0]
    assert weyl(G, c3, "ordinary").order == 2
    wq = weyl(G, c3, "quillen")
    assert wq.order == 2
    assert not wq.quotient.sorted_elements[-1].is_identity()


def test_weyl_divisibility_chain(corpus_groups):
    for dsl, G in corpus_groups:
        if G.order > 16:
            continue
        for cls in subgroups_up_to_conjugacy(G):
            wo = weyl(G, cls, "ordinary")
            wg = weyl(G, cls, "global")
            wq = weyl(G, cls, "quillen")
            assert wo.order % wg.order == 0
            assert wq.order % wg.order == 0
            if cls.is_abelian():
                assert wq.order == wg.order


def test_weyl_witnesses_act_as_recorded():
    G = build_group("dihedral:4")
    classes = subgroups_up_to_conjugacy(G)
    for cls in classes:
        w = weyl(G, cls, "quillen")
        for q, n in w.witnesses:
            assert n in cls.normalizer_elements


def test_double_coset_trivial_cases():
    G = build_group("sym:3")
    e = frozenset({G.identity()})
    dec = double_cosets(G, e, e)
    assert len(dec.pairs) == G.order
    assert all(len(dc.intersection) == 1 for dc in dec.pairs)
    dec2 = double_cosets(G, G.elements, G.elements)
    assert len(dec2.pairs) == 1
    assert dec2.pairs[0].intersection == G.elements


def test_double_coset_a3():
    G = build_group("sym:3")
    classes = subgroups_up_to_conjugacy(G)
    a3 = [c for c in classes if c.order == 3][0]
    dec = double_cosets(G, a3.elements, a3.elements)
    assert len(dec.pairs) == 2
    assert all(len(dc.intersection) == 3 for dc in dec.pairs)
    assert dec.mackey_ok()


def test_double_cosets_cover_and_mackey(corpus_groups):
    for dsl, G in corpus_groups:
        if G.order > 12:
            continue
        classes = subgroups_up_to_conjugacy(G)
        for hc, kc in itertools.product(classes, repeat=2):
            dec = double_cosets(G, hc.elements, kc.elements)
            assert sum(dc.size for dc in dec.pairs) == G.order
            assert dec.mackey_ok()


def test_family_members_examples():
    G = build_group("sym:3")
    fam = family_members(G, FamilySpec.cyclic_p(3))
    assert [c.order for c in fam] == [1, 3]
    all_fam = family_members(G, FamilySpec.all())
    assert len(all_fam) == len(subgroups_up_to_conjugacy(G))
    V4 = build_group("elem-abelian:2^2")
    rank1 = family_members(V4, FamilySpec.abelian_p_rank(2, 1))
    assert [c.order for c in rank1] == [1, 2, 2, 2]


def test_family_closed_under_subgroups():
    G = build_group("dihedral:6")
    for fam in (FamilySpec.cyclic(), FamilySpec.cyclic_p(2),
                FamilySpec.elem_abelian_p(2), FamilySpec.abelian_p_rank(2, 2)):
        for cls in family_members(G, fam):
            for sub in subgroups_up_to_conjugacy(cls.as_group()):
                assert fam.contains(sub)


def test_p_rank():
    V4 = build_group("elem-abelian:2^2")
    classes = subgroups_up_to_conjugacy(V4)
    assert classes[-1].p_rank(2) == 2
    assert classes[0].p_rank(2) == 0
    C4 = build_group("cyclic:4")
    assert subgroups_up_to_conjugacy(C4)[-1].p_rank(2) == 1


def test_select_class_and_aliases():
    G = build_group("sym:3")
    classes = subgroups_up_to_conjugacy(G)
    assert select_class(G, classes, "3:0").order == 3
    assert select_class(G, classes, "A3").order == 3
    assert select_class(G, classes, "gens:(0 1 2)").order == 3
    with pytest.raises(GroupParseError):
        select_class(G, classes, "5:0")


def test_minimal_generators():
    G = build_group("elem-abelian:2^3")
    gens = minimal_generators(G)
    assert len(gens) == 3
    assert mulclose(gens) == G.elements


def test_class_containing():
    G = build_group("dihedral:4")
    classes = subgroups_up_to_conjugacy(G)
    refl = [p for p in G.sorted_elements if p.order() == 2][0]
    cls = class_containing(classes, mulclose([refl], cap=8))
    assert cls.order == 2
