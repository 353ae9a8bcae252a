import json
import math
import random

import pytest

from arcgraphs.gf import make_field
from arcgraphs.group import (
    CapExceeded,
    PermGroup,
    conjugate_intersection,
    coset_space,
    normalizer_bruteforce,
    normalizes,
)
from arcgraphs.perm import Permutation
from arcgraphs.constructions import (
    build_agl1,
    build_alt,
    build_construction,
    build_cyclic,
    build_pgl2,
    build_sym,
)

from _brute import closure, orbital_brute, random_permutation, suborbits_brute


@pytest.fixture(scope="module")
def triple3():
    return build_construction(3)


def untagged(G):
    return PermGroup(list(G.generators))


def test_chain_orders_examples(triple3):
    s4 = PermGroup([Permutation([1, 2, 3, 0]), Permutation([1, 0, 2, 3])])
    assert s4.order() == 24
    assert untagged(build_alt(9)).order() == 181440  # 9!/2
    assert triple3.K.order() == 144  # 2 * 9 * 8


def test_order_examples():
    assert PermGroup.trivial(5).order() == 1
    assert build_pgl2(11).order() == 1320  # 11 * 10 * 12
    assert untagged(build_alt(9)).order() == math.factorial(9) // 2


def test_contains(triple3):
    s4 = build_sym(4)
    assert s4.contains(Permutation([1, 0, 2, 3]))
    a4 = untagged(build_alt(4))
    assert not a4.contains(Permutation([1, 0, 2, 3]))
    assert triple3.K.contains(triple3.g * triple3.g)  # g is an involution
    with pytest.raises(ValueError, match="degree mismatch"):
        s4.contains(Permutation([1, 0]))


def test_sift_members_to_identity_exactly():
    G = build_pgl2(5)
    chain = G.chain
    x = G.generators[0] * G.generators[2] * G.generators[1]
    assert chain.sift(x) is None
    outsider = Permutation.from_cycles(6, [(0, 1)])
    if not G.contains(outsider):
        assert chain.sift(outsider) is not None


def test_orbit_examples():
    assert PermGroup.trivial(4).orbit(2) == [2]
    c3 = PermGroup([Permutation.from_cycles(3, [(0, 1, 2)])])
    assert c3.orbit(0) == [0, 1, 2]
    agl = build_agl1(make_field(3, 2))
    assert agl.orbit(0) == list(range(9))
    with pytest.raises(ValueError):
        c3.orbit(7)


def test_point_stabilizer_examples(triple3):
    assert build_sym(4).point_stabilizer(0).order() == 6
    assert triple3.K.point_stabilizer(0).order() == 16  # GL1(9) extended by tau
    assert build_pgl2(11).point_stabilizer(3).order() == 110


def test_tuple_stabilizer_examples(triple3):
    assert build_sym(4).tuple_stabilizer((0, 1, 2)).order() == 1
    K01 = triple3.K.tuple_stabilizer((0, 1))
    assert K01.order() == 2
    assert K01.contains(triple3.tau)
    assert build_alt(5).tuple_stabilizer((0, 1)).order() == 3


def test_tuple_stabilizer_matches_bruteforce():
    G = build_pgl2(5)
    elements = closure(G.generators)
    stab = G.tuple_stabilizer((0, 5))
    brute = {p for p in elements if p.apply(0) == 0 and p.apply(5) == 5}
    assert stab.order() == len(brute)
    assert all(p in brute for p in stab.generators)


def test_suborbits_examples():
    lengths = sorted(len(o) for o in build_sym(4).suborbits(0))
    assert lengths == [1, 3]
    lengths = sorted(len(o) for o in build_pgl2(11).suborbits(0))
    assert lengths == [1, 11]
    intransitive = PermGroup([Permutation.from_cycles(4, [(0, 1)])])
    with pytest.raises(ValueError, match="transitive"):
        intransitive.suborbits(0)


def test_suborbits_against_bruteforce_on_pair_action():
    from arcgraphs.constructions import action_on_ordered_pairs

    G, labels = action_on_ordered_pairs(build_alt(5))
    assert G.degree == 20
    subs = G.suborbits(0)
    brute = suborbits_brute(closure(G.generators), 0, 20)
    assert sorted(map(tuple, subs)) == sorted(map(tuple, brute))
    assert sorted(len(o) for o in subs) == sorted(len(o) for o in brute)
    assert all(len(o) in (1, 3) for o in subs)
    assert sum(len(o) for o in subs) == 20


def test_is_self_paired():
    assert build_sym(4).is_self_paired(0, 1)
    c3 = PermGroup([Permutation.from_cycles(3, [(0, 1, 2)])])
    assert not c3.is_self_paired(0, 1)
    assert orbital_brute(closure(c3.generators), 0, 1) == {(0, 1), (1, 2), (2, 0)}
    with pytest.raises(ValueError):
        c3.is_self_paired(1, 1)


def test_self_paired_matches_bruteforce_pairing():
    from arcgraphs.constructions import action_on_ordered_pairs

    G, _ = action_on_ordered_pairs(build_alt(5))
    elements = closure(G.generators)
    for sub in G.suborbits(0):
        if sub == [0]:
            continue
        beta = min(sub)
        brute = (0, beta) in orbital_brute(elements, beta, 0)
        assert G.is_self_paired(0, beta) == brute


def test_transitivity_grade():
    assert build_sym(4).transitivity_grade(4) == 4
    agl9 = build_agl1(make_field(3, 2))
    assert agl9.transitivity_grade(4) == 2
    assert agl9.is_sharply_2transitive()
    pgl = build_pgl2(11)
    assert pgl.transitivity_grade(4) == 3
    assert pgl.order() == 12 * 11 * 10
    intransitive = PermGroup([Permutation.from_cycles(4, [(0, 1)])])
    assert intransitive.transitivity_grade(2) == 0


def test_semiregular_and_regular():
    half = PermGroup([Permutation.from_cycles(4, [(0, 1), (2, 3)])])
    assert half.is_semiregular() and not half.is_regular()
    c4 = build_cyclic(4)
    assert c4.is_regular()
    s4 = build_sym(4)
    assert not s4.is_semiregular()


def test_sharply_2transitive():
    assert build_agl1(make_field(11, 1)).is_sharply_2transitive()
    assert not build_sym(4).is_sharply_2transitive()
    K = build_construction(3).K
    assert not K.is_sharply_2transitive()  # order 144 != 72


def test_normalizes(triple3):
    K = triple3.K
    for k in K.generators:
        assert normalizes(k, K)
    K0 = K.point_stabilizer(0)
    assert normalizes(triple3.g, K0)  # g normalizes the stabilizer of 0
    c3 = PermGroup([Permutation.from_cycles(4, [(1, 2, 3)])])
    assert not normalizes(Permutation.from_cycles(4, [(0, 1)]), c3)


def test_normalizer_bruteforce_dihedral():
    s4 = build_sym(4)
    c4 = PermGroup([Permutation.from_cycles(4, [(0, 1, 2, 3)])])
    N = normalizer_bruteforce(s4, c4)
    assert N.order() == 8
    brute = [x for x in closure(s4.generators) if normalizes(x, c4)]
    assert len(brute) == 8


def test_normalizer_bruteforce_cap_error():
    s9 = untagged(build_sym(9))
    K = build_construction(3).K
    with pytest.raises(CapExceeded, match="1000"):
        normalizer_bruteforce(s9, K, cap=1000)


def test_normalizer_of_K_in_sym9_is_agammal(triple3):
    # both K and AGL1(9) normalize to the full semilinear group of order 144
    s9 = build_sym(9)
    N = normalizer_bruteforce(s9, triple3.K)
    assert N.order() == 144
    M = build_agl1(triple3.field)
    N2 = normalizer_bruteforce(s9, M)
    assert N2.order() == 144
    assert N.is_subgroup_of(N2) and N2.is_subgroup_of(N)


def test_even_subgroup(triple3):
    a4 = untagged(build_alt(4))
    assert a4.even_subgroup() is a4
    s4 = build_sym(4)
    even = s4.even_subgroup()
    assert even.order() == 12
    assert triple3.K.even_subgroup().order() == 72  # q^2 (q^2 - 1)


def test_even_subgroup_matches_parity_filter():
    for G in (build_sym(5), build_dihedral_local(6), build_construction(3).K):
        even = G.even_subgroup()
        brute = {p for p in closure(G.generators) if p.is_even()}
        assert even.order() == len(brute) or even is G
        if even is not G:
            assert even.order() == len(brute)
            assert G.order() in (even.order(), 2 * even.order())
        for g in G.generators:
            if g.is_even():
                assert even.contains(g)


def build_dihedral_local(n):
    from arcgraphs.constructions import build_dihedral

    return build_dihedral(n)


def test_coset_space_examples(triple3):
    s4 = build_sym(4)
    s3 = s4.point_stabilizer(3)
    space = coset_space(s4, s3)
    assert len(space) == 4
    induced = PermGroup(space.generator_images)
    assert induced.order() == 24 and induced.is_transitive()

    pgl = build_pgl2(11)
    agl = pgl.point_stabilizer(11)
    assert len(coset_space(pgl, agl)) == 12

    s9 = build_sym(9)
    space9 = coset_space(s9, triple3.K)
    assert len(space9) == 2520  # 362880 / 144


def test_coset_space_invariants(triple3):
    s4 = build_sym(4)
    s3 = s4.point_stabilizer(3)
    space = coset_space(s4, s3)
    assert len(space) * s3.order() == s4.order()
    induced = PermGroup(space.generator_images)
    stab0 = induced.point_stabilizer(0)
    assert stab0.order() == s3.order()  # S3 is core-free in S4


def test_coset_canonical_rep_is_coset_invariant(triple3):
    s9 = build_sym(9)
    space = coset_space(s9, triple3.K)
    rng = random.Random(11)
    K_elements = list(triple3.K.elements())
    for _ in range(20):
        x = random_permutation(rng, 9)
        k = K_elements[rng.randrange(len(K_elements))]
        assert space.canonical(k * x) == space.canonical(x)
        assert space.index(k * x) == space.index(x)


def test_coset_space_generator_images_pointwise():
    s4 = build_sym(4)
    s3 = s4.point_stabilizer(3)
    space = coset_space(s4, s3)
    for j, gen in enumerate(s4.generators):
        image = space.generator_images[j]
        for i, rep in enumerate(space.reps):
            assert image.apply(i) == space.index(rep * gen)


def test_coset_space_cap():
    s4 = build_sym(4)
    with pytest.raises(CapExceeded, match="cap 2"):
        coset_space(s4, s4.point_stabilizer(3), cap=2)


def test_coset_space_requires_subgroup():
    s4 = build_sym(4)
    other = PermGroup([Permutation.from_cycles(4, [(0, 1, 2, 3)])])
    a4 = untagged(build_alt(4))
    with pytest.raises(ValueError, match="not a subgroup"):
        coset_space(a4, other)


def test_conjugate_intersection_vs_bruteforce():
    s4 = build_sym(4)
    K = s4.point_stabilizer(3)
    g = Permutation.from_cycles(4, [(0, 3)])
    inter = conjugate_intersection(K, g)
    K_elements = closure(K.generators)
    brute = {k for k in K_elements if (g * k * g.inverse()) in K_elements}
    assert inter.order() == len(brute)
    assert all(k in brute for k in inter.generators)


def test_conjugate_intersection_construction(triple3):
    inter = conjugate_intersection(triple3.K, triple3.g)
    K0 = triple3.K.point_stabilizer(0)
    assert inter.order() == K0.order() == 16
    assert inter.is_subgroup_of(K0) and K0.is_subgroup_of(inter)


def test_elements_enumeration_is_exact():
    for G in (build_sym(4), build_pgl2(5), build_cyclic(6)):
        elements = list(G.elements())
        assert len(elements) == G.order()
        assert len(set(elements)) == G.order()
        assert set(elements) == closure(G.generators)


def test_orbit_stabilizer_identity():
    for G in (build_sym(5), build_pgl2(5), build_agl1(make_field(2, 3))):
        for x in range(G.degree):
            assert G.order() == G.point_stabilizer(x).order() * len(G.orbit(x))


def test_preferred_base_prefix():
    G = build_pgl2(5)
    chain = G.chain_with_base((3, 0))
    assert chain.base[:2] == (3, 0)
    assert chain.order == G.order()


def test_known_kind_tags_agree_with_generic_chains():
    for n in (4, 5, 6, 7):
        assert build_sym(n).order() == untagged(build_sym(n)).order()
        assert build_alt(n).order() == untagged(build_alt(n)).order()
    a6 = build_alt(6)
    assert not a6.contains(Permutation.from_cycles(6, [(0, 1)]))
    assert a6.contains(Permutation.from_cycles(6, [(0, 1, 2)]))


def test_json_round_trip():
    G = build_pgl2(5)
    text = G.to_json()
    H = PermGroup.from_json(text)
    assert H.degree == G.degree
    assert H.generators == G.generators
    assert H.to_json() == text
    with pytest.raises(ValueError):
        PermGroup.from_json('{"degree": 3, "generators": [[0, 1]]}')


def test_membership_against_enumeration_random():
    rng = random.Random(5)
    for G in (build_sym(5), build_pgl2(5)):
        elements = closure(G.generators)
        for _ in range(100):
            if rng.random() < 0.5:
                cand = rng.choice(sorted(elements, key=lambda p: p.images))
            else:
                cand = random_permutation(rng, G.degree)
            assert G.contains(cand) == (cand in elements)
