"""Small worked examples for each construction."""
from modaltheory import logic as L
from modaltheory.frames import (
    FrameMap,
    GeneralFrame,
    KripkeFrame,
    algebra_isomorphic,
    algebra_of,
    bits,
    check_bisimulation,
    check_pmorphism,
    frames_isomorphic,
    full_general,
    generated_subframe,
    lex_product,
    prefix_tree,
    pretree_q,
    refine,
    reflexive_singleton,
    shehtman_map,
    subalgebra_generated,
    words,
)
from modaltheory.structures import (
    Signature,
    Structure,
    add_fixed_point,
    class_frame,
    congruences,
    isomorphic,
    make_cycle,
    quotient,
    submodels,
    sum_of_cycles,
)

CHAIN = KripkeFrame(2, frozenset({(0, 0), (0, 1), (1, 1)}))
Q2_CLUSTERS = [[0, 1], [2, 3], [4, 5]]


def test_cycle_six_has_no_proper_submodels():
    assert submodels(make_cycle(6)) == [frozenset(range(6))]


def test_cycle_four_quotient_sizes():
    assert sorted(len(p) for p in congruences(make_cycle(4))) == [1, 2, 4]


def test_prime_cycle_has_two_congruences():
    assert len(congruences(make_cycle(7))) == 2


def test_sum_of_two_cycles_has_three_submodels():
    assert sorted(map(sorted, submodels(sum_of_cycles([1, 2])))) == [[0], [0, 1, 2], [1, 2]]


def test_constants_move_to_the_new_point():
    sig = Signature(functions=[("F", 1)], constants=["a", "b"])
    s = Structure(sig, 2, {"F": [1, 0]}, {}, {"a": 0, "b": 1})
    t = add_fixed_point(s)
    assert t.constants == {"a": 2, "b": 2}


def test_quotient_mod_two():
    c = make_cycle(6)
    assert isomorphic(quotient(c, [[0, 2, 4], [1, 3, 5]]), make_cycle(2)) is not None
    assert isomorphic(quotient(c, [[0, 3], [1, 4], [2, 5]]), make_cycle(3)) is not None
    assert quotient(c, [list(range(6))]).size == 1


def test_two_cycle_is_not_two_fixed_points():
    assert isomorphic(make_cycle(2), sum_of_cycles([1, 1])) is None


def test_chain_preimage():
    g = full_general(CHAIN)
    assert g.member_count() == 4 and bits(CHAIN.preimage(0b10)) == [0, 1]


def test_lex_product_with_a_reflexive_point():
    strict = KripkeFrame(2, frozenset({(0, 1)}))
    assert lex_product(strict, reflexive_singleton()) == CHAIN


def test_q2_is_the_tree_times_a_cluster():
    q = pretree_q(2)
    tree = prefix_tree(words(2, 1))
    for a in range(3):
        for b in range(3):
            assert ((2 * a, 2 * b + 1) in q.relation) == ((a, b) in tree.relation)


def test_root_generates_everything():
    g = full_general(pretree_q(2))
    assert generated_subframe(g, 0).size == 6


def test_generated_subframe_keeps_validity():
    g = full_general(pretree_q(2, with_top=True))
    for w in range(g.size):
        sub = generated_subframe(g, w)
        for name in L.AXIOMS:
            if L.valid_in(g, L.AXIOMS[name]).valid:
                assert L.valid_in(sub, L.AXIOMS[name]).valid


def test_refine_merges_duplicate_worlds():
    f = KripkeFrame(2, frozenset({(0, 0), (1, 1)}))
    r = refine(GeneralFrame(f, (0b11,)))
    assert r.size == 1


def test_collapsing_q2_clusters_gives_the_tree():
    g = GeneralFrame(pretree_q(2), (0b000011, 0b001100, 0b110000))
    r = refine(g)
    assert frames_isomorphic(r.base, prefix_tree(words(2, 1))) is not None
    assert algebra_isomorphic(algebra_of(g), algebra_of(r)) is not None


def test_cluster_partition_is_a_bisimulation():
    assert check_bisimulation(pretree_q(2), Q2_CLUSTERS) is None
    q3 = pretree_q(3)
    assert check_bisimulation(q3, [[3 * a, 3 * a + 1, 3 * a + 2] for a in range(13)]) is None


def test_cluster_collapse_is_a_pmorphism():
    tree = prefix_tree(words(2, 1))
    assert check_pmorphism(pretree_q(2), tree, FrameMap((0, 0, 1, 1, 2, 2))) is None


def test_empty_generators_on_chain():
    g = subalgebra_generated(full_general(CHAIN), [])
    assert g.algebra == (0, 0b11)


def test_q1_top_algebra():
    a = algebra_of(full_general(pretree_q(1, with_top=True)))
    assert len(a.elements) == 4 and a.dia(0b10) == 0b11


def test_sibling_leaves_map_to_the_top():
    src, tgt, m = shehtman_map(1)
    assert m(0b110) == tgt.size - 1


def test_irreflexive_chain_diamond():
    f = KripkeFrame(2, frozenset({(0, 1)}))
    assert L.truth_set(f, {"p": [1]}, L.parse_formula("<>p")) == 0b01


def test_k_is_valid_everywhere():
    for f in (CHAIN, KripkeFrame(2, frozenset({(0, 1)})), pretree_q(2)):
        assert L.valid_in(f, L.AXIOMS["K"]).valid


def test_quotient_class_frame_is_divisor_order():
    c = make_cycle(6)
    cf = class_frame([c] + [quotient(c, p) for p in congruences(c)], "quot")
    sizes = [r.size for r in cf.representatives]
    assert sorted(sizes) == [1, 2, 3, 6]
    assert all((sizes[a] % sizes[b] == 0) == ((a, b) in cf.relation) for a in range(4) for b in range(4))
