import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from modaltheory import oracles
from modaltheory.structures import (
    CapExceeded,
    Signature,
    Structure,
    StructureError,
    add_fixed_point,
    class_frame,
    closure,
    congruences,
    disjoint_sum,
    is_congruence,
    is_isomorphism,
    isomorphic,
    load_structure,
    make_cycle,
    quotient,
    restrict,
    structure_to_doc,
    submodel_structures,
    submodels,
    sum_of_cycles,
)


def random_unar(rng, n):
    return Structure(Signature(functions=[("F", 1)]), n, {"F": [rng.randrange(n) for _ in range(n)]})


def random_binary(rng, n):
    sig = Signature(functions=[("m", 2)], predicates=[("P", 1)])
    table = [rng.randrange(n) for _ in range(n * n)]
    pred = {(x,) for x in range(n) if rng.random() < 0.5}
    return Structure(sig, n, {"m": table}, {"P": pred})


unars = st.builds(lambda seed, n: random_unar(random.Random(seed), n), st.integers(0, 10**6), st.integers(1, 6))


def test_signature_rejects_duplicate_names():
    with pytest.raises(StructureError):
        Signature(functions=[("F", 1)], constants=["F"])


def test_structure_rejects_out_of_range_table():
    with pytest.raises(StructureError):
        Structure(Signature(functions=[("F", 1)]), 2, {"F": [0, 2]})


def test_load_roundtrip():
    s = add_fixed_point(sum_of_cycles([2, 3]), constant="c")
    again = load_structure(json.dumps(structure_to_doc(s)))
    assert again == s


def test_load_reports_bad_documents():
    with pytest.raises(StructureError):
        load_structure("{not json")
    with pytest.raises(StructureError):
        load_structure({"signature": {"functions": [{"name": "F", "arity": 1}]}, "universe": 2})
    with pytest.raises(StructureError):
        load_structure({"universe": 0})


def test_cycle_has_only_itself_as_submodel():
    assert submodels(make_cycle(5)) == [frozenset(range(5))]


def test_sum_of_cycles_submodels():
    s = sum_of_cycles([1, 2, 3])
    subs = submodels(s)
    assert len(subs) == 7
    assert set(subs) == oracles.brute_submodels(s)


def test_fixed_point_without_constant():
    s = add_fixed_point(make_cycle(1))
    assert s.size == 2
    assert len(submodels(s)) == 3


def test_fixed_point_constant_is_in_every_submodel():
    s = add_fixed_point(sum_of_cycles([1, 2, 3]), constant="c")
    subs = submodels(s)
    assert len(subs) == 8
    assert all(s.constants["c"] in sub for sub in subs)


def test_disjoint_sum_rejects_binary_functions():
    rng = random.Random(0)
    with pytest.raises(StructureError):
        disjoint_sum([random_binary(rng, 2), random_binary(rng, 2)])


def test_submodel_cap():
    with pytest.raises(CapExceeded):
        submodels(make_cycle(3), cap=2)


def test_closure_of_a_point_in_a_cycle_is_everything():
    assert closure(make_cycle(4), 1) == 0b1111


def test_restrict_relabels_in_order():
    s = sum_of_cycles([1, 2])
    r = restrict(s, [1, 2])
    assert r.size == 2 and r.functions["F"] == (1, 0)


CYCLE_CONGRUENCE_COUNTS = [1, 2, 2, 3, 2, 4, 2, 4, 3, 4, 2, 6]


def test_cycle_congruence_counts_match_divisors():
    counts = [len(congruences(make_cycle(n))) for n in range(1, 13)]
    assert counts == CYCLE_CONGRUENCE_COUNTS
    assert counts == [oracles.divisor_count(n) for n in range(1, 13)]


@pytest.mark.parametrize("n", range(1, 9))
def test_cycle_congruences_match_brute_force(n):
    c = make_cycle(n)
    got = {tuple(sorted(tuple(sorted(b)) for b in p)) for p in congruences(c)}
    assert got == oracles.brute_congruences(c)


def test_congruences_sorted_finest_first():
    cons = congruences(make_cycle(6))
    assert len(cons[0]) == 6 and len(cons[-1]) == 1


def test_cycle_six_quotients_are_divisor_cycles():
    c = make_cycle(6)
    sizes = sorted(len(p) for p in congruences(c))
    assert sizes == [1, 2, 3, 6]
    for p in congruences(c):
        assert isomorphic(quotient(c, p), make_cycle(len(p))) is not None


def test_congruence_cap():
    with pytest.raises(CapExceeded):
        congruences(make_cycle(13))


def test_is_congruence_rejects_incompatible_partition():
    assert not is_congruence(make_cycle(4), [[0, 1], [2, 3]])
    assert is_congruence(make_cycle(4), [[0, 2], [1, 3]])


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 4))
def test_congruences_match_brute_force_binary(seed, n):
    s = random_binary(random.Random(seed), n)
    got = {tuple(sorted(tuple(sorted(b)) for b in p)) for p in congruences(s)}
    assert got == oracles.brute_congruences(s)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 4))
def test_submodels_match_brute_force_binary(seed, n):
    s = random_binary(random.Random(seed), n)
    assert set(submodels(s)) == oracles.brute_submodels(s)


@settings(max_examples=60, deadline=None)
@given(unars, st.integers(0, 10**6))
def test_isomorphic_to_a_relabeling(s, seed):
    rng = random.Random(seed)
    perm = list(range(s.size))
    rng.shuffle(perm)
    table = [0] * s.size
    for x in range(s.size):
        table[perm[x]] = perm[s.functions["F"][x]]
    t = Structure(s.signature, s.size, {"F": table})
    iso = isomorphic(s, t)
    assert iso is not None and is_isomorphism(s, t, iso)


@settings(max_examples=60, deadline=None)
@given(unars, unars)
def test_isomorphic_agrees_with_brute_force(a, b):
    assert (isomorphic(a, b) is not None) == oracles.brute_isomorphic(a, b)


@settings(max_examples=30, deadline=None)
@given(unars, unars, unars)
def test_isomorphism_is_transitive(a, b, c):
    ab, bc = isomorphic(a, b), isomorphic(b, c)
    if ab is not None and bc is not None:
        ac = isomorphic(a, c)
        assert ac is not None
        assert is_isomorphism(a, c, bc.compose(ab)) or is_isomorphism(a, c, ab.compose(bc))


def test_isomorphism_respects_predicates_and_constants():
    sig = Signature(functions=[("F", 1)], predicates=[("P", 1)], constants=["c"])
    a = Structure(sig, 2, {"F": [0, 1]}, {"P": {(0,)}}, {"c": 0})
    b = Structure(sig, 2, {"F": [0, 1]}, {"P": {(1,)}}, {"c": 1})
    c = Structure(sig, 2, {"F": [0, 1]}, {"P": {(1,)}}, {"c": 0})
    assert isomorphic(a, b) is not None
    assert isomorphic(a, c) is None


def test_class_frame_of_sum_of_cycles():
    cf = class_frame(submodel_structures(sum_of_cycles([1, 2, 3])), "sub")
    assert cf.size == 7 and len(cf.relation) == 19


def test_class_frame_with_fixed_point():
    s = add_fixed_point(sum_of_cycles([1, 2, 3]), constant="c")
    cf = class_frame(submodel_structures(s), "sub")
    assert cf.size == 8 and len(cf.relation) == 27


def test_ext_is_the_converse_of_sub():
    cs = submodel_structures(sum_of_cycles([1, 2]))
    sub, ext = class_frame(cs, "sub"), class_frame(cs, "ext")
    assert ext.relation == frozenset((b, a) for a, b in sub.relation)


def test_quotient_class_frame_of_cycle_six():
    c = make_cycle(6)
    cs = [quotient(c, p) for p in congruences(c)]
    cf = class_frame(cs, "quot")
    sizes = [r.size for r in cf.representatives]
    assert sizes == [1, 2, 3, 6]
    expect = {(a, b) for a in range(4) for b in range(4) if sizes[a] % sizes[b] == 0}
    assert cf.relation == expect


def test_class_frame_rejects_mixed_signatures():
    rng = random.Random(1)
    with pytest.raises(StructureError):
        class_frame([make_cycle(2), random_binary(rng, 2)], "sub")
    with pytest.raises(ValueError):
        class_frame([make_cycle(2)], "sideways")


def test_class_frame_of_cycle_five_is_a_reflexive_point():
    cf = class_frame(submodel_structures(make_cycle(5)), "sub")
    assert cf.size == 1 and cf.relation == frozenset({(0, 0)})
