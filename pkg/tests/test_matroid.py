"""Matroid structure queries, delete/contract/dual, isomorphism, minors."""

import random
from itertools import combinations

import pytest

from matroidsplit import catalog
from matroidsplit.gf2 import Gf2Matrix
from matroidsplit.matroid import BinaryMatroid, Graph, MinorWitness, k4_matroid
from matroidsplit.ops import three_fold

from oracles import (
    brute_circuits,
    brute_cocircuits,
    brute_isomorphism,
    component_count,
    cycle_edge_sets,
    subsets,
)


def g4():
    return BinaryMatroid.from_matrix(("x", "y", "z"), Gf2Matrix.from_bits(["111"]))


def labels_of(sets):
    return {frozenset(s) for s in sets}


# -- construction -----------------------------------------------------------------


def test_from_matrix_wraps_without_normalizing():
    m = g4()
    assert m.labels == ("x", "y", "z")
    assert m.rep.rows == (0b111,)


def test_from_matrix_empty():
    m = BinaryMatroid.from_matrix((), Gf2Matrix((), 0))
    assert m.rank() == 0 and m.n_elements() == 0


def test_from_matrix_single_loop():
    m = BinaryMatroid.from_matrix(("e",), Gf2Matrix((0,), 1))
    assert m.loops() == {"e"}


def test_from_matrix_rejects_duplicates_and_mismatch():
    with pytest.raises(ValueError):
        BinaryMatroid.from_matrix(("a", "a"), Gf2Matrix((0,), 2))
    with pytest.raises(ValueError):
        BinaryMatroid.from_matrix(("a",), Gf2Matrix((0,), 2))
    with pytest.raises(ValueError):
        BinaryMatroid.from_matrix(("a b",), Gf2Matrix((0,), 1))


def test_from_graph_parallel_edges_match_all_ones_row():
    g = Graph(2, ((1, 2, "x"), (1, 2, "y"), (1, 2, "z")))
    m = BinaryMatroid.from_graph(g)
    assert m == BinaryMatroid(("x", "y", "z"),
                              Gf2Matrix((0b111, 0b111), 3))
    assert m.rank() == 1


def test_from_graph_loop_gives_zero_column():
    g = Graph(1, ((1, 1, "l"),))
    assert BinaryMatroid.from_graph(g).rep.column(0) == 0


def test_from_graph_triangle():
    g = Graph(3, ((1, 2, "a"), (2, 3, "b"), (1, 3, "c")))
    m = BinaryMatroid.from_graph(g)
    assert m.rank() == 2
    assert m.circuits() == {frozenset({"a", "b", "c"})}


def test_from_graph_rank_is_vertices_minus_components():
    rng = random.Random(5)
    for _ in range(60):
        n = rng.randint(1, 6)
        edges = tuple((rng.randint(1, n), rng.randint(1, n), f"e{i}")
                      for i in range(rng.randint(0, 8)))
        g = Graph(n, edges)
        m = BinaryMatroid.from_graph(g)
        assert m.rank() == n - component_count(g)


def test_from_graph_circuits_are_cycle_edge_sets():
    for entry in catalog.list_entries():
        assert entry.matroid.circuits() == cycle_edge_sets(entry.graph)


# -- rank and subset rank -----------------------------------------------------------


def test_subset_rank_examples():
    m = g4()
    assert m.subset_rank({"x"}) == 1
    assert m.subset_rank({"x", "y", "z"}) == 1
    assert m.subset_rank(()) == 0


def test_subset_rank_unknown_label():
    with pytest.raises(ValueError, match="unknown element label"):
        g4().subset_rank({"w"})


def test_subset_rank_monotone_and_submodular_on_catalog():
    for entry in catalog.list_entries():
        m = entry.matroid
        ground = list(m.labels)
        rank_of = {s: m.subset_rank(s) for s in subsets(ground)}
        for s in subsets(ground):
            sset = set(s)
            for t in subsets(ground):
                tset = set(t)
                rs, rt = rank_of[s], rank_of[t]
                ru = m.subset_rank(sset | tset)
                ri = m.subset_rank(sset & tset)
                if sset <= tset:
                    assert rs <= rt
                assert ru + ri <= rs + rt


# -- circuits / cocircuits / loops / parallels ---------------------------------------


def test_circuits_of_three_parallel_elements():
    assert g4().circuits() == labels_of([("x", "y"), ("x", "z"), ("y", "z")])


def test_cocircuits_of_three_parallel_elements():
    assert g4().cocircuits() == labels_of([("x", "y", "z")])


def test_k4_has_four_triangles_and_three_quads():
    sizes = sorted(len(c) for c in k4_matroid().circuits())
    assert sizes == [3, 3, 3, 3, 4, 4, 4]


def test_circuits_match_brute_force_on_catalog():
    for entry in catalog.list_entries():
        assert entry.matroid.circuits() == brute_circuits(entry.matroid)
        assert entry.matroid.cocircuits() == brute_cocircuits(entry.matroid)


def test_loops_and_parallel_classes_on_quotient_shapes():
    q2 = catalog.get("Q_2").matroid
    assert len(q2.loops()) == 1
    assert sorted(len(c) for c in q2.parallel_classes()) == [4]
    q3 = catalog.get("Q_3").matroid
    assert len(q3.loops()) == 2
    assert sorted(len(c) for c in q3.parallel_classes()) == [3]


def test_identity_matroid_is_all_coloops():
    m = BinaryMatroid.from_matrix(("a", "b", "c"),
                                  Gf2Matrix.from_bits(["100", "010", "001"]))
    assert m.coloops() == {"a", "b", "c"}
    assert m.loops() == frozenset()


def test_loops_sit_in_singleton_circuits():
    m = BinaryMatroid.from_matrix(("a", "b"), Gf2Matrix.from_bits(["10"]))
    assert frozenset({"b"}) in m.circuits()
    assert m.coloops() == {"a"}


# -- delete / contract / dual ----------------------------------------------------------


def test_delete_removes_columns():
    m = g4().delete({"z"})
    assert m.labels == ("x", "y")
    assert m.parallel_classes() == (frozenset({"x", "y"}),)


def test_contract_single_element_of_parallel_class():
    m = g4().contract({"x"})
    assert m.labels == ("y", "z")
    assert m.loops() == {"y", "z"}


def test_contract_empty_set_is_identity():
    assert g4().contract(()).same_matrix(g4())


def test_contract_rank_law():
    for entry in catalog.list_entries():
        m = entry.matroid
        for s in subsets(m.labels):
            assert m.contract(s).rank() == m.rank() - m.subset_rank(s)


def test_contract_dependent_set_allowed():
    m = g4().contract({"x", "y"})
    assert m.labels == ("z",)
    assert m.loops() == {"z"}


def test_dual_is_involution():
    m = g4()
    assert m.dual().dual() == m


def test_dual_of_three_parallel_elements():
    d = g4().dual()
    assert d.rank() == 2
    assert d.circuits() == {frozenset({"x", "y", "z"})}


def test_dual_circuits_are_cocircuits():
    k4 = k4_matroid()
    assert k4.dual().circuits() == k4.cocircuits()
    for entry in catalog.list_entries():
        assert entry.matroid.dual().circuits() == entry.matroid.cocircuits()


def test_duality_exchange_on_catalog():
    for entry in catalog.list_entries():
        m = entry.matroid
        for s in subsets(m.labels):
            assert m.delete(s).dual() == m.dual().contract(s)


def test_circuit_cocircuit_intersections_even():
    for entry in catalog.list_entries():
        for c in entry.matroid.circuits():
            for cc in entry.matroid.cocircuits():
                assert len(c & cc) % 2 == 0


# -- isomorphism -------------------------------------------------------------------------


def test_isomorphic_quotient_shapes():
    q3 = catalog.get("Q_3").matroid
    q4 = catalog.get("Q_4").matroid
    phi = q3.is_isomorphic(q4)
    assert phi is not None
    assert {frozenset(phi[x] for x in c) for c in q3.circuits()} == q4.circuits()


def test_not_isomorphic_different_sizes():
    assert g4().is_isomorphic(k4_matroid()) is None


def test_isomorphic_under_column_shuffle():
    rng = random.Random(11)
    for entry in catalog.list_entries():
        m = entry.matroid
        order = list(range(m.n_elements()))
        rng.shuffle(order)
        cols = [m.rep.column(j) for j in order]
        rows = tuple(sum(((cols[j] >> i) & 1) << j for j in range(len(cols)))
                     for i in range(m.rep.n_rows))
        shuffled = BinaryMatroid(tuple(m.labels[j] for j in order),
                                 Gf2Matrix(rows, m.n_elements()))
        phi = m.is_isomorphic(shuffled)
        assert phi is not None


def test_isomorphism_invariant_under_row_operations():
    m = catalog.get("F").matroid
    rows = list(m.rep.rows)
    rows[0] ^= rows[1]
    altered = BinaryMatroid(m.labels, Gf2Matrix(tuple(rows), m.rep.n_cols))
    assert altered == m
    assert m.is_isomorphic(altered) is not None


def test_isomorphism_reflexive_symmetric_on_catalog():
    entries = catalog.list_entries()
    for e in entries:
        assert e.matroid.is_isomorphic(e.matroid) is not None
    for a in entries:
        for b in entries:
            forward = a.matroid.is_isomorphic(b.matroid)
            backward = b.matroid.is_isomorphic(a.matroid)
            assert (forward is None) == (backward is None)


def test_isomorphism_agrees_with_permutation_oracle():
    entries = [e.matroid for e in catalog.list_entries()
               if e.matroid.n_elements() <= 6]
    for a in entries:
        for b in entries:
            assert (a.is_isomorphic(b) is None) == (brute_isomorphism(a, b) is None)


# -- minors ---------------------------------------------------------------------------------


def test_identity_minor_witness():
    k4 = k4_matroid()
    w = k4.has_minor(k4)
    assert w is not None
    assert w.deleted == frozenset() and w.contracted == frozenset()
    assert w.verify(k4, k4)


def test_minor_absent_when_pattern_larger():
    assert g4().has_minor(k4_matroid()) is None


def test_three_fold_of_parallel_triple_has_k4_minor():
    folded = three_fold(g4(), "x", "y")
    w = folded.has_minor(k4_matroid())
    assert w is not None
    assert w.verify(folded, k4_matroid())


def test_minor_witnesses_self_verify_across_catalog():
    f = catalog.get("F").matroid
    for entry in catalog.list_entries():
        w = entry.matroid.has_minor(f)
        if w is not None:
            assert w.verify(entry.matroid, f)


def test_minor_with_pins():
    folded = three_fold(g4(), "x", "y")
    k4 = k4_matroid()
    free = folded.has_minor(k4)
    pat_label = next(iter(free.mapping))
    host_label = free.mapping[pat_label]
    pinned = folded.has_minor(k4, pins={pat_label: host_label})
    assert pinned is not None
    assert pinned.mapping[pat_label] == host_label
    assert pinned.verify(folded, k4)


def test_minor_pins_unknown_labels_error():
    with pytest.raises(ValueError, match="unknown"):
        k4_matroid().has_minor(k4_matroid(), pins={"nope": "e12"})
    with pytest.raises(ValueError, match="unknown"):
        k4_matroid().has_minor(k4_matroid(), pins={"e12": "nope"})


def test_minor_witness_invariants():
    with pytest.raises(ValueError):
        MinorWitness(deleted=frozenset({"a"}), contracted=frozenset({"a"}),
                     mapping={})
    with pytest.raises(ValueError):
        MinorWitness(deleted=frozenset({"a"}), contracted=frozenset(),
                     mapping={"p": "a"})


def test_minor_search_slow_and_fast_paths_agree(corpus6):
    # The profile-matched kernel path and the per-candidate circuit search
    # must pick the same first witness.
    f = catalog.get("F").matroid
    for m in corpus6.members:
        c_size = m.rank() - f.rank()
        d_size = m.n_elements() - 5 - c_size
        if c_size < 0 or d_size < 0:
            continue
        fast = m.has_minor(f)
        slow = m._scan_minors_iso(f, c_size, d_size, None, 0)
        assert (fast is None) == (slow is None)
        if fast is not None:
            assert fast.deleted == slow.deleted
            assert fast.contracted == slow.contracted


def test_minor_marked_images_cover_found_witness():
    entry = catalog.get("G_1")
    host = entry.matroid
    images = host.minor_marked_images(entry.matroid, entry.marked)
    assert frozenset(entry.marked) in images


# -- gammoid test ----------------------------------------------------------------------------


def test_gammoid_examples():
    assert g4().is_binary_gammoid()
    assert not k4_matroid().is_binary_gammoid()
    assert not three_fold(g4(), "x", "y").is_binary_gammoid()


def test_k4_witness_agrees_with_boolean(corpus6):
    for m in list(corpus6.members) + [e.matroid for e in catalog.list_entries()]:
        assert m.is_binary_gammoid() == (m.k4_minor() is None)


def test_gammoid_closed_under_minors(corpus6):
    for m in corpus6.gammoids():
        for lab in m.labels:
            assert m.delete({lab}).is_binary_gammoid()
            assert m.contract({lab}).is_binary_gammoid()


def test_represented_equality_is_rowspace_equality():
    a = BinaryMatroid(("x", "y"), Gf2Matrix.from_bits(["11"]))
    b = BinaryMatroid(("x", "y"), Gf2Matrix.from_bits(["11", "11", "00"]))
    assert a == b
    assert not a.same_matrix(b)
    c = BinaryMatroid(("x", "w"), Gf2Matrix.from_bits(["11"]))
    assert a != c
