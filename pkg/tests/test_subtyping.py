import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pcgraph.analysis import descendants, topological_order, transitive_reduction
from pcgraph.classdecl import parse
from pcgraph.graph import Digraph
from pcgraph.subtyping import (
    DEFAULT,
    Contravariant,
    Covariant,
    GenericApp,
    Invariant,
    NonGeneric,
    SubtypingResult,
    check_nongeneric_preservation,
    containment_graph,
    empty_containment,
    product_correspondence,
    subtyping_iterate,
)

from strategies import random_class_source

OBJ = NonGeneric("Object")
C_ANY = GenericApp("C", DEFAULT)


class TestTerms:
    def test_java_rendering(self):
        assert str(C_ANY) == "C<?>"
        assert str(GenericApp("C", Covariant(C_ANY))) == "C<? extends C<?>>"
        assert str(Contravariant(OBJ)) == "? super Object"
        assert str(GenericApp("C", Invariant(OBJ))) == "C<Object>"

    def test_structural_equality_and_hash(self):
        a = GenericApp("C", Covariant(GenericApp("C", DEFAULT)))
        b = GenericApp("C", Covariant(GenericApp("C", DEFAULT)))
        assert a == b and hash(a) == hash(b)
        assert Covariant(OBJ) != Contravariant(OBJ)
        assert Invariant(OBJ) != OBJ


class TestContainment:
    def test_empty_basis(self):
        assert empty_containment() == Digraph([DEFAULT])
        assert containment_graph(Digraph()) == Digraph([DEFAULT])

    def test_single_type_identified_top(self):
        g = containment_graph(Digraph([OBJ]), identify_top=True)
        assert g.vertices == {DEFAULT, Invariant(OBJ), Contravariant(OBJ)}
        assert g.edges == {
            (Invariant(OBJ), DEFAULT),
            (Invariant(OBJ), Contravariant(OBJ)),
            (Contravariant(OBJ), DEFAULT),
        }

    def test_two_types_count(self):
        s = Digraph([C_ANY, OBJ], [(C_ANY, OBJ)])
        g = containment_graph(s, identify_top=False)
        assert g.num_vertices == 1 + 3 * 2
        assert (Covariant(C_ANY), Covariant(OBJ)) in g.edges
        assert (Contravariant(OBJ), Contravariant(C_ANY)) in g.edges

    def test_rejects_cycle(self):
        a, b = NonGeneric("A"), NonGeneric("B")
        with pytest.raises(ValueError, match="cycle"):
            containment_graph(Digraph([a, b], [(a, b), (b, a)]))

    def test_identify_top_needs_unique_top(self):
        with pytest.raises(ValueError, match="unique top"):
            containment_graph(Digraph([NonGeneric("A"), NonGeneric("B")]), identify_top=True)

    @settings(max_examples=30)
    @given(st.integers(0, 10_000), st.booleans())
    def test_default_is_unique_sink_and_dag(self, seed, identify_top):
        table = parse(random_class_source(random.Random(seed), max_classes=4))
        s = subtyping_iterate(table, 2, identify_top).graph
        g = containment_graph(s, identify_top)
        topological_order(g)
        assert [v for v in g.vertices if g.out_degree(v) == 0] == [DEFAULT]
        # covariant bounds follow the full subtype closure
        reach = descendants(s)
        for t in s.vertices:
            for u in reach[t]:
                cov_u = DEFAULT if identify_top and s.out_degree(u) == 0 else Covariant(u)
                assert (Covariant(t), cov_u) in g.edges


class TestIterate:
    def test_depth_one_single_generic(self):
        r = subtyping_iterate(parse("class C<T> {}"), 1)
        assert r.graph == Digraph([C_ANY, OBJ], [(C_ANY, OBJ)])
        assert r.per_iteration_counts == [(2, 1)]

    @pytest.mark.parametrize("identify_top, sizes", [(False, [2, 8, 26]), (True, [2, 7, 22])])
    def test_growth_single_generic(self, identify_top, sizes):
        r = subtyping_iterate(parse("class C<T> {}"), 3, identify_top)
        assert [v for v, _ in r.per_iteration_counts] == sizes
        for stage, args in zip(r.stages, r.arguments):
            assert stage.num_vertices == args.num_vertices + 1

    def test_depth_two_shape(self):
        r = subtyping_iterate(parse("class C<T> {}"), 2, identify_top=False)
        assert r.graph.num_vertices == 8
        assert GenericApp("C", Covariant(C_ANY)) in r.graph
        assert GenericApp("C", Contravariant(OBJ)) in r.graph
        reduced = transitive_reduction(r.graph)
        assert (GenericApp("C", Invariant(OBJ)), GenericApp("C", Covariant(OBJ))) in reduced.edges

    def test_depth_zero(self):
        with pytest.raises(ValueError, match="depth"):
            subtyping_iterate(parse("class C<T> {}"), 0)
        r = subtyping_iterate(parse("class A {}"), 0)
        assert r.graph == Digraph([OBJ, NonGeneric("A")], [(NonGeneric("A"), OBJ)])

    def test_negative_depth(self):
        with pytest.raises(ValueError):
            subtyping_iterate(parse(""), -1)

    def test_empty_program(self):
        for depth in range(4):
            assert subtyping_iterate(parse(""), depth).graph == Digraph([OBJ])

    def test_nongeneric_only_is_fixed(self):
        r = subtyping_iterate(parse("class A {} class B extends A {}"), 3)
        assert r.stages[0] == r.stages[1] == r.stages[2]

    def test_generic_subclass_of_generic(self):
        r = subtyping_iterate(parse("class A<T> {} class B<T> extends A<T> {}"), 1)
        b_any, a_any = GenericApp("B", DEFAULT), GenericApp("A", DEFAULT)
        assert r.graph.edges == {(b_any, a_any), (a_any, OBJ)}


class TestPreservation:
    def test_single_generic(self):
        table = parse("class C<T> {}")
        assert check_nongeneric_preservation(subtyping_iterate(table, 3), table)

    def test_mixed(self):
        table = parse("class A {} class B<T> {}")
        r = subtyping_iterate(table, 2)
        assert check_nongeneric_preservation(r, table)
        for s in r.stages:
            assert {NonGeneric("A"), OBJ} <= s.vertices

    def test_detects_corruption(self):
        table = parse("class A {} class B<T> {}")
        r = subtyping_iterate(table, 2)
        broken = Digraph(r.stages[1].vertices - {NonGeneric("A")},
                         [e for e in r.stages[1].edges if NonGeneric("A") not in e])
        bad = SubtypingResult(broken, 2, stages=[r.stages[0], broken])
        assert not check_nongeneric_preservation(bad, table)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000), st.booleans())
def test_round_invariants(seed, identify_top):
    table = parse(random_class_source(random.Random(seed), max_classes=4))
    r = subtyping_iterate(table, 3, identify_top)
    n_generic, n_plain = len(table.generic), len(table.nongeneric)
    for i, (stage, args) in enumerate(zip(r.stages, r.arguments)):
        assert product_correspondence(stage, table, args)
        assert stage.num_vertices == n_generic * args.num_vertices + n_plain
        assert r.per_iteration_counts[i] == r.predicted_counts[i]
        topological_order(stage)
    if table.generic:
        sizes = [s.num_vertices for s in r.stages]
        assert all(a < b for a, b in zip(sizes, sizes[1:]))
    assert check_nongeneric_preservation(r, table)
