import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from poscat import (
    Carrier,
    MonotoneMap,
    OrderViolation,
    Poset,
    Preorder,
    Relation,
    check_poset,
    check_preorder,
    classify_map,
    covering_relation,
    default_carrier,
    down_closure,
    opposite,
    reflexive_transitive_closure,
    symmetrize,
    up_closure,
)
from poscat.enumeration import enumerate_posets, enumerate_preorders

from conftest import naive_closure, rel_pairs


def relations(max_n: int = 6):
    def build(n):
        full = (1 << n) - 1
        return st.lists(st.integers(0, full), min_size=n, max_size=n).map(
            lambda rows: Relation(default_carrier(n), tuple(rows))
        )

    return st.integers(min_value=0, max_value=max_n).flatmap(build)


class TestCarrier:
    def test_duplicate_labels_rejected(self):
        with pytest.raises(ValueError, match="duplicate"):
            Carrier(("a", "a"))

    def test_index_round_trip(self):
        c = default_carrier(3)
        assert [c.index(x) for x in c] == [0, 1, 2]
        with pytest.raises(KeyError):
            c.index("z")


class TestClosure:
    def test_empty_relation_closes_to_diagonal(self):
        c = default_carrier(2)
        p = reflexive_transitive_closure(Relation.from_pairs(c, []))
        assert rel_pairs(p.rel) == {("a", "a"), ("b", "b")}

    def test_two_step_chain(self):
        c = default_carrier(3)
        r = Relation.from_label_pairs(c, [("a", "b"), ("b", "c")])
        p = reflexive_transitive_closure(r)
        assert rel_pairs(p.rel) == naive_closure([("a", "b"), ("b", "c")], "abc")

    def test_full_relation_is_fixed(self):
        c = default_carrier(3)
        r = Relation.full(c)
        assert reflexive_transitive_closure(r).rel == r

    @given(relations())
    def test_matches_naive_oracle(self, r):
        got = rel_pairs(reflexive_transitive_closure(r).rel)
        assert got == naive_closure(r.label_pairs(), r.carrier.elements)

    @given(relations())
    def test_idempotent_and_extensive(self, r):
        once = reflexive_transitive_closure(r).rel
        assert r.is_subrelation(once)
        assert reflexive_transitive_closure(once).rel == once


class TestCheckPoset:
    def test_one_point_diagonal(self):
        c = Carrier(("a",))
        assert isinstance(check_poset(Relation.diagonal(c)), Poset)

    def test_symmetric_pair_breaks_antisymmetry(self):
        c = default_carrier(2)
        r = Relation.diagonal(c).union(Relation.from_label_pairs(c, [("a", "b"), ("b", "a")]))
        v = check_poset(r)
        assert isinstance(v, OrderViolation)
        assert v.axiom == "antisymmetry"
        assert v.witness == ("a", "b")

    def test_two_chain_valid_by_axiom_oracle(self, chain2):
        # independent axiom scan over the pair set
        pairs = rel_pairs(chain2.rel)
        assert all((x, x) in pairs for x in "ab")
        assert all((a, d) in pairs for a, b in pairs for c, d in pairs if b == c)
        assert isinstance(check_poset(chain2.rel), Poset)

    def test_missing_diagonal_reported(self):
        c = default_carrier(2)
        v = check_poset(Relation.from_label_pairs(c, [("a", "a")]))
        assert isinstance(v, OrderViolation)
        assert v.axiom == "reflexivity"
        assert v.witness == ("b",)

    def test_broken_transitivity_reported(self):
        c = default_carrier(3)
        r = Relation.diagonal(c).union(Relation.from_label_pairs(c, [("a", "b"), ("b", "c")]))
        v = check_poset(r)
        assert isinstance(v, OrderViolation)
        assert v.axiom == "transitivity"
        assert v.witness == ("a", "b", "c")

    def test_check_preorder_accepts_symmetric_pair(self):
        c = default_carrier(2)
        r = Relation.full(c)
        assert isinstance(check_preorder(r), Preorder)


class TestSymmetrize:
    def test_poset_symmetrizes_to_diagonal(self, diamond):
        assert symmetrize(diamond) == Relation.diagonal(diamond.carrier)

    def test_full_preorder(self):
        c = default_carrier(2)
        assert symmetrize(Preorder(Relation.full(c))) == Relation.full(c)

    def test_two_cycle_with_tail(self):
        c = default_carrier(3)
        closed = naive_closure([("a", "b"), ("b", "a"), ("b", "c")], "abc")
        p = Preorder(Relation.from_label_pairs(c, closed))
        sym = rel_pairs(symmetrize(p))
        # pairwise oracle: exactly the mutual pairs
        expected = {(x, y) for x, y in closed if (y, x) in closed}
        assert sym == expected
        assert sym == {("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("b", "a")}

    def test_diagonal_iff_poset_exhaustively(self):
        for pre in enumerate_preorders(3):
            is_diag = symmetrize(pre) == Relation.diagonal(pre.carrier)
            assert is_diag == isinstance(check_poset(pre.rel), Poset)


class TestOpposite:
    def test_chain_reverses(self, chain2):
        assert rel_pairs(opposite(chain2).rel) == {("a", "a"), ("b", "b"), ("b", "a")}

    def test_diagonal_self_dual(self, antichain2):
        assert opposite(antichain2) == antichain2

    def test_en_poset_pair_reversal_oracle(self, en_poset):
        reversed_pairs = {(b, a) for a, b in rel_pairs(en_poset.rel)}
        assert rel_pairs(opposite(en_poset).rel) == reversed_pairs

    def test_involution_and_type(self):
        for p in enumerate_posets(3):
            q = opposite(p)
            assert isinstance(q, Poset)
            assert opposite(q) == p


class TestUpDownClosure:
    def test_down_of_top_in_chain(self, chain2):
        assert down_closure(chain2, [1]) == {0, 1}

    def test_down_of_empty(self, chain3):
        assert down_closure(chain3, []) == frozenset()

    def test_diamond_middle_antichain(self, diamond):
        m1, m2 = diamond.carrier.index("m1"), diamond.carrier.index("m2")
        got = down_closure(diamond, [m1, m2])
        assert {diamond.carrier.label(i) for i in got} == {"bot", "m1", "m2"}

    def test_scan_oracle_idempotence_monotonicity(self, en_poset):
        pairs = rel_pairs(en_poset.rel)
        lab = en_poset.carrier.elements
        n = len(lab)
        for mask in range(1 << n):
            s = {i for i in range(n) if mask >> i & 1}
            got = down_closure(en_poset, s)
            expected = {i for i in range(n) if any((lab[i], lab[d]) in pairs for d in s)}
            assert got == expected
            assert down_closure(en_poset, got) == got
        assert down_closure(en_poset, [0]) <= down_closure(en_poset, [0, 1])

    def test_down_is_up_of_opposite(self, diamond):
        n = diamond.carrier.size
        dual = opposite(diamond)
        for mask in range(1 << n):
            s = [i for i in range(n) if mask >> i & 1]
            assert down_closure(diamond, s) == up_closure(dual, s)


class TestClassifyMap:
    def test_identity(self, chain2):
        flags = classify_map(MonotoneMap.identity(chain2))
        assert (flags.is_monotone, flags.is_surjective, flags.is_order_embedding) == (True, True, True)

    def test_constant_collapse(self, chain2, point):
        f = MonotoneMap(chain2, point, (0, 0))
        flags = classify_map(f)
        assert flags.is_monotone and flags.is_surjective and not flags.is_order_embedding

    def test_antichain_into_chain_not_embedding(self, antichain2, chain2):
        f = MonotoneMap(antichain2, chain2, (0, 1))
        flags = classify_map(f)
        assert flags.is_monotone
        assert len(set(f.table)) == 2  # injective
        assert not flags.is_order_embedding

    def test_embedding_implies_injective(self):
        posets = list(enumerate_posets(2)) + list(enumerate_posets(3))
        for dom in posets:
            for cod in posets:
                for table in itertools.product(range(cod.carrier.size), repeat=dom.carrier.size):
                    f = MonotoneMap(dom, cod, table)
                    if classify_map(f).is_order_embedding:
                        assert len(set(table)) == len(table)

    def test_embeddings_compose(self, point, chain2, chain3):
        f = MonotoneMap(point, chain2, (1,))
        g = MonotoneMap(chain2, chain3, (0, 2))
        assert classify_map(f).is_order_embedding
        assert classify_map(g).is_order_embedding
        assert classify_map(g.compose(f)).is_order_embedding


class TestCoveringRelation:
    def test_three_chain(self, chain3):
        assert rel_pairs(covering_relation(chain3)) == {("a", "b"), ("b", "c")}

    def test_antichain_empty(self, antichain3):
        assert rel_pairs(covering_relation(antichain3)) == set()

    def test_diamond_four_covers(self, diamond):
        assert rel_pairs(covering_relation(diamond)) == {
            ("bot", "m1"),
            ("bot", "m2"),
            ("m1", "top"),
            ("m2", "top"),
        }

    def test_reduction_oracle(self, chain3, diamond):
        # a cover pair is a strict pair whose removal changes the closure
        for p in (chain3, diamond):
            strict = {(a, b) for a, b in rel_pairs(p.rel) if a != b}
            redundant = {
                pair
                for pair in strict
                if naive_closure(strict - {pair}, p.carrier.elements)
                == naive_closure(strict, p.carrier.elements)
            }
            assert rel_pairs(covering_relation(p)) == strict - redundant

    @settings(deadline=None)
    @given(st.integers(min_value=0, max_value=4))
    def test_roundtrip_small(self, n):
        for p in enumerate_posets(n):
            closed = reflexive_transitive_closure(covering_relation(p))
            assert closed.rel == p.rel

    def test_roundtrip_exhaustive_up_to_six(self):
        counts = []
        for n in range(7):
            total = 0
            for p in enumerate_posets(n):
                total += 1
                assert reflexive_transitive_closure(covering_relation(p)).rel == p.rel
            counts.append(total)
        assert counts == [1, 1, 3, 19, 219, 4231, 130023]


class TestTopologyFlags:
    def test_trivially_true(self, chain2):
        assert chain2.rel.is_closed
        assert MonotoneMap.identity(chain2).is_continuous
