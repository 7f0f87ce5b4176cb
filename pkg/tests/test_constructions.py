import pytest

from poscat import (
    FactorObstruction,
    MonotoneMap,
    NonEmbeddingError,
    QuotientObject,
    Relation,
    cokernel_pair,
    coproduct,
    default_carrier,
    delta,
    double,
    equalizer,
    factor_through,
    find_isomorphism,
    nabla,
    preorder_of_map,
    product,
    pushout_embeddings,
    quotient_of_preorder,
    reflect,
    subset_poset,
)
from poscat.constructions import pair_index
from poscat.core import Preorder
from poscat.enumeration import (
    brute_force_pushout,
    enumerate_preorders_extending,
    enumerate_surjections,
    enumerate_posets,
    pushout_results_equal,
)

from conftest import naive_closure, poset_from, rel_pairs


class TestDeltaNabla:
    def test_delta_is_antichain(self):
        p = delta(default_carrier(2))
        assert rel_pairs(p.rel) == {("a", "a"), ("b", "b")}

    def test_nabla_is_full(self):
        p = nabla(default_carrier(2))
        assert len(set(p.rel.label_pairs())) == 4

    def test_delta_of_empty(self):
        p = delta(default_carrier(0))
        assert p.carrier.size == 0


class TestReflect:
    def test_poset_reflects_to_itself(self, diamond):
        q, rho = reflect(diamond)
        assert len(set(rho.table)) == diamond.carrier.size  # bijective
        assert find_isomorphism(q, diamond) is not None

    def test_nabla_collapses_to_point(self):
        q, rho = reflect(nabla(default_carrier(2)))
        assert q.carrier.elements == ("a+b",)
        assert rho.table == (0, 0)

    def test_chain_with_back_edge_contracts(self):
        c = default_carrier(3)
        closed = naive_closure([("a", "b"), ("b", "c"), ("b", "a")], "abc")
        pre = Preorder(Relation.from_label_pairs(c, closed))
        q, rho = reflect(pre)
        assert q.carrier.elements == ("a+b", "c")
        assert rel_pairs(q.rel) == {("a+b", "a+b"), ("c", "c"), ("a+b", "c")}

    def test_projection_reflects_order_both_ways(self):
        for p in enumerate_posets(3):
            for pre in enumerate_preorders_extending(p):
                q, rho = reflect(pre)
                n = pre.carrier.size
                for x in range(n):
                    for y in range(n):
                        assert pre.rel.has(x, y) == q.rel.has(rho.table[x], rho.table[y])


class TestProductCoproduct:
    def test_chain_squared_is_diamond(self, chain2, diamond):
        p = product(chain2, chain2)
        # componentwise oracle
        for i, (a, b) in enumerate((a, b) for a in "ab" for b in "ab"):
            for j, (c, d) in enumerate((c, d) for c in "ab" for d in "ab"):
                expected = (a <= c) and (b <= d)  # label order matches chain order
                assert p.rel.has(i, j) == expected
        assert find_isomorphism(p, diamond) is not None

    def test_coproduct_keeps_sides_apart(self, chain2):
        p = coproduct(chain2, chain2)
        assert p.carrier.elements == ("a:0", "b:0", "a:1", "b:1")
        got = rel_pairs(p.rel)
        assert ("a:0", "b:0") in got and ("a:1", "b:1") in got
        assert all(a.endswith(":0") == b.endswith(":0") for a, b in got)

    def test_product_unit_law(self, en_poset, point):
        assert find_isomorphism(product(en_poset, point), en_poset) is not None


class TestPreorderOfMap:
    def test_identity_gives_the_order(self, chain3):
        q = preorder_of_map(MonotoneMap.identity(chain3))
        assert q.preord.rel == chain3.rel

    def test_fold_map_on_two_chain(self, chain2):
        # the fold X+X -> X pulls back to: (x,i) below (y,j) iff x <= y
        dbl = double(chain2)
        fold = MonotoneMap(dbl, chain2, (0, 1, 0, 1))
        q = preorder_of_map(fold)
        n = 2
        for x in range(n):
            for i in (0, 1):
                for y in range(n):
                    for j in (0, 1):
                        assert q.preord.rel.has(
                            pair_index(n, x, i), pair_index(n, y, j)
                        ) == chain2.rel.has(x, y)

    def test_constant_gives_nabla(self, chain2, point):
        q = preorder_of_map(MonotoneMap(chain2, point, (0, 0)))
        assert q.preord.rel == Relation.full(chain2.carrier)


class TestQuotientOfPreorder:
    def test_order_itself_gives_bijection(self, chain2):
        q = QuotientObject(chain2, Preorder(chain2.rel))
        quotient, rho = quotient_of_preorder(q)
        assert len(set(rho.table)) == 2

    def test_nabla_gives_point(self, chain2):
        quotient, _ = quotient_of_preorder(QuotientObject(chain2, nabla(chain2.carrier)))
        assert quotient.carrier.size == 1

    def test_added_pair_on_antichain(self, antichain2):
        pre = Preorder(
            Relation.from_label_pairs(antichain2.carrier, [("a", "a"), ("b", "b"), ("a", "b")])
        )
        quotient, rho = quotient_of_preorder(QuotientObject(antichain2, pre))
        assert rel_pairs(quotient.rel) == {("a", "a"), ("b", "b"), ("a", "b")}
        assert len(set(rho.table)) == 2

    def test_roundtrip_both_ways_small(self):
        for p in enumerate_posets(2):
            for pre in enumerate_preorders_extending(p):
                q = QuotientObject(p, pre)
                _, rho = quotient_of_preorder(q)
                assert preorder_of_map(rho).preord.rel == pre.rel


class TestFactorThrough:
    def test_factor_through_itself(self, chain2, point):
        f = MonotoneMap(chain2, point, (0, 0))
        g = factor_through(f, f)
        assert isinstance(g, MonotoneMap)
        assert g.table == (0,)

    def test_collapse_then_identity_fails(self, chain2, point):
        f1 = MonotoneMap(chain2, point, (0, 0))
        f2 = MonotoneMap.identity(chain2)
        got = factor_through(f1, f2)
        assert isinstance(got, FactorObstruction)
        assert got.witness == ("b", "a")

    def test_constant_factors_through_any_surjection(self, chain3, point):
        collapse = poset_from(["ab", "c"], [("ab", "c")])
        f1 = MonotoneMap(chain3, collapse, (0, 0, 1))
        f2 = MonotoneMap(chain3, point, (0, 0, 0))
        g = factor_through(f1, f2)
        assert isinstance(g, MonotoneMap)
        assert [g.table[v] for v in f1.table] == list(f2.table)

    def test_requires_surjective_first_leg(self, chain2):
        f1 = MonotoneMap(chain2, chain2, (0, 0))
        with pytest.raises(ValueError, match="surjective"):
            factor_through(f1, f1)

    def test_quot_order_reversal(self):
        # existence of a factorization g with g.f2 = f1 matches reverse
        # inclusion of the pulled-back pre-orders
        for x in enumerate_posets(2):
            surjections = [
                f
                for ny in range(x.carrier.size + 1)
                for y in enumerate_posets(ny)
                for f in enumerate_surjections(x, y)
            ]
            for f1 in surjections:
                for f2 in surjections:
                    r1 = preorder_of_map(f1).preord.rel
                    r2 = preorder_of_map(f2).preord.rel
                    exists = isinstance(factor_through(f2, f1), MonotoneMap)
                    assert exists == r2.is_subrelation(r1)


class TestPushout:
    def test_identity_cospan(self, chain2):
        i = MonotoneMap.identity(chain2)
        res = pushout_embeddings(i, i)
        assert find_isomorphism(res.apex, chain2) is not None
        assert res.glue_classes == (("a:0", "a:1"), ("b:0", "b:1"))

    def test_glue_top_of_two_chains(self, chain2):
        # one shared top over two copies of a < b
        f = MonotoneMap(poset_from(["b"], []), chain2, (1,))
        res = pushout_embeddings(f, f)
        assert res.apex.carrier.elements == ("a:0", "b:0+b:1", "a:1")
        got = rel_pairs(res.apex.rel)
        assert ("a:0", "b:0+b:1") in got
        assert ("a:1", "b:0+b:1") in got
        assert ("a:0", "a:1") not in got and ("a:1", "a:0") not in got

    def test_empty_domain_gives_coproduct(self, empty_poset, chain2, antichain2):
        f0 = MonotoneMap(empty_poset, chain2, ())
        f1 = MonotoneMap(empty_poset, antichain2, ())
        res = pushout_embeddings(f0, f1)
        assert find_isomorphism(res.apex, coproduct(chain2, antichain2)) is not None

    def test_rejects_non_embedding(self, antichain2, chain2):
        f = MonotoneMap(antichain2, chain2, (0, 1))  # monotone but not an embedding
        with pytest.raises(NonEmbeddingError, match="order-embedding"):
            pushout_embeddings(f, MonotoneMap.identity(antichain2))

    def test_insertions_commute_with_gluing(self, chain2):
        sub, incl = subset_poset(chain2, [0])
        res = pushout_embeddings(incl, incl)
        for x in range(sub.carrier.size):
            assert res.ins0.table[incl.table[x]] == res.ins1.table[incl.table[x]]

    def test_agrees_with_brute_force_small(self):
        from poscat.enumeration import enumerate_embeddings

        posets = [p for n in range(3) for p in enumerate_posets(n)]
        for x in posets:
            legs = [f for y in posets for f in enumerate_embeddings(x, y)]
            for f0 in legs:
                for f1 in legs:
                    assert pushout_results_equal(
                        pushout_embeddings(f0, f1), brute_force_pushout(f0, f1)
                    )


class TestEqualizerAndCokernel:
    def test_equal_maps_keep_everything(self, chain2):
        i = MonotoneMap.identity(chain2)
        k = equalizer(i, i)
        assert k.table == (0, 1)

    def test_disagreeing_maps_keep_nothing(self, antichain2):
        f = MonotoneMap(antichain2, antichain2, (0, 1))
        g = MonotoneMap(antichain2, antichain2, (1, 0))
        assert equalizer(f, g).table == ()

    def test_equalizer_of_cokernel_pair_recovers_subset(self):
        # one half of effectiveness, run over every subset of small posets
        for n in range(4):
            for x in enumerate_posets(n):
                for mask in range(1 << n):
                    keep = [i for i in range(n) if mask >> i & 1]
                    sub, incl = subset_poset(x, keep)
                    qo = cokernel_pair(incl)
                    quotient, rho = quotient_of_preorder(qo)
                    q0 = MonotoneMap(x, quotient, tuple(rho.table[: n]))
                    q1 = MonotoneMap(x, quotient, tuple(rho.table[n:]))
                    assert list(equalizer(q0, q1).table) == keep

    def test_cokernel_of_identity_is_fold_corelation(self, chain2):
        qo = cokernel_pair(MonotoneMap.identity(chain2))
        dbl = double(chain2)
        fold = MonotoneMap(dbl, chain2, (0, 1, 0, 1))
        assert qo.preord.rel == preorder_of_map(fold).preord.rel

    def test_cokernel_of_empty_subset(self, chain2):
        sub, incl = subset_poset(chain2, [])
        qo = cokernel_pair(incl)
        assert qo.preord.rel == double(chain2).rel

    def test_cokernel_of_bottom_point(self, chain2):
        _, incl = subset_poset(chain2, [0])
        qo = cokernel_pair(incl)
        extra = {
            (a, b)
            for a, b in rel_pairs(qo.preord.rel) - rel_pairs(double(chain2).rel)
        }
        assert extra == {
            ("a:0", "a:1"),
            ("a:0", "b:1"),
            ("a:1", "a:0"),
            ("a:1", "b:0"),
        }
