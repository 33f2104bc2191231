#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace test_support;

TEST(Poset, FromRelations) {
    auto one = make_poset({"a"}, {});
    EXPECT_EQ(one->size(), 1u);
    EXPECT_TRUE(one->covers().empty());
    auto x2 = chain(2);
    ASSERT_EQ(x2->covers().size(), 1u);
    EXPECT_TRUE(x2->leq(0, 1));
    EXPECT_FALSE(x2->leq(1, 0));
    EXPECT_THROW(make_poset({"a", "b"}, {{"a", "b"}, {"b", "a"}}), CycleError);
    EXPECT_THROW(make_poset({"a"}, {{"a", "z"}}), UnknownElement);
}

TEST(Poset, ClosureAndReduction) {
    auto p = make_poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    EXPECT_EQ(p->covers().size(), 2u);
    EXPECT_FALSE(p->cover_index(0, 2).has_value());
    // transitive closure of covers equals leq
    auto q = make_poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    EXPECT_EQ(p->leq_matrix(), q->leq_matrix());
}

TEST(Poset, Grid) {
    EXPECT_EQ(grid(1, 1)->size(), 1u);
    auto g22 = grid(2, 2);
    EXPECT_EQ(g22->size(), 4u);
    EXPECT_EQ(g22->covers().size(), 4u);
    auto g33 = grid(3, 3);
    EXPECT_EQ(g33->size(), 9u);
    EXPECT_EQ(g33->covers().size(), 12u);
    auto g34 = grid(3, 4);
    EXPECT_EQ(g34->covers().size(), 3u * 3 + 4u * 2);
    EXPECT_TRUE(g33->leq(g33->index("1,1"), g33->index("3,3")));
    EXPECT_FALSE(g33->leq(g33->index("1,2"), g33->index("2,1")));
}

TEST(Poset, StaircaseGrid) {
    auto s = staircase_grid(3, 3);
    EXPECT_EQ(s->size(), 15u);
    EXPECT_TRUE(s->find("1,5").has_value());
    EXPECT_FALSE(s->find("3,4").has_value());
    EXPECT_EQ(staircase_grid(2, 2)->size(), 6u);
}

TEST(Poset, ConvexHull) {
    auto d = diamond();
    EXPECT_EQ(convex_hull(*d, set_of(*d, {"a"})), set_of(*d, {"a"}));
    EXPECT_EQ(convex_hull(*d, set_of(*d, {"a", "d"})), subset::full(4));
    EXPECT_THROW(convex_hull(*d, subset(4)), EmptySubset);
    auto g = grid(3, 3);
    auto hull = convex_hull(*g, set_of(*g, {"2,1", "1,2", "3,2", "2,3"}));
    for (std::size_t x = 0; x < g->size(); ++x) {
        const std::string& id = g->element(x);
        int i = id[0] - '0', j = id[2] - '0';
        EXPECT_EQ(hull.contains(x), 3 <= i + j && i + j <= 5) << id;
    }
}

TEST(Poset, HullIsIdempotentAndMonotone) {
    auto g = grid(3, 3);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        subset s(g->size());
        for (std::size_t x = 0; x < g->size(); ++x)
            if (rng() % 3 == 0) s.insert(x);
        if (s.empty()) continue;
        auto h = convex_hull(*g, s);
        EXPECT_TRUE(s.subset_of(h));
        EXPECT_EQ(convex_hull(*g, h), h);
        EXPECT_TRUE(is_convex(*g, h));
        subset bigger = s;
        bigger.insert(rng() % g->size());
        EXPECT_TRUE(h.subset_of(convex_hull(*g, bigger)));
    }
}

TEST(Poset, IsInterval) {
    auto d = diamond();
    EXPECT_TRUE(is_interval(*d, set_of(*d, {"a"})));
    EXPECT_FALSE(is_interval(*d, set_of(*d, {"b", "c"})));
    EXPECT_TRUE(is_interval(*d, set_of(*d, {"a", "b", "c"})));
    EXPECT_FALSE(is_interval(*d, set_of(*d, {"a", "d"})));
}

TEST(Poset, IntervalEnumerationMatchesBruteForce) {
    for (auto p : {diamond(), grid(2, 3), grid(3, 3), y_poset(), fork3()}) {
        std::size_t brute = 0;
        for (std::size_t mask = 1; mask < (std::size_t(1) << p->size()); ++mask) {
            subset s(p->size());
            for (std::size_t i = 0; i < p->size(); ++i)
                if (mask >> i & 1) s.insert(i);
            brute += is_interval(*p, s) ? 1 : 0;
        }
        auto all = interval_subsets(*p);
        EXPECT_EQ(all.size(), brute);
        for (const auto& s : all) EXPECT_TRUE(is_interval(*p, s));
    }
    EXPECT_EQ(interval_subsets(*diamond()).size(), 11u);
}

TEST(Embedding, Counts) {
    auto d = diamond();
    EXPECT_EQ(enumerate_embeddings(fork3(), d).size(), 1u);
    EXPECT_EQ(enumerate_embeddings(chain(3), y_poset()).size(), 2u);
    auto g = grid(3, 2);
    EXPECT_EQ(enumerate_embeddings(chain(1), g).size(), g->size());
}

TEST(Embedding, Automorphisms) {
    EXPECT_EQ(poset_automorphisms(*chain(2)).size(), 1u);
    auto f = fork3();
    auto autos = poset_automorphisms(*f);
    EXPECT_EQ(autos, brute_automorphisms(*f));
    EXPECT_EQ(autos.size(), 2u);
    auto d = diamond();
    EXPECT_EQ(poset_automorphisms(*d), brute_automorphisms(*d));
    EXPECT_EQ(poset_automorphisms(*d).size(), 2u);
}

TEST(Embedding, OrbitProperties) {
    auto g = grid(3, 3);
    for (auto x : {chain(2), chain(3), fork3(), cofork3(), diamond()}) {
        auto emb = enumerate_embeddings(x, g);
        auto autos = poset_automorphisms(*x);
        // orbit-stabilizer: every embedding is in exactly one orbit of size |Aut|
        EXPECT_EQ(emb.size() * autos.size(), brute_embedding_count(*x, *g));
        std::set<std::vector<std::size_t>> maps;
        for (const auto& f : emb) {
            EXPECT_TRUE(is_order_embedding(*x, *g, f.map));
            maps.insert(f.map);
        }
        EXPECT_EQ(maps.size(), emb.size());
        for (const auto& f : emb)
            for (const auto& sigma : autos) {
                std::vector<std::size_t> composed(f.map.size());
                for (std::size_t a = 0; a < composed.size(); ++a) composed[a] = f.map[sigma[a]];
                EXPECT_TRUE(maps.count(canonical_map(composed, autos)));
                EXPECT_EQ(canonical_map(composed, autos), f.map);
            }
    }
}

TEST(Poset, Opposite) {
    auto one = make_poset({"a"}, {});
    EXPECT_EQ(*opposite(*one), *one);
    auto x2 = chain(2);
    auto op = opposite(*x2);
    EXPECT_TRUE(op->leq(1, 0));
    EXPECT_FALSE(op->leq(0, 1));
    auto g = grid(3, 2);
    EXPECT_EQ(*opposite(*opposite(*g)), *g);
}

TEST(Poset, LongestChain) {
    EXPECT_EQ(longest_chain(*chain(3)), 3u);
    EXPECT_EQ(longest_chain(*fork3()), 2u);
    EXPECT_EQ(longest_chain(*grid(3, 3)), 5u);
}
