#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace test_support;

TEST(Catalog, SizesAndBricks) {
    const std::map<std::string, std::size_t> sizes{{"X1", 1},         {"X2", 3},           {"X3_chain", 6},
                                                   {"X3_fork", 6},    {"X3_cofork", 6},    {"X4_D4_sink", 12},
                                                   {"X4_D4_source", 12}, {"X4_subspace", 12}, {"diamond", 11}};
    for (const auto& [name, n] : sizes) {
        const auto& c = builtin_catalog<Q>(name);
        EXPECT_EQ(c.size(), n) << name;
        EXPECT_TRUE(c.triangular) << name;
        for (std::size_t i = 0; i < c.size(); ++i) EXPECT_EQ(c.phi[i][i], 1) << name;
    }
    EXPECT_THROW(builtin_catalog<Q>("X5"), UnknownCatalog);
    EXPECT_EQ(&builtin_catalog<Q>("X3fork"), &builtin_catalog<Q>("X3_fork"));
}

TEST(Catalog, X2HomMatrix) {
    const auto& c = builtin_catalog<Q>("X2");
    EXPECT_EQ(c.labels, (std::vector<std::string>{"I{2}", "I{1,2}", "I{1}"}));
    EXPECT_EQ(c.phi, (std::vector<std::vector<long long>>{{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}));
}

TEST(Catalog, DiamondMembersAreAllIntervals) {
    const auto& c = builtin_catalog<Q>("diamond");
    auto all = interval_subsets(*c.base);
    EXPECT_EQ(all.size(), c.size());
    for (const auto& s : all) EXPECT_TRUE(c.interval_index(s).has_value());
}

TEST(Catalog, MultFromDimhExamples) {
    const auto& c = builtin_catalog<Q>("X2");
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::vector<long long> e(c.size(), 0);
        e[i] = 1;
        EXPECT_EQ(mult_from_dimh(c, c.members[i]), e);
    }
    pmodule<Q> m(c.base, {1, 1}, {matrix<Q>(1, 1)});
    auto alpha = mult_from_dimh(c, m);
    EXPECT_EQ(alpha[*c.find_label("I{1}")], 1);
    EXPECT_EQ(alpha[*c.find_label("I{2}")], 1);
    EXPECT_EQ(alpha[*c.find_label("I{1,2}")], 0);
}

TEST(Catalog, D4GenericModule) {
    const auto& c = builtin_catalog<Q>("X4_D4_sink");
    auto p = c.base;
    auto col = [](long long x, long long y) {
        matrix<Q> m(2, 1);
        m(0, 0) = scalar<Q>(x);
        m(1, 0) = scalar<Q>(y);
        return m;
    };
    std::vector<matrix<Q>> maps(3);
    maps[*p->cover_index(el(p, "a"), el(p, "b"))] = col(2, 1);
    maps[*p->cover_index(el(p, "c"), el(p, "b"))] = col(1, -1);
    maps[*p->cover_index(el(p, "d"), el(p, "b"))] = col(0, 3);
    pmodule<Q> m(p, {1, 2, 1, 1}, maps);
    auto alpha = mult_from_dimh(c, m);
    auto idx = *c.find_label("M{a:1,b:2,c:1,d:1}");
    std::vector<long long> e(c.size(), 0);
    e[idx] = 1;
    EXPECT_EQ(alpha, e);
    // decomposable module with the same dims
    maps[*p->cover_index(el(p, "d"), el(p, "b"))] = col(2, 1);
    pmodule<Q> n(p, {1, 2, 1, 1}, maps);
    EXPECT_FALSE(is_isomorphic(m, n, c));
}

TEST(Catalog, RoundTripAndAdditivity) {
    rng_type rng(17);
    for (const auto& name : template_names()) {
        const auto& c = builtin_catalog<Q>(name);
        for (int t = 0; t < 5; ++t) {
            std::vector<long long> alpha(c.size());
            for (auto& a : alpha) a = static_cast<long long>(rng() % 3);
            auto m = module_from_multiplicities(c, alpha);
            EXPECT_EQ(mult_from_dimh(c, m), alpha) << name;
            for (std::size_t i = 0; i < c.size(); ++i) {
                long long expect = 0;
                for (std::size_t j = 0; j < c.size(); ++j) expect += alpha[j] * c.phi[i][j];
                EXPECT_EQ(static_cast<long long>(hom_dim(c.members[i], m)), expect);
            }
            auto x = random_module<Q>(c.base, rng), y = random_module<Q>(c.base, rng);
            auto ax = mult_from_dimh(c, x), ay = mult_from_dimh(c, y), axy = mult_from_dimh(c, direct_sum(x, y));
            for (std::size_t i = 0; i < c.size(); ++i) EXPECT_EQ(axy[i], ax[i] + ay[i]);
        }
    }
}

TEST(Catalog, IsIsomorphic) {
    const auto& c = builtin_catalog<Q>("X2");
    auto s = direct_sum(simple<Q>(c.base, 0), simple<Q>(c.base, 1));
    EXPECT_TRUE(is_isomorphic(s, s, c));
    EXPECT_FALSE(is_isomorphic(s, sincere_interval<Q>(c.base), c));
}

TEST(Catalog, ValidateAndMutation) {
    const auto& c = builtin_catalog<Q>("X2");
    EXPECT_TRUE(validate_catalog(c, 50).ok());
    auto mutated = remove_member(c, *c.find_label("I{1}"));
    EXPECT_FALSE(check_spanning(mutated, simple<Q>(c.base, 0)).ok);
    EXPECT_FALSE(validate_catalog(mutated, 50).ok());
}

TEST(Catalog, HomDigraph) {
    auto x2 = chain(2);
    EXPECT_TRUE(hom_digraph_is_acyclic<Q>({projective<Q>(x2, 0)}));
    EXPECT_TRUE(hom_digraph_is_acyclic<Q>({projective<Q>(x2, 0), projective<Q>(x2, 1), hook<Q>(x2, 0, 1)}));
    EXPECT_THROW(hom_digraph_is_acyclic<Q>({projective<Q>(x2, 0), projective<Q>(x2, 0)}), DuplicateModule);
    auto s = simple<Q>(x2, 0);
    EXPECT_THROW(hom_digraph_is_acyclic<Q>({direct_sum(s, s)}), NotBrick);
}

TEST(Catalog, CorruptCatalogIsRejected) {
    auto j = parse_json_text(R"({"name":"bad","poset":{"elements":["1","2"],"relations":[["1","2"]]},
        "members":[{"module":{"interval":["1","2"]}},{"module":{"interval":["1","2"]}}]})", "inline");
    EXPECT_THROW(catalog_from_json<Q>(j), CatalogError);
}
