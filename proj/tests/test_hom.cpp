#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace test_support;

TEST(Hom, Examples) {
    auto x2 = chain(2);
    auto i12 = sincere_interval<Q>(x2), i1 = simple<Q>(x2, 0), i2 = simple<Q>(x2, 1);
    EXPECT_EQ(hom_dim(i12, i1), 1u);
    EXPECT_EQ(hom_dim(i1, i12), 0u);
    EXPECT_EQ(hom_dim(i2, i12), 1u);
    auto d = diamond();
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) EXPECT_EQ(hom_dim(simple<Q>(d, a), simple<Q>(d, b)), a == b ? 1u : 0u);
}

TEST(Hom, YonedaOnRandomModules) {
    auto g = grid(3, 3);
    rng_type rng(21);
    for (int t = 0; t < 10; ++t) {
        auto m = random_module<Q>(g, rng);
        for (std::size_t a = 0; a < g->size(); ++a) {
            EXPECT_EQ(hom_dim(projective<Q>(g, a), m), m.dim(a));
            EXPECT_EQ(hom_dim(m, injective<Q>(g, a)), m.dim(a));
        }
    }
}

TEST(Hom, BasisElementsAreNaturalAndIndependent) {
    auto d = diamond();
    rng_type rng(8);
    for (int t = 0; t < 20; ++t) {
        auto u = random_module<Q>(d, rng, {2, -2, 2});
        auto m = random_module<Q>(d, rng, {2, -2, 2});
        auto basis = hom_basis(u, m);
        EXPECT_EQ(basis.size(), hom_dim(u, m));
        for (const auto& phi : basis) EXPECT_NO_THROW(make_morphism(phi.source, phi.target, phi.components));
        // flatten and check independence
        std::size_t len = 0;
        for (std::size_t a = 0; a < 4; ++a) len += u.dim(a) * m.dim(a);
        matrix<Q> flat(len, basis.size());
        for (std::size_t k = 0; k < basis.size(); ++k) {
            std::size_t r = 0;
            for (std::size_t a = 0; a < 4; ++a)
                for (std::size_t i = 0; i < m.dim(a); ++i)
                    for (std::size_t j = 0; j < u.dim(a); ++j) flat(r++, k) = basis[k].components[a](i, j);
        }
        EXPECT_EQ(rank(flat), basis.size());
    }
}

TEST(Hom, Additivity) {
    auto g = grid(2, 3);
    rng_type rng(13);
    for (int t = 0; t < 10; ++t) {
        auto u = random_module<Q>(g, rng, {2, -2, 2});
        auto m = random_module<Q>(g, rng, {2, -2, 2});
        auto n = random_module<Q>(g, rng, {2, -2, 2});
        EXPECT_EQ(hom_dim(u, direct_sum(m, n)), hom_dim(u, m) + hom_dim(u, n));
        EXPECT_EQ(hom_dim(direct_sum(m, n), u), hom_dim(m, u) + hom_dim(n, u));
    }
}

TEST(Hom, FindIsomorphism) {
    auto x2 = chain(2);
    auto s = direct_sum(simple<Q>(x2, 0), simple<Q>(x2, 1));
    EXPECT_FALSE(find_isomorphism(s, sincere_interval<Q>(x2)).has_value());
    EXPECT_TRUE(find_isomorphism(s, s).has_value());
}
