#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace test_support;

namespace {

// Hom(coker(P1 -> P0), M) = kernel of Hom(P0, M) -> Hom(P1, M), computed through Yoneda.
std::size_t hom_via_presentation(const presentation<Q>& pres, const pmodule<Q>& m) {
    const poset& q = *pres.base;
    std::size_t cols = 0, rows = 0;
    for (auto b : pres.p0) cols += m.dim(b);
    for (auto a : pres.p1) rows += m.dim(a);
    matrix<Q> sys(rows, cols);
    std::size_t r0 = 0;
    for (std::size_t j = 0; j < pres.p1.size(); ++j) {
        const auto a = pres.p1[j];
        std::size_t c0 = 0;
        for (std::size_t i = 0; i < pres.p0.size(); ++i) {
            const auto b = pres.p0[i];
            if (!is_zero(pres.map(i, j)) && q.leq(b, a)) {
                auto mba = m.map(b, a);
                for (std::size_t r = 0; r < mba.rows(); ++r)
                    for (std::size_t c = 0; c < mba.cols(); ++c) sys(r0 + r, c0 + c) += pres.map(i, j) * mba(r, c);
            }
            c0 += m.dim(b);
        }
        r0 += m.dim(a);
    }
    return cols - rank(sys);
}

order_embedding bowtie_into_grid() {
    auto x = make_poset({"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
    auto g = grid(3, 3);
    return make_embedding(x, g, {g->index("2,1"), g->index("1,2"), g->index("3,2"), g->index("2,3")});
}

std::vector<std::size_t> grid_dims(const pmodule<Q>& m) {
    const poset& g = m.base();
    std::vector<std::size_t> out;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) out.push_back(m.dim(g.index(std::to_string(i) + "," + std::to_string(j))));
    return out;
}

}  // namespace

TEST(Kan, PresentationOfProjectiveAndHook) {
    auto g = grid(2, 2);
    auto a = el(g, "1,1"), b = el(g, "2,2");
    auto pp = projective_presentation(projective<Q>(g, a));
    EXPECT_EQ(pp.p0, std::vector<std::size_t>{a});
    EXPECT_TRUE(pp.p1.empty());
    auto ph = projective_presentation(hook<Q>(g, a, b));
    EXPECT_EQ(ph.p0, std::vector<std::size_t>{a});
    EXPECT_EQ(ph.p1, std::vector<std::size_t>{b});
}

TEST(Kan, PresentationOfCoforkSincere) {
    auto x = template_poset("X3_cofork");
    auto p = projective_presentation(sincere_interval<Q>(x));
    EXPECT_EQ(p.p0, (std::vector<std::size_t>{el(x, "1"), el(x, "2")}));
    EXPECT_EQ(p.p1, std::vector<std::size_t>{el(x, "3")});
}

TEST(Kan, PresentationReproducesModuleUpToHom) {
    auto d = diamond();
    rng_type rng(4);
    for (int t = 0; t < 15; ++t) {
        auto u = random_module<Q>(d, rng, {2, -2, 2});
        auto pres = projective_presentation(u);
        EXPECT_TRUE(is_isomorphic(cokernel_of(pres), u, builtin_catalog<Q>("diamond")));
        for (int s = 0; s < 3; ++s) {
            auto m = random_module<Q>(d, rng, {2, -2, 2});
            EXPECT_EQ(hom_via_presentation(pres, m), hom_dim(u, m));
        }
    }
}

TEST(Kan, InduceProjectiveIsProjective) {
    auto x = template_poset("X3_fork");
    auto g = grid(3, 3);
    for (const auto& f : enumerate_embeddings(x, g))
        for (std::size_t a = 0; a < x->size(); ++a) EXPECT_EQ(induce(f, projective<Q>(x, a)), projective<Q>(g, f(a)));
}

TEST(Kan, CoinduceInjectiveIsInjective) {
    auto x = template_poset("X3_cofork");
    auto g = grid(3, 3);
    for (const auto& f : enumerate_embeddings(x, g))
        for (std::size_t a = 0; a < x->size(); ++a) EXPECT_EQ(coinduce(f, injective<Q>(x, a)), injective<Q>(g, f(a)));
}

TEST(Kan, DualizeIsInvolutive) {
    auto g = grid(2, 3);
    auto gop = opposite(*g);
    rng_type rng(9);
    for (int t = 0; t < 10; ++t) {
        auto m = random_module<Q>(g, rng);
        EXPECT_EQ(dualize(dualize(m, gop), g), m);
    }
    for (std::size_t a = 0; a < g->size(); ++a) {
        EXPECT_EQ(dualize(projective<Q>(g, a), gop), injective<Q>(gop, a));
        EXPECT_EQ(dualize(simple<Q>(g, a), gop), simple<Q>(gop, a));
    }
}

TEST(Kan, RestrictionRecoversModuleAndAdjunctionHolds) {
    rng_type rng(31);
    for (const char* name : {"X2", "X3_fork", "X3_cofork"}) {
        auto x = template_poset(name);
        auto g = grid(3, 3);
        auto embs = enumerate_embeddings(x, g);
        for (int t = 0; t < 6; ++t) {
            const auto& f = embs[rng() % embs.size()];
            auto u = random_module<Q>(x, rng, {2, -2, 2});
            auto lo = induce(f, u), hi = coinduce(f, u);
            EXPECT_EQ(restrict(f, lo), u);
            EXPECT_EQ(restrict(f, hi), u);
            auto m = random_module<Q>(g, rng, {2, -2, 2});
            EXPECT_EQ(hom_dim(lo, m), hom_dim(u, restrict(f, m)));
            EXPECT_EQ(hom_dim(m, hi), hom_dim(restrict(f, m), u));
        }
    }
}

TEST(Kan, ThetaIdentityForIdentityEmbedding) {
    auto d = diamond();
    rng_type rng(2);
    auto u = random_module<Q>(d, rng, {2, -2, 2});
    auto th = theta(identity_embedding(d), u);
    for (std::size_t a = 0; a < d->size(); ++a) EXPECT_EQ(th.components[a], matrix<Q>::identity(u.dim(a)));
}

TEST(Kan, ThetaRestrictsToIdentity) {
    auto x = template_poset("X3_fork");
    auto g = grid(3, 3);
    rng_type rng(5);
    auto embs = enumerate_embeddings(x, g);
    for (int t = 0; t < 5; ++t) {
        const auto& f = embs[rng() % embs.size()];
        auto u = random_module<Q>(x, rng, {2, -2, 2});
        auto th = theta(f, u);
        EXPECT_NO_THROW(make_morphism(th.source, th.target, th.components));
        for (std::size_t a = 0; a < x->size(); ++a) EXPECT_EQ(th.components[f(a)], matrix<Q>::identity(u.dim(a)));
    }
}

TEST(Kan, X2Extensions) {
    auto x = template_poset("X2");
    auto g = grid(3, 3);
    auto f = make_embedding(x, g, {el(g, "1,2"), el(g, "2,3")});
    auto i12 = sincere_interval<Q>(x), i1 = simple<Q>(x, 0), i2 = simple<Q>(x, 1);
    EXPECT_EQ(induce(f, i12), projective<Q>(g, f(0)));
    EXPECT_EQ(coinduce(f, i12), injective<Q>(g, f(1)));
    EXPECT_EQ(induce(f, i1), hook<Q>(g, f(0), f(1)));
    EXPECT_EQ(coinduce(f, i1), injective<Q>(g, f(0)));
    EXPECT_EQ(induce(f, i2), projective<Q>(g, f(1)));
    EXPECT_EQ(coinduce(f, i2), cohook<Q>(g, f(0), f(1)));
    EXPECT_EQ(intermediate_extension(f, i12), rectangle<Q>(g, f(0), f(1)));
    EXPECT_EQ(intermediate_extension(f, i1), simple<Q>(g, f(0)));
    EXPECT_EQ(intermediate_extension(f, i2), simple<Q>(g, f(1)));
}

TEST(Kan, BowtieIntoGrid) {
    auto f = bowtie_into_grid();
    auto u = sincere_interval<Q>(f.source);
    auto lo = induce(f, u), hi = coinduce(f, u);
    // rows i = 1..3, columns j = 1..3
    EXPECT_EQ(grid_dims(lo), (std::vector<std::size_t>{0, 1, 1, 1, 2, 1, 1, 1, 1}));
    EXPECT_EQ(grid_dims(hi), (std::vector<std::size_t>{1, 1, 1, 1, 2, 1, 1, 1, 0}));
    EXPECT_EQ(hom_dim(lo, hi), 1u);
    auto th = intermediate_extension(f, u);
    const poset& g = *f.target;
    subset s(g.size());
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            if (i + j >= 3 && i + j <= 5) s.insert(g.index(std::to_string(i) + "," + std::to_string(j)));
    EXPECT_EQ(th, interval_module<Q>(f.target, s));
}

TEST(Kan, IntervalPreservationOnSmallGrid) {
    auto g = grid(2, 3);
    for (const char* name : {"X2", "X3_chain", "X3_fork", "X3_cofork", "diamond"}) {
        auto x = template_poset(name);
        for (const auto& f : enumerate_embeddings(x, g))
            for (const auto& s : interval_subsets(*x)) {
                subset img(g->size());
                for (auto a : s.members()) img.insert(f(a));
                EXPECT_EQ(intermediate_extension(f, interval_module<Q>(x, s)), interval_module<Q>(g, convex_hull(*g, img)))
                    << name << " " << f.describe();
            }
    }
}

TEST(Kan, IntervalPreservationOnGrid4x4) {
    auto g = grid(4, 4);
    for (const auto& name : template_names()) {
        auto x = template_poset(name);
        for (const auto& f : enumerate_embeddings(x, g))
            for (const auto& s : interval_subsets(*x)) {
                subset img(g->size());
                for (auto a : s.members()) img.insert(f(a));
                ASSERT_EQ(intermediate_extension(f, interval_module<Q>(x, s)), interval_module<Q>(g, convex_hull(*g, img)))
                    << name << " " << f.describe();
            }
    }
}
