#pragma once

#include <string>
#include <vector>

#include "catalog.hpp"
#include "invariants.hpp"
#include "kan.hpp"
#include "parallel.hpp"

namespace posetinv {

template <class K>
struct short_exact_sequence {
    module_morphism<K> i;  // A -> B
    module_morphism<K> p;  // B -> C
    const pmodule<K>& a() const { return i.source; }
    const pmodule<K>& b() const { return i.target; }
    const pmodule<K>& c() const { return p.target; }
};

template <class K>
short_exact_sequence<K> ses_validate(const module_morphism<K>& i, const module_morphism<K>& p) {
    auto ii = make_morphism(i.source, i.target, i.components);
    auto pp = make_morphism(p.source, p.target, p.components);
    if (!(ii.target == pp.source)) throw NotExact("the middle terms differ");
    const poset& q = ii.target.base();
    for (std::size_t x = 0; x < q.size(); ++x) {
        const auto& ix = ii.components[x];
        const auto& px = pp.components[x];
        if (rank(ix) != ix.cols()) throw NotExact("A -> B is not injective at " + q.element(x));
        if (rank(px) != px.rows()) throw NotExact("B -> C is not surjective at " + q.element(x));
        if (!(px * ix).is_zero() || ix.cols() + px.rows() != ix.rows())
            throw NotExact("image and kernel differ at " + q.element(x));
    }
    return {std::move(ii), std::move(pp)};
}

// 0 -> A -> A + C -> C -> 0
template <class K>
short_exact_sequence<K> split_sequence(const pmodule<K>& a, const pmodule<K>& c) {
    auto b = direct_sum(a, c);
    std::vector<matrix<K>> ic, pc;
    for (std::size_t x = 0; x < a.base().size(); ++x) {
        matrix<K> in(b.dim(x), a.dim(x)), out(c.dim(x), b.dim(x));
        for (std::size_t k = 0; k < a.dim(x); ++k) in(k, k) = K(1);
        for (std::size_t k = 0; k < c.dim(x); ++k) out(k, a.dim(x) + k) = K(1);
        ic.push_back(std::move(in));
        pc.push_back(std::move(out));
    }
    return ses_validate(module_morphism<K>{a, b, std::move(ic)}, module_morphism<K>{b, c, std::move(pc)});
}

template <class K>
short_exact_sequence<K> direct_sum(const short_exact_sequence<K>& s, const short_exact_sequence<K>& t) {
    auto sum = [](const module_morphism<K>& f, const module_morphism<K>& g) {
        std::vector<matrix<K>> comps;
        for (std::size_t x = 0; x < f.components.size(); ++x) comps.push_back(block_diagonal(f.components[x], g.components[x]));
        return module_morphism<K>{direct_sum(f.source, g.source), direct_sum(f.target, g.target), std::move(comps)};
    };
    return ses_validate(sum(s.i, t.i), sum(s.p, t.p));
}

// 0 -> Im(v) -> B -> B / Im(v) -> 0 for the submodule generated by v in B_x.
template <class K>
short_exact_sequence<K> sequence_from_generator(const pmodule<K>& b, std::size_t x, const std::vector<K>& v) {
    auto free = free_module<K>(b.base_ptr(), {x});
    auto gen = detail::generator_map(b, std::vector<generator<K>>{{x, v}}, free);
    auto im = image_module(gen);
    auto ck = cokernel_module(im.map);
    return ses_validate(im.map, ck.map);
}

template <class K>
short_exact_sequence<K> restrict(const order_embedding& f, const short_exact_sequence<K>& s) {
    return {restrict(f, s.i), restrict(f, s.p)};
}

// B ~ A + C, detected by Hom profiles against the catalog.
template <class K>
bool splits(const short_exact_sequence<K>& s, const ind_catalog<K>& c) {
    auto ha = dimh_profile(c, s.a()), hb = dimh_profile(c, s.b()), hc = dimh_profile(c, s.c());
    for (std::size_t k = 0; k < ha.size(); ++k)
        if (hb[k] != ha[k] + hc[k]) return false;
    return true;
}

template <class K>
bool is_admissible(const short_exact_sequence<K>& s, const std::vector<order_embedding>& e, const ind_catalog<K>& c) {
    for (const auto& f : e)
        if (!splits(restrict(f, s), c)) return false;
    return true;
}

// Hom(U, -) is exact on s.
template <class K>
bool hom_exact_on(const pmodule<K>& u, const short_exact_sequence<K>& s) {
    return hom_dim(u, s.b()) == hom_dim(u, s.a()) + hom_dim(u, s.c());
}

template <class K>
struct relative_projective {
    pmodule<K> module;
    std::size_t embedding;  // index into E
    std::size_t member;     // index into the catalog
};

inline void require_coverage(const std::vector<order_embedding>& e, const poset& p) {
    subset covered(p.size());
    for (const auto& f : e)
        for (auto y : f.map) covered.insert(y);
    if (covered.size() != p.size()) {
        std::string missing;
        for (std::size_t y = 0; y < p.size(); ++y)
            if (!covered.contains(y)) missing += (missing.empty() ? "" : ",") + p.element(y);
        throw CoverageError("embeddings do not cover " + missing);
    }
}

// f_!U over E x Ind X, one representative per isomorphism class (first occurrence in (f, U) order).
// Candidates are compared by dims, then rank invariants, then an explicit isomorphism search.
template <class K>
std::vector<relative_projective<K>> relative_projectives(const std::vector<order_embedding>& e, const ind_catalog<K>& c,
                                                         const poset_ptr& p) {
    for (const auto& f : e) {
        if (!same_poset(f.source, c.base)) throw PosetMismatch("embedding source is not the catalog's template");
        if (!same_poset(f.target, p)) throw PosetMismatch("embedding target differs from the poset");
    }
    require_coverage(e, *p);
    const std::size_t n = c.size();
    auto modules = parallel_map<pmodule<K>>(e.size() * n, [&](std::size_t k) { return induce(e[k / n], c.members[k % n]); });
    std::vector<relative_projective<K>> out;
    std::vector<invariant_vector> ranks;
    for (std::size_t k = 0; k < modules.size(); ++k) {
        const auto& m = modules[k];
        auto rk = rank_invariant(m);
        bool dup = false;
        for (std::size_t j = 0; j < out.size() && !dup; ++j)
            dup = out[j].module.dims() == m.dims() && ranks[j] == rk && find_isomorphism(out[j].module, m).has_value();
        if (dup) continue;
        out.push_back({m, k / n, k % n});
        ranks.push_back(std::move(rk));
    }
    return out;
}

}  // namespace posetinv
