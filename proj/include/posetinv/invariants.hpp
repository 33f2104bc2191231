#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "catalog.hpp"
#include "embedding.hpp"
#include "hom.hpp"
#include "invariant_vector.hpp"
#include "module.hpp"
#include "parallel.hpp"

namespace posetinv {

inline std::vector<std::string> dim_keys(const poset& p) {
    std::vector<std::string> keys;
    for (const auto& e : p.elements()) keys.push_back("dim:" + e);
    return keys;
}

// Pairs a <= b ordered by (a, b) index.
inline std::vector<std::pair<std::size_t, std::size_t>> relation_pairs(const poset& p) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = 0; b < p.size(); ++b)
            if (p.leq(a, b)) out.emplace_back(a, b);
    return out;
}

inline std::string rank_key(const poset& p, std::size_t a, std::size_t b) { return "rk:" + p.element(a) + "<=" + p.element(b); }

inline std::vector<std::string> rank_keys(const poset& p) {
    std::vector<std::string> keys;
    for (auto [a, b] : relation_pairs(p)) keys.push_back(rank_key(p, a, b));
    return keys;
}

template <class K>
invariant_vector dim_invariant(const pmodule<K>& m) {
    std::vector<long long> v;
    for (auto d : m.dims()) v.push_back(static_cast<long long>(d));
    return invariant_vector(dim_keys(m.base()), std::move(v));
}

template <class K>
invariant_vector rank_invariant(const pmodule<K>& m) {
    std::vector<long long> v;
    for (auto [a, b] : relation_pairs(m.base())) v.push_back(static_cast<long long>(rank_pair(m, a, b)));
    return invariant_vector(rank_keys(m.base()), std::move(v));
}

inline std::string mult_key(std::size_t f, std::size_t u) { return "mult:f#" + std::to_string(f) + ":U#" + std::to_string(u); }

inline std::vector<std::string> mult_keys(std::size_t embeddings, std::size_t members) {
    std::vector<std::string> keys;
    for (std::size_t f = 0; f < embeddings; ++f)
        for (std::size_t u = 0; u < members; ++u) keys.push_back(mult_key(f, u));
    return keys;
}

namespace detail {

template <class K, class Fn>
invariant_vector per_embedding(const std::vector<order_embedding>& e, const ind_catalog<K>& c, const pmodule<K>& m, Fn&& fn) {
    for (const auto& f : e) {
        if (!same_poset(f.source, c.base)) throw PosetMismatch("embedding source is not the catalog's template");
        if (!same_poset(f.target, m.base_ptr())) throw PosetMismatch("embedding target is not the module's poset");
    }
    auto blocks = parallel_map<std::vector<long long>>(e.size(), [&](std::size_t i) { return fn(c, restrict(e[i], m)); });
    std::vector<long long> v;
    for (const auto& b : blocks) v.insert(v.end(), b.begin(), b.end());
    return invariant_vector(mult_keys(e.size(), c.size()), std::move(v));
}

}  // namespace detail

// (f, U) -> mult(U, f*M)
template <class K>
invariant_vector mult_inv(const std::vector<order_embedding>& e, const ind_catalog<K>& c, const pmodule<K>& m) {
    return detail::per_embedding(e, c, m, [](const ind_catalog<K>& cc, const pmodule<K>& r) { return mult_from_dimh(cc, r); });
}

// (f, U) -> dim Hom(U, f*M)
template <class K>
invariant_vector dimh_inv(const std::vector<order_embedding>& e, const ind_catalog<K>& c, const pmodule<K>& m) {
    return detail::per_embedding(e, c, m, [](const ind_catalog<K>& cc, const pmodule<K>& r) { return dimh_profile(cc, r); });
}

// Multiplicity of a brick U as a summand of N: rank of the pairing Hom(U,N) x Hom(N,U) -> End(U) = k.
template <class K>
std::size_t brick_multiplicity(const pmodule<K>& u, const pmodule<K>& n) {
    if (u.is_zero()) throw NotBrick("zero module is not a brick");
    auto into = hom_basis(u, n);
    auto back = hom_basis(n, u);
    if (into.empty() || back.empty()) return 0;
    std::size_t x = 0;
    while (u.dim(x) == 0) ++x;
    matrix<K> g(into.size(), back.size());
    for (std::size_t i = 0; i < into.size(); ++i)
        for (std::size_t j = 0; j < back.size(); ++j) {
            matrix<K> c = back[j].components[x] * into[i].components[x];
            g(i, j) = c(0, 0);
        }
    return rank(g);
}

struct family_member {
    poset_ptr source;
    std::vector<order_embedding> embeddings;
    std::string catalog;  // builtin catalog over source, or empty
};

using embedding_family = std::vector<family_member>;

inline std::size_t family_size(const embedding_family& f) {
    std::size_t n = 0;
    for (const auto& m : f) n += m.embeddings.size();
    return n;
}

inline std::string family_key(std::size_t k) { return "fam:f#" + std::to_string(k); }

inline std::vector<std::string> family_keys(const embedding_family& f) {
    std::vector<std::string> keys;
    for (std::size_t k = 0; k < family_size(f); ++k) keys.push_back(family_key(k));
    return keys;
}

// All embeddings in key order.
inline std::vector<order_embedding> family_embeddings(const embedding_family& f) {
    std::vector<order_embedding> out;
    for (const auto& m : f) out.insert(out.end(), m.embeddings.begin(), m.embeddings.end());
    return out;
}

inline subset image_of(const order_embedding& f) {
    subset s(f.target->size());
    for (auto y : f.map) s.insert(y);
    return s;
}

inline subset hull_of_image(const order_embedding& f) { return convex_hull(*f.target, image_of(f)); }

// f -> mult(I_{X_i}, f*M)
template <class K>
invariant_vector family_mult(const embedding_family& fam, const pmodule<K>& m) {
    std::vector<std::function<long long()>> jobs;
    for (const auto& mem : fam) {
        if (!is_connected(*mem.source)) throw NotConnected("family poset " + describe(*mem.source, subset::full(mem.source->size())) + " is not connected");
        const ind_catalog<K>* cat = nullptr;
        std::size_t idx = 0;
        if (!mem.catalog.empty()) {
            cat = &builtin_catalog<K>(mem.catalog);
            if (!same_poset(cat->base, mem.source)) throw PosetMismatch("family member does not use the catalog's template poset");
            idx = *cat->sincere_index();
        }
        auto sincere = sincere_interval<K>(mem.source);
        for (const auto& f : mem.embeddings) {
            if (!same_poset(f.target, m.base_ptr())) throw PosetMismatch("family embedding target is not the module's poset");
            jobs.push_back([&m, f, cat, idx, sincere]() -> long long {
                auto r = restrict(f, m);
                if (cat) return mult_from_dimh(*cat, r)[idx];
                return static_cast<long long>(brick_multiplicity(sincere, r));
            });
        }
    }
    auto v = parallel_map<long long>(jobs.size(), [&](std::size_t i) { return jobs[i](); });
    return invariant_vector(family_keys(fam), std::move(v));
}

// {X1, X2} with all embeddings; keys biject with relations a <= b.
inline embedding_family rank_family(const poset_ptr& p) {
    embedding_family f;
    for (const char* name : {"X1", "X2"}) {
        auto x = builtin_catalog<rational>(name).base;
        f.push_back({x, enumerate_embeddings(x, p), name});
    }
    return f;
}

// Generalized rank invariant: one inclusion per interval of P.
inline embedding_family interval_family(const poset_ptr& p) {
    embedding_family f;
    for (const auto& s : interval_subsets(*p)) {
        auto inc = inclusion(p, s);
        f.push_back({inc.source, {inc}, ""});
    }
    return f;
}

// Connected subsets whose induced poset has no chain of three elements; grown along comparabilities.
inline std::vector<subset> short_chain_subsets(const poset& p) {
    if (p.size() > max_interval_enumeration)
        throw ShapeMismatch("subset enumeration limited to " + std::to_string(max_interval_enumeration) + " elements");
    auto has_3_chain = [&](const subset& s) {
        auto m = s.members();
        for (auto y : m) {
            bool below = false, above = false;
            for (auto x : m) {
                below = below || p.less(x, y);
                above = above || p.less(y, x);
            }
            if (below && above) return true;
        }
        return false;
    };
    std::set<subset> seen;
    std::vector<subset> frontier;
    for (std::size_t a = 0; a < p.size(); ++a) {
        seen.insert(subset::of(p.size(), {a}));
        frontier.push_back(subset::of(p.size(), {a}));
    }
    while (!frontier.empty()) {
        std::vector<subset> next;
        for (const auto& s : frontier) {
            auto m = s.members();
            for (std::size_t y = 0; y < p.size(); ++y) {
                if (s.contains(y)) continue;
                if (!std::any_of(m.begin(), m.end(), [&](std::size_t x) { return p.comparable(x, y); })) continue;
                subset t = s;
                t.insert(y);
                if (has_3_chain(t) || !seen.insert(t).second) continue;
                next.push_back(t);
            }
        }
        frontier = std::move(next);
    }
    std::vector<subset> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const subset& a, const subset& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return b < a;
    });
    return out;
}

// Connected posets without 3-chains and all their embeddings; one key per image subset.
inline embedding_family short_chain_family(const poset_ptr& p) {
    embedding_family f;
    for (const auto& s : short_chain_subsets(*p)) {
        auto inc = inclusion(p, s);
        f.push_back({inc.source, {inc}, ""});
    }
    return f;
}

inline void require_short_chains(const embedding_family& fam) {
    for (const auto& m : fam)
        if (longest_chain(*m.source) >= 3)
            throw ChainLengthError("family poset " + describe(*m.source, subset::full(m.source->size())) + " contains a chain of length 3");
}

// Rank of the lattice spanned by the invariant's values on the given modules.
template <class K, class Fn>
std::size_t image_rank(Fn&& invariant, const std::vector<pmodule<K>>& modules) {
    std::vector<std::vector<long long>> rows;
    for (const auto& m : modules) rows.push_back(invariant(m).values());
    return integer_lattice_rank(rows);
}

inline invariant_vector transport(const std::vector<std::vector<long long>>& phi, const invariant_vector& v, std::vector<std::string> new_keys) {
    if (phi.size() != new_keys.size()) throw ShapeMismatch("transport: matrix rows differ from the new key count");
    std::vector<long long> out(phi.size(), 0);
    for (std::size_t i = 0; i < phi.size(); ++i) {
        if (phi[i].size() != v.size()) throw ShapeMismatch("transport: matrix columns differ from the vector length");
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += phi[i][j] * v[j];
    }
    return invariant_vector(std::move(new_keys), std::move(out));
}

// Block-diagonal Phi (catalog Hom matrix) applied per embedding: mult -> dimh.
template <class K>
invariant_vector mult_to_dimh(const ind_catalog<K>& c, const invariant_vector& mult) {
    const std::size_t n = c.size();
    if (n == 0 || mult.size() % n != 0) throw ShapeMismatch("mult vector does not match the catalog size");
    std::vector<long long> out(mult.size(), 0);
    for (std::size_t b = 0; b < mult.size() / n; ++b)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) out[b * n + i] += c.phi[i][j] * mult[b * n + j];
    return invariant_vector(mult.keys(), std::move(out));
}

}  // namespace posetinv
