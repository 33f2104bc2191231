#pragma once

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "catalog.hpp"
#include "invariants.hpp"
#include "kan.hpp"
#include "parallel.hpp"

namespace posetinv {

// "I{...}" for interval modules, otherwise the dimension vector.
template <class K>
std::string module_name(const pmodule<K>& m) {
    if (auto s = interval_support(m)) return "I" + describe(m.base(), *s);
    std::string out = "M{";
    for (std::size_t x = 0; x < m.base().size(); ++x) {
        if (x) out += ";";
        out += m.base().element(x) + ":" + std::to_string(m.dim(x));
    }
    return out + "}";
}

template <class K>
using invariant_fn = std::function<invariant_vector(const pmodule<K>&)>;

// Member i has value 1 at key pivots[i]; every other member nonzero there precedes i in `order`.
template <class K>
struct invariant_basis {
    std::string invariant;
    std::vector<pmodule<K>> members;
    std::vector<std::string> names;
    std::vector<invariant_vector> values;
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> order;
    invariant_fn<K> evaluate;
    invariant_fn<K> verify;  // the invariant the decomposition is meant for, when it differs from evaluate
    std::string verify_name;

    std::size_t size() const { return members.size(); }
    // member j must be solved before member i
    bool precedes(std::size_t j, std::size_t i) const { return j != i && values[j][pivots[i]] != 0; }
};

// above(j, i): j is strictly above i in the partial order that should make the evaluation unitriangular.
template <class K>
invariant_basis<K> make_basis(std::string invariant, std::vector<pmodule<K>> members, invariant_fn<K> evaluate,
                              const std::function<bool(std::size_t, std::size_t)>& above) {
    invariant_basis<K> b;
    b.invariant = std::move(invariant);
    b.members = std::move(members);
    b.evaluate = evaluate;
    const std::size_t n = b.members.size();
    for (const auto& m : b.members) b.names.push_back(module_name(m));
    b.values = parallel_map<invariant_vector>(n, [&](std::size_t i) { return evaluate(b.members[i]); });
    for (std::size_t i = 1; i < n; ++i)
        if (b.values[i].keys() != b.values[0].keys()) throw InternalError("basis members evaluated to different key sets");
    for (std::size_t i = 0; i < n; ++i) {
        std::optional<std::size_t> pivot;
        for (std::size_t k = 0; k < b.values[i].size() && !pivot; ++k) {
            if (b.values[i][k] != 1) continue;
            bool ok = true;
            for (std::size_t j = 0; j < n && ok; ++j)
                if (j != i && b.values[j][k] != 0) ok = above(j, i) && !above(i, j);
            if (ok) pivot = k;
        }
        if (!pivot) throw TriangularityError("no pivot key for basis member " + b.names[i]);
        b.pivots.push_back(*pivot);
    }
    std::vector<std::vector<long long>> adj(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) adj[j][i] = b.precedes(j, i) ? 1 : 0;
    auto order = topological_order(adj);
    if (!order) throw TriangularityError("evaluation matrix of the basis is not triangular");
    b.order = *order;
    return b;
}

template <class K>
bool verify_triangular(const invariant_basis<K>& b) {
    std::vector<std::size_t> pos(b.size());
    for (std::size_t t = 0; t < b.order.size(); ++t) pos[b.order[t]] = t;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b.values[i][b.pivots[i]] != 1) return false;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b.precedes(j, i) && pos[j] > pos[i]) return false;
    }
    return true;
}

// Another linear extension of the solving order, chosen at random.
template <class K>
std::vector<std::size_t> shuffled_order(const invariant_basis<K>& b, rng_type& rng) {
    const std::size_t n = b.size();
    std::vector<std::size_t> indeg(n, 0), ready, out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) indeg[i] += b.precedes(j, i) ? 1 : 0;
    for (std::size_t i = 0; i < n; ++i)
        if (!indeg[i]) ready.push_back(i);
    while (!ready.empty()) {
        std::size_t k = std::uniform_int_distribution<std::size_t>(0, ready.size() - 1)(rng);
        std::size_t j = ready[k];
        ready.erase(ready.begin() + static_cast<long>(k));
        out.push_back(j);
        for (std::size_t i = 0; i < n; ++i)
            if (b.precedes(j, i) && --indeg[i] == 0) ready.push_back(i);
    }
    return out;
}

// Coefficients alpha with sum alpha_j values_j = target, solved member by member from the top down.
template <class K>
std::vector<long long> triangular_solve(const invariant_basis<K>& b, const invariant_vector& target,
                                        const std::vector<std::size_t>* order = nullptr) {
    const auto& ord = order ? *order : b.order;
    if (ord.size() != b.size()) throw ShapeMismatch("solving order does not list every basis member");
    if (b.size() && target.keys() != b.values[0].keys()) throw ShapeMismatch("target keys differ from the basis keys");
    std::vector<long long> alpha(b.size(), 0);
    for (auto i : ord) {
        long long v = target[b.pivots[i]];
        for (std::size_t j = 0; j < b.size(); ++j)
            if (j != i) v -= alpha[j] * b.values[j][b.pivots[i]];
        alpha[i] = v;
    }
    auto rest = target;
    for (std::size_t j = 0; j < b.size(); ++j)
        if (alpha[j]) rest = rest - alpha[j] * b.values[j];
    if (!rest.is_zero()) {
        std::string key;
        for (std::size_t k = 0; k < rest.size(); ++k)
            if (rest[k]) {
                key = rest.keys()[k];
                break;
            }
        throw NotInSpan("invariant is not in the span of the basis (remainder at " + key + ")");
    }
    return alpha;
}

struct signed_decomposition {
    std::vector<std::pair<std::size_t, long long>> positive;
    std::vector<std::pair<std::size_t, long long>> negative;
};

inline invariant_vector combination(const std::vector<invariant_vector>& values, const std::vector<std::pair<std::size_t, long long>>& terms,
                             const std::vector<std::string>& keys) {
    auto acc = invariant_vector::zeros(keys);
    for (auto [j, c] : terms) acc = acc + c * values[j];
    return acc;
}

template <class K>
signed_decomposition signed_barcode(const pmodule<K>& m, const invariant_basis<K>& b) {
    auto target = b.evaluate(m);
    auto alpha = triangular_solve(b, target);
    signed_decomposition d;
    for (std::size_t j = 0; j < alpha.size(); ++j) {
        if (alpha[j] > 0) d.positive.emplace_back(j, alpha[j]);
        if (alpha[j] < 0) d.negative.emplace_back(j, -alpha[j]);
    }
    auto check = [&](const std::vector<invariant_vector>& vals, const invariant_vector& want) {
        auto pos = combination(vals, d.positive, want.keys());
        auto neg = combination(vals, d.negative, want.keys());
        if (!(pos - neg == want)) throw InternalError("signed barcode does not reproduce the invariant");
    };
    check(b.values, target);
    if (b.verify) {
        auto vals = parallel_map<invariant_vector>(b.size(), [&](std::size_t j) { return b.verify(b.members[j]); });
        check(vals, b.verify(m));
    }
    return d;
}

namespace detail {

template <class K>
std::function<bool(std::size_t, std::size_t)> support_order(const std::vector<pmodule<K>>& ms) {
    std::vector<subset> sup;
    for (const auto& m : ms) sup.push_back(support(m));
    return [sup](std::size_t j, std::size_t i) { return sup[i].subset_of(sup[j]) && !(sup[i] == sup[j]); };
}

}  // namespace detail

template <class K>
invariant_basis<K> rectangle_basis(const poset_ptr& p) {
    std::vector<pmodule<K>> ms;
    for (auto [a, b] : relation_pairs(*p)) ms.push_back(rectangle<K>(p, a, b));
    auto order = detail::support_order(ms);
    return make_basis<K>("brk", std::move(ms), [](const pmodule<K>& m) { return rank_invariant(m); }, order);
}

// Projectives and hooks: solved in dim Hom(H, -) coordinates, checked against brk.
template <class K>
invariant_basis<K> hook_basis(const poset_ptr& p) {
    std::vector<pmodule<K>> ms;
    for (std::size_t a = 0; a < p->size(); ++a) ms.push_back(projective<K>(p, a));
    for (auto [a, b] : relation_pairs(*p))
        if (a != b) ms.push_back(hook<K>(p, a, b));
    auto phi = hom_matrix(ms);
    const std::size_t n = ms.size();
    // reach[i][j]: a path of nonzero Homs from i to j
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) reach[i][j] = i != j && phi[i][j] != 0;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) reach[i][j] = reach[i][j] || (reach[i][k] && reach[k][j]);
    std::vector<std::string> keys;
    for (const auto& m : ms) keys.push_back("dimh:" + module_name(m));
    auto shared = std::make_shared<std::vector<pmodule<K>>>(ms);
    invariant_fn<K> eval = [shared, keys](const pmodule<K>& m) {
        std::vector<long long> v;
        for (const auto& h : *shared) v.push_back(static_cast<long long>(hom_dim(h, m)));
        return invariant_vector(keys, std::move(v));
    };
    auto b = make_basis<K>("dimh:hooks", std::move(ms), eval, [reach](std::size_t j, std::size_t i) { return reach[i][j]; });
    b.verify = [](const pmodule<K>& m) { return rank_invariant(m); };
    b.verify_name = "brk";
    return b;
}

// Every a < b lies in the image of some embedding.
inline void require_pair_coverage(const std::vector<order_embedding>& e, const poset& p) {
    for (auto [a, b] : relation_pairs(p)) {
        if (a == b) continue;
        bool hit = false;
        for (const auto& f : e) {
            bool ha = false, hb = false;
            for (auto y : f.map) {
                ha = ha || y == a;
                hb = hb || y == b;
            }
            hit = hit || (ha && hb);
        }
        if (!hit) throw CoverageError("no embedding contains the pair " + p.element(a) + " < " + p.element(b));
    }
}

// Theta_f(U) over E x Ind X, deduplicated; basis for mult^E_{X,P}.
template <class K>
invariant_basis<K> theta_basis(const std::vector<order_embedding>& e, const ind_catalog<K>& c, const poset_ptr& p) {
    require_pair_coverage(e, *p);
    const std::size_t n = c.size();
    auto all = parallel_map<pmodule<K>>(e.size() * n, [&](std::size_t k) { return intermediate_extension(e[k / n], c.members[k % n]); });
    std::vector<pmodule<K>> ms;
    for (const auto& m : all) {
        if (m.is_zero()) continue;
        bool dup = false;
        for (const auto& q : ms) dup = dup || (q.dims() == m.dims() && find_isomorphism(q, m).has_value());
        if (!dup) ms.push_back(m);
    }
    auto order = detail::support_order(ms);
    auto cat = &c;
    auto embs = e;
    return make_basis<K>("mult:" + c.name, std::move(ms), [cat, embs](const pmodule<K>& m) { return mult_inv(embs, *cat, m); }, order);
}

// I_{hull(Im f)} over the family; basis for mult_F when no X_i has a 3-chain.
template <class K>
invariant_basis<K> interval_family_basis(const embedding_family& fam, const poset_ptr& p) {
    require_short_chains(fam);
    std::vector<pmodule<K>> ms;
    std::vector<subset> seen;
    for (const auto& f : family_embeddings(fam)) {
        if (!same_poset(f.target, p)) throw PosetMismatch("family embedding target differs from the poset");
        auto h = hull_of_image(f);
        if (std::find(seen.begin(), seen.end(), h) != seen.end()) continue;
        seen.push_back(h);
        ms.push_back(interval_module<K>(p, h));
    }
    auto order = detail::support_order(ms);
    return make_basis<K>("fam", std::move(ms), [fam](const pmodule<K>& m) { return family_mult(fam, m); }, order);
}

template <class K>
std::string render(const signed_decomposition& d, const invariant_basis<K>& b) {
    std::string out;
    for (auto [j, c] : d.positive) out += "+ " + std::to_string(c) + " x " + b.names[j] + "\n";
    for (auto [j, c] : d.negative) out += "- " + std::to_string(c) + " x " + b.names[j] + "\n";
    if (out.empty()) out = "(zero)\n";
    return out;
}

}  // namespace posetinv
