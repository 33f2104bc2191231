#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hom.hpp"
#include "json_io.hpp"
#include "parallel.hpp"
#include "random.hpp"
#include "templates.hpp"

#if __has_include(<posetinv/catalog_data.hpp>)
#include <posetinv/catalog_data.hpp>
#define POSETINV_HAS_EMBEDDED_CATALOGS 1
#endif

namespace posetinv {

// Complete list of indecomposables of a representation-finite template poset,
// ordered so that phi[i][j] = dim Hom(U_i, U_j) is upper-unitriangular.
template <class K>
struct ind_catalog {
    std::string name;
    poset_ptr base;
    std::vector<std::string> labels;
    std::vector<pmodule<K>> members;
    std::vector<std::vector<long long>> phi;
    bool triangular = false;

    std::size_t size() const { return members.size(); }

    std::optional<std::size_t> find_label(const std::string& label) const {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == label) return i;
        return std::nullopt;
    }

    // Index of the sincere interval module, if present.
    std::optional<std::size_t> sincere_index() const {
        if (!is_connected(*base)) return std::nullopt;
        auto s = sincere_interval<K>(base);
        for (std::size_t i = 0; i < members.size(); ++i)
            if (members[i] == s) return i;
        return std::nullopt;
    }

    // Index of the interval module on S, if present.
    std::optional<std::size_t> interval_index(const subset& s) const {
        auto m = indicator_module<K>(base, s);
        for (std::size_t i = 0; i < members.size(); ++i)
            if (members[i] == m) return i;
        return std::nullopt;
    }
};

template <class K>
std::vector<std::vector<long long>> hom_matrix(const std::vector<pmodule<K>>& ms) {
    std::vector<std::vector<long long>> phi(ms.size(), std::vector<long long>(ms.size(), 0));
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = 0; j < ms.size(); ++j) phi[i][j] = static_cast<long long>(hom_dim(ms[i], ms[j]));
    return phi;
}

inline bool is_upper_unitriangular(const std::vector<std::vector<long long>>& phi) {
    for (std::size_t i = 0; i < phi.size(); ++i) {
        if (phi[i][i] != 1) return false;
        for (std::size_t j = 0; j < i; ++j)
            if (phi[i][j] != 0) return false;
    }
    return true;
}

// Stable topological order of the digraph i -> j when adj[i][j] != 0 (i != j); nullopt on a cycle.
inline std::optional<std::vector<std::size_t>> topological_order(const std::vector<std::vector<long long>>& adj) {
    const std::size_t n = adj.size();
    std::vector<std::size_t> indeg(n, 0), out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && adj[i][j]) ++indeg[j];
    std::vector<bool> done(n, false);
    while (out.size() < n) {
        std::size_t pick = n;
        for (std::size_t i = 0; i < n && pick == n; ++i)
            if (!done[i] && indeg[i] == 0) pick = i;
        if (pick == n) return std::nullopt;
        done[pick] = true;
        out.push_back(pick);
        for (std::size_t j = 0; j < n; ++j)
            if (j != pick && adj[pick][j]) --indeg[j];
    }
    return out;
}

// Computes phi; reorders along the Hom digraph when the declared order is not triangular.
template <class K>
ind_catalog<K> make_catalog(std::string name, poset_ptr base, std::vector<std::string> labels, std::vector<pmodule<K>> members) {
    ind_catalog<K> c;
    c.name = std::move(name);
    c.base = std::move(base);
    c.phi = hom_matrix(members);
    if (!is_upper_unitriangular(c.phi)) {
        bool bricks = true;
        for (std::size_t i = 0; i < members.size(); ++i) bricks = bricks && c.phi[i][i] == 1;
        auto order = bricks ? topological_order(c.phi) : std::nullopt;
        if (order) {
            std::vector<std::string> l;
            std::vector<pmodule<K>> m;
            for (auto i : *order) {
                l.push_back(labels[i]);
                m.push_back(members[i]);
            }
            labels = std::move(l);
            members = std::move(m);
            c.phi = hom_matrix(members);
        }
    }
    c.labels = std::move(labels);
    c.members = std::move(members);
    c.triangular = is_upper_unitriangular(c.phi);
    return c;
}

template <class K>
ind_catalog<K> catalog_from_json(const json& j) {
    if (!j.is_object() || !j.contains("poset") || !j.contains("members")) throw format_error("catalog: expected {name, poset, members}");
    const std::string name = j.value("name", std::string("catalog"));
    poset_ptr base = parse_poset(j["poset"]);
    std::vector<std::string> labels;
    std::vector<pmodule<K>> members;
    for (const auto& m : j["members"]) {
        if (!m.contains("module")) throw format_error("catalog member without 'module'");
        members.push_back(parse_module<K>(m["module"], base));
        labels.push_back(m.value("label", "U#" + std::to_string(labels.size())));
    }
    auto c = make_catalog<K>(name, base, std::move(labels), std::move(members));
    if (!c.triangular) throw CatalogError("catalog '" + name + "': Hom matrix admits no unitriangular order");
    if (j.contains("phi")) {
        auto declared = j["phi"].get<std::vector<std::vector<long long>>>();
        if (declared != c.phi) throw CatalogError("catalog '" + name + "': declared Hom matrix disagrees with the recomputed one");
    }
    return c;
}

template <class K>
ind_catalog<K> remove_member(const ind_catalog<K>& c, std::size_t index) {
    auto labels = c.labels;
    auto members = c.members;
    labels.erase(labels.begin() + static_cast<long>(index));
    members.erase(members.begin() + static_cast<long>(index));
    return make_catalog<K>(c.name + "-" + c.labels[index], c.base, std::move(labels), std::move(members));
}

#ifdef POSETINV_HAS_EMBEDDED_CATALOGS
template <class K>
const ind_catalog<K>& builtin_catalog(const std::string& name) {
    static std::mutex mu;
    static std::map<std::string, std::unique_ptr<ind_catalog<K>>> cache;
    const std::string key = canonical_template_name(name);
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
    for (const auto& [n, text] : embedded_catalog_sources())
        if (n == key) {
            auto c = std::make_unique<ind_catalog<K>>(catalog_from_json<K>(parse_json_text(text, "catalog " + n)));
            return *cache.emplace(key, std::move(c)).first->second;
        }
    throw UnknownCatalog("'" + name + "'");
}

inline poset_ptr template_poset(const std::string& name) { return builtin_catalog<rational>(name).base; }
#endif

template <class K>
std::vector<long long> dimh_profile(const ind_catalog<K>& c, const pmodule<K>& m) {
    if (!same_poset(c.base, m.base_ptr())) throw PosetMismatch("module is not over the catalog's template");
    std::vector<long long> h(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) h[i] = static_cast<long long>(hom_dim(c.members[i], m));
    return h;
}

// alpha with phi alpha = profile, by back-substitution.
inline std::vector<long long> unitriangular_solve(const std::vector<std::vector<long long>>& phi, const std::vector<long long>& h) {
    const std::size_t n = h.size();
    std::vector<long long> alpha(n, 0);
    for (std::size_t k = n; k-- > 0;) {
        long long v = h[k];
        for (std::size_t j = k + 1; j < n; ++j) v -= phi[k][j] * alpha[j];
        alpha[k] = v;
    }
    return alpha;
}

template <class K>
std::vector<long long> mult_from_dimh(const ind_catalog<K>& c, const pmodule<K>& m) {
    if (!c.triangular) throw CatalogError("catalog '" + c.name + "' is not unitriangular");
    auto alpha = unitriangular_solve(c.phi, dimh_profile(c, m));
    for (std::size_t i = 0; i < alpha.size(); ++i)
        if (alpha[i] < 0)
            throw NegativeMultiplicity("multiplicity " + std::to_string(alpha[i]) + " for " + c.labels[i] + " in catalog '" + c.name + "'");
    return alpha;
}

template <class K>
bool is_isomorphic(const pmodule<K>& m, const pmodule<K>& n, const ind_catalog<K>& c) {
    return m.dims() == n.dims() && mult_from_dimh(c, m) == mult_from_dimh(c, n);
}

template <class K>
pmodule<K> module_from_multiplicities(const ind_catalog<K>& c, const std::vector<long long>& alpha) {
    pmodule<K> acc = zero_module<K>(c.base);
    for (std::size_t i = 0; i < alpha.size(); ++i)
        for (long long t = 0; t < alpha[i]; ++t) acc = direct_sum(acc, c.members[i]);
    return acc;
}

// Checks bricks and pairwise non-isomorphism, then acyclicity of U -> V when Hom(U,V) != 0.
template <class K>
bool hom_digraph_is_acyclic(const std::vector<pmodule<K>>& ms) {
    auto phi = hom_matrix(ms);
    for (std::size_t i = 0; i < ms.size(); ++i)
        if (phi[i][i] != 1) throw NotBrick("member " + std::to_string(i) + " has End of dimension " + std::to_string(phi[i][i]));
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            if (phi[i][j] == 1 && phi[j][i] == 1 && find_isomorphism(ms[i], ms[j]))
                throw DuplicateModule("members " + std::to_string(i) + " and " + std::to_string(j) + " are isomorphic");
    return topological_order(phi).has_value();
}

struct catalog_report {
    std::string name;
    bool bricks = false;
    bool distinct = false;
    bool directed = false;
    bool spanning = false;
    std::size_t trials = 0;
    std::string detail;
    bool ok() const { return bricks && distinct && directed && spanning; }
};

template <class K>
struct trial_outcome {
    bool ok = true;
    std::string detail;
};

// Spanning check on one module: nonnegative multiplicities that reproduce dims and ranks.
template <class K>
trial_outcome<K> check_spanning(const ind_catalog<K>& c, const pmodule<K>& m) {
    std::vector<long long> alpha;
    try {
        alpha = mult_from_dimh(c, m);
    } catch (const NegativeMultiplicity& e) {
        return {false, e.what()};
    }
    const poset& p = *c.base;
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = 0; b < p.size(); ++b) {
            if (!p.leq(a, b)) continue;
            long long expect = 0;
            for (std::size_t i = 0; i < c.size(); ++i)
                if (alpha[i]) expect += alpha[i] * static_cast<long long>(rank(c.members[i].map(a, b)));
            if (expect != static_cast<long long>(rank(m.map(a, b))))
                return {false, "multiplicities do not reproduce rk " + p.element(a) + "<=" + p.element(b)};
        }
    return {};
}

template <class K>
catalog_report validate_catalog(const ind_catalog<K>& c, std::size_t trials, std::uint64_t seed = 1, const random_spec& spec = {}) {
    catalog_report r;
    r.name = c.name;
    r.trials = trials;
    auto phi = hom_matrix(c.members);
    r.bricks = true;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (phi[i][i] != 1) {
            r.bricks = false;
            r.detail = c.labels[i] + " is not a brick";
        }
    r.distinct = true;
    for (std::size_t i = 0; i < c.size() && r.distinct; ++i)
        for (std::size_t j = i + 1; j < c.size() && r.distinct; ++j) {
            bool same = true;
            for (std::size_t k = 0; k < c.size(); ++k) same = same && phi[k][i] == phi[k][j];
            if (same) {
                r.distinct = false;
                r.detail = c.labels[i] + " and " + c.labels[j] + " share a dimh profile";
            }
        }
    r.directed = r.bricks && topological_order(phi).has_value() && c.triangular;
    if (!r.directed) {
        if (r.detail.empty()) r.detail = "Hom digraph has an oriented cycle";
        return r;
    }
    auto seeds = trial_seeds(seed, trials);
    auto outcomes = parallel_map<trial_outcome<K>>(trials, [&](std::size_t t) {
        rng_type rng(seeds[t]);
        return check_spanning(c, random_module<K>(c.base, rng, spec));
    });
    r.spanning = true;
    for (std::size_t t = 0; t < trials; ++t)
        if (!outcomes[t].ok) {
            r.spanning = false;
            r.detail = "trial " + std::to_string(t) + ": " + outcomes[t].detail;
            break;
        }
    return r;
}

}  // namespace posetinv
