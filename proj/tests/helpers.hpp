#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <posetinv/posetinv.hpp>

namespace test_support {

using namespace posetinv;
using Q = rational;

inline poset_ptr make_poset(std::vector<std::string> el, std::vector<std::pair<std::string, std::string>> rel) {
    return poset::from_relations(std::move(el), rel);
}

inline poset_ptr chain(std::size_t n) {
    std::vector<std::string> el;
    std::vector<std::pair<std::string, std::string>> rel;
    for (std::size_t i = 1; i <= n; ++i) {
        el.push_back(std::to_string(i));
        if (i > 1) rel.emplace_back(std::to_string(i - 1), std::to_string(i));
    }
    return make_poset(el, rel);
}

// a < b, c < d
inline poset_ptr diamond() {
    return make_poset({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
}

// a -> b -> {c, d}
inline poset_ptr y_poset() { return make_poset({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"b", "d"}}); }

inline poset_ptr fork3() { return make_poset({"1", "2", "3"}, {{"1", "2"}, {"1", "3"}}); }
inline poset_ptr cofork3() { return make_poset({"1", "2", "3"}, {{"1", "3"}, {"2", "3"}}); }

inline subset set_of(const poset& p, std::vector<std::string> ids) {
    subset s(p.size());
    for (const auto& id : ids) s.insert(p.index(id));
    return s;
}

inline std::size_t el(const poset_ptr& p, const std::string& id) { return p->index(id); }

// Brute-force automorphisms over all permutations.
inline std::vector<std::vector<std::size_t>> brute_automorphisms(const poset& x) {
    std::vector<std::size_t> perm(x.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::vector<std::vector<std::size_t>> out;
    do {
        bool ok = true;
        for (std::size_t a = 0; a < x.size() && ok; ++a)
            for (std::size_t b = 0; b < x.size() && ok; ++b) ok = x.leq(a, b) == x.leq(perm[a], perm[b]);
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Brute-force count of all order-embeddings (not up to automorphism).
inline std::size_t brute_embedding_count(const poset& x, const poset& p) {
    std::size_t count = 0;
    std::vector<std::size_t> map(x.size());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == x.size()) {
            count += is_order_embedding(x, p, map) ? 1 : 0;
            return;
        }
        for (std::size_t c = 0; c < p.size(); ++c) {
            if (std::find(map.begin(), map.begin() + static_cast<long>(i), c) != map.begin() + static_cast<long>(i)) continue;
            map[i] = c;
            rec(i + 1);
        }
    };
    rec(0);
    return count;
}

}  // namespace test_support
