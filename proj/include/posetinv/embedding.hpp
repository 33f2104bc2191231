#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "poset.hpp"

namespace posetinv {

// Order-embedding f: X -> P, stored as map[x] = f(x).
struct order_embedding {
    poset_ptr source;
    poset_ptr target;
    std::vector<std::size_t> map;

    std::size_t operator()(std::size_t x) const { return map[x]; }

    subset image() const { return subset::of(target->size(), map); }

    std::string describe() const {
        std::string out;
        for (std::size_t x = 0; x < map.size(); ++x) {
            if (x) out += " ";
            out += source->element(x) + "->" + target->element(map[x]);
        }
        return out;
    }

    friend bool operator==(const order_embedding& a, const order_embedding& b) {
        return same_poset(a.source, b.source) && same_poset(a.target, b.target) && a.map == b.map;
    }
};

inline bool is_order_embedding(const poset& x, const poset& p, const std::vector<std::size_t>& map) {
    if (map.size() != x.size()) return false;
    for (std::size_t a = 0; a < x.size(); ++a) {
        if (map[a] >= p.size()) return false;
        for (std::size_t b = 0; b < x.size(); ++b)
            if (x.leq(a, b) != p.leq(map[a], map[b])) return false;
    }
    return true;
}

inline order_embedding make_embedding(poset_ptr x, poset_ptr p, std::vector<std::size_t> map) {
    if (!is_order_embedding(*x, *p, map)) throw OrderViolation("map is not an order-embedding");
    return order_embedding{std::move(x), std::move(p), std::move(map)};
}

inline order_embedding identity_embedding(const poset_ptr& p) {
    std::vector<std::size_t> map(p->size());
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
    return order_embedding{p, p, std::move(map)};
}

inline order_embedding inclusion(const poset_ptr& p, const subset& s) {
    return order_embedding{induced_subposet(*p, s), p, s.members()};
}

namespace detail {

// Backtracking over injections with degree pruning; visit(map) for every embedding.
inline void search_embeddings(const poset& x, const poset& p,
                              const std::function<void(const std::vector<std::size_t>&)>& visit) {
    const std::size_t n = x.size();
    if (n > p.size()) return;
    auto degrees = [](const poset& q, std::size_t a) {
        std::size_t up = 0, down = 0;
        for (std::size_t b = 0; b < q.size(); ++b) {
            if (q.less(a, b)) ++up;
            if (q.less(b, a)) ++down;
        }
        return std::pair{up, down};
    };
    std::vector<std::pair<std::size_t, std::size_t>> dx(n), dp(p.size());
    for (std::size_t a = 0; a < n; ++a) dx[a] = degrees(x, a);
    for (std::size_t a = 0; a < p.size(); ++a) dp[a] = degrees(p, a);
    const auto& order = x.linear_extension();
    std::vector<std::size_t> map(n, 0);
    std::vector<bool> used(p.size(), false);
    std::function<void(std::size_t)> rec = [&](std::size_t depth) {
        if (depth == n) {
            visit(map);
            return;
        }
        const std::size_t a = order[depth];
        for (std::size_t c = 0; c < p.size(); ++c) {
            if (used[c] || dp[c].first < dx[a].first || dp[c].second < dx[a].second) continue;
            bool ok = true;
            for (std::size_t k = 0; k < depth && ok; ++k) {
                const std::size_t b = order[k];
                ok = x.leq(b, a) == p.leq(map[b], c) && x.leq(a, b) == p.leq(c, map[b]);
            }
            if (!ok) continue;
            map[a] = c;
            used[c] = true;
            rec(depth + 1);
            used[c] = false;
        }
    };
    rec(0);
}

}  // namespace detail

// All order-automorphisms of X as permutations sigma (sigma[x] = image of x).
inline std::vector<std::vector<std::size_t>> poset_automorphisms(const poset& x) {
    std::vector<std::vector<std::size_t>> out;
    detail::search_embeddings(x, x, [&](const std::vector<std::size_t>& m) { out.push_back(m); });
    std::sort(out.begin(), out.end());
    return out;
}

// Lexicographically least f o sigma over sigma in Aut(X).
inline std::vector<std::size_t> canonical_map(const std::vector<std::size_t>& map,
                                              const std::vector<std::vector<std::size_t>>& automorphisms) {
    std::vector<std::size_t> best = map;
    std::vector<std::size_t> cand(map.size());
    for (const auto& sigma : automorphisms) {
        for (std::size_t a = 0; a < map.size(); ++a) cand[a] = map[sigma[a]];
        if (cand < best) best = cand;
    }
    return best;
}

inline order_embedding canonical(const order_embedding& f) {
    return order_embedding{f.source, f.target, canonical_map(f.map, poset_automorphisms(*f.source))};
}

// One canonical representative per Aut(X)-orbit, sorted by map.
inline std::vector<order_embedding> enumerate_embeddings(const poset_ptr& x, const poset_ptr& p) {
    auto autos = poset_automorphisms(*x);
    std::vector<std::vector<std::size_t>> maps;
    detail::search_embeddings(*x, *p, [&](const std::vector<std::size_t>& m) {
        if (canonical_map(m, autos) == m) maps.push_back(m);
    });
    std::sort(maps.begin(), maps.end());
    std::vector<order_embedding> out;
    out.reserve(maps.size());
    for (auto& m : maps) out.push_back(order_embedding{x, p, std::move(m)});
    return out;
}

// Same map between the opposite posets.
inline order_embedding opposite(const order_embedding& f, poset_ptr source_op, poset_ptr target_op) {
    return order_embedding{std::move(source_op), std::move(target_op), f.map};
}

// True if every pair a<b of P lies in the image of some embedding.
inline bool covers_all_pairs(const poset& p, const std::vector<order_embedding>& e) {
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = 0; b < p.size(); ++b) {
            if (!p.less(a, b)) continue;
            bool hit = std::any_of(e.begin(), e.end(), [&](const order_embedding& f) {
                auto img = f.image();
                return img.contains(a) && img.contains(b);
            });
            if (!hit) return false;
        }
    return true;
}

inline bool covers_all_elements(const poset& p, const std::vector<order_embedding>& e) {
    subset u(p.size());
    for (const auto& f : e)
        for (auto y : f.map) u.insert(y);
    return u.size() == p.size();
}

}  // namespace posetinv
