#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace posetinv {

class poset;
using poset_ptr = std::shared_ptr<const poset>;

// Finite poset with elements indexed 0..n-1 in declaration order.
class poset {
public:
    using cover = std::pair<std::size_t, std::size_t>;

    static poset_ptr from_relations(std::vector<std::string> elements,
                                    const std::vector<std::pair<std::string, std::string>>& pairs) {
        auto p = std::shared_ptr<poset>(new poset());
        p->elements_ = std::move(elements);
        for (std::size_t i = 0; i < p->elements_.size(); ++i)
            if (!p->index_.emplace(p->elements_[i], i).second)
                throw format_error("duplicate element '" + p->elements_[i] + "'");
        const std::size_t n = p->elements_.size();
        p->leq_.assign(n * n, 0);
        for (std::size_t i = 0; i < n; ++i) p->leq_[i * n + i] = 1;
        for (const auto& [a, b] : pairs) p->leq_[p->index(a) * n + p->index(b)] = 1;
        p->finish();
        return p;
    }

    static poset_ptr from_matrix(std::vector<std::string> elements, std::vector<char> leq) {
        auto p = std::shared_ptr<poset>(new poset());
        p->elements_ = std::move(elements);
        for (std::size_t i = 0; i < p->elements_.size(); ++i)
            if (!p->index_.emplace(p->elements_[i], i).second)
                throw format_error("duplicate element '" + p->elements_[i] + "'");
        p->leq_ = std::move(leq);
        p->finish();
        return p;
    }

    std::size_t size() const { return elements_.size(); }
    const std::vector<std::string>& elements() const { return elements_; }
    const std::string& element(std::size_t i) const { return elements_.at(i); }

    std::size_t index(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) throw UnknownElement("'" + id + "'");
        return it->second;
    }
    std::optional<std::size_t> find(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    bool leq(std::size_t a, std::size_t b) const { return leq_[a * size() + b] != 0; }
    bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
    bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }

    const std::vector<cover>& covers() const { return covers_; }
    std::optional<std::size_t> cover_index(std::size_t a, std::size_t b) const {
        auto it = cover_index_.find(a * size() + b);
        if (it == cover_index_.end()) return std::nullopt;
        return it->second;
    }
    // cover indices of a<x (resp. x<a) for the covers a⋖x (resp. x⋖a)
    const std::vector<std::size_t>& upper_covers(std::size_t a) const { return upper_[a]; }
    const std::vector<std::size_t>& lower_covers(std::size_t a) const { return lower_[a]; }

    const std::vector<std::size_t>& linear_extension() const { return linext_; }
    std::size_t position(std::size_t a) const { return position_[a]; }

    std::size_t relation_count() const {
        return static_cast<std::size_t>(std::count(leq_.begin(), leq_.end(), char(1)));
    }

    friend bool operator==(const poset& a, const poset& b) {
        return a.elements_ == b.elements_ && a.leq_ == b.leq_;
    }

    const std::vector<char>& leq_matrix() const { return leq_; }

private:
    poset() = default;

    void finish() {
        const std::size_t n = size();
        if (leq_.size() != n * n) throw ShapeMismatch("order matrix has wrong size");
        for (std::size_t i = 0; i < n; ++i) leq_[i * n + i] = 1;
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                if (leq_[i * n + k])
                    for (std::size_t j = 0; j < n; ++j)
                        if (leq_[k * n + j]) leq_[i * n + j] = 1;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (leq_[i * n + j] && leq_[j * n + i])
                    throw CycleError("'" + elements_[i] + "' and '" + elements_[j] + "' are mutually related");
        upper_.assign(n, {});
        lower_.assign(n, {});
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                if (!less(a, b)) continue;
                bool is_cover = true;
                for (std::size_t c = 0; c < n && is_cover; ++c)
                    if (less(a, c) && less(c, b)) is_cover = false;
                if (!is_cover) continue;
                cover_index_[a * n + b] = covers_.size();
                upper_[a].push_back(covers_.size());
                lower_[b].push_back(covers_.size());
                covers_.emplace_back(a, b);
            }
        // Kahn's algorithm, smallest index first
        std::vector<std::size_t> indeg(n, 0);
        for (const auto& c : covers_) ++indeg[c.second];
        std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
        for (std::size_t i = 0; i < n; ++i)
            if (indeg[i] == 0) ready.push(i);
        position_.assign(n, 0);
        while (!ready.empty()) {
            std::size_t a = ready.top();
            ready.pop();
            position_[a] = linext_.size();
            linext_.push_back(a);
            for (auto ci : upper_[a])
                if (--indeg[covers_[ci].second] == 0) ready.push(covers_[ci].second);
        }
    }

    std::vector<std::string> elements_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<char> leq_;
    std::vector<cover> covers_;
    std::unordered_map<std::size_t, std::size_t> cover_index_;
    std::vector<std::vector<std::size_t>> upper_, lower_;
    std::vector<std::size_t> linext_, position_;
};

inline bool same_poset(const poset_ptr& a, const poset_ptr& b) {
    return a == b || (a && b && *a == *b);
}

inline poset_ptr grid(std::size_t n, std::size_t m) {
    if (n == 0 || m == 0) throw ShapeMismatch("grid dimensions must be positive");
    std::vector<std::string> el;
    std::vector<std::pair<std::string, std::string>> rel;
    auto id = [](std::size_t i, std::size_t j) { return std::to_string(i) + "," + std::to_string(j); };
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= m; ++j) {
            el.push_back(id(i, j));
            if (i < n) rel.emplace_back(id(i, j), id(i + 1, j));
            if (j < m) rel.emplace_back(id(i, j), id(i, j + 1));
        }
    return poset::from_relations(std::move(el), rel);
}

// Grid points (i,j) with i,j >= 1 and i + j <= n + m: an n x m grid with a staircase on top.
inline poset_ptr staircase_grid(std::size_t n, std::size_t m) {
    std::vector<std::string> el;
    std::vector<std::pair<std::string, std::string>> rel;
    const std::size_t s = n + m;
    auto id = [](std::size_t i, std::size_t j) { return std::to_string(i) + "," + std::to_string(j); };
    for (std::size_t i = 1; i < s; ++i)
        for (std::size_t j = 1; i + j <= s; ++j) {
            el.push_back(id(i, j));
            if (i + 1 + j <= s) rel.emplace_back(id(i, j), id(i + 1, j));
            if (i + j + 1 <= s) rel.emplace_back(id(i, j), id(i, j + 1));
        }
    return poset::from_relations(std::move(el), rel);
}

inline poset_ptr opposite(const poset& p) {
    const std::size_t n = p.size();
    std::vector<char> leq(n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) leq[b * n + a] = p.leq(a, b) ? 1 : 0;
    return poset::from_matrix(p.elements(), std::move(leq));
}

// Subset of a poset's elements as a membership mask.
class subset {
public:
    subset() = default;
    explicit subset(std::size_t n) : mask_(n, false) {}
    explicit subset(std::vector<bool> mask) : mask_(std::move(mask)) {}
    static subset of(std::size_t n, const std::vector<std::size_t>& members) {
        subset s(n);
        for (auto m : members) s.insert(m);
        return s;
    }
    static subset full(std::size_t n) { return subset(std::vector<bool>(n, true)); }

    std::size_t universe() const { return mask_.size(); }
    bool contains(std::size_t i) const { return mask_.at(i); }
    void insert(std::size_t i) { mask_.at(i) = true; }
    void erase(std::size_t i) { mask_.at(i) = false; }
    std::size_t size() const { return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), true)); }
    bool empty() const { return size() == 0; }
    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < mask_.size(); ++i)
            if (mask_[i]) out.push_back(i);
        return out;
    }
    bool subset_of(const subset& o) const {
        for (std::size_t i = 0; i < mask_.size(); ++i)
            if (mask_[i] && !o.mask_[i]) return false;
        return true;
    }
    const std::vector<bool>& mask() const { return mask_; }

    friend bool operator==(const subset& a, const subset& b) { return a.mask_ == b.mask_; }
    friend bool operator<(const subset& a, const subset& b) { return a.mask_ < b.mask_; }

private:
    std::vector<bool> mask_;
};

inline std::string describe(const poset& p, const subset& s) {
    std::string out = "{";
    bool first = true;
    for (auto i : s.members()) {
        if (!first) out += ";";
        out += p.element(i);
        first = false;
    }
    return out + "}";
}

inline subset convex_hull(const poset& p, const subset& s) {
    if (s.empty()) throw EmptySubset("convex hull of the empty set");
    subset out(p.size());
    auto m = s.members();
    for (std::size_t x = 0; x < p.size(); ++x) {
        bool above = false, below = false;
        for (auto y : m) {
            above = above || p.leq(y, x);
            below = below || p.leq(x, y);
        }
        if (above && below) out.insert(x);
    }
    return out;
}

inline bool is_convex(const poset& p, const subset& s) {
    return s.empty() || convex_hull(p, s) == s;
}

// Zigzag connectivity inside S: connectivity of the comparability graph restricted to S.
inline bool is_connected(const poset& p, const subset& s) {
    auto m = s.members();
    if (m.empty()) return false;
    std::vector<bool> seen(p.size(), false);
    std::vector<std::size_t> stack{m.front()};
    seen[m.front()] = true;
    std::size_t count = 0;
    while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        ++count;
        for (auto y : m)
            if (!seen[y] && p.comparable(x, y)) {
                seen[y] = true;
                stack.push_back(y);
            }
    }
    return count == m.size();
}

inline bool is_interval(const poset& p, const subset& s) {
    return !s.empty() && is_convex(p, s) && is_connected(p, s);
}

inline bool is_connected(const poset& p) { return is_connected(p, subset::full(p.size())); }

inline subset up_set(const poset& p, std::size_t a) {
    subset s(p.size());
    for (std::size_t x = 0; x < p.size(); ++x)
        if (p.leq(a, x)) s.insert(x);
    return s;
}

inline subset down_set(const poset& p, std::size_t a) {
    subset s(p.size());
    for (std::size_t x = 0; x < p.size(); ++x)
        if (p.leq(x, a)) s.insert(x);
    return s;
}

inline subset closed_interval(const poset& p, std::size_t a, std::size_t b) {
    subset s(p.size());
    for (std::size_t x = 0; x < p.size(); ++x)
        if (p.leq(a, x) && p.leq(x, b)) s.insert(x);
    return s;
}

// [a,b[ = {c | a <= c, c not >= b}
inline subset hook_set(const poset& p, std::size_t a, std::size_t b) {
    subset s(p.size());
    for (std::size_t x = 0; x < p.size(); ++x)
        if (p.leq(a, x) && !p.leq(b, x)) s.insert(x);
    return s;
}

// ]a,b] = {c | c <= b, c not <= a}
inline subset cohook_set(const poset& p, std::size_t a, std::size_t b) {
    subset s(p.size());
    for (std::size_t x = 0; x < p.size(); ++x)
        if (p.leq(x, b) && !p.leq(x, a)) s.insert(x);
    return s;
}

inline constexpr std::size_t max_interval_enumeration = 20;

// All intervals of P, grown from singletons by hull-closed one-element extensions.
inline std::vector<subset> interval_subsets(const poset& p) {
    if (p.size() > max_interval_enumeration)
        throw ShapeMismatch("interval enumeration limited to " + std::to_string(max_interval_enumeration) + " elements");
    std::set<subset> seen;
    std::vector<subset> frontier;
    for (std::size_t a = 0; a < p.size(); ++a) {
        subset s = subset::of(p.size(), {a});
        if (seen.insert(s).second) frontier.push_back(s);
    }
    while (!frontier.empty()) {
        std::vector<subset> next;
        for (const auto& s : frontier) {
            auto m = s.members();
            for (std::size_t y = 0; y < p.size(); ++y) {
                if (s.contains(y)) continue;
                bool adjacent = std::any_of(m.begin(), m.end(), [&](std::size_t x) { return p.comparable(x, y); });
                if (!adjacent) continue;
                subset t = s;
                t.insert(y);
                t = convex_hull(p, t);
                if (seen.insert(t).second) next.push_back(t);
            }
        }
        frontier = std::move(next);
    }
    std::vector<subset> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const subset& a, const subset& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return b < a;  // lexicographically by first member
    });
    return out;
}

// Induced subposet on S, elements in index order.
inline poset_ptr induced_subposet(const poset& p, const subset& s) {
    auto m = s.members();
    std::vector<std::string> el;
    for (auto i : m) el.push_back(p.element(i));
    std::vector<char> leq(m.size() * m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) leq[i * m.size() + j] = p.leq(m[i], m[j]) ? 1 : 0;
    return poset::from_matrix(std::move(el), std::move(leq));
}

// Length (number of elements) of the longest chain.
inline std::size_t longest_chain(const poset& p) {
    std::vector<std::size_t> best(p.size(), 1);
    std::size_t out = p.size() ? 1 : 0;
    for (auto x : p.linear_extension()) {
        for (auto ci : p.lower_covers(x)) best[x] = std::max(best[x], best[p.covers()[ci].first] + 1);
        out = std::max(out, best[x]);
    }
    return out;
}

}  // namespace posetinv
