#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "embedding.hpp"
#include "matrix.hpp"
#include "poset.hpp"

namespace posetinv {

// Persistence module: a space per element and a matrix per cover, validated for path independence.
// Values are cheap handles to immutable shared data.
template <class K>
class pmodule {
public:
    pmodule() = default;

    pmodule(poset_ptr p, std::vector<std::size_t> dims, std::vector<matrix<K>> cover_maps) {
        auto d = std::make_shared<data>();
        d->base = std::move(p);
        d->dims = std::move(dims);
        d->cover_maps = std::move(cover_maps);
        validate(*d);
        d_ = std::move(d);
    }

    const poset_ptr& base_ptr() const { return d_->base; }
    const poset& base() const { return *d_->base; }
    std::size_t dim(std::size_t a) const { return d_->dims[a]; }
    const std::vector<std::size_t>& dims() const { return d_->dims; }
    std::size_t total_dim() const {
        std::size_t t = 0;
        for (auto x : d_->dims) t += x;
        return t;
    }
    bool is_zero() const { return total_dim() == 0; }
    const std::vector<matrix<K>>& cover_maps() const { return d_->cover_maps; }
    const matrix<K>& cover_map(std::size_t ci) const { return d_->cover_maps[ci]; }

    // M_{a->b}; requires a <= b
    const matrix<K>& map(std::size_t a, std::size_t b) const {
        if (!base().leq(a, b))
            throw OrderViolation("structure map " + base().element(a) + " -> " + base().element(b) + " requested for non-related pair");
        return d_->composites[a * base().size() + b];
    }

    friend bool operator==(const pmodule& m, const pmodule& n) {
        return same_poset(m.d_->base, n.d_->base) && m.d_->dims == n.d_->dims && m.d_->cover_maps == n.d_->cover_maps;
    }

private:
    struct data {
        poset_ptr base;
        std::vector<std::size_t> dims;
        std::vector<matrix<K>> cover_maps;
        std::vector<matrix<K>> composites;  // a*n+b for a <= b
    };

    static void validate(data& d) {
        const poset& p = *d.base;
        const std::size_t n = p.size();
        if (d.dims.size() != n) throw ShapeMismatch("dimension vector has " + std::to_string(d.dims.size()) + " entries for " + std::to_string(n) + " elements");
        if (d.cover_maps.size() != p.covers().size()) throw ShapeMismatch("expected " + std::to_string(p.covers().size()) + " cover maps");
        for (std::size_t ci = 0; ci < p.covers().size(); ++ci) {
            auto [a, b] = p.covers()[ci];
            const auto& m = d.cover_maps[ci];
            if (m.rows() != d.dims[b] || m.cols() != d.dims[a])
                throw ShapeMismatch("map " + p.element(a) + "<" + p.element(b) + " has shape " + m.shape() + ", expected " +
                                    std::to_string(d.dims[b]) + "x" + std::to_string(d.dims[a]));
        }
        d.composites.assign(n * n, matrix<K>());
        const auto& order = p.linear_extension();
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const std::size_t a = *it;
            d.composites[a * n + a] = matrix<K>::identity(d.dims[a]);
            for (std::size_t b = 0; b < n; ++b) {
                if (!p.less(a, b)) continue;
                bool have = false;
                std::size_t first_x = 0;
                for (auto ci : p.upper_covers(a)) {
                    const std::size_t x = p.covers()[ci].second;
                    if (!p.leq(x, b)) continue;
                    matrix<K> c = d.composites[x * n + b] * d.cover_maps[ci];
                    if (!have) {
                        d.composites[a * n + b] = std::move(c);
                        first_x = x;
                        have = true;
                    } else if (!(c == d.composites[a * n + b])) {
                        throw CommutativityViolation("paths " + p.element(a) + "<" + p.element(first_x) + "<=" + p.element(b) + " and " +
                                                     p.element(a) + "<" + p.element(x) + "<=" + p.element(b) + " disagree");
                    }
                }
            }
        }
    }

    std::shared_ptr<const data> d_;
};

template <class K>
struct module_morphism {
    pmodule<K> source;
    pmodule<K> target;
    std::vector<matrix<K>> components;

    bool is_zero() const {
        for (const auto& c : components)
            if (!c.is_zero()) return false;
        return true;
    }
};

// Validates shapes and naturality on covers.
template <class K>
module_morphism<K> make_morphism(pmodule<K> source, pmodule<K> target, std::vector<matrix<K>> components) {
    if (!same_poset(source.base_ptr(), target.base_ptr())) throw PosetMismatch("morphism between modules over different posets");
    const poset& p = source.base();
    if (components.size() != p.size()) throw ShapeMismatch("morphism needs one component per element");
    for (std::size_t a = 0; a < p.size(); ++a)
        if (components[a].rows() != target.dim(a) || components[a].cols() != source.dim(a))
            throw ShapeMismatch("component at " + p.element(a) + " has shape " + components[a].shape());
    for (std::size_t ci = 0; ci < p.covers().size(); ++ci) {
        auto [a, b] = p.covers()[ci];
        if (!(target.cover_map(ci) * components[a] == components[b] * source.cover_map(ci)))
            throw NotNatural("square at " + p.element(a) + "<" + p.element(b) + " does not commute");
    }
    return module_morphism<K>{std::move(source), std::move(target), std::move(components)};
}

template <class K>
pmodule<K> zero_module(const poset_ptr& p) {
    std::vector<matrix<K>> maps;
    for (std::size_t ci = 0; ci < p->covers().size(); ++ci) maps.emplace_back(0, 0);
    return pmodule<K>(p, std::vector<std::size_t>(p->size(), 0), std::move(maps));
}

// Thin module with identity maps on S; no interval check.
template <class K>
pmodule<K> indicator_module(const poset_ptr& p, const subset& s) {
    std::vector<std::size_t> dims(p->size());
    for (std::size_t a = 0; a < p->size(); ++a) dims[a] = s.contains(a) ? 1 : 0;
    std::vector<matrix<K>> maps;
    for (auto [a, b] : p->covers()) {
        matrix<K> m(dims[b], dims[a]);
        if (dims[a] && dims[b]) m(0, 0) = K(1);
        maps.push_back(std::move(m));
    }
    return pmodule<K>(p, std::move(dims), std::move(maps));
}

template <class K>
pmodule<K> interval_module(const poset_ptr& p, const subset& s) {
    if (s.universe() != p->size()) throw ShapeMismatch("subset over a different poset");
    if (!is_interval(*p, s)) throw NotAnInterval(describe(*p, s));
    return indicator_module<K>(p, s);
}

template <class K>
pmodule<K> projective(const poset_ptr& p, std::size_t a) {
    return interval_module<K>(p, up_set(*p, a));
}

template <class K>
pmodule<K> injective(const poset_ptr& p, std::size_t a) {
    return interval_module<K>(p, down_set(*p, a));
}

template <class K>
pmodule<K> simple(const poset_ptr& p, std::size_t a) {
    return interval_module<K>(p, subset::of(p->size(), {a}));
}

template <class K>
pmodule<K> hook(const poset_ptr& p, std::size_t a, std::size_t b) {
    if (!p->less(a, b)) throw OrderViolation("hook needs " + p->element(a) + " < " + p->element(b));
    return interval_module<K>(p, hook_set(*p, a, b));
}

template <class K>
pmodule<K> cohook(const poset_ptr& p, std::size_t a, std::size_t b) {
    if (!p->less(a, b)) throw OrderViolation("cohook needs " + p->element(a) + " < " + p->element(b));
    return interval_module<K>(p, cohook_set(*p, a, b));
}

template <class K>
pmodule<K> rectangle(const poset_ptr& p, std::size_t a, std::size_t b) {
    if (!p->leq(a, b)) throw OrderViolation("rectangle needs " + p->element(a) + " <= " + p->element(b));
    return interval_module<K>(p, closed_interval(*p, a, b));
}

template <class K>
pmodule<K> sincere_interval(const poset_ptr& p) {
    if (!is_connected(*p)) throw NotConnected("poset has no sincere interval module");
    return indicator_module<K>(p, subset::full(p->size()));
}

template <class K>
pmodule<K> direct_sum(const pmodule<K>& m, const pmodule<K>& n) {
    if (!same_poset(m.base_ptr(), n.base_ptr())) throw PosetMismatch("direct sum of modules over different posets");
    const poset& p = m.base();
    std::vector<std::size_t> dims(p.size());
    for (std::size_t a = 0; a < p.size(); ++a) dims[a] = m.dim(a) + n.dim(a);
    std::vector<matrix<K>> maps;
    for (std::size_t ci = 0; ci < p.covers().size(); ++ci) maps.push_back(block_diagonal(m.cover_map(ci), n.cover_map(ci)));
    return pmodule<K>(m.base_ptr(), std::move(dims), std::move(maps));
}

template <class K>
pmodule<K> direct_sum(const std::vector<pmodule<K>>& ms, const poset_ptr& p) {
    pmodule<K> acc = zero_module<K>(p);
    for (const auto& m : ms) acc = direct_sum(acc, m);
    return acc;
}

template <class K>
pmodule<K> power(const pmodule<K>& m, std::size_t k) {
    pmodule<K> acc = zero_module<K>(m.base_ptr());
    for (std::size_t i = 0; i < k; ++i) acc = direct_sum(acc, m);
    return acc;
}

template <class K>
pmodule<K> restrict(const order_embedding& f, const pmodule<K>& m) {
    if (!same_poset(f.target, m.base_ptr())) throw PosetMismatch("restriction along an embedding into a different poset");
    const poset& x = *f.source;
    std::vector<std::size_t> dims(x.size());
    for (std::size_t a = 0; a < x.size(); ++a) dims[a] = m.dim(f(a));
    std::vector<matrix<K>> maps;
    for (auto [a, b] : x.covers()) maps.push_back(m.map(f(a), f(b)));
    return pmodule<K>(f.source, std::move(dims), std::move(maps));
}

template <class K>
module_morphism<K> restrict(const order_embedding& f, const module_morphism<K>& phi) {
    std::vector<matrix<K>> comps;
    for (std::size_t a = 0; a < f.source->size(); ++a) comps.push_back(phi.components[f(a)]);
    return module_morphism<K>{restrict(f, phi.source), restrict(f, phi.target), std::move(comps)};
}

// New coordinates v' = T_a v at each element; T_a invertible.
template <class K>
pmodule<K> change_basis(const pmodule<K>& m, const std::vector<matrix<K>>& t) {
    const poset& p = m.base();
    std::vector<matrix<K>> inv;
    for (std::size_t a = 0; a < p.size(); ++a) inv.push_back(inverse(t[a]));
    std::vector<matrix<K>> maps;
    for (std::size_t ci = 0; ci < p.covers().size(); ++ci) {
        auto [a, b] = p.covers()[ci];
        maps.push_back(t[b] * m.cover_map(ci) * inv[a]);
    }
    return pmodule<K>(m.base_ptr(), m.dims(), std::move(maps));
}

// Submodule spanned pointwise by the columns of `basis`; maps are solved and asserted consistent.
template <class K>
pmodule<K> submodule(const pmodule<K>& m, const std::vector<matrix<K>>& basis) {
    const poset& p = m.base();
    std::vector<std::size_t> dims(p.size());
    for (std::size_t a = 0; a < p.size(); ++a) dims[a] = basis[a].cols();
    std::vector<matrix<K>> maps;
    for (std::size_t ci = 0; ci < p.covers().size(); ++ci) {
        auto [a, b] = p.covers()[ci];
        auto x = solve_matrix(basis[b], m.cover_map(ci) * basis[a]);
        if (!x) throw InternalError("subspaces at " + p.element(a) + "<" + p.element(b) + " are not preserved by the structure map");
        maps.push_back(std::move(*x));
    }
    return pmodule<K>(m.base_ptr(), std::move(dims), std::move(maps));
}

template <class K>
struct subquotient {
    pmodule<K> module;
    module_morphism<K> map;  // inclusion (kernel, image) or projection (cokernel)
};

template <class K>
subquotient<K> kernel_module(const module_morphism<K>& phi) {
    std::vector<matrix<K>> basis;
    for (const auto& c : phi.components) basis.push_back(kernel_basis(c));
    auto k = submodule(phi.source, basis);
    return {k, module_morphism<K>{k, phi.source, basis}};
}

template <class K>
subquotient<K> image_module(const module_morphism<K>& phi) {
    std::vector<matrix<K>> basis;
    for (const auto& c : phi.components) basis.push_back(image_basis(c));
    auto im = submodule(phi.target, basis);
    return {im, module_morphism<K>{im, phi.target, basis}};
}

template <class K>
struct cokernel_data {
    subquotient<K> result;
    std::vector<matrix<K>> sections;  // S_a: chosen standard vectors lifting the cokernel basis
};

template <class K>
cokernel_data<K> cokernel_with_sections(const module_morphism<K>& phi) {
    const pmodule<K>& t = phi.target;
    const poset& p = t.base();
    std::vector<matrix<K>> proj, sect;
    std::vector<std::size_t> dims(p.size());
    for (std::size_t a = 0; a < p.size(); ++a) {
        const std::size_t n = t.dim(a);
        matrix<K> im = image_basis(phi.components[a]);
        auto comp = complement_indices(im);
        matrix<K> e(n, comp.size());
        for (std::size_t j = 0; j < comp.size(); ++j) e(comp[j], j) = K(1);
        matrix<K> inv = inverse(hstack<K>({im, e}, n));
        std::vector<std::size_t> rows;
        for (std::size_t j = 0; j < comp.size(); ++j) rows.push_back(im.cols() + j);
        proj.push_back(inv.select_rows(rows));
        sect.push_back(std::move(e));
        dims[a] = comp.size();
    }
    std::vector<matrix<K>> maps;
    for (std::size_t ci = 0; ci < p.covers().size(); ++ci) {
        auto [a, b] = p.covers()[ci];
        maps.push_back(proj[b] * t.cover_map(ci) * sect[a]);
    }
    pmodule<K> c(t.base_ptr(), std::move(dims), std::move(maps));
    return {{c, module_morphism<K>{t, c, std::move(proj)}}, std::move(sect)};
}

template <class K>
subquotient<K> cokernel_module(const module_morphism<K>& phi) {
    return cokernel_with_sections(phi).result;
}

template <class K>
subset support(const pmodule<K>& m) {
    subset s(m.base().size());
    for (std::size_t a = 0; a < s.universe(); ++a)
        if (m.dim(a) > 0) s.insert(a);
    return s;
}

template <class K>
std::size_t rank_pair(const pmodule<K>& m, std::size_t a, std::size_t b) {
    return rank(m.map(a, b));
}

// Rank of the stacked map M_a -> (+)_t M_t.
template <class K>
std::size_t joint_rank(const pmodule<K>& m, std::size_t a, const std::vector<std::size_t>& targets) {
    std::vector<matrix<K>> blocks;
    for (auto t : targets) blocks.push_back(m.map(a, t));
    return rank(vstack(blocks, m.dim(a)));
}

template <class K>
bool is_thin(const pmodule<K>& m) {
    for (auto d : m.dims())
        if (d > 1) return false;
    return true;
}

// Rescales a thin module so that every nonzero structure map becomes 1.
template <class K>
pmodule<K> normalize_thin(const pmodule<K>& m) {
    if (!is_thin(m)) return m;
    const poset& p = m.base();
    const std::size_t n = p.size();
    std::vector<K> scale(n, K(1));
    std::vector<bool> seen(n, false);
    for (std::size_t root = 0; root < n; ++root) {
        if (seen[root] || m.dim(root) == 0) continue;
        seen[root] = true;
        std::vector<std::size_t> stack{root};
        while (!stack.empty()) {
            auto x = stack.back();
            stack.pop_back();
            for (auto ci : p.upper_covers(x)) {
                auto y = p.covers()[ci].second;
                if (seen[y] || m.dim(y) == 0 || is_zero(m.cover_map(ci)(0, 0))) continue;
                scale[y] = scale[x] * m.cover_map(ci)(0, 0);
                seen[y] = true;
                stack.push_back(y);
            }
            for (auto ci : p.lower_covers(x)) {
                auto y = p.covers()[ci].first;
                if (seen[y] || m.dim(y) == 0 || is_zero(m.cover_map(ci)(0, 0))) continue;
                scale[y] = scale[x] / m.cover_map(ci)(0, 0);
                seen[y] = true;
                stack.push_back(y);
            }
        }
    }
    std::vector<matrix<K>> t;
    for (std::size_t a = 0; a < n; ++a) {
        matrix<K> s = matrix<K>::identity(m.dim(a));
        if (m.dim(a)) s(0, 0) = K(1) / scale[a];
        t.push_back(std::move(s));
    }
    return change_basis(m, t);
}

// Support of M if M is structurally the interval module on it.
template <class K>
std::optional<subset> interval_support(const pmodule<K>& m) {
    subset s = support(m);
    if (!is_interval(m.base(), s)) return std::nullopt;
    if (!(indicator_module<K>(m.base_ptr(), s) == m)) return std::nullopt;
    return s;
}

}  // namespace posetinv
