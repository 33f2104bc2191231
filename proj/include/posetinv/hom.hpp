#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "module.hpp"
#include "sparse.hpp"

namespace posetinv {

namespace detail {

// Unknowns: entries of phi_a (dim M_a x dim U_a), blocks in element order, row-major.
template <class K>
struct hom_system {
    std::vector<std::size_t> offset;
    std::size_t vars = 0;
    sparse_eliminator<K> elim{0};

    hom_system(const pmodule<K>& u, const pmodule<K>& m) {
        if (!same_poset(u.base_ptr(), m.base_ptr())) throw PosetMismatch("Hom between modules over different posets");
        const poset& p = u.base();
        offset.resize(p.size());
        for (std::size_t a = 0; a < p.size(); ++a) {
            offset[a] = vars;
            vars += m.dim(a) * u.dim(a);
        }
        elim = sparse_eliminator<K>(vars);
        // M_{a<b} phi_a - phi_b U_{a<b} = 0, entry (r, c) with r < dim M_b, c < dim U_a
        typename sparse_eliminator<K>::row row;
        for (std::size_t ci = 0; ci < p.covers().size(); ++ci) {
            auto [a, b] = p.covers()[ci];
            const auto& mm = m.cover_map(ci);
            const auto& uu = u.cover_map(ci);
            const std::size_t ua = u.dim(a), ub = u.dim(b), ma = m.dim(a);
            for (std::size_t r = 0; r < m.dim(b); ++r)
                for (std::size_t c = 0; c < ua; ++c) {
                    row.clear();
                    for (std::size_t k = 0; k < ma; ++k)
                        if (!is_zero(mm(r, k))) row.emplace_back(offset[a] + k * ua + c, mm(r, k));
                    for (std::size_t k = 0; k < ub; ++k)
                        if (!is_zero(uu(k, c))) row.emplace_back(offset[b] + r * ub + k, -uu(k, c));
                    if (!row.empty()) elim.add_row(row);
                }
        }
    }
};

}  // namespace detail

template <class K>
std::size_t hom_dim(const pmodule<K>& u, const pmodule<K>& m) {
    return detail::hom_system<K>(u, m).elim.nullity();
}

template <class K>
std::vector<module_morphism<K>> hom_basis(const pmodule<K>& u, const pmodule<K>& m) {
    detail::hom_system<K> sys(u, m);
    matrix<K> k = sys.elim.kernel_basis();
    const poset& p = u.base();
    std::vector<module_morphism<K>> out;
    for (std::size_t t = 0; t < k.cols(); ++t) {
        std::vector<matrix<K>> comps;
        for (std::size_t a = 0; a < p.size(); ++a) {
            matrix<K> c(m.dim(a), u.dim(a));
            for (std::size_t i = 0; i < c.rows(); ++i)
                for (std::size_t j = 0; j < c.cols(); ++j) c(i, j) = k(sys.offset[a] + i * u.dim(a) + j, t);
            comps.push_back(std::move(c));
        }
        out.push_back(module_morphism<K>{u, m, std::move(comps)});
    }
    return out;
}

template <class K>
module_morphism<K> combine(const std::vector<module_morphism<K>>& basis, const std::vector<K>& coeff) {
    module_morphism<K> out = basis.at(0);
    for (std::size_t a = 0; a < out.components.size(); ++a) {
        matrix<K> c(out.components[a].rows(), out.components[a].cols());
        for (std::size_t t = 0; t < basis.size(); ++t)
            if (!is_zero(coeff[t])) c = c + coeff[t] * basis[t].components[a];
        out.components[a] = std::move(c);
    }
    return out;
}

template <class K>
bool is_pointwise_invertible(const module_morphism<K>& phi) {
    for (const auto& c : phi.components)
        if (c.rows() != c.cols() || rank(c) != c.rows()) return false;
    return true;
}

// Searches Hom(U,V) for an isomorphism: exact when Hom(U,V) is at most one-dimensional
// (always the case between bricks), otherwise tries seeded random combinations.
template <class K>
std::optional<module_morphism<K>> find_isomorphism(const pmodule<K>& u, const pmodule<K>& v, std::size_t attempts = 16) {
    if (u.dims() != v.dims()) return std::nullopt;
    auto basis = hom_basis(u, v);
    if (basis.empty()) {
        if (u.is_zero()) return module_morphism<K>{u, v, std::vector<matrix<K>>(u.base().size())};
        return std::nullopt;
    }
    for (const auto& b : basis)
        if (is_pointwise_invertible(b)) return b;
    if (basis.size() == 1) return std::nullopt;
    std::mt19937_64 rng(0x5eedULL);
    std::uniform_int_distribution<int> dist(-1000, 1000);
    for (std::size_t t = 0; t < attempts; ++t) {
        std::vector<K> coeff;
        for (std::size_t i = 0; i < basis.size(); ++i) coeff.push_back(K(dist(rng)));
        auto phi = combine(basis, coeff);
        if (is_pointwise_invertible(phi)) return phi;
    }
    return std::nullopt;
}

template <class K>
module_morphism<K> compose(const module_morphism<K>& g, const module_morphism<K>& f) {
    std::vector<matrix<K>> comps;
    for (std::size_t a = 0; a < f.components.size(); ++a) comps.push_back(g.components[a] * f.components[a]);
    return module_morphism<K>{f.source, g.target, std::move(comps)};
}

}  // namespace posetinv
