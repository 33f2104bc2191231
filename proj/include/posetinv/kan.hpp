#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hom.hpp"
#include "module.hpp"

namespace posetinv {

// P1 -> P0 between sums of indecomposable projectives; map(i, j) is the scalar of P_{p1[j]} -> P_{p0[i]},
// nonzero only when p0[i] <= p1[j].
template <class K>
struct presentation {
    poset_ptr base;
    std::vector<std::size_t> p0;
    std::vector<std::size_t> p1;
    matrix<K> map;
};

// Direct sum of P_g over the generator list; coordinates at z follow generator order among gens <= z.
template <class K>
pmodule<K> free_module(const poset_ptr& p, const std::vector<std::size_t>& gens) {
    const poset& q = *p;
    std::vector<std::size_t> dims(q.size(), 0);
    for (std::size_t z = 0; z < q.size(); ++z)
        for (auto g : gens) dims[z] += q.leq(g, z) ? 1 : 0;
    std::vector<matrix<K>> maps;
    for (auto [z, w] : q.covers()) {
        matrix<K> m(dims[w], dims[z]);
        std::size_t cz = 0, cw = 0;
        for (auto g : gens) {
            if (q.leq(g, z)) m(cw, cz++) = K(1);
            if (q.leq(g, w)) ++cw;
        }
        maps.push_back(std::move(m));
    }
    return pmodule<K>(p, std::move(dims), std::move(maps));
}

template <class K>
module_morphism<K> free_morphism(const poset_ptr& p, const std::vector<std::size_t>& p0, const std::vector<std::size_t>& p1,
                                 const matrix<K>& map) {
    const poset& q = *p;
    if (map.rows() != p0.size() || map.cols() != p1.size()) throw ShapeMismatch("presentation matrix has shape " + map.shape());
    for (std::size_t i = 0; i < p0.size(); ++i)
        for (std::size_t j = 0; j < p1.size(); ++j)
            if (!is_zero(map(i, j)) && !q.leq(p0[i], p1[j])) throw OrderViolation("presentation entry without a relation");
    auto src = free_module<K>(p, p1), tgt = free_module<K>(p, p0);
    std::vector<matrix<K>> comps;
    for (std::size_t z = 0; z < q.size(); ++z) {
        matrix<K> c(tgt.dim(z), src.dim(z));
        std::size_t r = 0;
        for (std::size_t i = 0; i < p0.size(); ++i) {
            if (!q.leq(p0[i], z)) continue;
            std::size_t col = 0;
            for (std::size_t j = 0; j < p1.size(); ++j) {
                if (!q.leq(p1[j], z)) continue;
                c(r, col++) = map(i, j);
            }
            ++r;
        }
        comps.push_back(std::move(c));
    }
    return module_morphism<K>{src, tgt, std::move(comps)};
}

template <class K>
struct generator {
    std::size_t element;
    std::vector<K> vector;  // in M_element coordinates
};

// Basis of a complement of (rad M)_x = sum of images from lower covers, at every x.
template <class K>
std::vector<generator<K>> top_generators(const pmodule<K>& m) {
    const poset& q = m.base();
    std::vector<generator<K>> out;
    for (std::size_t x = 0; x < q.size(); ++x) {
        if (m.dim(x) == 0) continue;
        std::vector<matrix<K>> blocks;
        for (auto ci : q.lower_covers(x)) blocks.push_back(m.cover_map(ci));
        matrix<K> rad = image_basis(hstack(blocks, m.dim(x)));
        for (auto k : complement_indices(rad)) {
            std::vector<K> v(m.dim(x), K(0));
            v[k] = K(1);
            out.push_back({x, std::move(v)});
        }
    }
    return out;
}

namespace detail {

// pi: free(p0) -> U, sending the g-th generator to its vector.
template <class K>
module_morphism<K> generator_map(const pmodule<K>& u, const std::vector<generator<K>>& gens, const pmodule<K>& free) {
    const poset& q = u.base();
    std::vector<matrix<K>> comps;
    for (std::size_t z = 0; z < q.size(); ++z) {
        matrix<K> c(u.dim(z), free.dim(z));
        std::size_t col = 0;
        for (const auto& g : gens) {
            if (!q.leq(g.element, z)) continue;
            matrix<K> v = matrix<K>::from_columns({g.vector}, u.dim(g.element));
            matrix<K> img = u.map(g.element, z) * v;
            for (std::size_t r = 0; r < c.rows(); ++r) c(r, col) = img(r, 0);
            ++col;
        }
        comps.push_back(std::move(c));
    }
    return module_morphism<K>{free, u, std::move(comps)};
}

}  // namespace detail

template <class K>
presentation<K> projective_presentation(const pmodule<K>& u) {
    const poset_ptr& p = u.base_ptr();
    const poset& q = *p;
    auto g0 = top_generators(u);
    std::vector<std::size_t> p0;
    for (const auto& g : g0) p0.push_back(g.element);
    auto f0 = free_module<K>(p, p0);
    auto pi = detail::generator_map(u, g0, f0);
    auto ker = kernel_module(pi);
    auto g1 = top_generators(ker.module);
    std::vector<std::size_t> p1;
    matrix<K> rel(p0.size(), g1.size());
    for (std::size_t j = 0; j < g1.size(); ++j) {
        const std::size_t a = g1[j].element;
        p1.push_back(a);
        matrix<K> w = ker.map.components[a] * matrix<K>::from_columns({g1[j].vector}, ker.module.dim(a));
        std::size_t r = 0;
        for (std::size_t i = 0; i < p0.size(); ++i)
            if (q.leq(p0[i], a)) rel(i, j) = w(r++, 0);
    }
    presentation<K> out{p, std::move(p0), std::move(p1), std::move(rel)};
    auto rho = free_morphism(p, out.p0, out.p1, out.map);
    for (std::size_t z = 0; z < q.size(); ++z)
        if (f0.dim(z) - rank(rho.components[z]) != u.dim(z) || !(pi.components[z] * rho.components[z]).is_zero())
            throw InternalError("projective presentation does not reproduce the module at " + q.element(z));
    return out;
}

template <class K>
pmodule<K> cokernel_of(const presentation<K>& pres) {
    return cokernel_module(free_morphism(pres.base, pres.p0, pres.p1, pres.map)).module;
}

// f_!U, normalized so that restricting along f returns U on the nose.
template <class K>
pmodule<K> induce(const order_embedding& f, const pmodule<K>& u) {
    if (!same_poset(f.source, u.base_ptr())) throw PosetMismatch("induce: module is not over the embedding's source");
    const poset& x = *f.source;
    auto pres = projective_presentation(u);
    std::vector<std::size_t> q0, q1;
    for (auto b : pres.p0) q0.push_back(f(b));
    for (auto a : pres.p1) q1.push_back(f(a));
    auto rho = free_morphism(f.target, q0, q1, pres.map);
    auto ck = cokernel_with_sections(rho);
    const pmodule<K>& c = ck.result.module;
    // epsilon_x: C_{f(x)} -> U_x through the lifted generators
    auto g0 = top_generators(u);
    auto pi = detail::generator_map(u, g0, free_module<K>(u.base_ptr(), pres.p0));
    std::vector<matrix<K>> t;
    for (std::size_t z = 0; z < f.target->size(); ++z) t.push_back(matrix<K>::identity(c.dim(z)));
    for (std::size_t a = 0; a < x.size(); ++a) t[f(a)] = pi.components[a] * ck.sections[f(a)];
    return change_basis(c, t);
}

template <class K>
pmodule<K> dualize(const pmodule<K>& m, poset_ptr op = nullptr) {
    const poset& p = m.base();
    if (!op) op = opposite(p);
    if (op->elements() != p.elements()) throw PosetMismatch("dualize: target is not the opposite poset");
    std::vector<matrix<K>> maps;
    for (auto [b, a] : op->covers()) {
        auto ci = p.cover_index(a, b);
        if (!ci) throw PosetMismatch("dualize: target is not the opposite poset");
        maps.push_back(m.cover_map(*ci).transpose());
    }
    return pmodule<K>(std::move(op), m.dims(), std::move(maps));
}

// f_* = D f^op_! D, normalized so that restricting along f returns U on the nose.
template <class K>
pmodule<K> coinduce(const order_embedding& f, const pmodule<K>& u) {
    if (!same_poset(f.source, u.base_ptr())) throw PosetMismatch("coinduce: module is not over the embedding's source");
    auto xop = opposite(*f.source);
    auto pop = opposite(*f.target);
    order_embedding fop{xop, pop, f.map};
    return dualize(induce(fop, dualize(u, xop)), f.target);
}

// The morphism f_!U -> f_*U that restricts to the identity of U on f(X).
template <class K>
module_morphism<K> theta(const order_embedding& f, const pmodule<K>& u) {
    auto a = induce(f, u);
    auto b = coinduce(f, u);
    auto basis = hom_basis(a, b);
    const poset& x = *f.source;
    std::size_t eqs = 0;
    for (std::size_t p = 0; p < x.size(); ++p) eqs += u.dim(p) * u.dim(p);
    if (basis.empty()) {
        if (eqs == 0) {
            std::vector<matrix<K>> comps;
            for (std::size_t z = 0; z < f.target->size(); ++z) comps.emplace_back(b.dim(z), a.dim(z));
            return module_morphism<K>{a, b, std::move(comps)};
        }
        throw NoSolution("Hom(f_!U, f_*U) is zero for a nonzero U");
    }
    matrix<K> sys(eqs, basis.size());
    std::vector<K> rhs(eqs, K(0));
    std::size_t r = 0;
    for (std::size_t p = 0; p < x.size(); ++p)
        for (std::size_t i = 0; i < u.dim(p); ++i)
            for (std::size_t j = 0; j < u.dim(p); ++j) {
                for (std::size_t k = 0; k < basis.size(); ++k) sys(r, k) = basis[k].components[f(p)](i, j);
                rhs[r] = i == j ? K(1) : K(0);
                ++r;
            }
    auto c = solve(sys, rhs);
    if (!c) throw NoSolution("no morphism f_!U -> f_*U restricts to the identity");
    return combine(basis, *c);
}

// Image of theta; thin results are rescaled to identity maps.
template <class K>
pmodule<K> intermediate_extension(const order_embedding& f, const pmodule<K>& u) {
    auto im = image_module(theta(f, u)).module;
    return normalize_thin(im);
}

}  // namespace posetinv
