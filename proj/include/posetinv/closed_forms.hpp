#pragma once

#include <string>
#include <utility>
#include <vector>

#include "module.hpp"

namespace posetinv {

// Multiplicities of the indecomposables of a small template computed from dims and ranks of a module over it.
// Labels match the builtin catalogs.
using labeled_counts = std::vector<std::pair<std::string, long long>>;

namespace detail {

template <class K>
long long dim_at(const pmodule<K>& u, const char* id) {
    return static_cast<long long>(u.dim(u.base().index(id)));
}

template <class K>
long long rk(const pmodule<K>& u, const char* a, const char* b) {
    return static_cast<long long>(rank_pair(u, u.base().index(a), u.base().index(b)));
}

// rank of M_a -> M_b (+) M_c
template <class K>
long long rk_split(const pmodule<K>& u, const char* a, const char* b, const char* c) {
    const poset& p = u.base();
    return static_cast<long long>(joint_rank(u, p.index(a), {p.index(b), p.index(c)}));
}

// rank of M_a (+) M_b -> M_c
template <class K>
long long rk_merge(const pmodule<K>& u, const char* a, const char* b, const char* c) {
    const poset& p = u.base();
    const auto z = p.index(c);
    return static_cast<long long>(rank(hstack<K>({u.map(p.index(a), z), u.map(p.index(b), z)}, u.dim(z))));
}

}  // namespace detail

// X2 = {1 < 2}
template <class K>
labeled_counts closed_form_x2(const pmodule<K>& u) {
    const auto d1 = detail::dim_at(u, "1"), d2 = detail::dim_at(u, "2"), r = detail::rk(u, "1", "2");
    return {{"I{2}", d2 - r}, {"I{1,2}", r}, {"I{1}", d1 - r}};
}

// dimh over X2 in the catalog order I{2}, I{1,2}, I{1}
template <class K>
labeled_counts closed_form_x2_dimh(const pmodule<K>& u) {
    const auto d1 = detail::dim_at(u, "1"), d2 = detail::dim_at(u, "2"), r = detail::rk(u, "1", "2");
    return {{"I{2}", d2}, {"I{1,2}", d1}, {"I{1}", d1 - r}};
}

// X3 chain 1 < 2 < 3
template <class K>
labeled_counts closed_form_x3_chain(const pmodule<K>& u) {
    const auto d1 = detail::dim_at(u, "1"), d2 = detail::dim_at(u, "2"), d3 = detail::dim_at(u, "3");
    const auto r12 = detail::rk(u, "1", "2"), r23 = detail::rk(u, "2", "3"), r13 = detail::rk(u, "1", "3");
    return {{"I{1}", d1 - r12},         {"I{2}", d2 - r12 - r23 + r13}, {"I{3}", d3 - r23},
            {"I{1,2}", r12 - r13},      {"I{2,3}", r23 - r13},          {"I{1,2,3}", r13}};
}

// X'3: 1 < 2, 1 < 3. j = rank of M_1 -> M_2 (+) M_3.
template <class K>
labeled_counts closed_form_x3_fork(const pmodule<K>& u) {
    const auto d1 = detail::dim_at(u, "1"), d2 = detail::dim_at(u, "2"), d3 = detail::dim_at(u, "3");
    const auto r12 = detail::rk(u, "1", "2"), r13 = detail::rk(u, "1", "3"), j = detail::rk_split(u, "1", "2", "3");
    return {{"I{1}", d1 - j},        {"I{2}", d2 - r12},       {"I{3}", d3 - r13},
            {"I{1,2}", j - r13},     {"I{1,3}", j - r12},      {"I{1,2,3}", r12 + r13 - j}};
}

// The X'3 expressions with j in place of r12 + r13 - j; kept to document the discrepancy.
template <class K>
labeled_counts closed_form_x3_fork_printed(const pmodule<K>& u) {
    const auto d1 = detail::dim_at(u, "1"), d2 = detail::dim_at(u, "2"), d3 = detail::dim_at(u, "3");
    const auto r12 = detail::rk(u, "1", "2"), r13 = detail::rk(u, "1", "3"), j = detail::rk_split(u, "1", "2", "3");
    return {{"I{1}", d1 - r12 - r13 + j}, {"I{2}", d2 - r12},   {"I{3}", d3 - r13},
            {"I{1,2}", r12 - j},          {"I{1,3}", r13 - j},  {"I{1,2,3}", j}};
}

// X''3: 1 < 3, 2 < 3. s = rank of M_1 (+) M_2 -> M_3.
template <class K>
labeled_counts closed_form_x3_cofork(const pmodule<K>& u) {
    const auto d1 = detail::dim_at(u, "1"), d2 = detail::dim_at(u, "2"), d3 = detail::dim_at(u, "3");
    const auto r13 = detail::rk(u, "1", "3"), r23 = detail::rk(u, "2", "3"), s = detail::rk_merge(u, "1", "2", "3");
    return {{"I{3}", d3 - s},        {"I{1}", d1 - r13},       {"I{2}", d2 - r23},
            {"I{1,3}", s - r23},     {"I{2,3}", s - r13},      {"I{1,2,3}", r13 + r23 - s}};
}

// D4 sink a, c, d < b: multiplicity of the sincere interval is dim(Im a->b cap Im c->b cap Im d->b).
template <class K>
long long d4_sincere_interval_multiplicity(const pmodule<K>& u) {
    const poset& p = u.base();
    const auto b = p.index("b");
    std::vector<matrix<K>> images;
    for (const char* s : {"a", "c", "d"}) images.push_back(image_basis(u.map(p.index(s), b)));
    return static_cast<long long>(subspace_intersection(images).cols());
}

template <class K>
labeled_counts closed_form(const std::string& template_name, const pmodule<K>& u) {
    if (template_name == "X2") return closed_form_x2(u);
    if (template_name == "X3_chain") return closed_form_x3_chain(u);
    if (template_name == "X3_fork") return closed_form_x3_fork(u);
    if (template_name == "X3_cofork") return closed_form_x3_cofork(u);
    throw UnknownCatalog("no closed form for template '" + template_name + "'");
}

}  // namespace posetinv
