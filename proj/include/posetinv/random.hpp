#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "module.hpp"
#include "sparse.hpp"

namespace posetinv {

using rng_type = std::mt19937_64;

struct random_spec {
    std::size_t max_dim = 4;
    int lo = -2;
    int hi = 2;
};

// Maps into each element b are drawn jointly along a linear extension: the commutativity
// constraints against already-fixed composites form a linear system whose solution space
// is sampled by a random integer combination of its basis. Never rejects.
template <class K>
pmodule<K> random_module(const poset_ptr& p, const std::vector<std::size_t>& dims, rng_type& rng, const random_spec& spec = {}) {
    const poset& q = *p;
    const std::size_t n = q.size();
    std::uniform_int_distribution<int> coef(spec.lo, spec.hi);
    std::vector<matrix<K>> maps(q.covers().size());
    std::vector<matrix<K>> comp(n * n);
    for (auto b : q.linear_extension()) {
        comp[b * n + b] = matrix<K>::identity(dims[b]);
        const auto& low = q.lower_covers(b);
        std::vector<std::size_t> offset(low.size());
        std::size_t vars = 0;
        for (std::size_t i = 0; i < low.size(); ++i) {
            offset[i] = vars;
            vars += dims[b] * dims[q.covers()[low[i]].first];
        }
        sparse_eliminator<K> sys(vars);
        typename sparse_eliminator<K>::row row;
        for (std::size_t i = 0; i < low.size(); ++i)
            for (std::size_t j = i + 1; j < low.size(); ++j) {
                const std::size_t ci = q.covers()[low[i]].first, cj = q.covers()[low[j]].first;
                for (std::size_t x = 0; x < n; ++x) {
                    if (!q.leq(x, ci) || !q.leq(x, cj)) continue;
                    const auto& a = comp[x * n + ci];
                    const auto& c = comp[x * n + cj];
                    // (map_i a - map_j c)(r, s) = 0
                    for (std::size_t r = 0; r < dims[b]; ++r)
                        for (std::size_t s = 0; s < dims[x]; ++s) {
                            row.clear();
                            for (std::size_t k = 0; k < dims[ci]; ++k)
                                if (!is_zero(a(k, s))) row.emplace_back(offset[i] + r * dims[ci] + k, a(k, s));
                            for (std::size_t k = 0; k < dims[cj]; ++k)
                                if (!is_zero(c(k, s))) row.emplace_back(offset[j] + r * dims[cj] + k, -c(k, s));
                            if (!row.empty()) sys.add_row(row);
                        }
                }
            }
        matrix<K> basis = sys.kernel_basis();
        std::vector<K> v(vars, K(0));
        for (std::size_t t = 0; t < basis.cols(); ++t) {
            const K w(coef(rng));
            if (is_zero(w)) continue;
            for (std::size_t r = 0; r < vars; ++r) v[r] += w * basis(r, t);
        }
        for (std::size_t i = 0; i < low.size(); ++i) {
            const std::size_t c = q.covers()[low[i]].first;
            matrix<K> m(dims[b], dims[c]);
            for (std::size_t r = 0; r < dims[b]; ++r)
                for (std::size_t k = 0; k < dims[c]; ++k) m(r, k) = v[offset[i] + r * dims[c] + k];
            maps[low[i]] = std::move(m);
        }
        for (std::size_t x = 0; x < n; ++x) {
            if (!q.less(x, b)) continue;
            for (auto ci : low) {
                const std::size_t c = q.covers()[ci].first;
                if (q.leq(x, c)) {
                    comp[x * n + b] = maps[ci] * comp[x * n + c];
                    break;
                }
            }
        }
    }
    return pmodule<K>(p, dims, std::move(maps));
}

template <class K>
pmodule<K> random_module(const poset_ptr& p, rng_type& rng, const random_spec& spec = {}) {
    std::uniform_int_distribution<std::size_t> dim(0, spec.max_dim);
    std::vector<std::size_t> dims(p->size());
    for (auto& d : dims) d = dim(rng);
    return random_module<K>(p, dims, rng, spec);
}

// Independent per-trial seeds drawn from a master seed, so trials can run in any order.
inline std::vector<std::uint64_t> trial_seeds(std::uint64_t master, std::size_t count) {
    rng_type rng(master);
    std::vector<std::uint64_t> out(count);
    for (auto& s : out) s = rng();
    return out;
}

}  // namespace posetinv
