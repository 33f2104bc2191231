#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "matrix.hpp"

namespace posetinv {

// Incremental row echelon form for sparse homogeneous systems.
// Rows are reduced against stored pivots on insertion; each stored row starts at its pivot with coefficient 1.
template <class K>
class sparse_eliminator {
public:
    using row = std::vector<std::pair<std::size_t, K>>;

    explicit sparse_eliminator(std::size_t vars) : vars_(vars), pivot_row_(vars, npos), work_(vars, K(0)) {}

    std::size_t vars() const { return vars_; }
    std::size_t rank() const { return rows_.size(); }
    std::size_t nullity() const { return vars_ - rows_.size(); }

    // Entries may repeat a column; they are summed.
    void add_row(const row& entries) {
        std::size_t lo = vars_, hi = 0;
        for (const auto& [c, v] : entries) {
            work_[c] += v;
            lo = std::min(lo, c);
            hi = std::max(hi, c + 1);
        }
        touched_.clear();
        for (const auto& e : entries) touched_.push_back(e.first);
        std::size_t c = lo;
        while (c < hi) {
            if (is_zero(work_[c])) {
                ++c;
                continue;
            }
            std::size_t r = pivot_row_[c];
            if (r == npos) break;
            const K f = work_[c];
            for (const auto& [cc, vv] : rows_[r]) {
                work_[cc] -= f * vv;
                if (cc + 1 > hi) hi = cc + 1;
                touched_.push_back(cc);
            }
            ++c;
        }
        if (c < hi) {
            const K inv = K(1) / work_[c];
            row out;
            for (std::size_t j = c; j < hi; ++j)
                if (!is_zero(work_[j])) out.emplace_back(j, work_[j] * inv);
            pivot_row_[c] = rows_.size();
            rows_.push_back(std::move(out));
        }
        for (auto t : touched_) work_[t] = K(0);
        for (std::size_t j = lo; j < hi && j < vars_; ++j) work_[j] = K(0);
    }

    // Columns form a basis of the solution space.
    matrix<K> kernel_basis() const {
        std::vector<std::size_t> free;
        for (std::size_t c = 0; c < vars_; ++c)
            if (pivot_row_[c] == npos) free.push_back(c);
        matrix<K> k(vars_, free.size());
        std::vector<std::size_t> pivots;
        for (std::size_t c = 0; c < vars_; ++c)
            if (pivot_row_[c] != npos) pivots.push_back(c);
        std::vector<K> x(vars_);
        for (std::size_t t = 0; t < free.size(); ++t) {
            std::fill(x.begin(), x.end(), K(0));
            x[free[t]] = K(1);
            for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
                const auto& r = rows_[pivot_row_[*it]];
                K s(0);
                for (std::size_t i = 1; i < r.size(); ++i) s += r[i].second * x[r[i].first];
                x[*it] = -s;
            }
            for (std::size_t c = 0; c < vars_; ++c) k(c, t) = x[c];
        }
        return k;
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t vars_;
    std::vector<std::size_t> pivot_row_;
    std::vector<row> rows_;
    std::vector<K> work_;
    std::vector<std::size_t> touched_;
};

}  // namespace posetinv
