#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "errors.hpp"

namespace posetinv {

// Integer vector indexed by ordered string keys ("dim:a", "rk:a<=b", "mult:f#3:U#5", "fam:f#7").
class invariant_vector {
public:
    invariant_vector() = default;
    invariant_vector(std::vector<std::string> keys, std::vector<long long> values)
        : keys_(std::move(keys)), values_(std::move(values)) {
        if (keys_.size() != values_.size()) throw ShapeMismatch("keys and values differ in length");
        for (std::size_t i = 0; i < keys_.size(); ++i)
            if (!index_.emplace(keys_[i], i).second) throw ShapeMismatch("duplicate key '" + keys_[i] + "'");
    }
    static invariant_vector zeros(std::vector<std::string> keys) {
        std::vector<long long> v(keys.size(), 0);
        return invariant_vector(std::move(keys), std::move(v));
    }

    std::size_t size() const { return keys_.size(); }
    const std::vector<std::string>& keys() const { return keys_; }
    const std::vector<long long>& values() const { return values_; }
    long long operator[](std::size_t i) const { return values_[i]; }
    long long& operator[](std::size_t i) { return values_[i]; }
    long long at(const std::string& key) const { return values_[position(key)]; }
    std::size_t position(const std::string& key) const {
        auto it = index_.find(key);
        if (it == index_.end()) throw ShapeMismatch("unknown key '" + key + "'");
        return it->second;
    }
    bool has(const std::string& key) const { return index_.count(key) != 0; }
    bool is_zero() const {
        for (auto v : values_)
            if (v) return false;
        return true;
    }

    friend bool operator==(const invariant_vector& a, const invariant_vector& b) {
        return a.keys_ == b.keys_ && a.values_ == b.values_;
    }
    friend invariant_vector operator+(invariant_vector a, const invariant_vector& b) {
        a.check_keys(b);
        for (std::size_t i = 0; i < a.values_.size(); ++i) a.values_[i] += b.values_[i];
        return a;
    }
    friend invariant_vector operator-(invariant_vector a, const invariant_vector& b) {
        a.check_keys(b);
        for (std::size_t i = 0; i < a.values_.size(); ++i) a.values_[i] -= b.values_[i];
        return a;
    }
    friend invariant_vector operator*(long long s, invariant_vector a) {
        for (auto& v : a.values_) v *= s;
        return a;
    }

private:
    void check_keys(const invariant_vector& b) const {
        if (keys_ != b.keys_) throw ShapeMismatch("arithmetic between invariant vectors with different keys");
    }
    std::vector<std::string> keys_;
    std::vector<long long> values_;
    std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace posetinv
