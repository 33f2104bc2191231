#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "poset.hpp"

namespace posetinv {

inline const std::vector<std::string>& template_names() {
    static const std::vector<std::string> names{"X1",           "X2",          "X3_chain",     "X3_fork",   "X3_cofork",
                                                "X4_D4_sink",   "X4_D4_source", "X4_subspace", "diamond"};
    return names;
}

// Accepts the canonical names plus underscore-free spellings ("X3fork").
inline std::string canonical_template_name(const std::string& name) {
    auto squash = [](std::string s) {
        s.erase(std::remove(s.begin(), s.end(), '_'), s.end());
        std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return char(std::tolower(c)); });
        return s;
    };
    const std::string key = squash(name);
    for (const auto& n : template_names())
        if (squash(n) == key) return n;
    if (key == "x3") return "X3_chain";
    return name;
}

inline bool is_template_name(const std::string& name) {
    const auto c = canonical_template_name(name);
    const auto& names = template_names();
    return std::find(names.begin(), names.end(), c) != names.end();
}

}  // namespace posetinv
