#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "invariant_vector.hpp"
#include "module.hpp"

namespace posetinv {

using json = nlohmann::ordered_json;

inline json parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw format_error(origin + ": " + e.what());
    }
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw format_error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str(), path);
}

inline std::string json_string(const json& j, const std::string& what) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw format_error(what + ": expected an element identifier");
}

inline std::size_t json_size(const json& j, const std::string& what) {
    if (!j.is_number_integer() || j.get<long long>() < 0) throw format_error(what + ": expected a nonnegative integer");
    return j.get<std::size_t>();
}

inline poset_ptr parse_poset(const json& j) {
    if (!j.is_object()) throw format_error("poset: expected an object");
    if (j.contains("grid")) {
        const auto& g = j["grid"];
        if (!g.is_array() || g.size() != 2) throw format_error("poset.grid: expected [n, m]");
        return grid(json_size(g[0], "grid"), json_size(g[1], "grid"));
    }
    if (j.contains("staircase")) {
        const auto& g = j["staircase"];
        if (!g.is_array() || g.size() != 2) throw format_error("poset.staircase: expected [n, m]");
        return staircase_grid(json_size(g[0], "staircase"), json_size(g[1], "staircase"));
    }
    if (!j.contains("elements") || !j["elements"].is_array()) throw format_error("poset: missing 'elements'");
    std::vector<std::string> el;
    for (const auto& e : j["elements"]) el.push_back(json_string(e, "poset.elements"));
    std::vector<std::pair<std::string, std::string>> rel;
    if (j.contains("relations")) {
        if (!j["relations"].is_array()) throw format_error("poset.relations: expected an array");
        for (const auto& r : j["relations"]) {
            if (!r.is_array() || r.size() != 2) throw format_error("poset.relations: expected pairs");
            rel.emplace_back(json_string(r[0], "relation"), json_string(r[1], "relation"));
        }
    }
    return poset::from_relations(std::move(el), rel);
}

inline json poset_to_json(const poset& p) {
    json j;
    j["elements"] = p.elements();
    json rel = json::array();
    for (auto [a, b] : p.covers()) rel.push_back({p.element(a), p.element(b)});
    j["relations"] = rel;
    return j;
}

template <class K>
K parse_scalar_json(const json& j) {
    if (j.is_number_integer()) return field_traits<K>::from_int(j.get<long long>());
    if (j.is_string()) return parse_scalar<K>(j.get<std::string>());
    throw format_error("matrix entry must be an integer or a \"num/den\" string");
}

template <class K>
json scalar_to_json(const K& x) {
    const std::string s = field_traits<K>::to_string(x);
    if (s.find('/') == std::string::npos) {
        try {
            return json(std::stoll(s));
        } catch (const std::out_of_range&) {
        }
    }
    return json(s);
}

template <class K>
matrix<K> parse_matrix(const json& j, std::size_t rows, std::size_t cols, const std::string& what) {
    if (!j.is_array()) throw format_error(what + ": expected an array of rows");
    matrix<K> m(rows, cols);
    if (rows == 0) {
        if (!j.empty()) throw format_error(what + ": expected an empty matrix");
        return m;
    }
    if (j.size() != rows) throw format_error(what + ": expected " + std::to_string(rows) + " rows");
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw format_error(what + ": row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = parse_scalar_json<K>(j[i][c]);
    }
    return m;
}

template <class K>
json matrix_to_json(const matrix<K>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) r.push_back(scalar_to_json(m(i, c)));
        rows.push_back(r);
    }
    return rows;
}

namespace detail {

inline std::size_t element_of(const poset& p, const json& j) { return p.index(json_string(j, "element")); }

inline std::pair<std::size_t, std::size_t> element_pair(const poset& p, const json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 2) throw format_error(what + ": expected [a, b]");
    return {element_of(p, j[0]), element_of(p, j[1])};
}

}  // namespace detail

// Module object; `context` supplies the poset when the object has no "poset" entry.
template <class K>
pmodule<K> parse_module(const json& j, poset_ptr context = nullptr) {
    if (!j.is_object()) throw format_error("module: expected an object");
    poset_ptr p = context;
    if (j.contains("poset")) {
        p = parse_poset(j["poset"]);
        if (context && !same_poset(p, context)) throw PosetMismatch("module poset differs from the expected poset");
        if (context) p = context;
    }
    if (!p) throw format_error("module: missing 'poset'");
    const poset& q = *p;
    if (j.contains("interval")) {
        subset s(q.size());
        for (const auto& e : j["interval"]) s.insert(detail::element_of(q, e));
        return interval_module<K>(p, s);
    }
    if (j.contains("hook")) {
        auto [a, b] = detail::element_pair(q, j["hook"], "hook");
        return hook<K>(p, a, b);
    }
    if (j.contains("cohook")) {
        auto [a, b] = detail::element_pair(q, j["cohook"], "cohook");
        return cohook<K>(p, a, b);
    }
    if (j.contains("rectangle")) {
        auto [a, b] = detail::element_pair(q, j["rectangle"], "rectangle");
        return rectangle<K>(p, a, b);
    }
    if (j.contains("projective")) return projective<K>(p, detail::element_of(q, j["projective"]));
    if (j.contains("injective")) return injective<K>(p, detail::element_of(q, j["injective"]));
    if (j.contains("simple")) return simple<K>(p, detail::element_of(q, j["simple"]));
    if (j.contains("sincere")) return sincere_interval<K>(p);
    if (j.contains("zero")) return zero_module<K>(p);
    if (j.contains("sum")) {
        if (!j["sum"].is_array()) throw format_error("sum: expected an array of modules");
        pmodule<K> acc = zero_module<K>(p);
        for (const auto& m : j["sum"]) acc = direct_sum(acc, parse_module<K>(m, p));
        return acc;
    }
    std::vector<std::size_t> dims(q.size(), 0);
    if (j.contains("dims")) {
        if (!j["dims"].is_object()) throw format_error("dims: expected an object element -> dimension");
        for (const auto& [k, v] : j["dims"].items()) dims[q.index(k)] = json_size(v, "dims." + k);
    }
    std::vector<matrix<K>> maps;
    for (auto [a, b] : q.covers()) maps.emplace_back(dims[b], dims[a]);
    if (j.contains("maps")) {
        if (!j["maps"].is_object()) throw format_error("maps: expected an object \"a<b\" -> matrix");
        for (const auto& [k, v] : j["maps"].items()) {
            auto lt = k.find('<');
            if (lt == std::string::npos) throw format_error("maps: key '" + k + "' is not of the form a<b");
            const std::size_t a = q.index(k.substr(0, lt)), b = q.index(k.substr(lt + 1));
            auto ci = q.cover_index(a, b);
            if (!ci) throw format_error("maps: '" + k + "' is not a cover relation");
            maps[*ci] = parse_matrix<K>(v, dims[b], dims[a], "maps." + k);
        }
    }
    return pmodule<K>(p, std::move(dims), std::move(maps));
}

template <class K>
json module_to_json(const pmodule<K>& m) {
    const poset& q = m.base();
    json j;
    j["poset"] = poset_to_json(q);
    json dims = json::object();
    for (std::size_t a = 0; a < q.size(); ++a) dims[q.element(a)] = m.dim(a);
    j["dims"] = dims;
    json maps = json::object();
    for (std::size_t ci = 0; ci < q.covers().size(); ++ci) {
        auto [a, b] = q.covers()[ci];
        if (m.dim(a) == 0 || m.dim(b) == 0) continue;
        maps[q.element(a) + "<" + q.element(b)] = matrix_to_json(m.cover_map(ci));
    }
    j["maps"] = maps;
    return j;
}

inline json invariant_to_json(const invariant_vector& v) {
    json j = json::object();
    for (std::size_t i = 0; i < v.size(); ++i) j[v.keys()[i]] = v[i];
    return j;
}

inline invariant_vector invariant_from_json(const json& j) {
    if (!j.is_object()) throw format_error("invariant vector: expected an object key -> int");
    std::vector<std::string> keys;
    std::vector<long long> values;
    for (const auto& [k, v] : j.items()) {
        if (!v.is_number_integer()) throw format_error("invariant vector: value of '" + k + "' is not an integer");
        keys.push_back(k);
        values.push_back(v.get<long long>());
    }
    return invariant_vector(std::move(keys), std::move(values));
}

}  // namespace posetinv
