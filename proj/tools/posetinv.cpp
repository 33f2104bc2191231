#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "posetinv/posetinv.hpp"

namespace pi = posetinv;
using pi::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_domain = 2;
constexpr int exit_format = 3;
constexpr int exit_mismatch = 4;

struct run_config {
    std::string field = "Q";
    std::uint64_t seed = pi::suite::default_seed;
    std::size_t threads = 0;
    std::string format = "table";
};

pi::poset_ptr load_poset(const std::string& arg) {
    if (pi::is_template_name(arg)) return pi::template_poset(pi::canonical_template_name(arg));
    for (const char* kind : {"grid:", "staircase:"}) {
        const std::string prefix = kind;
        if (arg.rfind(prefix, 0) != 0) continue;
        const auto body = arg.substr(prefix.size());
        const auto x = body.find('x');
        if (x == std::string::npos) throw pi::format_error("'" + arg + "': expected " + prefix + "NxM");
        std::size_t n = 0, m = 0;
        try {
            n = std::stoul(body.substr(0, x));
            m = std::stoul(body.substr(x + 1));
        } catch (const std::exception&) {
            throw pi::format_error("'" + arg + "': expected " + prefix + "NxM");
        }
        return prefix == "grid:" ? pi::grid(n, m) : pi::staircase_grid(n, m);
    }
    return pi::parse_poset(pi::read_json_file(arg));
}

template <class K>
pi::pmodule<K> load_module(const std::string& path, const pi::poset_ptr& context = nullptr) {
    return pi::parse_module<K>(pi::read_json_file(path), context);
}

// Grid posets have elements "i,j"; anything else renders as nullopt.
std::optional<std::string> grid_render(const pi::poset& p, const std::vector<std::size_t>& dims) {
    std::size_t rows = 0, cols = 0;
    std::vector<std::pair<std::size_t, std::size_t>> at(p.size());
    for (std::size_t a = 0; a < p.size(); ++a) {
        const auto& e = p.element(a);
        const auto comma = e.find(',');
        if (comma == std::string::npos) return std::nullopt;
        try {
            at[a] = {std::stoul(e.substr(0, comma)), std::stoul(e.substr(comma + 1))};
        } catch (const std::exception&) {
            return std::nullopt;
        }
        rows = std::max(rows, at[a].first);
        cols = std::max(cols, at[a].second);
    }
    std::vector<std::string> cell(rows * cols, ".");
    for (std::size_t a = 0; a < p.size(); ++a) cell[(at[a].first - 1) * cols + (at[a].second - 1)] = std::to_string(dims[a]);
    std::string out;
    for (std::size_t i = rows; i >= 1; --i) {
        for (std::size_t j = 1; j <= cols; ++j) out += (j > 1 ? " " : "") + cell[(i - 1) * cols + (j - 1)];
        out += "\n";
    }
    return out;
}

template <class K>
void print_module(const pi::pmodule<K>& m, const run_config& cfg) {
    if (cfg.format != "json") {
        if (auto g = grid_render(m.base(), m.dims())) {
            std::cout << *g;
            return;
        }
    }
    std::cout << pi::module_to_json(m).dump(2) << "\n";
}

void print_invariant(const pi::invariant_vector& v, const run_config& cfg) {
    if (cfg.format == "json") {
        std::cout << pi::invariant_to_json(v).dump(2) << "\n";
        return;
    }
    std::vector<std::size_t> order(v.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v.keys()[a] < v.keys()[b]; });
    const char* sep = cfg.format == "csv" ? "," : "\t";
    if (cfg.format == "csv") std::cout << "key,value\n";
    for (auto i : order) std::cout << v.keys()[i] << sep << v[i] << "\n";
}

pi::order_embedding pick_embedding(const pi::poset_ptr& x, const pi::poset_ptr& p, const std::vector<std::string>& map, std::size_t index) {
    if (!map.empty()) {
        std::vector<std::size_t> m(x->size(), p->size());
        for (const auto& item : map) {
            const auto eq = item.find('=');
            if (eq == std::string::npos) throw pi::format_error("--map '" + item + "': expected x=p");
            m[x->index(item.substr(0, eq))] = p->index(item.substr(eq + 1));
        }
        for (std::size_t a = 0; a < m.size(); ++a)
            if (m[a] == p->size()) throw pi::format_error("--map: no image for '" + x->element(a) + "'");
        return pi::make_embedding(x, p, std::move(m));
    }
    auto all = pi::enumerate_embeddings(x, p);
    if (index >= all.size())
        throw pi::ShapeMismatch("embedding index " + std::to_string(index) + " out of range, " + std::to_string(all.size()) + " embeddings");
    return all[index];
}

pi::embedding_family load_family(const std::string& path, const pi::poset_ptr& p) {
    auto j = pi::read_json_file(path);
    if (j.contains("family")) {
        const auto kind = pi::json_string(j["family"], "family");
        if (kind == "rank") return pi::rank_family(p);
        if (kind == "intervals") return pi::interval_family(p);
        if (kind == "short_chains") return pi::short_chain_family(p);
        throw pi::format_error(path + ": unknown family '" + kind + "'");
    }
    if (!j.contains("templates") || !j["templates"].is_array()) throw pi::format_error(path + ": expected 'family' or 'templates'");
    pi::embedding_family fam;
    for (const auto& t : j["templates"]) {
        const auto name = pi::canonical_template_name(pi::json_string(t, "templates"));
        auto x = pi::template_poset(name);
        fam.push_back({x, pi::enumerate_embeddings(x, p), name});
    }
    return fam;
}

// Options shared by the subcommands; filled by CLI11.
struct options {
    std::string source, poset, module, templ, kind = "rank", which = "theta", basis = "rectangles", catalog, out, out_dir;
    std::vector<std::string> map;
    std::size_t index = 0, trials = 200;
    std::vector<int> only;
};

template <class K>
int cmd_embeddings(const options& o, const run_config& cfg) {
    auto x = load_poset(o.source), p = load_poset(o.poset);
    auto e = pi::enumerate_embeddings(x, p);
    if (cfg.format == "json") {
        json out = json::array();
        for (const auto& f : e) {
            json m = json::object();
            for (std::size_t a = 0; a < x->size(); ++a) m[x->element(a)] = p->element(f(a));
            out.push_back(m);
        }
        std::cout << out.dump(2) << "\n";
        return exit_ok;
    }
    std::cout << e.size() << " embeddings\n";
    for (std::size_t k = 0; k < e.size(); ++k) std::cout << "#" << k << "\t" << e[k].describe() << "\n";
    return exit_ok;
}

template <class K>
int cmd_invariant(const options& o, const run_config& cfg) {
    auto p = o.poset.empty() ? nullptr : load_poset(o.poset);
    auto m = load_module<K>(o.module, p);
    pi::invariant_vector v;
    if (o.kind == "dim") v = pi::dim_invariant(m);
    else if (o.kind == "rank") v = pi::rank_invariant(m);
    else if (o.kind == "mult" || o.kind == "dimh") {
        if (o.templ.empty()) throw pi::format_error("--template is required for " + o.kind);
        const auto& c = pi::builtin_catalog<K>(pi::canonical_template_name(o.templ));
        auto e = pi::enumerate_embeddings(c.base, m.base_ptr());
        v = o.kind == "mult" ? pi::mult_inv(e, c, m) : pi::dimh_inv(e, c, m);
    } else if (o.kind == "family-rank") v = pi::family_mult(pi::rank_family(m.base_ptr()), m);
    else if (o.kind == "family-intervals") v = pi::family_mult(pi::interval_family(m.base_ptr()), m);
    else if (o.kind == "family-short-chains") v = pi::family_mult(pi::short_chain_family(m.base_ptr()), m);
    else throw pi::format_error("unknown invariant kind '" + o.kind + "'");
    print_invariant(v, cfg);
    return exit_ok;
}

template <class K>
int cmd_decompose(const options& o, const run_config& cfg) {
    const auto& c = pi::builtin_catalog<K>(pi::canonical_template_name(o.templ));
    auto m = load_module<K>(o.module, c.base);
    auto alpha = pi::mult_from_dimh(c, m);
    if (cfg.format == "json") {
        json out = json::object();
        for (std::size_t i = 0; i < c.size(); ++i)
            if (alpha[i]) out[c.labels[i]] = alpha[i];
        std::cout << out.dump(2) << "\n";
        return exit_ok;
    }
    for (std::size_t i = 0; i < c.size(); ++i)
        if (alpha[i]) std::cout << c.labels[i] << (cfg.format == "csv" ? "," : "\t") << alpha[i] << "\n";
    return exit_ok;
}

template <class K>
int cmd_kan(const options& o, const run_config& cfg) {
    auto x = load_poset(o.source), p = load_poset(o.poset);
    auto f = pick_embedding(x, p, o.map, o.index);
    auto u = o.module.empty() ? pi::sincere_interval<K>(x) : load_module<K>(o.module, x);
    pi::pmodule<K> r = [&] {
        if (o.which == "induce") return pi::induce(f, u);
        if (o.which == "coinduce") return pi::coinduce(f, u);
        if (o.which == "theta") return pi::intermediate_extension(f, u);
        throw pi::format_error("--which must be induce, coinduce or theta");
    }();
    if (!o.out.empty()) {
        std::ofstream out(o.out);
        if (!out) throw pi::format_error("cannot write '" + o.out + "'");
        out << pi::module_to_json(r).dump(2) << "\n";
    }
    std::cerr << "embedding: " << f.describe() << "\n";
    print_module(r, cfg);
    return exit_ok;
}

template <class K>
pi::invariant_basis<K> build_basis(const std::string& spec, const pi::poset_ptr& p) {
    if (spec == "rectangles") return pi::rectangle_basis<K>(p);
    if (spec == "hooks") return pi::hook_basis<K>(p);
    if (spec.rfind("theta:", 0) == 0) {
        const auto& c = pi::builtin_catalog<K>(pi::canonical_template_name(spec.substr(6)));
        return pi::theta_basis(pi::enumerate_embeddings(c.base, p), c, p);
    }
    if (spec.rfind("intervals:", 0) == 0) return pi::interval_family_basis<K>(load_family(spec.substr(10), p), p);
    throw pi::format_error("--basis must be rectangles, hooks, theta:TEMPLATE or intervals:FAMILY.json");
}

template <class K>
int cmd_signed(const options& o, const run_config& cfg) {
    auto p = o.poset.empty() ? nullptr : load_poset(o.poset);
    auto m = load_module<K>(o.module, p);
    auto b = build_basis<K>(o.basis, m.base_ptr());
    auto d = pi::signed_barcode(m, b);
    if (cfg.format == "json") {
        auto side = [&](const auto& terms) {
            json a = json::array();
            for (auto [j, c] : terms) a.push_back({{"member", b.names[j]}, {"multiplicity", c}});
            return a;
        };
        std::cout << json{{"basis", b.invariant}, {"positive", side(d.positive)}, {"negative", side(d.negative)}}.dump(2) << "\n";
        return exit_ok;
    }
    std::cout << pi::render(d, b);
    return exit_ok;
}

template <class K>
int cmd_relproj(const options& o, const run_config& cfg) {
    const auto& c = pi::builtin_catalog<K>(pi::canonical_template_name(o.templ));
    auto p = load_poset(o.poset);
    auto e = pi::enumerate_embeddings(c.base, p);
    auto h = pi::relative_projectives(e, c, p);
    if (!o.out_dir.empty()) std::filesystem::create_directories(o.out_dir);
    for (std::size_t k = 0; k < h.size(); ++k) {
        const auto name = pi::module_name(h[k].module);
        if (!o.out_dir.empty()) {
            char file[32];
            std::snprintf(file, sizeof file, "relproj_%03zu.json", k);
            auto path = std::filesystem::path(o.out_dir) / file;
            std::ofstream out(path);
            if (!out) throw pi::format_error("cannot write '" + path.string() + "'");
            out << pi::module_to_json(h[k].module).dump(2) << "\n";
        }
        if (cfg.format == "json") continue;
        std::cout << "#" << k << "\t" << c.labels[h[k].member] << " along " << e[h[k].embedding].describe() << "\t" << name << "\n";
    }
    if (cfg.format == "json") {
        json out = json::array();
        for (const auto& x : h) out.push_back(pi::module_to_json(x.module));
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << h.size() << " modules\n";
    }
    return exit_ok;
}

template <class K>
int cmd_validate(const options& o, const run_config& cfg) {
    auto c = pi::is_template_name(o.catalog) ? pi::builtin_catalog<K>(pi::canonical_template_name(o.catalog))
                                             : pi::catalog_from_json<K>(pi::read_json_file(o.catalog));
    std::cerr << "seed: " << cfg.seed << "\n";
    auto r = pi::validate_catalog(c, o.trials, cfg.seed);
    if (cfg.format == "json") {
        std::cout << json{{"name", r.name},         {"bricks", r.bricks},     {"distinct", r.distinct}, {"directed", r.directed},
                          {"spanning", r.spanning}, {"trials", r.trials},     {"ok", r.ok()},           {"detail", r.detail}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << r.name << ": " << (r.ok() ? "ok" : "invalid") << " (bricks " << r.bricks << ", distinct " << r.distinct
                  << ", directed " << r.directed << ", spanning " << r.spanning << ", " << r.trials << " trials)";
        if (!r.detail.empty()) std::cout << " " << r.detail;
        std::cout << "\n";
    }
    return r.ok() ? exit_ok : exit_domain;
}

int cmd_suite(const options& o, const run_config& cfg) {
    std::cerr << "seed: " << cfg.seed << "\n";
    auto rs = pi::suite::run(cfg.seed, o.only);
    std::cout << pi::suite::report(rs);
    for (const auto& r : rs)
        if (!r.pass) return exit_mismatch;
    return exit_ok;
}

template <class Fn>
int with_field(const std::string& field, Fn&& fn) {
    if (field == "Q") return fn(pi::rational{});
    if (field == "GF(2)" || field == "2") return fn(pi::fp<2>{});
    if (field == "GF(3)" || field == "3") return fn(pi::fp<3>{});
    if (field == "GF(p)" || field == "GF(2147483629)" || field == "2147483629") return fn(pi::fp<2147483629>{});
    throw pi::format_error("--field must be Q, GF(2), GF(3) or GF(p) with p = 2147483629");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Embedding-based invariants of persistence modules over finite posets"};
    app.require_subcommand(1);
    app.fallthrough();
    run_config cfg;
    options o;
    app.add_option("--field", cfg.field, "Q, GF(2), GF(3) or GF(p)")->capture_default_str();
    app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    app.add_option("--threads", cfg.threads, "worker threads (0: POSETINV_THREADS or hardware)");
    app.add_option("--format", cfg.format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}))->capture_default_str();

    auto* emb = app.add_subcommand("embeddings", "list order embeddings X -> P");
    emb->add_option("--source", o.source, "template name or poset JSON")->required();
    emb->add_option("--poset", o.poset, "template name, grid:NxM or poset JSON")->required();

    auto* inv = app.add_subcommand("invariant", "evaluate an invariant on a module");
    inv->add_option("--kind", o.kind, "dim, rank, mult, dimh, family-rank, family-intervals, family-short-chains")->capture_default_str();
    inv->add_option("--module", o.module, "module JSON")->required();
    inv->add_option("--poset", o.poset, "poset when the module file omits it");
    inv->add_option("--template", o.templ, "template for mult and dimh");

    auto* dec = app.add_subcommand("decompose", "multiplicities of a module over a template catalog");
    dec->add_option("--template", o.templ, "template name")->required();
    dec->add_option("--module", o.module, "module JSON over the template poset")->required();

    auto* kan = app.add_subcommand("kan", "Kan extensions and intermediate extension along an embedding");
    kan->add_option("--source", o.source, "template name or poset JSON")->required();
    kan->add_option("--poset", o.poset, "target poset")->required();
    kan->add_option("--module", o.module, "module over the source (default: sincere interval)");
    kan->add_option("--map", o.map, "x=p image assignments")->take_all();
    kan->add_option("--index", o.index, "embedding index in enumeration order")->capture_default_str();
    kan->add_option("--which", o.which, "induce, coinduce or theta")->capture_default_str();
    kan->add_option("--out", o.out, "write the module JSON here");

    auto* sig = app.add_subcommand("signed-barcode", "signed decomposition over a basis");
    sig->add_option("--module", o.module, "module JSON")->required();
    sig->add_option("--poset", o.poset, "poset when the module file omits it");
    sig->add_option("--basis", o.basis, "rectangles, hooks, theta:TEMPLATE or intervals:FAMILY.json")->capture_default_str();

    auto* rel = app.add_subcommand("relproj", "relative projectives of the exact structure of a template");
    rel->add_option("--template", o.templ, "template name")->required();
    rel->add_option("--poset", o.poset, "target poset")->required();
    rel->add_option("--out-dir", o.out_dir, "write one module JSON per relative projective");

    auto* val = app.add_subcommand("validate", "validate an indecomposable catalog");
    val->add_option("--catalog", o.catalog, "template name or catalog JSON")->required();
    val->add_option("--trials", o.trials, "random spanning trials")->capture_default_str();

    auto* sui = app.add_subcommand("suite", "replay the reference examples");
    sui->add_option("--only", o.only, "criterion numbers")->take_all();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    if (cfg.threads) pi::set_worker_count(cfg.threads);

    try {
        auto run = [&](auto tag) {
            using K = decltype(tag);
            if (*emb) return cmd_embeddings<K>(o, cfg);
            if (*inv) return cmd_invariant<K>(o, cfg);
            if (*dec) return cmd_decompose<K>(o, cfg);
            if (*kan) return cmd_kan<K>(o, cfg);
            if (*sig) return cmd_signed<K>(o, cfg);
            if (*rel) return cmd_relproj<K>(o, cfg);
            return cmd_validate<K>(o, cfg);
        };
        if (*sui) return cmd_suite(o, cfg);
        return with_field(cfg.field, run);
    } catch (const pi::error& e) {
        std::cerr << e.what() << "\n";
        return e.is_format() ? exit_format : exit_domain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_domain;
    }
}
