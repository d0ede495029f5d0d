#include "bc/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "bc/convex.hpp"
#include "bc/corpus.hpp"
#include "bc/graph.hpp"
#include "bc/hypergraph.hpp"
#include "bc/io.hpp"
#include "bc/lattice.hpp"
#include "bc/matroid.hpp"
#include "bc/number.hpp"
#include "bc/verify.hpp"
#include "bc/whitney.hpp"

namespace bc::cli {

using nlohmann::json;

namespace {

struct Flags {
    std::string kind;
    std::string file;
    std::string method;
    std::uint64_t seed = 7;
    bool seed_given = false;
    int cap_elements = kDefaultEnumerationCap;
    bool modified_domain = false;
    std::string permute_order;
    bool pretty = false;
    std::string circuits;
    std::string h = "identity";
    double s = 2;
    std::uint64_t prime_bound = 10000;
    std::uint64_t n = 0;
    bool n_given = false;
    std::string variant;
    bool atoms_mode = false;
    // generate
    int m = 0;
    int r = 0;
    double p = 0.5;
    std::string name;
    // verify
    bool inject_mutant = false;
    bool serial = false;
};

// Exits with a JSON report on stdout; the exit code is chosen by the caller.
struct Reported : std::runtime_error {
    json report;
    int code;
    Reported(json r, int c, const std::string& msg) : std::runtime_error(msg), report(std::move(r)), code(c) {}
};

json num12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return json::parse(buf);
}

std::string big(const BigInt& b) { return b.get_str(); }

json counts_json(const std::vector<std::uint64_t>& v) {
    json a = json::array();
    for (auto x : v) a.push_back(x);
    return a;
}

std::vector<int> parse_permutation(const std::string& text, int n, const std::string& what) {
    std::vector<int> perm;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            perm.push_back(v);
        } catch (const std::exception&) {
            throw SchemaError("--permute-order: '" + tok + "' is not an index");
        }
    }
    if (static_cast<int>(perm.size()) != n)
        throw SchemaError("--permute-order lists " + std::to_string(perm.size()) + " indices, the " + what + " has " +
                          std::to_string(n));
    std::vector<char> seen(n, 0);
    for (int v : perm) {
        if (v < 0 || v >= n || seen[v]) throw SchemaError("--permute-order is not a permutation of 0.." + std::to_string(n - 1));
        seen[v] = 1;
    }
    return perm;
}

// perm[i] = old index placed at position i; returns old -> new.
std::vector<int> inverse(const std::vector<int>& perm) {
    std::vector<int> inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
    return inv;
}

void cap_check(int size, const Flags& f, const std::string& what) { require_cap(size, f.cap_elements, what); }

const std::string& need_file(const Flags& f) {
    if (f.file.empty()) throw SchemaError("compute " + f.kind + " needs an instance file");
    return f.file;
}

std::string base_dir(const std::string& file) {
    auto p = std::filesystem::path(file).parent_path();
    return p.empty() ? "." : p.string();
}

template <class E>
E pick(const std::string& given, const std::string& fallback, const std::vector<std::pair<std::string, E>>& table,
       const std::string& what) {
    const std::string& key = given.empty() ? fallback : given;
    for (const auto& [name, value] : table)
        if (name == key) return value;
    std::string opts;
    for (const auto& [name, value] : table) opts += (opts.empty() ? "" : "|") + name;
    throw SchemaError("unknown " + what + " '" + key + "' (expected " + opts + ")");
}

std::string method_name(const std::string& given, const std::string& fallback) { return given.empty() ? fallback : given; }

// -------------------------------------------------------------------- core

// Adds e whenever some circuit C ∋ e has C \ {e} ⊆ A. No order enters, so a
// permuted instance describes the same f.
Mask closure_under(Mask a, const std::vector<Mask>& circuits) {
    while (true) {
        Mask next = a;
        for (Mask c : circuits) {
            const Mask missing = c & ~a;
            if (popcount(missing) == 1) next |= missing;
        }
        if (next == a) return a;
        a = next;
    }
}

json compute_core(const Flags& f) {
    auto inst = io::parse_core(io::load_json(need_file(f)));
    const int n = static_cast<int>(inst.elements.size());
    cap_check(n, f, "core ground set");
    if (!f.permute_order.empty()) {
        auto perm = parse_permutation(f.permute_order, n, "ground set");
        auto inv = inverse(perm);
        std::vector<std::string> labels;
        for (int p : perm) labels.push_back(inst.elements[p]);
        for (auto& c : inst.circuits) c = permute_mask(c, inv);
        if (inst.broken)
            for (auto& b : *inst.broken) b = permute_mask(b, inv);
        // Tables refer to labels, so they are re-read against the new order below.
        inst.elements = labels;
    }

    const auto& fn = inst.function;
    const std::string fkind = fn["kind"].get<std::string>();
    auto read_table = [&](const char* field) {
        std::map<Mask, BigInt> table;
        if (!fn.contains(field)) return table;
        if (!fn[field].is_array()) throw SchemaError(std::string("function \"") + field + "\" must be an array");
        for (const auto& entry : fn[field]) {
            if (!entry.is_object() || !entry.contains("set") || !entry.contains("value") || entry.size() != 2)
                throw SchemaError(std::string("function \"") + field + "\" entries are {\"set\", \"value\"}");
            table[io::parse_subset(inst.elements, entry["set"], "function table")] =
                io::parse_bigint(entry["value"], "function value");
        }
        return table;
    };
    BigInt fallback = fn.contains("default") ? io::parse_bigint(fn["default"], "function default") : BigInt(0);
    std::function<BigInt(Mask)> value;
    std::string cancellation;
    if (fkind == "closure") {
        for (const auto& [key, v] : fn.items())
            if (key != "kind" && key != "gamma" && key != "default")
                throw SchemaError("unknown field \"" + key + "\" in closure function");
        // f(A) = (-1)^|A| γ(h(A)) with h the closure under every circuit.
        auto gamma = read_table("gamma");
        value = [gamma, fallback, circuits = inst.circuits](Mask a) {
            auto it = gamma.find(closure_under(a, circuits));
            BigInt g = it == gamma.end() ? fallback : it->second;
            return parity_sign(a) < 0 ? BigInt(-g) : g;
        };
        cancellation = "by-construction";
    } else if (fkind == "table") {
        for (const auto& [key, v] : fn.items())
            if (key != "kind" && key != "values" && key != "default")
                throw SchemaError("unknown field \"" + key + "\" in table function");
        auto table = read_table("values");
        value = [table, fallback](Mask a) {
            auto it = table.find(a);
            return it == table.end() ? fallback : it->second;
        };
        auto report = verify_cancellation<BigInt>(n, inst.circuits, value);
        if (!report.ok) {
            json r{{"kind", "core-sum"},
                   {"error", "cancellation"},
                   {"circuit", io::subset_json(inst.elements, report.circuit)},
                   {"subset", io::subset_json(inst.elements, report.subset)}};
            throw Reported(r, kPrecondition,
                           "cancellation condition f(A) + f(A \\ {max C}) = 0 fails for circuit " +
                               r["circuit"].dump() + " at A = " + r["subset"].dump());
        }
        cancellation = "verified";
    } else {
        throw SchemaError("unknown function kind '" + fkind + "' (expected closure|table)");
    }

    std::vector<Mask> broken;
    if (inst.broken) {
        broken = *inst.broken;
        if (!is_broken_subfamily(broken, inst.circuits))
            throw PreconditionViolation("\"broken\" contains a set that is not C \\ {max C} for any given circuit C");
    } else {
        broken = broken_sets(derive_broken_circuits(inst.circuits, n));
    }
    BigInt full = sum_full<BigInt>(n, value, Exec::parallel, f.cap_elements);
    BigInt pruned = sum_pruned<BigInt>(n, broken, value, Exec::parallel, f.cap_elements);
    auto counts = enumerate_avoiding(n, broken, Exec::parallel, f.cap_elements);
    std::uint64_t avoiding = 0;
    for (auto c : counts) avoiding += c;
    json bs = json::array();
    for (Mask b : broken) bs.push_back(io::subset_json(inst.elements, b));
    json labels = json::array();
    for (const auto& l : inst.elements) labels.push_back(l);
    return {{"kind", "core-sum"}, {"elements", labels},       {"broken", bs},           {"cancellation", cancellation},
            {"full", big(full)},  {"pruned", big(pruned)},    {"equal", full == pruned}, {"avoiding_subsets", avoiding}};
}

// ------------------------------------------------------------------- graph

Graph load_graph(const Flags& f, bool edge_order) {
    Graph g = io::parse_graph(io::load_json(need_file(f)));
    if (f.permute_order.empty()) return g;
    if (edge_order) return g.with_edge_order(parse_permutation(f.permute_order, g.edge_count(), "edge list"));
    return g.with_vertex_order(parse_permutation(f.permute_order, g.vertex_count(), "vertex list"));
}

json compute_graph_chromatic(const Flags& f) {
    Graph g = load_graph(f, true);
    cap_check(g.edge_count(), f, "graph edges");
    auto method = pick<ChromaticMethod>(f.method, "broken_circuit",
                                        {{"full", ChromaticMethod::full}, {"broken_circuit", ChromaticMethod::broken_circuit}},
                                        "method");
    auto r = chromatic_polynomial(g, method);
    json out{{"kind", "graph-chromatic"}, {"method", method_name(f.method, "broken_circuit")}, {"polynomial", to_json(r.polynomial)}};
    if (method == ChromaticMethod::broken_circuit) out["b"] = counts_json(r.broken_free_counts);
    return out;
}

json compute_graph_scp(const Flags& f) {
    Graph g = load_graph(f, false);
    cap_check(g.vertex_count(), f, "graph vertices");
    auto method = pick<QMethod>(f.method, "eq6", {{"direct", QMethod::direct}, {"eq5", QMethod::eq5}, {"eq6", QMethod::eq6}},
                                "method");
    if (method == QMethod::direct) cap_check(g.edge_count(), f, "graph edges");
    auto p = q_at_minus1(g, method);
    return {{"kind", "graph-scp"}, {"method", method_name(f.method, "eq6")}, {"x", -1}, {"polynomial", to_json(p, "y")}};
}

json compute_graph_domination(const Flags& f) {
    Graph g = load_graph(f, false);
    cap_check(g.vertex_count(), f, "graph vertices");
    auto method = pick<DominationMethod>(
        f.method, "bnh_pruned",
        {{"direct", DominationMethod::direct}, {"bnh", DominationMethod::bnh}, {"bnh_pruned", DominationMethod::bnh_pruned}},
        "method");
    auto p = domination_polynomial(g, method);
    return {{"kind", "graph-domination"}, {"method", method_name(f.method, "bnh_pruned")}, {"polynomial", to_json(p)}};
}

// -------------------------------------------------------------- hypergraph

json compute_hypergraph_chromatic(const Flags& f) {
    auto inst = io::parse_hypergraph(io::load_json(need_file(f)));
    Hypergraph h = inst.hypergraph;
    cap_check(h.edge_count(), f, "hypergraph edges");
    std::optional<std::vector<Mask>> circuits = inst.circuits;
    if (!f.permute_order.empty()) {
        auto perm = parse_permutation(f.permute_order, h.edge_count(), "edge list");
        auto inv = inverse(perm);
        std::vector<Mask> edges;
        for (int p : perm) edges.push_back(h.edge(p));
        h = Hypergraph(h.vertices(), edges);
        if (circuits)
            for (auto& c : *circuits) c = permute_mask(c, inv);
    }
    std::string source = f.circuits;
    if (source.empty()) source = circuits ? "file" : "none";
    if (source.rfind("tight:", 0) == 0) {
        int l = 0;
        try {
            l = std::stoi(source.substr(6));
        } catch (const std::exception&) {
            throw SchemaError("--circuits tight:l needs an integer l");
        }
        circuits = tight_cycles(h, l);
    } else if (source == "rect") {
        circuits = rectangle_circuits(h);
    } else if (source == "file") {
        if (!circuits) throw SchemaError("--circuits file: the instance has no \"circuits\" field");
    } else if (source.rfind("file:", 0) == 0) {
        json j = io::load_json(source.substr(5));
        if (j.is_object()) {
            io::check_fields(j, {"circuits"}, "circuits");
            j = j.at("circuits");
        }
        circuits = io::parse_edge_circuits(j, h.edge_count());
    } else if (source != "none") {
        throw SchemaError("unknown --circuits '" + source + "' (expected tight:l|rect|file|file:path)");
    }

    auto method = pick<HyperMethod>(f.method, circuits ? "restricted" : "full",
                                    {{"full", HyperMethod::full}, {"restricted", HyperMethod::restricted}}, "method");
    if (method == HyperMethod::restricted && !circuits)
        throw SchemaError("--method restricted needs circuits (--circuits tight:l|rect|file|file:path)");
    json out{{"kind", "hypergraph-chromatic"}, {"method", method == HyperMethod::full ? "full" : "restricted"}};
    if (circuits) {
        json cs = json::array();
        for (Mask c : *circuits) cs.push_back(elements_of(c));
        out["circuits"] = cs;
        const bool a = validate_condition_a(*circuits, h);
        const bool b = !a && validate_condition_b(*circuits, h);
        out["condition"] = a ? json("a") : b ? json("b") : json(nullptr);
    }
    out["polynomial"] = to_json(hypergraph_chromatic(h, method, circuits ? *circuits : std::vector<Mask>{}));
    return out;
}

// ----------------------------------------------------------------- matroid

Matroid load_matroid(const Flags& f) {
    const auto& file = need_file(f);
    Matroid m = io::parse_matroid(io::load_json(file), base_dir(file));
    cap_check(m.size(), f, "matroid ground set");
    if (f.permute_order.empty()) return m;
    auto perm = parse_permutation(f.permute_order, m.size(), "ground set");
    auto inv = inverse(perm);
    std::vector<Mask> circuits;
    for (Mask c : m.circuits()) circuits.push_back(permute_mask(c, inv));
    return Matroid(m.ground().permuted(perm), circuits);
}

json compute_matroid_characteristic(const Flags& f) {
    Matroid m = load_matroid(f);
    auto method = pick<CharMethod>(f.method, "heron", {{"full", CharMethod::full}, {"heron", CharMethod::heron}}, "method");
    auto r = characteristic_polynomial(m, method);
    json out{{"kind", "matroid-characteristic"}, {"method", method_name(f.method, "heron")}, {"polynomial", to_json(r.polynomial)}};
    if (method == CharMethod::heron) out["b"] = counts_json(r.broken_free_counts);
    return out;
}

json compute_matroid_beta(const Flags& f) {
    Matroid m = load_matroid(f);
    auto method = pick<BetaMethod>(
        f.method, "broken_circuit",
        {{"full", BetaMethod::full}, {"broken_circuit", BetaMethod::broken_circuit}, {"derivative", BetaMethod::derivative}},
        "method");
    return {{"kind", "matroid-beta"}, {"method", method_name(f.method, "broken_circuit")}, {"beta", big(beta_invariant(m, method))}};
}

// ----------------------------------------------------------------- lattice

json labels_of(const FiniteLattice& l, const std::vector<int>& idx) {
    json a = json::array();
    for (int i : idx) a.push_back(l.labels()[i]);
    return a;
}

json compute_lattice_mobius(const Flags& f) {
    auto inst = io::parse_lattice(io::load_json(need_file(f)));
    const auto& l = inst.lattice;
    const std::string method = method_name(f.method, "recursive");
    BigInt mu;
    if (method == "recursive") {
        mu = mobius_of_lattice(l);
    } else if (method == "crosscut") {
        mu = rota_crosscut(l, l.atoms());
    } else if (method == "blass-sagan") {
        auto atoms = l.atoms();
        mu = blass_sagan_mu(l, Crosscut{atoms, FinitePoset::antichain(static_cast<int>(atoms.size()))}).restricted;
    } else {
        throw SchemaError("unknown method '" + method + "' (expected recursive|crosscut|blass-sagan)");
    }
    return {{"kind", "lattice-mobius"}, {"method", method}, {"mu", big(mu)}};
}

json compute_lattice_crosscut(const Flags& f) {
    auto inst = io::parse_lattice(io::load_json(need_file(f)));
    const auto& l = inst.lattice;
    json out{{"kind", "lattice-crosscut"}, {"mu", big(mobius_of_lattice(l))}};
    std::vector<std::vector<int>> cuts;
    if (inst.crosscut) cuts.push_back(*inst.crosscut);
    else cuts = enumerate_crosscuts(l);
    json arr = json::array();
    for (const auto& c : cuts) arr.push_back({{"elements", labels_of(l, c)}, {"sum", big(rota_crosscut(l, c))}});
    out["crosscuts"] = arr;
    return out;
}

json compute_lattice_blass_sagan(const Flags& f) {
    auto inst = io::parse_lattice(io::load_json(need_file(f)));
    const auto& l = inst.lattice;
    std::vector<int> cut = inst.crosscut ? *inst.crosscut : l.atoms();
    const int k = static_cast<int>(cut.size());
    Crosscut c{cut, FinitePoset::from_less_pairs(k, inst.crosscut_order)};
    auto fam = blass_sagan_B(l, c, f.atoms_mode);
    auto r = blass_sagan_mu(l, c, nullptr, f.atoms_mode);
    json broken = json::array();
    for (std::size_t i = 0; i < fam.broken.size(); ++i) {
        std::vector<int> members;
        for (int e : elements_of(fam.broken[i])) members.push_back(cut[e]);
        broken.push_back({{"set", labels_of(l, members)}, {"witness", l.labels()[cut[fam.witness[i]]]}});
    }
    std::vector<int> ext;
    for (int e : fam.extension) ext.push_back(cut[e]);
    return {{"kind", "lattice-blass-sagan"},
            {"crosscut", labels_of(l, cut)},
            {"extension", labels_of(l, ext)},
            {"atoms_mode", f.atoms_mode},
            {"broken", broken},
            {"restricted", big(r.restricted)},
            {"crosscut_sum", big(r.crosscut)},
            {"mu", big(r.mu)}};
}

// ------------------------------------------------------------------ number

std::uint64_t need_n(const Flags& f) {
    if (!f.n_given) throw SchemaError("compute " + f.kind + " needs --n");
    if (f.n < 1 || f.n > kNumberCap) throw CapExceeded("--n must lie in [1, " + std::to_string(kNumberCap) + "]");
    return f.n;
}

json compute_number_mobius(const Flags& f) {
    const auto n = need_n(f);
    auto variant = pick<GcdVariant>(f.variant, "gcd", {{"gcd", GcdVariant::eq12}, {"lcm", GcdVariant::eq19}}, "variant");
    auto r = gcd_expansion(n, variant, f.modified_domain);
    json chain = json::array();
    for (const auto& c : r.chain) chain.push_back(big(c));
    return {{"kind", "number-mobius"},   {"n", n},           {"variant", method_name(f.variant, "gcd")},
            {"modified_domain", r.modified_domain}, {"value", big(r.value)}, {"reduced", big(r.reduced)},
            {"chain", chain},            {"mu", big(r.mu)}};
}

TotientMethod totient_method(const Flags& f) {
    return pick<TotientMethod>(f.method, "subset_sum",
                               {{"product", TotientMethod::product},
                                {"divisor_sum", TotientMethod::divisor_sum},
                                {"subset_sum", TotientMethod::subset_sum}},
                               "method");
}

json compute_number_totient(const Flags& f) {
    const auto n = need_n(f);
    auto h = MultiplicativeFunction::parse(f.h);
    Rational v = totient_h(n, h, totient_method(f));
    return {{"kind", "number-totient"}, {"n", n}, {"h", h.name()}, {"method", method_name(f.method, "subset_sum")},
            {"value", rational_string(v)}};
}

json compute_number_dirichlet(const Flags& f) {
    const auto n = need_n(f);
    auto h = MultiplicativeFunction::parse(f.h);
    Rational v = dirichlet_inverse_totient(n, h, totient_method(f));
    return {{"kind", "number-dirichlet-inverse"}, {"n", n}, {"h", h.name()},
            {"method", method_name(f.method, "subset_sum")}, {"value", rational_string(v)}};
}

json compute_number_zeta(const Flags& f) {
    if (f.prime_bound < 2 || f.prime_bound > kNumberCap)
        throw CapExceeded("--prime-bound must lie in [2, " + std::to_string(kNumberCap) + "]");
    if (!(f.s > 1)) throw PreconditionViolation("the Euler product needs s > 1");
    auto z = zeta_reciprocal(f.s, f.prime_bound);
    json out{{"kind", "number-zeta"},  {"s", num12(f.s)},   {"prime_bound", f.prime_bound},
             {"primes", z.primes.size()}, {"value", num12(z.value)}};
    if (f.s == 2) {
        out["reference"] = num12(z.reference);
        out["error"] = num12(z.error);
    }
    return out;
}

json compute_number_complex(const Flags& f) {
    const auto n = need_n(f);
    auto kind = pick<ComplexKind>(f.variant, "S", {{"S", ComplexKind::S}, {"T", ComplexKind::T}}, "variant");
    auto c = build_complex(n, kind);
    json faces = json::array();
    for (Mask m : c.faces) {
        json face = json::array();
        for (int i : elements_of(m)) face.push_back(c.vertices[i]);
        faces.push_back(face);
    }
    return {{"kind", "number-complex"},
            {"n", n},
            {"variant", method_name(f.variant, "S")},
            {"vertices", c.vertices},
            {"faces", faces},
            {"dimension", c.dimension()},
            {"euler", big(c.euler_characteristic())},
            {"bonferroni", bonferroni_check(c)},
            {"star_isomorphic", complexes_isomorphic_by_star(n)}};
}

// ---------------------------------------------------------------- geometry

json compute_geometry_verify(const Flags& f) {
    auto g = io::parse_geometry(io::load_json(need_file(f)));
    const int n = static_cast<int>(g.elements.size());
    json out{{"kind", "geometry-verify"}};
    auto fail = [&](const std::string& axiom, json witness) {
        out["convex"] = false;
        out["failed_axiom"] = axiom;
        out["witness"] = std::move(witness);
        throw Reported(out, kVerifyFailed, "not a convex geometry: " + axiom + " fails at " + out["witness"].dump());
    };
    std::set<Mask> closed(g.closed.begin(), g.closed.end());
    if (!closed.count(full_mask(n))) fail("ground-closed", io::subset_json(g.elements, full_mask(n)));
    for (Mask a : closed)
        for (Mask b : closed)
            if (!closed.count(a & b))
                fail("intersection-closed", {{"a", io::subset_json(g.elements, a)}, {"b", io::subset_json(g.elements, b)}});
    ClosureSystem cs(n, g.closed);
    if (auto bad = find_basis_failure(cs))
        fail("unique-basis", {{"closed_set", io::subset_json(g.elements, bad->closed_set)},
                              {"extreme_points", io::subset_json(g.elements, bad->extreme)}});
    ConvexGeometry cg(cs);
    out["convex"] = true;
    out["failed_axiom"] = nullptr;
    out["closed_sets"] = cs.closed_sets().size();
    out["free_sets"] = cg.free_sets().size();
    out["euler"] = big(euler_characteristic_free(cg));
    return out;
}

const std::map<std::string, json (*)(const Flags&)>& compute_table() {
    static const std::map<std::string, json (*)(const Flags&)> t{
        {"core-sum", compute_core},
        {"graph-chromatic", compute_graph_chromatic},
        {"graph-scp", compute_graph_scp},
        {"graph-domination", compute_graph_domination},
        {"hypergraph-chromatic", compute_hypergraph_chromatic},
        {"matroid-characteristic", compute_matroid_characteristic},
        {"matroid-beta", compute_matroid_beta},
        {"lattice-mobius", compute_lattice_mobius},
        {"lattice-crosscut", compute_lattice_crosscut},
        {"lattice-blass-sagan", compute_lattice_blass_sagan},
        {"number-mobius", compute_number_mobius},
        {"number-totient", compute_number_totient},
        {"number-dirichlet-inverse", compute_number_dirichlet},
        {"number-zeta", compute_number_zeta},
        {"number-complex", compute_number_complex},
        {"geometry-verify", compute_geometry_verify},
    };
    return t;
}

// ---------------------------------------------------------------- generate

Graph named_graph(const std::string& name) {
    if (name.size() < 2) throw SchemaError("unknown graph name '" + name + "'");
    int k = 0;
    try {
        std::size_t used = 0;
        k = std::stoi(name.substr(1), &used);
        if (used != name.size() - 1) throw std::invalid_argument(name);
    } catch (const std::exception&) {
        throw SchemaError("unknown graph name '" + name + "' (expected K<n>, P<n>, C<n>, S<k>, E<n>)");
    }
    if (k < 1 || k > kMaxGroundSize) throw CapExceeded("graph size out of range");
    switch (name[0]) {
        case 'K': return complete_graph(k);
        case 'P': return path_graph(k);
        case 'C': return cycle_graph(k);
        case 'S': return star_graph(k);
        case 'E': return empty_graph(k);
    }
    throw SchemaError("unknown graph name '" + name + "' (expected K<n>, P<n>, C<n>, S<k>, E<n>)");
}

json generate(const Flags& f) {
    std::mt19937_64 rng(f.seed);
    json out;
    const int n = static_cast<int>(f.n);
    if (f.kind == "grid") {
        auto g = grid_rectangle_hypergraph(f.m, n);
        out = io::hypergraph_json(g.hypergraph, &g.circuits);
    } else if (f.kind == "complete-hypergraph") {
        out = io::hypergraph_json(complete_uniform_hypergraph(n, f.r));
    } else if (f.kind == "uniform-matroid") {
        uniform_matroid(f.r, n);  // validates r and n
        out = {{"kind", "matroid"}, {"uniform", {f.r, n}}};
    } else if (f.kind == "boolean-lattice") {
        out = io::lattice_json(boolean_lattice(n));
    } else if (f.kind == "divisor-lattice") {
        out = io::lattice_json(divisor_lattice(f.n));
    } else if (f.kind == "partition-lattice") {
        out = io::lattice_json(partition_lattice(n));
    } else if (f.kind == "random-graph") {
        if (f.p < 0 || f.p > 1) throw SchemaError("--p must lie in [0, 1]");
        require_cap(n, kMaxGroundSize, "graph vertices");
        out = io::graph_json(random_graph(n, f.p, rng));
    } else if (f.kind == "graph") {
        out = io::graph_json(named_graph(f.name));
    } else if (f.kind == "geometry") {
        const std::string v = f.variant.empty() ? "points" : f.variant;
        require_cap(n, kClosureCap, "geometry elements");
        ClosureSystem cs = v == "interval"   ? interval_geometry(n)
                           : v == "discrete" ? discrete_geometry(n)
                           : v == "ideals"   ? order_ideal_geometry(random_poset(n, f.p, rng))
                           : v == "points"   ? random_point_geometry(n, rng)
                                             : throw SchemaError("unknown geometry variant '" + v +
                                                                 "' (expected interval|discrete|ideals|points)");
        std::vector<std::string> labels;
        for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
        out = io::geometry_json(labels, cs);
    } else if (f.kind == "core") {
        require_cap(n, kDefaultEnumerationCap, "core elements");
        if (n < 2) throw PreconditionViolation("core instance needs --n >= 2");
        std::vector<std::string> labels;
        for (int i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
        std::vector<Mask> circuits;
        const int m = std::uniform_int_distribution<int>(1, 4)(rng);
        for (int i = 0; i < m; ++i) {
            Mask c = 0;
            const int size = std::uniform_int_distribution<int>(2, std::min(n, 4))(rng);
            while (popcount(c) < size) c |= bit(std::uniform_int_distribution<int>(0, n - 1)(rng));
            circuits.push_back(c);
        }
        std::sort(circuits.begin(), circuits.end());
        circuits.erase(std::unique(circuits.begin(), circuits.end()), circuits.end());
        json cs = json::array(), gamma = json::array();
        for (Mask c : circuits) cs.push_back(io::subset_json(labels, c));
        std::set<Mask> used;
        for (int i = 0; i < 4; ++i) {
            Mask a = closure_under(static_cast<Mask>(rng()) & full_mask(n), circuits);
            if (!used.insert(a).second) continue;
            gamma.push_back({{"set", io::subset_json(labels, a)}, {"value", std::uniform_int_distribution<int>(-9, 9)(rng)}});
        }
        out = {{"kind", "core"},
               {"elements", labels},
               {"circuits", cs},
               {"broken", "all"},
               {"function", {{"kind", "closure"}, {"default", 1}, {"gamma", gamma}}}};
    } else {
        throw SchemaError("unknown generate kind '" + f.kind +
                          "' (expected grid|complete-hypergraph|uniform-matroid|boolean-lattice|divisor-lattice|"
                          "partition-lattice|random-graph|graph|geometry|core)");
    }
    out["seed"] = f.seed;
    return out;
}

// ------------------------------------------------------------------ driver

const std::vector<std::string> kGroups{"core", "graph", "hypergraph", "matroid", "lattice", "number", "geometry"};

// `graph chromatic k3.json` is shorthand for `compute graph-chromatic k3.json`.
std::vector<std::string> expand_alias(std::vector<std::string> args) {
    if (args.size() >= 2 && std::find(kGroups.begin(), kGroups.end(), args[0]) != kGroups.end()) {
        std::string kind = args[0] == "core" && args[1] == "sum" ? "core-sum" : args[0] + "-" + args[1];
        std::vector<std::string> out{"compute", kind};
        out.insert(out.end(), args.begin() + 2, args.end());
        return out;
    }
    return args;
}

void emit(std::ostream& out, const json& j, bool pretty) { out << (pretty ? j.dump(2) : j.dump()) << "\n"; }

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    auto args = expand_alias(raw_args);
    Flags f;
    CLI::App app{"Broken-circuit reductions: compute, verify, generate", "bc"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    auto* compute = app.add_subcommand("compute", "Run one computation on an instance and print JSON");
    compute->set_help_flag("--help", "Print this help message and exit");
    compute->add_option("kind", f.kind, "Computation kind, e.g. graph-chromatic")->required();
    compute->add_option("file", f.file, "Instance JSON file");
    compute->add_option("--method", f.method, "Method of the chosen kind");
    compute->add_option("--seed", f.seed, "Seed (recorded in the output)");
    compute->add_option("--cap-elements", f.cap_elements, "Cap on the enumerated ground set")->check(CLI::Range(1, 32));
    compute->add_flag("--modified-domain", f.modified_domain, "Allow prime n by dropping the excluded end");
    compute->add_option("--permute-order", f.permute_order, "Comma-separated new order of the ground elements");
    compute->add_flag("--json", f.pretty, "Pretty-print the JSON result");
    compute->add_option("--circuits", f.circuits, "Hypergraph circuits: tight:l | rect | file | file:path");
    compute->add_option("--h", f.h, "Multiplicative function: identity|power:k|liouville|mobius|totient");
    compute->add_option("--s", f.s, "Exponent s of the zeta product");
    compute->add_option("--prime-bound", f.prime_bound, "Largest prime of the zeta product");
    compute->add_option("--n", f.n, "Integer n for the number kinds");
    compute->add_option("--variant", f.variant, "gcd|lcm for number-mobius, S|T for number-complex");
    compute->add_flag("--atoms-mode", f.atoms_mode, "Drop the meet condition (atom crosscuts only)");

    std::string target = "all";
    auto* verify = app.add_subcommand("verify", "Run engine-versus-oracle checks");
    verify->add_option("target", target, "all, a module name, or a single check name");
    verify->add_option("--seed", f.seed, "Seed for the generated corpora");
    verify->add_flag("--inject-mutant", f.inject_mutant, "Add a set that is not a broken circuit (negative control)");
    verify->add_flag("--serial", f.serial, "Run checks one after another");
    verify->add_flag("--json", f.pretty, "Pretty-print the report");
    verify->add_flag("--list", "List check names and exit");

    auto* gen = app.add_subcommand("generate", "Write a generated instance as JSON");
    gen->add_option("kind", f.kind, "Instance kind, e.g. grid")->required();
    gen->add_option("--seed", f.seed, "Seed for random generators (recorded)");
    gen->add_option("--n", f.n, "Size parameter");
    gen->add_option("--m", f.m, "Grid rows");
    gen->add_option("--r", f.r, "Rank or uniformity");
    gen->add_option("--p", f.p, "Edge probability or poset density");
    gen->add_option("--name", f.name, "Named graph: K<n>, P<n>, C<n>, S<k>, E<n>");
    gen->add_option("--variant", f.variant, "Geometry: interval|discrete|ideals|points");
    gen->add_flag("--json", f.pretty, "Pretty-print the instance");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kSchemaError;
    }
    f.n_given = compute->count("--n") > 0;

    try {
        if (*compute) {
            auto it = compute_table().find(f.kind);
            if (it == compute_table().end()) {
                std::string kinds;
                for (const auto& [k, fn] : compute_table()) kinds += " " + k;
                throw SchemaError("unknown compute kind '" + f.kind + "'; expected one of:" + kinds);
            }
            emit(out, it->second(f), f.pretty);
            return kOk;
        }
        if (*gen) {
            if (gen->count("--n") == 0 && f.kind != "graph") throw SchemaError("generate " + f.kind + " needs --n");
            emit(out, generate(f), f.pretty);
            return kOk;
        }
        if (verify->count("--list")) {
            for (const auto& name : verify::check_names(target)) out << name << "\n";
            return kOk;
        }
        verify::Options opts;
        opts.seed = f.seed;
        opts.inject_mutant = f.inject_mutant;
        opts.parallel_checks = !f.serial;
        auto results = verify::run(target, opts);
        emit(out, verify::to_json(results, target, opts), f.pretty);
        bool ok = true;
        for (const auto& r : results) {
            if (r.status == verify::Status::fail) {
                ok = false;
                err << "FAIL " << r.name << ": " << r.witness << "\n";
            }
        }
        return ok ? kOk : kVerifyFailed;
    } catch (const Reported& e) {
        emit(out, e.report, f.pretty);
        err << "error: " << e.what() << "\n";
        return e.code;
    } catch (const SchemaError& e) {
        err << "schema error: " << e.what() << "\n";
        return kSchemaError;
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << "\n";
        return kCapExceeded;
    } catch (const PreconditionViolation& e) {
        err << "precondition violated: " << e.what() << "\n";
        return kPrecondition;
    } catch (const nlohmann::json::exception& e) {
        err << "schema error: " << e.what() << "\n";
        return kSchemaError;
    }
}

}  // namespace bc::cli
