#include "bc/io.hpp"

#include <filesystem>
#include <fstream>
#include <set>

namespace bc::io {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open instance file '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError("'" + path + "' is not valid JSON: " + e.what());
    }
}

void check_fields(const json& j, const std::vector<std::string>& allowed, const std::string& kind) {
    if (!j.is_object()) throw SchemaError(kind + " instance must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (key == "kind") {
            if (!value.is_string() || value.get<std::string>() != kind)
                throw SchemaError("instance kind is " + value.dump() + ", expected \"" + kind + "\"");
            continue;
        }
        if (key == "seed") {
            if (!value.is_number_unsigned()) throw SchemaError("\"seed\" must be a non-negative integer");
            continue;
        }
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw SchemaError("unknown field \"" + key + "\" in " + kind + " instance");
    }
}

namespace {

const json& need(const json& j, const std::string& key, const std::string& what) {
    if (!j.contains(key)) throw SchemaError(what + " needs a \"" + key + "\" field");
    return j.at(key);
}

std::string label_of(const json& v, const std::string& what) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw SchemaError(what + ": labels must be strings or integers");
}

int index_of(const std::vector<std::string>& labels, const json& v, const std::string& what) {
    const std::string s = label_of(v, what);
    auto it = std::find(labels.begin(), labels.end(), s);
    if (it == labels.end()) throw SchemaError(what + ": unknown label \"" + s + "\"");
    return static_cast<int>(it - labels.begin());
}

std::vector<Mask> parse_subsets(const std::vector<std::string>& labels, const json& arr, const std::string& what) {
    if (!arr.is_array()) throw SchemaError(what + " must be an array of arrays");
    std::vector<Mask> out;
    for (const auto& s : arr) out.push_back(parse_subset(labels, s, what));
    return out;
}

json labels_json(const std::vector<std::string>& labels) {
    json a = json::array();
    for (const auto& l : labels) a.push_back(l);
    return a;
}

}  // namespace

std::vector<std::string> parse_labels(const json& arr, const std::string& what) {
    if (!arr.is_array()) throw SchemaError(what + " must be an array");
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (const auto& v : arr) {
        out.push_back(label_of(v, what));
        if (!seen.insert(out.back()).second) throw SchemaError(what + ": duplicate label \"" + out.back() + "\"");
    }
    return out;
}

Mask parse_subset(const std::vector<std::string>& labels, const json& arr, const std::string& what) {
    if (!arr.is_array()) throw SchemaError(what + ": each set must be an array of labels");
    if (labels.size() > static_cast<std::size_t>(kMaxGroundSize))
        throw CapExceeded(what + ": ground set of " + std::to_string(labels.size()) + " exceeds 32");
    Mask m = 0;
    for (const auto& v : arr) {
        int i = index_of(labels, v, what);
        if (contains(m, i)) throw SchemaError(what + ": repeated label in a set");
        m |= bit(i);
    }
    return m;
}

json subset_json(const std::vector<std::string>& labels, Mask m) {
    json a = json::array();
    for (int i : elements_of(m)) a.push_back(labels.at(i));
    return a;
}

BigInt parse_bigint(const json& v, const std::string& what) {
    if (v.is_number_integer()) return BigInt(std::to_string(v.get<long long>()));
    if (v.is_string()) {
        BigInt b;
        if (b.set_str(v.get<std::string>(), 10) != 0) throw SchemaError(what + ": not an integer string");
        return b;
    }
    throw SchemaError(what + ": expected an integer or an integer string");
}

// ------------------------------------------------------------------- graph

Graph parse_graph(const json& j) {
    check_fields(j, {"vertices", "edges"}, "graph");
    auto labels = parse_labels(need(j, "vertices", "graph"), "graph vertices");
    const auto& e = need(j, "edges", "graph");
    if (!e.is_array()) throw SchemaError("graph edges must be an array");
    std::vector<std::pair<int, int>> edges;
    for (const auto& pair : e) {
        if (!pair.is_array() || pair.size() != 2) throw SchemaError("graph edge must be a pair [u, v]");
        edges.emplace_back(index_of(labels, pair[0], "graph edge"), index_of(labels, pair[1], "graph edge"));
    }
    return Graph(std::move(labels), std::move(edges));
}

json graph_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({g.vertices()[u], g.vertices()[v]});
    return {{"kind", "graph"}, {"vertices", labels_json(g.vertices())}, {"edges", edges}};
}

// -------------------------------------------------------------- hypergraph

std::vector<Mask> parse_edge_circuits(const json& arr, int edge_count) {
    if (!arr.is_array()) throw SchemaError("circuits must be an array of edge-index arrays");
    std::vector<Mask> out;
    for (const auto& c : arr) {
        if (!c.is_array()) throw SchemaError("each circuit must be an array of edge indices");
        Mask m = 0;
        for (const auto& e : c) {
            if (!e.is_number_integer()) throw SchemaError("circuit entries are edge indices");
            int i = e.get<int>();
            if (i < 0 || i >= edge_count) throw SchemaError("circuit edge index " + std::to_string(i) + " out of range");
            m |= bit(i);
        }
        out.push_back(m);
    }
    return out;
}

HypergraphInstance parse_hypergraph(const json& j) {
    check_fields(j, {"vertices", "edges", "circuits"}, "hypergraph");
    auto labels = parse_labels(need(j, "vertices", "hypergraph"), "hypergraph vertices");
    const auto& e = need(j, "edges", "hypergraph");
    if (!e.is_array()) throw SchemaError("hypergraph edges must be an array");
    require_cap(static_cast<int>(e.size()), kMaxGroundSize, "hypergraph edges");
    auto edges = parse_subsets(labels, e, "hypergraph edge");
    HypergraphInstance out{Hypergraph(std::move(labels), std::move(edges)), std::nullopt};
    if (j.contains("circuits")) out.circuits = parse_edge_circuits(j["circuits"], out.hypergraph.edge_count());
    return out;
}

json hypergraph_json(const Hypergraph& h, const std::vector<Mask>* circuits) {
    json edges = json::array();
    for (Mask e : h.edges()) edges.push_back(subset_json(h.vertices(), e));
    json out{{"kind", "hypergraph"}, {"vertices", labels_json(h.vertices())}, {"edges", edges}};
    if (circuits) {
        json cs = json::array();
        for (Mask c : *circuits) cs.push_back(elements_of(c));
        out["circuits"] = cs;
    }
    return out;
}

// ----------------------------------------------------------------- matroid

Matroid parse_matroid(const json& j, const std::string& base_dir) {
    check_fields(j, {"elements", "circuits", "graphic", "uniform"}, "matroid");
    const int forms = j.contains("elements") + j.contains("graphic") + j.contains("uniform");
    if (forms != 1) throw SchemaError("matroid needs exactly one of \"elements\", \"graphic\", \"uniform\"");
    if (j.contains("uniform")) {
        const auto& u = j["uniform"];
        if (!u.is_array() || u.size() != 2 || !u[0].is_number_integer() || !u[1].is_number_integer())
            throw SchemaError("\"uniform\" must be [r, n]");
        if (j.contains("circuits")) throw SchemaError("uniform matroid takes no \"circuits\"");
        return uniform_matroid(u[0].get<int>(), u[1].get<int>());
    }
    if (j.contains("graphic")) {
        if (j.contains("circuits")) throw SchemaError("graphic matroid takes no \"circuits\"");
        const auto& g = j["graphic"];
        if (g.is_string()) {
            std::filesystem::path p(g.get<std::string>());
            if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
            return graphic_matroid(parse_graph(load_json(p.string())));
        }
        return graphic_matroid(parse_graph(g));
    }
    auto labels = parse_labels(j["elements"], "matroid elements");
    require_cap(static_cast<int>(labels.size()), kDefaultEnumerationCap, "matroid elements");
    auto circuits = parse_subsets(labels, need(j, "circuits", "matroid"), "matroid circuit");
    return Matroid(OrderedGroundSet(std::move(labels)), std::move(circuits));
}

json matroid_json(const Matroid& m) {
    json cs = json::array();
    for (Mask c : m.circuits()) cs.push_back(subset_json(m.ground().labels(), c));
    return {{"kind", "matroid"}, {"elements", labels_json(m.ground().labels())}, {"circuits", cs}};
}

// ----------------------------------------------------------------- lattice

LatticeInstance parse_lattice(const json& j) {
    check_fields(j, {"elements", "covers", "crosscut"}, "lattice");
    auto labels = parse_labels(need(j, "elements", "lattice"), "lattice elements");
    const auto& c = need(j, "covers", "lattice");
    if (!c.is_array()) throw SchemaError("lattice covers must be an array");
    std::vector<std::pair<int, int>> covers;
    for (const auto& pair : c) {
        if (!pair.is_array() || pair.size() != 2) throw SchemaError("cover must be a pair [a, b] with a covered by b");
        covers.emplace_back(index_of(labels, pair[0], "lattice cover"), index_of(labels, pair[1], "lattice cover"));
    }
    LatticeInstance out{FiniteLattice(labels, covers), std::nullopt, {}};
    if (j.contains("crosscut")) {
        const auto& x = j["crosscut"];
        if (!x.is_object()) throw SchemaError("crosscut must be an object {\"elements\", \"order\"}");
        for (const auto& [key, value] : x.items())
            if (key != "elements" && key != "order") throw SchemaError("unknown field \"" + key + "\" in crosscut");
        auto members = parse_labels(need(x, "elements", "crosscut"), "crosscut elements");
        std::vector<int> idx;
        for (const auto& m : members) {
            int i = out.lattice.index_of(m);
            if (i < 0) throw SchemaError("crosscut: unknown element \"" + m + "\"");
            idx.push_back(i);
        }
        out.crosscut = idx;
        if (x.contains("order")) {
            if (!x["order"].is_array()) throw SchemaError("crosscut order must be an array of pairs");
            for (const auto& pair : x["order"]) {
                if (!pair.is_array() || pair.size() != 2) throw SchemaError("crosscut order entries are pairs [a, b]");
                out.crosscut_order.emplace_back(index_of(members, pair[0], "crosscut order"),
                                                index_of(members, pair[1], "crosscut order"));
            }
        }
    }
    return out;
}

json lattice_json(const FiniteLattice& l) {
    json covers = json::array();
    for (int a = 0; a < l.size(); ++a)
        for (int b = 0; b < l.size(); ++b)
            if (l.covers(a, b)) covers.push_back({l.labels()[a], l.labels()[b]});
    return {{"kind", "lattice"}, {"elements", labels_json(l.labels())}, {"covers", covers}};
}

// ---------------------------------------------------------------- geometry

GeometryInstance parse_geometry(const json& j) {
    check_fields(j, {"elements", "closed"}, "geometry");
    GeometryInstance g;
    g.elements = parse_labels(need(j, "elements", "geometry"), "geometry elements");
    require_cap(static_cast<int>(g.elements.size()), kClosureCap, "geometry elements");
    g.closed = parse_subsets(g.elements, need(j, "closed", "geometry"), "closed set");
    return g;
}

json geometry_json(const std::vector<std::string>& elements, const ClosureSystem& cs) {
    json closed = json::array();
    for (Mask c : cs.closed_sets()) closed.push_back(subset_json(elements, c));
    return {{"kind", "geometry"}, {"elements", labels_json(elements)}, {"closed", closed}};
}

// -------------------------------------------------------------------- core

CoreInstance parse_core(const json& j) {
    check_fields(j, {"elements", "circuits", "broken", "function"}, "core");
    CoreInstance c;
    c.elements = parse_labels(need(j, "elements", "core"), "core elements");
    if (!j.contains("circuits"))
        throw SchemaError("core instance needs \"circuits\": a bare broken family cannot be checked");
    c.circuits = parse_subsets(c.elements, j["circuits"], "circuit");
    for (Mask m : c.circuits)
        if (m == 0) throw SchemaError("circuit must be non-empty");
    if (j.contains("broken")) {
        const auto& b = j["broken"];
        if (b.is_string()) {
            if (b.get<std::string>() != "all") throw SchemaError("\"broken\" must be \"all\" or a list of sets");
        } else {
            c.broken = parse_subsets(c.elements, b, "broken set");
        }
    }
    c.function = need(j, "function", "core");
    if (!c.function.is_object() || !c.function.contains("kind") || !c.function["kind"].is_string())
        throw SchemaError("\"function\" must be an object with a string \"kind\"");
    return c;
}

}  // namespace bc::io
