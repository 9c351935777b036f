#include "comgraph/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace comgraph {

using nlohmann::json;

namespace {

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

GroupTable group_from_json(const json& j) {
    GroupTable g;
    g.order = j.at("order").get<int>();
    if (g.order < 1) throw std::runtime_error("group json: bad order");
    const json& rows = j.at("table");
    if (int(rows.size()) != g.order)
        throw std::runtime_error("group json: table row count mismatch");
    g.table.reserve(std::size_t(g.order) * g.order);
    for (const json& row : rows) {
        if (int(row.size()) != g.order)
            throw std::runtime_error("group json: table column count mismatch");
        for (const json& e : row) g.table.push_back(e.get<int>());
    }
    if (j.contains("names"))
        g.names = j.at("names").get<std::vector<std::string>>();
    Verdict v = validate_table(g);
    if (!v)
        throw std::runtime_error("group json: invalid table (" + v.stage +
                                 ": " + v.reason + ")");
    return g;
}

json group_to_json(const GroupTable& g) {
    json rows = json::array();
    for (int i = 0; i < g.order; ++i) {
        json row = json::array();
        for (int j2 = 0; j2 < g.order; ++j2) row.push_back(g.mul(i, j2));
        rows.push_back(std::move(row));
    }
    json j{{"order", g.order}, {"table", std::move(rows)}};
    if (!g.names.empty()) j["names"] = g.names;
    return j;
}

}  // namespace

GroupTable read_group_json(std::istream& in) {
    return group_from_json(json::parse(in));
}

GroupTable read_group_file(const std::string& path) {
    auto in = open_in(path);
    return read_group_json(in);
}

void write_group_json(std::ostream& out, const GroupTable& g) {
    out << group_to_json(g).dump(1) << '\n';
}

void write_group_file(const std::string& path, const GroupTable& g) {
    auto out = open_out(path);
    write_group_json(out, g);
}

Graph read_edge_list(std::istream& in) {
    int n = -1;
    long long m = -1;
    if (!(in >> n >> m) || n < 0 || m < 0)
        throw std::runtime_error("edge list: bad header");
    Graph g(n);
    for (long long e = 0; e < m; ++e) {
        int u, v;
        if (!(in >> u >> v)) throw std::runtime_error("edge list: truncated");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::runtime_error("edge list: vertex out of range");
        if (u >= v)
            throw std::runtime_error("edge list: edges must satisfy u < v");
        if (g.has_edge(u, v)) throw std::runtime_error("edge list: duplicate edge");
        g.add_edge(u, v);
    }
    return g;
}

Graph read_edge_list_file(const std::string& path) {
    auto in = open_in(path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.size() << ' ' << g.edge_count() << '\n';
    for (int u = 0; u < g.size(); ++u)
        g.neighbors(u).for_each([&](int v) {
            if (u < v) out << u << ' ' << v << '\n';
        });
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    auto out = open_out(path);
    write_edge_list(out, g);
}

Labeling read_labeling_json(std::istream& in) {
    json j = json::parse(in);
    Labeling lab;
    const char* key = j.contains("group_file") ? "group_file" : "group";
    const json& gj = j.at(key);
    if (gj.is_string())
        lab.group = read_group_file(gj.get<std::string>());
    else
        lab.group = group_from_json(gj);
    lab.map = j.at("map").get<std::vector<int>>();
    return lab;
}

Labeling read_labeling_file(const std::string& path) {
    auto in = open_in(path);
    return read_labeling_json(in);
}

void write_labeling_json(std::ostream& out, const Labeling& lab) {
    json j{{"group_file", group_to_json(lab.group)}, {"map", lab.map}};
    out << j.dump(1) << '\n';
}

void write_labeling_file(const std::string& path, const Labeling& lab) {
    auto out = open_out(path);
    write_labeling_json(out, lab);
}

OrthoLabeling read_ortho_labeling_json(std::istream& in) {
    json j = json::parse(in);
    OrthoLabeling lab;
    lab.p = j.at("p").get<int>();
    lab.n = j.at("n").get<int>();
    for (const json& row : j.at("map")) {
        auto coords = row.get<std::vector<int>>();
        if (int(coords.size()) != 2 * lab.n)
            throw std::runtime_error("ortho labeling: bad coordinate count");
        lab.map.emplace_back(lab.p, std::move(coords));
    }
    return lab;
}

void write_ortho_labeling_json(std::ostream& out, const OrthoLabeling& lab) {
    json rows = json::array();
    for (const SympVector& u : lab.map) rows.push_back(u.coords());
    json j{{"p", lab.p}, {"n", lab.n}, {"map", std::move(rows)}};
    out << j.dump(1) << '\n';
}

void write_ortho_labeling_file(const std::string& path,
                               const OrthoLabeling& lab) {
    auto out = open_out(path);
    write_ortho_labeling_json(out, lab);
}

}  // namespace comgraph
