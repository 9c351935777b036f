// Command-line front end: group generation, commuting-graph construction,
// screens, recognizers and certificate verification over edge-list and JSON
// files. Exit codes: 0 accept/pass, 1 reject, 2 unsupported, 3 error.

#include <chrono>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "comgraph/extraspecial.hpp"
#include "comgraph/frobenius.hpp"
#include "comgraph/io.hpp"
#include "comgraph/products.hpp"
#include "json.hpp"

using namespace comgraph;

namespace {

struct Report {
    std::vector<std::pair<std::string, std::string>> fields;
    int exit_code = 0;

    void add(const std::string& key, const std::string& value) {
        fields.emplace_back(key, value);
    }
    void add(const std::string& key, long long value) {
        fields.emplace_back(key, std::to_string(value));
    }
    void verdict(const Verdict& v) {
        switch (v.status) {
            case Status::accept:
                add("verdict", "accept");
                exit_code = 0;
                break;
            case Status::reject:
                add("verdict", "reject");
                exit_code = 1;
                break;
            case Status::unsupported:
                add("verdict", "unsupported");
                exit_code = 2;
                break;
        }
        if (!v.stage.empty()) add("stage", v.stage);
        if (!v.reason.empty()) add("reason", v.reason);
    }
};

void print_report(const Report& r, bool as_json) {
    if (as_json) {
        nlohmann::ordered_json j;
        for (const auto& [k, v] : r.fields) j[k] = v;
        std::cout << j.dump(1) << '\n';
    } else {
        for (const auto& [k, v] : r.fields)
            std::cout << k << '=' << v << '\n';
    }
}

void describe_graph(Report& rep, const Graph& g) {
    rep.add("n", g.size());
    rep.add("m", g.edge_count());
}

void write_witness(Report& rep, const Graph& x,
                   const std::pair<GroupTable, Labeling>& witness,
                   const std::string& lab_out, const std::string& group_out) {
    rep.add("group_order", witness.first.order);
    if (!lab_out.empty()) {
        write_labeling_file(lab_out, witness.second);
        rep.add("labeling_out", lab_out);
    }
    if (!group_out.empty()) {
        write_group_file(group_out, witness.first);
        rep.add("group_out", group_out);
    }
    (void)x;
}

GroupTable generate_family(const std::string& family, int n, int m, int p,
                           int q, int k, int r, int variant,
                           const std::string& a_path,
                           const std::string& b_path) {
    if (family == "cyclic") return make_cyclic(n);
    if (family == "dihedral") return make_dihedral(m);
    if (family == "extraspecial1") return make_extraspecial(p, n, 1);
    if (family == "extraspecial2") return make_extraspecial(p, n, 2);
    if (family == "semidirect") return make_semidirect_cyclic(q, k, r);
    if (family == "product") {
        if (a_path.empty() || b_path.empty())
            throw std::invalid_argument("product family needs --a and --b");
        return direct_product(read_group_file(a_path), read_group_file(b_path));
    }
    (void)variant;
    throw std::invalid_argument("unknown family: " + family);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"commuting-graph construction and recognition"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit the report as JSON");

    // ---- gen ----------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate a group table");
    std::string family, gen_out, gen_a, gen_b;
    int gen_n = 0, gen_m = 0, gen_p = 0, gen_q = 0, gen_k = 0, gen_r = 0;
    gen->add_option("--family", family,
                    "cyclic|dihedral|extraspecial1|extraspecial2|semidirect|"
                    "product")
        ->required();
    gen->add_option("--n", gen_n, "order (cyclic) or rank (extraspecial)");
    gen->add_option("--m", gen_m, "dihedral parameter");
    gen->add_option("--p", gen_p, "odd prime (extraspecial)");
    gen->add_option("--q", gen_q, "kernel order (semidirect)");
    gen->add_option("--k", gen_k, "complement order (semidirect)");
    gen->add_option("--r", gen_r, "action exponent (semidirect)");
    gen->add_option("--a", gen_a, "left factor group file (product)");
    gen->add_option("--b", gen_b, "right factor group file (product)");
    gen->add_option("-o,--out", gen_out, "output group JSON")->required();

    // ---- build --------------------------------------------------------
    auto* build = app.add_subcommand("build", "commuting graph of a group");
    std::string build_group, build_out, build_lab;
    build->add_option("-g,--group", build_group, "group JSON")->required();
    build->add_option("-o,--out", build_out, "output edge list")->required();
    build->add_option("--labeling", build_lab,
                      "also write the natural labeling JSON");

    // ---- analyze ------------------------------------------------------
    auto* analyze = app.add_subcommand("analyze", "screens and counts");
    std::string analyze_graph;
    analyze->add_option("graph", analyze_graph, "edge list")->required();

    // ---- recognize ----------------------------------------------------
    auto* recognize = app.add_subcommand("recognize", "recognizers");
    recognize->require_subcommand(1);
    std::string rec_graph, rec_lab_out, rec_group_out, rec_split;
    std::vector<std::string> rec_oracles;
    bool rec_enumerate = false;
    int rec_p = 0, rec_limit = 64;

    auto add_common = [&](CLI::App* sub, bool with_outputs = true) {
        sub->add_option("graph", rec_graph, "edge list")->required();
        if (with_outputs) {
            sub->add_option("-o,--out", rec_lab_out, "labeling JSON output");
            sub->add_option("--group-out", rec_group_out,
                            "witness group JSON output");
        }
    };
    auto* rec_extra = recognize->add_subcommand(
        "extraspecial", "extraspecial commuting-graph recognizer");
    add_common(rec_extra);
    auto* rec_p3 = recognize->add_subcommand("p3", "order-p^3 recognizer");
    add_common(rec_p3);
    auto* rec_dihedral = recognize->add_subcommand(
        "dihedral-odd", "odd dihedral commuting-graph recognizer");
    add_common(rec_dihedral);
    auto* rec_ortho = recognize->add_subcommand(
        "ortho", "orthogonality-graph recognizer");
    rec_ortho->add_option("graph", rec_graph, "edge list")->required();
    rec_ortho->add_option("--p", rec_p, "field characteristic")->required();
    rec_ortho->add_option("-o,--out", rec_lab_out, "vector labeling output");
    auto* rec_frob = recognize->add_subcommand(
        "frobenius", "Frobenius-criterion check");
    rec_frob->add_option("graph", rec_graph, "edge list")->required();
    rec_frob->add_option("--split", rec_split, "kernel,complement orders");
    rec_frob->add_flag("--enumerate", rec_enumerate,
                       "try every coprime split");
    auto* rec_product = recognize->add_subcommand(
        "product", "factor and recognize through the subset DP");
    add_common(rec_product);
    rec_product->add_option("--oracle", rec_oracles,
                            "complete|extraspecial|p3|dihedral-odd")
        ->required();
    rec_product->add_option("--limit", rec_limit, "factorization size limit");

    // ---- product / factor ---------------------------------------------
    auto* product = app.add_subcommand("product", "strong product of graphs");
    std::string prod_a, prod_b, prod_out;
    bool prod_strong = false;
    product->add_flag("--strong", prod_strong, "strong product")->required();
    product->add_option("a", prod_a, "left edge list")->required();
    product->add_option("b", prod_b, "right edge list")->required();
    product->add_option("-o,--out", prod_out, "output edge list")->required();

    auto* factor = app.add_subcommand("factor", "strong-product factorization");
    std::string factor_graph, factor_prefix;
    int factor_limit = 64;
    factor->add_option("graph", factor_graph, "edge list")->required();
    factor->add_option("--limit", factor_limit, "vertex limit");
    factor->add_option("--out-prefix", factor_prefix,
                       "write factor i to <prefix><i>.el");

    // ---- verify ---------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "check a labeling certificate");
    std::string verify_group, verify_graph, verify_lab;
    verify->add_option("-g,--group", verify_group, "group JSON (optional)");
    verify->add_option("-x,--graph", verify_graph, "edge list")->required();
    verify->add_option("-l,--labeling", verify_lab, "labeling JSON")
        ->required();

    // ---- permute --------------------------------------------------------
    auto* perm = app.add_subcommand("permute", "relabel vertices");
    std::string perm_graph, perm_out;
    std::uint64_t perm_seed = 0;
    perm->add_option("graph", perm_graph, "edge list")->required();
    perm->add_option("--seed", perm_seed, "permutation seed")->required();
    perm->add_option("-o,--out", perm_out, "output edge list")->required();

    CLI11_PARSE(app, argc, argv);

    Report rep;
    {
        std::ostringstream cmd;
        for (int i = 0; i < argc; ++i) cmd << (i ? " " : "") << argv[i];
        rep.add("command", cmd.str());
    }
    auto started = std::chrono::steady_clock::now();

    try {
        if (gen->parsed()) {
            GroupTable g = generate_family(family, gen_n, gen_m, gen_p, gen_q,
                                           gen_k, gen_r, 0, gen_a, gen_b);
            write_group_file(gen_out, g);
            rep.add("family", family);
            rep.add("order", g.order);
            rep.add("out", gen_out);
        } else if (build->parsed()) {
            GroupTable g = read_group_file(build_group);
            auto [x, lab] = build_commuting_graph(g);
            write_edge_list_file(build_out, x);
            describe_graph(rep, x);
            rep.add("out", build_out);
            if (!build_lab.empty()) {
                write_labeling_file(build_lab, lab);
                rep.add("labeling_out", build_lab);
            }
        } else if (analyze->parsed()) {
            Graph x = read_edge_list_file(analyze_graph);
            describe_graph(rep, x);
            rep.add("dominant_count", dominant_vertices(x).count());
            auto k = conjugacy_count_from_graph(x);
            rep.add("k", k ? std::to_string(*k) : "none");
            TwinPartition twins = closed_twin_classes(x, Bitset::full(x.size()));
            rep.add("twin_class_count", (long long)twins.classes.size());
            std::map<std::size_t, int> histogram;
            for (const auto& cls : twins.classes) histogram[cls.size()]++;
            std::ostringstream sizes;
            for (auto it = histogram.begin(); it != histogram.end(); ++it) {
                if (it != histogram.begin()) sizes << ',';
                sizes << it->first << 'x' << it->second;
            }
            rep.add("twin_class_sizes", sizes.str());
            Verdict v = screen(x);
            rep.add("screen", v ? "pass" : "reject");
            rep.verdict(v);
        } else if (rec_extra->parsed() || rec_p3->parsed() ||
                   rec_dihedral->parsed()) {
            Graph x = read_edge_list_file(rec_graph);
            describe_graph(rep, x);
            auto res = rec_extra->parsed()      ? recognize_extraspecial(x)
                       : rec_p3->parsed()       ? recognize_p3(x)
                                                : recognize_dihedral_odd(x);
            rep.verdict(res.verdict);
            if (res) write_witness(rep, x, *res, rec_lab_out, rec_group_out);
        } else if (rec_ortho->parsed()) {
            Graph x = read_edge_list_file(rec_graph);
            describe_graph(rep, x);
            auto res = recognize_orthogonality_graph(x, rec_p);
            rep.verdict(res.verdict);
            if (res) {
                rep.add("p", res->p);
                rep.add("half_dim", res->n);
                if (!rec_lab_out.empty()) {
                    write_ortho_labeling_file(rec_lab_out, *res);
                    rep.add("labeling_out", rec_lab_out);
                }
            }
        } else if (rec_frob->parsed()) {
            Graph x = read_edge_list_file(rec_graph);
            describe_graph(rep, x);
            if (rec_enumerate == !rec_split.empty())
                throw std::invalid_argument(
                    "frobenius: pass exactly one of --split or --enumerate");
            if (rec_enumerate) {
                std::vector<std::pair<int, int>> splits = frobenius_splits(x);
                std::ostringstream list;
                for (std::size_t i = 0; i < splits.size(); ++i) {
                    if (i) list << ';';
                    list << splits[i].first << ',' << splits[i].second;
                }
                rep.add("splits", list.str());
                rep.verdict(splits.empty()
                                ? Verdict::rejected("components",
                                                    "no coprime split passes")
                                : Verdict::accepted());
            } else {
                int n = 0, k = 0;
                char comma = 0;
                std::istringstream in(rec_split);
                if (!(in >> n >> comma >> k) || comma != ',')
                    throw std::invalid_argument("frobenius: bad --split");
                auto res = recognize_frobenius(x, n, k);
                rep.verdict(res.verdict);
                if (res) {
                    rep.add("kernel_order", res->n);
                    rep.add("complement_order", res->k);
                }
            }
        } else if (rec_product->parsed()) {
            Graph x = read_edge_list_file(rec_graph);
            describe_graph(rep, x);
            auto res = product_reduction(x, combined_recognizer(rec_oracles),
                                         rec_limit);
            rep.verdict(res.verdict);
            if (res) write_witness(rep, x, *res, rec_lab_out, rec_group_out);
        } else if (product->parsed()) {
            Graph a = read_edge_list_file(prod_a);
            Graph b = read_edge_list_file(prod_b);
            Graph x = strong_product(a, b);
            write_edge_list_file(prod_out, x);
            describe_graph(rep, x);
            rep.add("out", prod_out);
        } else if (factor->parsed()) {
            Graph x = read_edge_list_file(factor_graph);
            Factorization f = factor_strong(x, factor_limit);
            rep.add("factors", (long long)f.factors.size());
            for (std::size_t i = 0; i < f.factors.size(); ++i) {
                std::ostringstream key, value;
                key << "factor_" << i;
                value << f.factors[i].size() << ':'
                      << f.factors[i].edge_count();
                rep.add(key.str(), value.str());
                if (!factor_prefix.empty()) {
                    std::string path =
                        factor_prefix + std::to_string(i) + ".el";
                    write_edge_list_file(path, f.factors[i]);
                    rep.add(key.str() + "_out", path);
                }
            }
        } else if (verify->parsed()) {
            Graph x = read_edge_list_file(verify_graph);
            Labeling lab = read_labeling_file(verify_lab);
            if (!verify_group.empty()) lab.group = read_group_file(verify_group);
            rep.verdict(verify_labeling(x, lab));
        } else if (perm->parsed()) {
            Graph x = read_edge_list_file(perm_graph);
            Graph out = permute(x, seeded_permutation(x.size(), perm_seed));
            write_edge_list_file(perm_out, out);
            describe_graph(rep, out);
            rep.add("seed", (long long)perm_seed);
            rep.add("out", perm_out);
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 3;
    }

    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    rep.add("wall_ms", (long long)elapsed.count());
    print_report(rep, as_json);
    return rep.exit_code;
}
