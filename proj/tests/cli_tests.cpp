// End-to-end checks of the command-line tool: exit-code contract, file
// round trips, deterministic outputs.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "comgraph/extraspecial.hpp"
#include "comgraph/io.hpp"
#include "doctest.h"
#include "harness.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using namespace comgraph;
using namespace comgraph::harness;

namespace {

const fs::path& work_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::current_path() / "cli_work";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string path(const std::string& name) {
    return (work_dir() / name).string();
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string out_file = path("stdout.txt");
    std::string cmd =
        std::string(COMGRAPH_CLI_PATH) + " " + args + " > " + out_file + " 2> " +
        path("stderr.txt");
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_file);
    std::stringstream buf;
    buf << in.rdbuf();
    r.out = buf.str();
    return r;
}

bool contains(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

std::string slurp(const std::string& file) {
    std::ifstream in(file);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("gen/build/analyze on a cyclic group") {
    RunResult gen = run("gen --family cyclic --n 6 -o " + path("c6.json"));
    CHECK(gen.exit_code == 0);
    CHECK(contains(gen.out, "order=6"));

    RunResult build =
        run("build -g " + path("c6.json") + " -o " + path("c6.el"));
    CHECK(build.exit_code == 0);

    RunResult analyze = run("analyze " + path("c6.el"));
    CHECK(analyze.exit_code == 0);
    CHECK(contains(analyze.out, "n=6"));
    CHECK(contains(analyze.out, "k=6"));
    CHECK(contains(analyze.out, "screen=pass"));
}

TEST_CASE("extraspecial pipeline through files") {
    CHECK(run("gen --family extraspecial1 --p 3 --n 1 -o " + path("es.json"))
              .exit_code == 0);
    CHECK(run("build -g " + path("es.json") + " -o " + path("es.el"))
              .exit_code == 0);

    RunResult analyze = run("analyze " + path("es.el"));
    CHECK(analyze.exit_code == 0);
    CHECK(contains(analyze.out, "n=27"));
    CHECK(contains(analyze.out, "m=135"));
    CHECK(contains(analyze.out, "k=11"));
    CHECK(contains(analyze.out, "dominant_count=3"));

    RunResult shuffle =
        run("permute " + path("es.el") + " --seed 5 -o " + path("esp.el"));
    CHECK(shuffle.exit_code == 0);
    std::string first = slurp(path("esp.el"));
    CHECK(run("permute " + path("es.el") + " --seed 5 -o " + path("esp2.el"))
              .exit_code == 0);
    CHECK(first == slurp(path("esp2.el")));  // byte-deterministic

    RunResult rec = run("recognize extraspecial " + path("esp.el") + " -o " +
                        path("lab.json") + " --group-out " + path("wit.json"));
    CHECK(rec.exit_code == 0);
    CHECK(contains(rec.out, "verdict=accept"));
    CHECK(contains(rec.out, "group_order=27"));

    CHECK(run("verify -g " + path("wit.json") + " -x " + path("esp.el") +
              " -l " + path("lab.json"))
              .exit_code == 0);
    // the labeling carries its group inline as well
    CHECK(run("verify -x " + path("esp.el") + " -l " + path("lab.json"))
              .exit_code == 0);
}

TEST_CASE("other recognizers over files") {
    write_edge_list_file(path("q8.el"),
                         build_commuting_graph(make_quaternion8()).first);
    RunResult p3 = run("recognize p3 " + path("q8.el"));
    CHECK(p3.exit_code == 0);
    CHECK(contains(p3.out, "group_order=8"));

    auto [d15, labd15] = build_commuting_graph(make_dihedral(15));
    write_edge_list_file(path("d15.el"),
                         permute(d15, seeded_permutation(30, 2)));
    CHECK(run("recognize dihedral-odd " + path("d15.el")).exit_code == 0);

    auto [a4, laba4] = build_commuting_graph(make_alternating(4));
    write_edge_list_file(path("a4.el"), a4);
    CHECK(run("recognize frobenius " + path("a4.el") + " --split 4,3")
              .exit_code == 0);
    CHECK(run("recognize frobenius " + path("a4.el") + " --split 3,4")
              .exit_code == 1);
    RunResult enumerate =
        run("recognize frobenius " + path("a4.el") + " --enumerate");
    CHECK(enumerate.exit_code == 0);
    CHECK(contains(enumerate.out, "splits=4,3"));

    write_edge_list_file(path("o9.el"), orthogonality_graph(1, 3).first);
    RunResult ortho =
        run("recognize ortho " + path("o9.el") + " --p 3 -o " +
            path("o9lab.json"));
    CHECK(ortho.exit_code == 0);
    {
        std::ifstream in(path("o9lab.json"));
        OrthoLabeling lab = read_ortho_labeling_json(in);
        CHECK(lab.p == 3);
        CHECK(lab.n == 1);
        CHECK(lab.map.size() == 9);
    }
}

TEST_CASE("product and factor subcommands") {
    CHECK(run("gen --family dihedral --m 3 -o " + path("d3.json")).exit_code ==
          0);
    CHECK(run("build -g " + path("d3.json") + " -o " + path("d3.el"))
              .exit_code == 0);
    write_edge_list_file(path("k4.el"), complete_graph(4));

    RunResult prod = run("product --strong " + path("d3.el") + " " +
                         path("k4.el") + " -o " + path("d3k4.el"));
    CHECK(prod.exit_code == 0);
    CHECK(contains(prod.out, "n=24"));

    RunResult factored = run("factor " + path("d3k4.el"));
    CHECK(factored.exit_code == 0);
    CHECK(contains(factored.out, "factors=3"));  // D3 graph, K2, K2

    RunResult rec =
        run("recognize product " + path("d3k4.el") +
            " --oracle dihedral-odd --oracle complete -o " +
            path("d3k4lab.json"));
    CHECK(rec.exit_code == 0);
    CHECK(contains(rec.out, "group_order=24"));
    CHECK(run("verify -x " + path("d3k4.el") + " -l " + path("d3k4lab.json"))
              .exit_code == 0);
}

TEST_CASE("exit codes for rejects, unsupported and errors") {
    // every negative fixture exits 1 through its stated front end
    for (const auto& negative : negative_instances()) {
        std::string file = path("neg_" + negative.name + ".el");
        write_edge_list_file(file, negative.graph);
        std::string cmd = negative.recognizer == "screen"
                              ? "analyze " + file
                              : "recognize extraspecial " + file;
        RunResult r = run(cmd);
        CAPTURE(negative.name);
        CHECK(r.exit_code == 1);
        CHECK(contains(r.out, "stage=" + negative.stage));
    }

    write_edge_list_file(path("k32.el"), complete_graph(32));
    RunResult unsupported = run("recognize extraspecial " + path("k32.el"));
    CHECK(unsupported.exit_code == 2);
    CHECK(contains(unsupported.out, "verdict=unsupported"));

    CHECK(run("analyze " + path("missing.el")).exit_code == 3);
    CHECK(run("recognize frobenius " + path("k32.el") + " --split nonsense")
              .exit_code == 3);
    CHECK(run("gen --family nonsense -o " + path("x.json")).exit_code == 3);
    CHECK(run("recognize frobenius " + path("k32.el")).exit_code == 3);
}

TEST_CASE("json report mode") {
    RunResult analyze = run("--json analyze " + path("c6.el"));
    CHECK(analyze.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(analyze.out);
    CHECK(j.at("n") == "6");
    CHECK(j.at("verdict") == "accept");
}
