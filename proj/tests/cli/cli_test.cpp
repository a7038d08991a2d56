#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "gsim/graph.hpp"
#include "gsim/report.hpp"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

const fs::path& scratch() {
    static const fs::path dir = [] {
        const fs::path d = fs::temp_directory_path() / "gsim_cli_test";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

Result run(const std::string& args) {
    const fs::path out = scratch() / "stdout.txt", err = scratch() / "stderr.txt";
    const std::string line = std::string("\"") + GSIM_CLI_PATH + "\" " + args + " > \"" + out.string() + "\" 2> \"" +
                             err.string() + "\"";
    const int status = std::system(line.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, gsim::read_text_file(out), gsim::read_text_file(err)};
}

std::string dir(const std::string& name) { return "\"" + (scratch() / name).string() + "\""; }

}  // namespace

TEST_CASE("gen writes a 50-edge rudy file for the 20/5 instance") {
    const Result r = run("gen --n 20 --degree 5 --seed 7 --out " + dir("gen"));
    REQUIRE(r.code == 0);
    CHECK(r.out.find("edges=50") != std::string::npos);
    const gsim::WeightedGraph g = gsim::read_graph(scratch() / "gen" / "graph.rudy", gsim::GraphFormat::rudy);
    CHECK(g.edge_count() == 50);
    CHECK(g == gsim::read_graph(scratch() / "gen" / "graph.json", gsim::GraphFormat::json));
    const auto summary = nlohmann::json::parse(gsim::read_text_file(scratch() / "gen" / "summary.json"));
    CHECK(summary["config"]["seed"] == "7");
    CHECK(summary["config_hash"].get<std::string>().size() == 40);
    CHECK_FALSE(summary["config"].contains("out"));
}

TEST_CASE("gen by density") {
    const Result r = run("gen --n 4 --density 0.5 --out " + dir("gen4"));
    REQUIRE(r.code == 0);
    CHECK(r.out.find("edges=3") != std::string::npos);
}

TEST_CASE("usage errors exit 2 and list every problem") {
    CHECK(run("gen --degree 5 --out " + dir("x")).code == 2);
    CHECK(run("").code == 2);
    CHECK(run("gen --bogus 1").code == 2);
    gsim::write_text_file(scratch() / "bad.conf", "samples = 1\nbogus = 3\ngraph_seeds = x\n");
    const Result r = run("experiment rmse --config \"" + (scratch() / "bad.conf").string() + "\" --density 2");
    CHECK(r.code == 2);
    CHECK(r.err.find("bogus") != std::string::npos);
    CHECK(r.err.find("samples") != std::string::npos);
    CHECK(r.err.find("graph_seeds") != std::string::npos);
    CHECK(r.err.find("density") != std::string::npos);
    CHECK(run("--help").code == 0);
}

TEST_CASE("decompose") {
    gsim::write_text_file(scratch() / "j2.csv", "0,0.5\n0.5,0\n");
    const Result r = run("decompose --input \"" + (scratch() / "j2.csv").string() + "\" --out " + dir("dec"));
    REQUIRE(r.code == 0);
    CHECK(r.out == "rank,index,lambda,abs_lambda,sign,k,error_ratio,tail_frobenius\n"
                   "0,0,0.5,0.5,1,1,0.5,0.5\n"
                   "1,1,-0.5,0.5,-1,2,0,0\n");
    CHECK(fs::exists(scratch() / "dec" / "bundle.json"));

    gsim::write_text_file(scratch() / "rect.csv", "0,0.5,1\n0.5,0,2\n");
    CHECK(run("decompose --input \"" + (scratch() / "rect.csv").string() + "\" --out " + dir("dec2")).code == 3);
    gsim::write_text_file(scratch() / "asym.csv", "0,1\n2,0\n");
    CHECK(run("decompose --input \"" + (scratch() / "asym.csv").string() + "\" --out " + dir("dec3")).code == 3);
}

TEST_CASE("solve") {
    gsim::write_text_file(scratch() / "edge.rudy", "2 1\n1 2 1\n");
    const std::string edge = "\"" + (scratch() / "edge.rudy").string() + "\"";
    const Result r = run("solve --input " + edge + " --iters 100 --oracle --out " + dir("s1"));
    REQUIRE(r.code == 0);
    CHECK(r.out.find("final_cut=1\n") != std::string::npos);
    CHECK(r.out.find("optimal=true") != std::string::npos);

    const std::string args = "solve --n 20 --degree 5 --seed 7 --k 20 --rate 0.995 --iters 3000 --oracle --out ";
    const Result a = run(args + dir("s2"));
    const Result b = run(args + dir("s3"));
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("optimal=") != std::string::npos);

    CHECK(run("solve --n 30 --degree 3 --oracle --out " + dir("s4")).code == 4);
    CHECK(run("solve --input " + edge + " --k 3 --out " + dir("s5")).code == 2);
}

TEST_CASE("experiment subcommands write their reports") {
    CHECK(run("experiment rmse --n 10 --degree 3 --graph-seeds 2 --samples 50 --out " + dir("e1")).code == 0);
    CHECK(fs::exists(scratch() / "e1" / "rmse_curve.csv"));
    CHECK(run("experiment prob --n 10 --degree 3 --ks 1..3 --runs 6 --batches 2 --iters 100 --out " + dir("e2")).code == 0);
    const std::string prob = gsim::read_text_file(scratch() / "e2" / "probability.csv");
    CHECK(std::count(prob.begin(), prob.end(), '\n') == 5);
    CHECK(run("experiment noise --n 10 --degree 3 --levels 0,0.01 --runs 4 --batches 1 --iters 100 --out " + dir("e3")).code == 0);
    CHECK(fs::exists(scratch() / "e3" / "noise.csv"));
    CHECK(run("experiment trace --n 10 --degree 3 --ks 10 --runs 2 --iters 100 --out " + dir("e4")).code == 0);
    CHECK(fs::exists(scratch() / "e4" / "trace_summary.csv"));
    CHECK(run("experiment prob --n 10 --degree 3 --ks 11 --runs 4 --iters 100 --out " + dir("e5")).code == 2);
}
