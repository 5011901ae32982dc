#include "rllforge/checks.hpp"
#include "rllforge/dump.hpp"
#include "rllforge/errors.hpp"

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace rllforge;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

// runs the binary with stdout captured, stderr dropped
Run run(const std::string& args) {
    const std::string cmd = std::string(RLLFORGE_BIN) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("check names") {
    const auto& names = check_names();
    for (const char* n : {"relations", "braid", "minpoly", "decompose", "ybe", "unitarity", "blocks", "frt", "frt-n4",
                          "psi", "gauss", "transfer"})
        CHECK(std::find(names.begin(), names.end(), n) != names.end());
    CHECK_THROWS_AS(run_check("nope", {}), UnknownCheck);
    CheckOptions o;
    o.n = 3;
    const CheckReport rep = run_check("minpoly", o);
    CHECK(rep.status == Status::pass);
    CHECK(rep.name == "minpoly");
    CHECK(rep.residual == "0");
    o.n = 7;
    const CheckReport frt = run_check("frt", o);
    CHECK(frt.status == Status::skipped);
    CHECK_FALSE(frt.reason.empty());
    CheckOptions bad;
    bad.n = 3;
    CHECK_THROWS_AS(run_check("frt-n4", bad), InvalidOption);
}

TEST_CASE("dumps") {
    DumpOptions o;
    o.n = 3;
    o.gen = "e3";
    const SparseMatrix e3 = dump_target("t1", o);
    CHECK(e3.nnz() == 2);
    CHECK(e3.at(2, 4) == Scalar(1));
    CHECK(e3.at(1, 3) == -(RatFunc::u() * RatFunc::v()).inv());
    CHECK(dump_matrix_json(e3)["dim"] == 6);
    DumpOptions two;
    CHECK(dump_target("rhat-basic", two).dim() == 16);
    CHECK_THROWS_AS(dump_target("nope", two), UnknownTarget);
    CHECK_THROWS_AS(dump_target("t1", two), InvalidOption);
    for (const auto& t : dump_targets()) {
        DumpOptions d;
        d.n = 3;
        if (t == "t1") d.gen = "f2";
        if (t == "l-plus") d.gen = "1,2";
        if (t == "l-minus") d.gen = "2,1";
        const SparseMatrix m = dump_target(t, d);
        CHECK(parse_matrix_dump(dump_matrix_text(m)) == m);
        CHECK(parse_matrix_json(dump_matrix_json(m)) == m);
    }
    CHECK_THROWS_AS(parse_matrix_dump("{\"dim\": 2, \"entries\": [[3,1,\"1\"]]}"), Error);
    CHECK_THROWS_AS(parse_matrix_dump("not json"), ParseError);
}

TEST_CASE("reports are deterministic") {
    CheckOptions o;
    o.n = 2;
    o.backend = "sampled";
    o.seed = 42;
    const std::string a = run_check("ybe", o).to_json().dump(2);
    const std::string b = run_check("ybe", o).to_json().dump(2);
    CHECK(a == b);
    CHECK(a.find("elapsed_ms") == std::string::npos);
    CHECK(run_check("ybe", o).to_json(true).contains("elapsed_ms"));
}

TEST_CASE("selftest plans") {
    const auto quick = selftest_plan("quick", 0), full = selftest_plan("full", 0);
    CHECK(quick.size() < full.size());
    bool has_gauss100 = false, has_n6 = false;
    for (const auto& p : full) {
        if (p.name == "gauss" && p.opts.samples == 100) has_gauss100 = true;
        if (p.opts.n == 6) has_n6 = true;
    }
    CHECK(has_gauss100);
    CHECK(has_n6);
    for (const auto& p : quick) CHECK(p.opts.n.value_or(0) <= 4);
    CHECK_THROWS_AS(selftest_plan("slow", 0), InvalidOption);
    CHECK(parse_index_pair("1,2") == std::make_pair(1, 2));
    CHECK_THROWS_AS(parse_index_pair("1;2"), InvalidOption);
}

TEST_CASE("binary exit codes") {
    CHECK(run("check minpoly --n 3 --backend symbolic").code == 0);
    const Run ybe = run("check ybe --n 2 --backend sampled --seed 42");
    CHECK(ybe.code == 0);
    CHECK(ybe.out.find("\"status\": \"pass\"") != std::string::npos);
    CHECK(run("check ybe --n 2 --backend sampled --seed 42").out == ybe.out);
    CHECK(run("check frt --n 7").code == 1);
    CHECK(run("check nope").code == 2);
    CHECK(run("check").code == 2);
    CHECK(run("check braid --backend weird").code == 2);
    CHECK(run("dump nope").code == 2);
    CHECK(run("--help").code == 0);
    const Run dump = run("dump rhat-basic --n 2");
    CHECK(dump.code == 0);
    CHECK(parse_matrix_dump(dump.out).dim() == 16);
}

TEST_CASE("fault injection through the binary") {
    const Run bad = run("check ybe --n 2 --backend sampled --inject-d-sign 1,2");
    CHECK(bad.code == 1);
    CHECK(bad.out.find("row triple") != std::string::npos);
    CHECK(run("check ybe --n 2 --backend sampled").code == 0);
}

TEST_CASE("selftest output is reproducible") {
    const std::string f1 = "selftest_a.json", f2 = "selftest_b.json";
    const Run a = run("selftest quick --seed 3 --out " + f1);
    const Run b = run("selftest quick --seed 3 --out " + f2);
    CHECK(a.out == b.out);
    CHECK(slurp(f1) == slurp(f2));
    CHECK(a.out.find("passed") != std::string::npos);
    std::remove(f1.c_str());
    std::remove(f2.c_str());
}
