#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include <yanglab/descriptor.hpp>
#include <nlohmann/json.hpp>

#include "test_support.hpp"

using namespace yanglab;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out, err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    std::string base = "/tmp/yanglab_cli_" + std::to_string(getpid()) + "_" + std::to_string(counter++);
    std::string out_path = base + ".out", err_path = base + ".err";
    std::string cmd = std::string(YANGLAB_CLI_PATH) + " " + args +
                      " >" + out_path + " 2>" + err_path;
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

} // namespace

TEST_CASE("relations on W_1(2) pass with exit 0") {
    RunResult r = run_cli("relations --module '{\"type\":\"wm\",\"m\":1,\"a\":\"2\"}' --K 2");
    CHECK(r.exit_code == 0);
    CHECK(r.err.find("PASS") != std::string::npos);
    CHECK(r.out.find("\"failed\": 0") != std::string::npos);
}

TEST_CASE("simplicity verdict for the critical point") {
    RunResult r = run_cli("simplicity --mu 1 --tau 9 --bmu -7/4 --r 1");
    CHECK(r.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("simple") == false);
    CHECK(doc.at("field_obstruction") == false);
    REQUIRE(doc.at("witnesses").size() == 1);
    CHECK(doc.at("witnesses")[0].at("t") == "1/2");
    CHECK(doc.at("witnesses")[0].at("b_critical") == "-7/4");
}

TEST_CASE("bcoeff table as csv") {
    RunResult r = run_cli("bcoeff --mu 1 --tau 9 --bmu 0 --window 1 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "k,a,b\n-1,9/4,-5/2\n0,5/4,0\n1,-7/4,17/2\n");
}

TEST_CASE("act emits a weight vector that re-parses") {
    std::string module = "'{\"type\":\"dense\",\"mu\":\"1\",\"tau\":\"9\",\"b_mu\":\"0\"}'";
    RunResult r = run_cli("act --module " + module + " --gen X+0 --index 0");
    CHECK(r.exit_code == 0);
    WeightVector v = weight_vector_from_json(nlohmann::json::parse(r.out));
    CHECK(v == WeightVector::unit(BasisIndex(1), QuadScalar(Rational(5, 4))));
}

TEST_CASE("tensor act across the pair basis") {
    std::string module = "'{\"type\":\"tensor\",\"left\":{\"type\":\"dense\",\"mu\":\"1\",\"tau\":\"9\","
                         "\"b_mu\":\"0\"},\"right\":{\"type\":\"wm\",\"m\":1,\"a\":\"1\"}}'";
    RunResult r = run_cli("act --module " + module + " --gen H1 --index '[1,0]'");
    CHECK(r.exit_code == 0);
    WeightVector v = weight_vector_from_json(nlohmann::json::parse(r.out));
    WeightVector expect = WeightVector::unit(yanglab::test::pair_index(1, 0), QuadScalar(Rational(9, 2)));
    expect += WeightVector::unit(yanglab::test::pair_index(0, 1), QuadScalar(-2));
    CHECK(v == expect);
}

TEST_CASE("identical invocations are byte-identical") {
    std::string cmd = "probe --mu 1 --tau 9 --bmu -7/4 --r 1 --window 5";
    RunResult a = run_cli(cmd);
    RunResult b = run_cli(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"found\": true") != std::string::npos);

    RunResult none = run_cli("probe --mu 1 --tau 9 --bmu 0 --r 1 --window 5");
    CHECK(none.out.find("\"found\": false") != std::string::npos);
}

TEST_CASE("drinfeld series agree") {
    RunResult r = run_cli("drinfeld --module '{\"type\":\"wm\",\"m\":3,\"a\":\"3/2\"}' --K 4");
    CHECK(r.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("agree") == true);
    CHECK(doc.at("highest_series") == doc.at("drinfeld_series"));
    CHECK(doc.at("highest_series")[0] == "3");
}

TEST_CASE("dims table is uniformly 2 in the interior") {
    std::string module = "'{\"type\":\"tensor\",\"left\":{\"type\":\"dense\",\"mu\":\"1\",\"tau\":\"9\","
                         "\"b_mu\":\"0\"},\"right\":{\"type\":\"wm\",\"m\":1,\"a\":\"1\"}}'";
    RunResult r = run_cli("dims --module " + module + " --window 3 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("0,2\n") != std::string::npos);
    CHECK(r.out.find("2,2\n") != std::string::npos);
}

TEST_CASE("validation errors exit with 2 and machine-readable JSON") {
    RunResult r = run_cli("simplicity --mu 3 --tau 9 --bmu 0 --r 1");
    CHECK(r.exit_code == 2);
    nlohmann::json err = nlohmann::json::parse(r.err);
    CHECK(err.at("kind") == "validation");

    RunResult bad = run_cli("bcoeff --mu 1 --tau 16 --bmu 0");
    CHECK(bad.exit_code == 2);

    RunResult junk = run_cli("relations --module '{\"type\":\"nope\"}'");
    CHECK(junk.exit_code == 2);
}

TEST_CASE("window errors exit with 4") {
    std::string module = "'{\"type\":\"tensor\",\"left\":{\"type\":\"dense\",\"mu\":\"1\",\"tau\":\"9\","
                         "\"b_mu\":\"0\"},\"right\":{\"type\":\"wm\",\"m\":1,\"a\":\"1\"}}'";
    RunResult r = run_cli("matrix --module " + module + " --gen X+0 --weight 6 --window 2");
    CHECK(r.exit_code == 4);
    nlohmann::json err = nlohmann::json::parse(r.err);
    CHECK(err.at("kind") == "window");
}

TEST_CASE("descriptor and weight-vector JSON round-trips") {
    auto u = yanglab::test::make_u(Rational(1, 2), Rational(2), QuadScalar(Rational(1, 3)),
                                   QuadScalar(Rational(5, 2)));
    nlohmann::json desc = descriptor_of(*u);
    auto rebuilt = module_from_descriptor(desc);
    CHECK(descriptor_of(*rebuilt) == desc);

    WeightVector v = WeightVector::unit(yanglab::test::pair_index(-2, 1),
                                        QuadScalar(Rational(1, 2), Rational(-3), u->context()));
    v += WeightVector::unit(yanglab::test::pair_index(0, 0), QuadScalar(7));
    CHECK(weight_vector_from_json(weight_vector_to_json(v), u->context()) == v);
}

TEST_CASE("matrix command emits the H_1 restriction") {
    std::string module = "'{\"type\":\"tensor\",\"left\":{\"type\":\"dense\",\"mu\":\"1\",\"tau\":\"9\","
                         "\"b_mu\":\"0\"},\"right\":{\"type\":\"wm\",\"m\":1,\"a\":\"1\"}}'";
    RunResult r = run_cli("matrix --module " + module + " --gen H1 --weight 2 --window 3");
    CHECK(r.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("entries") == nlohmann::json::array({"9/2", "0", "-2", "2"}));
}
