#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "netcode/cli.hpp"

namespace fs = std::filesystem;

namespace {

int run_cli(std::vector<std::string> args, std::string* out = nullptr) {
    args.insert(args.begin(), "netcode");
    std::vector<char*> argv;
    argv.reserve(args.size());
    for (auto& a : args) argv.push_back(a.data());
    std::ostringstream captured;
    std::streambuf* old = std::cout.rdbuf(captured.rdbuf());
    int rc = -1;
    try {
        rc = netcode::cli::run(static_cast<int>(argv.size()), argv.data());
    } catch (...) {
        std::cout.rdbuf(old);
        throw;
    }
    std::cout.rdbuf(old);
    if (out) *out = captured.str();
    return rc;
}

fs::path fixture_dir() {
    fs::path dir = fs::temp_directory_path() / "netcode-cli-fixtures";
    fs::create_directories(dir);
    return dir;
}

std::string put(const std::string& name, const std::string& content) {
    fs::path p = fixture_dir() / name;
    std::ofstream os(p);
    os << content;
    return p.string();
}

std::string slurp_file(const std::string& path) {
    std::ifstream is(path);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

} // namespace

TEST_CASE("metric prints one value and honors the exit-code contract") {
    const std::string i2 = put("i2.mat", "2 2 2\n1 0\n0 1\n");
    const std::string z2 = put("z2.mat", "2 2 2\n0 0\n0 0\n");
    const std::string i3 = put("i3.mat", "2 3 3\n1 0 0\n0 1 0\n0 0 1\n");

    std::string out;
    CHECK(run_cli({"metric", "rank-dist", i2, i2}, &out) == 0);
    CHECK(out == "0\n");
    CHECK(run_cli({"metric", "rank-dist", i2, z2}, &out) == 0);
    CHECK(out == "2\n");
    CHECK(run_cli({"metric", "delta-rho", "--rho", "1", i2, z2}, &out) == 0);
    CHECK(out == "1\n");

    CHECK(run_cli({"metric", "rank-dist", (fixture_dir() / "absent.mat").string(), i2}) == 2);
    CHECK(run_cli({"metric", "no-such-kind", i2, i2}) == 2);
    CHECK(run_cli({"metric", "rank-dist", i2, i3}) == 3);
    CHECK(run_cli({"definitely-not-a-subcommand"}) == 2);
}

TEST_CASE("gen-code feeds capability and decode end to end") {
    const std::string spec =
        put("g221.json", "{\"kind\":\"gabidulin\",\"q\":2,\"m\":2,\"n\":2,\"k\":1}\n");
    const std::string code = (fixture_dir() / "c221.code").string();
    const std::string i2 = put("cap-i2.mat", "2 2 2\n1 0\n0 1\n");

    std::string out;
    CHECK(run_cli({"gen-code", spec, "-o", code}, &out) == 0);
    CHECK(out.find("wrote 4 codewords") != std::string::npos);

    CHECK(run_cli({"capability", "--code", code, "--model", "coherent", "--a", i2}, &out) == 0);
    CHECK(out.find("separation delta(C) = 2") != std::string::npos);
    CHECK(out.find("capability tau(C) = 0") != std::string::npos);
    CHECK(out.find("t=0 -> 1") != std::string::npos);

    const std::string y = put("recv.mat", "2 2 2\n1 1\n0 1\n");
    CHECK(run_cli({"decode", "--code", code, "--received", y, "--model", "coherent", "--a", i2},
                  &out) == 0);
    auto j = nlohmann::json::parse(out);
    CHECK(j.at("discrepancy") == "1");
    CHECK(j.at("result").is_number());
    CHECK(j.at("tie_count").get<int>() == 3);

    // radius 0 leaves no codeword in range: failure outcome, not an error
    CHECK(run_cli({"decode", "--code", code, "--received", y, "--model", "coherent", "--a", i2,
                   "--radius", "0"},
                  &out) == 0);
    CHECK(nlohmann::json::parse(out).at("result").is_null());
}

TEST_CASE("capability flags a singleton code") {
    const std::string one = put("one.code", "2 2 2\n1 0\n0 1\n");
    std::string out;
    CHECK(run_cli({"capability", "--code", one, "--model", "noncoherent"}, &out) == 0);
    CHECK(out.find("tau(C) = inf") != std::string::npos);
    CHECK(out.find("singleton") != std::string::npos);
}

TEST_CASE("simulate emits a replayable report") {
    const std::string spec =
        put("g221b.json", "{\"kind\":\"gabidulin\",\"q\":2,\"m\":2,\"n\":2,\"k\":1}\n");
    const std::string code = (fixture_dir() / "c221b.code").string();
    const std::string i2 = put("sim-i2.mat", "2 2 2\n1 0\n0 1\n");
    const std::string first = (fixture_dir() / "sim-first.json").string();
    const std::string second = (fixture_dir() / "sim-second.json").string();

    CHECK(run_cli({"gen-code", spec, "-o", code}) == 0);
    CHECK(run_cli({"simulate", "--code", code, "--model", "coherent", "--a", i2, "--radius",
                   "0", "-o", first}) == 0);
    CHECK(run_cli({"simulate", "--replay", first, "-o", second}) == 0);
    CHECK(slurp_file(first) == slurp_file(second));
    auto j = nlohmann::json::parse(slurp_file(first));
    CHECK(j.at("verdict") == "CONFIRMED");
    CHECK(j.at("replay").contains("codewords"));
}

TEST_CASE("verify runs a named suite and rejects unknown names") {
    std::string out;
    CHECK(run_cli({"verify", "metric-axioms"}, &out) == 0);
    CHECK(out.find("[PASS] metric-axioms") != std::string::npos);
    CHECK(run_cli({"verify", "metric-axioms", "--json"}, &out) == 0);
    auto j = nlohmann::json::parse(out);
    CHECK(j.at("all_pass") == true);
    CHECK(j.at("suites").size() == 1);
    CHECK(run_cli({"verify", "lemma-one"}) == 2);
}

TEST_CASE("bounds prints rank and network forms") {
    std::string out;
    CHECK(run_cli({"bounds", "--q", "2", "--n", "3", "--m", "3", "--d", "3"}, &out) == 0);
    CHECK(out == "8\n");
    CHECK(run_cli({"bounds", "--network", "--code-size", "8", "--delta-edge", "3",
                   "--delta-transfer", "3", "--n", "3", "--rho", "0", "--q", "2", "--m", "3"},
                  &out) == 0);
    CHECK(out.find("met with equality") != std::string::npos);
}
