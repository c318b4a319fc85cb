#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "frozen.hpp"

#ifndef SU11_CLI_PATH
#error "SU11_CLI_PATH must point at the built CLI binary"
#endif

namespace {

const std::string kTmp = "/tmp/su11_unit_cli";

int run_cli(const std::string& args, const std::string& out_file) {
    const std::string cmd =
        std::string(SU11_CLI_PATH) + " " + args + " > " + out_file + " 2>/dev/null";
    const int rc = std::system(cmd.c_str());
    REQUIRE(rc != -1);
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) out.push_back(line);
    return out;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string field;
    while (std::getline(is, field, ',')) out.push_back(field);
    return out;
}

}  // namespace

TEST_CASE("cli coeffs emits the transport coefficients") {
    const std::string out = kTmp + "_coeffs.csv";
    CHECK(run_cli("coeffs --omega 3 --lambda 1 --time 1.5707963267948966", out) == 0);
    const auto ls = lines_of(slurp(out));
    REQUIRE(ls.size() == 2);
    CHECK(ls[0] == "t,regime,r1,r2,r3,j,s,v");
    const auto f = split_csv(ls[1]);
    REQUIRE(f.size() == 8);
    CHECK(f[1] == "oscillatory");
    for (int i = 0; i < 6; ++i)
        CHECK(std::stod(f[2 + i]) == doctest::Approx(frozen::kCoA[i]).epsilon(1e-12));
}

TEST_CASE("cli eval reports both paths") {
    const std::string out = kTmp + "_eval.json";
    CHECK(run_cli("eval --family pcs --r 1 --phi 1 --k 0.5 --omega 3 --lambda 1 "
                  "--time 1.5707963267948966 --path paper --format json",
                  out) == 0);
    const auto j = nlohmann::json::parse(slurp(out));
    CHECK(j["tool_version"] == "1.0.0");
    CHECK(j["path"] == "paper");
    CHECK(j["var_x"].get<double>() == doctest::Approx(frozen::kPcsLitVarX).epsilon(1e-12));
    CHECK(j["mean_kz"].get<double>() == doctest::Approx(frozen::kPcsLitKz).epsilon(1e-12));

    CHECK(run_cli("eval --family pcs --r 1 --phi 1 --k 0.5 --omega 3 --lambda 1 "
                  "--time 1.5707963267948966 --path oracle --format json",
                  out) == 0);
    const auto jo = nlohmann::json::parse(slurp(out));
    CHECK(jo["path"] == "oracle");
    CHECK(jo["var_x"].get<double>() == doctest::Approx(frozen::kPcsOrcVarX).epsilon(1e-12));

    // The closed-form path is the default.
    CHECK(run_cli("eval --family pcs --r 1 --phi 1 --k 0.5 --omega 3 --lambda 1 "
                  "--time 1.5707963267948966 --format json",
                  out) == 0);
    CHECK(nlohmann::json::parse(slurp(out))["path"] == "paper");

    // bgcs family selection.
    CHECK(run_cli("eval --family bgcs --zmag 2 --phi 1 --k 0.5 --omega 3 --lambda 1 "
                  "--time 1 --format json",
                  out) == 0);
    const auto jb = nlohmann::json::parse(slurp(out));
    CHECK(jb["var_x"].get<double>() == doctest::Approx(frozen::kBgcsLitVarX).epsilon(1e-12));
}

TEST_CASE("cli scan emits the grid table") {
    const std::string out = kTmp + "_scan.csv";
    CHECK(run_cli("scan --family pcs --omega 1 --lambda 0.5 --k 0.5 --time 0 "
                  "--grid r:-2:2:9 --grid phi:0:6.283185307179586:8 --path oracle",
                  out) == 0);
    const auto ls = lines_of(slurp(out));
    REQUIRE(ls.size() == 1 + 9 * 8);
    CHECK(ls[0] == "axis1,axis2,f_x,f_y,mask_x,mask_y,error_code");
    const auto row = split_csv(ls[1]);
    REQUIRE(row.size() == 7);
    CHECK(std::stod(row[0]) == -2.0);
    CHECK(row[6] == "0");
}

TEST_CASE("cli scan default grid runs on the closed-form path") {
    const std::string out = kTmp + "_scan_default.csv";
    CHECK(run_cli("scan --family bgcs --omega 3 --lambda 1 --k 0.5 --time 1", out) == 0);
    const auto ls = lines_of(slurp(out));
    CHECK(ls.size() == 1 + 201 * 201);
}

TEST_CASE("cli rejects oversized oracle scans unless forced") {
    const std::string out = kTmp + "_guard.csv";
    CHECK(run_cli("scan --family pcs --omega 1 --lambda 0.5 --k 0.5 --time 0 --path oracle",
                  out) == 1);
    CHECK(run_cli("scan --family pcs --omega 1 --lambda 0.5 --k 0.5 --time 0 --path oracle "
                  "--grid r:-1:1:65 --grid phi:0:6.283185307179586:64",
                  out) == 1);
    CHECK(run_cli("scan --family pcs --omega 1 --lambda 0.5 --k 0.5 --time 0 --path oracle "
                  "--grid r:-1:1:65 --grid phi:0:6.283185307179586:64 --force",
                  out) == 0);
}

TEST_CASE("cli figure 7 profile") {
    const std::string out = kTmp + "_fig7.csv";
    CHECK(run_cli("figure --n 7", out) == 0);
    const auto ls = lines_of(slurp(out));
    REQUIRE(ls.size() == 1 + 720);
    CHECK(ls[0] == "phi,f_x,f_y,error_code");
}

TEST_CASE("cli figure output is byte-identical across runs and thread counts") {
    const std::string a = kTmp + "_fig2_a.csv", b = kTmp + "_fig2_b.csv";
    CHECK(run_cli("figure --n 2 --threads 1", a) == 0);
    CHECK(run_cli("figure --n 2 --threads 4", b) == 0);
    const std::string sa = slurp(a), sb = slurp(b);
    CHECK(sa == sb);
    CHECK(!sa.empty());
}

TEST_CASE("cli exit codes") {
    const std::string out = kTmp + "_err.txt";
    CHECK(run_cli("eval --family quux", out) == 1);                    // usage
    CHECK(run_cli("coeffs --omega 1 --lambda 1 --time 1 --time-unit gt", out) == 1);  // domain
    CHECK(run_cli("eval --family pcs --omega 1 --lambda 2 --time 300", out) == 2);    // overflow
    CHECK(run_cli("figure --n 12", out) == 1);
    CHECK(run_cli("", out) == 1);  // subcommand required
}

TEST_CASE("cli validate reports a consistent ledger") {
    const std::string out = kTmp + "_validate.json";
    CHECK(run_cli("validate --format json", out) == 0);
    const auto j = nlohmann::json::parse(slurp(out));
    CHECK(j["ok"] == true);
    CHECK(j["rows"].size() >= 30);
    for (const auto& row : j["rows"]) CHECK(row["pass"] == true);
}
