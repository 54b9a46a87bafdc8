#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "qmetro/cli.hpp"

namespace fs = std::filesystem;
using qmetro::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const char* env = std::getenv("QMETRO_TEST_TMP");
    const fs::path dir = fs::path(env ? env : fs::temp_directory_path().string()) / "cli_scratch";
    fs::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("construct then count") {
    const auto path = scratch("shor9.stab").string();
    REQUIRE(call({"construct", "--family", "shor", "--nr", "3", "-o", path}).code == 0);
    const auto r = call({"count", path, "--k", "3"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["ell"] == 27);
    CHECK(j["n"] == 9);
    CHECK(j["signs_consistent"] == true);
}

TEST_CASE("construct to stdout") {
    const auto r = call({"construct", "--family", "qrm1", "--m", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("n=7 name=qrm1_m3\n", 0) == 0);
}

TEST_CASE("sweep qrm1") {
    const auto path = scratch("qrm.csv").string();
    REQUIRE(call({"sweep", "--family", "qrm1", "--m", "3..5", "--csv", path}).code == 0);
    std::ifstream in(path);
    std::string header, line;
    std::getline(in, header);
    CHECK(header == "family,n,ell,qfi_coeff,noiseless_coeff,ghz_coeff,opt_lower,opt_upper,w_max,has_zz,chain_max");
    std::vector<std::string> ells;
    while (std::getline(in, line)) {
        std::stringstream ss(line);
        std::string family, n, ell;
        std::getline(ss, family, ',');
        std::getline(ss, n, ',');
        std::getline(ss, ell, ',');
        ells.push_back(ell);
    }
    CHECK(ells == std::vector<std::string>{"7", "35", "155"});
}

TEST_CASE("output is deterministic") {
    const auto a = call({"sweep", "--family", "thin-surface", "--lx", "2..6", "--threads", "1"});
    const auto b = call({"sweep", "--family", "thin-surface", "--lx", "2..6", "--threads", "3"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto path = scratch("thin3.stab").string();
    call({"construct", "--family", "thin-surface", "--lx", "3", "-o", path});
    CHECK(call({"analyze", path}).out == call({"analyze", path}).out);
    CHECK(call({"qfi", path}).out == call({"qfi", path}).out);
}

TEST_CASE("usage errors exit 2") {
    CHECK(call({"count", scratch("missing.stab").string()}).code == 2);
    CHECK(call({"construct", "--family", "toric", "--nr", "3"}).code == 2);
    CHECK(call({"construct", "--family", "qrm1", "--m", "2"}).code == 2);
    CHECK(call({"construct", "--family", "shor"}).code == 2);
    CHECK(call({"sweep", "--family", "shor", "--nr", "5..3"}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({}).code == 2);
    CHECK(call({"--threads", "0", "optimal-bound", "--n", "5"}).code == 2);
    CHECK(call({"rm-enumerator", "--r", "3", "--m", "6"}).code == 2);
    CHECK(call({"--help"}).code == 0);
}

TEST_CASE("malformed and invalid code files exit 1 with line numbers") {
    const auto bad = scratch("bad.stab").string();
    std::ofstream(bad) << "n=3 name=bad\n+ZZI\n+ZQI\n";
    const auto r = call({"count", bad});
    CHECK(r.code == 1);
    CHECK(r.err.find("line 3") != std::string::npos);

    const auto invalid = scratch("invalid.stab").string();
    std::ofstream(invalid) << "n=2 name=bad\n+XZ\n+ZI\n";
    CHECK(call({"qfi", invalid}).code == 1);
}

TEST_CASE("oracle subcommand") {
    const auto path = scratch("shor9o.stab").string();
    call({"construct", "--family", "shor", "--nr", "3", "-o", path});
    const auto r = call({"oracle", path});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["two_ell"] == 54);
    CHECK(j["gap_matches"] == true);
    CHECK(j["kl_pass"] == true);
    const auto big = scratch("shor18.stab").string();
    call({"construct", "--family", "shor", "--nr", "6", "-o", big});
    CHECK(call({"oracle", big}).code == 2);
}

TEST_CASE("qfi flags the Shor constant") {
    const auto path = scratch("shor9q.stab").string();
    call({"construct", "--family", "shor", "--nr", "3", "-o", path});
    const auto j = nlohmann::json::parse(call({"qfi", path}).out);
    CHECK(j["qfi_coeff"] == 2916);
    CHECK(j["closed_form"]["matches"] == true);
    CHECK(j["closed_form"]["flags"].size() == 1);
}

TEST_CASE("optimal-bound rows") {
    const auto r = call({"optimal-bound", "--n", "5..13", "--step", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("n,value,beta_star,lower,upper,within\n5,10,1,4,20,1\n9,60,", 0) == 0);
}

TEST_CASE("rm-enumerator") {
    const auto r = call({"rm-enumerator", "--r", "1", "--m", "3", "--shortened"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\n4,7\n") != std::string::npos);
    const auto d = nlohmann::json::parse(
        call({"rm-enumerator", "--r", "1", "--m", "5", "--shortened", "--dual", "--format", "json"}).out);
    CHECK(d["coefficients"][28] == 155);
    CHECK(d["dimension"] == 26);
}

TEST_CASE("threads from the environment") {
    setenv("QMETRO_THREADS", "2", 1);
    const auto a = call({"sweep", "--family", "shor", "--nr", "3..4"});
    unsetenv("QMETRO_THREADS");
    CHECK(a.code == 0);
    CHECK(a.out == call({"sweep", "--family", "shor", "--nr", "3..4"}).out);
}

TEST_CASE("parse_range") {
    CHECK(qmetro::cli::parse_range("3..5") == std::make_pair<std::size_t, std::size_t>(3, 5));
    CHECK(qmetro::cli::parse_range("7") == std::make_pair<std::size_t, std::size_t>(7, 7));
    CHECK_THROWS(qmetro::cli::parse_range("x..2"));
}
