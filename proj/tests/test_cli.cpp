#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "xiconst/big_real.hpp"

using namespace xiconst;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " " + std::string(XICONST_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

std::vector<json> json_lines(const std::string& out) {
    std::vector<json> v;
    std::istringstream in(out);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty() && line[0] == '{') v.push_back(json::parse(line));
    return v;
}

} // namespace

TEST_CASE("compute emits records whose decimal strings round-trip exactly") {
    RunResult r = run_cli("compute --n-max 3 --bits 128");
    REQUIRE(r.exit_code == 0);
    std::vector<json> recs = json_lines(r.out);
    REQUIRE(recs.size() == 3);
    for (const json& rec : recs) {
        CHECK(rec["bits"] == 128);
        for (const char* key : {"lambda_over_n", "c", "d", "S1", "S2"}) {
            std::string s = rec[key].get<std::string>();
            BigReal v = BigReal::from_string(s, 128);
            CHECK(v.to_decimal() == s); // decimal-string fidelity both ways
        }
    }
    // record invariants: lambda/n - c - 1/n + ln(pi)/2 - d = 0 and S2/n = c
    const long bits = 128;
    for (const json& rec : recs) {
        unsigned n = rec["n"].get<unsigned>();
        BigReal lam = BigReal::from_string(rec["lambda_over_n"].get<std::string>(), bits);
        BigReal c = BigReal::from_string(rec["c"].get<std::string>(), bits);
        BigReal d = BigReal::from_string(rec["d"].get<std::string>(), bits);
        BigReal S2 = BigReal::from_string(rec["S2"].get<std::string>(), bits);
        BigReal res = lam - c - BigReal(1L, bits) / BigReal(static_cast<long>(n), bits)
                    + ldexp2(BigReal::ln_pi(bits), -1) - d;
        CHECK(abs(res) < ldexp2(BigReal(1L, 64), -bits / 2));
        CHECK(abs(S2 / BigReal(static_cast<long>(n), bits) - c) < ldexp2(BigReal(1L, 64), -bits / 2));
    }
}

TEST_CASE("compute with two methods reports strong agreement digits") {
    RunResult r = run_cli("compute --n-max 4 --bits 128 --methods series,contour");
    REQUIRE(r.exit_code == 0);
    std::vector<json> recs = json_lines(r.out);
    REQUIRE(recs.size() == 4);
    for (const json& rec : recs) {
        CHECK(rec["method"] == "contour,series");
        CHECK(rec["agree_digits"].get<long>() >= 128 / 4 * 0.301);
    }
}

TEST_CASE("compute csv has the documented header") {
    RunResult r = run_cli("compute --n-max 2 --bits 128 --format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("n,lambda_over_n,c,d,S1,S2,method,bits,agree_digits\n", 0) == 0);
}

TEST_CASE("bits precedence: flag beats environment beats config file") {
    std::string conf = "/tmp/xiconst_cli_e2e.conf";
    {
        std::ofstream f(conf);
        f << "bits=96\nn-max=2\n";
    }
    RunResult file_only = run_cli("compute --config " + conf);
    REQUIRE(file_only.exit_code == 0);
    CHECK(json_lines(file_only.out)[0]["bits"] == 96);

    RunResult env_over = run_cli("compute --config " + conf, "XICONST_BITS=160");
    CHECK(json_lines(env_over.out)[0]["bits"] == 160);

    RunResult flag_over = run_cli("compute --config " + conf + " --bits 224", "XICONST_BITS=160");
    CHECK(json_lines(flag_over.out)[0]["bits"] == 224);
}

TEST_CASE("exit codes: usage 2, verify pass 0, unknown suite 2") {
    CHECK(run_cli("compute --n-max 0").exit_code == 2);
    CHECK(run_cli("verify --suite no-such-suite").exit_code == 2);
    CHECK(run_cli("bogus-subcommand").exit_code == 2);
    CHECK(run_cli("verify --suite bounds --n-max 32 --bits 128").exit_code == 0);
    CHECK(run_cli("compute --n-max 2 --zeros-file /nonexistent --methods zeros").exit_code == 2);
}

TEST_CASE("figures produce the four CSVs with documented shapes") {
    std::string dir = "/tmp/xiconst_figs_e2e";
    RunResult r = run_cli("figures --n-max 8 --bits 128 --out-dir " + dir);
    REQUIRE(r.exit_code == 0);

    auto read_lines = [&](const std::string& name) {
        std::ifstream f(dir + "/" + name);
        REQUIRE(f.good());
        std::vector<std::string> lines;
        std::string line;
        while (std::getline(f, line)) lines.push_back(line);
        return lines;
    };
    std::vector<std::string> f1 = read_lines("fig1.csv");
    CHECK(f1[0] == "n,abs_c_n,bound_6_over_pi2_sqrt_n");
    CHECK(f1.size() == 9); // header + n = 1..8
    // bound at n = 4 is 6/(pi^2 * 2) = 0.3039635...
    {
        std::istringstream row(f1[4]);
        std::string n, absc, bound;
        std::getline(row, n, ',');
        std::getline(row, absc, ',');
        std::getline(row, bound, ',');
        CHECK(n == "4");
        BigReal b = BigReal::from_string(bound, 128);
        BigReal expect = BigReal(3L, 128) / (BigReal::pi(128) * BigReal::pi(128));
        CHECK(abs(b - expect) < ldexp2(BigReal(1L, 64), -100));
    }
    CHECK(read_lines("fig2.csv").size() == 9);
    CHECK(read_lines("fig3.csv").size() == 7); // header + n = 2..7 (n_max - 2 rows)
    CHECK(read_lines("fig4.csv").size() == 9); // header + k = 0..7 (sequence length)
}

TEST_CASE("zeros subcommand reports count and comparison") {
    RunResult r = run_cli(std::string("zeros --zeros-file ") + XICONST_TEST_DATA_DIR
                          + "/zeros100.txt --n 1 --bits 128");
    REQUIRE(r.exit_code == 0);
    json j = json_lines(r.out)[0];
    CHECK(j["count"] == 100);
    CHECK(BigReal::from_string(j["abs_diff"].get<std::string>(), 64) < BigReal(0.01, 64));

    // descending ordinates are rejected with a parse error (exit 2)
    std::string bad = "/tmp/xiconst_bad_zeros_cli.txt";
    {
        std::ofstream f(bad);
        f << "14.13\n13.99\n";
    }
    CHECK(run_cli("zeros --zeros-file " + bad).exit_code == 2);
}

TEST_CASE("cli output is byte-identical across runs") {
    RunResult a = run_cli("compute --n-max 5 --bits 160 --methods series,stieltjes");
    RunResult b = run_cli("compute --n-max 5 --bits 160 --methods series,stieltjes");
    CHECK(a.out == b.out);
    RunResult v1 = run_cli("verify --suite lambda-decomp --n-max 8 --bits 160");
    RunResult v2 = run_cli("verify --suite lambda-decomp --n-max 8 --bits 160");
    CHECK(v1.out == v2.out);
}

TEST_CASE("stieltjes subcommand emits the gamma CSV") {
    RunResult r = run_cli("stieltjes --k-max 4 --bits 128");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("k,gamma_k,bits\n", 0) == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line); // header
    std::getline(in, line);
    CHECK(line.rfind("0,5.7721566490", 0) == 0);
}
