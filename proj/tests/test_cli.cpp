#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#ifndef DELTACOMB_CLI_PATH
#define DELTACOMB_CLI_PATH "./deltacomb"
#endif

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(DELTACOMB_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) result.out.append(buf, n);
    const int rc = pclose(pipe);
    result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return result;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("table output matches the printed rows") {
    const RunResult r = run_cli("table --n 7");
    CHECK(r.status == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 7);
    CHECK(rows[0] == "1: a");
    CHECK(rows[1] == "2: a^2 - 1");
    CHECK(rows[2] == "3: a^3 - (2a + b)");
    CHECK(rows[3] == "4: a^4 - (3a^2 + 2ab + b^2) + 1");
    CHECK(rows[4] == "5: a^5 - (4a^3 + 3a^2b + 2ab^2 + b^3) + (3a + 2b)");
    CHECK(rows[5] == "6: a^6 - (5a^4 + 4a^3b + 3a^2b^2 + 2ab^3 + b^4) + (6a^2 + 6ab + 3b^2) - 1");
    CHECK(rows[6] ==
          "7: a^7 - (6a^5 + 5a^4b + 4a^3b^2 + 3a^2b^3 + 2ab^4 + b^5) + "
          "(10a^3 + 12a^2b + 9ab^2 + 4b^3) - (4a + 3b)");
}

TEST_CASE("sweep CSV shape") {
    const RunResult r = run_cli("sweep --n 1 --natural-units --k-lo 0.5 --k-hi 2.5 --steps 2");
    CHECK(r.status == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == "k,T,R");
    CHECK(rows[1].substr(0, 4) == "0.5,");
    CHECK(rows[2].substr(0, 4) == "2.5,");
}

TEST_CASE("sweep values survive a parse round-trip at 12 digits") {
    const RunResult r = run_cli("sweep --n 2 --natural-units --steps 50");
    CHECK(r.status == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 51);
    double prev_k = 0.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        double k = 0.0, t = 0.0, rr = 0.0;
        REQUIRE(std::sscanf(rows[i].c_str(), "%lf,%lf,%lf", &k, &t, &rr) == 3);
        CHECK(k > prev_k);
        prev_k = k;
        CHECK(t >= 0.0);
        CHECK(t <= 1.0);
        CHECK(std::abs(t + rr - 1.0) < 1e-9);
        char buf[128];
        std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g", k, t, rr);
        CHECK(rows[i] == buf);
    }
}

TEST_CASE("monotone single-barrier sweep") {
    const RunResult r = run_cli("sweep --n 1 --natural-units --steps 200");
    CHECK(r.status == 0);
    const auto rows = lines(r.out);
    double prev = -1.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        double k, t, rr;
        REQUIRE(std::sscanf(rows[i].c_str(), "%lf,%lf,%lf", &k, &t, &rr) == 3);
        CHECK(t > prev);
        prev = t;
    }
}

TEST_CASE("resonances CSV") {
    const RunResult none = run_cli("resonances --n 1 --natural-units --k-lo 0.1 --k-hi 10");
    CHECK(none.status == 0);
    CHECK(none.out == "k_star,T_peak\n");

    const RunResult some = run_cli("resonances --n 2 --natural-units --k-lo 0.1 --k-hi 10");
    CHECK(some.status == 0);
    const auto rows = lines(some.out);
    REQUIRE(rows.size() >= 2);
    CHECK(rows[0] == "k_star,T_peak");
    int near_unit = 0;
    double prev_k = 0.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        double k_star, t_peak;
        REQUIRE(std::sscanf(rows[i].c_str(), "%lf,%lf", &k_star, &t_peak) == 2);
        CHECK(k_star > prev_k);
        prev_k = k_star;
        if (t_peak >= 0.99) ++near_unit;
    }
    CHECK(near_unit >= 1);
}

TEST_CASE("verify passes and honors a corrupted tolerance") {
    const RunResult good = run_cli("verify --n 7 --seed 42");
    CHECK(good.status == 0);
    CHECK(good.out.find("identity N=7") != std::string::npos);
    CHECK(good.out.find("boundary N=7") != std::string::npos);
    CHECK(good.out.find("formula  T2") != std::string::npos);
    CHECK(good.out.find("formula  T4") != std::string::npos);
    CHECK(good.out.find("VERIFY PASS") != std::string::npos);

    // the two-barrier report carries the T2 cross-formula line but no T4
    const RunResult two = run_cli("verify --n 2 --seed 42");
    CHECK(two.status == 0);
    CHECK(two.out.find("formula  T2") != std::string::npos);
    CHECK(two.out.find("formula  T4") == std::string::npos);

    const RunResult forced = run_cli("verify --n 2 --seed 42 --tol 1e-30");
    CHECK(forced.status != 0);
    CHECK(forced.out.find("FAIL") != std::string::npos);
}

TEST_CASE("deterministic output bytes") {
    const std::string sweep_args = "sweep --n 4 --natural-units --steps 300 --seed 7";
    CHECK(run_cli(sweep_args).out == run_cli(sweep_args).out);

    const std::string verify_args = "verify --n 3 --seed 7";
    CHECK(run_cli(verify_args).out == run_cli(verify_args).out);
}

TEST_CASE("output file matches stdout bytes") {
    const std::string path = "cli_test_sweep.csv";
    const RunResult direct = run_cli("sweep --n 2 --natural-units --steps 25");
    const RunResult to_file =
        run_cli("sweep --n 2 --natural-units --steps 25 --output " + path);
    CHECK(to_file.status == 0);
    CHECK(to_file.out.empty());
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream contents;
    contents << in.rdbuf();
    CHECK(contents.str() == direct.out);
    std::remove(path.c_str());
}

TEST_CASE("invalid arguments exit nonzero") {
    CHECK(run_cli("sweep --n 0").status != 0);
    CHECK(run_cli("sweep --k-lo 5 --k-hi 1").status != 0);
    CHECK(run_cli("sweep --steps 1").status != 0);
    CHECK(run_cli("sweep --lambda 0").status != 0);
    CHECK(run_cli("nonsense").status != 0);
    CHECK(run_cli("").status != 0);  // subcommand required
}
