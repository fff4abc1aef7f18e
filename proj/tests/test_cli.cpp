#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

// End-to-end checks of the command-line tool (binary path injected by CMake).

namespace {

struct CmdResult {
    int exit_code;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    std::string cmd = std::string(GNBD_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> lines;
    std::istringstream is(s);
    std::string line;
    while (std::getline(is, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("pmf csv: header, normalization, determinism") {
    CmdResult r = run_cli("pmf --nu 2 --tau 0.3 --m 1");
    CHECK(r.exit_code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() > 2);
    CHECK(lines[0] == "j,p_j");
    double sum = 0.0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto comma = lines[i].find(',');
        REQUIRE(comma != std::string::npos);
        sum += std::strtod(lines[i].c_str() + comma + 1, nullptr);
    }
    CHECK(std::abs(sum - 1.0) <= 1e-9);

    CmdResult again = run_cli("pmf --nu 2 --tau 0.3 --m 1");
    CHECK(again.out == r.out);  // byte-identical
}

TEST_CASE("pmf json carries the tail bound and meta") {
    CmdResult r = run_cli("pmf --nu 2 --tau 0.3 --m 1 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"tail_bound\"") != std::string::npos);
    CHECK(r.out.find("\"library_version\"") != std::string::npos);
}

TEST_CASE("moments and mgf values") {
    CmdResult m = run_cli("moments --nu 2 --tau 0.3 --m 1");
    CHECK(m.exit_code == 0);
    CHECK(m.out.find("2.7142857142857144") != std::string::npos);

    CmdResult g = run_cli("mgf --nu 2 --tau 0.3 --m 1 --xi-re 0.5");
    CHECK(g.exit_code == 0);
    CHECK(g.out.find("0.370781001185330") != std::string::npos);
}

TEST_CASE("mandel range reproduces the increasing critical-intensity curve") {
    CmdResult r = run_cli("mandel --nu 5.5 --m-range 0:5");
    CHECK(r.exit_code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 7);
    CHECK(lines[0] == "m,tau_crit,rho");
    double prev = -1.0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto first = lines[i].find(',');
        double tc = std::strtod(lines[i].c_str() + first + 1, nullptr);
        CHECK(tc > prev);
        prev = tc;
    }
}

TEST_CASE("decompose atoms sum to one") {
    CmdResult r = run_cli("decompose --nu 2 --tau 0.3 --m 1");
    CHECK(r.exit_code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 4);
    double sum = 0.0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto comma = lines[i].find(',');
        sum += std::strtod(lines[i].c_str() + comma + 1, nullptr);
    }
    CHECK(std::abs(sum - 1.0) <= 1e-12);
}

TEST_CASE("levy and idd json artifacts") {
    CmdResult l = run_cli("levy --nu 2 --tau 0.05 --m 1 --format json");
    CHECK(l.exit_code == 0);
    CHECK(l.out.find("\"drift\": 1") != std::string::npos);
    CHECK(l.out.find("\"nb_constant\": 4.0") != std::string::npos);
    CHECK(l.out.find("\"truncation_error\"") != std::string::npos);

    CmdResult i = run_cli("idd --nu 2 --tau 0.05 --m 1 --format json");
    CHECK(i.exit_code == 0);
    CHECK(i.out.find("\"lambda\": 0.5193145767821807") != std::string::npos);
    CHECK(i.out.find("\"lambda_printed\": 0.3654346936195291") != std::string::npos);
}

TEST_CASE("sample and path: seeded determinism and column layout") {
    CmdResult a = run_cli("sample --nu 2 --tau 0.05 --m 1 --t 1 --n 50 --seed 42");
    CmdResult b = run_cli("sample --nu 2 --tau 0.05 --m 1 --t 1 --n 50 --seed 42");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(lines_of(a.out).size() == 51);
    CmdResult c = run_cli("sample --nu 2 --tau 0.05 --m 1 --t 1 --n 50 --seed 43");
    CHECK(c.out != a.out);

    CmdResult p = run_cli("path --nu 2 --tau 0.05 --m 1 --horizon 3 --steps 6 --seed 7");
    CHECK(p.exit_code == 0);
    auto lines = lines_of(p.out);
    CHECK(lines[0] == "time,jumps_sum,drift_accrual,value");
    CHECK(lines.size() >= 8);  // grid rows at minimum
    CmdResult p2 = run_cli("path --nu 2 --tau 0.05 --m 1 --horizon 3 --steps 6 --seed 7");
    CHECK(p2.out == p.out);
}

TEST_CASE("verify emits a json report with resolved constants") {
    CmdResult r = run_cli("verify --nu 2 --tau 0.05 --m 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"all_pass\": true") != std::string::npos);
    CHECK(r.out.find("\"nb_constant_resolved\": 4.0") != std::string::npos);
    CHECK(r.out.find("\"a2_sign_resolved\": 1.0") != std::string::npos);
    CHECK(r.out.find("\"idcf_ratio_measured\"") != std::string::npos);
}

TEST_CASE("exit codes") {
    // domain error -> 2, with a machine-parsable record
    CmdResult d = run_cli("pmf --nu 0.3 --tau 0.5 --m 0");
    CHECK(d.exit_code == 2);
    CHECK(d.out.find("\"error\":\"domain\"") != std::string::npos);

    CmdResult d2 = run_cli("levy --nu 2 --tau 0.5 --m 1");  // tau above tau*
    CHECK(d2.exit_code == 2);

    // usage errors -> 1
    CHECK(run_cli("sample --nu 2 --tau 0.05 --m 1").exit_code == 1);   // missing seed
    CHECK(run_cli("pmf --nu 2 --tau 0.3 --m 1 --seed 5").exit_code == 1);  // seed rejected
    CHECK(run_cli("pmf --tau 0.3").exit_code == 1);                     // missing required
    CHECK(run_cli("mandel --nu 5.5 --m-range 5").exit_code == 1);
}

TEST_CASE("output file writing") {
    std::string path = "/tmp/gnbd_cli_test_out.csv";
    std::remove(path.c_str());
    CmdResult r = run_cli("moments --nu 2 --tau 0.3 --m 1 --output " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    REQUIRE(f.good());
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str().find("mean,variance") != std::string::npos);
    std::remove(path.c_str());
}
