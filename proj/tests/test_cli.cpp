#include <supercong/cli.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>
#include <vector>

using namespace supercong;

namespace {

struct CliRun {
    int rc;
    std::string out, err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int rc = run_cli(std::move(args), out, err);
    return {rc, out.str(), err.str()};
}

std::size_t count_occurrences(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
    return n;
}

} // namespace

TEST_CASE("verify: json report for a single (claim, prime)") {
    const CliRun r = run({"verify", "--claims", "thm11_half", "--primes", "5..5", "--path", "both",
                          "--format", "json"});
    CHECK(r.rc == 0);
    CHECK(r.out.find("\"claim_id\":\"thm11_half\"") != std::string::npos);
    CHECK(r.out.find("\"p\":5") != std::string::npos);
    CHECK(r.out.find("\"modulus\":\"625\"") != std::string::npos);
    CHECK(r.out.find("\"lhs_residue\":\"505\"") != std::string::npos);
    CHECK(r.out.find("\"rhs_residue\":\"505\"") != std::string::npos);
    CHECK(r.out.find("\"residual_valuation\":4") != std::string::npos);
    CHECK(r.out.find("\"status\":\"pass\"") != std::string::npos);
    CHECK(r.out.find("\"conjecture\":false") != std::string::npos);
    CHECK(r.out.find("\"elapsed_ms\":0") != std::string::npos);
}

TEST_CASE("verify: full pass over a range counts one record per prime") {
    const CliRun r = run({"verify", "--claims", "thm11_half", "--primes", "5..97", "--path", "both",
                          "--format", "json"});
    CHECK(r.rc == 0);
    CHECK(count_occurrences(r.out, "\"status\":\"pass\"") == primes_in(5, 97).size());
    CHECK(count_occurrences(r.out, "\"status\":\"fail\"") == 0);
}

TEST_CASE("verify: csv with an empty prime range is just the header") {
    const CliRun r = run({"verify", "--claims", "thm11_half", "--primes", "14..16", "--format", "csv"});
    CHECK(r.rc == 0);
    CHECK(r.out ==
          "claim_id,p,modulus,lhs_residue,rhs_residue,residual_valuation,status,conjecture,elapsed_ms\n");
}

TEST_CASE("verify: usage errors exit 2 before any work") {
    CHECK(run({"verify", "--claims", "nosuch", "--primes", "5..7"}).rc == 2);
    CHECK(run({"verify", "--claims", "thm11_half", "--primes", "9..5"}).rc == 2);
    CHECK(run({"verify", "--claims", "thm11_half", "--primes", "abc"}).rc == 2);
    CHECK(run({"verify", "--claims", "thm11_half", "--primes", "5..7", "--format", "yaml"}).rc == 2);
    CHECK(run({"verify", "--claims", "thm11_half", "--primes", "5..7", "--path", "warp"}).rc == 2);
    CHECK(run({"verify", "--claims", "thm11_half"}).rc == 2); // missing --primes
    CHECK(run({}).rc == 2);                                   // missing subcommand
    CHECK(run({"frobnicate"}).rc == 2);
}

TEST_CASE("verify: byte-identical output across worker counts") {
    const std::vector<std::string> base = {"verify", "--claims", "all", "--primes", "3..60",
                                           "--format", "json"};
    auto with_jobs = [&](const char* n) {
        auto args = base;
        args.push_back("--jobs");
        args.push_back(n);
        return run(args);
    };
    const CliRun a = with_jobs("1"), b = with_jobs("8");
    CHECK(a.rc == 0);
    CHECK(b.rc == 0);
    REQUIRE(a.out == b.out);
}

TEST_CASE("verify: conjecture rows are flagged and never fail the process") {
    const CliRun r = run({"verify", "--claims", "conj14", "--primes", "5..40", "--format", "csv"});
    CHECK(r.rc == 0);
    CHECK(count_occurrences(r.out, ",true,") == primes_in(5, 40).size());
}

TEST_CASE("verify: table format and --out destination") {
    const CliRun r = run({"verify", "--claims", "morley", "--primes", "5..20", "--format", "table"});
    CHECK(r.rc == 0);
    CHECK(r.out.find("claim") != std::string::npos);
    CHECK(r.out.find("morley") != std::string::npos);

    const std::string path = "/tmp/supercong_cli_test_report.json";
    const CliRun w = run({"verify", "--claims", "morley", "--primes", "5..20", "--format", "json",
                          "--out", path});
    CHECK(w.rc == 0);
    CHECK(w.out.empty());
    std::ifstream f(path);
    REQUIRE(f.good());
    std::stringstream buf;
    buf << f.rdbuf();
    CHECK(buf.str().find("\"claim_id\":\"morley\"") != std::string::npos);
}

TEST_CASE("wz subcommand checks the certificate grid") {
    const CliRun ok1 = run({"wz", "--pair", "1", "--nmax", "8", "--kmax", "8"});
    CHECK(ok1.rc == 0);
    CHECK(ok1.out.find("holds at every grid point") != std::string::npos);
    const CliRun ok2 = run({"wz", "--pair", "2", "--nmax", "8", "--kmax", "8"});
    CHECK(ok2.rc == 0);
    CHECK(run({"wz", "--pair", "3", "--nmax", "8", "--kmax", "8"}).rc == 2);
}

TEST_CASE("identities subcommand emits the exact partial-sum values") {
    const CliRun r = run({"identities", "--mmax", "1"});
    CHECK(r.rc == 0);
    CHECK(r.out.find("-27/8") != std::string::npos);
    CHECK(r.out.find("-315/128") != std::string::npos);
    CHECK(r.out.find("MISMATCH") == std::string::npos);
}

TEST_CASE("integrality subcommand reports denominators") {
    const CliRun r = run({"integrality", "--nmax", "5"});
    CHECK(r.rc == 0);
    CHECK(r.out.find("n=2  S(n)=7  denominator=1  consistent") != std::string::npos);
    CHECK(r.out.find("n=4  S(n)=229372/3  denominator=3  consistent") != std::string::npos);
    CHECK(r.out.find("non-integer S(n) at n = 4") != std::string::npos);
}

TEST_CASE("euler subcommand, exact and modular") {
    const CliRun exact = run({"euler", "--upto", "10"});
    CHECK(exact.rc == 0);
    CHECK(exact.out.find("E_10 = -50521") != std::string::npos);
    const CliRun mod = run({"euler", "--upto", "4", "--mod", "7"});
    CHECK(mod.rc == 0);
    CHECK(mod.out.find("E_4 = 5 (mod 7)") != std::string::npos);
    CHECK(run({"euler", "--upto", "10", "--mod", "7"}).rc == 2);
}

TEST_CASE("anomalies subcommand reports the p = 3 boundary exactly") {
    const CliRun r = run({"anomalies"});
    CHECK(r.rc == 0);
    CHECK(r.out.find("thm11_half") != std::string::npos);
    CHECK(r.out.find("v_3(lhs-rhs)=3") != std::string::npos);
    CHECK(r.out.find("lemma33") != std::string::npos);
    CHECK(r.out.find("fails") != std::string::npos);
    CHECK(r.out.find("holds") != std::string::npos);
}

TEST_CASE("help exits zero") {
    CHECK(run({"--help"}).rc == 0);
    CHECK(run({"verify", "--help"}).rc == 0);
}
