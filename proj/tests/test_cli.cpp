#include "opcalc/expr.hpp"
#include "opcalc/json_io.hpp"
#include "opcalc/normal_series.hpp"
#include "opcalc/ring.hpp"
#include "opcalc/sheffer.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

using namespace opcalc;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args, bool silence_stderr = true) {
    std::string cmd = std::string(OPCALC_CLI_PATH) + " " + args;
    if (silence_stderr) cmd += " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[512];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST_CASE("nf prints the coefficient list") {
    RunResult r = run_cli("nf \"com(D,U)\" --order 3 --ring Q");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out == "P0 = 1, P1 = -x, P2 = 0, P3 = 0\n");
}

TEST_CASE("nf --json matches the library bytes") {
    Ring q = Ring::rationals();
    for (const char* expr : {"com(D,U)", "integ", "partial", "U^2 o D + 1/3 * I"}) {
        NormalSeries s = normalize(eval_expr(parse_expr(expr), q));
        std::string expected = series_to_json(s, 5).dump() + "\n";
        RunResult r = run_cli("nf \"" + std::string(expr) + "\" --order 5 --json");
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.out == expected);
    }
}

TEST_CASE("nf respects the ring flag") {
    RunResult r = run_cli("nf \"partial\" --order 3 --ring Zmod:2");
    REQUIRE(r.exit_code == 0);
    // partial = sum_{n>=1} U^{n-1} D^n over any ring: the factor n in
    // partial e_n = n e_{n-1} comes from the length of the sum
    REQUIRE(r.out == "P0 = 0, P1 = 1, P2 = x, P3 = x^2\n");

    RunResult z = run_cli("nf \"2 * U\" --order 1 --ring Zmod:2");
    REQUIRE(z.exit_code == 0);
    REQUIRE(z.out == "P0 = 0, P1 = 0\n");
}

TEST_CASE("eq exit codes") {
    REQUIRE(run_cli("eq \"D o U\" \"I\" --order 5").exit_code == 0);
    RunResult r = run_cli("eq \"U o D\" \"I\" --order 5");
    REQUIRE(r.exit_code == 1);
    REQUIRE(r.out.find("differ at n = 0") != std::string::npos);
}

TEST_CASE("summable verdicts") {
    RunResult ok = run_cli("summable \"x^{n} y^{n}\" --upto 20");
    REQUIRE(ok.exit_code == 0);
    REQUIRE(ok.out == "accepted up to n = 20\n");

    RunResult bad = run_cli("summable \"y^{n} x^{n}\" --upto 10");
    REQUIRE(bad.exit_code == 1);
    REQUIRE(bad.out == "rejected at n = 1 (ydeg 0, expected 1)\n");
}

TEST_CASE("apply prints vectors in both forms") {
    RunResult text = run_cli("apply \"partial\" \"e3 + 2*e0\"");
    REQUIRE(text.exit_code == 0);
    REQUIRE(text.out == "3*e2\n");

    RunResult j = run_cli("apply \"integ\" \"e1\" --json");
    REQUIRE(j.exit_code == 0);
    REQUIRE(j.out == vector_to_json(Vector::parse(Ring::rationals(), "1/2*e2")).dump() + "\n");
}

TEST_CASE("sheffer subcommand matches the library") {
    Ring q = Ring::rationals();
    ShefferPair pair(PowerSeries(q, std::vector<RingValue>(5, q.one())),
                     PowerSeries::identity(q, 4));
    std::string expected = sheffer_sequence_to_json(sheffer_sequence(pair, 4)).dump() + "\n";
    RunResult r = run_cli("sheffer --mu \"1,1,1,1,1\" --sigma \"0,1\" --order 4 --json");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out == expected);
}

TEST_CASE("star and umbral read series files and emit series JSON") {
    Ring q = Ring::rationals();
    NormalSeries x = NormalSeries::x(q), y = NormalSeries::y(q);
    auto xfile = write_temp("opcalc_test_x.json", series_to_json(x, 1).dump());
    auto yfile = write_temp("opcalc_test_y.json", series_to_json(y, 1).dump());

    RunResult star_out =
        run_cli("star " + yfile.string() + " " + xfile.string() + " --order 4");
    REQUIRE(star_out.exit_code == 0);
    REQUIRE(star_out.out == series_to_json(NormalSeries::one(q), 4).dump() + "\n");

    RunResult umbral_out =
        run_cli("umbral " + xfile.string() + " " + xfile.string() + " --order 4");
    REQUIRE(umbral_out.exit_code == 0);
    REQUIRE(umbral_out.out == series_to_json(umbral(x, x), 4).dump() + "\n");

    std::filesystem::remove(xfile);
    std::filesystem::remove(yfile);
}

TEST_CASE("error paths: nonzero exit, no partial JSON") {
    // capability error: integ over Z
    RunResult cap = run_cli("nf \"integ\" --order 3 --ring Z --json");
    REQUIRE(cap.exit_code == 3);
    REQUIRE(cap.out.empty());

    // rational scalar over Z
    REQUIRE(run_cli("nf \"1/2 * U\" --order 2 --ring Z").exit_code == 3);

    // usage errors
    REQUIRE(run_cli("nf \"U\"").exit_code == 2);              // missing --order
    REQUIRE(run_cli("nf \"U +\" --order 2").exit_code == 2);  // syntax error
    REQUIRE(run_cli("nf \"U\" --order 2 --ring F7").exit_code == 2);
    REQUIRE(run_cli("frobnicate").exit_code == 2);
    REQUIRE(run_cli("summable \"z^{n}\" --upto 3 --json").out.empty());
    REQUIRE(run_cli("star /nonexistent.json /nonexistent.json --order 3").exit_code == 2);

    // malformed series file
    auto bad = write_temp("opcalc_test_bad.json", "{\"coeffs\": 3");
    RunResult r = run_cli("star " + bad.string() + " " + bad.string() + " --order 3 --json");
    REQUIRE(r.exit_code == 2);
    REQUIRE(r.out.empty());
    std::filesystem::remove(bad);
}

TEST_CASE("help exits zero") {
    REQUIRE(run_cli("--help").exit_code == 0);
    REQUIRE(run_cli("nf --help").exit_code == 0);
}
