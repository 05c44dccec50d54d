// End-to-end checks of the command-line tool: exit codes, output formats,
// and byte-for-byte determinism of seeded runs.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#ifndef CTP_CLI_PATH
#define CTP_CLI_PATH "ctpareto"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout only
};

RunResult run(const std::string& args) {
    const std::string command = std::string(CTP_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer;
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.output.append(buffer.data(), got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::vector<std::pair<double, double>> parse_tsv(const std::string& text) {
    std::vector<std::pair<double, double>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        double x = 0, y = 0;
        REQUIRE(std::sscanf(line.c_str(), "%lf\t%lf", &x, &y) == 2);
        rows.emplace_back(x, y);
    }
    return rows;
}

}  // namespace

TEST_CASE("describe wheaton") {
    const auto r = run("describe --data wheaton");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("n      72") != std::string::npos);
    CHECK(r.output.find("2.125") != std::string::npos);
    CHECK(r.output.find("9.5") != std::string::npos);
    CHECK(r.output.find("12.204") != std::string::npos);
    CHECK(r.output.find("20.125") != std::string::npos);
}

TEST_CASE("describe a CSV file") {
    const auto r = run(std::string("describe --data ") + CTP_DATA_DIR +
                       "/wheaton_river.csv --header");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("12.204") != std::string::npos);
}

TEST_CASE("validate subcommand") {
    const auto valid = run("validate 1 0");
    CHECK(valid.exit_code == 0);
    CHECK(valid.output.find("verdict   valid") != std::string::npos);
    CHECK(valid.output.find("min r(t)  1") != std::string::npos);

    const auto invalid = run("validate 0 -1");
    CHECK(invalid.exit_code == 0);
    CHECK(invalid.output.find("verdict   invalid") != std::string::npos);
    CHECK(invalid.output.find("-0.1666666") != std::string::npos);
    CHECK(invalid.output.find("0.1666666") != std::string::npos);

    const auto square = run("validate 4 -6");
    CHECK(square.output.find("verdict   valid") != std::string::npos);
    CHECK(square.output.find("0.6666666") != std::string::npos);
}

TEST_CASE("fit pareto on wheaton") {
    const auto r = run("fit --family pareto --data wheaton --json - --no-timestamp");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("303.064") != std::string::npos);
    const std::size_t brace = r.output.find('{');
    REQUIRE(brace != std::string::npos);
    const auto json = nlohmann::json::parse(r.output.substr(brace));
    CHECK(std::abs(json["fits"][0]["alpha_hat"].get<double>() - 0.244) < 0.002);
    CHECK(json["fits"][0]["family"] == "pareto");
    CHECK_FALSE(json.contains("timestamp"));
}

TEST_CASE("fit with a missing file exits 1") {
    const auto r = run("fit --family g --data /nonexistent/missing.csv");
    CHECK(r.exit_code == 1);
}

TEST_CASE("unknown family exits 1") {
    const auto r = run("fit --family xyz --data wheaton");
    CHECK(r.exit_code == 1);
}

TEST_CASE("sample subcommand") {
    SUBCASE("n = 0 emits nothing") {
        const auto r = run("sample --family pareto --alpha 2 --x0 1 -n 0");
        CHECK(r.exit_code == 0);
        CHECK(r.output.empty());
    }
    SUBCASE("fixed seed is byte-identical") {
        const std::string cmd = "sample --family ma --params 2.5 --alpha 1.5 --x0 2 -n 50 --seed 9";
        const auto a = run(cmd);
        const auto b = run(cmd);
        CHECK(a.exit_code == 0);
        CHECK(a.output == b.output);
        CHECK_FALSE(a.output.empty());
    }
    SUBCASE("invalid parameters exit 1 with the certificate") {
        const auto r = run("sample --family g --params 0,-1 --alpha 1 --x0 1 -n 10");
        CHECK(r.exit_code == 1);
    }
}

TEST_CASE("curve of the pathological Granzotto fit") {
    const auto r = run("curve --family g --params 0.059,-1 --alpha 0.48 --x0 0.1 --unchecked "
                       "--what pdf --from 0.1 --to 0.6 --steps 500");
    CHECK(r.exit_code == 0);
    const auto rows = parse_tsv(r.output);
    REQUIRE(rows.size() == 500);
    // negative exactly inside the published interval, one grid step slack
    const double step = 0.5 / 499.0;
    for (const auto& [x, v] : rows) {
        if (v < 0.0) {
            CHECK(x > 0.1067108 - step);
            CHECK(x < 0.2248255 + step);
        } else {
            CHECK((x < 0.1067108 + step || x > 0.2248255 - step));
        }
    }
    CHECK(std::any_of(rows.begin(), rows.end(), [](auto& r) { return r.second < 0.0; }));
}

TEST_CASE("curve cdf of a valid fit is nondecreasing") {
    const auto r = run("curve --family ma --data wheaton --starts 40 "
                       "--what cdf --from 0.1 --to 50 --steps 200");
    CHECK(r.exit_code == 0);
    const auto rows = parse_tsv(r.output);
    REQUIRE(rows.size() == 200);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].second >= rows[i - 1].second);
    }
}

TEST_CASE("curve hazard of a pareto fit equals alpha over x") {
    const auto fit = run("fit --family pareto --data wheaton --json - --no-timestamp");
    const auto json = nlohmann::json::parse(fit.output.substr(fit.output.find('{')));
    const double alpha = json["fits"][0]["alpha_hat"].get<double>();

    const auto r = run("curve --family pareto --data wheaton "
                       "--what hazard --from 0.2 --to 30 --steps 100");
    CHECK(r.exit_code == 0);
    for (const auto& [x, v] : parse_tsv(r.output)) {
        CHECK(v == doctest::Approx(alpha / x).epsilon(1e-12));
    }
}

TEST_CASE("compare pareto against tp") {
    const auto r = run("compare --families pareto,tp --data wheaton --starts 40 "
                       "--json - --no-timestamp");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("286.201 (1)") != std::string::npos);
    CHECK(r.output.find("303.064 (2)") != std::string::npos);
}

TEST_CASE("seeded compare runs are byte-identical") {
    const std::string cmd = "compare --families pareto,tp,ma --data wheaton --starts 30 "
                            "--seed 4 --json - --no-timestamp";
    const auto a = run(cmd);
    const auto b = run(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("usage errors exit 1") {
    CHECK(run("").exit_code == 1);
    CHECK(run("fit --data wheaton").exit_code == 1);         // missing --family
    CHECK(run("compare --data wheaton").exit_code == 1);     // needs a family set
    CHECK(run("curve --family ma --params 0.5 --what pdf --from 2 --to 1 --steps 10 "
              "--alpha 1 --x0 1").exit_code == 1);           // empty range
}
