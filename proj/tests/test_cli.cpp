#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env_prefix = {}) {
    const std::string cmd =
        env_prefix + std::string(SDFD_TOOL_PATH) + " " + args + " 2>/tmp/sdfd_stderr";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    EXPECT_NE(pipe, nullptr);
    while (fgets(buf.data(), buf.size(), pipe))
        out += buf.data();
    const int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), out};
}

std::string stderr_text() {
    std::ifstream is("/tmp/sdfd_stderr");
    return std::string(std::istreambuf_iterator<char>(is), {});
}

} // namespace

TEST(CliSolve, JsonContainsPublishedEnergy) {
    const auto r = run("solve --symmetry spin --M 1 --D 15 --a 0.1 --re 0.8 --C 0 "
                       "--A 0 --n 0 --kappa -2 --format json");
    ASSERT_EQ(r.exit_code, 0);
    const auto j = json::parse(r.out);
    ASSERT_FALSE(j["roots"].empty());
    bool found = false;
    for (const auto& root : j["roots"])
        if (std::abs(root["E"].get<double>() - (-0.994680673675)) < 1e-6)
            found = true;
    EXPECT_TRUE(found);
}

TEST(CliSolve, ZeroKappaIsAUsageError) {
    const auto r = run("solve --symmetry spin --kappa 0");
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_NE(stderr_text().find("kappa must be nonzero"), std::string::npos);
}

TEST(CliSolve, CsvFormatHasHeaderAndRow) {
    const auto r = run("solve --symmetry spin --n 0 --kappa -2 --format csv");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out.rfind("E,residual,", 0), 0u);
    const auto nl = r.out.find('\n');
    ASSERT_NE(nl, std::string::npos);
    EXPECT_NEAR(std::stod(r.out.substr(nl + 1)), -0.994680673675, 1e-6);
}

TEST(CliSolve, NoRootIsComputationalFailure) {
    const auto r = run("solve --symmetry spin --n 200 --kappa -2");
    EXPECT_EQ(r.exit_code, 2);
}

TEST(CliTable, DiffAgainstCheckedInReference) {
    const auto r = run(std::string("table --preset table1 --format csv --out /tmp/sdfd_t1.csv --diff ") +
                       SDFD_DATA_DIR + "/table1.csv");
    ASSERT_EQ(r.exit_code, 0);
    const auto err = stderr_text();
    EXPECT_NE(err.find("max |dE|"), std::string::npos);
    // stderr reports a diff no larger than 1e-6
    const auto pos = err.find(": ");
    ASSERT_NE(pos, std::string::npos);
    EXPECT_LE(std::abs(std::stod(err.substr(pos + 2))), 1e-6);
}

TEST(CliTable, Table2DiffWithinTolerance) {
    const auto r = run(std::string("table --preset table2 --format csv --out /tmp/sdfd_t2.csv --diff ") +
                       SDFD_DATA_DIR + "/table2.csv");
    ASSERT_EQ(r.exit_code, 0);
    const auto err = stderr_text();
    const auto pos = err.find(": ");
    ASSERT_NE(pos, std::string::npos);
    EXPECT_LE(std::abs(std::stod(err.substr(pos + 2))), 1e-6);
}

TEST(CliTable, DeterministicOutputWithoutStamp) {
    const auto a = run("table --preset table1 --format csv");
    const auto b = run("table --preset table1 --format csv");
    ASSERT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out.find("generated:"), std::string::npos);
    const auto stamped = run("table --preset table1 --format csv --stamp");
    EXPECT_NE(stamped.out.find("generated:"), std::string::npos);
}

TEST(CliTable, JsonRoundTripMatchesCsvEnergies) {
    const auto j = run("table --preset table1 --format json");
    ASSERT_EQ(j.exit_code, 0);
    const auto parsed = json::parse(j.out);
    EXPECT_EQ(parsed["rows"].size(), 64u);
}

TEST(CliWavefunction, NormalizedGroundState) {
    const auto r = run("wavefunction --symmetry spin --n 0 --kappa -2 --points 400 "
                       "--rmax 150 --normalize");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("# normalized: true"), std::string::npos);
    EXPECT_NE(r.out.find("r,z,F,G_partner"), std::string::npos);
    // the quadrature check printed in the header is 1 within 1e-8
    const auto ni = r.out.find("# norm_integral: ");
    ASSERT_NE(ni, std::string::npos);
    EXPECT_NEAR(std::stod(r.out.substr(ni + 17)), 1.0, 1e-8);
    // no sign change in the F column for the ground state
    std::istringstream is(r.out);
    std::string line;
    int signflips = 0;
    double last = 0.0;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#' || line[0] == 'r')
            continue;
        double rr, zz, ff, gg;
        ASSERT_EQ(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &rr, &zz, &ff, &gg), 4);
        if (ff != 0.0 && last != 0.0 && std::signbit(ff) != std::signbit(last))
            ++signflips;
        if (ff != 0.0)
            last = ff;
    }
    EXPECT_EQ(signflips, 0);
}

TEST(CliWavefunction, ExcitedStateHasTwoSignChanges) {
    const auto r = run("wavefunction --symmetry spin --n 2 --kappa -2 --points 2000 "
                       "--rmax 250");
    ASSERT_EQ(r.exit_code, 0);
    std::istringstream is(r.out);
    std::string line;
    int signflips = 0;
    double last = 0.0;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#' || line[0] == 'r')
            continue;
        double rr, zz, ff, gg;
        std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &rr, &zz, &ff, &gg);
        if (ff != 0.0 && last != 0.0 && std::signbit(ff) != std::signbit(last))
            ++signflips;
        if (ff != 0.0)
            last = ff;
    }
    EXPECT_EQ(signflips, 2);
}

TEST(CliWavefunction, ZeroPointsIsAUsageError) {
    const auto r = run("wavefunction --symmetry spin --n 0 --kappa -2 --points 0");
    EXPECT_EQ(r.exit_code, 1);
}

TEST(CliVerify, SingleStateBothOracles) {
    const auto r = run("verify --symmetry spin --n 0 --kappa -2 --oracle both");
    ASSERT_EQ(r.exit_code, 0);
    const auto j = json::parse(r.out);
    EXPECT_TRUE(j["all_within_tolerance"].get<bool>());
    ASSERT_EQ(j["states"].size(), 1u);
    EXPECT_LE(j["states"][0]["delta_E"].get<double>(), 1e-8);
    EXPECT_LE(std::abs(j["states"][0]["nu_residual"].get<double>()), 1e-6);
}

TEST(CliVerify, NuOnlySkipsIntegration) {
    const auto r = run("verify --preset table1 --oracle nu");
    ASSERT_EQ(r.exit_code, 0);
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["states"].size(), 128u);
    EXPECT_TRUE(j["all_within_tolerance"].get<bool>());
    EXPECT_FALSE(j["states"][0].contains("E_shoot"));
}

TEST(CliVerify, ImpossibleToleranceFailsWithExitTwo) {
    const auto r = run("verify --symmetry spin --n 0 --kappa -2 --oracle nu --tol-nu 1e-30");
    EXPECT_EQ(r.exit_code, 2);
    const auto j = json::parse(r.out);
    EXPECT_FALSE(j["all_within_tolerance"].get<bool>());
}

TEST(CliApprox, DefaultCurvesSatisfyTheBound) {
    const auto r = run("approx");
    ASSERT_EQ(r.exit_code, 0);
    std::istringstream is(r.out);
    std::string line;
    std::getline(is, line); // comment
    std::getline(is, line); // header
    EXPECT_EQ(line, "r,f1,f2(a=0.1),f2(a=0.5),f2(a=1)");
    int rows = 0;
    while (std::getline(is, line)) {
        double rr, f1, f2a, f2b, f2c;
        ASSERT_EQ(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf", &rr, &f1, &f2a, &f2b, &f2c), 5);
        EXPECT_GE(f2a, f1);
        EXPECT_GE(f2b, f1);
        EXPECT_GE(f2c, f1);
        ++rows;
    }
    EXPECT_EQ(rows, 400);
}

TEST(CliApprox, SingleRangeValueGivesThreeColumns) {
    const auto r = run("approx --a-values 0.5 --points 10");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("r,f1,f2(a=0.5)"), std::string::npos);
}

TEST(CliApprox, NonPositiveRadiusIsAUsageError) {
    const auto r = run("approx --rmin 0");
    EXPECT_EQ(r.exit_code, 1);
}

TEST(CliGeneral, ThreadCapDoesNotChangeOutput) {
    const auto serial = run("table --preset table1 --format csv", "SDF_DIRAC_THREADS=1 ");
    const auto parallel = run("table --preset table1 --format csv");
    ASSERT_EQ(serial.exit_code, 0);
    EXPECT_EQ(serial.out, parallel.out);
}

TEST(CliGeneral, UnknownSubcommandFails) {
    const auto r = run("frobnicate");
    EXPECT_EQ(r.exit_code, 1);
}
