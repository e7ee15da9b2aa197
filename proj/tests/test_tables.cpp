#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "sdfdirac/io.hpp"
#include "sdfdirac/tables.hpp"

using namespace sdfdirac;

namespace {

std::vector<ReferenceEnergy> load_reference(const std::string& name) {
    std::ifstream is(std::string(SDFD_DATA_DIR) + "/" + name);
    EXPECT_TRUE(is.good()) << "missing reference data " << name;
    return read_reference_csv(is);
}

} // namespace

TEST(SpectrumTable, Table1MatchesPublishedValues) {
    const auto rows = spectrum_table(PresetName::table1);
    EXPECT_EQ(rows.size(), 64u); // 4 blocks x 8 (ell, n) x 2 tensor settings
    const auto ref = load_reference("table1.csv");
    EXPECT_EQ(ref.size(), 128u);
    const double worst = max_abs_table_diff(rows, ref, Symmetry::spin);
    EXPECT_LE(worst, 1e-6);
    // expected agreement is far better than the acceptance tolerance
    EXPECT_LE(worst, 5e-9);
}

TEST(SpectrumTable, Table2MatchesPublishedValues) {
    const auto rows = spectrum_table(PresetName::table2);
    EXPECT_EQ(rows.size(), 64u);
    const auto ref = load_reference("table2.csv");
    EXPECT_EQ(ref.size(), 128u);
    const double worst = max_abs_table_diff(rows, ref, Symmetry::pseudospin);
    EXPECT_LE(worst, 1e-6);
    EXPECT_LE(worst, 5e-9);
}

TEST(SpectrumTable, FirstRowOfTable1) {
    const auto rows = spectrum_table(PresetName::table1);
    for (const auto& r : rows) {
        if (r.block.C == 0.0 && r.block.r_e == 0.8 && r.ell == 1 && r.n == 0) {
            if (r.A == 0.0) {
                EXPECT_NEAR(r.E_negative, -0.994680673675, 1e-6);
                EXPECT_NEAR(r.E_positive, -0.994680673675, 1e-6);
                EXPECT_EQ(to_string(r.label_negative), "0p_{3/2}");
                EXPECT_EQ(to_string(r.label_positive), "0p_{1/2}");
            } else {
                EXPECT_NEAR(r.E_negative, -0.99513873187, 1e-6);
                EXPECT_NEAR(r.E_positive, -0.993888275050, 1e-6);
            }
        }
    }
}

TEST(SpectrumTable, HighEllBlockOfTable1) {
    const auto rows = spectrum_table(PresetName::table1);
    for (const auto& r : rows)
        if (r.block.C == 5.0 && r.block.r_e == 0.8 && r.ell == 4 && r.n == 1 && r.A == 0.0) {
            EXPECT_NEAR(r.E_negative, 4.03057429824, 1e-6);
            EXPECT_NEAR(r.E_positive, 4.03057429824, 1e-6);
        }
}

TEST(SpectrumTable, PseudospinDisplayIndexConvention) {
    // kappa > 0 members print with display index n-1 while sharing the
    // radial index n of the kappa < 0 partner
    const auto rows = spectrum_table(PresetName::table2);
    for (const auto& r : rows) {
        EXPECT_EQ(r.label_negative.n_display, r.n);
        EXPECT_EQ(r.label_positive.n_display,
                  r.n - pseudospin_display_offset_positive_kappa);
    }
    // first doublet: 1s_{1/2} paired with 0d_{3/2}
    for (const auto& r : rows)
        if (r.block.C == 0.0 && r.block.r_e == 0.8 && r.ell == 1 && r.n == 1 && r.A == 0.0) {
            EXPECT_EQ(to_string(r.label_negative), "1s_{1/2}");
            EXPECT_EQ(to_string(r.label_positive), "0d_{3/2}");
            EXPECT_NEAR(r.E_negative, 1.00634753849, 1e-6);
        }
}

TEST(SpectrumTable, DegeneracyAndSplittingPattern) {
    for (const auto name : {PresetName::table1, PresetName::table2}) {
        const auto rows = spectrum_table(name);
        for (const auto& r : rows) {
            if (r.A == 0.0) {
                EXPECT_NEAR(r.splitting, 0.0, 2e-12) << "A=0 doublet must be degenerate";
            } else {
                EXPECT_GT(std::abs(r.splitting), 1e-4);
                // in every published block the kappa > 0 member lies higher
                EXPECT_GT(r.splitting, 0.0);
            }
        }
    }
}

TEST(SpectrumTable, EnergiesOrderWithEllAsPublished) {
    // C_s = 0 blocks: energies increase (become less attractive) with ell
    const auto rows = spectrum_table(PresetName::table1);
    for (const double re : {0.8, 0.4})
        for (const int n : {0, 1}) {
            double prev = -2.0;
            for (int ell = 1; ell <= 4; ++ell)
                for (const auto& r : rows)
                    if (r.block.C == 0.0 && r.block.r_e == re && r.A == 0.0 &&
                        r.n == n && r.ell == ell) {
                        EXPECT_GT(r.E_negative, prev);
                        prev = r.E_negative;
                    }
        }
}

TEST(SpectrumTable, CsvOutputIsDeterministic) {
    const auto rows = spectrum_table(PresetName::table1);
    std::ostringstream a, b;
    write_table_csv(a, rows, Symmetry::spin);
    write_table_csv(b, rows, Symmetry::spin);
    EXPECT_EQ(a.str(), b.str());
    EXPECT_EQ(a.str().find("generated:"), std::string::npos); // no stamp by default
}

TEST(SpectrumTable, JsonRoundTripPreservesRows) {
    const auto rows = spectrum_table(PresetName::table2);
    const auto j = table_to_json(rows, Symmetry::pseudospin);
    const auto parsed = table_from_json(j, Symmetry::pseudospin);
    ASSERT_EQ(parsed.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        EXPECT_EQ(parsed[i].E_negative, rows[i].E_negative); // bit-exact through JSON
        EXPECT_EQ(parsed[i].E_positive, rows[i].E_positive);
        EXPECT_EQ(parsed[i].label_negative, rows[i].label_negative);
        EXPECT_EQ(parsed[i].label_positive, rows[i].label_positive);
    }
}

TEST(Preset, Fig1IsNotATablePreset) {
    EXPECT_THROW(make_preset(PresetName::fig1), ParameterOutOfRange);
    EXPECT_THROW(preset_from_string("table9"), ParameterOutOfRange);
}
