#pragma once

// CSV and JSON serialization shared by the CLI and the tests. CSV dialect:
// comma separated, '.' decimal point, '#'-prefixed header comments. Energies
// print with 12 significant digits. Output is deterministic: no timestamps
// unless explicitly stamped by the caller.

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sdfdirac/tables.hpp"

namespace sdfdirac {

inline std::string fmt_g(double x, int significant = 12) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", significant, x);
    return buf;
}

inline const char* to_string(Symmetry s) {
    return s == Symmetry::spin ? "spin" : "pseudospin";
}

inline void write_table_csv(std::ostream& os, const std::vector<SpectrumRow>& rows,
                            Symmetry kind, const std::string& stamp = {}) {
    os << "# doublet spectrum, " << to_string(kind) << " symmetry limit\n";
    if (!stamp.empty())
        os << "# generated: " << stamp << "\n";
    os << "C,r_e,A,ell,n,kappa_neg,label_neg,E_neg,kappa_pos,label_pos,E_pos,splitting\n";
    for (const auto& r : rows) {
        os << fmt_g(r.block.C) << ',' << fmt_g(r.block.r_e) << ',' << fmt_g(r.A) << ','
           << r.ell << ',' << r.n << ',' << r.kappa_negative << ','
           << to_string(r.label_negative) << ',' << fmt_g(r.E_negative) << ','
           << r.kappa_positive << ',' << to_string(r.label_positive) << ','
           << fmt_g(r.E_positive) << ',' << fmt_g(r.splitting) << '\n';
    }
}

inline nlohmann::json table_to_json(const std::vector<SpectrumRow>& rows, Symmetry kind) {
    nlohmann::json out;
    out["symmetry"] = to_string(kind);
    out["rows"] = nlohmann::json::array();
    for (const auto& r : rows) {
        out["rows"].push_back({
            {"C", r.block.C},
            {"r_e", r.block.r_e},
            {"A", r.A},
            {"ell", r.ell},
            {"n", r.n},
            {"kappa_neg", r.kappa_negative},
            {"label_neg", to_string(r.label_negative)},
            {"E_neg", r.E_negative},
            {"kappa_pos", r.kappa_positive},
            {"label_pos", to_string(r.label_positive)},
            {"E_pos", r.E_positive},
            {"splitting", r.splitting},
        });
    }
    return out;
}

inline std::vector<SpectrumRow> table_from_json(const nlohmann::json& j, Symmetry kind) {
    std::vector<SpectrumRow> rows;
    for (const auto& e : j.at("rows")) {
        SpectrumRow r;
        r.block = ParameterBlock{e.at("C").get<double>(), e.at("r_e").get<double>()};
        r.A = e.at("A").get<double>();
        r.ell = e.at("ell").get<int>();
        r.n = e.at("n").get<int>();
        r.kappa_negative = e.at("kappa_neg").get<int>();
        r.label_negative = quantum_labels(r.kappa_negative, display_n(r.n, r.kappa_negative, kind));
        r.E_negative = e.at("E_neg").get<double>();
        r.kappa_positive = e.at("kappa_pos").get<int>();
        r.label_positive = quantum_labels(r.kappa_positive, display_n(r.n, r.kappa_positive, kind));
        r.E_positive = e.at("E_pos").get<double>();
        r.splitting = e.at("splitting").get<double>();
        rows.push_back(r);
    }
    return rows;
}

/// One published reference energy: block, tensor setting, display index and
/// kappa identify the state.
struct ReferenceEnergy {
    double C;
    double r_e;
    double A;
    int ell;
    int n_display;
    int kappa;
    double E;
};

/// Parses the checked-in reference CSVs (columns C,re,A,ell,n,kappa,E).
inline std::vector<ReferenceEnergy> read_reference_csv(std::istream& is) {
    std::vector<ReferenceEnergy> out;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("C,", 0) == 0)
            continue;
        ReferenceEnergy e{};
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%d,%d,%d,%lf", &e.C, &e.r_e, &e.A,
                        &e.ell, &e.n_display, &e.kappa, &e.E) == 7)
            out.push_back(e);
    }
    return out;
}

/// Max |E_generated - E_reference| over all reference energies; throws if a
/// reference state is missing from the generated rows.
inline double max_abs_table_diff(const std::vector<SpectrumRow>& rows,
                                 const std::vector<ReferenceEnergy>& ref, Symmetry kind) {
    double worst = 0.0;
    for (const auto& e : ref) {
        bool found = false;
        for (const auto& r : rows) {
            if (r.block.C != e.C || r.block.r_e != e.r_e || r.A != e.A)
                continue;
            if (r.kappa_negative == e.kappa &&
                display_n(r.n, r.kappa_negative, kind) == e.n_display) {
                worst = std::max(worst, std::abs(r.E_negative - e.E));
                found = true;
                break;
            }
            if (r.kappa_positive == e.kappa &&
                display_n(r.n, r.kappa_positive, kind) == e.n_display) {
                worst = std::max(worst, std::abs(r.E_positive - e.E));
                found = true;
                break;
            }
        }
        if (!found)
            throw NoRootFound("reference state missing from generated table: kappa=" +
                              std::to_string(e.kappa) + " n=" + std::to_string(e.n_display));
    }
    return worst;
}

} // namespace sdfdirac
