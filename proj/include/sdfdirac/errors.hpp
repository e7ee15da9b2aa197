#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sdfdirac {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonPositiveParameter : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

struct InvalidKappa : Error {
    using Error::Error;
};

struct ParameterOutOfRange : Error {
    using Error::Error;
};

/// Aggregated report: lists every violated constraint of a problem spec.
struct ValidationError : Error {
    explicit ValidationError(std::vector<std::string> issues_)
        : Error(join(issues_)), issues(std::move(issues_)) {}

    std::vector<std::string> issues;

  private:
    static std::string join(const std::vector<std::string>& v) {
        std::string s = "invalid problem:";
        for (const auto& m : v) {
            s += "\n  - ";
            s += m;
        }
        return s;
    }
};

struct EmptyWindow : Error {
    using Error::Error;
};

struct NoRootFound : Error {
    using Error::Error;
};

/// Table generation found more than one admissible root in a window.
struct MultipleAdmissibleRoots : Error {
    using Error::Error;
};

struct NonNormalizable : Error {
    using Error::Error;
};

struct EnergyDegenerateDenominator : Error {
    using Error::Error;
};

struct NonConvergentTail : Error {
    using Error::Error;
};

struct ZeroNorm : Error {
    using Error::Error;
};

struct NoValidBranch : Error {
    using Error::Error;
};

struct NoSignChange : Error {
    using Error::Error;
};

struct StiffnessFailure : Error {
    using Error::Error;
};

} // namespace sdfdirac
