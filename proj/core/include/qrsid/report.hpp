#pragma once

#include <optional>
#include <string>

#include "qrsid/products.hpp"

namespace qrsid {

enum class VerifyStatus { PASS, FAIL, SKIP, ERROR };

inline const char* verify_status_name(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::PASS: return "PASS";
        case VerifyStatus::FAIL: return "FAIL";
        case VerifyStatus::SKIP: return "SKIP";
        case VerifyStatus::ERROR: return "ERROR";
    }
    return "?";
}

struct FirstDiff {
    Rational exponent;
    Scalar lhs;
    Scalar rhs;
};

/// Outcome of one check (identity verification, summation formula, master
/// integral). PASS means the two truncated series were identical up to the
/// cap; FAIL always carries the first differing exponent.
struct VerifyReport {
    std::string id;
    VerifyStatus status = VerifyStatus::ERROR;
    Rational cap = Rational(0);
    std::string assignment;
    std::optional<FirstDiff> first_diff;
    std::string note;
    double wall_ms = 0.0;

    bool ok() const { return status == VerifyStatus::PASS || status == VerifyStatus::SKIP; }
};

std::string render_assignment(const ParamAssignment& assign);

/// PASS/FAIL by exact comparison up to the lesser cap.
VerifyReport compare_series(const std::string& id, const QSeries& lhs, const QSeries& rhs,
                            const Rational& cap, const ParamAssignment& assign);

/// One human-readable line: "<id> PASS cap=40 (12 ms)" plus FAIL/SKIP detail.
std::string render_report_line(const VerifyReport& rep);

/// JSON list of reports; from_json inverts it (used by --json consumers).
std::string reports_to_json(const std::vector<VerifyReport>& reports);
std::vector<VerifyReport> reports_from_json(const std::string& text);

} // namespace qrsid
