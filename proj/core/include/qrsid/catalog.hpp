#pragma once

#include <functional>
#include <optional>

#include "qrsid/brute.hpp"
#include "qrsid/report.hpp"
#include "qrsid/sums.hpp"

namespace qrsid {

struct SourceRef {
    std::string anchor;
    std::string quote;
    bool operator==(const SourceRef&) const = default;
};

/// One catalog identity: a multi-sum left side, a Pochhammer-product right
/// side (possibly with parameter slots), sampling assignments for the
/// parameters, and a provenance status
/// ("proved-in-paper" | "cited" | "conjecture").
struct IdentityRecord {
    std::string id;
    std::string status;
    SourceRef source;
    SumSideSpec sum_side;
    ProductExpr product_side;
    std::vector<ParamAssignment> sampling;

    bool operator==(const IdentityRecord&) const = default;
};

class Catalog {
public:
    /// The built-in catalog (records sorted by id).
    static const Catalog& builtin();
    /// Builtin unless the QRSID_CATALOG environment variable names a file.
    static Catalog load_default();
    static Catalog from_json(const std::string& text);
    static Catalog from_file(const std::string& path);

    std::string to_json() const;

    const std::vector<IdentityRecord>& records() const { return records_; }
    const IdentityRecord* find(const std::string& id) const;

    void add(IdentityRecord rec);
    bool operator==(const Catalog&) const = default;

private:
    std::vector<IdentityRecord> records_;
};

/// Verifies one record: every sampling assignment must PASS (or the explicit
/// assignment when given). FAIL carries the first differing exponent and both
/// coefficients; evaluation problems become ERROR reports.
VerifyReport verify_identity(const IdentityRecord& rec,
                             const std::optional<ParamAssignment>& assign, const Rational& cap,
                             const EvalConfig& config = {});

struct VerifyFilter {
    std::string id_prefix; // empty = all
    std::string status;    // empty = all
};

/// Deterministic, id-ordered verification of the filtered catalog; jobs > 1
/// fans records out to worker threads (reports are merged back in order).
std::vector<VerifyReport> verify_all(const Catalog& catalog, const Rational& cap,
                                     const VerifyFilter& filter = {}, int jobs = 1,
                                     const EvalConfig& config = {});

/// Per-status PASS/FAIL/SKIP/ERROR counts rendered as one line.
std::string summarize_reports(const std::vector<VerifyReport>& reports);

} // namespace qrsid
