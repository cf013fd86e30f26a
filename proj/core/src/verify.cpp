#include <atomic>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "qrsid/catalog.hpp"

namespace qrsid {

std::string render_assignment(const ParamAssignment& assign) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [name, value] : assign) {
        if (!first) out << ", ";
        out << name << "=" << value.str();
        first = false;
    }
    return out.str();
}

VerifyReport compare_series(const std::string& id, const QSeries& lhs, const QSeries& rhs,
                            const Rational& cap, const ParamAssignment& assign) {
    VerifyReport rep;
    rep.id = id;
    rep.cap = cap;
    rep.assignment = render_assignment(assign);
    auto diff = QSeries::first_difference(lhs, rhs);
    if (!diff) {
        rep.status = VerifyStatus::PASS;
    } else {
        rep.status = VerifyStatus::FAIL;
        rep.first_diff = FirstDiff{*diff, lhs.coeff(*diff), rhs.coeff(*diff)};
    }
    return rep;
}

VerifyReport verify_identity(const IdentityRecord& rec,
                             const std::optional<ParamAssignment>& assign, const Rational& cap,
                             const EvalConfig& config) {
    auto start = std::chrono::steady_clock::now();
    std::vector<ParamAssignment> assignments;
    if (assign) {
        assignments.push_back(*assign);
    } else if (!rec.sampling.empty()) {
        assignments = rec.sampling;
    } else {
        assignments.push_back({});
    }

    VerifyReport rep;
    rep.id = rec.id;
    rep.cap = cap;
    rep.status = VerifyStatus::PASS;
    for (const auto& a : assignments) {
        VerifyReport one;
        try {
            QSeries lhs = sum_side_eval(rec.sum_side, a, cap, config);
            QSeries rhs = product_expr_eval(rec.product_side, a, cap);
            one = compare_series(rec.id, lhs, rhs, cap, a);
        } catch (const Error& e) {
            one.id = rec.id;
            one.status = VerifyStatus::ERROR;
            one.cap = cap;
            one.assignment = render_assignment(a);
            one.note = e.what();
        }
        if (one.status != VerifyStatus::PASS) {
            rep = one;
            break;
        }
    }
    if (rep.status == VerifyStatus::PASS) {
        rep.assignment = assignments.size() == 1 ? render_assignment(assignments[0])
                                                 : std::to_string(assignments.size()) +
                                                       " assignments";
        if (rec.status != "proved-in-paper")
            rep.note = "truncated evidence only (status: " + rec.status + ")";
    }
    rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                            start)
                      .count();
    return rep;
}

std::vector<VerifyReport> verify_all(const Catalog& catalog, const Rational& cap,
                                     const VerifyFilter& filter, int jobs,
                                     const EvalConfig& config) {
    std::vector<const IdentityRecord*> selected;
    for (const auto& r : catalog.records()) {
        if (!filter.id_prefix.empty() && r.id.rfind(filter.id_prefix, 0) != 0) continue;
        if (!filter.status.empty() && r.status != filter.status) continue;
        selected.push_back(&r);
    }
    std::vector<VerifyReport> reports(selected.size());
    if (jobs < 1) jobs = 1;
    jobs = std::min<int>(jobs, static_cast<int>(selected.size() ? selected.size() : 1));
    if (jobs <= 1) {
        for (size_t idx = 0; idx < selected.size(); ++idx)
            reports[idx] = verify_identity(*selected[idx], std::nullopt, cap, config);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (;;) {
                size_t idx = next.fetch_add(1);
                if (idx >= selected.size()) return;
                reports[idx] = verify_identity(*selected[idx], std::nullopt, cap, config);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return reports;
}

std::string render_report_line(const VerifyReport& rep) {
    std::ostringstream out;
    out << rep.id << " " << verify_status_name(rep.status) << " cap=" << rat_str(rep.cap);
    if (!rep.assignment.empty()) out << " [" << rep.assignment << "]";
    out << " (" << std::fixed << std::setprecision(0) << rep.wall_ms << " ms)";
    if (rep.first_diff) {
        out << "\n  first differing exponent q^" << rat_str(rep.first_diff->exponent)
            << ": lhs=" << rep.first_diff->lhs.str() << " rhs=" << rep.first_diff->rhs.str();
    }
    if (!rep.note.empty()) out << "\n  note: " << rep.note;
    return out.str();
}

std::string reports_to_json(const std::vector<VerifyReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json j;
        j["id"] = r.id;
        j["status"] = verify_status_name(r.status);
        j["cap"] = rat_str(r.cap);
        j["assignment"] = r.assignment;
        if (r.first_diff) {
            j["first_diff"] = {{"exponent", rat_str(r.first_diff->exponent)},
                               {"lhs", r.first_diff->lhs.str()},
                               {"rhs", r.first_diff->rhs.str()}};
        } else {
            j["first_diff"] = nullptr;
        }
        j["note"] = r.note;
        j["wall_ms"] = r.wall_ms;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::vector<VerifyReport> reports_from_json(const std::string& text) {
    nlohmann::ordered_json arr;
    try {
        arr = nlohmann::ordered_json::parse(text);
    } catch (const std::exception& e) {
        raise(ErrorKind::ParseError, std::string("report JSON: ") + e.what());
    }
    std::vector<VerifyReport> out;
    for (const auto& j : arr) {
        VerifyReport r;
        r.id = j.at("id").get<std::string>();
        std::string st = j.at("status").get<std::string>();
        if (st == "PASS") r.status = VerifyStatus::PASS;
        else if (st == "FAIL") r.status = VerifyStatus::FAIL;
        else if (st == "SKIP") r.status = VerifyStatus::SKIP;
        else r.status = VerifyStatus::ERROR;
        r.cap = parse_rational(j.at("cap").get<std::string>());
        r.assignment = j.at("assignment").get<std::string>();
        if (!j.at("first_diff").is_null()) {
            FirstDiff d;
            d.exponent = parse_rational(j.at("first_diff").at("exponent").get<std::string>());
            d.lhs = parse_scalar(j.at("first_diff").at("lhs").get<std::string>());
            d.rhs = parse_scalar(j.at("first_diff").at("rhs").get<std::string>());
            r.first_diff = d;
        }
        r.note = j.at("note").get<std::string>();
        r.wall_ms = j.at("wall_ms").get<double>();
        out.push_back(std::move(r));
    }
    return out;
}

std::string summarize_reports(const std::vector<VerifyReport>& reports) {
    int counts[4] = {0, 0, 0, 0};
    for (const auto& r : reports) counts[static_cast<int>(r.status)]++;
    std::ostringstream out;
    out << reports.size() << " checks: PASS=" << counts[0] << " FAIL=" << counts[1]
        << " SKIP=" << counts[2] << " ERROR=" << counts[3];
    return out.str();
}

} // namespace qrsid
