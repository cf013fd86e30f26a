// qrsid: batch driver for the exact q-series identity engine.
//
// Subcommands:
//   verify    check catalog identities (sum side vs product side)
//   expand    truncated expansion of a product/sum expression
//   prodmake  recover infinite-product exponents from an expansion
//   oracle    brute-force colored-partition suite
//   catalog   print the built-in catalog as JSON

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qrsid/brute.hpp"
#include "qrsid/catalog.hpp"
#include "qrsid/partitions.hpp"

using namespace qrsid;

namespace {

int report_parse_error(const std::string& text, const Error& e) {
    // Offsets from the parsers become line/column pairs for file inputs.
    std::string msg = e.what();
    auto pos = msg.find("offset ");
    if (pos != std::string::npos) {
        size_t off = std::stoul(msg.substr(pos + 7));
        size_t line = 1, col = 1;
        for (size_t k = 0; k < off && k < text.size(); ++k) {
            if (text[k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::cerr << "parse error at line " << line << ", column " << col << ": " << msg << "\n";
    } else {
        std::cerr << "parse error: " << msg << "\n";
    }
    return 2;
}

struct Expr {
    enum Kind { Product, SumOfRecord, Series } kind;
    ProductExpr product;
    const IdentityRecord* record = nullptr;
    QSeries series;
};

Expr resolve_expr(const std::string& raw, const Catalog& catalog) {
    std::string text = raw;
    auto strip = [](std::string s) {
        size_t a = s.find_first_not_of(" \t\r\n");
        size_t b = s.find_last_not_of(" \t\r\n");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    text = strip(text);
    Expr e{Expr::Series, {}, nullptr, {}};
    if (text.rfind("P:", 0) == 0) {
        e.kind = Expr::Product;
        e.product = parse_product(strip(text.substr(2)));
        return e;
    }
    if (text.rfind("S:", 0) == 0) {
        std::string id = strip(text.substr(2));
        e.kind = Expr::SumOfRecord;
        e.record = catalog.find(id);
        if (!e.record) raise(ErrorKind::UnknownIdentity, "unknown identity " + id);
        return e;
    }
    e.kind = Expr::Series;
    e.series = parse_series(text);
    return e;
}

QSeries eval_expr(const Expr& e, const Rational& cap) {
    switch (e.kind) {
        case Expr::Product: {
            if (e.product.has_params())
                raise(ErrorKind::ParseError,
                      "product expression has unassigned parameters; inline their values");
            return product_expr_eval(e.product, {}, cap);
        }
        case Expr::SumOfRecord: {
            ParamAssignment a;
            if (!e.record->sampling.empty()) a = e.record->sampling.front();
            return sum_side_eval(e.record->sum_side, a, cap);
        }
        case Expr::Series:
            return e.series.restricted(std::min(cap, e.series.order_cap()));
    }
    raise(ErrorKind::Internal, "unreachable");
}

std::string read_input(const std::string& expr_flag, const std::string& path) {
    if (!expr_flag.empty()) return expr_flag;
    std::ifstream in(path);
    if (!in) raise(ErrorKind::ParseError, "cannot open expression file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-series identity engine"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "verify catalog identities");
    std::string verify_id, verify_status;
    bool verify_all_flag = false, verify_json = false;
    long verify_cap = 40;
    int verify_jobs = 1;
    std::vector<std::string> assign_flags;
    verify->add_option("--id", verify_id, "single identity id");
    verify->add_flag("--all", verify_all_flag, "verify every catalog record");
    verify->add_option("--cap", verify_cap, "truncation exponent (integer grid)");
    verify->add_option("--assign", assign_flags, "parameter assignment name=monomial");
    verify->add_option("--status", verify_status, "filter by status");
    verify->add_flag("--json", verify_json, "emit the report list as JSON");
    verify->add_option("--jobs", verify_jobs, "parallel verification workers");

    // expand
    auto* expand = app.add_subcommand("expand", "expand an expression to a truncated series");
    std::string expand_expr, expand_file;
    long expand_cap = 10;
    expand->add_option("--expr", expand_expr, "inline expression (P: product | S: id | series)");
    expand->add_option("file", expand_file, "expression file");
    expand->add_option("--cap", expand_cap, "truncation exponent");

    // prodmake
    auto* pm = app.add_subcommand("prodmake", "recover product exponents from an expansion");
    std::string pm_expr, pm_file;
    long pm_cap = 10;
    pm->add_option("--expr", pm_expr, "inline expression (P: product | S: id | series)");
    pm->add_option("file", pm_file, "expression file");
    pm->add_option("--cap", pm_cap, "truncation exponent");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "colored-partition oracle suite");
    int oracle_nmax = 16;
    unsigned long oracle_seed = 1;
    oracle->add_option("--nmax", oracle_nmax, "largest partition size checked");
    oracle->add_option("--seed", oracle_seed, "seed for sample ordering (fixed default)");

    // catalog
    auto* catalog_cmd = app.add_subcommand("catalog", "print the catalog as JSON");
    std::string catalog_out;
    catalog_cmd->add_option("--out", catalog_out, "write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Catalog cat = Catalog::load_default();

        if (*verify) {
            if (verify_id.empty() == !verify_all_flag) {
                std::cerr << "verify needs exactly one of --id or --all\n";
                return 2;
            }
            if (!assign_flags.empty() && verify_all_flag) {
                std::cerr << "--assign applies to a single --id\n";
                return 2;
            }
            Rational cap = rat(verify_cap);
            std::vector<VerifyReport> reports;
            std::vector<const IdentityRecord*> selected;
            if (!verify_id.empty()) {
                const IdentityRecord* rec = cat.find(verify_id);
                if (!rec) {
                    std::cerr << "unknown identity " << verify_id << "\n";
                    return 2;
                }
                std::optional<ParamAssignment> assign;
                if (!assign_flags.empty()) {
                    ParamAssignment a;
                    for (const auto& flag : assign_flags) {
                        auto eq = flag.find('=');
                        if (eq == std::string::npos) {
                            std::cerr << "bad --assign (want name=monomial): " << flag << "\n";
                            return 2;
                        }
                        a[flag.substr(0, eq)] = parse_monomial(flag.substr(eq + 1));
                    }
                    assign = a;
                }
                reports.push_back(verify_identity(*rec, assign, cap));
                selected.push_back(rec);
            } else {
                VerifyFilter filter;
                filter.status = verify_status;
                reports = verify_all(cat, cap, filter, verify_jobs);
                for (const auto& r : cat.records())
                    if (verify_status.empty() || r.status == verify_status)
                        selected.push_back(&r);
            }
            if (verify_json) {
                std::cout << reports_to_json(reports);
            } else {
                for (const auto& r : reports) std::cout << render_report_line(r) << "\n";
                std::cout << summarize_reports(reports) << "\n";
            }
            // Exit 1 only when a proved-in-paper record fails or errors.
            for (size_t k = 0; k < reports.size(); ++k) {
                bool proved = selected[k]->status == "proved-in-paper";
                if (proved && (reports[k].status == VerifyStatus::FAIL ||
                               reports[k].status == VerifyStatus::ERROR))
                    return 1;
            }
            return 0;
        }

        if (*expand || *pm) {
            bool is_expand = static_cast<bool>(*expand);
            std::string flag = is_expand ? expand_expr : pm_expr;
            std::string file = is_expand ? expand_file : pm_file;
            long cap = is_expand ? expand_cap : pm_cap;
            if (flag.empty() && file.empty()) {
                std::cerr << "need --expr or an expression file\n";
                return 2;
            }
            std::string text = read_input(flag, file);
            Expr e;
            QSeries series;
            try {
                e = resolve_expr(text, cat);
                series = eval_expr(e, rat(cap));
            } catch (const Error& err) {
                if (err.kind() == ErrorKind::ParseError) return report_parse_error(text, err);
                if (err.kind() == ErrorKind::UnknownIdentity) {
                    std::cerr << err.what() << "\n";
                    return 2;
                }
                throw;
            }
            if (is_expand) {
                std::cout << series.str() << "\n";
            } else {
                auto exps = prodmake(series, rat(cap));
                for (const auto& pe : exps)
                    std::cout << rat_str(pe.a) << ": " << rat_str(pe.e) << "\n";
            }
            return 0;
        }

        if (*oracle) {
            bool ok = true;
            for (int n = 0; n <= oracle_nmax; ++n) {
                for (int u = 0; u <= n; ++u) {
                    for (int v = 0; v <= n; ++v) {
                        auto s = count_S(u, v, n);
                        auto t = count_T(u, v, n);
                        if (s != t) {
                            std::cout << "MISMATCH S(" << u << "," << v << "," << n << ")=" << s
                                      << " T=" << t << "  <<<<\n";
                            ok = false;
                        }
                    }
                }
            }
            if (ok)
                std::cout << "S=T verified for all (u,v,n), n<=" << oracle_nmax << "\n";
            return ok ? 0 : 1;
        }

        if (*catalog_cmd) {
            std::string text = Catalog::builtin().to_json();
            if (catalog_out.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(catalog_out);
                out << text;
            }
            return 0;
        }
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::ParseError) {
            std::cerr << "parse error: " << e.what() << "\n";
            return 2;
        }
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
