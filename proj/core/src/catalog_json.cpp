#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qrsid/catalog.hpp"

namespace qrsid {

using json = nlohmann::ordered_json;

namespace {

json quad_to_json(const QuadForm& f) {
    json m = json::array();
    for (const auto& row : f.matrix) {
        json r = json::array();
        for (const auto& e : row) r.push_back(rat_str(e));
        m.push_back(r);
    }
    json l = json::array();
    for (const auto& e : f.linear) l.push_back(rat_str(e));
    return json{{"matrix", m}, {"linear", l}, {"constant", rat_str(f.constant)}};
}

QuadForm quad_from_json(const json& j) {
    QuadForm f;
    for (const auto& row : j.at("matrix")) {
        std::vector<Rational> r;
        for (const auto& e : row) r.push_back(parse_rational(e.get<std::string>()));
        f.matrix.push_back(std::move(r));
    }
    for (const auto& e : j.at("linear")) f.linear.push_back(parse_rational(e.get<std::string>()));
    f.constant = parse_rational(j.at("constant").get<std::string>());
    return f;
}

json weight_to_json(const Monomial& m) {
    return json{{"coeff", m.coeff.str()}, {"qexp", rat_str(m.qexp)}};
}

Monomial weight_from_json(const json& j) {
    return Monomial(parse_scalar(j.at("coeff").get<std::string>()),
                    parse_rational(j.at("qexp").get<std::string>()));
}

json component_to_json(const SumComponent& c) {
    json j;
    j["weight"] = weight_to_json(c.weight);
    j["quad"] = quad_to_json(c.quad);
    j["unit_form"] = quad_to_json(c.unit);
    json subs = json::array();
    for (const auto& s : c.subscripts)
        subs.push_back({{"modulus", rat_str(s.modulus)},
                        {"coeffs", s.form.coeffs},
                        {"constant", s.form.constant}});
    j["subscripts"] = subs;
    json params = json::array();
    for (const auto& p : c.params)
        params.push_back(
            {{"name", p.name}, {"coeffs", p.form.coeffs}, {"constant", p.form.constant}});
    j["params"] = params;
    j["grid"] = c.grid;
    return j;
}

SumComponent component_from_json(const json& j) {
    SumComponent c;
    c.weight = weight_from_json(j.at("weight"));
    c.quad = quad_from_json(j.at("quad"));
    c.unit = quad_from_json(j.at("unit_form"));
    for (const auto& s : j.at("subscripts")) {
        Subscript sub;
        sub.modulus = parse_rational(s.at("modulus").get<std::string>());
        sub.form.coeffs = s.at("coeffs").get<std::vector<long>>();
        sub.form.constant = s.at("constant").get<long>();
        c.subscripts.push_back(std::move(sub));
    }
    for (const auto& p : j.at("params")) {
        ParamForm pf;
        pf.name = p.at("name").get<std::string>();
        pf.form.coeffs = p.at("coeffs").get<std::vector<long>>();
        pf.form.constant = p.at("constant").get<long>();
        c.params.push_back(std::move(pf));
    }
    c.grid = j.at("grid").get<int>();
    return c;
}

json product_to_json(const ProductExpr& p) {
    json terms = json::array();
    for (const auto& t : p.terms) {
        json factors = json::array();
        for (const auto& f : t.factors) {
            json params = json::object();
            for (const auto& [n, e] : f.params) params[n] = e;
            factors.push_back({{"coeff", f.coeff.str()},
                               {"qexp", rat_str(f.qexp)},
                               {"modulus", rat_str(f.modulus)},
                               {"power", f.power},
                               {"params", params}});
        }
        terms.push_back({{"weight", weight_to_json(t.weight)}, {"factors", factors}});
    }
    return json{{"terms", terms}};
}

ProductExpr product_from_json(const json& j) {
    ProductExpr p;
    for (const auto& t : j.at("terms")) {
        ProductTerm term;
        term.weight = weight_from_json(t.at("weight"));
        for (const auto& f : t.at("factors")) {
            ProductFactor pf;
            pf.coeff = parse_scalar(f.at("coeff").get<std::string>());
            pf.qexp = parse_rational(f.at("qexp").get<std::string>());
            pf.modulus = parse_rational(f.at("modulus").get<std::string>());
            pf.power = f.at("power").get<int>();
            for (const auto& [n, e] : f.at("params").items()) pf.params[n] = e.get<int>();
            term.factors.push_back(std::move(pf));
        }
        p.terms.push_back(std::move(term));
    }
    return p;
}

json record_to_json(const IdentityRecord& r) {
    json j;
    j["id"] = r.id;
    j["status"] = r.status;
    j["source"] = json{{"anchor", r.source.anchor}, {"quote", r.source.quote}};
    json comps = json::array();
    for (const auto& c : r.sum_side.components) comps.push_back(component_to_json(c));
    j["sum_side"] = json{{"k", r.sum_side.k}, {"components", comps}};
    j["product_side"] = product_to_json(r.product_side);
    json sampling = json::array();
    for (const auto& a : r.sampling) {
        json e = json::object();
        for (const auto& [name, value] : a) e[name] = value.str();
        sampling.push_back(e);
    }
    j["sampling"] = sampling;
    return j;
}

IdentityRecord record_from_json(const json& j) {
    IdentityRecord r;
    r.id = j.at("id").get<std::string>();
    r.status = j.at("status").get<std::string>();
    r.source.anchor = j.at("source").at("anchor").get<std::string>();
    r.source.quote = j.at("source").at("quote").get<std::string>();
    r.sum_side.k = j.at("sum_side").at("k").get<int>();
    for (const auto& c : j.at("sum_side").at("components"))
        r.sum_side.components.push_back(component_from_json(c));
    r.product_side = product_from_json(j.at("product_side"));
    for (const auto& a : j.at("sampling")) {
        ParamAssignment assign;
        for (const auto& [name, value] : a.items())
            assign[name] = parse_monomial(value.get<std::string>());
        r.sampling.push_back(std::move(assign));
    }
    return r;
}

} // namespace

std::string Catalog::to_json() const {
    json arr = json::array();
    for (const auto& r : records_) arr.push_back(record_to_json(r));
    return arr.dump(2) + "\n";
}

Catalog Catalog::from_json(const std::string& text) {
    Catalog cat;
    json arr;
    try {
        arr = json::parse(text);
    } catch (const std::exception& e) {
        raise(ErrorKind::ParseError, std::string("catalog JSON: ") + e.what());
    }
    if (!arr.is_array()) raise(ErrorKind::ParseError, "catalog JSON must be a top-level list");
    try {
        for (const auto& j : arr) cat.add(record_from_json(j));
    } catch (const json::exception& e) {
        raise(ErrorKind::ParseError, std::string("catalog JSON: ") + e.what());
    }
    return cat;
}

Catalog Catalog::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(ErrorKind::ParseError, "cannot open catalog file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

Catalog Catalog::load_default() {
    if (const char* path = std::getenv("QRSID_CATALOG")) {
        if (path[0] != '\0') return from_file(path);
    }
    return builtin();
}

} // namespace qrsid
