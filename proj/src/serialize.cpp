#include "qlab/serialize.hpp"

#include <json.hpp>

namespace qlab {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

std::string series_to_json(const QSeries& s, int indent) {
    ordered j;
    j["variable"] = "q";
    j["min_exp"] = s.min_exp();
    j["prec"] = s.prec();
    ordered coeffs = ordered::array();
    for (long long e = s.min_exp(); e < s.prec(); ++e)
        coeffs.push_back(s.coeff(e).str());
    j["coeffs"] = std::move(coeffs);
    return j.dump(indent);
}

QSeries series_from_json(const std::string& text) {
    json j = json::parse(text);
    if (j.value("variable", "q") != "q")
        throw SeriesError("series_from_json: unsupported variable");
    long long min_exp = j.at("min_exp").get<long long>();
    long long prec = j.at("prec").get<long long>();
    std::vector<Coefficient> coeffs;
    for (const auto& c : j.at("coeffs"))
        coeffs.emplace_back(c.get<std::string>());
    return QSeries(min_exp, prec, std::move(coeffs));
}

namespace {

ordered factor_to_json(const PochFactor& f) {
    ordered j;
    j["sign"] = f.sign;
    j["a"] = f.a;
    j["k"] = f.k;
    if (f.length)
        j["n"] = *f.length;
    else
        j["n"] = "inf";
    return j;
}

PochFactor factor_from_json(const json& j) {
    PochFactor f;
    f.sign = j.at("sign").get<int>();
    f.a = j.at("a").get<long long>();
    f.k = j.at("k").get<long long>();
    const auto& n = j.at("n");
    if (n.is_string()) {
        if (n.get<std::string>() != "inf")
            throw SeriesError("product spec: factor length must be an integer or \"inf\"");
    } else {
        f.length = n.get<long long>();
    }
    if (f.sign != 1 && f.sign != -1)
        throw SeriesError("product spec: sign must be +-1");
    return f;
}

} // namespace

std::string product_spec_to_json(const ProductSpec& spec, int indent) {
    ordered j;
    j["prefactor"] = {{"c", spec.prefactor_c.str()}, {"j", spec.prefactor_j}};
    ordered num = ordered::array(), den = ordered::array();
    for (const auto& f : spec.num)
        num.push_back(factor_to_json(f));
    for (const auto& f : spec.den)
        den.push_back(factor_to_json(f));
    j["num"] = std::move(num);
    j["den"] = std::move(den);
    return j.dump(indent);
}

ProductSpec product_spec_from_json(const std::string& text) {
    json j = json::parse(text);
    ProductSpec spec;
    if (j.contains("prefactor")) {
        spec.prefactor_c = Coefficient(j["prefactor"].at("c").get<std::string>());
        spec.prefactor_j = j["prefactor"].at("j").get<long long>();
    }
    for (const auto& f : j.value("num", json::array()))
        spec.num.push_back(factor_from_json(f));
    for (const auto& f : j.value("den", json::array()))
        spec.den.push_back(factor_from_json(f));
    return spec;
}

std::string catalog_to_json(const std::vector<IdentitySpec>& catalog, int indent) {
    ordered arr = ordered::array();
    for (const auto& s : catalog) {
        ordered j;
        j["id"] = s.id;
        j["lhs"] = s.lhs;
        j["rhs"] = s.rhs;
        j["order_divisor"] = s.order_divisor;
        j["note"] = s.note;
        arr.push_back(std::move(j));
    }
    return arr.dump(indent);
}

std::vector<IdentitySpec> catalog_from_json(const std::string& text) {
    json arr = json::parse(text);
    std::vector<IdentitySpec> out;
    for (const auto& j : arr) {
        IdentitySpec s;
        s.id = j.at("id").get<std::string>();
        s.lhs = j.at("lhs").get<std::string>();
        s.rhs = j.at("rhs").get<std::string>();
        s.order_divisor = j.value("order_divisor", 1);
        s.note = j.value("note", "");
        out.push_back(std::move(s));
    }
    return out;
}

std::string reports_to_json(const std::vector<VerificationReport>& reports,
                            long long order, int indent) {
    ordered j;
    j["order"] = order;
    ordered arr = ordered::array();
    for (const auto& r : reports) {
        ordered e;
        e["id"] = r.id;
        e["order"] = r.order;
        e["pass"] = r.pass;
        if (r.first_mismatch) {
            e["first_mismatch"] = {{"exponent", r.first_mismatch->exponent},
                                   {"lhs", r.first_mismatch->lhs.str()},
                                   {"rhs", r.first_mismatch->rhs.str()}};
        } else {
            e["first_mismatch"] = nullptr;
        }
        e["error"] = r.error;
        e["elapsed_ms"] = r.elapsed_ms;
        arr.push_back(std::move(e));
    }
    j["reports"] = std::move(arr);
    return j.dump(indent);
}

} // namespace qlab
