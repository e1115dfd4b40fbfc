#include "padicsum/tables.hpp"

#include <stdexcept>

namespace padicsum {

GeneratedTables build_tables(std::size_t kmax, Sign eps) {
    GeneratedTables t;
    t.a = generate_a_table(kmax, eps);
    t.uv = derive_uv(t.a);
    return t;
}

nlohmann::json poly_to_json(const RatPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : p.coefficients()) {
        arr.push_back(c.to_string());
    }
    return arr;
}

RatPoly poly_from_json(const nlohmann::json& j) {
    std::vector<BigRational> coeffs;
    for (const auto& c : j) {
        coeffs.push_back(BigRational::parse(c.get<std::string>()));
    }
    return RatPoly(std::move(coeffs));
}

nlohmann::json to_json(const GeneratedTables& tables) {
    nlohmann::json j;
    j["eps"] = to_int(tables.eps());
    j["kmax"] = tables.kmax();
    nlohmann::json a = nlohmann::json::array();
    for (const auto& entry : tables.a.entries) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& c : entry.coefficients()) {
            rows.push_back(poly_to_json(c));
        }
        a.push_back(std::move(rows));
    }
    j["A"] = std::move(a);
    nlohmann::json u = nlohmann::json::array();
    nlohmann::json v = nlohmann::json::array();
    for (std::size_t k = 1; k <= tables.uv.kmax(); ++k) {
        u.push_back(poly_to_json(tables.uv.u_poly(k)));
        v.push_back(poly_to_json(tables.uv.v_poly(k)));
    }
    j["U"] = std::move(u);
    j["V"] = std::move(v);
    return j;
}

GeneratedTables tables_from_json(const nlohmann::json& j) {
    GeneratedTables t;
    Sign eps = sign_from_int(j.at("eps").get<long>());
    t.a.eps = eps;
    for (const auto& entry : j.at("A")) {
        std::vector<RatPoly> coeffs;
        for (const auto& c : entry) {
            coeffs.push_back(poly_from_json(c));
        }
        t.a.entries.emplace_back(eps, std::move(coeffs));
    }
    if (t.a.entries.empty() || t.a.kmax() != j.at("kmax").get<std::size_t>()) {
        throw std::invalid_argument("table JSON: kmax does not match the A array");
    }
    t.uv.eps = eps;
    for (const auto& u : j.at("U")) {
        t.uv.U.push_back(poly_from_json(u));
    }
    for (const auto& v : j.at("V")) {
        t.uv.V.push_back(poly_from_json(v));
    }
    if (t.uv.U.size() != t.uv.V.size()) {
        throw std::invalid_argument("table JSON: U and V lengths differ");
    }
    return t;
}

}  // namespace padicsum
