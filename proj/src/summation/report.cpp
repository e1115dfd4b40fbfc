#include "padicsum/report.hpp"

#include <algorithm>
#include <iomanip>

namespace padicsum {

const char* verdict_text(bool pass) {
    return pass ? "PASS" : "FAIL";
}

CheckRecord CheckRecord::from_partial_sum(std::string check, nlohmann::json params,
                                          const PartialSumResult& r) {
    CheckRecord rec;
    rec.check = std::move(check);
    rec.params = std::move(params);
    rec.residual = r.residual();
    rec.boundary = r.boundary;
    rec.pass = r.holds();
    return rec;
}

nlohmann::json CheckRecord::to_json() const {
    nlohmann::json j;
    j["check"] = check;
    j["params"] = params;
    if (residual) {
        j["residual"] = residual->to_string();
    }
    if (boundary) {
        j["boundary"] = boundary->to_string();
    }
    j["verdict"] = verdict_text(pass);
    if (!detail.empty()) {
        j["detail"] = detail;
    }
    return j;
}

void write_table(std::ostream& os, const std::vector<CheckRecord>& records) {
    std::size_t check_w = 5;
    std::size_t params_w = 6;
    std::vector<std::string> params;
    params.reserve(records.size());
    for (const auto& r : records) {
        params.push_back(r.params.dump());
        check_w = std::max(check_w, r.check.size());
        params_w = std::max(params_w, params.back().size());
    }
    os << std::left << std::setw(static_cast<int>(check_w)) << "check" << "  "
       << std::setw(static_cast<int>(params_w)) << "params" << "  verdict  residual\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        os << std::left << std::setw(static_cast<int>(check_w)) << r.check << "  "
           << std::setw(static_cast<int>(params_w)) << params[i] << "  "
           << std::setw(7) << verdict_text(r.pass) << "  "
           << (r.residual ? r.residual->to_string() : std::string("-"));
        if (!r.detail.empty()) {
            os << "  " << r.detail;
        }
        os << '\n';
    }
}

}  // namespace padicsum
