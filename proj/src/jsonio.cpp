#include "qweyl/jsonio.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace qweyl {

nlohmann::json to_json(const VerdictRecord& r) {
    return {{"check", r.check},
            {"params", r.params},
            {"status", r.status},
            {"witness", r.witness},
            {"ms", r.ms}};
}

void emit_records(std::ostream& os, const std::vector<VerdictRecord>& records,
                  const std::string& format) {
    if (format == "table") {
        size_t wid = 5;
        for (const auto& r : records) wid = std::max(wid, r.check.size());
        os << std::left << std::setw(static_cast<int>(wid) + 2) << "check"
           << std::setw(13) << "status" << std::setw(10) << "ms"
           << "params" << '\n';
        for (const auto& r : records) {
            std::ostringstream ms;
            ms << std::fixed << std::setprecision(1) << r.ms;
            os << std::setw(static_cast<int>(wid) + 2) << r.check << std::setw(13)
               << r.status << std::setw(10) << ms.str() << r.params.dump() << '\n';
        }
        return;
    }
    for (const auto& r : records) os << to_json(r).dump() << '\n';
}

int verdict_exit_code(const std::vector<VerdictRecord>& records) {
    for (const auto& r : records)
        if (r.status == "fail") return 1;
    return 0;
}

nlohmann::json cmat_json(const Eigen::MatrixXcd& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(row);
    }
    return rows;
}

nlohmann::json rmat_json(const std::vector<std::vector<RatFunc>>& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : m) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& e : row) r.push_back(e.str());
        rows.push_back(r);
    }
    return rows;
}

nlohmann::json module_json(const QuantumModule& M) {
    nlohmann::json weights = nlohmann::json::array();
    for (const Weight& w : M.weights())
        weights.push_back({{"weight", w.c}, {"multiplicity", M.multiplicity(w)}});
    return {{"dim", M.dim()}, {"weights", weights}};
}

}  // namespace qweyl
