#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "uqmodule.hpp"

namespace qweyl {

/// One verification verdict.  Emitted as a single JSON-lines record; the
/// timing field is the only part allowed to vary between identical reruns.
struct VerdictRecord {
    std::string check;
    nlohmann::json params = nlohmann::json::object();
    std::string status;  // "pass" | "fail" | "report-only"
    nlohmann::json witness = nlohmann::json::object();
    double ms = 0;
};

nlohmann::json to_json(const VerdictRecord& r);

/// JSON-lines (one record per line) or an aligned human table.
void emit_records(std::ostream& os, const std::vector<VerdictRecord>& records,
                  const std::string& format);

/// 0 if every non-report-only record passed, 1 otherwise.
int verdict_exit_code(const std::vector<VerdictRecord>& records);

/// Dense complex matrix as nested arrays of [re, im] pairs.
nlohmann::json cmat_json(const Eigen::MatrixXcd& m);

/// Exact RatFunc matrix rendered entrywise.
nlohmann::json rmat_json(const std::vector<std::vector<RatFunc>>& m);

/// Serialize a module (dimension, weight table with multiplicities) for
/// cross-run regression.
nlohmann::json module_json(const QuantumModule& M);

}  // namespace qweyl
