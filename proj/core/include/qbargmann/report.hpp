#pragma once

#include <map>
#include <string>
#include <variant>

namespace qbargmann {

using ParamValue = std::variant<long long, double, std::string>;

/// Outcome of one named numerical check.
struct VerificationReport {
  std::string check_id;
  /// Ordered by key so serialization is stable.
  std::map<std::string, ParamValue> params;
  double max_abs_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  /// Mandatory checks gate the suite; exploratory ones only report.
  bool mandatory = true;
  std::string notes;

  VerificationReport& set(const std::string& key, ParamValue value) {
    params.insert_or_assign(key, std::move(value));
    return *this;
  }

  /// passed = (max_abs_error <= tolerance), false for NaN errors.
  void settle() { passed = max_abs_error <= tolerance; }
};

/// Shortest round-trip decimal form of a double.
std::string format_double(double value);

}  // namespace qbargmann
