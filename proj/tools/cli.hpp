#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qbargmann/transform.hpp"
#include "qbargmann/verify.hpp"

namespace qbargmann::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUnexpected = 1,
  kUsage = 2,
  kDomain = 3,
  kInputFormat = 4,
  kMandatoryFailure = 5,
};

/// Malformed user input (CSV, complex literals, grid specs).
struct InputFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// "0.3", "-1e-2", "0.5i", "0.3+0.2i", "-0.1-2i".
Complex parse_complex(std::string_view text);

/// "re0:re1:n,im0:im1:m": an n x m grid, real part varying slowest.
/// n = 1 uses re0 alone.
std::vector<Complex> parse_grid(std::string_view spec);

/// CSV with header "theta,re,im".
SampledSignal read_theta_csv(std::istream& in);

std::string reports_to_json(const std::vector<VerificationReport>& reports);
std::string reports_to_csv(const std::vector<VerificationReport>& reports);

/// Runs the tool; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qbargmann::cli
