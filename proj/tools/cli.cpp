#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qbargmann/qpolys.hpp"

namespace qbargmann::cli {

namespace {

using Json = nlohmann::ordered_json;

double parse_double(std::string_view text) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  if (!text.empty() && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || begin == end) {
    throw InputFormatError("not a number: '" + std::string(text) + "'");
  }
  return value;
}

std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t");
  return std::string(text.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string format_complex(Complex z) {
  return format_double(z.real()) + (std::signbit(z.imag()) ? "" : "+") +
         format_double(z.imag()) + "i";
}

Json number_or_null(double value) {
  if (!std::isfinite(value)) return nullptr;
  return value;
}

std::string csv_cell(const Json& cell) {
  if (cell.is_null()) return "";
  if (cell.is_string()) return cell.get<std::string>();
  if (cell.is_number_float()) return format_double(cell.get<double>());
  if (cell.is_boolean()) return cell.get<bool>() ? "true" : "false";
  return cell.dump();
}

/// Rows keyed by column name, written as CSV or as a JSON array.
struct Table {
  std::vector<std::string> columns;
  std::vector<Json> rows;

  std::string render(const std::string& format) const {
    if (format == "json") {
      Json array = Json::array();
      for (const Json& row : rows) array.push_back(row);
      return array.dump(2) + "\n";
    }
    std::string out;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i > 0) out += ',';
      out += columns[i];
    }
    out += '\n';
    for (const Json& row : rows) {
      for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i > 0) out += ',';
        out += csv_cell(row.contains(columns[i]) ? row.at(columns[i]) : Json());
      }
      out += '\n';
    }
    return out;
  }
};

Json param_to_json(const ParamValue& value) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return format_double(v);
          return v;
        } else {
          return v;
        }
      },
      value);
}

Json error_to_json(double value) {
  if (!std::isfinite(value)) return format_double(value);
  return value;
}

/// Options every subcommand shares.
struct Common {
  double q = 0.5;
  int m = 0;
  std::optional<double> tolerance;
  std::string format;
  std::string output;
};

CLI::Validator open_unit_interval() {
  return CLI::Validator(
      [](std::string& text) -> std::string {
        double v = 0.0;
        try {
          v = std::stod(text);
        } catch (...) {
          return "q must be a number";
        }
        if (!(v > 0.0 && v < 1.0)) return "q must lie strictly between 0 and 1";
        return {};
      },
      "in (0,1)");
}

void add_q(CLI::App* app, double& q) {
  app->add_option("--q", q, "Deformation parameter q")->check(open_unit_interval());
}

void add_output(CLI::App* app, Common& c, const std::string& default_format) {
  c.format = default_format;
  app->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app->add_option("--output", c.output, "Write to this file instead of stdout");
}

std::vector<Complex> z_points(const std::vector<std::string>& literals,
                              const std::string& grid) {
  std::vector<Complex> points;
  for (const std::string& text : literals) points.push_back(parse_complex(text));
  if (!grid.empty()) {
    const std::vector<Complex> g = parse_grid(grid);
    points.insert(points.end(), g.begin(), g.end());
  }
  return points;
}

// ---- subcommands -------------------------------------------------------------

struct EvalOptions {
  std::string family;
  int n = 0;
  std::string a = "0";
  std::string b = "0";
  double alpha = 0.0;
  std::vector<double> x;
  std::vector<double> u;
  std::vector<double> xi;
  std::vector<std::string> z;
};

Table cmd_eval(const EvalOptions& o, const Common& c) {
  const DeformationParameter q(c.q);
  Table t{{"family", "n", "point", "re", "im"}, {}};
  const auto add = [&](const std::string& point, Complex value) {
    Json row;
    row["family"] = o.family;
    row["n"] = o.n;
    row["point"] = point;
    row["re"] = number_or_null(value.real());
    row["im"] = number_or_null(value.imag());
    t.rows.push_back(std::move(row));
  };
  const auto over = [&](const std::vector<double>& points,
                        const std::function<Complex(double)>& f) {
    for (double p : points) add(format_double(p), f(p));
  };
  if (o.n < 0) throw DomainError("--n must be nonnegative");
  if (o.family == "cq-hermite") {
    over(o.x, [&](double x) { return Complex(cq_hermite(o.n, x, q)); });
  } else if (o.family == "wall") {
    const double a = parse_complex(o.a).real();
    over(o.x, [&](double x) { return Complex(wall(o.n, x, a, q)); });
  } else if (o.family == "al-salam-chihara") {
    const Complex a = parse_complex(o.a);
    const Complex b = parse_complex(o.b);
    over(o.x, [&](double x) { return al_salam_chihara(o.n, x, a, b, q); });
  } else if (o.family == "hermite") {
    over(o.x, [&](double x) { return Complex(hermite_classical(o.n, x)); });
  } else if (o.family == "laguerre") {
    over(o.x, [&](double x) { return Complex(laguerre_classical(o.n, o.alpha, x)); });
  } else if (o.family == "omega") {
    over(o.u, [&](double u) { return Complex(omega(u, q)); });
  } else if (o.family == "phi") {
    over(o.xi, [&](double xi) { return Complex(phi_q(o.n, xi, q)); });
  } else if (o.family == "normalization") {
    over(o.x, [&](double x) { return Complex(normalization(c.m, x, q)); });
  } else if (o.family == "eq-exp") {
    for (const std::string& s : o.z) {
      const Complex u = parse_complex(s);
      add(format_complex(u), eq_exp(u, q));
    }
  } else if (o.family == "coeff-h") {
    for (const std::string& s : o.z) {
      const Complex z = parse_complex(s);
      add(format_complex(z), coeff_h(o.n, c.m, z, q));
    }
  }
  return t;
}

struct KernelOptions {
  std::vector<std::string> z;
  std::vector<std::string> w;
  std::string grid;
  bool diagonal = false;
};

Table cmd_kernel(const KernelOptions& o, const Common& c) {
  const DeformationParameter q(c.q);
  const std::vector<Complex> zs = z_points(o.z, o.grid);
  const std::vector<Complex> ws = o.w.empty() ? zs : z_points(o.w, "");
  std::vector<std::pair<Complex, Complex>> pairs;
  if (o.diagonal) {
    for (const Complex& z : zs) pairs.emplace_back(z, z);
  } else {
    for (const Complex& z : zs) {
      for (const Complex& w : ws) pairs.emplace_back(z, w);
    }
  }
  Table t{{"z_re", "z_im", "w_re", "w_im", "series_re", "series_im", "closed_re",
           "closed_im", "normalization", "status"},
          {}};
  for (const auto& [z, w] : pairs) {
    Json row;
    row["z_re"] = z.real();
    row["z_im"] = z.imag();
    row["w_re"] = w.real();
    row["w_im"] = w.imag();
    if (!CoherentStateLabel::admissible(q, c.m, z) ||
        !CoherentStateLabel::admissible(q, c.m, w)) {
      row["status"] = "outside";
      t.rows.push_back(std::move(row));
      continue;
    }
    const OverlapKernel k = overlap_kernel(z, w, c.m, q);
    row["series_re"] = number_or_null(k.series.value.real());
    row["series_im"] = number_or_null(k.series.value.imag());
    if (k.closed_form) {
      row["closed_re"] = number_or_null(k.closed_form->value.real());
      row["closed_im"] = number_or_null(k.closed_form->value.imag());
    }
    if (z == w) row["normalization"] = number_or_null(normalization(c.m, std::norm(z), q));
    row["status"] = k.closed_form ? "ok" : "closed_form_unavailable";
    t.rows.push_back(std::move(row));
  }
  return t;
}

struct TransformOptions {
  std::string input;
  std::string signal;
  std::vector<std::string> z;
  std::string grid;
  int nodes = 64;
};

SampledSignal load_signal(const TransformOptions& o, DeformationParameter q) {
  if (!o.input.empty()) {
    std::ifstream file(o.input, std::ios::binary);
    if (!file) throw InputFormatError("cannot open input '" + o.input + "'");
    return read_theta_csv(file);
  }
  if (o.signal == "zero") {
    return SampledSignal::from_function([](double) { return Complex(0.0); });
  }
  if (o.signal.size() > 4 && o.signal.rfind("phi_", 0) == 0) {
    int j = 0;
    const std::string digits = o.signal.substr(4);
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), j);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && j >= 0) {
      return SampledSignal::from_function(
          [j, q](double xi) { return Complex(phi_q(j, xi, q)); });
    }
  }
  throw CLI::ValidationError("--signal", "expected phi_<j> or zero, got '" + o.signal + "'");
}

Table cmd_transform(const TransformOptions& o, const Common& c) {
  const DeformationParameter q(c.q);
  const SampledSignal f = load_signal(o, q);
  QuadratureSpec quad;
  quad.node_count = o.nodes;
  if (c.tolerance) quad.target_tol = *c.tolerance;
  Table t{{"z_re", "z_im", "re", "im", "nodes", "estimated_error", "status"}, {}};
  for (const Complex& z : z_points(o.z, o.grid)) {
    Json row;
    row["z_re"] = z.real();
    row["z_im"] = z.imag();
    if (!CoherentStateLabel::admissible(q, c.m, z)) {
      row["status"] = "outside";
    } else {
      const TransformValue v = bargmann_q(f, c.m, q, z, quad);
      row["re"] = number_or_null(v.value.real());
      row["im"] = number_or_null(v.value.imag());
      row["nodes"] = v.nodes;
      row["estimated_error"] = v.estimated_error;
      row["status"] = "ok";
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string render_reports(const std::vector<VerificationReport>& reports,
                           const std::string& format) {
  return format == "csv" ? reports_to_csv(reports) : reports_to_json(reports);
}

void emit(const std::string& text, const Common& c, std::ostream& out) {
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.output, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output '" + c.output + "'");
  file << text;
}

}  // namespace

Complex parse_complex(std::string_view text) {
  std::string s = trim(text);
  if (s.empty()) throw InputFormatError("empty complex literal");
  if (s.back() != 'i') return parse_double(s);
  s.pop_back();
  // Split at the last sign that is not part of an exponent.
  std::size_t split_at = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split_at = i;
      break;
    }
  }
  const auto imaginary = [](const std::string& part) {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    return parse_double(part);
  };
  if (split_at == std::string::npos) return {0.0, imaginary(s)};
  return {parse_double(s.substr(0, split_at)), imaginary(s.substr(split_at))};
}

std::vector<Complex> parse_grid(std::string_view spec) {
  const std::vector<std::string> axes = split(spec, ',');
  if (axes.size() != 2) throw InputFormatError("grid must be 're0:re1:n,im0:im1:m'");
  std::vector<std::vector<double>> values;
  for (const std::string& axis : axes) {
    const std::vector<std::string> fields = split(axis, ':');
    if (fields.size() != 3) throw InputFormatError("grid axis must be 'start:stop:count'");
    const double start = parse_double(trim(fields[0]));
    const double stop = parse_double(trim(fields[1]));
    int count = 0;
    const std::string n = trim(fields[2]);
    const auto [ptr, ec] = std::from_chars(n.data(), n.data() + n.size(), count);
    if (ec != std::errc() || ptr != n.data() + n.size() || count < 0) {
      throw InputFormatError("grid count must be a nonnegative integer");
    }
    std::vector<double> axis_values;
    for (int i = 0; i < count; ++i) {
      axis_values.push_back(count == 1 ? start : start + (stop - start) * i / (count - 1));
    }
    values.push_back(std::move(axis_values));
  }
  std::vector<Complex> points;
  for (double re : values[0]) {
    for (double im : values[1]) points.emplace_back(re, im);
  }
  return points;
}

SampledSignal read_theta_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw InputFormatError("empty CSV input");
  if (trim(line) != "theta,re,im") {
    throw InputFormatError("CSV header must be 'theta,re,im'");
  }
  std::vector<double> theta;
  std::vector<Complex> values;
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (trim(line).empty()) continue;
    const std::vector<std::string> fields = split(line, ',');
    if (fields.size() != 3) {
      throw InputFormatError("line " + std::to_string(line_number) + ": expected 3 fields");
    }
    try {
      theta.push_back(parse_double(trim(fields[0])));
      values.emplace_back(parse_double(trim(fields[1])), parse_double(trim(fields[2])));
    } catch (const InputFormatError& e) {
      throw InputFormatError("line " + std::to_string(line_number) + ": " + e.what());
    }
  }
  try {
    return SampledSignal::from_theta_samples(std::move(theta), std::move(values));
  } catch (const DomainError& e) {
    throw InputFormatError(e.what());
  }
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
  Json array = Json::array();
  for (const VerificationReport& r : reports) {
    Json params = Json::object();
    for (const auto& [key, value] : r.params) params[key] = param_to_json(value);
    Json entry;
    entry["check_id"] = r.check_id;
    entry["params"] = std::move(params);
    entry["max_abs_error"] = error_to_json(r.max_abs_error);
    entry["tolerance"] = r.tolerance;
    entry["passed"] = r.passed;
    entry["mandatory"] = r.mandatory;
    entry["notes"] = r.notes;
    array.push_back(std::move(entry));
  }
  return array.dump(2) + "\n";
}

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
  std::string out = "check_id,mandatory,passed,max_abs_error,tolerance\n";
  for (const VerificationReport& r : reports) {
    out += r.check_id + ',' + (r.mandatory ? "true" : "false") + ',' +
           (r.passed ? "true" : "false") + ',' + format_double(r.max_abs_error) + ',' +
           format_double(r.tolerance) + '\n';
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerics for the q-deformed polyanalytic Bargmann transform", "qbargmann"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "qbargmann 0.1.0");

  Common eval_common, kernel_common, transform_common, verify_common, limits_common;

  EvalOptions eval_opts;
  CLI::App* eval = app.add_subcommand("eval", "Evaluate a special function at points");
  eval->add_option("--family", eval_opts.family, "Function family")
      ->required()
      ->check(CLI::IsMember({"cq-hermite", "wall", "al-salam-chihara", "hermite", "laguerre",
                             "omega", "phi", "normalization", "eq-exp", "coeff-h"}));
  eval->add_option("--n", eval_opts.n, "Degree or index");
  eval->add_option("--a", eval_opts.a, "Parameter a (complex literal)");
  eval->add_option("--b", eval_opts.b, "Parameter b (complex literal)");
  eval->add_option("--alpha", eval_opts.alpha, "Laguerre parameter");
  eval->add_option("--x", eval_opts.x, "Real points")->delimiter(',');
  eval->add_option("--u", eval_opts.u, "Weight arguments")->delimiter(',');
  eval->add_option("--xi", eval_opts.xi, "Points of I_q")->delimiter(',');
  eval->add_option("--z", eval_opts.z, "Complex points")->delimiter(',');
  add_q(eval, eval_common.q);
  eval->add_option("--m", eval_common.m, "Level m")->check(CLI::NonNegativeNumber);
  add_output(eval, eval_common, "csv");

  KernelOptions kernel_opts;
  CLI::App* kernel = app.add_subcommand("kernel", "Overlap kernel and normalization on grids");
  kernel->add_option("--z", kernel_opts.z, "z points")->delimiter(',');
  kernel->add_option("--w", kernel_opts.w, "w points (default: the z points)")->delimiter(',');
  kernel->add_option("--grid", kernel_opts.grid, "z grid 're0:re1:n,im0:im1:m'");
  kernel->add_flag("--diagonal", kernel_opts.diagonal, "Only pairs w = z");
  add_q(kernel, kernel_common.q);
  kernel->add_option("--m", kernel_common.m, "Level m")->check(CLI::NonNegativeNumber);
  add_output(kernel, kernel_common, "csv");

  TransformOptions transform_opts;
  CLI::App* transform = app.add_subcommand("transform", "Apply B_m^q to a signal");
  auto* input = transform->add_option("--input", transform_opts.input,
                                      "CSV signal with header theta,re,im");
  auto* signal = transform->add_option("--signal", transform_opts.signal,
                                       "Built-in signal: phi_<j> or zero");
  input->excludes(signal);
  transform->add_option("--z", transform_opts.z, "z points")->delimiter(',');
  transform->add_option("--grid", transform_opts.grid, "z grid 're0:re1:n,im0:im1:m'");
  transform->add_option("--nodes", transform_opts.nodes, "Initial quadrature nodes")
      ->check(CLI::PositiveNumber);
  add_q(transform, transform_common.q);
  transform->add_option("--m", transform_common.m, "Level m")->check(CLI::NonNegativeNumber);
  transform->add_option("--tolerance", transform_common.tolerance, "Quadrature tolerance")
      ->check(CLI::PositiveNumber);
  add_output(transform, transform_common, "csv");

  std::vector<std::string> only;
  std::vector<double> verify_qs;
  CLI::App* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("--only", only, "Check ids to run")
      ->delimiter(',')
      ->check(CLI::IsMember(available_checks()));
  verify->add_option("--q", verify_qs, "q values to sweep")
      ->delimiter(',')
      ->check(open_unit_interval());
  verify->add_option("--tolerance", verify_common.tolerance, "Override every tolerance")
      ->check(CLI::PositiveNumber);
  add_output(verify, verify_common, "json");

  std::vector<double> limit_qs;
  CLI::App* limits = app.add_subcommand("limits", "Run the q -> 1 limit checks");
  limits->add_option("--q", limit_qs, "Increasing q values toward 1")
      ->delimiter(',')
      ->check(open_unit_interval());
  add_output(limits, limits_common, "json");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (eval->parsed()) {
      emit(cmd_eval(eval_opts, eval_common).render(eval_common.format), eval_common, out);
    } else if (kernel->parsed()) {
      emit(cmd_kernel(kernel_opts, kernel_common).render(kernel_common.format), kernel_common,
           out);
    } else if (transform->parsed()) {
      if (transform_opts.input.empty() && transform_opts.signal.empty()) {
        err << "transform: one of --input or --signal is required\n";
        return kUsage;
      }
      emit(cmd_transform(transform_opts, transform_common).render(transform_common.format),
           transform_common, out);
    } else if (verify->parsed()) {
      SuiteConfig config = SuiteConfig::defaults();
      if (!only.empty()) config.checks = only;
      if (!verify_qs.empty()) config.q_values = verify_qs;
      config.tolerance = verify_common.tolerance;
      const std::vector<VerificationReport> reports = run_suite(config);
      emit(render_reports(reports, verify_common.format), verify_common, out);
      if (!mandatory_passed(reports)) return kMandatoryFailure;
    } else if (limits->parsed()) {
      const std::vector<VerificationReport> reports =
          run_limits(limit_qs.empty() ? kLimitQs : limit_qs);
      emit(render_reports(reports, limits_common.format), limits_common, out);
      if (!mandatory_passed(reports)) return kMandatoryFailure;
    }
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const InputFormatError& e) {
    err << "input format error: " << e.what() << "\n";
    return kInputFormat;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUnexpected;
  }
  return kSuccess;
}

}  // namespace qbargmann::cli
