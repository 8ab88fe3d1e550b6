#include "gdet/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <json.hpp>

#include "gdet/apps.hpp"
#include "gdet/error.hpp"
#include "gdet/exact.hpp"
#include "gdet/gdet.hpp"
#include "gdet/sign.hpp"

namespace gdet::cli {
namespace {

using nlohmann::json;

class UsageError : public Error {
 public:
  using Error::Error;
};

Matrix load_matrix(const std::string& path, TextFormat format) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return parse_matrix(in, format);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.line(), e.column());
  }
}

// A vector file holds a single row or a single column.
std::vector<double> load_vector(const std::string& path, TextFormat format) {
  const Matrix v = load_matrix(path, format);
  if (v.rows() != 1 && v.cols() != 1) {
    throw DimensionError(path + ": expected a single row or column, got " +
                         std::to_string(v.rows()) + "x" + std::to_string(v.cols()));
  }
  return {v.entries().begin(), v.entries().end()};
}

json rows_json(const PrincipalRows& p) { return json(p.indices); }

void warn_ill_conditioned(bool flagged, std::ostream& err) {
  if (flagged) err << "warning: ill_conditioned_sign: a rank decision was within a factor of 10 "
                      "of the zero threshold\n";
}

void emit_gdet(const GdetResult& g, const CliConfig& c, std::ostream& out, std::ostream& err) {
  if (c.output == OutputMode::json) {
    json j{{"sign", to_int(g.sign)},
           {"magnitude", g.magnitude},
           {"value", g.value},
           {"principal_rows", rows_json(g.principal)}};
    if (g.ill_conditioned_sign) j["ill_conditioned_sign"] = true;
    out << j.dump() << '\n';
  } else {
    out << format_real(g.value) << '\n';
    warn_ill_conditioned(g.ill_conditioned_sign, err);
  }
}

void emit_check(const CheckReport& r, const CliConfig& c, std::ostream& out, json extra = {}) {
  if (c.output == OutputMode::json) {
    json j{{"lhs", r.lhs}, {"rhs", r.rhs}, {"holds", r.holds}};
    if (extra.is_object()) j.update(extra);
    out << j.dump() << '\n';
  } else {
    out << format_real(r.lhs) << ' ' << format_real(r.rhs) << ' '
        << (r.holds ? "true" : "false") << '\n';
  }
}

void require_inputs(const CliConfig& c, std::size_t count) {
  if (c.inputs.size() != count) {
    throw UsageError("expected " + std::to_string(count) + " input file(s), got " +
                     std::to_string(c.inputs.size()));
  }
}

void reject_flags(const CliConfig& c, const char* name) {
  if (c.exact) throw UsageError(std::string("--exact does not apply to ") + name);
  if (c.oracle) throw UsageError(std::string("--oracle does not apply to ") + name);
}

int run_det(const CliConfig& c, const ToleranceConfig& tol, std::ostream& out,
            std::ostream& err) {
  require_inputs(c, 1);
  const Matrix a = load_matrix(c.inputs[0], c.format);
  if (!c.exact) {
    emit_gdet(gdet(a, c.oracle ? GdetPath::minor_sum : GdetPath::qr, tol), c, out, err);
    return exit_code::ok;
  }
  const ExactGdet e = gdet_exact_oracle(a);
  const double magnitude = std::sqrt(e.magnitude_squared.convert_to<double>());
  if (c.output == OutputMode::json) {
    out << json{{"sign", e.sign},
                {"magnitude", magnitude},
                {"value", e.sign * magnitude},
                {"magnitude_squared", e.magnitude_squared.str()},
                {"principal_rows", e.principal},
                {"exact", true}}
               .dump()
        << '\n';
  } else {
    out << e.sign << ' ' << e.magnitude_squared.str() << '\n';
  }
  return exit_code::ok;
}

int run_sign(const CliConfig& c, const ToleranceConfig& tol, std::ostream& out,
             std::ostream& err) {
  require_inputs(c, 1);
  const Matrix a = load_matrix(c.inputs[0], c.format);
  int s = 0;
  json j;
  if (c.exact) {
    const ExactGdet e = gdet_exact_oracle(a);
    s = e.sign;
    j = {{"sign", s}, {"principal_rows", e.principal}, {"exact", true}};
  } else if (c.oracle) {
    s = to_int(sign_oracle(a, tol));
    const Permutation sigma = a.rows() >= a.cols() ? sigma_max_oracle(a, tol)
                                                   : Permutation::identity(a.rows());
    std::vector<std::size_t> images(sigma.images().begin(), sigma.images().end());
    j = {{"sign", s}, {"sigma", images}};
  } else {
    const SignAnalysis an = analyze_sign(a, tol);
    s = to_int(an.sign);
    j = {{"sign", s}, {"principal_rows", rows_json(an.principal)}};
    if (an.ill_conditioned) j["ill_conditioned_sign"] = true;
    if (c.output == OutputMode::text) warn_ill_conditioned(an.ill_conditioned, err);
  }
  if (c.output == OutputMode::json) {
    out << j.dump() << '\n';
  } else {
    out << s << '\n';
  }
  return exit_code::ok;
}

int run_solve(const CliConfig& c, const ToleranceConfig& tol, std::ostream& out,
              std::ostream& err) {
  require_inputs(c, 2);
  reject_flags(c, "solve");
  const Matrix a = load_matrix(c.inputs[0], c.format);
  const std::vector<double> b = load_vector(c.inputs[1], c.format);
  try {
    const CramerSolution s = cramer_solve(a, b, tol);
    if (c.output == OutputMode::json) {
      json pairs = json::array();
      for (const auto& [gi, g] : s.per_coordinate) pairs.push_back({gi, g});
      out << json{{"x", s.x}, {"residual", s.residual_norm}, {"per_coordinate", pairs}}.dump()
          << '\n';
    } else {
      for (double xi : s.x) out << format_real(xi) << '\n';
    }
    return exit_code::ok;
  } catch (const InconsistentError& e) {
    err << "error: " << e.what() << '\n';
    if (c.output == OutputMode::json) {
      out << json{{"error", "inconsistent"}, {"residual", e.residual()}}.dump() << '\n';
    } else {
      out << "residual " << format_real(e.residual()) << '\n';
    }
    return exit_code::unsolvable;
  } catch (const SingularError& e) {
    err << "error: " << e.what() << '\n';
    if (c.output == OutputMode::json) out << json{{"error", "singular"}}.dump() << '\n';
    return exit_code::unsolvable;
  }
}

int run_volume(const CliConfig& c, const ToleranceConfig& tol, std::ostream& out,
               std::ostream& err) {
  require_inputs(c, 1);
  if (c.exact) throw UsageError("--exact does not apply to volume");
  const Matrix g = load_matrix(c.inputs[0], c.format);
  const VolumeResult v =
      generalized_volume(g, tol, c.oracle ? GdetPath::minor_sum : GdetPath::qr);
  if (c.output == OutputMode::json) {
    json j{{"sign", to_int(v.orientation)},
           {"magnitude", v.volume},
           {"value", to_int(v.orientation) * v.volume},
           {"principal_rows", rows_json(v.principal)}};
    if (v.ill_conditioned_sign) j["ill_conditioned_sign"] = true;
    out << j.dump() << '\n';
  } else {
    out << format_real(v.volume) << '\n' << to_int(v.orientation) << '\n';
    warn_ill_conditioned(v.ill_conditioned_sign, err);
  }
  return exit_code::ok;
}

int run_member(const CliConfig& c, const ToleranceConfig& tol, std::ostream& out) {
  require_inputs(c, 2);
  reject_flags(c, "member");
  const Matrix basis = load_matrix(c.inputs[0], c.format);
  const std::vector<double> x = load_vector(c.inputs[1], c.format);
  bool member = false;
  if (c.offset) {
    member = in_variety(basis, load_vector(*c.offset, c.format), x, tol);
  } else {
    member = in_subspace(basis, x, tol);
  }
  if (c.output == OutputMode::json) {
    out << json{{"member", member}}.dump() << '\n';
  } else {
    out << (member ? "true" : "false") << '\n';
  }
  return exit_code::ok;
}

int run_check_mul(const CliConfig& c, const ToleranceConfig& tol, std::ostream& out) {
  require_inputs(c, 2);
  if (c.exact) throw UsageError("--exact does not apply to check-mul");
  const Matrix a = load_matrix(c.inputs[0], c.format);
  const Matrix b = load_matrix(c.inputs[1], c.format);
  emit_check(check_multiplication(a, b, tol, c.oracle ? GdetPath::minor_sum : GdetPath::qr), c,
             out);
  return exit_code::ok;
}

int run_check_cb(const CliConfig& c, const ToleranceConfig& tol, std::ostream& out) {
  require_inputs(c, 1);
  if (c.exact) throw UsageError("--exact does not apply to check-cb");
  const Matrix a = load_matrix(c.inputs[0], c.format);
  const CauchyBinetReport r =
      check_cauchy_binet(a, c.k, tol, c.oracle ? GdetPath::minor_sum : GdetPath::qr);
  emit_check(r, c, out,
             json{{"coefficient", r.coefficient},
                  {"literal_coefficient", r.literal_coefficient},
                  {"literal_lhs", r.literal_lhs}});
  return exit_code::ok;
}

double parse_tolerance(const std::string& s, const char* what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || used == 0) {
    throw UsageError(std::string(what) + " is not a number: '" + s + "'");
  }
  return v;
}

}  // namespace

ToleranceConfig resolve_tolerance(const CliConfig& config, const char* env_rel) {
  ToleranceConfig tol;
  if (env_rel != nullptr && *env_rel != '\0') tol.rel_zero = parse_tolerance(env_rel, "GDET_TOL_REL");
  if (config.rel_tol) tol.rel_zero = *config.rel_tol;
  if (config.abs_tol) tol.abs_zero = *config.abs_tol;
  tol.validate();
  return tol;
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const ToleranceConfig tol = resolve_tolerance(config, std::getenv("GDET_TOL_REL"));
    switch (config.command) {
      case Command::det: return run_det(config, tol, out, err);
      case Command::sign: return run_sign(config, tol, out, err);
      case Command::solve: return run_solve(config, tol, out, err);
      case Command::volume: return run_volume(config, tol, out, err);
      case Command::member: return run_member(config, tol, out);
      case Command::check_mul: return run_check_mul(config, tol, out);
      case Command::check_cb: return run_check_cb(config, tol, out);
    }
    return exit_code::usage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return exit_code::parse;
  } catch (const DimensionError& e) {
    err << "dimension error: " << e.what() << '\n';
    return exit_code::dimension;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return exit_code::dimension;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return exit_code::capacity;
  } catch (const SingularError& e) {
    err << "singular: " << e.what() << '\n';
    return exit_code::unsolvable;
  } catch (const InconsistentError& e) {
    err << "inconsistent: " << e.what() << '\n';
    return exit_code::unsolvable;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized determinant of rectangular real matrices", "gdet"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig config;
  bool csv = false;
  bool as_json = false;
  double rel = 0.0;
  double abs = 0.0;
  auto* rel_opt = app.add_option("--rel-tol", rel, "Relative zero tolerance (default 1e-10)");
  auto* abs_opt = app.add_option("--abs-tol", abs, "Absolute zero tolerance (default 1e-12)");
  app.add_flag("--csv", csv, "Read comma-separated files");
  app.add_flag("--json", as_json, "Emit JSON");
  app.add_flag("--oracle", config.oracle, "Use the brute-force enumeration paths");
  app.add_flag("--exact", config.exact, "Use the exact integer oracle (det, sign)");

  std::string f1, f2, offset;
  auto* det = app.add_subcommand("det", "Generalized determinant of a matrix");
  det->add_option("FILE", f1)->required();
  auto* sgn = app.add_subcommand("sign", "Sign of a matrix");
  sgn->add_option("FILE", f1)->required();
  auto* solve = app.add_subcommand("solve", "Generalized Cramer's rule for A x = b");
  solve->add_option("AFILE", f1)->required();
  solve->add_option("BFILE", f2)->required();
  auto* volume = app.add_subcommand("volume", "Oriented volume; columns are generators");
  volume->add_option("FILE", f1)->required();
  auto* member = app.add_subcommand("member", "Subspace / linear variety membership");
  member->add_option("BASISFILE", f1)->required();
  member->add_option("POINTFILE", f2)->required();
  auto* offset_opt = member->add_option("--offset", offset, "Offset vector file");
  auto* mul = app.add_subcommand("check-mul", "Check Gdet(AB) = Gdet(A) Gdet(B)");
  mul->add_option("AFILE", f1)->required();
  mul->add_option("BFILE", f2)->required();
  auto* cb = app.add_subcommand("check-cb", "Check the generalized Cauchy-Binet identity");
  cb->add_option("FILE", f1)->required();
  cb->add_option("K", config.k)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::ok : exit_code::usage;
  }

  config.format = csv ? TextFormat::csv : TextFormat::whitespace;
  config.output = as_json ? OutputMode::json : OutputMode::text;
  if (*rel_opt) config.rel_tol = rel;
  if (*abs_opt) config.abs_tol = abs;
  if (*offset_opt) config.offset = offset;

  if (det->parsed()) {
    config.command = Command::det;
    config.inputs = {f1};
  } else if (sgn->parsed()) {
    config.command = Command::sign;
    config.inputs = {f1};
  } else if (solve->parsed()) {
    config.command = Command::solve;
    config.inputs = {f1, f2};
  } else if (volume->parsed()) {
    config.command = Command::volume;
    config.inputs = {f1};
  } else if (member->parsed()) {
    config.command = Command::member;
    config.inputs = {f1, f2};
  } else if (mul->parsed()) {
    config.command = Command::check_mul;
    config.inputs = {f1, f2};
  } else {
    config.command = Command::check_cb;
    config.inputs = {f1};
  }
  return run(config, out, err);
}

}  // namespace gdet::cli
