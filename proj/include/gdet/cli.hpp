#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gdet/matrix.hpp"
#include "gdet/parse.hpp"

namespace gdet::cli {

enum class Command { det, sign, solve, volume, member, check_mul, check_cb };
enum class OutputMode { text, json };

struct CliConfig {
  Command command = Command::det;
  /// Positional files in command order: det/sign/volume FILE; solve AFILE
  /// BFILE; member BASISFILE POINTFILE; check-mul AFILE BFILE; check-cb FILE.
  std::vector<std::string> inputs;
  std::optional<std::string> offset;  // member --offset
  std::size_t k = 0;                  // check-cb K
  TextFormat format = TextFormat::whitespace;
  std::optional<double> rel_tol;
  std::optional<double> abs_tol;
  OutputMode output = OutputMode::text;
  bool oracle = false;  // minor-sum / sigma-enumeration paths
  bool exact = false;   // integer oracle
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int parse = 2;
inline constexpr int dimension = 3;
inline constexpr int unsolvable = 4;
inline constexpr int capacity = 5;
}  // namespace exit_code

/// Flags win over the GDET_TOL_REL value (passed in as env_rel, may be
/// null), which wins over the defaults. Throws DomainError on a malformed
/// or negative value.
ToleranceConfig resolve_tolerance(const CliConfig& config, const char* env_rel);

/// Executes one command and returns the process exit code.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs. Reads GDET_TOL_REL from the environment.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gdet::cli
