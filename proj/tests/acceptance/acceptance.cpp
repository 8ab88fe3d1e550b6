// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "gdet/apps.hpp"
#include "gdet/cli.hpp"
#include "gdet/exact.hpp"
#include "gdet/gdet.hpp"
#include "gdet/parse.hpp"
#include "gdet/sign.hpp"
#include "support/oracles.hpp"

using namespace gdet;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

const Matrix kVolumeExample = Matrix::from_rows({{3, 6}, {4, 8}, {2, 1}});

Outcome volume_example() {
  Outcome o;
  const auto start = Clock::now();
  const double qr = gdet::gdet(kVolumeExample).value;
  const double minors = gdet::gdet(kVolumeExample, GdetPath::minor_sum).value;
  const double spectral =
      to_int(sign(kVolumeExample)) * singular_value_magnitude(kVolumeExample);
  const ExactGdet exact = gdet_exact_oracle(kVolumeExample);
  const double ms = elapsed_ms(start);

  o.require(std::fabs(qr + 15.0) <= 1e-9, "qr path gave " + fmt(qr));
  o.require(std::fabs(minors + 15.0) <= 1e-9, "minor path gave " + fmt(minors));
  o.require(std::fabs(spectral + 15.0) <= 1e-9, "spectral path gave " + fmt(spectral));
  o.require(exact.sign == -1 && exact.magnitude_squared == 225, "exact oracle mismatch");
  o.require(ms < 1.0, "runtime " + fmt(ms) + " ms");
  if (o.pass) o.detail = "all paths -15, exact (-1, 225), " + fmt(ms) + " ms";
  return o;
}

Outcome multiplication() {
  Outcome o;
  const CheckReport left =
      check_left_multiplication(Matrix::from_rows({{1, 0}, {0, 2}}), Matrix::from_rows({{1}, {0}}));
  o.require(left.lhs == 1.0 && left.rhs == 2.0 && !left.holds,
            "counterexample gave " + fmt(left.lhs) + " vs " + fmt(left.rhs));

  ref::Rng rng(1001);
  double worst = 0.0;
  const int trials = 10000;
  for (int t = 0; t < trials; ++t) {
    const std::size_t m = rng.index(1, 6);
    const std::size_t n = rng.index(1, 6);
    const Matrix a = rng.matrix(m, n);
    const Matrix b = rng.matrix(n, n);
    const CheckReport r = check_multiplication(a, b);
    const double e = ref::rel_diff(r.lhs, r.rhs);
    worst = std::max(worst, e);
    o.require(e <= 1e-8, "relative error " + fmt(e) + " on\n" + render_matrix(a));
  }
  if (o.pass) o.detail = "Gdet(BA)=1, Gdet(B)Gdet(A)=2; " + std::to_string(trials) +
                         " pairs, worst rel " + fmt(worst);
  return o;
}

Outcome refutation_pair() {
  Outcome o;
  const double wide = gdet::gdet(Matrix::from_rows({{1, 0}})).value;
  const double tall = gdet::gdet(Matrix::from_rows({{1}, {0}})).value;
  o.require(wide == 0.0, "Gdet((1,0)) = " + fmt(wide));
  o.require(tall == 1.0, "Gdet((1,0)^T) = " + fmt(tall));
  if (o.pass) o.detail = "Gdet(A)=0, Gdet(A^T)=1";
  return o;
}

void check_against_oracles(const Matrix& a, Outcome& o, double& worst) {
  const GdetResult g = gdet::gdet(a);
  const SignValue s = sign(a);
  o.require(s == sign_oracle(a), "sign differs from sigma oracle on\n" + render_matrix(a));
  const GdetResult slow = gdet_minor_oracle(a);
  const ExactGdet exact = gdet_exact_oracle(a);
  const double exact_value = exact.sign * std::sqrt(exact.magnitude_squared.convert_to<double>());
  const double e1 = ref::rel_diff(g.value, slow.value);
  const double e2 = ref::rel_diff(g.value, exact_value);
  worst = std::max({worst, e1, e2});
  o.require(e1 <= 1e-8, "minor oracle rel " + fmt(e1) + " on\n" + render_matrix(a));
  o.require(e2 <= 1e-8, "exact oracle rel " + fmt(e2) + " on\n" + render_matrix(a));
}

Outcome oracle_equivalence() {
  Outcome o;
  const auto start = Clock::now();
  double worst = 0.0;
  ref::Rng rng(1004);
  const int samples = 10000;
  for (int t = 0; t < samples; ++t) {
    const std::size_t m = rng.index(1, 5);
    const std::size_t n = rng.index(1, m);
    check_against_oracles(rng.int_matrix(m, n, -2, 2), o, worst);
  }
  std::size_t exhaustive = 0;
  const std::vector<double> vals{-1, 0, 1};
  for (auto [m, n] : {std::pair<std::size_t, std::size_t>{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
    ref::for_each_matrix(m, n, vals, [&](const Matrix& a) {
      check_against_oracles(a, o, worst);
      ++exhaustive;
    });
  }
  const double ms = elapsed_ms(start);
  o.require(ms < 60000.0, "runtime " + fmt(ms / 1000) + " s");
  if (o.pass) o.detail = std::to_string(samples) + " sampled + " + std::to_string(exhaustive) +
                         " exhaustive, worst rel " + fmt(worst) + ", " + fmt(ms / 1000) + " s";
  return o;
}

Matrix with_column(const Matrix& a, std::size_t i, const std::function<double(std::size_t)>& f) {
  std::vector<double> e(a.entries().begin(), a.entries().end());
  for (std::size_t r = 0; r < a.rows(); ++r) e[r * a.cols() + i] = f(r);
  return Matrix(a.rows(), a.cols(), std::move(e));
}

Outcome multilinearity() {
  Outcome o;
  ref::Rng rng(1005);
  double worst = 0.0;
  const int trials = 10000;
  auto check = [&](double got, double want, const char* what, const Matrix& a) {
    const double e = ref::rel_diff(got, want);
    worst = std::max(worst, e);
    o.require(e <= 1e-8, std::string(what) + " rel " + fmt(e) + " on\n" + render_matrix(a));
  };
  for (int t = 0; t < trials; ++t) {
    const std::size_t m = rng.index(2, 7);
    const std::size_t n = rng.index(2, m);
    const Matrix a = rng.matrix(m, n);
    const double base = gdet::gdet(a).value;
    const std::size_t i = rng.index(0, n - 1);
    std::size_t j = rng.index(0, n - 2);
    if (j >= i) ++j;
    const double k = rng.uniform(-3, 3);

    check(gdet::gdet(with_column(a, i, [&](std::size_t r) { return a(r, i) + k * a(r, j); })).value,
          base, "column addition", a);
    for (double kk : {k, -1.0, 0.0}) {
      check(gdet::gdet(with_column(a, i, [&](std::size_t r) { return kk * a(r, i); })).value, kk * base,
            "column scaling", a);
    }
    const std::size_t p = rng.index(0, n - 2);
    const Matrix swapped = with_column(
        with_column(a, p, [&](std::size_t r) { return a(r, p + 1); }), p + 1,
        [&](std::size_t r) { return a(r, p); });
    check(gdet::gdet(swapped).value, -base, "adjacent swap", a);
  }
  for (std::size_t m = 1; m <= 10; ++m)
    for (std::size_t n = 1; n <= m; ++n) {
      const double v = gdet::gdet(Matrix::identity(m, n)).value;
      o.require(v == 1.0, "Gdet(I_" + std::to_string(m) + "x" + std::to_string(n) + ") = " + fmt(v));
    }
  if (o.pass) o.detail = std::to_string(trials) + " instances, worst rel " + fmt(worst) +
                         "; identities exact for m <= 10";
  return o;
}

Outcome cauchy_binet() {
  Outcome o;
  ref::Rng rng(1006);
  double worst = 0.0;
  std::size_t checks = 0;
  for (int t = 0; t < 700; ++t) {
    const std::size_t m = 1 + static_cast<std::size_t>(t % 7);
    const std::size_t n = rng.index(1, m);
    const Matrix a = rng.int_matrix(m, n, -5, 5);
    for (std::size_t k = n; k <= m; ++k) {
      const CauchyBinetReport r = check_cauchy_binet(a, k);
      const double e = ref::rel_diff(r.lhs, r.rhs);
      worst = std::max(worst, e);
      ++checks;
      o.require(e <= 1e-6, "k=" + std::to_string(k) + " rel " + fmt(e) + " on\n" + render_matrix(a));
    }
  }
  if (o.pass) o.detail = std::to_string(checks) + " (A, k) pairs, worst rel " + fmt(worst);
  return o;
}

int cli_exit_code(const std::string& a_text, const std::string& b_text) {
  const fs::path dir = fs::temp_directory_path() / ("gdet_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  std::ofstream(dir / "a.txt") << a_text;
  std::ofstream(dir / "b.txt") << b_text;
  const std::string a = (dir / "a.txt").string();
  const std::string b = (dir / "b.txt").string();
  int code = -1;
#ifdef GDET_BINARY
  const std::string cmd = std::string(GDET_BINARY) + " solve " + a + " " + b + " >/dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
#else
  const char* argv[] = {"gdet", "solve", a.c_str(), b.c_str()};
  std::ostringstream out, err;
  code = cli::main_entry(4, argv, out, err);
#endif
  fs::remove_all(dir);
  return code;
}

Outcome cramer() {
  Outcome o;
  ref::Rng rng(1007);
  double worst = 0.0;
  const int trials = 1000;
  for (int t = 0; t < trials; ++t) {
    const std::size_t m = rng.index(1, 8);
    const std::size_t n = rng.index(1, m);
    const Matrix a = rng.matrix(m, n);
    const std::vector<double> x_star = rng.vector(n, -10, 10);
    const CramerSolution s = cramer_solve(a, multiply(a, x_star));
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = s.x[i] - x_star[i];
    const double e = max_abs(d) / (1 + max_abs(x_star));
    worst = std::max(worst, e);
    o.require(e <= 1e-8, "recovery error " + fmt(e) + " on\n" + render_matrix(a));
  }
  const int singular = cli_exit_code("1 2\n2 4\n", "1\n2\n");
  const int inconsistent = cli_exit_code("1\n1\n", "1\n2\n");
  o.require(singular == 4, "singular system exited " + std::to_string(singular));
  o.require(inconsistent == 4, "inconsistent system exited " + std::to_string(inconsistent));
  if (o.pass) o.detail = std::to_string(trials) + " systems, worst scaled error " + fmt(worst) +
                         "; CLI exit 4 for singular and inconsistent";
  return o;
}

Outcome volume_spectral() {
  Outcome o;
  ref::Rng rng(1008);
  double worst = 0.0;
  const int trials = 1000;
  for (int t = 0; t < trials; ++t) {
    const std::size_t m = rng.index(1, 8);
    const std::size_t n = rng.index(1, m);
    const Matrix a = rng.matrix(m, n);
    const double e = ref::rel_diff(std::fabs(gdet::gdet(a).value), singular_value_magnitude(a));
    worst = std::max(worst, e);
    o.require(e <= 1e-9, "relative error " + fmt(e) + " on\n" + render_matrix(a));
  }
  const double len = std::fabs(gdet::gdet(Matrix::from_rows({{3}, {4}, {2}})).value);
  o.require(std::fabs(len - std::sqrt(29.0)) <= 1e-12, "length gave " + fmt(len));
  if (o.pass) o.detail = std::to_string(trials) + " matrices, worst rel " + fmt(worst) +
                         "; |Gdet((3,4,2)^T)| = sqrt(29)";
  return o;
}

Outcome qr_sign_transfer() {
  Outcome o;
  ref::Rng rng(1009);
  const int trials = 1000;
  for (int t = 0; t < trials; ++t) {
    const std::size_t m = rng.index(1, 8);
    const std::size_t n = rng.index(1, m);
    const Matrix a = rng.matrix(m, n);
    const QRFactors f = qr_factor(a);
    o.require(sign(a) == sign(f.q), "sign(A) != sign(Q) on\n" + render_matrix(a));
    for (std::size_t i = 0; i < n; ++i)
      o.require(f.r(i, i) > 0.0, "nonpositive R diagonal on\n" + render_matrix(a));
  }
  if (o.pass) o.detail = std::to_string(trials) + " factorizations";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"AC1 volume example", volume_example},
      {"AC2 multiplication", multiplication},
      {"AC3 wide/tall refutation", refutation_pair},
      {"AC4 oracle equivalence", oracle_equivalence},
      {"AC5 alternating multilinearity", multilinearity},
      {"AC6 Cauchy-Binet", cauchy_binet},
      {"AC7 Cramer", cramer},
      {"AC8 volume and singular values", volume_spectral},
      {"AC9 QR sign transfer", qr_sign_transfer},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.pass;
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures,
              std::size(criteria));
  return failures == 0 ? 0 : 1;
}
