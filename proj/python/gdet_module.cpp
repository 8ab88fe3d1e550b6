#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>

#include "gdet/apps.hpp"
#include "gdet/error.hpp"
#include "gdet/exact.hpp"
#include "gdet/gdet.hpp"
#include "gdet/parse.hpp"
#include "gdet/sign.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

// 2-D arrays map directly; a 1-D array is read as a column vector.
gdet::Matrix to_matrix(const Array& a) {
  if (a.ndim() == 1) {
    return gdet::Matrix(a.shape(0), 1, std::vector<double>(a.data(), a.data() + a.size()));
  }
  if (a.ndim() != 2) throw gdet::DimensionError("expected a 1-D or 2-D array");
  return gdet::Matrix(a.shape(0), a.shape(1),
                      std::vector<double>(a.data(), a.data() + a.size()));
}

py::array_t<double> to_array(const gdet::Matrix& m) {
  py::array_t<double> out({m.rows(), m.cols()});
  std::copy(m.entries().begin(), m.entries().end(), out.mutable_data());
  return out;
}

py::dict report_dict(const gdet::CheckReport& r) {
  return py::dict("lhs"_a = r.lhs, "rhs"_a = r.rhs, "holds"_a = r.holds);
}

gdet::GdetPath path_for(bool oracle) {
  return oracle ? gdet::GdetPath::minor_sum : gdet::GdetPath::qr;
}

}  // namespace

PYBIND11_MODULE(_gdet, m) {
  m.doc() = "Generalized determinant of rectangular real matrices";

  auto base = py::register_exception<gdet::Error>(m, "GdetError", PyExc_ValueError);
  py::register_exception<gdet::ParseError>(m, "ParseError", base.ptr());
  py::register_exception<gdet::DimensionError>(m, "DimensionError", base.ptr());
  py::register_exception<gdet::DomainError>(m, "DomainError", base.ptr());
  py::register_exception<gdet::CapacityError>(m, "CapacityError", base.ptr());
  py::register_exception<gdet::RankError>(m, "RankError", base.ptr());
  py::register_exception<gdet::SingularError>(m, "SingularError", base.ptr());
  py::register_exception<gdet::InconsistentError>(m, "InconsistentError", base.ptr());

  py::class_<gdet::ToleranceConfig>(m, "ToleranceConfig")
      .def(py::init([](double rel_zero, double abs_zero) {
             gdet::ToleranceConfig t{rel_zero, abs_zero};
             t.validate();
             return t;
           }),
           "rel_zero"_a = 1e-10, "abs_zero"_a = 1e-12)
      .def_readonly("rel_zero", &gdet::ToleranceConfig::rel_zero)
      .def_readonly("abs_zero", &gdet::ToleranceConfig::abs_zero)
      .def("__repr__", [](const gdet::ToleranceConfig& t) {
        return "ToleranceConfig(rel_zero=" + gdet::format_real(t.rel_zero) +
               ", abs_zero=" + gdet::format_real(t.abs_zero) + ")";
      });

  py::class_<gdet::GdetResult>(m, "GdetResult")
      .def_property_readonly("sign", [](const gdet::GdetResult& g) { return to_int(g.sign); })
      .def_readonly("magnitude", &gdet::GdetResult::magnitude)
      .def_readonly("value", &gdet::GdetResult::value)
      .def_property_readonly("principal_rows",
                             [](const gdet::GdetResult& g) { return g.principal.indices; })
      .def_readonly("ill_conditioned_sign", &gdet::GdetResult::ill_conditioned_sign)
      .def("__float__", [](const gdet::GdetResult& g) { return g.value; })
      .def("__repr__", [](const gdet::GdetResult& g) {
        return "GdetResult(value=" + gdet::format_real(g.value) + ")";
      });

  py::class_<gdet::VolumeResult>(m, "VolumeResult")
      .def_readonly("volume", &gdet::VolumeResult::volume)
      .def_property_readonly("orientation",
                             [](const gdet::VolumeResult& v) { return to_int(v.orientation); })
      .def_property_readonly("principal_rows",
                             [](const gdet::VolumeResult& v) { return v.principal.indices; })
      .def_readonly("ill_conditioned_sign", &gdet::VolumeResult::ill_conditioned_sign);

  py::class_<gdet::CramerSolution>(m, "CramerSolution")
      .def_readonly("x", &gdet::CramerSolution::x)
      .def_readonly("residual_norm", &gdet::CramerSolution::residual_norm)
      .def_readonly("per_coordinate", &gdet::CramerSolution::per_coordinate);

  const gdet::ToleranceConfig default_tol;

  m.def("parse_matrix",
        [](const std::string& text, bool csv) {
          return to_array(gdet::parse_matrix(text, csv ? gdet::TextFormat::csv
                                                       : gdet::TextFormat::whitespace));
        },
        "text"_a, "csv"_a = false);
  m.def("render_matrix",
        [](const Array& a, bool csv) {
          return gdet::render_matrix(to_matrix(a),
                                     csv ? gdet::TextFormat::csv : gdet::TextFormat::whitespace);
        },
        "a"_a, "csv"_a = false);

  m.def("gdet",
        [](const Array& a, const gdet::ToleranceConfig& tol, bool oracle) {
          return gdet::gdet(to_matrix(a), path_for(oracle), tol);
        },
        "a"_a, "tol"_a = default_tol, "oracle"_a = false,
        "Generalized determinant. oracle=True sums all maximal minors.");
  m.def("gdet_minor_oracle",
        [](const Array& a, const gdet::ToleranceConfig& tol) {
          return gdet::gdet_minor_oracle(to_matrix(a), tol);
        },
        "a"_a, "tol"_a = default_tol);
  m.def("gdet_exact_oracle",
        [](const Array& a) {
          const gdet::ExactGdet e = gdet::gdet_exact_oracle(to_matrix(a));
          py::int_ mag2(py::str(e.magnitude_squared.str()));
          return py::make_tuple(e.sign, mag2);
        },
        "a"_a, "Exact (sign, sum of squared maximal minors) for integer matrices.");
  m.def("sign",
        [](const Array& a, const gdet::ToleranceConfig& tol) {
          return to_int(gdet::sign(to_matrix(a), tol));
        },
        "a"_a, "tol"_a = default_tol);
  m.def("principal_rows",
        [](const Array& a, const gdet::ToleranceConfig& tol) {
          return gdet::principal_rows(to_matrix(a), tol).indices;
        },
        "a"_a, "tol"_a = default_tol);
  m.def("sign_oracle",
        [](const Array& a, const gdet::ToleranceConfig& tol) {
          return to_int(gdet::sign_oracle(to_matrix(a), tol));
        },
        "a"_a, "tol"_a = default_tol);
  m.def("sigma_max_oracle",
        [](const Array& a, const gdet::ToleranceConfig& tol) {
          const gdet::Permutation p = gdet::sigma_max_oracle(to_matrix(a), tol);
          return std::vector<std::size_t>(p.images().begin(), p.images().end());
        },
        "a"_a, "tol"_a = default_tol);
  m.def("qr_factor",
        [](const Array& a, const gdet::ToleranceConfig& tol) {
          const gdet::QRFactors f = gdet::qr_factor(to_matrix(a), tol);
          return py::make_tuple(to_array(f.q), to_array(f.r));
        },
        "a"_a, "tol"_a = default_tol);
  m.def("singular_values", [](const Array& a) { return gdet::singular_values(to_matrix(a)); },
        "a"_a);
  m.def("singular_value_magnitude",
        [](const Array& a) { return gdet::singular_value_magnitude(to_matrix(a)); }, "a"_a);
  m.def("gram_magnitude", [](const Array& a) { return gdet::gram_magnitude(to_matrix(a)); },
        "a"_a);

  m.def("check_multiplication",
        [](const Array& a, const Array& b, const gdet::ToleranceConfig& tol, bool oracle) {
          return report_dict(
              gdet::check_multiplication(to_matrix(a), to_matrix(b), tol, path_for(oracle)));
        },
        "a"_a, "b"_a, "tol"_a = default_tol, "oracle"_a = false);
  m.def("check_left_multiplication",
        [](const Array& b, const Array& a, const gdet::ToleranceConfig& tol) {
          return report_dict(gdet::check_left_multiplication(to_matrix(b), to_matrix(a), tol));
        },
        "b"_a, "a"_a, "tol"_a = default_tol);
  m.def("check_cauchy_binet",
        [](const Array& a, std::size_t k, const gdet::ToleranceConfig& tol, bool oracle) {
          const auto r = gdet::check_cauchy_binet(to_matrix(a), k, tol, path_for(oracle));
          py::dict d = report_dict(r);
          d["coefficient"] = r.coefficient;
          d["literal_coefficient"] = r.literal_coefficient;
          d["literal_lhs"] = r.literal_lhs;
          return d;
        },
        "a"_a, "k"_a, "tol"_a = default_tol, "oracle"_a = false);

  m.def("cramer_solve",
        [](const Array& a, const std::vector<double>& b, const gdet::ToleranceConfig& tol) {
          return gdet::cramer_solve(to_matrix(a), b, tol);
        },
        "a"_a, "b"_a, "tol"_a = default_tol);
  m.def("in_subspace",
        [](const Array& basis, const std::vector<double>& x, const gdet::ToleranceConfig& tol) {
          return gdet::in_subspace(to_matrix(basis), x, tol);
        },
        "basis"_a, "x"_a, "tol"_a = default_tol,
        "basis holds the spanning vectors as columns.");
  m.def("in_variety",
        [](const Array& basis, const std::vector<double>& offset, const std::vector<double>& x,
           const gdet::ToleranceConfig& tol) {
          return gdet::in_variety(to_matrix(basis), offset, x, tol);
        },
        "basis"_a, "offset"_a, "x"_a, "tol"_a = default_tol);
  m.def("generalized_volume",
        [](const Array& generators, const gdet::ToleranceConfig& tol, bool oracle) {
          return gdet::generalized_volume(to_matrix(generators), tol, path_for(oracle));
        },
        "generators"_a, "tol"_a = default_tol, "oracle"_a = false,
        "Oriented volume of the parallelepiped spanned by the columns.");
}
