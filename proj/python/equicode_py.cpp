#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "equicode/bounds.hpp"
#include "equicode/cli.hpp"
#include "equicode/codes.hpp"
#include "equicode/constructions.hpp"
#include "equicode/error.hpp"
#include "equicode/graphlab.hpp"
#include "equicode/io.hpp"
#include "equicode/matcore.hpp"

namespace py = pybind11;
using namespace equicode;

namespace {

std::string cert_json(const Certificate& c) { return to_json(c).dump(); }

Code code_of(const std::vector<std::vector<double>>& vectors) { return Code::from_vectors(vectors); }

SymMatrix sym_of(const std::vector<std::vector<double>>& rows) { return SymMatrix::from_rows(rows); }

std::vector<std::vector<double>> rows_of(const SymMatrix& m) {
  std::vector<std::vector<double>> out(m.order());
  for (std::size_t i = 0; i < m.order(); ++i) out[i].assign(m.row(i).begin(), m.row(i).end());
  return out;
}

}  // namespace

PYBIND11_MODULE(_equicode, m) {
  m.doc() = "Constructions and certificates for equiangular lines and spherical codes";

  static py::exception<Error> error(m, "EquicodeError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, py::make_tuple(std::string(to_string(e.kind())), e.what()));
    }
  });

  py::class_<Code>(m, "Code")
      .def(py::init(&code_of), py::arg("vectors"))
      .def_property_readonly("dim", &Code::dim)
      .def("__len__", &Code::size)
      .def("inner", &Code::inner)
      .def("vectors", &Code::to_vectors);

  m.def("lemmens_seidel_code", [](std::size_t n) { return lemmens_seidel_code(n); }, py::arg("n"));
  m.def("odd_reciprocal_code", [](std::size_t n, std::size_t r) { return odd_reciprocal_code(n, r); }, py::arg("n"),
        py::arg("r"));
  m.def("seven_dim_28_lines", &seven_dim_28_lines);
  m.def("regular_simplex", [](std::size_t r) { return regular_simplex(r); }, py::arg("r"));
  m.def("binary_kcode", &binary_kcode, py::arg("n"), py::arg("k"));
  m.def(
      "concatenated_code",
      [](std::size_t n, std::size_t k, std::size_t r, double alpha1, std::uint64_t seed) {
        const ConcatResult res = concatenated_code(ConcatParams::make(n, k, r, alpha1, seed));
        return py::make_tuple(res.code, res.achieved_beta, res.report.seed_used);
      },
      py::arg("n"), py::arg("k"), py::arg("r"), py::arg("alpha1"), py::arg("seed") = 0);

  m.def("gram", [](const Code& c) { return rows_of(gram_of(c)); });
  m.def("code_rank", [](const Code& c) { return code_rank(c); });
  m.def("rank", [](const std::vector<std::vector<double>>& rows) { return rank_of(sym_of(rows)); });
  m.def("eigenvalues", [](const std::vector<std::vector<double>>& rows) { return sym_eigen(sym_of(rows)).eigenvalues; });
  m.def("embed_gram", [](const std::vector<std::vector<double>>& rows) { return embed_from_gram(sym_of(rows)); });
  m.def("detect_equiangular", [](const Code& c) { return detect_equiangular(c); });
  m.def(
      "validate",
      [](const Code& c, const std::string& spec) {
        const ValidationReport r = validate_code(c, AngleSet::parse(spec));
        return py::make_tuple(r.pass, r.violations.size(), r.histogram);
      },
      py::arg("code"), py::arg("angle_set"));
  m.def(
      "project",
      [](const Code& c, const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) {
        return project_onto_complement(c, x, y);
      },
      py::arg("code"), py::arg("x"), py::arg("clique"));
  m.def("predicted_projection_angle", py::overload_cast<double, std::size_t, double>(&predicted_projection_angle),
        py::arg("gamma"), py::arg("t"), py::arg("p"));

  m.def("gerzon_certificate_json", [](const Code& c) { return cert_json(gerzon_certificate(c)); });
  m.def("negative_clique_certificate_json",
        [](const Code& c, double alpha) { return cert_json(negative_clique_certificate(c, alpha)); });
  m.def("dgs_bound_check_json", [](const Code& c, const std::string& spec) {
    return cert_json(dgs_bound_check(c, AngleSet::parse(spec)));
  });
  m.def("multipartite_certificate_json",
        [](const Code& c, const std::vector<std::vector<std::size_t>>& parts, double alpha, double beta) {
          return cert_json(multipartite_certificate(c, parts, alpha, beta));
        });
  m.def("bound_table_json", [](std::size_t n, std::size_t k, double alpha, double beta) {
    return to_json(bound_table(n, k, alpha, beta)).dump();
  });
  m.def("catalog_lambda_json", [](std::uint64_t seed, std::size_t witnesses) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : catalog_lambda_checks(seed, witnesses)) out.push_back(to_json(c));
    return out.dump();
  });
  m.def("reduce_json", [](const Code& c, std::size_t t) {
    const ReductionOutcome r = reduction_pipeline(c, t);
    return nlohmann::json{{"y", r.y},
                          {"s_y", r.s_y},
                          {"switched", r.switched},
                          {"total", r.total},
                          {"accounted", r.accounted}}
        .dump();
  });

  m.def("write_code_file", [](const Code& c) { return write_code_file(code_file_of(c)); });
  m.def("load_code_file", [](const std::string& text) { return load_code(parse_code_file(text)); });

  m.def(
      "cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
