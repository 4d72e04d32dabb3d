#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "workbench/cli.hpp"
#include "workbench/congruence.hpp"
#include "workbench/error.hpp"
#include "workbench/fimod.hpp"
#include "workbench/johnson.hpp"
#include "workbench/magnus.hpp"
#include "workbench/suites.hpp"
#include "workbench/words.hpp"

namespace py = pybind11;
namespace wb = workbench;

namespace {

int rank_of(const std::vector<std::string>& words, int n) {
  if (n > 0) return n;
  int best = 1;
  for (const auto& w : words)
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] == 'x') best = std::max(best, std::atoi(w.c_str() + i + 1));
  return best;
}

wb::FreeWord word(const std::string& text, int n) { return wb::FreeWord::parse(text, n); }

py::dict sweep(const wb::SweepValue& v) {
  py::dict d;
  d["value"] = v.value;
  d["at_least"] = v.at_least;
  d["text"] = v.to_string();
  return d;
}

}  // namespace

PYBIND11_MODULE(_workbench, m) {
  m.doc() = "Exact free-group, free Lie algebra and FI-module computations";
  m.attr("__version__") = wb::kArtifactVersion;

  py::register_exception<wb::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<wb::DomainError>(m, "DomainError", PyExc_ValueError);

  m.def(
      "reduce", [](const std::string& w, int n) { return word(w, rank_of({w}, n)).to_string(); }, py::arg("word"),
      py::arg("n") = 0);
  m.def(
      "multiply",
      [](const std::string& a, const std::string& b, int n) {
        const int r = rank_of({a, b}, n);
        return wb::multiply(word(a, r), word(b, r)).to_string();
      },
      py::arg("a"), py::arg("b"), py::arg("n") = 0);
  m.def(
      "invert", [](const std::string& w, int n) { return wb::invert(word(w, rank_of({w}, n))).to_string(); },
      py::arg("word"), py::arg("n") = 0);
  m.def(
      "commutator",
      [](const std::string& a, const std::string& b, int n) {
        const int r = rank_of({a, b}, n);
        return wb::commutator(word(a, r), word(b, r)).to_string();
      },
      py::arg("a"), py::arg("b"), py::arg("n") = 0);

  m.def(
      "expand",
      [](const std::string& w, int cap, long p, int n) {
        return wb::expand(word(w, rank_of({w}, n)), cap, p).to_string();
      },
      "Truncated Magnus expansion, one `coefficient * monomial` per line", py::arg("word"), py::arg("cap") = 4,
      py::arg("p") = 0, py::arg("n") = 0);
  m.def(
      "lcs_weight", [](const std::string& w, int cap, int n) { return wb::lcs_weight(word(w, rank_of({w}, n)), cap).to_string(); },
      py::arg("word"), py::arg("cap") = 8, py::arg("n") = 0);

  m.def(
      "certify",
      [](int n, int k) {
        const wb::Certificate c = wb::certificate_lower_bound(n, k);
        py::dict d;
        d["pass"] = c.pass;
        d["contraction"] = c.contraction;
        d["lambda"] = c.lambda;
        d["w_lambda"] = c.w_lambda;
        return d;
      },
      py::arg("n"), py::arg("k"));

  m.def("lie_rank", [](int g, long p) { return wb::lie_rank_certificate(g, p).rank; }, py::arg("g"), py::arg("p"));

  m.def(
      "fimod_sweep",
      [](const std::string& builtin, int N) {
        const wb::FIModulePresentation mod = wb::builtin(wb::BuiltinSpec::parse(builtin), N);
        py::dict d;
        d["valid"] = wb::validate(mod).valid;
        d["generation_degree"] = sweep(wb::generation_degree(mod));
        d["stability_start"] = sweep(wb::stability_start(mod).start);
        return d;
      },
      py::arg("builtin"), py::arg("N"));

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = wb::run(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      "Run the command line front end; returns (exit code, stdout, stderr)", py::arg("args"));
}
