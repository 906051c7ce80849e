#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bergcomm/acceptance.hpp"
#include "bergcomm/cli.hpp"
#include "bergcomm/commutant.hpp"
#include "bergcomm/error.hpp"
#include "bergcomm/io.hpp"
#include "bergcomm/psets.hpp"
#include "bergcomm/symbols.hpp"
#include "bergcomm/toeplitz.hpp"

namespace py = pybind11;
using namespace bergcomm;

namespace {

// Symbols and sets cross the boundary as JSON text; the Python wrapper
// serializes dicts.
SymbolSpec symbol(const std::string& text) { return parse_symbol(std::string_view(text)); }

const MonomialCombo& combo(const SymbolSpec& s) {
  if (!std::holds_alternative<MonomialCombo>(s)) throw DomainError("expected a monomial_combo symbol");
  return std::get<MonomialCombo>(s);
}

const SeparatelyRadialSymbol& separately_radial(const SymbolSpec& s) {
  if (!std::holds_alternative<SeparatelyRadialSymbol>(s)) throw DomainError("expected a separately_radial symbol");
  return std::get<SeparatelyRadialSymbol>(s);
}

PrefixOperator operator_of(const SpaceParams& p, const SymbolSpec& s, int D) {
  if (const auto* f = std::get_if<MonomialCombo>(&s)) return assemble(p, *f, D);
  return assemble_diagonal(p, std::get<SeparatelyRadialSymbol>(s), D);
}

std::vector<std::vector<int>> basis(int n, int D) {
  std::vector<std::vector<int>> out;
  for (const auto& m : enumerate(n, D)) out.emplace_back(m.components().begin(), m.components().end());
  return out;
}

py::dict location(const std::optional<EntryLocation>& at) {
  py::dict d;
  if (!at) return d;
  d["column"] = std::vector<int>(at->m.components().begin(), at->m.components().end());
  d["row"] = std::vector<int>(at->k.components().begin(), at->k.components().end());
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Toeplitz operators on weighted Bergman spaces of the unit ball";

  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  m.def("log_gamma", &log_gamma, py::arg("x"));
  m.def(
      "norm_constant",
      [](int n, double alpha, std::vector<int> mm) { return norm_constant(SpaceParams(n, alpha), MultiIndex(mm)); },
      py::arg("n"), py::arg("alpha"), py::arg("m"));
  m.def(
      "d_coeff",
      [](int n, double alpha, std::vector<int> mm, std::vector<int> k) {
        return d_coeff(SpaceParams(n, alpha), MultiIndex(mm), MultiIndex(k));
      },
      py::arg("n"), py::arg("alpha"), py::arg("m"), py::arg("k"));
  m.def("basis", &basis, py::arg("n"), py::arg("degree"), "Multi-indices of the degree-D prefix in graded order.");

  m.def(
      "omega",
      [](double alpha, const std::string& g, std::vector<int> mm) {
        const auto spec = symbol(g);
        const auto& s = separately_radial(spec);
        return omega(SpaceParams(s.dim(), alpha), s, MultiIndex(mm));
      },
      py::arg("alpha"), py::arg("g"), py::arg("m"));

  m.def(
      "matrix",
      [](double alpha, const std::string& f, int D) {
        const auto s = symbol(f);
        const int n = std::visit([](const auto& v) { return v.dim(); }, s);
        return Matrix(operator_of(SpaceParams(n, alpha), s, D).matrix());
      },
      py::arg("alpha"), py::arg("f"), py::arg("degree"),
      "Dense matrix of T_f on the degree-D prefix; entry (row k, column m) is <T_f e_m, e_k>.");

  m.def(
      "commutator_max",
      [](double alpha, const std::string& f, const std::string& g, int D) {
        const auto a = symbol(f), b = symbol(g);
        const int n = std::visit([](const auto& v) { return v.dim(); }, a);
        const SpaceParams p(n, alpha);
        return commutator(operator_of(p, a, D), operator_of(p, b, D)).matrix().cwiseAbs().maxCoeff();
      },
      py::arg("alpha"), py::arg("f"), py::arg("g"), py::arg("degree"),
      "max |[T_f, T_g]| over the joint valid block.");

  m.def(
      "analytic_test",
      [](double alpha, const std::string& f, int D, double tol) {
        const auto s = symbol(f);
        const int n = std::visit([](const auto& v) { return v.dim(); }, s);
        const auto rep = analytic_test(operator_of(SpaceParams(n, alpha), s, D), tol);
        py::dict d;
        d["pass"] = rep.pass;
        d["lower_triangle_max"] = rep.lower_triangle_max;
        d["lower_witness"] = location(rep.lower_witness);
        d["diagonal_spread"] = rep.diagonal_spread;
        d["spread_witness"] = location(rep.spread_witness);
        return d;
      },
      py::arg("alpha"), py::arg("f"), py::arg("degree"), py::arg("tol") = 1e-10);

  m.def(
      "extract_symbol",
      [](double alpha, const std::string& f, int D, double tol) {
        const auto s = symbol(f);
        const int n = std::visit([](const auto& v) { return v.dim(); }, s);
        return dump_json(symbol_to_json(extract_symbol(operator_of(SpaceParams(n, alpha), s, D), tol)), -1);
      },
      py::arg("alpha"), py::arg("f"), py::arg("degree"), py::arg("tol") = 1e-10,
      "Analytic symbol of T_f as JSON text; raises DomainError when T_f is not analytic Toeplitz.");

  m.def(
      "theorem2",
      [](double alpha, const std::string& f, const std::string& g, int D, double tol) {
        const auto fs = symbol(f), gs = symbol(g);
        const auto& ff = combo(fs);
        const auto eq = theorem2_equivalence(SpaceParams(ff.dim(), alpha), ff, separately_radial(gs), D, tol);
        py::dict d;
        d["residual"] = eq.report.residual;
        d["residual_pass"] = eq.residual_pass;
        d["predicate"] = eq.predicate_pass;
        d["agree"] = eq.agree();
        return d;
      },
      py::arg("alpha"), py::arg("f"), py::arg("g"), py::arg("degree"), py::arg("tol") = 1e-12,
      "Residual of T_f commuting with the diagonal T_g, next to the symbolic predicate.");

  m.def(
      "property_p",
      [](const std::string& e) {
        const auto set = parse_set_expr(std::string_view(e));
        const auto v = property_p(set);
        py::list trace;
        for (const auto& s : v.trace) {
          py::dict step;
          step["path"] = s.path;
          step["rule"] = s.rule;
          step["status"] = status_name(s.status);
          step["premises"] = s.premises;
          trace.append(step);
        }
        py::dict d;
        d["status"] = status_name(v.status);
        d["trace"] = trace;
        d["replay"] = replay_trace(set, v.trace);
        return d;
      },
      py::arg("set"));

  m.def(
      "zero_set",
      [](double alpha, const std::string& f, std::vector<int> l, int D, bool weighted) {
        const auto fs = symbol(f);
        const auto& ff = combo(fs);
        std::vector<std::vector<int>> out;
        for (const auto& mm : zero_set_prefix(SpaceParams(ff.dim(), alpha), ff, ShiftIndex(l), D, weighted)) {
          out.emplace_back(mm.components().begin(), mm.components().end());
        }
        return out;
      },
      py::arg("alpha"), py::arg("f"), py::arg("l"), py::arg("degree"), py::arg("weighted") = false);

  m.def(
      "acceptance",
      [](std::uint64_t seed) {
        py::list out;
        for (const auto& r : run_acceptance(seed)) {
          py::dict d;
          d["id"] = r.id;
          d["title"] = r.title;
          d["pass"] = r.pass;
          d["detail"] = r.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("seed"));

  m.def(
      "run",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "bergcomm");
        std::vector<const char*> argv;
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs one CLI command; returns (exit code, stdout text, stderr text).");
}
