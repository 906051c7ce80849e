#include "bergcomm/cli.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <CLI11.hpp>

#include "bergcomm/acceptance.hpp"
#include "bergcomm/commutant.hpp"
#include "bergcomm/error.hpp"
#include "bergcomm/io.hpp"
#include "bergcomm/psets.hpp"
#include "bergcomm/quadrature.hpp"
#include "bergcomm/symbols.hpp"
#include "bergcomm/toeplitz.hpp"

namespace bergcomm {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Output {
  std::string text;
  int code = kExitOk;
};

Output json_output(const Json& j, int code = kExitOk) { return {dump_json(j) + "\n", code}; }

int resolve_n(const RunConfig& c, std::optional<int> from_input, const char* source) {
  if (c.n && from_input && *c.n != *from_input) {
    throw UsageError("--n " + std::to_string(*c.n) + " disagrees with " + source + " (n = " +
                     std::to_string(*from_input) + ")");
  }
  if (c.n) return *c.n;
  if (from_input) return *from_input;
  throw UsageError("--n is required");
}

int require_degree(const RunConfig& c) {
  if (!c.degree) throw UsageError("--degree is required for " + c.command);
  if (*c.degree < 0) throw UsageError("--degree must be >= 0");
  return *c.degree;
}

SymbolSpec load_symbol(const std::string& arg, const char* flag) {
  if (arg.empty()) throw UsageError(std::string(flag) + " is required");
  const std::string text = read_text_argument(arg);
  return parse_symbol(std::string_view(text));
}

int symbol_dim(const SymbolSpec& s) {
  return std::visit([](const auto& v) { return v.dim(); }, s);
}

const MonomialCombo& require_combo(const SymbolSpec& s, const char* flag) {
  if (!std::holds_alternative<MonomialCombo>(s)) {
    throw UsageError(std::string(flag) + " must be a monomial_combo symbol");
  }
  return std::get<MonomialCombo>(s);
}

const SeparatelyRadialSymbol& require_radial(const SymbolSpec& s, const char* flag) {
  if (!std::holds_alternative<SeparatelyRadialSymbol>(s)) {
    throw UsageError(std::string(flag) + " must be a separately_radial symbol");
  }
  return std::get<SeparatelyRadialSymbol>(s);
}

PrefixOperator operator_of(const SpaceParams& p, const SymbolSpec& s, int D) {
  if (const auto* f = std::get_if<MonomialCombo>(&s)) return assemble(p, *f, D);
  return assemble_diagonal(p, std::get<SeparatelyRadialSymbol>(s), D);
}

MultiIndex index_arg(const std::vector<int>& v, int n, const char* flag) {
  if (v.empty()) throw UsageError(std::string(flag) + " is required");
  if (static_cast<int>(v.size()) != n) {
    throw UsageError(std::string(flag) + " needs " + std::to_string(n) + " components");
  }
  for (int x : v) {
    if (x < 0) throw UsageError(std::string(flag) + " components must be >= 0");
  }
  return MultiIndex(v);
}

Json header(const RunConfig& c, const SpaceParams& p) {
  Json j;
  j["command"] = c.command;
  j["n"] = p.n();
  j["alpha"] = p.alpha();
  return j;
}

Json location_json(const EntryLocation& at) {
  return Json{{"column", index_to_json(at.m.components())}, {"row", index_to_json(at.k.components())}};
}

Json max_valid_entry(const PrefixOperator& K) {
  double worst = 0.0;
  std::optional<std::pair<std::size_t, Eigen::Index>> where;
  for (std::size_t col : K.valid_columns()) {
    for (Eigen::Index row = 0; row < K.matrix().rows(); ++row) {
      const double v = std::abs(K.matrix()(row, static_cast<Eigen::Index>(col)));
      if (v > worst) {
        worst = v;
        where = {{col, row}};
      }
    }
  }
  Json j;
  j["max_abs"] = worst;
  if (where) {
    const auto& idx = K.indexer();
    j["witness"] = Json{{"column", index_to_json(idx.at(where->first).components())},
                        {"row", index_to_json(idx.at(static_cast<std::size_t>(where->second)).components())},
                        {"value", complex_to_json(K.matrix()(where->second, static_cast<Eigen::Index>(where->first)))}};
  }
  return j;
}

// ------------------------------------------------------------------ commands

Output cmd_dcoeff(const RunConfig& c) {
  const int n = resolve_n(c, c.m.empty() ? std::nullopt : std::optional<int>(static_cast<int>(c.m.size())), "--m");
  const SpaceParams p(n, c.alpha);
  const MultiIndex m = index_arg(c.m, n, "--m");
  const MultiIndex k = index_arg(c.k, n, "--k");
  Json j = header(c, p);
  j["m"] = index_to_json(m.components());
  j["k"] = index_to_json(k.components());
  const double d = d_coeff(p, m, k);
  j["d"] = d;
  j["d_squared"] = d * d;
  return json_output(j);
}

Output cmd_omega(const RunConfig& c) {
  const auto spec = load_symbol(c.symbol.empty() ? c.g : c.symbol, "--symbol");
  const auto& g = require_radial(spec, "--symbol");
  const SpaceParams p(resolve_n(c, g.dim(), "the symbol"), c.alpha);
  Json j = header(c, p);
  j["symbol"] = symbol_to_json(g);
  if (!c.m.empty()) {
    const MultiIndex m = index_arg(c.m, p.n(), "--m");
    const complex w = omega(p, g, m);
    j["m"] = index_to_json(m.components());
    j["omega"] = complex_to_json(w);
    if (c.samples > 0) {
      if (!c.seed) throw UsageError("--seed is required with --samples");
      const double norm2 = std::pow(norm_constant(p, m), 2);
      const auto integrand = [&](std::span<const complex> z) {
        double mono = norm2;
        for (int i = 0; i < p.n(); ++i) mono *= std::pow(std::norm(z[static_cast<std::size_t>(i)]), m[i]);
        return g(z) * mono;
      };
      const McEstimate mc = mc_ball_integral(p, integrand, c.samples, *c.seed, c.workers);
      j["monte_carlo"] = Json{{"value", complex_to_json(mc.value)},
                              {"std_error", mc.std_error},
                              {"samples", mc.samples},
                              {"seed", *c.seed},
                              {"deviation_in_std_errors", std::abs(mc.value - w) / mc.std_error}};
    }
    return json_output(j);
  }
  if (c.samples > 0) throw UsageError("--samples needs --m");
  const int D = require_degree(c);
  const OmegaTable table = omega_table(p, g, D);
  j["degree"] = D;
  Json entries = Json::array();
  for (std::size_t i = 0; i < table.values().size(); ++i) {
    entries.push_back(Json{{"m", index_to_json(table.indexer().at(i).components())},
                           {"re", table.values()[i].real()},
                           {"im", table.values()[i].imag()}});
  }
  j["entries"] = entries;
  return json_output(j);
}

Output cmd_matrix(const RunConfig& c) {
  const auto spec = load_symbol(c.symbol.empty() ? c.f : c.symbol, "--symbol");
  const SpaceParams p(resolve_n(c, symbol_dim(spec), "the symbol"), c.alpha);
  const auto A = operator_of(p, spec, require_degree(c));
  if (c.format == "csv") return {matrix_to_csv(A.matrix()), kExitOk};
  Json j = header(c, p);
  j["symbol"] = std::visit([](const auto& s) { return symbol_to_json(s); }, spec);
  j["matrix"] = matrix_to_json(A);
  return json_output(j);
}

Output cmd_commutator(const RunConfig& c) {
  const auto fa = load_symbol(c.f, "--f");
  const auto gb = load_symbol(c.g, "--g");
  if (symbol_dim(fa) != symbol_dim(gb)) throw UsageError("--f and --g have different dimensions");
  const SpaceParams p(resolve_n(c, symbol_dim(fa), "the symbols"), c.alpha);
  const int D = require_degree(c);
  const auto K = commutator(operator_of(p, fa, D), operator_of(p, gb, D));
  if (c.format == "csv") return {matrix_to_csv(K.matrix()), kExitOk};
  Json j = header(c, p);
  j["degree"] = D;
  j["raise"] = K.raise();
  j["valid_columns"] = K.valid_columns().size();
  j["commutator"] = max_valid_entry(K);
  return json_output(j);
}

Json analytic_report_json(const AnalyticTestReport& rep) {
  Json j;
  j["tol"] = rep.tol;
  j["pass"] = rep.pass;
  j["lower_triangle_max"] = rep.lower_triangle_max;
  j["lower_witness"] = rep.lower_witness ? location_json(*rep.lower_witness) : Json(nullptr);
  j["diagonal_spread"] = rep.diagonal_spread;
  j["spread_witness"] = rep.spread_witness ? location_json(*rep.spread_witness) : Json(nullptr);
  return j;
}

// From --matrix when given, else the Toeplitz operator of --symbol.
PrefixOperator operator_argument(const RunConfig& c) {
  if (!c.matrix.empty()) {
    const Json j = Json::parse(read_text_argument(c.matrix));
    auto S = matrix_from_json(j.contains("matrix") ? j["matrix"] : j);
    resolve_n(c, S.params().n(), "the matrix");
    if (c.degree && *c.degree != S.degree()) throw UsageError("--degree disagrees with the matrix");
    return S;
  }
  const auto spec = load_symbol(c.symbol.empty() ? c.f : c.symbol, "--symbol");
  const SpaceParams p(resolve_n(c, symbol_dim(spec), "the symbol"), c.alpha);
  return operator_of(p, spec, require_degree(c));
}

Output cmd_analytic_test(const RunConfig& c) {
  const auto S = operator_argument(c);
  const SpaceParams& p = S.params();
  Json j = header(c, p);
  j["degree"] = S.degree();
  j["report"] = analytic_report_json(analytic_test(S, c.tol.value_or(1e-10)));
  return json_output(j);
}

Output cmd_extract_symbol(const RunConfig& c) {
  const auto S = operator_argument(c);
  const SpaceParams& p = S.params();
  const double tol = c.tol.value_or(1e-10);
  const auto rep = analytic_test(S, tol);
  Json j = header(c, p);
  j["degree"] = S.degree();
  if (!rep.pass) {
    // Not an analytic Toeplitz operator: report why instead of a symbol.
    j["symbol"] = nullptr;
    j["report"] = analytic_report_json(rep);
    return json_output(j, kExitVerificationFailed);
  }
  const auto f = extract_symbol(S, tol);
  j["symbol"] = symbol_to_json(f);
  j["roundtrip_residual"] = roundtrip_residual(S, f);
  return json_output(j);
}

Output cmd_prop4(const RunConfig& c) {
  const SpaceParams p(resolve_n(c, std::nullopt, ""), c.alpha);
  const int D = require_degree(c);
  if (D < 2) throw UsageError("prop4 needs --degree >= 2 for the witness entry");
  const auto S = prop4_operator(p, D);
  const int n = p.n();
  Json j = header(c, p);
  j["degree"] = D;
  Json commuting = Json::array();
  for (int i = 0; i + 1 < n; ++i) {
    const auto K = commutator(S, assemble(p, MonomialCombo::coordinate(n, i), D));
    commuting.push_back(Json{{"j", i + 1}, {"max_abs", max_valid_entry(K)["max_abs"]}});
  }
  j["commutes_with_z_j"] = commuting;

  const MultiIndex axis = MultiIndex::unit(n, n - 1);
  const MultiIndex zero = MultiIndex::zero(n);
  const MultiIndex row = axis + axis;
  const auto K = commutator(S, assemble(p, MonomialCombo::basis_element(p, axis), D));
  const auto K_literal = commutator(S, assemble(p, MonomialCombo::coordinate(n, n - 1), D));
  const complex w = K.entry(row, zero);
  j["witness"] = Json{{"operator", "[S, T_{e_n}]"},
                      {"column", index_to_json(zero.components())},
                      {"row", index_to_json(row.components())},
                      {"value", complex_to_json(w)},
                      {"abs", std::abs(w)},
                      {"abs_with_T_z_n", std::abs(K_literal.entry(row, zero))}};
  const auto l4 = lemma4_check(S, axis);
  j["shift_relation"] = Json{{"l", index_to_json(axis.components())},
                             {"residual", l4.residual},
                             {"witness", l4.witness ? location_json(*l4.witness) : Json(nullptr)}};
  Json decay = Json::array();
  for (int t = 0; t + 1 <= D; ++t) {
    MultiIndex m = MultiIndex::unit(n, 0).scaled(t);
    decay.push_back(d_coeff(p, m, axis));
  }
  j["entry_decay_along_axis_1"] = decay;
  return json_output(j);
}

Output cmd_prop2_classify(const RunConfig& c) {
  const auto spec = load_symbol(c.symbol.empty() ? c.g : c.symbol, "--symbol");
  const auto& g = require_radial(spec, "--symbol");
  const SpaceParams p(resolve_n(c, g.dim(), "the symbol"), c.alpha);
  if (static_cast<int>(c.l.size()) != p.n()) throw UsageError("--l needs " + std::to_string(p.n()) + " components");
  const ShiftIndex l(c.l);
  const auto v = prop2_classify(g, l);
  Json j = header(c, p);
  j["l"] = index_to_json(l.components());
  j["expect_equal"] = v.expect_equal;
  if (c.degree) {
    // |omega(m+l) - omega(m)| over |m| <= D with m + l >= 0
    double lo = INFINITY, hi = 0.0;
    for (const auto& m : enumerate(p.n(), require_degree(c))) {
      const auto ml = shift(m, l);
      if (!ml) continue;
      const double gap = std::abs(omega(p, g, *ml) - omega(p, g, m));
      lo = std::min(lo, gap);
      hi = std::max(hi, gap);
    }
    j["degree"] = *c.degree;
    j["omega_gap"] = std::isfinite(lo) ? Json{{"min", lo}, {"max", hi}} : Json(nullptr);
  }
  return json_output(j);
}

Output cmd_theorem2(const RunConfig& c) {
  const auto fs = load_symbol(c.f, "--f");
  const auto gs = load_symbol(c.g, "--g");
  const auto& f = require_combo(fs, "--f");
  const auto& g = require_radial(gs, "--g");
  if (f.dim() != g.dim()) throw UsageError("--f and --g have different dimensions");
  const SpaceParams p(resolve_n(c, f.dim(), "the symbols"), c.alpha);
  const double tol = c.tol.value_or(1e-12);
  const auto eq = theorem2_equivalence(p, f, g, require_degree(c), tol);
  Json j = header(c, p);
  j["degree"] = *c.degree;
  j["tol"] = tol;
  j["residual"] = eq.report.residual;
  j["residual_pass"] = eq.residual_pass;
  j["predicate"] = eq.predicate_pass;
  j["agree"] = eq.agree();
  if (eq.report.witness) {
    j["witness"] = Json{{"column", index_to_json(eq.report.witness->m.components())},
                        {"row", index_to_json(eq.report.witness->k.components())},
                        {"l", index_to_json(eq.report.witness_shift->components())},
                        {"entry", complex_to_json(eq.report.witness_entry)},
                        {"omega_gap", complex_to_json(eq.report.witness_omega_gap)}};
  } else {
    j["witness"] = nullptr;
  }
  return json_output(j, eq.agree() ? kExitOk : kExitVerificationFailed);
}

Output cmd_pset(const RunConfig& c) {
  if (c.set.empty()) throw UsageError("--set is required");
  const std::string text = read_text_argument(c.set);
  const auto e = parse_set_expr(std::string_view(text));
  const auto v = property_p(e);
  Json j;
  j["command"] = c.command;
  j["n"] = e->dim();
  j["expression"] = e->to_string();
  j["status"] = status_name(v.status);
  Json trace = Json::array();
  for (const auto& s : v.trace) {
    Json step;
    step["path"] = s.path;
    step["rule"] = s.rule;
    step["status"] = status_name(s.status);
    step["premises"] = s.premises;
    trace.push_back(step);
  }
  j["trace"] = trace;
  j["replay"] = replay_trace(e, v.trace);
  if (c.axis) {
    const double probe = divergence_probe(e, *c.axis, c.r, c.cutoff);
    j["probe"] = Json{{"axis", *c.axis}, {"slice", c.r}, {"cutoff", c.cutoff}, {"partial_sum", probe}};
  }
  return json_output(j);
}

Output cmd_zeroset(const RunConfig& c) {
  const auto fs = load_symbol(c.f.empty() ? c.symbol : c.f, "--f");
  const auto& f = require_combo(fs, "--f");
  const SpaceParams p(resolve_n(c, f.dim(), "the symbol"), c.alpha);
  if (static_cast<int>(c.l.size()) != p.n()) throw UsageError("--l needs " + std::to_string(p.n()) + " components");
  const ShiftIndex l(c.l);
  const int D = require_degree(c);
  const auto members = zero_set_prefix(p, f, l, D, c.weighted);
  std::size_t candidates = 0;
  for (const auto& m : enumerate(p.n(), D)) candidates += shift(m, l) ? 1 : 0;
  Json j = header(c, p);
  j["degree"] = D;
  j["l"] = index_to_json(l.components());
  j["measure"] = c.weighted ? "weighted" : "volume";
  Json list = Json::array();
  for (const auto& m : members) list.push_back(index_to_json(m.components()));
  j["members"] = list;
  j["count"] = members.size();
  j["candidates"] = candidates;
  return json_output(j);
}

Output cmd_verify_all(const RunConfig& c, std::ostream& err) {
  if (!c.seed) throw UsageError("--seed is required for verify-all");
  Json j;
  j["command"] = c.command;
  j["seed"] = *c.seed;
  Json list = Json::array();
  bool all = true;
  double seconds = 0.0;
  for (const auto& r : run_acceptance(*c.seed)) {
    list.push_back(Json{{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
    err << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << " (" << r.seconds << " s)\n";
    all = all && r.pass;
    seconds += r.seconds;
  }
  const bool in_budget = seconds < kSuiteBudgetSeconds;
  err << "suite runtime " << seconds << " s\n";
  j["criteria"] = list;
  j["all_pass"] = all && in_budget;
  return json_output(j, all && in_budget ? kExitOk : kExitVerificationFailed);
}

Json error_record(const char* kind, const std::string& message, int code) {
  return Json{{"error", kind}, {"message", message}, {"exit_code", code}};
}

}  // namespace

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  Output result;
  try {
    if (c.format != "json" && c.format != "csv") throw UsageError("--format must be json or csv");
    if (c.format == "csv" && c.command != "matrix" && c.command != "commutator") {
      throw UsageError("--format csv applies to matrix and commutator only");
    }
    if (c.command == "dcoeff") result = cmd_dcoeff(c);
    else if (c.command == "omega") result = cmd_omega(c);
    else if (c.command == "matrix") result = cmd_matrix(c);
    else if (c.command == "commutator") result = cmd_commutator(c);
    else if (c.command == "analytic-test") result = cmd_analytic_test(c);
    else if (c.command == "extract-symbol") result = cmd_extract_symbol(c);
    else if (c.command == "prop4") result = cmd_prop4(c);
    else if (c.command == "prop2-classify") result = cmd_prop2_classify(c);
    else if (c.command == "theorem2") result = cmd_theorem2(c);
    else if (c.command == "pset") result = cmd_pset(c);
    else if (c.command == "zeroset") result = cmd_zeroset(c);
    else if (c.command == "verify-all") result = cmd_verify_all(c, err);
    else throw UsageError("unknown command \"" + c.command + "\"");
  } catch (const UsageError& e) {
    err << dump_json(error_record("usage", e.what(), kExitUsage), -1) << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << dump_json(error_record("parse", e.what(), kExitUsage), -1) << "\n";
    return kExitUsage;
  } catch (const DimensionMismatch& e) {
    err << dump_json(error_record("dimension_mismatch", e.what(), kExitUsage), -1) << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << dump_json(error_record("domain", e.what(), kExitUsage), -1) << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << dump_json(error_record("parse", e.what(), kExitUsage), -1) << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << dump_json(error_record("internal", e.what(), kExitUsage), -1) << "\n";
    return kExitUsage;
  }

  if (c.out.empty()) {
    out << result.text;
  } else {
    try {
      write_file_atomic(c.out, result.text);
    } catch (const std::exception& e) {
      err << dump_json(error_record("io", e.what(), kExitUsage), -1) << "\n";
      return kExitUsage;
    }
  }
  return result.code;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Toeplitz operators on weighted Bergman spaces of the unit ball", "bergcomm"};
  RunConfig c;
  std::vector<std::string> names = command_names();
  app.add_option("command", c.command, "What to compute")->required()->check(CLI::IsMember(names));
  app.add_option("--n", c.n, "Complex dimension n >= 1");
  app.add_option("--alpha", c.alpha, "Weight exponent alpha > -1")->capture_default_str();
  app.add_option("--degree", c.degree, "Degree cap D of the polynomial prefix");
  app.add_option("--f", c.f, "Symbol f (path or inline JSON)");
  app.add_option("--g", c.g, "Symbol g (path or inline JSON)");
  app.add_option("--symbol", c.symbol, "Symbol (path or inline JSON)");
  app.add_option("--set", c.set, "Set expression (path or inline JSON)");
  app.add_option("--matrix", c.matrix, "Operator matrix JSON for analytic-test and extract-symbol");
  app.add_option("--out", c.out, "Write the report here instead of stdout");
  app.add_option("--format", c.format, "json or csv")->capture_default_str();
  app.add_option("--seed", c.seed, "Seed for randomized corpora and Monte-Carlo");
  app.add_option("--samples", c.samples, "Monte-Carlo sample count");
  app.add_option("--tol", c.tol, "Tolerance");
  app.add_option("--m", c.m, "Multi-index m, comma separated")->delimiter(',');
  app.add_option("--k", c.k, "Multi-index k, comma separated")->delimiter(',');
  app.add_option("--l", c.l, "Shift l, comma separated")->delimiter(',')->allow_extra_args(false);
  app.add_option("--axis", c.axis, "1-based axis for the divergence probe");
  app.add_option("--r", c.r, "Slice r of dimension n-1 for the divergence probe")->delimiter(',');
  app.add_option("--cutoff", c.cutoff, "Cutoff S for the divergence probe")->capture_default_str();
  app.add_flag("--weighted", c.weighted, "Use the (1-|z|^2)^alpha weighted measure in zeroset");
  app.add_option("--workers", c.workers, "Threads for Monte-Carlo")->capture_default_str();
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << dump_json(error_record("usage", e.what(), kExitUsage), -1) << "\n";
    return kExitUsage;
  }
  return run(c, out, err);
}

}  // namespace bergcomm
