#include "bergcomm/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>
#include <unistd.h>

#include "bergcomm/error.hpp"

namespace bergcomm {

namespace {

// Input is read with the plain (key-sorted) json type; only output order matters.
using In = nlohmann::json;

std::string child(const std::string& ptr, const std::string& key) { return ptr + "/" + key; }
std::string child(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

In parse_text(std::string_view text) {
  try {
    return In::parse(text.begin(), text.end());
  } catch (const In::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), "byte " + std::to_string(e.byte));
  }
}

const In& require(const In& j, const std::string& key, const std::string& ptr) {
  if (!j.is_object()) throw ParseError("expected an object", ptr);
  auto it = j.find(key);
  if (it == j.end()) throw ParseError("missing key \"" + key + "\"", ptr);
  return *it;
}

double as_double(const In& j, const std::string& ptr) {
  if (!j.is_number()) throw ParseError("expected a number", ptr);
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError("expected a finite number", ptr);
  return v;
}

double optional_double(const In& j, const std::string& key, double fallback, const std::string& ptr) {
  auto it = j.find(key);
  return it == j.end() ? fallback : as_double(*it, child(ptr, key));
}

int as_int(const In& j, const std::string& ptr) {
  if (!j.is_number_integer()) throw ParseError("expected an integer", ptr);
  return j.get<int>();
}

std::vector<int> as_int_list(const In& j, const std::string& ptr) {
  if (!j.is_array()) throw ParseError("expected an array of integers", ptr);
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], child(ptr, i)));
  return out;
}

std::vector<double> as_double_list(const In& j, const std::string& ptr) {
  if (!j.is_array()) throw ParseError("expected an array of numbers", ptr);
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_double(j[i], child(ptr, i)));
  return out;
}

// Real list plus an optional imaginary list of the same length.
std::vector<complex> complex_list(const In& j, const std::string& re_key, const std::string& im_key,
                                  const std::string& ptr) {
  const auto re = as_double_list(require(j, re_key, ptr), child(ptr, re_key));
  std::vector<double> im(re.size(), 0.0);
  if (auto it = j.find(im_key); it != j.end()) {
    im = as_double_list(*it, child(ptr, im_key));
    if (im.size() != re.size()) {
      throw ParseError("\"" + im_key + "\" must have the length of \"" + re_key + "\"", child(ptr, im_key));
    }
  }
  std::vector<complex> out;
  for (std::size_t i = 0; i < re.size(); ++i) out.emplace_back(re[i], im[i]);
  return out;
}

MultiIndex index_of_dim(const In& j, int n, const std::string& ptr) {
  const auto v = as_int_list(j, ptr);
  if (static_cast<int>(v.size()) != n) {
    throw DimensionMismatch("index of length " + std::to_string(v.size()) + " in dimension " +
                            std::to_string(n) + " (at " + ptr + ")");
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) throw ParseError("index components must be >= 0", child(ptr, i));
  }
  return MultiIndex(v);
}

RadialProfile parse_profile(const In& j, const std::string& ptr) {
  const In& kind_j = require(j, "kind", ptr);
  if (!kind_j.is_string()) throw ParseError("\"kind\" must be a string", child(ptr, "kind"));
  const auto kind = kind_j.get<std::string>();
  RadialProfile h = RadialProfile::constant(0.0);
  try {
    if (kind == "constant") {
      h = RadialProfile::constant({as_double(require(j, "value", ptr), child(ptr, "value")),
                                   optional_double(j, "im", 0.0, ptr)});
    } else if (kind == "power") {
      h = RadialProfile::power(as_double(require(j, "t", ptr), child(ptr, "t")),
                               {optional_double(j, "scale", 1.0, ptr), optional_double(j, "scale_im", 0.0, ptr)});
    } else if (kind == "even_poly") {
      h = RadialProfile::even_poly(complex_list(j, "coeffs", "coeffs_im", ptr));
    } else if (kind == "table") {
      h = RadialProfile::table(as_double_list(require(j, "r", ptr), child(ptr, "r")),
                               complex_list(j, "values", "values_im", ptr));
    } else {
      throw ParseError("unknown profile kind \"" + kind + "\"", child(ptr, "kind"));
    }
    const double extra = optional_double(j, "r_power", 0.0, ptr);
    if (extra != 0.0) h = h.times_power(extra);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), ptr);
  }
  return h;
}

Json profile_to_json(const RadialProfile& h) {
  Json j;
  double extra = h.power();
  switch (h.kind()) {
    case RadialProfile::Kind::Constant:
      j["kind"] = "constant";
      j["value"] = h.coeffs()[0].real();
      j["im"] = h.coeffs()[0].imag();
      break;
    case RadialProfile::Kind::Power:
      j["kind"] = "power";
      j["t"] = h.power();
      j["scale"] = h.coeffs()[0].real();
      j["scale_im"] = h.coeffs()[0].imag();
      extra = 0.0;
      break;
    case RadialProfile::Kind::EvenPoly: {
      j["kind"] = "even_poly";
      Json re = Json::array(), im = Json::array();
      for (auto c : h.coeffs()) {
        re.push_back(c.real());
        im.push_back(c.imag());
      }
      j["coeffs"] = re;
      j["coeffs_im"] = im;
      break;
    }
    case RadialProfile::Kind::Table: {
      j["kind"] = "table";
      j["r"] = h.table_r();
      Json re = Json::array(), im = Json::array();
      for (auto c : h.table_values()) {
        re.push_back(c.real());
        im.push_back(c.imag());
      }
      j["values"] = re;
      j["values_im"] = im;
      break;
    }
  }
  if (extra != 0.0) j["r_power"] = extra;
  return j;
}

int parse_dim(const In& j, const std::string& ptr) {
  const int n = as_int(require(j, "n", ptr), child(ptr, "n"));
  if (n < 1) throw ParseError("\"n\" must be >= 1", child(ptr, "n"));
  return n;
}

SetPtr parse_set_node(const In& j, const std::string& ptr) {
  const In& tag_j = require(j, "tag", ptr);
  if (!tag_j.is_string()) throw ParseError("\"tag\" must be a string", child(ptr, "tag"));
  const auto tag = tag_j.get<std::string>();
  auto kids = [&](std::size_t expected) {
    const In& c = require(j, "children", ptr);
    if (!c.is_array() || c.size() != expected) {
      throw ParseError("\"" + tag + "\" needs exactly " + std::to_string(expected) + " children",
                       child(ptr, "children"));
    }
    std::vector<SetPtr> out;
    for (std::size_t i = 0; i < expected; ++i) out.push_back(parse_set_node(c[i], child(child(ptr, "children"), i)));
    return out;
  };
  try {
    if (tag == "finite") {
      const int n = parse_dim(j, ptr);
      const In& pts = require(j, "points", ptr);
      if (!pts.is_array()) throw ParseError("\"points\" must be an array", child(ptr, "points"));
      std::vector<Point> points;
      for (std::size_t i = 0; i < pts.size(); ++i) points.push_back(as_int_list(pts[i], child(child(ptr, "points"), i)));
      return SetExpr::finite(n, std::move(points));
    }
    if (tag == "full") return SetExpr::full(parse_dim(j, ptr));
    if (tag == "union") {
      auto c = kids(2);
      return SetExpr::set_union(c[0], c[1]);
    }
    if (tag == "translate") {
      auto c = kids(1);
      return SetExpr::translate(c[0], as_int_list(require(j, "l", ptr), child(ptr, "l")));
    }
    if (tag == "product_with_full") {
      auto c = kids(1);
      return SetExpr::product_with_full(c[0], as_int(require(j, "axis", ptr), child(ptr, "axis")));
    }
    if (tag == "complement") return SetExpr::complement(kids(1)[0]);
  } catch (const DimensionMismatch& e) {
    const std::string what = e.what();
    if (what.find("(at ") != std::string::npos) throw;
    throw DimensionMismatch(what + " (at " + (ptr.empty() ? "/" : ptr) + ")");
  } catch (const DomainError& e) {
    throw ParseError(e.what(), ptr.empty() ? "/" : ptr);
  }
  throw ParseError("unknown set tag \"" + tag + "\"", child(ptr, "tag"));
}

void dump_rec(const Json& j, int indent, int depth, std::string& out) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += Json(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        dump_rec(it.value(), indent, depth + 1, out);
      }
      newline(depth);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      const bool flat = std::all_of(j.begin(), j.end(), [](const Json& v) { return v.is_primitive(); });
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += flat && indent >= 0 ? ", " : ",";
        first = false;
        if (!flat) newline(depth + 1);
        dump_rec(v, indent, depth + 1, out);
      }
      if (!flat) newline(depth);
      out += ']';
      return;
    }
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

// ----------------------------------------------------------------- symbols

namespace {

SymbolSpec parse_symbol_node(const In& j) {
  const std::string root;
  const In& type_j = require(j, "type", root);
  if (!type_j.is_string()) throw ParseError("\"type\" must be a string", "/type");
  const auto type = type_j.get<std::string>();
  const int n = parse_dim(j, root);

  if (type == "monomial_combo") {
    const In& terms = require(j, "terms", root);
    if (!terms.is_array()) throw ParseError("\"terms\" must be an array", "/terms");
    std::vector<Term> out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const std::string ptr = child("/terms", i);
      const In& t = terms[i];
      out.push_back(Term{index_of_dim(require(t, "a", ptr), n, child(ptr, "a")),
                         index_of_dim(require(t, "b", ptr), n, child(ptr, "b")),
                         complex(as_double(require(t, "re", ptr), child(ptr, "re")),
                                 optional_double(t, "im", 0.0, ptr))});
    }
    return MonomialCombo(n, std::move(out));
  }
  if (type == "separately_radial") {
    const auto s = as_double_list(require(j, "s", root), "/s");
    if (static_cast<int>(s.size()) != n) {
      throw DimensionMismatch("\"s\" has length " + std::to_string(s.size()) + " in dimension " +
                              std::to_string(n) + " (at /s)");
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 0.0) throw ParseError("exponents s_j must be >= 0", child("/s", i));
    }
    return SeparatelyRadialSymbol(s, parse_profile(require(j, "h", root), "/h"));
  }
  throw ParseError("unknown symbol type \"" + type + "\"", "/type");
}

}  // namespace

SymbolSpec parse_symbol(std::string_view text) { return parse_symbol_node(parse_text(text)); }

SymbolSpec parse_symbol(const Json& j) { return parse_symbol_node(In::parse(j.dump())); }

Json symbol_to_json(const MonomialCombo& f) {
  Json j;
  j["type"] = "monomial_combo";
  j["n"] = f.dim();
  Json terms = Json::array();
  for (const auto& t : f.terms()) {
    terms.push_back({{"a", index_to_json(t.a.components())},
                     {"b", index_to_json(t.b.components())},
                     {"re", t.c.real()},
                     {"im", t.c.imag()}});
  }
  j["terms"] = terms;
  return j;
}

Json symbol_to_json(const SeparatelyRadialSymbol& g) {
  Json j;
  j["type"] = "separately_radial";
  j["n"] = g.dim();
  j["s"] = std::vector<double>(g.s().begin(), g.s().end());
  j["h"] = profile_to_json(g.h());
  return j;
}

// --------------------------------------------------------------------- sets

SetPtr parse_set_expr(std::string_view text) { return parse_set_node(parse_text(text), ""); }

SetPtr parse_set_expr(const Json& j) { return parse_set_node(In::parse(j.dump()), ""); }

Json set_expr_to_json(const SetPtr& e) {
  Json j;
  j["tag"] = kind_name(e->kind());
  switch (e->kind()) {
    case SetExpr::Kind::Finite: {
      j["n"] = e->dim();
      Json pts = Json::array();
      for (const auto& x : e->points()) pts.push_back(x);
      j["points"] = pts;
      return j;
    }
    case SetExpr::Kind::Full:
      j["n"] = e->dim();
      return j;
    case SetExpr::Kind::Translate: j["l"] = e->offset(); break;
    case SetExpr::Kind::ProductWithFull: j["axis"] = e->axis(); break;
    default: break;
  }
  Json kids = Json::array();
  for (const auto& c : e->children()) kids.push_back(set_expr_to_json(c));
  j["children"] = kids;
  return j;
}

// ------------------------------------------------------------------ matrices

Json index_to_json(std::span<const int> v) { return Json(std::vector<int>(v.begin(), v.end())); }

Json complex_to_json(complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json matrix_to_json(const PrefixOperator& A) {
  Json j;
  j["n"] = A.params().n();
  j["alpha"] = A.params().alpha();
  j["degree"] = A.degree();
  j["raise"] = A.raise();
  j["size"] = A.size();
  Json basis = Json::array();
  for (const auto& m : A.indexer().order()) basis.push_back(index_to_json(m.components()));
  j["basis"] = basis;
  j["valid_columns"] = A.valid_columns();
  Json re = Json::array(), im = Json::array();
  const auto& M = A.matrix();
  for (Eigen::Index r = 0; r < M.rows(); ++r) {
    for (Eigen::Index c = 0; c < M.cols(); ++c) {
      re.push_back(M(r, c).real());
      im.push_back(M(r, c).imag());
    }
  }
  j["re"] = re;
  j["im"] = im;
  return j;
}

PrefixOperator matrix_from_json(const Json& jo) {
  const In j = In::parse(jo.dump());
  const SpaceParams p(parse_dim(j, ""), as_double(require(j, "alpha", ""), "/alpha"));
  const int D = as_int(require(j, "degree", ""), "/degree");
  const int raise = as_int(require(j, "raise", ""), "/raise");
  if (D < 0) throw ParseError("\"degree\" must be >= 0", "/degree");
  auto idx = BasisIndexer::make(p.n(), D);
  const auto re = as_double_list(require(j, "re", ""), "/re");
  const auto im = as_double_list(require(j, "im", ""), "/im");
  const std::size_t N = idx->count();
  if (re.size() != N * N || im.size() != N * N) throw ParseError("matrix data must have size*size entries", "/re");
  Matrix M(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(N));
  for (std::size_t r = 0; r < N; ++r) {
    for (std::size_t c = 0; c < N; ++c) {
      M(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = complex(re[r * N + c], im[r * N + c]);
    }
  }
  return PrefixOperator(p, idx, raise, std::move(M));
}

std::string matrix_to_csv(const Matrix& M) {
  std::string out = "row,col,re,im\n";
  for (Eigen::Index r = 0; r < M.rows(); ++r) {
    for (Eigen::Index c = 0; c < M.cols(); ++c) {
      const complex v = M(r, c);
      if (v == 0.0) continue;
      out += std::to_string(r) + "," + std::to_string(c) + "," + format_double(v.real()) + "," +
             format_double(v.imag()) + "\n";
    }
  }
  return out;
}

Matrix matrix_from_csv(std::string_view text, std::size_t size) {
  const auto N = static_cast<Eigen::Index>(size);
  Matrix M = Matrix::Zero(N, N);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (lineno == 1) {
      if (line != "row,col,re,im") throw ParseError("expected header row,col,re,im", "line 1");
      continue;
    }
    if (line.empty()) continue;
    long long r = 0, c = 0;
    double re = 0.0, im = 0.0;
    char tail = 0;
    if (std::sscanf(line.c_str(), "%lld,%lld,%lf,%lf%c", &r, &c, &re, &im, &tail) != 4) {
      throw ParseError("expected row,col,re,im", "line " + std::to_string(lineno));
    }
    if (r < 0 || c < 0 || r >= N || c >= N) throw ParseError("entry outside the matrix", "line " + std::to_string(lineno));
    M(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = complex(re, im);
  }
  return M;
}

// -------------------------------------------------------------------- output

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s(buf);
  // Keep floats recognizable as floats.
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

std::string dump_json(const Json& j, int indent) {
  std::string out;
  dump_rec(j, indent, 0, out);
  return out;
}

std::string read_text_argument(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return arg;
  std::ifstream in(arg, std::ios::binary);
  if (!in) throw ParseError("cannot read file", arg);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  const auto dir = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
  const auto tmp = dir / ("." + path.filename().string() + ".tmp" + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw Error("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error("cannot move output into place: " + ec.message());
  }
}

}  // namespace bergcomm
