#include "bergcomm/psets.hpp"

#include <cmath>
#include <sstream>

#include "bergcomm/error.hpp"

namespace bergcomm {

namespace {

bool in_positive_orthant(std::span<const int> x) {
  for (int v : x) {
    if (v < 1) return false;
  }
  return true;
}

std::string child_path(const std::string& parent, std::size_t i) {
  return parent.empty() ? std::to_string(i) : parent + "." + std::to_string(i);
}

const char* rule_for(SetExpr::Kind k) {
  switch (k) {
    case SetExpr::Kind::Finite: return "finite";
    case SetExpr::Kind::Full: return "full";
    case SetExpr::Kind::Union: return "union";
    case SetExpr::Kind::Translate: return "translate";
    case SetExpr::Kind::ProductWithFull: return "product";
    case SetExpr::Kind::Complement: return "complement";
  }
  return "?";
}

// The rule table, shared by the evaluator and the replay.
PStatus apply_rule(SetExpr::Kind k, const std::vector<PStatus>& premises) {
  auto all_yes = [&] {
    for (auto s : premises) {
      if (s != PStatus::Yes) return false;
    }
    return true;
  };
  switch (k) {
    case SetExpr::Kind::Finite: return PStatus::Yes;
    case SetExpr::Kind::Full: return PStatus::No;
    case SetExpr::Kind::Union:
    case SetExpr::Kind::Translate:
    case SetExpr::Kind::ProductWithFull: return all_yes() ? PStatus::Yes : PStatus::Unknown;
    case SetExpr::Kind::Complement: return all_yes() ? PStatus::No : PStatus::Unknown;
  }
  return PStatus::Unknown;
}

std::size_t evaluate(const SetPtr& e, const std::string& path, std::vector<TraceStep>& trace) {
  std::vector<std::size_t> premises;
  std::vector<PStatus> statuses;
  for (std::size_t i = 0; i < e->children().size(); ++i) {
    premises.push_back(evaluate(e->children()[i], child_path(path, i), trace));
    statuses.push_back(trace[premises.back()].status);
  }
  trace.push_back(TraceStep{path, rule_for(e->kind()), apply_rule(e->kind(), statuses), premises});
  return trace.size() - 1;
}

const SetExpr* node_at(const SetExpr* root, const std::string& path) {
  const SetExpr* node = root;
  if (path.empty()) return node;
  std::istringstream in(path);
  std::string part;
  while (std::getline(in, part, '.')) {
    std::size_t i = 0;
    try {
      i = std::stoul(part);
    } catch (const std::exception&) {
      return nullptr;
    }
    if (i >= node->children().size()) return nullptr;
    node = node->children()[i].get();
  }
  return node;
}

}  // namespace

// ------------------------------------------------------------------ SetExpr

SetPtr SetExpr::finite(int n, std::vector<Point> points) {
  if (n < 1) throw DomainError("finite set: dimension must be >= 1");
  auto e = std::shared_ptr<SetExpr>(new SetExpr());
  e->kind_ = Kind::Finite;
  e->n_ = n;
  for (auto& x : points) {
    if (static_cast<int>(x.size()) != n) throw DimensionMismatch("finite set: point of wrong dimension");
    if (!in_positive_orthant(x)) throw DomainError("finite set: points must have every component >= 1");
    e->points_.insert(std::move(x));
  }
  return e;
}

SetPtr SetExpr::full(int n) {
  if (n < 1) throw DomainError("full set: dimension must be >= 1");
  auto e = std::shared_ptr<SetExpr>(new SetExpr());
  e->kind_ = Kind::Full;
  e->n_ = n;
  return e;
}

SetPtr SetExpr::set_union(SetPtr left, SetPtr right) {
  if (!left || !right) throw DomainError("union: missing operand");
  if (left->dim() != right->dim()) throw DimensionMismatch("union: operand dimensions differ");
  auto e = std::shared_ptr<SetExpr>(new SetExpr());
  e->kind_ = Kind::Union;
  e->n_ = left->dim();
  e->children_ = {std::move(left), std::move(right)};
  return e;
}

SetPtr SetExpr::translate(SetPtr inner, std::vector<int> l) {
  if (!inner) throw DomainError("translate: missing operand");
  if (static_cast<int>(l.size()) != inner->dim()) throw DimensionMismatch("translate: shift dimension");
  auto e = std::shared_ptr<SetExpr>(new SetExpr());
  e->kind_ = Kind::Translate;
  e->n_ = inner->dim();
  e->children_ = {std::move(inner)};
  e->offset_ = std::move(l);
  return e;
}

SetPtr SetExpr::product_with_full(SetPtr inner, int axis) {
  if (!inner) throw DomainError("product: missing operand");
  const int n = inner->dim() + 1;
  if (axis < 1 || axis > n) {
    throw DimensionMismatch("product: axis " + std::to_string(axis) + " outside 1.." + std::to_string(n));
  }
  auto e = std::shared_ptr<SetExpr>(new SetExpr());
  e->kind_ = Kind::ProductWithFull;
  e->n_ = n;
  e->children_ = {std::move(inner)};
  e->axis_ = axis;
  return e;
}

SetPtr SetExpr::complement(SetPtr inner) {
  if (!inner) throw DomainError("complement: missing operand");
  auto e = std::shared_ptr<SetExpr>(new SetExpr());
  e->kind_ = Kind::Complement;
  e->n_ = inner->dim();
  e->children_ = {std::move(inner)};
  return e;
}

bool SetExpr::contains(std::span<const int> x) const {
  if (static_cast<int>(x.size()) != n_) throw DimensionMismatch("contains: point dimension");
  if (!in_positive_orthant(x)) return false;
  switch (kind_) {
    case Kind::Finite: return points_.count(Point(x.begin(), x.end())) > 0;
    case Kind::Full: return true;
    case Kind::Union: return children_[0]->contains(x) || children_[1]->contains(x);
    case Kind::Translate: {
      Point y(x.begin(), x.end());
      for (std::size_t j = 0; j < y.size(); ++j) y[j] -= offset_[j];
      return children_[0]->contains(y);
    }
    case Kind::ProductWithFull: {
      Point y(x.begin(), x.end());
      y.erase(y.begin() + (axis_ - 1));
      return children_[0]->contains(y);
    }
    case Kind::Complement: return !children_[0]->contains(x);
  }
  return false;
}

std::string SetExpr::to_string() const {
  auto vec = [](const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
  };
  switch (kind_) {
    case Kind::Finite: {
      std::string s = "Finite{";
      bool first = true;
      for (const auto& x : points_) {
        s += (first ? "" : ",") + vec(x);
        first = false;
      }
      return s + "}";
    }
    case Kind::Full: return "Full(" + std::to_string(n_) + ")";
    case Kind::Union: return "Union(" + children_[0]->to_string() + "," + children_[1]->to_string() + ")";
    case Kind::Translate: return "Translate(" + children_[0]->to_string() + "," + vec(offset_) + ")";
    case Kind::ProductWithFull:
      return "ProductWithFull(" + children_[0]->to_string() + ",axis=" + std::to_string(axis_) + ")";
    case Kind::Complement: return "Complement(" + children_[0]->to_string() + ")";
  }
  return "?";
}

const char* kind_name(SetExpr::Kind k) noexcept {
  switch (k) {
    case SetExpr::Kind::Finite: return "finite";
    case SetExpr::Kind::Full: return "full";
    case SetExpr::Kind::Union: return "union";
    case SetExpr::Kind::Translate: return "translate";
    case SetExpr::Kind::ProductWithFull: return "product_with_full";
    case SetExpr::Kind::Complement: return "complement";
  }
  return "?";
}

const char* status_name(PStatus s) noexcept {
  switch (s) {
    case PStatus::Yes: return "yes";
    case PStatus::No: return "no";
    case PStatus::Unknown: return "unknown";
  }
  return "?";
}

// ------------------------------------------------------------- property (P)

PVerdict property_p(const SetPtr& e) {
  if (!e) throw DomainError("property_p: missing expression");
  PVerdict v;
  evaluate(e, "", v.trace);
  v.status = v.trace.back().status;
  return v;
}

bool replay_trace(const SetPtr& e, const std::vector<TraceStep>& trace) {
  if (!e || trace.empty() || !trace.back().path.empty()) return false;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const TraceStep& step = trace[i];
    const SetExpr* node = node_at(e.get(), step.path);
    if (!node || step.rule != rule_for(node->kind())) return false;
    if (step.premises.size() != node->children().size()) return false;
    std::vector<PStatus> statuses;
    for (std::size_t c = 0; c < step.premises.size(); ++c) {
      const std::size_t q = step.premises[c];
      if (q >= i || trace[q].path != child_path(step.path, c)) return false;
      statuses.push_back(trace[q].status);
    }
    if (apply_rule(node->kind(), statuses) != step.status) return false;
  }
  return true;
}

double divergence_probe(const MembershipPredicate& member, int j, std::span<const int> r, int S) {
  if (S < 1) throw DomainError("divergence_probe: cutoff must be >= 1");
  const int n = static_cast<int>(r.size()) + 1;
  if (j < 1 || j > n) throw DimensionMismatch("divergence_probe: axis outside 1..n");
  Point x(static_cast<std::size_t>(n));
  double sum = 0.0;
  for (int s = 1; s <= S; ++s) {
    for (int i = 0, src = 0; i < n; ++i) {
      x[static_cast<std::size_t>(i)] = (i == j - 1) ? s : r[static_cast<std::size_t>(src++)];
    }
    if (member(x)) sum += 1.0 / (s + 1.0);
  }
  return sum;
}

double divergence_probe(const SetPtr& e, int j, std::span<const int> r, int S) {
  if (!e) throw DomainError("divergence_probe: missing expression");
  if (static_cast<int>(r.size()) + 1 != e->dim()) throw DimensionMismatch("divergence_probe: slice dimension");
  return divergence_probe([&](std::span<const int> x) { return e->contains(x); }, j, r, S);
}

// ----------------------------------------------------------------- zero set

std::vector<MultiIndex> zero_set_prefix(const SpaceParams& p, const MonomialCombo& f,
                                        const ShiftIndex& l, int D, bool weighted) {
  if (f.dim() != p.n() || l.dim() != p.n()) throw DimensionMismatch("zero_set_prefix: dimension");
  if (D < 0) throw DomainError("zero_set_prefix: degree cap must be >= 0");
  const double alpha = weighted ? p.alpha() : 0.0;
  const int n = p.n();
  // int |z^q|^2 (1-|z|^2)^alpha dnu = n! Gamma(alpha+1) q! / Gamma(n+|q|+alpha+1)
  auto moment = [&](const MultiIndex& q) {
    return std::exp(log_gamma(n + 1.0) + log_gamma(alpha + 1.0) + log_factorial(q) -
                    log_gamma(n + q.total() + alpha + 1.0));
  };
  const ShiftIndex minus_l = -l;
  std::vector<const Term*> matching;
  for (const auto& t : f.terms()) {
    if (ShiftIndex::difference(t.a, t.b) == minus_l) matching.push_back(&t);
  }

  std::vector<MultiIndex> out;
  for (const auto& m : enumerate(n, D)) {
    if (!shift(m, l)) continue;
    complex sum = 0.0;
    for (const Term* t : matching) sum += t->c * moment(m + t->b);
    if (std::abs(sum) <= 1e-14) out.push_back(m);
  }
  return out;
}

}  // namespace bergcomm
