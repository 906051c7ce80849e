#pragma once

#include <functional>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "bergcomm/multiindex.hpp"
#include "bergcomm/symbols.hpp"

namespace bergcomm {

class SetExpr;
using SetPtr = std::shared_ptr<const SetExpr>;
using Point = std::vector<int>;

/// Structured subsets of N*^n (every component >= 1).
class SetExpr {
 public:
  enum class Kind { Finite, Full, Union, Translate, ProductWithFull, Complement };

  static SetPtr finite(int n, std::vector<Point> points);
  static SetPtr full(int n);
  static SetPtr set_union(SetPtr left, SetPtr right);
  /// (M + l) intersected with N*^n
  static SetPtr translate(SetPtr inner, std::vector<int> l);
  /// {sigma_j(s, r) : s >= 1, r in inner}, sigma_j inserting s at the
  /// 1-based position j; the result has dimension dim(inner) + 1.
  static SetPtr product_with_full(SetPtr inner, int axis);
  /// N*^n minus M
  static SetPtr complement(SetPtr inner);

  Kind kind() const noexcept { return kind_; }
  int dim() const noexcept { return n_; }
  const std::set<Point>& points() const noexcept { return points_; }
  /// Children in order: one for Translate/ProductWithFull/Complement, two for Union.
  const std::vector<SetPtr>& children() const noexcept { return children_; }
  const std::vector<int>& offset() const noexcept { return offset_; }
  int axis() const noexcept { return axis_; }

  bool contains(std::span<const int> x) const;
  std::string to_string() const;

 private:
  SetExpr() = default;

  Kind kind_ = Kind::Full;
  int n_ = 0;
  std::set<Point> points_;
  std::vector<SetPtr> children_;
  std::vector<int> offset_;
  int axis_ = 0;
};

const char* kind_name(SetExpr::Kind k) noexcept;

enum class PStatus { Yes, No, Unknown };
const char* status_name(PStatus s) noexcept;

/// One rule application. `path` locates the node ("" is the root, "0.1" is
/// the second child of the first child); premises index earlier steps.
struct TraceStep {
  std::string path;
  std::string rule;
  PStatus status = PStatus::Unknown;
  std::vector<std::size_t> premises;
};

struct PVerdict {
  PStatus status = PStatus::Unknown;
  /// Post-order; the last step is the root.
  std::vector<TraceStep> trace;
};

/// Sound rules only: finite sets and the empty set have property (P),
/// N*^n does not, unions/translates/products with N* of sets with (P)
/// keep it, complements of sets with (P) lose it. Anything else is Unknown.
PVerdict property_p(const SetPtr& e);

/// Checks every trace step against the expression and the rule table.
bool replay_trace(const SetPtr& e, const std::vector<TraceStep>& trace);

using MembershipPredicate = std::function<bool(std::span<const int>)>;

/// sum over s = 1..S with sigma_j(s, r) in M of 1/(s+1). A diagnostic for
/// divergence along one axis slice, never a proof. j is 1-based.
double divergence_probe(const SetPtr& e, int j, std::span<const int> r, int S);
double divergence_probe(const MembershipPredicate& member, int j, std::span<const int> r, int S);

/// {m : |m| <= D, m + l >= 0, int f z^{m+l} conj(z)^m dmu = 0} in graded
/// order, with mu the normalized volume measure, or (1-|z|^2)^alpha times it
/// when `weighted`. A term (a, b, c) contributes only when a - b = -l, and
/// then contributes c int |z^{m+b}|^2 dmu; membership means the sum is
/// within 1e-14 of zero.
std::vector<MultiIndex> zero_set_prefix(const SpaceParams& p, const MonomialCombo& f,
                                        const ShiftIndex& l, int D, bool weighted = false);

}  // namespace bergcomm
