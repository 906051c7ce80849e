#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace bergcomm {

/// A point of N^n: the exponent of a monomial z^m and the label of the
/// basis element e_m.
class MultiIndex {
 public:
  /// Throws DomainError if empty or any component is negative.
  explicit MultiIndex(std::vector<int> components);

  static MultiIndex zero(int n);
  /// delta_j, with j zero-based.
  static MultiIndex unit(int n, int j);

  int dim() const noexcept { return static_cast<int>(c_.size()); }
  /// |m|
  int total() const noexcept { return total_; }
  int operator[](int j) const { return c_[static_cast<std::size_t>(j)]; }
  std::span<const int> components() const noexcept { return c_; }
  bool is_zero() const noexcept { return total_ == 0; }

  MultiIndex operator+(const MultiIndex& other) const;
  MultiIndex scaled(int s) const;

  /// Plain lexicographic comparison; used for ordered containers only.
  auto operator<=>(const MultiIndex& other) const = default;

  std::string to_string() const;

 private:
  std::vector<int> c_;
  int total_ = 0;
};

/// A point of Z^n: a diagonal shift l with its parts l+, l-, l*.
class ShiftIndex {
 public:
  explicit ShiftIndex(std::vector<int> components);
  static ShiftIndex from(const MultiIndex& m);
  /// a - b
  static ShiftIndex difference(const MultiIndex& a, const MultiIndex& b);

  int dim() const noexcept { return static_cast<int>(c_.size()); }
  int operator[](int j) const { return c_[static_cast<std::size_t>(j)]; }
  std::span<const int> components() const noexcept { return c_; }
  /// Sigma l
  int sum() const noexcept;
  bool is_zero() const noexcept;

  MultiIndex positive_part() const;
  MultiIndex negative_part() const;
  MultiIndex abs_part() const;
  ShiftIndex operator-() const;

  auto operator<=>(const ShiftIndex& other) const = default;

  std::string to_string() const;

 private:
  std::vector<int> c_;
};

/// m >= k componentwise. Throws DimensionMismatch.
bool dominates(const MultiIndex& m, const MultiIndex& k);

/// m + l, or nullopt when some component of m + l is negative.
std::optional<MultiIndex> shift(const MultiIndex& m, const ShiftIndex& l);

/// Graded order: by total degree, then lexicographically with larger
/// leading components first, e.g. (0,0) (1,0) (0,1) (2,0) (1,1) (0,2).
bool graded_less(const MultiIndex& a, const MultiIndex& b);

/// All m in N^n with |m| <= D in graded order. Length C(n+D, n).
std::vector<MultiIndex> enumerate(int n, int D);

/// Multi-indices of total degree exactly d, in graded order.
std::vector<MultiIndex> enumerate_degree(int n, int d);

/// C(n + D, n) as a 64-bit count.
std::size_t basis_count(int n, int D);

/// Bijection between positions 0..count-1 and the basis prefix |m| <= D.
class BasisIndexer {
 public:
  BasisIndexer(int n, int D);

  static std::shared_ptr<const BasisIndexer> make(int n, int D);

  int dim() const noexcept { return n_; }
  int degree() const noexcept { return D_; }
  std::size_t count() const noexcept { return order_.size(); }
  const MultiIndex& at(std::size_t pos) const { return order_.at(pos); }
  const std::vector<MultiIndex>& order() const noexcept { return order_; }

  std::optional<std::size_t> position(const MultiIndex& m) const;
  bool contains(const MultiIndex& m) const { return position(m).has_value(); }

  bool same_shape(const BasisIndexer& other) const noexcept {
    return n_ == other.n_ && D_ == other.D_;
  }

 private:
  struct Hash {
    std::size_t operator()(const MultiIndex& m) const noexcept;
  };

  int n_;
  int D_;
  std::vector<MultiIndex> order_;
  std::unordered_map<MultiIndex, std::size_t, Hash> lookup_;
};

}  // namespace bergcomm
