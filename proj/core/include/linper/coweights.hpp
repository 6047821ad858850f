#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace linper {

/// An integer vector in Z^m. Lattice-class membership is a query, never an
/// invariant of the type.
class Coweight {
 public:
  Coweight() = default;
  explicit Coweight(std::vector<int> entries) : entries_(std::move(entries)) {}
  Coweight(std::initializer_list<int> entries) : entries_(entries) {}

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<int>& entries() const { return entries_; }
  std::int64_t degree() const;

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  friend bool operator==(const Coweight&, const Coweight&) = default;
  friend auto operator<=>(const Coweight&, const Coweight&) = default;

 private:
  std::vector<int> entries_;
};

/// Weakly decreasing vector of nonnegative integers with trailing zeros
/// trimmed. Indexing past the stored parts yields 0.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument if `parts` is not weakly decreasing and
  /// nonnegative.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts arbitrary nonnegative entries into a partition.
  static Partition sorted(std::vector<int> entries);

  std::size_t length() const { return parts_.size(); }
  int size() const;
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  std::vector<int> padded(std::size_t m) const;
  Partition conjugate() const;
  /// Distinct part values in decreasing order paired with multiplicities.
  std::vector<std::pair<int, int>> value_multiplicities() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Genus and rank parameters feeding the dimension formulas.
struct DimParams {
  int g = 0;
  int n = 1;
  int d = 0;
  int d_prime = 0;
};

enum class LatticeClass { Plus, Minus, Nonneg, NonnegPlus, NonnegMinus, Pos, NonnegPos };

LatticeClass parse_lattice_class(std::string_view name);
std::string_view lattice_class_name(LatticeClass cls);

/// Membership of `lambda` in the named class, optionally constrained to a
/// fixed total degree.
bool classify(const Coweight& lambda, LatticeClass cls, std::optional<std::int64_t> degree = {});

std::pair<Coweight, Coweight> odd_even_split(const Coweight& lambda);
Coweight interleave_odd_even(const Coweight& odd, const Coweight& even);

std::int64_t pairing(const Coweight& a, const Coweight& b);

/// <lambda, (n-1, n-2, ..., 0)>.
std::int64_t a_n(const Coweight& lambda, int n);

/// nr + (1-g) * sum_{i<n} i^2.
std::int64_t b(int n, std::int64_t r, int g);
/// Closed form of b(2k, r) = 2kr + (1-g)(2k-1)k(4k-1)/3. `m` must be even.
std::int64_t b_closed_even(int m, std::int64_t r, int g);

/// Relative dimension nd - (n/6)(n-1)(1+4n)(g-1) of one factor of the
/// smooth cover.
std::int64_t relative_dim(int n, std::int64_t d, int g);

struct RelativeDimCheck {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool equal = false;
};
RelativeDimCheck verify_relative_dim_identity(int n, std::int64_t d, std::int64_t d_prime, int g);

std::int64_t fibration_rank(int n, std::int64_t d, std::int64_t d_prime,
                                 const Coweight& lambda, int g);

/// theta = (mu'_1, mu_1, mu'_2, mu_2, ..., mu'_m, mu_m).
Coweight interleave(const Partition& mu, const Partition& mu_prime, std::size_t m);

struct TranspositionStep {
  std::size_t index = 0;  // 1-based position i of the swap (i, i+1)
  std::int64_t a = 0;     // xi_{i+1} - xi_i > 0
};

struct TranspositionChain {
  Partition eta;
  std::vector<TranspositionStep> steps;
  std::int64_t gap = 0;
};

/// Sorts theta into eta by adjacent swaps of ascents, always taking the
/// leftmost one. gap = <theta - eta, (0, 1, ..., len-1)>.
TranspositionChain special_transposition_chain(const Coweight& theta);

/// sum_i eta_i (i-1).
std::int64_t cfl_dim(const Partition& eta);
/// sum_i (eta_i - eta_{i+1}) i(i-1)/2, the untelescoped form.
std::int64_t cfl_dim_literal(const Partition& eta);
/// sum_i mu_i (2i-1).
std::int64_t aut_dim(const Partition& mu);
/// sum_i (mu_i - mu_{i+1}) i^2.
std::int64_t aut_dim_literal(const Partition& mu);

struct MarginResult {
  std::int64_t margin = 0;
  bool equality = false;
};
MarginResult flag_dim_margin(const Partition& mu, const Partition& mu_prime);

bool is_interleaved(const Partition& mu, const Partition& mu_prime);

/// -sum_i mu_i * i.
std::int64_t self_flag_dim(const Partition& mu);

/// All partitions of `n` with at most `max_parts` parts, in decreasing
/// lexicographic order.
std::vector<Partition> partitions_of(int n, std::optional<std::size_t> max_parts = {});

std::string format_coweight(const Coweight& lambda);
std::string format_partition(const Partition& mu);
std::string format_partition(const Partition& mu, std::size_t pad);
Coweight parse_coweight(std::string_view text);
Partition parse_partition(std::string_view text);

}  // namespace linper
