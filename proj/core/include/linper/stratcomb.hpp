#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "linper/coweights.hpp"

namespace linper {

/// Sorted subset of I = {1..n}, labels 1-based.
using Subset = std::vector<int>;

/// Permutation of {1..n}; (*this)(i) is the image of i.
class Permutation {
 public:
  Permutation() = default;
  /// images[i-1] = sigma(i). Throws std::invalid_argument if not a bijection.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  /// (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  /// Cycle lengths in decreasing order, fixed points included.
  Partition cycle_type() const;
  int cycle_count() const;
  int sign() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// All permutations of {1..n} in lexicographic order of image vectors.
std::vector<Permutation> all_permutations(int n);

/// An element w of S_n with w^2 = id.
class Involution {
 public:
  Involution() = default;
  explicit Involution(Permutation w);

  int size() const { return w_.size(); }
  const Permutation& permutation() const { return w_; }
  int operator()(int i) const { return w_(i); }

  /// Larger element of each 2-cycle.
  const Subset& hi() const { return hi_; }
  /// Smaller element of each 2-cycle.
  const Subset& lo() const { return lo_; }
  const Subset& fixed() const { return fixed_; }
  /// 2-cycles (i, j) with i < j, ordered by i.
  std::vector<std::pair<int, int>> two_cycles() const;

  /// Cycle notation, e.g. "(1 2)(3 4)"; the identity is "()".
  std::string to_string() const;
  static Involution parse(std::string_view text, int n);

  friend bool operator==(const Involution& a, const Involution& b) { return a.w_ == b.w_; }
  friend auto operator<=>(const Involution& a, const Involution& b) { return a.w_ <=> b.w_; }

 private:
  Permutation w_;
  Subset hi_, lo_, fixed_;
};

/// All involutions of {1..n} (identity included).
std::vector<Involution> all_involutions(int n);

/// Set partition of {1..n} into d pairs and d'-d singletons.
class Pairing {
 public:
  Pairing() = default;
  /// Blocks of size 1 or 2 covering {1..n} exactly once.
  Pairing(int n, std::vector<std::vector<int>> blocks);
  static Pairing from_involution(const Involution& w);

  int size() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int pair_count() const;
  int singleton_count() const;
  Involution to_involution() const;
  std::string to_json() const;

  friend bool operator==(const Pairing&, const Pairing&) = default;
  friend auto operator<=>(const Pairing&, const Pairing&) = default;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;  // each sorted; blocks sorted
};

/// All d-element subsets of {1..n} in lexicographic order.
std::vector<Subset> subsets_of_size(int n, int d);

/// |J' n {1..k}| <= |J n {1..k}| for all k.
bool condition_C(const Subset& J, const Subset& J_prime, int n);

/// Pairings of {1..d+d'} with d pairs and d'-d singletons.
std::vector<Pairing> enumerate_E(int d, int d_prime);
/// (d+d')! / (2^d d! (d'-d)!).
std::int64_t e_count(int d, int d_prime);

/// Involutions w on {1..n} with Lo(w) = J and Hi(w) = J'. Whether the
/// corresponding geometric stratum is empty is not decided here.
std::vector<Involution> strata_for(const Subset& J, const Subset& J_prime, int n);

struct CPair {
  Subset J;
  Subset J_prime;
  bool disjoint = false;
};
std::vector<CPair> enumerate_C_pairs(int d, int d_prime);

/// Trace of sigma on Ind_E, the representation with basis E where sigma
/// acts on the pair wedges e_i ^ e_i' with their orientation sign.
std::int64_t ind_E_character(const Permutation& sigma, int d, int d_prime);
/// Induced character of sign x triv from the stabilizer of the standard
/// pairing {1,2},{3,4},...,{2d-1,2d}.
std::int64_t induced_character(const Permutation& sigma, int d, int d_prime);
bool verify_induced_iso(int d, int d_prime);

/// Ind_E character by cycle type.
std::map<Partition, std::int64_t> ind_E_class_character(int d, int d_prime);
std::string class_character_to_json(const std::map<Partition, std::int64_t>& chi);

/// dim of S_I-invariants in Ind_E (x) W^{(x)(d+d')} with dim W = r.
std::int64_t invariants_dim(int d, int d_prime, int r);
/// dim Sym^d(wedge^2 W) * dim Sym^{d'-d} W.
std::int64_t invariants_dim_closed(int d, int d_prime, int r);

std::string format_subset(const Subset& s);

}  // namespace linper
