#pragma once

#include <cstdint>
#include <vector>

namespace linper {

/// Vector over F_p, entries in [0, p).
using FpVec = std::vector<int>;
/// Row-major square or rectangular matrix over F_p.
using FpMatrix = std::vector<FpVec>;

/// Throws std::invalid_argument unless p is 2 or 3.
void require_small_prime(int p);

int mod_p(long long x, int p);
int inv_mod_p(int a, int p);

FpMatrix fp_identity(int n);
FpMatrix fp_multiply(const FpMatrix& a, const FpMatrix& b, int p);
FpVec fp_apply(const FpMatrix& m, const FpVec& v, int p);
int fp_rank(FpMatrix m, int p);
/// Basis of {x : A x = 0}.
std::vector<FpVec> fp_nullspace(FpMatrix a, int p);

/// All p^n vectors of F_p^n, lexicographic.
std::vector<FpVec> fp_all_vectors(int n, int p);

/// Subspace of F_p^n stored by its reduced row-echelon basis, which makes
/// equality and ordering canonical.
class Subspace {
 public:
  Subspace() = default;
  Subspace(int n, int p) : n_(n), p_(p) {}
  static Subspace span(int n, int p, const std::vector<FpVec>& vectors);

  int ambient() const { return n_; }
  int field() const { return p_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<FpVec>& basis() const { return rows_; }

  bool contains(const FpVec& v) const;
  bool contains(const Subspace& other) const;
  Subspace with(const FpVec& v) const;
  /// Image under the linear map m.
  Subspace image(const FpMatrix& m) const;
  bool is_stable(const FpMatrix& m) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend auto operator<=>(const Subspace&, const Subspace&) = default;

 private:
  int n_ = 0;
  int p_ = 2;
  std::vector<FpVec> rows_;
};

/// Every subspace of F_p^n, sorted by dimension and then canonical basis.
std::vector<Subspace> all_subspaces(int n, int p);

/// Complete flag V_1 < ... < V_{n-1}; V_0 and V_n are implicit.
using Flag = std::vector<Subspace>;

/// All complete flags of F_p^n in canonical order; there are [n]_p! of them.
std::vector<Flag> all_complete_flags(int n, int p);

Flag flag_image(const Flag& flag, const FpMatrix& m);

}  // namespace linper
