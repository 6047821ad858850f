#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "linper/coweights.hpp"

namespace linper {

using Exponent = std::vector<int>;

/// Exact symmetric polynomial in N variables. Only dominant exponents
/// (weakly decreasing, length N) are stored; each key stands for the whole
/// monomial-symmetric orbit. Iteration runs from the lexicographically
/// greatest key downwards.
class SymPoly {
 public:
  using Terms = std::map<Exponent, std::int64_t, std::greater<>>;

  explicit SymPoly(int nvars);

  /// Polynomial equal to 1.
  static SymPoly one(int nvars);
  /// Monomial symmetric function m_gamma.
  static SymPoly monomial(const Exponent& gamma);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of x^e for any exponent e (sorted internally).
  std::int64_t coefficient(Exponent e) const;
  /// Adds c to the coefficient of the orbit of `gamma` (must be dominant).
  void add_term(const Exponent& gamma, std::int64_t c);

  SymPoly& operator+=(const SymPoly& other);
  SymPoly& operator-=(const SymPoly& other);
  SymPoly operator*(const SymPoly& other) const;
  SymPoly scaled(std::int64_t c) const;

  /// Value at x_1 = ... = x_N = 1.
  std::int64_t eval_at_ones() const;
  /// Value at an arbitrary integer point, reduced modulo `modulus`.
  std::uint64_t eval_mod(const std::vector<std::uint64_t>& x, std::uint64_t modulus) const;

  friend bool operator==(const SymPoly&, const SymPoly&) = default;

 private:
  int nvars_;
  Terms terms_;
};

struct SchurTerm {
  Partition lambda;
  std::int64_t mult = 0;
  friend bool operator==(const SchurTerm&, const SchurTerm&) = default;
};

/// Multiset of Schur components, sorted by decreasing partition.
using SchurDecomposition = std::vector<SchurTerm>;

/// Schur polynomial s_lambda(x_1..x_N) from semistandard tableaux.
SymPoly schur_poly(const Partition& lambda, int nvars);

/// Weyl dimension of the GL_N irreducible with highest weight lambda.
std::int64_t weyl_dimension(const Partition& lambda, int nvars);

/// h_d evaluated at the N(N-1)/2 products x_i x_j (i < j).
SymPoly wedge2_sym_char(int d, int nvars);
/// Complete homogeneous h_k(x_1..x_N).
SymPoly sym_char(int k, int nvars);

/// Greedy leading-term decomposition into Schur polynomials. Throws
/// std::domain_error when a leading coefficient is negative.
SchurDecomposition decompose_schur(const SymPoly& p);
SymPoly recompose(const SchurDecomposition& dec, int nvars);

/// Partitions mu with <= N parts such that mu/lambda is a horizontal strip of
/// size k.
std::vector<Partition> pieri(const Partition& lambda, int k, int nvars);

std::vector<Partition> schur_index(int n, int d, int d_prime);

struct SchurIndexReport {
  std::vector<Partition> index;
  SchurDecomposition decomposition;
  bool holds = false;
};
SchurIndexReport schur_index_report(int n, int d, int d_prime);
bool verify_multiplicity_free(int n, int d, int d_prime);

/// Sym^d(wedge^2 k^{2n}) (x) Sym^{d'-d} k^{2n} dimension, C(C(2n,2)+d-1,d) C(2n+d'-d-1,d'-d).
std::int64_t multiplicity_free_dimension(int n, int d, int d_prime);

/// The partition mu in the d = d' index set with mu^odd = mu^even =
/// lambda^even, from which lambda arises by a horizontal strip.
Partition f_map(const Partition& lambda, int n, int d, int d_prime);
/// For each mu in schur_index(n,d,d), checks that the Pieri expansion of
/// mu by d'-d boxes restricted to the index set is exactly the f_map fiber.
bool verify_f_map_fibers(int n, int d, int d_prime);

std::vector<Coweight> antidominant_index(int n, int d, int d_prime);
bool verify_index_reversal(int n, int d, int d_prime);

std::int64_t binomial(std::int64_t n, std::int64_t k);

std::string decomposition_to_json(const SchurDecomposition& dec);

}  // namespace linper
