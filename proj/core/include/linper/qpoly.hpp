#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace linper {

/// Integer polynomial in q, coefficients in ascending powers, trailing zeros
/// trimmed. Arithmetic throws std::overflow_error on int64 overflow.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<std::int64_t> coeffs);
  static QPoly constant(std::int64_t c);
  /// c * q^k.
  static QPoly monomial(int k, std::int64_t c = 1);
  /// q^k - 1.
  static QPoly q_power_minus_one(int k);
  /// [k]_q = 1 + q + ... + q^{k-1}.
  static QPoly q_integer(int k);

  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coefficient(int k) const;
  std::int64_t leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }

  std::int64_t eval(std::int64_t q) const;

  QPoly& operator+=(const QPoly& other);
  QPoly& operator-=(const QPoly& other);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly pow(int e) const;

  /// Quotient and remainder by a monic divisor.
  std::pair<QPoly, QPoly> divmod_monic(const QPoly& divisor) const;

  std::string to_string() const;
  std::string to_json() const;

  friend bool operator==(const QPoly&, const QPoly&) = default;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

/// q^power * prod_k (q^k - 1)^{mult[k]}, the shape every automorphism-group
/// order takes. Products of these stay closed under lcm-style merging.
struct QFactored {
  int q_power = 0;
  std::map<int, int> cyclotomic_like;  // k -> multiplicity of (q^k - 1)

  QPoly expand() const;
  int degree() const;
  QFactored& operator*=(const QFactored& other);
  /// Factorwise maximum exponent: a common multiple of both.
  static QFactored common_multiple(const QFactored& a, const QFactored& b);
  /// this / other, assuming other divides this factorwise.
  QFactored divided_by(const QFactored& other) const;

  friend bool operator==(const QFactored&, const QFactored&) = default;
};

/// num / den, kept unreduced.
struct QRat {
  QPoly num;
  QPoly den;

  /// deg num - deg den.
  int degree() const;
  /// Coefficients c_0, c_1, ... of num/den = sum_j c_j q^{degree - j},
  /// computed by exact long division. Requires a monic denominator.
  std::vector<std::int64_t> laurent(int terms) const;
  /// Coefficient of q^degree in the expansion at q -> infinity.
  std::int64_t leading() const;
  std::string to_string() const;
};

}  // namespace linper
