#pragma once

#include <cstdint>
#include <vector>

#include "linper/coweights.hpp"
#include "linper/finite_field.hpp"
#include "linper/qpoly.hpp"

namespace linper {

/// Torsion module of type mu over a DVR with residue field F_q, realized as
/// F_q^{|mu|} with a nilpotent operator t in Jordan form.
class FiniteModule {
 public:
  FiniteModule(Partition mu, int q);

  const Partition& type() const { return mu_; }
  int q() const { return q_; }
  int dim() const { return mu_.size(); }
  const FpMatrix& t() const { return t_; }

  /// Jordan type recovered from the ranks of powers of t.
  Partition jordan_type() const;

 private:
  Partition mu_;
  int q_;
  FpMatrix t_;
};

/// Largest |mu| accepted by the brute-force counters at field size q.
int brute_force_size_limit(int q);

/// Complete chains of t-stable subspaces, by exhaustive enumeration.
std::int64_t cfl_count_brute(const Partition& mu, int q);
/// Invertible matrices commuting with t, by exhaustive enumeration of the
/// commutant.
std::int64_t aut_count_brute(const Partition& mu, int q);

/// Number of complete flags as a polynomial in q, by removing one corner at
/// a time.
QPoly cfl_count_poly(const Partition& mu);
/// Corner weights q^{m_1+...+m_{r-1}} [m_r]_q, one per distinct part value,
/// largest value first.
std::vector<QPoly> corner_counts(const Partition& mu);
/// sum of corner_counts(mu) == [#parts]_q.
bool corner_counts_consistent(const Partition& mu);

QFactored aut_order_factored(const Partition& mu);
/// q^{sum mu'_j^2} prod_i prod_{k<=m_i} (1 - q^{-k}), expanded.
QPoly aut_order_poly(const Partition& mu);

Partition merge_type(const Partition& mu, const Partition& mu_prime);

struct FiberMass {
  QRat mass;
  int degree = 0;
  std::int64_t margin = 0;  // degree + |mu'|
  bool interleaved = false;
};
/// #CFl(mu + mu') / (|Aut mu| |Aut mu'|).
FiberMass fiber_mass(const Partition& mu, const Partition& mu_prime);

struct CollidedMass {
  QRat mass;
  int degree = 0;
  std::int64_t leading = 0;
};
/// Sum of fiber_mass over all mu |- d, mu' |- d'.
CollidedMass collided_fiber_mass(int d, int d_prime);

/// deg cfl_count_poly(mu) - deg aut_order_poly(mu) == -sum_i mu_i i.
bool self_flag_degree_check(const Partition& mu);

}  // namespace linper
