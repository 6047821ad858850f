#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linper/stratcomb.hpp"

namespace linper {

/// A pair (w, J) with w an involution on {1..d+d'} and J a d-subset.
struct ClassifyingPair {
  Involution w;
  Subset J;

  std::string to_json() const;
  friend bool operator==(const ClassifyingPair&, const ClassifyingPair&) = default;
  friend auto operator<=>(const ClassifyingPair&, const ClassifyingPair&) = default;
};

/// Pairs with Hi(w) in J and Lo(w) disjoint from J.
std::vector<ClassifyingPair> bar_E(int d, int d_prime);
/// Pairs with Hi(w) disjoint from J and Lo(w) in J.
std::vector<ClassifyingPair> dual_bar_E(int d, int d_prime);

/// Largest d+d' accepted by k_orbits at field size q.
int orbit_size_limit(int q);

struct OrbitDecomposition {
  std::int64_t flag_count = 0;
  std::vector<std::int64_t> orbit_sizes;  // sorted decreasing
};

/// Orbits of GL_d(F_q) x GL_{d'}(F_q), embedded block-diagonally, on complete
/// flags of F_q^{d+d'}, found by closing under a generating set.
OrbitDecomposition k_orbit_decomposition(int d, int d_prime, int q);
std::int64_t k_orbits(int d, int d_prime, int q);

/// k_orbits == |bar_E| == |dual_bar_E|.
bool verify_counts(int d, int d_prime, int q);

/// [n]_q! = prod_{k<=n} (q^k - 1)/(q - 1).
std::int64_t flag_count(int n, int q);

}  // namespace linper
