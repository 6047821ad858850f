#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "linper/coweights.hpp"

namespace linper {

/// Levi subgroup of GL_N given by an ordered set partition of {1..N}. Each
/// block is sorted; blocks are ordered by their smallest element.
class BlockLevi {
 public:
  BlockLevi() = default;
  /// Throws std::invalid_argument unless the blocks partition {1..N}.
  BlockLevi(int N, std::vector<std::vector<int>> blocks);
  /// Accepts "[[1,3],[2,4]]"; N is the largest label.
  static BlockLevi parse(std::string_view text);
  /// All singleton blocks.
  static BlockLevi torus(int N);
  /// Blocks {1,3,5,...} and {2,4,6,...} inside GL_{2n}.
  static BlockLevi interleaved(int n);

  int rank() const { return N_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  std::string to_json() const;

  friend bool operator==(const BlockLevi&, const BlockLevi&) = default;

 private:
  int N_ = 0;
  std::vector<std::vector<int>> blocks_;
};

/// Every block Levi of GL_N, in restricted-growth order.
std::vector<BlockLevi> all_block_levis(int N);

struct RhoData {
  Coweight two_rho;    // (N-1, N-3, ..., 1-N)
  Coweight two_rho_M;  // (b-1, b-3, ..., 1-b) on each block of size b
};
RhoData rho_data(const BlockLevi& L);

/// <e_a - e_b, 2rho - 2rho_M> > 0 for every consecutive pair a < b of a block.
bool is_antistandard(const BlockLevi& L);

bool is_G_dominant(const Coweight& lambda);
bool is_M_dominant(const Coweight& lambda, const BlockLevi& L);
/// Weakly increasing.
bool is_G_antidominant(const Coweight& lambda);
/// Weakly increasing along each block.
bool is_M_antidominant(const Coweight& lambda, const BlockLevi& L);

Coweight dom_G(const Coweight& lambda);
Coweight dom_M(const Coweight& lambda, const BlockLevi& L);
/// Longest element of S_N: reverses the entries.
Coweight w0(const Coweight& lambda);
/// Longest element of W_M: reverses the entries along each block.
Coweight w0_M(const Coweight& lambda, const BlockLevi& L);

/// mu - lambda is a nonnegative combination of e_i - e_j, i < j.
bool leq_G(const Coweight& lambda, const Coweight& mu);
/// Same, with i < j restricted to a common block.
bool leq_M(const Coweight& lambda, const Coweight& mu, const BlockLevi& L);

/// M-dominant mu with dom_M(lambda) <=_M mu and dom_G(mu) <=_G nu.
std::vector<Coweight> J_set(const Coweight& lambda, const Coweight& nu, const BlockLevi& L);

/// <mu, 2rho_M> - <dom_G(mu), 2rho>. mu must be M-dominant.
std::int64_t f_val(const Coweight& mu, const BlockLevi& L);

struct LeviWitness {
  Coweight lambda;
  Coweight mu;
  Coweight mu_prime;
  std::int64_t f = 0;
  std::int64_t rhs = 0;
};

struct LeviReport {
  bool holds = true;
  std::size_t checked = 0;
  std::vector<LeviWitness> witnesses;  // every mu attaining equality
  std::vector<std::string> failures;
  std::vector<std::string> notes;
};

/// Checks f(mu) <= <lambda, 2rho - 2rho_M> and the rearranged form
/// <lambda + mu, 2rho_M> <= <lambda + mu', 2rho> on every mu of J(lambda,
/// nu). For antistandard L it also checks that equality happens exactly
/// when lambda is antidominant, mu = w0_M(lambda) and mu' = w0(lambda).
LeviReport verify_levi_inequality(const Coweight& lambda, const Coweight& nu, const BlockLevi& L);

struct LeviSweep {
  BlockLevi levi;
  bool antistandard = false;
  std::size_t lambdas = 0;
  std::size_t pairs = 0;
  std::size_t mus = 0;
  std::size_t equalities = 0;
  /// lambda antidominant on blocks but not globally, with nonempty J.
  std::size_t divergent_lambdas = 0;
  std::size_t divergent_equalities = 0;
  std::int64_t max_f = 0;  // largest f(mu) seen; expected <= 0
  std::vector<std::string> failures;
  bool holds() const { return failures.empty(); }
};

/// verify_levi_inequality over all lambda in [-lambda_bound, lambda_bound]^N and all
/// dominant nu in [-nu_bound, nu_bound]^N.
LeviSweep sweep_levi_inequality(const BlockLevi& L, int lambda_bound, int nu_bound, int jobs = 1);

std::string levi_report_to_json(const LeviReport& report);

}  // namespace linper
