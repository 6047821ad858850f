#include "linper/flagmod.hpp"

#include <array>
#include <map>
#include <stdexcept>

namespace linper {

FiniteModule::FiniteModule(Partition mu, int q) : mu_(std::move(mu)), q_(q) {
  require_small_prime(q);
  const int n = mu_.size();
  t_.assign(static_cast<std::size_t>(n), FpVec(static_cast<std::size_t>(n), 0));
  int offset = 0;
  for (int part : mu_.parts()) {
    for (int j = 0; j + 1 < part; ++j)
      t_[static_cast<std::size_t>(offset + j + 1)][static_cast<std::size_t>(offset + j)] = 1;
    offset += part;
  }
}

Partition FiniteModule::jordan_type() const {
  const int n = dim();
  std::vector<int> rank{n};
  FpMatrix power = fp_identity(n);
  while (rank.back() > 0) {
    power = fp_multiply(power, t_, q_);
    rank.push_back(fp_rank(power, q_));
  }
  // blocks of size >= k: rank(t^{k-1}) - rank(t^k)
  std::vector<int> conj;
  for (std::size_t k = 1; k < rank.size(); ++k) conj.push_back(rank[k - 1] - rank[k]);
  return Partition(conj).conjugate();
}

int brute_force_size_limit(int q) {
  require_small_prime(q);
  return q == 2 ? 5 : 4;
}

namespace {

void check_brute_bound(const Partition& mu, int q) {
  if (mu.size() > brute_force_size_limit(q))
    throw std::invalid_argument("brute-force size bound exceeded for this field size");
}

}  // namespace

std::int64_t cfl_count_brute(const Partition& mu, int q) {
  check_brute_bound(mu, q);
  const FiniteModule module(mu, q);
  const int n = module.dim();
  std::vector<Subspace> stable;
  for (auto& s : all_subspaces(n, q))
    if (s.is_stable(module.t())) stable.push_back(std::move(s));
  // stable is sorted by dimension, so chains can be counted in one pass.
  std::vector<std::int64_t> chains(stable.size(), 0);
  for (std::size_t i = 0; i < stable.size(); ++i) {
    if (stable[i].dim() == 0) {
      chains[i] = 1;
      continue;
    }
    for (std::size_t j = 0; j < i; ++j)
      if (stable[j].dim() + 1 == stable[i].dim() && stable[i].contains(stable[j])) chains[i] += chains[j];
  }
  std::int64_t total = 0;
  for (std::size_t i = 0; i < stable.size(); ++i)
    if (stable[i].dim() == n) total += chains[i];
  return total;
}

namespace {

constexpr int kMaxDim = 5;
using Small = std::array<std::uint8_t, kMaxDim * kMaxDim>;

bool small_invertible(Small m, int n, int p) {
  for (int c = 0; c < n; ++c) {
    int pivot = c;
    while (pivot < n && m[static_cast<std::size_t>(pivot * kMaxDim + c)] == 0) ++pivot;
    if (pivot == n) return false;
    if (pivot != c)
      for (int k = 0; k < n; ++k)
        std::swap(m[static_cast<std::size_t>(pivot * kMaxDim + k)], m[static_cast<std::size_t>(c * kMaxDim + k)]);
    const int inv = m[static_cast<std::size_t>(c * kMaxDim + c)] == 1 ? 1 : (p == 3 ? 2 : 1);
    for (int r = c + 1; r < n; ++r) {
      const int f = (m[static_cast<std::size_t>(r * kMaxDim + c)] * inv) % p;
      if (f == 0) continue;
      for (int k = c; k < n; ++k) {
        auto& x = m[static_cast<std::size_t>(r * kMaxDim + k)];
        x = static_cast<std::uint8_t>((x + (p - f) * m[static_cast<std::size_t>(c * kMaxDim + k)]) % p);
      }
    }
  }
  return true;
}

}  // namespace

std::int64_t aut_count_brute(const Partition& mu, int q) {
  check_brute_bound(mu, q);
  const FiniteModule module(mu, q);
  const int n = module.dim();
  if (n == 0) return 1;
  const auto& t = module.t();
  // X t - t X = 0 as a linear system in the n^2 entries of X.
  FpMatrix system;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      FpVec row(static_cast<std::size_t>(n * n), 0);
      for (int k = 0; k < n; ++k) {
        auto& a = row[static_cast<std::size_t>(i * n + k)];
        a = mod_p(a + t[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)], q);
        auto& b = row[static_cast<std::size_t>(k * n + j)];
        b = mod_p(b - t[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)], q);
      }
      system.push_back(std::move(row));
    }
  const auto basis = fp_nullspace(system, q);
  std::vector<Small> gens;
  for (const auto& v : basis) {
    Small s{};
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        s[static_cast<std::size_t>(i * kMaxDim + j)] = static_cast<std::uint8_t>(v[static_cast<std::size_t>(i * n + j)]);
    gens.push_back(s);
  }
  // Odometer over coefficient vectors; each digit increment adds its
  // generator once, including the wrap from q-1 back to 0.
  std::vector<int> digits(gens.size(), 0);
  Small current{};
  std::int64_t count = 0;
  while (true) {
    if (small_invertible(current, n, q)) ++count;
    std::size_t k = 0;
    for (; k < gens.size(); ++k) {
      for (std::size_t e = 0; e < current.size(); ++e)
        current[e] = static_cast<std::uint8_t>((current[e] + gens[k][e]) % q);
      if (++digits[k] < q) break;
      digits[k] = 0;
    }
    if (k == gens.size()) break;
  }
  return count;
}

std::vector<QPoly> corner_counts(const Partition& mu) {
  std::vector<QPoly> out;
  int above = 0;
  for (const auto& [value, mult] : mu.value_multiplicities()) {
    (void)value;
    out.push_back(QPoly::monomial(above) * QPoly::q_integer(mult));
    above += mult;
  }
  return out;
}

bool corner_counts_consistent(const Partition& mu) {
  QPoly sum;
  for (const auto& c : corner_counts(mu)) sum += c;
  return sum == QPoly::q_integer(static_cast<int>(mu.length()));
}

namespace {

QPoly cfl_rec(const Partition& mu, std::map<Partition, QPoly>& memo) {
  if (mu.empty()) return QPoly::constant(1);
  if (auto it = memo.find(mu); it != memo.end()) return it->second;
  const auto weights = corner_counts(mu);
  const auto values = mu.value_multiplicities();
  QPoly total;
  std::size_t row = 0;
  for (std::size_t r = 0; r < values.size(); ++r) {
    row += static_cast<std::size_t>(values[r].second);
    std::vector<int> parts = mu.parts();
    --parts[row - 1];
    total += weights[r] * cfl_rec(Partition(std::move(parts)), memo);
  }
  memo.emplace(mu, total);
  return total;
}

}  // namespace

QPoly cfl_count_poly(const Partition& mu) {
  std::map<Partition, QPoly> memo;
  return cfl_rec(mu, memo);
}

QFactored aut_order_factored(const Partition& mu) {
  QFactored f;
  const Partition conj = mu.conjugate();
  for (int c : conj.parts()) f.q_power += c * c;
  for (const auto& [value, mult] : mu.value_multiplicities()) {
    (void)value;
    for (int k = 1; k <= mult; ++k) {
      f.q_power -= k;
      ++f.cyclotomic_like[k];
    }
  }
  return f;
}

QPoly aut_order_poly(const Partition& mu) { return aut_order_factored(mu).expand(); }

Partition merge_type(const Partition& mu, const Partition& mu_prime) {
  std::vector<int> all = mu.parts();
  all.insert(all.end(), mu_prime.parts().begin(), mu_prime.parts().end());
  return Partition::sorted(std::move(all));
}

FiberMass fiber_mass(const Partition& mu, const Partition& mu_prime) {
  QFactored den = aut_order_factored(mu);
  den *= aut_order_factored(mu_prime);
  FiberMass out;
  out.mass = QRat{cfl_count_poly(merge_type(mu, mu_prime)), den.expand()};
  out.degree = out.mass.degree();
  out.margin = out.degree + mu_prime.size();
  out.interleaved = is_interleaved(mu, mu_prime);
  return out;
}

CollidedMass collided_fiber_mass(int d, int d_prime) {
  if (d < 0 || d > d_prime) throw std::invalid_argument("collided_fiber_mass: need 0 <= d <= d'");
  struct Cell {
    QPoly numerator;
    QFactored denominator;
  };
  std::vector<Cell> cells;
  QFactored common;
  for (const auto& mu : partitions_of(d))
    for (const auto& mu_prime : partitions_of(d_prime)) {
      QFactored den = aut_order_factored(mu);
      den *= aut_order_factored(mu_prime);
      common = QFactored::common_multiple(common, den);
      cells.push_back({cfl_count_poly(merge_type(mu, mu_prime)), den});
    }
  QPoly numerator;
  for (const auto& c : cells) numerator += c.numerator * common.divided_by(c.denominator).expand();
  CollidedMass out;
  out.mass = QRat{numerator, common.expand()};
  out.degree = out.mass.degree();
  out.leading = out.mass.leading();
  return out;
}

bool self_flag_degree_check(const Partition& mu) {
  return cfl_count_poly(mu).degree() - aut_order_poly(mu).degree() == self_flag_dim(mu);
}

}  // namespace linper
