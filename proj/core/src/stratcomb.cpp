#include "linper/stratcomb.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "linper/schur.hpp"

namespace linper {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const auto n = images_.size();
  std::vector<bool> seen(n + 1, false);
  for (int v : images_) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i + 1);
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("composing permutations of different size");
  std::vector<int> img(b.images_.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = a(b.images_[i]);
  return Permutation(std::move(img));
}

Partition Permutation::cycle_type() const {
  std::vector<bool> seen(images_.size(), false);
  std::vector<int> lengths;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j] - 1)) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition::sorted(std::move(lengths));
}

int Permutation::cycle_count() const { return static_cast<int>(cycle_type().length()); }

int Permutation::sign() const {
  const Partition type = cycle_type();
  const auto even_cycles = std::count_if(type.parts().begin(), type.parts().end(), [](int l) { return l % 2 == 0; });
  return even_cycles % 2 == 0 ? 1 : -1;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

Involution::Involution(Permutation w) : w_(std::move(w)) {
  for (int i = 1; i <= w_.size(); ++i) {
    const int j = w_(i);
    if (w_(j) != i) throw std::invalid_argument("permutation is not an involution");
    if (j == i)
      fixed_.push_back(i);
    else if (i < j)
      lo_.push_back(i);
    else
      hi_.push_back(i);
  }
}

std::vector<std::pair<int, int>> Involution::two_cycles() const {
  std::vector<std::pair<int, int>> out;
  for (int i : lo_) out.emplace_back(i, w_(i));
  return out;
}

std::string Involution::to_string() const {
  const auto cycles = two_cycles();
  if (cycles.empty()) return "()";
  std::ostringstream os;
  for (const auto& [i, j] : cycles) os << '(' << i << ' ' << j << ')';
  return os.str();
}

Involution Involution::parse(std::string_view text, int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::size_t pos = 0;
  while ((pos = text.find('(', pos)) != std::string_view::npos) {
    const std::size_t close = text.find(')', pos);
    if (close == std::string_view::npos) throw std::invalid_argument("unbalanced cycle notation");
    std::istringstream is(std::string(text.substr(pos + 1, close - pos - 1)));
    std::vector<int> cyc;
    for (int v; is >> v;) cyc.push_back(v);
    if (!cyc.empty()) {
      if (cyc.size() != 2) throw std::invalid_argument("involution cycles must have length 2");
      for (int v : cyc)
        if (v < 1 || v > n) throw std::invalid_argument("cycle entry out of range");
      img[static_cast<std::size_t>(cyc[0] - 1)] = cyc[1];
      img[static_cast<std::size_t>(cyc[1] - 1)] = cyc[0];
    }
    pos = close + 1;
  }
  return Involution(Permutation(std::move(img)));
}

std::vector<Involution> all_involutions(int n) {
  std::vector<Involution> out;
  std::vector<int> img(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int i) -> void {
    while (i <= n && img[static_cast<std::size_t>(i - 1)] != 0) ++i;
    if (i > n) {
      out.emplace_back(Permutation(img));
      return;
    }
    img[static_cast<std::size_t>(i - 1)] = i;
    self(self, i + 1);
    for (int j = i + 1; j <= n; ++j) {
      if (img[static_cast<std::size_t>(j - 1)] != 0) continue;
      img[static_cast<std::size_t>(i - 1)] = j;
      img[static_cast<std::size_t>(j - 1)] = i;
      self(self, i + 1);
      img[static_cast<std::size_t>(j - 1)] = 0;
    }
    img[static_cast<std::size_t>(i - 1)] = 0;
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end());
  return out;
}

Pairing::Pairing(int n, std::vector<std::vector<int>> blocks) : n_(n), blocks_(std::move(blocks)) {
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (auto& b : blocks_) {
    if (b.empty() || b.size() > 2) throw std::invalid_argument("pairing blocks must have size 1 or 2");
    std::sort(b.begin(), b.end());
    for (int v : b) {
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("pairing blocks do not partition {1..n}");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  if (std::count(seen.begin() + 1, seen.end(), true) != n)
    throw std::invalid_argument("pairing blocks do not cover {1..n}");
  std::sort(blocks_.begin(), blocks_.end());
}

Pairing Pairing::from_involution(const Involution& w) {
  std::vector<std::vector<int>> blocks;
  for (const auto& [i, j] : w.two_cycles()) blocks.push_back({i, j});
  for (int f : w.fixed()) blocks.push_back({f});
  return Pairing(w.size(), std::move(blocks));
}

int Pairing::pair_count() const {
  return static_cast<int>(std::count_if(blocks_.begin(), blocks_.end(), [](const auto& b) { return b.size() == 2; }));
}

int Pairing::singleton_count() const { return static_cast<int>(blocks_.size()) - pair_count(); }

Involution Pairing::to_involution() const {
  std::vector<int> img(static_cast<std::size_t>(n_));
  std::iota(img.begin(), img.end(), 1);
  for (const auto& b : blocks_) {
    if (b.size() != 2) continue;
    img[static_cast<std::size_t>(b[0] - 1)] = b[1];
    img[static_cast<std::size_t>(b[1] - 1)] = b[0];
  }
  return Involution(Permutation(std::move(img)));
}

std::string Pairing::to_json() const { return nlohmann::json(blocks_).dump(); }

std::vector<Subset> subsets_of_size(int n, int d) {
  std::vector<Subset> out;
  if (d < 0 || d > n) return out;
  Subset cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == d) {
      out.push_back(cur);
      return;
    }
    for (int v = next; v <= n - (d - static_cast<int>(cur.size())) + 1; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

bool condition_C(const Subset& J, const Subset& J_prime, int n) {
  if (J.size() != J_prime.size()) throw std::invalid_argument("condition_C: |J| != |J'|");
  std::size_t a = 0, b = 0;
  for (int k = 1; k <= n; ++k) {
    while (a < J.size() && J[a] <= k) ++a;
    while (b < J_prime.size() && J_prime[b] <= k) ++b;
    if (b > a) return false;
  }
  if (!J.empty()) {
    // Consequence: J u J' lies in the window [min J, max J'].
    const int lo = J.front(), hi = J_prime.back();
    if (J_prime.front() < lo || J.back() > hi)
      throw std::logic_error("condition_C holds but J u J' escapes [min J, max J']");
  }
  return true;
}

std::int64_t e_count(int d, int d_prime) {
  if (d < 0 || d > d_prime) return 0;
  std::int64_t num = 1;
  for (int i = 2; i <= d + d_prime; ++i) num *= i;
  std::int64_t den = 1;
  for (int i = 0; i < d; ++i) den *= 2 * (i + 1);  // 2^d d!
  for (int i = 2; i <= d_prime - d; ++i) den *= i;
  return num / den;
}

std::vector<Pairing> enumerate_E(int d, int d_prime) {
  if (d < 0 || d > d_prime) throw std::invalid_argument("enumerate_E: need 0 <= d <= d'");
  std::vector<Pairing> out;
  for (const auto& w : all_involutions(d + d_prime))
    if (static_cast<int>(w.lo().size()) == d) out.push_back(Pairing::from_involution(w));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Involution> strata_for(const Subset& J, const Subset& J_prime, int n) {
  if (J.size() != J_prime.size()) throw std::invalid_argument("strata_for: |J| != |J'|");
  for (int j : J)
    if (std::binary_search(J_prime.begin(), J_prime.end(), j))
      throw std::invalid_argument("strata_for: J and J' must be disjoint");
  if (!condition_C(J, J_prime, n)) throw std::invalid_argument("strata_for: condition (C) fails");
  std::vector<Involution> out;
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<bool> used(J_prime.size(), false);
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == J.size()) {
      out.emplace_back(Permutation(img));
      return;
    }
    const int i = J[k];
    for (std::size_t t = 0; t < J_prime.size(); ++t) {
      const int j = J_prime[t];
      if (used[t] || j <= i) continue;
      used[t] = true;
      img[static_cast<std::size_t>(i - 1)] = j;
      img[static_cast<std::size_t>(j - 1)] = i;
      self(self, k + 1);
      img[static_cast<std::size_t>(i - 1)] = i;
      img[static_cast<std::size_t>(j - 1)] = j;
      used[t] = false;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CPair> enumerate_C_pairs(int d, int d_prime) {
  if (d < 0 || d > d_prime) throw std::invalid_argument("enumerate_C_pairs: need 0 <= d <= d'");
  const int n = d + d_prime;
  const auto sigma = subsets_of_size(n, d);
  std::vector<CPair> out;
  for (const auto& J : sigma) {
    for (const auto& Jp : sigma) {
      if (!condition_C(J, Jp, n)) continue;
      Subset common;
      std::set_intersection(J.begin(), J.end(), Jp.begin(), Jp.end(), std::back_inserter(common));
      out.push_back({J, Jp, common.empty()});
    }
  }
  return out;
}

namespace {

std::vector<Involution> e_involutions(int d, int d_prime) {
  std::vector<Involution> out;
  for (const auto& alpha : enumerate_E(d, d_prime)) out.push_back(alpha.to_involution());
  return out;
}

std::int64_t trace_on_E(const Permutation& sigma, const std::vector<Involution>& e) {
  std::int64_t trace = 0;
  for (const auto& w : e) {
    std::int64_t sgn = 1;
    bool fixed = true;
    for (const auto& [i, j] : w.two_cycles()) {
      const int a = sigma(i), b = sigma(j);
      if (w(a) != b) {
        fixed = false;
        break;
      }
      if (a > b) sgn = -sgn;
    }
    // Pairs map to pairs, so singletons map to singletons automatically.
    if (fixed) trace += sgn;
  }
  return trace;
}

}  // namespace

std::int64_t ind_E_character(const Permutation& sigma, int d, int d_prime) {
  if (d < 0 || d > d_prime) throw std::invalid_argument("ind_E_character: need 0 <= d <= d'");
  if (sigma.size() != d + d_prime) throw std::invalid_argument("ind_E_character: permutation has wrong size");
  return trace_on_E(sigma, e_involutions(d, d_prime));
}

namespace {

// sigma restricted to a union of pairs {1,2},...,{2d-1,2d}: returns 0 if it
// does not preserve the pairing, else the sign of its action on {1..2d}.
int standard_stabilizer_value(const std::vector<int>& h, int d) {
  for (int p = 0; p < d; ++p) {
    const int a = h[static_cast<std::size_t>(2 * p)], b = h[static_cast<std::size_t>(2 * p + 1)];
    if (a > 2 * d || b > 2 * d) return 0;
    if ((a - 1) / 2 != (b - 1) / 2) return 0;
  }
  // Sign of the permutation of {1..2d} by inversion count.
  int inversions = 0;
  for (int i = 0; i < 2 * d; ++i)
    for (int j = i + 1; j < 2 * d; ++j)
      if (h[static_cast<std::size_t>(i)] > h[static_cast<std::size_t>(j)]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

std::int64_t stabilizer_order(int d, int d_prime) {
  std::int64_t s = 1;
  for (int i = 1; i <= d; ++i) s *= 2 * i;
  for (int i = 2; i <= d_prime - d; ++i) s *= i;
  return s;
}

}  // namespace

std::int64_t induced_character(const Permutation& sigma, int d, int d_prime) {
  const int n = d + d_prime;
  if (sigma.size() != n) throw std::invalid_argument("induced_character: permutation has wrong size");
  std::vector<int> g(static_cast<std::size_t>(n)), ginv(static_cast<std::size_t>(n)), h(static_cast<std::size_t>(n));
  std::iota(g.begin(), g.end(), 1);
  std::int64_t total = 0;
  do {
    for (int i = 0; i < n; ++i) ginv[static_cast<std::size_t>(g[static_cast<std::size_t>(i)] - 1)] = i + 1;
    // h = g^{-1} sigma g
    for (int i = 0; i < n; ++i)
      h[static_cast<std::size_t>(i)] = ginv[static_cast<std::size_t>(sigma(g[static_cast<std::size_t>(i)]) - 1)];
    total += standard_stabilizer_value(h, d);
  } while (std::next_permutation(g.begin(), g.end()));
  const std::int64_t order = stabilizer_order(d, d_prime);
  if (total % order != 0) throw std::logic_error("induced_character: non-integral value");
  return total / order;
}

bool verify_induced_iso(int d, int d_prime) {
  if (d < 0 || d > d_prime) throw std::invalid_argument("verify_induced_iso: need 0 <= d <= d'");
  const auto e = e_involutions(d, d_prime);
  for (const auto& sigma : all_permutations(d + d_prime))
    if (trace_on_E(sigma, e) != induced_character(sigma, d, d_prime)) return false;
  return true;
}

std::map<Partition, std::int64_t> ind_E_class_character(int d, int d_prime) {
  if (d < 0 || d > d_prime) throw std::invalid_argument("ind_E_class_character: need 0 <= d <= d'");
  const auto e = e_involutions(d, d_prime);
  std::map<Partition, std::int64_t> out;
  for (const auto& sigma : all_permutations(d + d_prime)) {
    auto type = sigma.cycle_type();
    if (!out.count(type)) out.emplace(std::move(type), trace_on_E(sigma, e));
  }
  return out;
}

std::string class_character_to_json(const std::map<Partition, std::int64_t>& chi) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (auto it = chi.rbegin(); it != chi.rend(); ++it) j[format_partition(it->first)] = it->second;
  return j.dump();
}

std::int64_t invariants_dim(int d, int d_prime, int r) {
  if (r < 1) throw std::invalid_argument("invariants_dim: r must be positive");
  if (d < 0 || d > d_prime) throw std::invalid_argument("invariants_dim: need 0 <= d <= d'");
  const auto e = e_involutions(d, d_prime);
  std::int64_t total = 0, order = 0;
  for (const auto& sigma : all_permutations(d + d_prime)) {
    std::int64_t rc = 1;
    for (int c = sigma.cycle_count(); c > 0; --c) rc *= r;
    total += trace_on_E(sigma, e) * rc;
    ++order;
  }
  if (total % order != 0) throw std::logic_error("invariants_dim: non-integral average");
  return total / order;
}

std::int64_t invariants_dim_closed(int d, int d_prime, int r) {
  auto multisets = [](std::int64_t w, std::int64_t k) { return k == 0 ? 1 : binomial(w + k - 1, k); };
  return multisets(binomial(r, 2), d) * multisets(r, d_prime - d);
}

std::string format_subset(const Subset& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << '}';
  return os.str();
}

}  // namespace linper
