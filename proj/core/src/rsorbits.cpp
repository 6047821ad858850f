#include "linper/rsorbits.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "json.hpp"
#include "linper/finite_field.hpp"

namespace linper {

std::string ClassifyingPair::to_json() const {
  nlohmann::ordered_json j;
  j["w"] = w.to_string();
  j["J"] = J;
  return j.dump();
}

namespace {

bool subset_of(const Subset& a, const Subset& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

bool disjoint(const Subset& a, const Subset& b) {
  return std::none_of(a.begin(), a.end(), [&](int x) { return std::binary_search(b.begin(), b.end(), x); });
}

std::vector<ClassifyingPair> filter_pairs(int d, int d_prime, bool dual) {
  if (d < 0 || d_prime < 0) throw std::invalid_argument("bar_E: negative size");
  const int n = d + d_prime;
  const auto subsets = subsets_of_size(n, d);
  std::vector<ClassifyingPair> out;
  for (const auto& w : all_involutions(n))
    for (const auto& J : subsets) {
      const bool ok = dual ? (disjoint(w.hi(), J) && subset_of(w.lo(), J))
                           : (subset_of(w.hi(), J) && disjoint(w.lo(), J));
      if (ok) out.push_back({w, J});
    }
  return out;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }
  std::int64_t size_of(std::size_t root) const { return static_cast<std::int64_t>(size_[root]); }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

/// Transvections I + E_ij inside each block, and diag(a, 1, ..., 1) on each
/// block with a a generator of F_q^*.
std::vector<FpMatrix> block_generators(int d, int d_prime, int q) {
  const int n = d + d_prime;
  std::vector<FpMatrix> gens;
  for (const auto& [lo, size] : {std::pair{0, d}, std::pair{d, d_prime}}) {
    for (int i = lo; i < lo + size; ++i)
      for (int j = lo; j < lo + size; ++j) {
        if (i == j) continue;
        auto m = fp_identity(n);
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
        gens.push_back(std::move(m));
      }
    if (size > 0 && q > 2) {
      auto m = fp_identity(n);
      m[static_cast<std::size_t>(lo)][static_cast<std::size_t>(lo)] = q - 1;  // -1 generates F_3^*
      gens.push_back(std::move(m));
    }
  }
  return gens;
}

}  // namespace

std::vector<ClassifyingPair> bar_E(int d, int d_prime) { return filter_pairs(d, d_prime, false); }

std::vector<ClassifyingPair> dual_bar_E(int d, int d_prime) { return filter_pairs(d, d_prime, true); }

int orbit_size_limit(int q) {
  require_small_prime(q);
  return q == 2 ? 4 : 3;
}

std::int64_t flag_count(int n, int q) {
  std::int64_t total = 1;
  for (int k = 1; k <= n; ++k) {
    std::int64_t qk = 1;
    for (int i = 0; i < k; ++i) qk *= q;
    total *= (qk - 1) / (q - 1);
  }
  return total;
}

OrbitDecomposition k_orbit_decomposition(int d, int d_prime, int q) {
  require_small_prime(q);
  if (d < 0 || d_prime < 0) throw std::invalid_argument("k_orbits: negative size");
  const int n = d + d_prime;
  if (n > orbit_size_limit(q)) throw std::invalid_argument("k_orbits: size bound exceeded for this field size");
  const auto flags = all_complete_flags(n, q);
  std::map<Flag, std::size_t> index;
  for (std::size_t i = 0; i < flags.size(); ++i) index.emplace(flags[i], i);
  UnionFind uf(flags.size());
  for (const auto& g : block_generators(d, d_prime, q))
    for (std::size_t i = 0; i < flags.size(); ++i) {
      const auto it = index.find(flag_image(flags[i], g));
      if (it == index.end()) throw std::logic_error("k_orbits: image of a flag is not a flag");
      uf.unite(i, it->second);
    }
  OrbitDecomposition out;
  out.flag_count = static_cast<std::int64_t>(flags.size());
  for (std::size_t i = 0; i < flags.size(); ++i)
    if (uf.find(i) == i) out.orbit_sizes.push_back(uf.size_of(i));
  std::sort(out.orbit_sizes.rbegin(), out.orbit_sizes.rend());
  return out;
}

std::int64_t k_orbits(int d, int d_prime, int q) {
  return static_cast<std::int64_t>(k_orbit_decomposition(d, d_prime, q).orbit_sizes.size());
}

bool verify_counts(int d, int d_prime, int q) {
  const auto orbits = k_orbits(d, d_prime, q);
  return orbits == static_cast<std::int64_t>(bar_E(d, d_prime).size()) &&
         orbits == static_cast<std::int64_t>(dual_bar_E(d, d_prime).size());
}

}  // namespace linper
