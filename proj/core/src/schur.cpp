#include "linper/schur.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace linper {

namespace {

bool is_dominant(const Exponent& e) { return std::is_sorted(e.begin(), e.end(), std::greater<>()); }

template <typename F>
void for_each_permutation(Exponent e, F&& f) {
  std::sort(e.begin(), e.end());
  do {
    f(e);
  } while (std::next_permutation(e.begin(), e.end()));
}

std::vector<std::pair<Exponent, std::int64_t>> expand_full(const SymPoly& p) {
  std::vector<std::pair<Exponent, std::int64_t>> out;
  for (const auto& [key, c] : p.terms())
    for_each_permutation(key, [&](const Exponent& e) { out.emplace_back(e, c); });
  return out;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  __extension__ using u128 = unsigned __int128;
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, int exp, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  for (; exp > 0; exp >>= 1) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
  }
  return r;
}

}  // namespace

SymPoly::SymPoly(int nvars) : nvars_(nvars) {
  if (nvars < 1) throw std::invalid_argument("SymPoly needs at least one variable");
}

SymPoly SymPoly::one(int nvars) {
  SymPoly p(nvars);
  p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), 1);
  return p;
}

SymPoly SymPoly::monomial(const Exponent& gamma) {
  SymPoly p(static_cast<int>(gamma.size()));
  p.add_term(gamma, 1);
  return p;
}

std::int64_t SymPoly::coefficient(Exponent e) const {
  if (e.size() != static_cast<std::size_t>(nvars_)) throw std::invalid_argument("exponent length mismatch");
  std::sort(e.begin(), e.end(), std::greater<>());
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

void SymPoly::add_term(const Exponent& gamma, std::int64_t c) {
  if (gamma.size() != static_cast<std::size_t>(nvars_)) throw std::invalid_argument("exponent length mismatch");
  if (!is_dominant(gamma) || (!gamma.empty() && gamma.back() < 0))
    throw std::invalid_argument("SymPoly keys must be dominant and nonnegative");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(gamma, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SymPoly& SymPoly::operator+=(const SymPoly& other) {
  if (other.nvars_ != nvars_) throw std::invalid_argument("SymPoly variable count mismatch");
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& other) {
  if (other.nvars_ != nvars_) throw std::invalid_argument("SymPoly variable count mismatch");
  for (const auto& [k, c] : other.terms_) add_term(k, -c);
  return *this;
}

SymPoly SymPoly::scaled(std::int64_t c) const {
  SymPoly out(nvars_);
  if (c == 0) return out;
  for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * c);
  return out;
}

SymPoly SymPoly::operator*(const SymPoly& other) const {
  if (other.nvars_ != nvars_) throw std::invalid_argument("SymPoly variable count mismatch");
  // Coefficient of a dominant x^gamma in the product is the sum over all
  // splittings gamma = a + b of full monomials.
  const auto lhs = expand_full(*this);
  const auto rhs = expand_full(other);
  SymPoly out(nvars_);
  Exponent sum(static_cast<std::size_t>(nvars_));
  for (const auto& [a, ca] : lhs) {
    for (const auto& [b, cb] : rhs) {
      bool dominant = true;
      for (std::size_t i = 0; i < sum.size(); ++i) {
        sum[i] = a[i] + b[i];
        if (i > 0 && sum[i] > sum[i - 1]) {
          dominant = false;
          break;
        }
      }
      if (dominant) out.add_term(sum, ca * cb);
    }
  }
  return out;
}

std::int64_t SymPoly::eval_at_ones() const {
  std::int64_t total = 0;
  for (const auto& [key, c] : terms_) {
    std::int64_t orbit = 0;
    for_each_permutation(key, [&](const Exponent&) { ++orbit; });
    total += orbit * c;
  }
  return total;
}

std::uint64_t SymPoly::eval_mod(const std::vector<std::uint64_t>& x, std::uint64_t modulus) const {
  if (x.size() != static_cast<std::size_t>(nvars_)) throw std::invalid_argument("point dimension mismatch");
  std::uint64_t total = 0;
  for (const auto& [key, c] : terms_) {
    std::uint64_t orbit_sum = 0;
    for_each_permutation(key, [&](const Exponent& e) {
      std::uint64_t v = 1;
      for (std::size_t i = 0; i < e.size(); ++i) v = mulmod(v, powmod(x[i], e[i], modulus), modulus);
      orbit_sum = (orbit_sum + v) % modulus;
    });
    const std::int64_t cm = c % static_cast<std::int64_t>(modulus);
    const auto cu = static_cast<std::uint64_t>(cm < 0 ? cm + static_cast<std::int64_t>(modulus) : cm);
    total = (total + mulmod(cu, orbit_sum, modulus)) % modulus;
  }
  return total;
}

namespace {

struct TableauFiller {
  const std::vector<int>& shape;
  int nvars;
  std::vector<std::vector<int>> cells;
  Exponent content;
  SymPoly& out;

  void fill(std::size_t row, std::size_t col) {
    if (row == shape.size()) {
      if (is_dominant(content)) out.add_term(content, 1);
      return;
    }
    if (col == static_cast<std::size_t>(shape[row])) {
      fill(row + 1, 0);
      return;
    }
    int lo = 1;
    if (col > 0) lo = std::max(lo, cells[row][col - 1]);
    if (row > 0) lo = std::max(lo, cells[row - 1][col] + 1);
    // Column strictness leaves room for the rows still below this cell.
    std::size_t below = 0;
    for (std::size_t r = row + 1; r < shape.size() && static_cast<std::size_t>(shape[r]) > col; ++r) ++below;
    const int hi = nvars - static_cast<int>(below);
    for (int v = lo; v <= hi; ++v) {
      cells[row][col] = v;
      ++content[static_cast<std::size_t>(v - 1)];
      fill(row, col + 1);
      --content[static_cast<std::size_t>(v - 1)];
    }
  }
};

}  // namespace

SymPoly schur_poly(const Partition& lambda, int nvars) {
  if (lambda.length() > static_cast<std::size_t>(nvars))
    throw std::invalid_argument("schur_poly: partition has more parts than variables");
  SymPoly out(nvars);
  std::vector<std::vector<int>> cells;
  for (int p : lambda.parts()) cells.emplace_back(static_cast<std::size_t>(p), 0);
  TableauFiller filler{lambda.parts(), nvars, std::move(cells), Exponent(static_cast<std::size_t>(nvars), 0), out};
  filler.fill(0, 0);
  return out;
}

std::int64_t weyl_dimension(const Partition& lambda, int nvars) {
  if (lambda.length() > static_cast<std::size_t>(nvars))
    throw std::invalid_argument("weyl_dimension: partition has more parts than variables");
  const auto l = lambda.padded(static_cast<std::size_t>(nvars));
  // Accumulate num/den as reduced fractions to keep intermediates small.
  std::int64_t num = 1, den = 1;
  for (int i = 0; i < nvars; ++i) {
    for (int j = i + 1; j < nvars; ++j) {
      num *= l[static_cast<std::size_t>(i)] - l[static_cast<std::size_t>(j)] + j - i;
      den *= j - i;
      const std::int64_t g = std::gcd(num, den);
      num /= g;
      den /= g;
    }
  }
  if (den != 1) throw std::logic_error("weyl_dimension: non-integral result");
  return num;
}

SymPoly wedge2_sym_char(int d, int nvars) {
  if (d < 0) throw std::invalid_argument("wedge2_sym_char: negative degree");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < nvars; ++i)
    for (int j = i + 1; j < nvars; ++j) pairs.emplace_back(i, j);
  SymPoly out(nvars);
  Exponent e(static_cast<std::size_t>(nvars), 0);
  // Multisets of pairs of size d, as nondecreasing index sequences.
  auto rec = [&](auto&& self, std::size_t start, int left) -> void {
    if (left == 0) {
      if (is_dominant(e)) out.add_term(e, 1);
      return;
    }
    for (std::size_t p = start; p < pairs.size(); ++p) {
      ++e[static_cast<std::size_t>(pairs[p].first)];
      ++e[static_cast<std::size_t>(pairs[p].second)];
      self(self, p, left - 1);
      --e[static_cast<std::size_t>(pairs[p].first)];
      --e[static_cast<std::size_t>(pairs[p].second)];
    }
  };
  rec(rec, 0, d);
  return out;
}

SymPoly sym_char(int k, int nvars) {
  if (k < 0) throw std::invalid_argument("sym_char: negative degree");
  SymPoly out(nvars);
  for (const auto& gamma : partitions_of(k, static_cast<std::size_t>(nvars)))
    out.add_term(gamma.padded(static_cast<std::size_t>(nvars)), 1);
  return out;
}

SchurDecomposition decompose_schur(const SymPoly& p) {
  SymPoly rest = p;
  SchurDecomposition out;
  while (!rest.is_zero()) {
    const std::int64_t c = rest.terms().begin()->second;
    if (c < 0) throw std::domain_error("decompose_schur: negative leading coefficient, not a character");
    Partition lambda(rest.terms().begin()->first);
    rest -= schur_poly(lambda, p.nvars()).scaled(c);
    out.push_back({std::move(lambda), c});
  }
  return out;
}

SymPoly recompose(const SchurDecomposition& dec, int nvars) {
  SymPoly out(nvars);
  for (const auto& t : dec) out += schur_poly(t.lambda, nvars).scaled(t.mult);
  return out;
}

std::vector<Partition> pieri(const Partition& lambda, int k, int nvars) {
  if (lambda.length() > static_cast<std::size_t>(nvars))
    throw std::invalid_argument("pieri: partition has more parts than variables");
  if (k < 0) throw std::invalid_argument("pieri: negative strip size");
  std::vector<Partition> out;
  std::vector<int> mu(static_cast<std::size_t>(nvars), 0);
  auto rec = [&](auto&& self, std::size_t row, int left) -> void {
    if (row == mu.size()) {
      if (left == 0) out.emplace_back(mu);
      return;
    }
    const int lo = lambda[row];
    const int hi = row == 0 ? lambda[0] + left : std::min(lambda[row - 1], lambda[row] + left);
    for (int v = hi; v >= lo; --v) {
      mu[row] = v;
      self(self, row + 1, left - (v - lo));
    }
  };
  rec(rec, 0, k);
  return out;
}

std::vector<Partition> schur_index(int n, int d, int d_prime) {
  if (n < 1) throw std::invalid_argument("schur_index: n must be positive");
  if (d < 0 || d > d_prime) throw std::invalid_argument("schur_index: need 0 <= d <= d'");
  std::vector<Partition> out;
  for (auto& lambda : partitions_of(d + d_prime, static_cast<std::size_t>(2 * n))) {
    int odd = 0, even = 0;
    for (std::size_t i = 0; i < lambda.length(); ++i) (i % 2 == 0 ? odd : even) += lambda[i];
    if (odd == d_prime && even == d) out.push_back(std::move(lambda));
  }
  return out;
}

SchurIndexReport schur_index_report(int n, int d, int d_prime) {
  SchurIndexReport r;
  r.index = schur_index(n, d, d_prime);
  const int nv = 2 * n;
  r.decomposition = decompose_schur(wedge2_sym_char(d, nv) * sym_char(d_prime - d, nv));
  r.holds = r.decomposition.size() == r.index.size();
  for (std::size_t i = 0; r.holds && i < r.index.size(); ++i)
    r.holds = r.decomposition[i].lambda == r.index[i] && r.decomposition[i].mult == 1;
  return r;
}

bool verify_multiplicity_free(int n, int d, int d_prime) { return schur_index_report(n, d, d_prime).holds; }

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t multiplicity_free_dimension(int n, int d, int d_prime) {
  const std::int64_t wedge = binomial(2 * n, 2);
  const std::int64_t k = d_prime - d;
  // C(w+d-1, d) counts degree-d monomials in w variables; at w = 0 only d = 0 survives.
  const std::int64_t sym_wedge = wedge == 0 ? (d == 0 ? 1 : 0) : binomial(wedge + d - 1, d);
  return sym_wedge * binomial(2 * n + k - 1, k);
}

Partition f_map(const Partition& lambda, int n, int d, int d_prime) {
  const auto index = schur_index(n, d, d_prime);
  if (std::find(index.begin(), index.end(), lambda) == index.end())
    throw std::invalid_argument("f_map: partition not in the index set");
  std::vector<int> mu;
  for (int i = 0; i < n; ++i) {
    const int e = lambda[static_cast<std::size_t>(2 * i + 1)];
    mu.push_back(e);
    mu.push_back(e);
  }
  return Partition(std::move(mu));
}

bool verify_f_map_fibers(int n, int d, int d_prime) {
  const auto index = schur_index(n, d, d_prime);
  const std::set<Partition> index_set(index.begin(), index.end());
  std::size_t covered = 0;
  for (const auto& mu : schur_index(n, d, d)) {
    std::set<Partition> fiber;
    for (const auto& lambda : index)
      if (f_map(lambda, n, d, d_prime) == mu) fiber.insert(lambda);
    std::set<Partition> strip;
    for (auto& nu : pieri(mu, d_prime - d, 2 * n))
      if (index_set.count(nu)) strip.insert(std::move(nu));
    if (strip != fiber) return false;
    covered += fiber.size();
  }
  return covered == index.size();
}

std::vector<Coweight> antidominant_index(int n, int d, int d_prime) {
  if (n < 1) throw std::invalid_argument("antidominant_index: n must be positive");
  if (d < 0 || d > d_prime) throw std::invalid_argument("antidominant_index: need 0 <= d <= d'");
  std::vector<Coweight> out;
  std::vector<int> cur(static_cast<std::size_t>(2 * n), 0);
  // Weakly increasing nonnegative sequences, built left to right.
  auto rec = [&](auto&& self, std::size_t pos, int floor, int odd, int even) -> void {
    if (pos == cur.size()) {
      if (odd == d && even == d_prime) out.emplace_back(cur);
      return;
    }
    const int left = d + d_prime - odd - even;
    const auto remaining = static_cast<int>(cur.size() - pos);
    for (int v = floor; v * remaining <= left; ++v) {
      cur[pos] = v;
      if (pos % 2 == 0)
        self(self, pos + 1, v, odd + v, even);
      else
        self(self, pos + 1, v, odd, even + v);
    }
  };
  rec(rec, 0, 0, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

bool verify_index_reversal(int n, int d, int d_prime) {
  const auto lhs = antidominant_index(n, d, d_prime);
  const auto rhs = schur_index(n, d, d_prime);
  const std::set<Partition> target(rhs.begin(), rhs.end());
  std::set<Partition> image;
  for (const auto& lambda : lhs) {
    std::vector<int> rev(lambda.entries().rbegin(), lambda.entries().rend());
    Partition p(std::move(rev));
    if (!target.count(p)) return false;
    image.insert(std::move(p));
  }
  return image.size() == lhs.size() && image.size() == target.size();
}

std::string decomposition_to_json(const SchurDecomposition& dec) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : dec) arr.push_back({{"lambda", t.lambda.parts()}, {"mult", t.mult}});
  return arr.dump();
}

}  // namespace linper
