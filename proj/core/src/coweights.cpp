#include "linper/coweights.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace linper {

std::int64_t Coweight::degree() const {
  return std::accumulate(entries_.begin(), entries_.end(), std::int64_t{0});
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition has a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition is not weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::sorted(std::vector<int> entries) {
  std::sort(entries.begin(), entries.end(), std::greater<>());
  return Partition(std::move(entries));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::padded(std::size_t m) const {
  if (m < parts_.size()) throw std::invalid_argument("padding shorter than partition length");
  std::vector<int> out(parts_);
  out.resize(m, 0);
  return out;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> conj(static_cast<std::size_t>(parts_.front()), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
  return Partition(std::move(conj));
}

std::vector<std::pair<int, int>> Partition::value_multiplicities() const {
  std::vector<std::pair<int, int>> out;
  for (int p : parts_) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

namespace {

constexpr std::pair<LatticeClass, std::string_view> kClassNames[] = {
    {LatticeClass::Plus, "plus"},
    {LatticeClass::Minus, "minus"},
    {LatticeClass::Nonneg, "nonneg"},
    {LatticeClass::NonnegPlus, "nonneg-plus"},
    {LatticeClass::NonnegMinus, "nonneg-minus"},
    {LatticeClass::Pos, "pos"},
    {LatticeClass::NonnegPos, "nonneg-pos"},
};

bool weakly_decreasing(const Coweight& l) {
  return std::is_sorted(l.begin(), l.end(), std::greater<>());
}
bool weakly_increasing(const Coweight& l) { return std::is_sorted(l.begin(), l.end()); }
bool nonnegative(const Coweight& l) {
  return std::all_of(l.begin(), l.end(), [](int x) { return x >= 0; });
}
bool prefix_sums_nonnegative(const Coweight& l) {
  std::int64_t s = 0;
  for (int x : l) {
    s += x;
    if (s < 0) return false;
  }
  return true;
}

}  // namespace

LatticeClass parse_lattice_class(std::string_view name) {
  for (const auto& [cls, n] : kClassNames)
    if (n == name) return cls;
  throw std::invalid_argument("unknown lattice class: " + std::string(name));
}

std::string_view lattice_class_name(LatticeClass cls) {
  for (const auto& [c, n] : kClassNames)
    if (c == cls) return n;
  return "?";
}

bool classify(const Coweight& lambda, LatticeClass cls, std::optional<std::int64_t> degree) {
  if (degree && lambda.degree() != *degree) return false;
  switch (cls) {
    case LatticeClass::Plus:
      return weakly_decreasing(lambda);
    case LatticeClass::Minus:
      return weakly_increasing(lambda);
    case LatticeClass::Nonneg:
      return nonnegative(lambda);
    case LatticeClass::NonnegPlus:
      return nonnegative(lambda) && weakly_decreasing(lambda);
    case LatticeClass::NonnegMinus:
      return nonnegative(lambda) && weakly_increasing(lambda);
    case LatticeClass::Pos:
      return lambda.degree() == 0 && prefix_sums_nonnegative(lambda);
    case LatticeClass::NonnegPos:
      // a + p with a >= 0 and p in pos is exactly "all prefix sums >= 0":
      // given such lambda take a = (0, ..., 0, deg lambda).
      return prefix_sums_nonnegative(lambda);
  }
  return false;
}

std::pair<Coweight, Coweight> odd_even_split(const Coweight& lambda) {
  if (lambda.size() % 2 != 0) throw std::invalid_argument("odd_even_split needs even length");
  std::vector<int> odd, even;
  for (std::size_t i = 0; i < lambda.size(); ++i) (i % 2 == 0 ? odd : even).push_back(lambda[i]);
  return {Coweight(std::move(odd)), Coweight(std::move(even))};
}

Coweight interleave_odd_even(const Coweight& odd, const Coweight& even) {
  if (odd.size() != even.size()) throw std::invalid_argument("odd/even halves differ in length");
  std::vector<int> out;
  out.reserve(2 * odd.size());
  for (std::size_t i = 0; i < odd.size(); ++i) {
    out.push_back(odd[i]);
    out.push_back(even[i]);
  }
  return Coweight(std::move(out));
}

std::int64_t pairing(const Coweight& a, const Coweight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("pairing of vectors of different length");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::int64_t{a[i]} * b[i];
  return s;
}

std::int64_t a_n(const Coweight& lambda, int n) {
  if (n < 0 || lambda.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("a_n: length of lambda must equal n");
  std::int64_t s = 0;
  for (int i = 0; i < n; ++i) s += std::int64_t{lambda[static_cast<std::size_t>(i)]} * (n - 1 - i);
  return s;
}

namespace {
std::int64_t sum_squares_below(int n) {
  std::int64_t s = 0;
  for (std::int64_t i = 1; i < n; ++i) s += i * i;
  return s;
}
}  // namespace

std::int64_t b(int n, std::int64_t r, int g) {
  return std::int64_t{n} * r + std::int64_t{1 - g} * sum_squares_below(n);
}

std::int64_t b_closed_even(int m, std::int64_t r, int g) {
  if (m <= 0 || m % 2 != 0) throw std::invalid_argument("b_closed_even needs a positive even rank");
  const std::int64_t k = m / 2;
  return 2 * k * r + std::int64_t{1 - g} * ((2 * k - 1) * k * (4 * k - 1) / 3);
}

std::int64_t relative_dim(int n, std::int64_t d, int g) {
  const std::int64_t nn = n;
  const std::int64_t num = nn * (nn - 1) * (1 + 4 * nn);
  // n(n-1)(4n+1) is always divisible by 6.
  return nn * d - num / 6 * (g - 1);
}

RelativeDimCheck verify_relative_dim_identity(int n, std::int64_t d, std::int64_t d_prime, int g) {
  if (n < 1) throw std::invalid_argument("verify_relative_dim_identity needs n >= 1");
  RelativeDimCheck out;
  out.lhs = 2 * (relative_dim(n, d, g) + relative_dim(n, d_prime, g));
  out.rhs = b(2 * n, d + d_prime, g) + std::int64_t{n} * (g - 1);
  out.equal = out.lhs == out.rhs;
  return out;
}

std::int64_t fibration_rank(int n, std::int64_t d, std::int64_t d_prime,
                                 const Coweight& lambda, int g) {
  if (lambda.size() != static_cast<std::size_t>(2 * n))
    throw std::invalid_argument("fibration_rank: lambda must have length 2n");
  const std::int64_t nn = n;
  return nn * d + (nn - 1) * d_prime - a_n(lambda, 2 * n) - nn * (nn - 1) * (g - 1) -
         std::int64_t{4 * g - 4} * sum_squares_below(n);
}

Coweight interleave(const Partition& mu, const Partition& mu_prime, std::size_t m) {
  const auto a = mu.padded(m);
  const auto b = mu_prime.padded(m);
  std::vector<int> theta;
  theta.reserve(2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    theta.push_back(b[i]);
    theta.push_back(a[i]);
  }
  return Coweight(std::move(theta));
}

TranspositionChain special_transposition_chain(const Coweight& theta) {
  std::vector<int> xi(theta.begin(), theta.end());
  if (std::any_of(xi.begin(), xi.end(), [](int x) { return x < 0; }))
    throw std::invalid_argument("special_transposition_chain: negative entry");
  TranspositionChain out;
  for (;;) {
    auto it = std::adjacent_find(xi.begin(), xi.end(), std::less<>());
    if (it == xi.end()) break;
    const auto i = static_cast<std::size_t>(it - xi.begin());
    const std::int64_t a = std::int64_t{xi[i + 1]} - xi[i];
    std::swap(xi[i], xi[i + 1]);
    out.steps.push_back({i + 1, a});
    out.gap += a;
  }
  out.eta = Partition(std::move(xi));
  return out;
}

std::int64_t cfl_dim(const Partition& eta) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < eta.length(); ++i) s += std::int64_t{eta[i]} * static_cast<std::int64_t>(i);
  return s;
}

std::int64_t cfl_dim_literal(const Partition& eta) {
  std::int64_t s = 0;
  for (std::size_t k = 1; k <= eta.length(); ++k) {
    const auto i = static_cast<std::int64_t>(k);
    s += std::int64_t{eta[k - 1] - eta[k]} * i * (i - 1) / 2;
  }
  return s;
}

std::int64_t aut_dim(const Partition& mu) {
  std::int64_t s = 0;
  for (std::size_t k = 1; k <= mu.length(); ++k)
    s += std::int64_t{mu[k - 1]} * (2 * static_cast<std::int64_t>(k) - 1);
  return s;
}

std::int64_t aut_dim_literal(const Partition& mu) {
  std::int64_t s = 0;
  for (std::size_t k = 1; k <= mu.length(); ++k) {
    const auto i = static_cast<std::int64_t>(k);
    s += std::int64_t{mu[k - 1] - mu[k]} * i * i;
  }
  return s;
}

MarginResult flag_dim_margin(const Partition& mu, const Partition& mu_prime) {
  const std::size_t m = std::max<std::size_t>({mu.length(), mu_prime.length(), 1});
  const Coweight theta = interleave(mu, mu_prime, m);
  const Partition eta = Partition::sorted(theta.entries());
  MarginResult out;
  out.margin = cfl_dim(eta) - aut_dim(mu) - aut_dim(mu_prime) + mu_prime.size();
  out.equality = out.margin == 0;
  return out;
}

bool is_interleaved(const Partition& mu, const Partition& mu_prime) {
  const std::size_t m = std::max(mu.length(), mu_prime.length());
  for (std::size_t i = 0; i < m; ++i) {
    if (mu_prime[i] < mu[i]) return false;
    if (mu[i] < mu_prime[i + 1]) return false;
  }
  return true;
}

std::int64_t self_flag_dim(const Partition& mu) {
  std::int64_t s = 0;
  for (std::size_t k = 1; k <= mu.length(); ++k) s += std::int64_t{mu[k - 1]} * static_cast<std::int64_t>(k);
  return -s;
}

namespace {
void partitions_rec(int remaining, int max_part, std::size_t parts_left, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (parts_left == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, parts_left - 1, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int n, std::optional<std::size_t> max_parts) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  partitions_rec(n, n, max_parts.value_or(static_cast<std::size_t>(n) + 1), cur, out);
  return out;
}

std::string format_coweight(const Coweight& lambda) {
  std::ostringstream os;
  for (std::size_t i = 0; i < lambda.size(); ++i) os << (i ? "," : "") << lambda[i];
  return os.str();
}

std::string format_partition(const Partition& mu) { return format_coweight(Coweight(mu.parts())); }

std::string format_partition(const Partition& mu, std::size_t pad) {
  return format_coweight(Coweight(mu.padded(std::max(pad, mu.length()))));
}

Coweight parse_coweight(std::string_view text) {
  std::vector<int> out;
  // Surrounding parentheses are tolerated: "(1,-1)" == "1,-1".
  while (!text.empty() && (text.front() == '(' || text.front() == ' ')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ')' || text.back() == ' ')) text.remove_suffix(1);
  if (text.empty()) return Coweight{};
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size() || tok.empty())
      throw std::invalid_argument("malformed integer in coweight: '" + std::string(tok) + "'");
    out.push_back(v);
    pos = comma + 1;
  }
  return Coweight(std::move(out));
}

Partition parse_partition(std::string_view text) { return Partition(parse_coweight(text).entries()); }

}  // namespace linper
