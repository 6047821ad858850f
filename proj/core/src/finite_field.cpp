#include "linper/finite_field.hpp"

#include <algorithm>
#include <stdexcept>

namespace linper {

namespace {

/// Reduces `rows` in place to reduced row-echelon form and drops zero rows.
void rref(std::vector<FpVec>& rows, int ncols, int p) {
  std::size_t lead = 0;
  for (int c = 0; c < ncols && lead < rows.size(); ++c) {
    std::size_t pivot = lead;
    while (pivot < rows.size() && rows[pivot][static_cast<std::size_t>(c)] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[lead], rows[pivot]);
    const int inv = inv_mod_p(rows[lead][static_cast<std::size_t>(c)], p);
    for (auto& x : rows[lead]) x = (x * inv) % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead) continue;
      const int f = rows[r][static_cast<std::size_t>(c)];
      if (f == 0) continue;
      for (int k = 0; k < ncols; ++k) {
        const auto kk = static_cast<std::size_t>(k);
        rows[r][kk] = mod_p(rows[r][kk] - f * rows[lead][kk], p);
      }
    }
    ++lead;
  }
  rows.resize(lead);
}

}  // namespace

void require_small_prime(int p) {
  if (p != 2 && p != 3) throw std::invalid_argument("field size must be 2 or 3");
}

int mod_p(long long x, int p) {
  const long long r = x % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

int inv_mod_p(int a, int p) {
  a = mod_p(a, p);
  if (a == 0) throw std::domain_error("zero has no inverse");
  for (int b = 1; b < p; ++b)
    if ((a * b) % p == 1) return b;
  throw std::logic_error("modulus is not prime");
}

FpMatrix fp_identity(int n) {
  FpMatrix m(static_cast<std::size_t>(n), FpVec(static_cast<std::size_t>(n), 0));
  for (std::size_t i = 0; i < m.size(); ++i) m[i][i] = 1;
  return m;
}

FpMatrix fp_multiply(const FpMatrix& a, const FpMatrix& b, int p) {
  if (a.empty()) return {};
  const std::size_t inner = b.size(), cols = b.empty() ? 0 : b[0].size();
  if (a[0].size() != inner) throw std::invalid_argument("matrix shapes do not match");
  FpMatrix out(a.size(), FpVec(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] = (out[i][j] + a[i][k] * b[k][j]) % p;
    }
  return out;
}

FpVec fp_apply(const FpMatrix& m, const FpVec& v, int p) {
  FpVec out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    int s = 0;
    for (std::size_t j = 0; j < v.size(); ++j) s += m[i][j] * v[j];
    out[i] = s % p;
  }
  return out;
}

int fp_rank(FpMatrix m, int p) {
  if (m.empty()) return 0;
  rref(m, static_cast<int>(m[0].size()), p);
  return static_cast<int>(m.size());
}

std::vector<FpVec> fp_nullspace(FpMatrix a, int p) {
  if (a.empty()) return {};
  const int ncols = static_cast<int>(a[0].size());
  rref(a, ncols, p);
  std::vector<int> pivot_col;
  for (const auto& row : a)
    pivot_col.push_back(static_cast<int>(std::find_if(row.begin(), row.end(), [](int x) { return x != 0; }) - row.begin()));
  std::vector<FpVec> basis;
  for (int free = 0; free < ncols; ++free) {
    if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) continue;
    FpVec v(static_cast<std::size_t>(ncols), 0);
    v[static_cast<std::size_t>(free)] = 1;
    for (std::size_t r = 0; r < a.size(); ++r)
      v[static_cast<std::size_t>(pivot_col[r])] = mod_p(-a[r][static_cast<std::size_t>(free)], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<FpVec> fp_all_vectors(int n, int p) {
  std::vector<FpVec> out;
  FpVec v(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(v);
    int i = n - 1;
    while (i >= 0 && v[static_cast<std::size_t>(i)] == p - 1) v[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++v[static_cast<std::size_t>(i)];
  }
  return out;
}

Subspace Subspace::span(int n, int p, const std::vector<FpVec>& vectors) {
  Subspace s(n, p);
  for (const auto& v : vectors) {
    if (static_cast<int>(v.size()) != n) throw std::invalid_argument("vector has wrong length");
    FpVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = mod_p(v[i], p);
    s.rows_.push_back(std::move(r));
  }
  rref(s.rows_, n, p);
  return s;
}

bool Subspace::contains(const FpVec& v) const { return with(v).dim() == dim(); }

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const FpVec& v) { return contains(v); });
}

Subspace Subspace::with(const FpVec& v) const {
  auto vectors = rows_;
  vectors.push_back(v);
  return span(n_, p_, vectors);
}

Subspace Subspace::image(const FpMatrix& m) const {
  std::vector<FpVec> vectors;
  for (const auto& r : rows_) vectors.push_back(fp_apply(m, r, p_));
  return span(n_, p_, vectors);
}

bool Subspace::is_stable(const FpMatrix& m) const {
  return std::all_of(rows_.begin(), rows_.end(), [&](const FpVec& r) { return contains(fp_apply(m, r, p_)); });
}

std::vector<Subspace> all_subspaces(int n, int p) {
  require_small_prime(p);
  if (n < 0) throw std::invalid_argument("negative dimension");
  const auto vectors = fp_all_vectors(n, p);
  std::vector<Subspace> layer{Subspace(n, p)};
  std::vector<Subspace> out = layer;
  for (int k = 1; k <= n; ++k) {
    std::vector<Subspace> next;
    for (const auto& s : layer)
      for (const auto& v : vectors)
        if (!s.contains(v)) next.push_back(s.with(v));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::vector<Flag> all_complete_flags(int n, int p) {
  require_small_prime(p);
  const auto subspaces = all_subspaces(n, p);
  std::vector<std::vector<const Subspace*>> by_dim(static_cast<std::size_t>(n) + 1);
  for (const auto& s : subspaces) by_dim[static_cast<std::size_t>(s.dim())].push_back(&s);
  std::vector<Flag> out;
  Flag cur;
  auto rec = [&](auto&& self, int k) -> void {
    if (k >= n) {
      out.push_back(cur);
      return;
    }
    for (const Subspace* s : by_dim[static_cast<std::size_t>(k)]) {
      if (!cur.empty() && !s->contains(cur.back())) continue;
      cur.push_back(*s);
      self(self, k + 1);
      cur.pop_back();
    }
  };
  if (n <= 1) return {Flag{}};
  rec(rec, 1);
  return out;
}

Flag flag_image(const Flag& flag, const FpMatrix& m) {
  Flag out;
  out.reserve(flag.size());
  for (const auto& s : flag) out.push_back(s.image(m));
  return out;
}

}  // namespace linper
