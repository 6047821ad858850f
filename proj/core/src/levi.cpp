#include "linper/levi.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "linper/parallel.hpp"

namespace linper {

BlockLevi::BlockLevi(int N, std::vector<std::vector<int>> blocks) : N_(N), blocks_(std::move(blocks)) {
  if (N < 1) throw std::invalid_argument("BlockLevi: N must be positive");
  std::vector<bool> seen(static_cast<std::size_t>(N) + 1, false);
  int covered = 0;
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("BlockLevi: empty block");
    std::sort(b.begin(), b.end());
    for (int v : b) {
      if (v < 1 || v > N || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("BlockLevi: blocks must partition {1..N}");
      seen[static_cast<std::size_t>(v)] = true;
      ++covered;
    }
  }
  if (covered != N) throw std::invalid_argument("BlockLevi: blocks must cover {1..N}");
  std::sort(blocks_.begin(), blocks_.end());
}

BlockLevi BlockLevi::parse(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("BlockLevi: cannot parse blocks: ") + e.what());
  }
  if (!j.is_array()) throw std::invalid_argument("BlockLevi: expected a list of integer lists");
  std::vector<std::vector<int>> blocks;
  int N = 0;
  for (const auto& block : j) {
    if (!block.is_array()) throw std::invalid_argument("BlockLevi: expected a list of integer lists");
    std::vector<int> b;
    for (const auto& v : block) {
      if (!v.is_number_integer()) throw std::invalid_argument("BlockLevi: labels must be integers");
      b.push_back(v.get<int>());
      N = std::max(N, b.back());
    }
    blocks.push_back(std::move(b));
  }
  return BlockLevi(N, std::move(blocks));
}

BlockLevi BlockLevi::torus(int N) {
  std::vector<std::vector<int>> blocks;
  for (int i = 1; i <= N; ++i) blocks.push_back({i});
  return BlockLevi(N, std::move(blocks));
}

BlockLevi BlockLevi::interleaved(int n) {
  std::vector<std::vector<int>> blocks(2);
  for (int i = 1; i <= 2 * n; ++i) blocks[static_cast<std::size_t>((i + 1) % 2)].push_back(i);
  return BlockLevi(2 * n, std::move(blocks));
}

std::string BlockLevi::to_json() const { return nlohmann::json(blocks_).dump(); }

std::vector<BlockLevi> all_block_levis(int N) {
  std::vector<BlockLevi> out;
  std::vector<int> label(static_cast<std::size_t>(N), 0);
  auto rec = [&](auto&& self, int i, int used) -> void {
    if (i == N) {
      std::vector<std::vector<int>> blocks(static_cast<std::size_t>(used));
      for (int k = 0; k < N; ++k) blocks[static_cast<std::size_t>(label[static_cast<std::size_t>(k)])].push_back(k + 1);
      out.emplace_back(N, std::move(blocks));
      return;
    }
    for (int b = 0; b <= used; ++b) {
      label[static_cast<std::size_t>(i)] = b;
      self(self, i + 1, std::max(used, b + 1));
    }
  };
  if (N >= 1) rec(rec, 0, 0);
  return out;
}

RhoData rho_data(const BlockLevi& L) {
  const int N = L.rank();
  std::vector<int> two_rho(static_cast<std::size_t>(N)), two_rho_M(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i) two_rho[static_cast<std::size_t>(i)] = N - 1 - 2 * i;
  for (const auto& block : L.blocks()) {
    const int b = static_cast<int>(block.size());
    for (int k = 0; k < b; ++k) two_rho_M[static_cast<std::size_t>(block[static_cast<std::size_t>(k)] - 1)] = b - 1 - 2 * k;
  }
  return {Coweight(std::move(two_rho)), Coweight(std::move(two_rho_M))};
}

bool is_antistandard(const BlockLevi& L) {
  const auto rho = rho_data(L);
  for (const auto& block : L.blocks())
    for (std::size_t k = 0; k + 1 < block.size(); ++k) {
      const auto a = static_cast<std::size_t>(block[k] - 1), b = static_cast<std::size_t>(block[k + 1] - 1);
      const int value = (rho.two_rho[a] - rho.two_rho[b]) - (rho.two_rho_M[a] - rho.two_rho_M[b]);
      if (value <= 0) return false;
    }
  return true;
}

namespace {

void require_length(const Coweight& lambda, const BlockLevi& L) {
  if (static_cast<int>(lambda.size()) != L.rank()) throw std::invalid_argument("coweight length does not match N");
}

std::vector<int> restrict_to(const Coweight& lambda, const std::vector<int>& block) {
  std::vector<int> out;
  for (int i : block) out.push_back(lambda[static_cast<std::size_t>(i - 1)]);
  return out;
}

bool prefix_dominated(const std::vector<int>& lambda, const std::vector<int>& mu) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    s += mu[i] - lambda[i];
    if (s < 0) return false;
  }
  return s == 0;
}

Coweight blockwise(const Coweight& lambda, const BlockLevi& L, const std::function<void(std::vector<int>&)>& op) {
  require_length(lambda, L);
  std::vector<int> out = lambda.entries();
  for (const auto& block : L.blocks()) {
    auto sub = restrict_to(lambda, block);
    op(sub);
    for (std::size_t k = 0; k < block.size(); ++k) out[static_cast<std::size_t>(block[k] - 1)] = sub[k];
  }
  return Coweight(std::move(out));
}

}  // namespace

bool is_G_dominant(const Coweight& lambda) {
  return std::is_sorted(lambda.begin(), lambda.end(), std::greater<>());
}

bool is_G_antidominant(const Coweight& lambda) { return std::is_sorted(lambda.begin(), lambda.end()); }

bool is_M_dominant(const Coweight& lambda, const BlockLevi& L) { return dom_M(lambda, L) == lambda; }

bool is_M_antidominant(const Coweight& lambda, const BlockLevi& L) {
  require_length(lambda, L);
  return std::all_of(L.blocks().begin(), L.blocks().end(), [&](const auto& block) {
    const auto sub = restrict_to(lambda, block);
    return std::is_sorted(sub.begin(), sub.end());
  });
}

Coweight dom_G(const Coweight& lambda) {
  std::vector<int> v = lambda.entries();
  std::sort(v.begin(), v.end(), std::greater<>());
  return Coweight(std::move(v));
}

Coweight dom_M(const Coweight& lambda, const BlockLevi& L) {
  return blockwise(lambda, L, [](std::vector<int>& v) { std::sort(v.begin(), v.end(), std::greater<>()); });
}

Coweight w0(const Coweight& lambda) {
  std::vector<int> v = lambda.entries();
  std::reverse(v.begin(), v.end());
  return Coweight(std::move(v));
}

Coweight w0_M(const Coweight& lambda, const BlockLevi& L) {
  return blockwise(lambda, L, [](std::vector<int>& v) { std::reverse(v.begin(), v.end()); });
}

bool leq_G(const Coweight& lambda, const Coweight& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("leq_G: length mismatch");
  return prefix_dominated(lambda.entries(), mu.entries());
}

bool leq_M(const Coweight& lambda, const Coweight& mu, const BlockLevi& L) {
  require_length(lambda, L);
  require_length(mu, L);
  return std::all_of(L.blocks().begin(), L.blocks().end(), [&](const auto& block) {
    return prefix_dominated(restrict_to(lambda, block), restrict_to(mu, block));
  });
}

namespace {

/// Calls fn on every vector in [lo, hi]^N with entry sum `total`.
void for_each_in_box(int N, int lo, int hi, std::int64_t total, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> v(static_cast<std::size_t>(N), lo);
  auto rec = [&](auto&& self, int i, std::int64_t remaining) -> void {
    const int left = N - i;
    if (left == 0) {
      if (remaining == 0) fn(v);
      return;
    }
    for (int x = lo; x <= hi; ++x) {
      const std::int64_t rest = remaining - x;
      if (rest < static_cast<std::int64_t>(left - 1) * lo || rest > static_cast<std::int64_t>(left - 1) * hi) continue;
      v[static_cast<std::size_t>(i)] = x;
      self(self, i + 1, rest);
    }
  };
  rec(rec, 0, total);
}

void for_each_in_cube(int N, int lo, int hi, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> v(static_cast<std::size_t>(N), lo);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == N) {
      fn(v);
      return;
    }
    for (int x = lo; x <= hi; ++x) {
      v[static_cast<std::size_t>(i)] = x;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

/// M-dominant mu in nu's box with dom_G(mu) <=_G nu.
std::vector<Coweight> candidates_below(const Coweight& nu, const BlockLevi& L) {
  std::vector<Coweight> out;
  if (nu.empty()) return out;
  const auto [lo, hi] = std::minmax_element(nu.begin(), nu.end());
  for_each_in_box(L.rank(), *lo, *hi, nu.degree(), [&](const std::vector<int>& v) {
    Coweight mu(v);
    if (is_M_dominant(mu, L) && leq_G(dom_G(mu), nu)) out.push_back(std::move(mu));
  });
  return out;
}

struct MuCheck {
  std::int64_t f = 0;
  std::int64_t rhs = 0;
  bool f_form_ok = false;
  bool rearranged_ok = false;
  bool equality = false;
  bool configuration = false;
  Coweight mu_prime;
};

MuCheck check_mu(const Coweight& lambda, const Coweight& mu, const RhoData& rho) {
  MuCheck c;
  c.mu_prime = dom_G(mu);
  c.f = pairing(mu, rho.two_rho_M) - pairing(c.mu_prime, rho.two_rho);
  c.rhs = pairing(lambda, rho.two_rho) - pairing(lambda, rho.two_rho_M);
  c.f_form_ok = c.f <= c.rhs;
  const std::int64_t lhs_rearranged = pairing(lambda, rho.two_rho_M) + pairing(mu, rho.two_rho_M);
  const std::int64_t rhs_rearranged = pairing(lambda, rho.two_rho) + pairing(c.mu_prime, rho.two_rho);
  c.rearranged_ok = lhs_rearranged <= rhs_rearranged;
  c.equality = c.f == c.rhs;
  return c;
}

std::string describe(const Coweight& lambda, const Coweight& nu, const Coweight& mu, const MuCheck& c) {
  std::ostringstream os;
  os << "lambda=(" << format_coweight(lambda) << ") nu=(" << format_coweight(nu) << ") mu=(" << format_coweight(mu)
     << ") f=" << c.f << " rhs=" << c.rhs;
  return os.str();
}

/// Appends failures for one mu; returns the check for bookkeeping.
MuCheck audit_mu(const Coweight& lambda, const Coweight& nu, const Coweight& mu, const BlockLevi& L,
                 const RhoData& rho, bool antistandard, std::vector<std::string>& failures) {
  MuCheck c = check_mu(lambda, mu, rho);
  c.configuration = is_G_antidominant(lambda) && mu == w0_M(lambda, L) && c.mu_prime == w0(lambda);
  if (!c.f_form_ok)
    failures.push_back("antistandard coweight inequality f(mu) <= <lambda, 2rho - 2rho_M> fails: " +
                       describe(lambda, nu, mu, c));
  if (c.f_form_ok != c.rearranged_ok)
    failures.push_back("rearranged inequality <lambda+mu, 2rho_M> <= <lambda+mu', 2rho> disagrees with f-form: " +
                       describe(lambda, nu, mu, c));
  if (antistandard && c.equality != c.configuration)
    failures.push_back(std::string("equality case of the coweight inequality ") +
                       (c.equality ? "attained outside" : "missed at") +
                       " the configuration lambda antidominant, mu = w0_M lambda, mu' = w0 lambda: " +
                       describe(lambda, nu, mu, c));
  return c;
}

}  // namespace

std::vector<Coweight> J_set(const Coweight& lambda, const Coweight& nu, const BlockLevi& L) {
  require_length(lambda, L);
  require_length(nu, L);
  if (!is_G_dominant(nu)) throw std::invalid_argument("J_set: nu must be dominant");
  const Coweight lambda_dom = dom_M(lambda, L);
  std::vector<Coweight> out;
  for (auto& mu : candidates_below(nu, L))
    if (leq_M(lambda_dom, mu, L)) out.push_back(std::move(mu));
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t f_val(const Coweight& mu, const BlockLevi& L) {
  require_length(mu, L);
  if (!is_M_dominant(mu, L)) throw std::invalid_argument("f_val: mu must be M-dominant");
  const auto rho = rho_data(L);
  return pairing(mu, rho.two_rho_M) - pairing(dom_G(mu), rho.two_rho);
}

LeviReport verify_levi_inequality(const Coweight& lambda, const Coweight& nu, const BlockLevi& L) {
  const auto rho = rho_data(L);
  const bool antistandard = is_antistandard(L);
  LeviReport report;
  if (!antistandard) report.notes.push_back("Levi is not antistandard; only the inequality is checked");
  for (const auto& mu : J_set(lambda, nu, L)) {
    ++report.checked;
    const MuCheck c = audit_mu(lambda, nu, mu, L, rho, antistandard, report.failures);
    if (c.equality) report.witnesses.push_back({lambda, mu, c.mu_prime, c.f, c.rhs});
  }
  if (is_M_antidominant(lambda, L) && !is_G_antidominant(lambda))
    report.notes.push_back("lambda is antidominant for M but not for G; equality witnesses: " +
                           std::to_string(report.witnesses.size()));
  report.holds = report.failures.empty();
  return report;
}

LeviSweep sweep_levi_inequality(const BlockLevi& L, int lambda_bound, int nu_bound, int jobs) {
  if (lambda_bound < 0 || nu_bound < 0) throw std::invalid_argument("sweep_levi_inequality: bounds must be nonnegative");
  const int N = L.rank();
  const auto rho = rho_data(L);
  const bool antistandard = is_antistandard(L);

  std::vector<Coweight> nus;
  for_each_in_cube(N, -nu_bound, nu_bound, [&](const std::vector<int>& v) {
    Coweight nu(v);
    if (is_G_dominant(nu)) nus.push_back(std::move(nu));
  });
  std::vector<std::vector<Coweight>> below;
  for (const auto& nu : nus) below.push_back(candidates_below(nu, L));

  std::vector<Coweight> lambdas;
  for_each_in_cube(N, -lambda_bound, lambda_bound, [&](const std::vector<int>& v) { lambdas.emplace_back(v); });

  const auto partial = parallel_map(lambdas.size(), jobs, [&](std::size_t i) {
    LeviSweep s;
    s.max_f = std::numeric_limits<std::int64_t>::min();
    const Coweight& lambda = lambdas[i];
    const Coweight lambda_dom = dom_M(lambda, L);
    const bool divergent = is_M_antidominant(lambda, L) && !is_G_antidominant(lambda);
    bool any = false;
    for (std::size_t k = 0; k < nus.size(); ++k) {
      if (nus[k].degree() != lambda.degree()) continue;
      ++s.pairs;
      for (const auto& mu : below[k]) {
        if (!leq_M(lambda_dom, mu, L)) continue;
        any = true;
        ++s.mus;
        const MuCheck c = audit_mu(lambda, nus[k], mu, L, rho, antistandard, s.failures);
        if (s.failures.size() > 50) s.failures.resize(50);
        s.max_f = std::max(s.max_f, c.f);
        if (c.equality) {
          ++s.equalities;
          if (divergent) ++s.divergent_equalities;
        }
      }
    }
    if (divergent && any) ++s.divergent_lambdas;
    return s;
  });

  LeviSweep total;
  total.levi = L;
  total.antistandard = antistandard;
  total.lambdas = lambdas.size();
  total.max_f = std::numeric_limits<std::int64_t>::min();
  for (const auto& s : partial) {
    total.pairs += s.pairs;
    total.mus += s.mus;
    total.equalities += s.equalities;
    total.divergent_lambdas += s.divergent_lambdas;
    total.divergent_equalities += s.divergent_equalities;
    if (s.mus > 0) total.max_f = std::max(total.max_f, s.max_f);
    for (const auto& f : s.failures)
      if (total.failures.size() < 50) total.failures.push_back(f);
  }
  if (total.mus == 0) total.max_f = 0;
  return total;
}

std::string levi_report_to_json(const LeviReport& report) {
  nlohmann::ordered_json j;
  j["holds"] = report.holds;
  j["checked"] = report.checked;
  j["witnesses"] = nlohmann::ordered_json::array();
  for (const auto& w : report.witnesses) {
    nlohmann::ordered_json e;
    e["lambda"] = w.lambda.entries();
    e["mu"] = w.mu.entries();
    e["mu_prime"] = w.mu_prime.entries();
    e["f"] = w.f;
    e["rhs"] = w.rhs;
    j["witnesses"].push_back(std::move(e));
  }
  j["failures"] = report.failures;
  j["notes"] = report.notes;
  return j.dump();
}

}  // namespace linper
