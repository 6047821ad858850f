#include "linper/selfcheck.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <cstdio>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "linper/coweights.hpp"
#include "linper/flagmod.hpp"
#include "linper/levi.hpp"
#include "linper/parallel.hpp"
#include "linper/rsorbits.hpp"
#include "linper/schur.hpp"
#include "linper/stratcomb.hpp"

namespace linper {

Bounds::Bounds() {
  auto add = [&](const char* key, int def, int cap, const char* help) {
    entries_.emplace(key, Entry{def, def, cap, help});
  };
  add("schur.n", 3, 4, "largest n in the Schur multiplicity check");
  add("schur.d", 4, 6, "largest d' in the Schur multiplicity check");
  add("margin.size", 5, 8, "largest |mu|, |mu'| in the flag-dimension margin sweep");
  add("cfl.size", 5, 5, "largest |mu| for brute-force flag counts at q=2");
  add("aut.size", 4, 4, "largest |mu| for brute-force automorphism counts");
  add("fibermass.d", 4, 6, "largest d' for the collided fiber mass");
  add("inde.size", 6, 7, "largest d+d' for the induced-representation checks");
  add("inde.r", 4, 6, "largest dim W for the invariant-dimension identity");
  add("orbits.q2", 4, 4, "largest d+d' for orbit counts at q=2");
  add("orbits.q3", 3, 3, "largest d+d' for orbit counts at q=3");
  add("levi.N", 4, 5, "largest N in the Levi coweight sweep");
  add("levi.bound", 2, 3, "entry bound for lambda and nu in the Levi sweep");
  add("audit.n", 4, 10, "largest n in the dimension identity audit");
  add("audit.d", 5, 20, "largest d, d' in the dimension identity audit");
  add("audit.g", 3, 10, "largest genus in the dimension identity audit");
  add("reversal.n", 3, 4, "largest n in the index reversal audit");
  add("reversal.d", 4, 6, "largest d' in the index reversal audit");
}

int Bounds::get(std::string_view key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) throw std::invalid_argument("unknown bound: " + std::string(key));
  return it->second.value;
}

bool Bounds::set(std::string_view key, int value) {
  const auto it = entries_.find(key);
  if (it == entries_.end()) throw std::invalid_argument("unknown bound: " + std::string(key));
  auto& e = it->second;
  if (value < e.default_value)
    throw std::invalid_argument("bound " + std::string(key) + " cannot go below its default " +
                                std::to_string(e.default_value));
  if (value > e.cap)
    throw std::invalid_argument("bound " + std::string(key) + " is capped at " + std::to_string(e.cap));
  e.value = value;
  return value > e.default_value;
}

bool Bounds::set_from_string(std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) throw std::invalid_argument("bound must look like key=value");
  const std::string value(assignment.substr(eq + 1));
  int v = 0;
  try {
    std::size_t used = 0;
    v = std::stoi(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw std::invalid_argument("bound value is not an integer: " + value);
  }
  return set(assignment.substr(0, eq), v);
}

std::string CriterionResult::summary_line() const {
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2fs/%.0fs", seconds, budget_seconds);
  std::ostringstream os;
  os << (passed() ? "PASS" : "FAIL") << "  " << id << ' ' << name << "  cases=" << cases << "  " << timing;
  if (!within_budget()) os << " (over budget)";
  if (!detail.empty()) os << "  " << detail;
  return os.str();
}

namespace {

struct Collector {
  std::size_t cases = 0;
  std::vector<std::string> failures;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failures.size() < 100) failures.push_back(what);
  }
};

std::string pair_text(const Partition& a, const Partition& b) {
  return "(" + format_partition(a) + ") / (" + format_partition(b) + ")";
}

std::vector<Partition> partitions_up_to(int max_size) {
  std::vector<Partition> out;
  for (int k = 0; k <= max_size; ++k)
    for (auto& p : partitions_of(k)) out.push_back(std::move(p));
  return out;
}

void schur_multiplicity(Collector& c, const Bounds& b, int jobs) {
  struct Cell {
    int n, d, dp;
  };
  std::vector<Cell> cells;
  for (int n = 1; n <= b.get("schur.n"); ++n)
    for (int dp = 0; dp <= b.get("schur.d"); ++dp)
      for (int d = 0; d <= dp; ++d) cells.push_back({n, d, dp});
  const auto results = parallel_map(cells.size(), jobs, [&](std::size_t i) {
    const auto& cell = cells[i];
    const auto report = schur_index_report(cell.n, cell.d, cell.dp);
    std::int64_t dim = 0;
    for (const auto& lambda : report.index) dim += weyl_dimension(lambda, 2 * cell.n);
    return std::pair{report.holds, dim == multiplicity_free_dimension(cell.n, cell.d, cell.dp)};
  });
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& cell = cells[i];
    const std::string where = "n=" + std::to_string(cell.n) + " d=" + std::to_string(cell.d) +
                              " d'=" + std::to_string(cell.dp);
    c.expect(results[i].first, "multiplicity-free Schur decomposition of Sym^d(wedge^2 V) x Sym^{d'-d} V fails at " + where);
    c.expect(results[i].second, "dimension count of the Schur index set disagrees at " + where);
  }
}

void flag_dimension_margin(Collector& c, const Bounds& b) {
  const auto parts = partitions_up_to(b.get("margin.size"));
  std::size_t equalities = 0;
  for (const auto& mu : parts)
    for (const auto& mu_prime : parts) {
      const auto m = flag_dim_margin(mu, mu_prime);
      const bool interleaved = is_interleaved(mu, mu_prime);
      const std::size_t len = std::max<std::size_t>({mu.length(), mu_prime.length(), 1});
      const auto chain = special_transposition_chain(interleave(mu, mu_prime, len));
      const auto fiber = fiber_mass(mu, mu_prime);
      const std::string where = pair_text(mu, mu_prime);
      c.expect(m.margin <= 0, "flag dimension bound -d' exceeded at " + where);
      c.expect(m.equality == interleaved, "flag dimension equality differs from interleaving at " + where);
      c.expect(chain.gap == -m.margin, "special transposition gap differs from the margin at " + where);
      c.expect((chain.gap == 0) == interleaved, "zero gap differs from interleaving at " + where);
      c.expect(fiber.margin == m.margin, "q-degree of the exact fiber count differs from the margin at " + where);
      if (m.equality) ++equalities;
    }
  c.detail = "equalities=" + std::to_string(equalities);
}

void flag_count_recursion(Collector& c, const Bounds& b, int jobs) {
  const auto cfl_parts = partitions_up_to(b.get("cfl.size"));
  const auto cfl = parallel_map(cfl_parts.size(), jobs, [&](std::size_t i) { return cfl_count_brute(cfl_parts[i], 2); });
  for (std::size_t i = 0; i < cfl_parts.size(); ++i) {
    const auto poly = cfl_count_poly(cfl_parts[i]);
    c.expect(poly.eval(2) == cfl[i], "corner recursion flag count differs from brute force at q=2, mu=(" +
                                         format_partition(cfl_parts[i]) + ")");
    c.expect(poly.degree() == cfl_dim(cfl_parts[i]), "flag count degree differs from the flag dimension at mu=(" +
                                                         format_partition(cfl_parts[i]) + ")");
    c.expect(corner_counts_consistent(cfl_parts[i]), "corner weights do not sum to [#parts]_q at mu=(" +
                                                         format_partition(cfl_parts[i]) + ")");
  }
  const auto aut_parts = partitions_up_to(b.get("aut.size"));
  struct Cell {
    std::size_t part;
    int q;
  };
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < aut_parts.size(); ++i)
    for (int q : {2, 3}) cells.push_back({i, q});
  const auto aut = parallel_map(cells.size(), jobs, [&](std::size_t i) {
    return aut_count_brute(aut_parts[cells[i].part], cells[i].q);
  });
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& mu = aut_parts[cells[i].part];
    const auto poly = aut_order_poly(mu);
    c.expect(poly.eval(cells[i].q) == aut[i], "automorphism order formula differs from brute force at q=" +
                                                  std::to_string(cells[i].q) + ", mu=(" + format_partition(mu) + ")");
    c.expect(poly.degree() == aut_dim(mu), "automorphism order degree differs from dim Aut at mu=(" +
                                               format_partition(mu) + ")");
  }
}

void collided_mass(Collector& c, const Bounds& b) {
  std::ostringstream detail;
  for (int dp = 0; dp <= b.get("fibermass.d"); ++dp)
    for (int d = 0; d <= dp; ++d) {
      const auto m = collided_fiber_mass(d, dp);
      const auto e = e_count(d, dp);
      const std::string where = "d=" + std::to_string(d) + " d'=" + std::to_string(dp);
      c.expect(m.degree == -dp, "collided fiber dimension is not -d' at " + where);
      c.expect(m.leading == e, "collided fiber leading coefficient differs from |E| at " + where);
      if (d == dp && dp == b.get("fibermass.d")) detail << "top cell leading=" << m.leading << " |E|=" << e;
    }
  c.detail = detail.str();
}

void stratum_vectors(Collector& c) {
  std::vector<std::pair<Subset, Subset>> contributing;
  for (const auto& p : enumerate_C_pairs(2, 2))
    if (p.disjoint) contributing.emplace_back(p.J, p.J_prime);
  std::sort(contributing.begin(), contributing.end());
  const std::vector<std::pair<Subset, Subset>> expected{{{1, 2}, {3, 4}}, {{1, 3}, {2, 4}}};
  c.expect(contributing == expected, "contributing strata for d=d'=2 are not exactly {1,3}/{2,4} and {1,2}/{3,4}");
  auto names = [](const std::vector<Involution>& ws) {
    std::vector<std::string> out;
    for (const auto& w : ws) out.push_back(w.to_string());
    std::sort(out.begin(), out.end());
    return out;
  };
  c.expect(names(strata_for({1, 3}, {2, 4}, 4)) == std::vector<std::string>{"(1 2)(3 4)"},
           "strata over J={1,3}, J'={2,4} are not {(1 2)(3 4)}");
  c.expect(names(strata_for({1, 2}, {3, 4}, 4)) == std::vector<std::string>{"(1 3)(2 4)", "(1 4)(2 3)"},
           "strata over J={1,2}, J'={3,4} are not {(1 3)(2 4), (1 4)(2 3)}");
}

void induced_representation(Collector& c, const Bounds& b, int jobs) {
  struct Cell {
    int d, dp;
  };
  std::vector<Cell> cells;
  for (int total = 0; total <= b.get("inde.size"); ++total)
    for (int d = 0; 2 * d <= total; ++d) cells.push_back({d, total - d});
  const int r_max = b.get("inde.r");
  const auto results = parallel_map(cells.size(), jobs, [&](std::size_t i) {
    std::vector<bool> ok{verify_induced_iso(cells[i].d, cells[i].dp)};
    for (int r = 1; r <= r_max; ++r)
      ok.push_back(invariants_dim(cells[i].d, cells[i].dp, r) == invariants_dim_closed(cells[i].d, cells[i].dp, r));
    return ok;
  });
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::string where = "d=" + std::to_string(cells[i].d) + " d'=" + std::to_string(cells[i].dp);
    c.expect(results[i][0], "Ind_E character differs from the induced sign x triv character at " + where);
    for (int r = 1; r <= r_max; ++r)
      c.expect(results[i][static_cast<std::size_t>(r)],
               "S_I-invariants of Ind_E x W^{(x)(d+d')} differ from Sym^d(wedge^2 W) x Sym^{d'-d} W at " + where +
                   " r=" + std::to_string(r));
  }
}

void orbit_counts(Collector& c, const Bounds& b, int jobs) {
  struct Cell {
    int d, dp, q;
  };
  std::vector<Cell> cells;
  for (int q : {2, 3}) {
    const int limit = b.get(q == 2 ? "orbits.q2" : "orbits.q3");
    for (int total = 0; total <= limit; ++total)
      for (int d = 0; d <= total; ++d) cells.push_back({d, total - d, q});
  }
  const auto results = parallel_map(cells.size(), jobs, [&](std::size_t i) {
    return k_orbit_decomposition(cells[i].d, cells[i].dp, cells[i].q);
  });
  std::ostringstream detail;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& cell = cells[i];
    const auto& dec = results[i];
    const auto orbits = static_cast<std::int64_t>(dec.orbit_sizes.size());
    const auto bar = static_cast<std::int64_t>(bar_E(cell.d, cell.dp).size());
    const auto dual = static_cast<std::int64_t>(dual_bar_E(cell.d, cell.dp).size());
    std::int64_t covered = 0;
    for (auto s : dec.orbit_sizes) covered += s;
    const std::string where = "d=" + std::to_string(cell.d) + " d'=" + std::to_string(cell.dp) +
                              " q=" + std::to_string(cell.q);
    c.expect(orbits == bar, "K-orbit count " + std::to_string(orbits) + " differs from |bar E| = " +
                                std::to_string(bar) + " at " + where);
    c.expect(bar == dual, "|bar E| differs from its dual at " + where);
    c.expect(covered == flag_count(cell.d + cell.dp, cell.q) && dec.flag_count == covered,
             "orbits do not partition the flag variety at " + where);
    if (cell.q == 2 && ((cell.d == 1 && cell.dp == 1) || (cell.d == 1 && cell.dp == 2)))
      detail << "(" << cell.d << "," << cell.dp << ",2)=" << orbits << ' ';
  }
  c.expect(k_orbits(1, 1, 2) == 3, "GL_1 x GL_1 does not have 3 orbits on P^1(F_2)");
  c.expect(k_orbits(1, 2, 2) == 6, "GL_1 x GL_2 does not have 6 orbits on flags of F_2^3");
  c.detail = detail.str();
}

void levi_inequality(Collector& c, const Bounds& b, int jobs) {
  const int bound = b.get("levi.bound");
  std::size_t levis = 0, mus = 0, equalities = 0, divergent = 0, divergent_eq = 0;
  bool saw_interleaved = false;
  std::int64_t max_f = std::numeric_limits<std::int64_t>::min();
  for (int N = 1; N <= b.get("levi.N"); ++N)
    for (const auto& L : all_block_levis(N)) {
      if (!is_antistandard(L)) continue;
      ++levis;
      if (N == 4 && L == BlockLevi::interleaved(2)) saw_interleaved = true;
      const auto s = sweep_levi_inequality(L, bound, bound, jobs);
      c.cases += s.mus;
      mus += s.mus;
      equalities += s.equalities;
      divergent += s.divergent_lambdas;
      divergent_eq += s.divergent_equalities;
      if (s.mus > 0) max_f = std::max(max_f, s.max_f);
      for (const auto& f : s.failures)
        if (c.failures.size() < 100) c.failures.push_back("Levi " + L.to_json() + ": " + f);
    }
  c.expect(saw_interleaved || b.get("levi.N") < 4, "interleaved GL_2 x GL_2 in GL_4 was not swept");
  c.expect(max_f <= 0, "f(mu) > 0 for some M-dominant mu");
  c.detail = "levis=" + std::to_string(levis) + " mus=" + std::to_string(mus) + " equalities=" +
             std::to_string(equalities) + " lambda_M_not_G=" + std::to_string(divergent) +
             " (equalities there: " + std::to_string(divergent_eq) + ")";
}

void identity_audits(Collector& c, const Bounds& b) {
  for (int n = 1; n <= b.get("audit.n"); ++n)
    for (int d = 0; d <= b.get("audit.d"); ++d)
      for (int dp = 0; dp <= b.get("audit.d"); ++dp)
        for (int g = 0; g <= b.get("audit.g"); ++g)
          c.expect(verify_relative_dim_identity(n, d, dp, g).equal, "relative dimension identity fails at n=" + std::to_string(n) +
                                                       " d=" + std::to_string(d) + " d'=" + std::to_string(dp) +
                                                       " g=" + std::to_string(g));
  for (int m = 2; m <= 2 * b.get("audit.n"); m += 2)
    for (int r = 0; r <= 2 * b.get("audit.d"); ++r)
      for (int g = 0; g <= b.get("audit.g"); ++g)
        c.expect(b_closed_even(m, r, g) == linper::b(m, r, g),
                 "closed form of b(n,r) fails at n=" + std::to_string(m) + " r=" + std::to_string(r) +
                     " g=" + std::to_string(g));
  for (int n = 1; n <= b.get("reversal.n"); ++n)
    for (int dp = 0; dp <= b.get("reversal.d"); ++dp)
      for (int d = 0; d <= dp; ++d)
        c.expect(verify_index_reversal(n, d, dp), "index reversal is not a bijection at n=" + std::to_string(n) +
                                                      " d=" + std::to_string(d) + " d'=" + std::to_string(dp));
}

}  // namespace

std::string criterion_name(int id) {
  static const char* names[] = {"schur-multiplicity-free", "flag-dimension-margin", "flag-count-recursion",
                                "collided-fiber-mass",     "stratum-test-vectors",  "induced-representation",
                                "orbit-counts",            "levi-coweight-inequality", "identity-audits"};
  if (id < 1 || id > kCriterionCount) throw std::invalid_argument("unknown criterion");
  return names[id - 1];
}

CriterionResult run_criterion(int id, const Bounds& bounds, int jobs) {
  static const double budgets[] = {60, 10, 120, 30, 1, 60, 60, 300, 5};
  CriterionResult r;
  r.id = id;
  r.name = criterion_name(id);
  r.budget_seconds = budgets[id - 1];
  Collector c;
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1: schur_multiplicity(c, bounds, jobs); break;
      case 2: flag_dimension_margin(c, bounds); break;
      case 3: flag_count_recursion(c, bounds, jobs); break;
      case 4: collided_mass(c, bounds); break;
      case 5: stratum_vectors(c); break;
      case 6: induced_representation(c, bounds, jobs); break;
      case 7: orbit_counts(c, bounds, jobs); break;
      case 8: levi_inequality(c, bounds, jobs); break;
      case 9: identity_audits(c, bounds); break;
    }
  } catch (const std::exception& e) {
    c.failures.push_back(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.cases = c.cases;
  r.detail = c.detail;
  r.failures = std::move(c.failures);
  r.checks_passed = r.failures.empty();
  return r;
}

std::vector<CriterionResult> run_all_criteria(const Bounds& bounds, int jobs) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, bounds, jobs));
  return out;
}

}  // namespace linper
