#include "cli.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "linper/coweights.hpp"
#include "linper/flagmod.hpp"
#include "linper/levi.hpp"
#include "linper/parallel.hpp"
#include "linper/rsorbits.hpp"
#include "linper/schur.hpp"
#include "linper/stratcomb.hpp"

namespace linper::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;
};

struct Report {
  std::string command;
  std::vector<Table> tables;
  std::vector<std::pair<std::string, std::string>> failures;  // statement, detail

  Table& table(std::string name, std::vector<std::string> columns) {
    tables.push_back({std::move(name), std::move(columns), {}});
    return tables.back();
  }
  void fail(std::string statement, std::string detail) { failures.emplace_back(std::move(statement), std::move(detail)); }
};

std::string cell_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void write_tsv(const Report& r, std::ostream& out) {
  bool first = true;
  for (const auto& t : r.tables) {
    if (!first) out << '\n';
    first = false;
    out << "# " << t.name << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "\t" : "") << t.columns[i];
    out << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "\t" : "") << cell_text(row[i]);
      out << '\n';
    }
  }
  for (const auto& [statement, detail] : r.failures) out << "FAIL\t" << statement << '\t' << detail << '\n';
  out << "status\t" << (r.failures.empty() ? "ok" : "failed") << '\n';
}

void write_json(const Report& r, std::ostream& out) {
  Json j;
  j["command"] = r.command;
  j["ok"] = r.failures.empty();
  Json tables = Json::object();
  for (const auto& t : r.tables) {
    Json rows = Json::array();
    for (const auto& row : t.rows) {
      Json obj = Json::object();
      for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = row[i];
      rows.push_back(std::move(obj));
    }
    tables[t.name] = std::move(rows);
  }
  j["tables"] = std::move(tables);
  Json failures = Json::array();
  for (const auto& [statement, detail] : r.failures) failures.push_back({{"statement", statement}, {"detail", detail}});
  j["failures"] = std::move(failures);
  out << j.dump(2) << '\n';
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

std::string involution_list(const std::vector<Involution>& ws) {
  std::string s;
  for (const auto& w : ws) s += (s.empty() ? "" : " ") + w.to_string();
  return s;
}

void cmd_schur(const RunConfig& c, Report& r) {
  const int n = c.params[0], d = c.params[1], dp = c.params[2];
  require(n >= 1 && n <= 4, "schur: n must be in 1..4");
  require(d >= 0 && d <= dp, "schur: need 0 <= d <= d'");
  require(dp <= 6, "schur: d' must be at most 6");
  const auto report = schur_index_report(n, d, dp);
  std::set<Partition> all(report.index.begin(), report.index.end());
  for (const auto& t : report.decomposition) all.insert(t.lambda);
  auto& t = r.table("schur_decomposition", {"n", "d", "d'", "lambda", "mult", "in_index", "match"});
  for (auto it = all.rbegin(); it != all.rend(); ++it) {
    std::int64_t mult = 0;
    for (const auto& term : report.decomposition)
      if (term.lambda == *it) mult = term.mult;
    const bool in_index = std::find(report.index.begin(), report.index.end(), *it) != report.index.end();
    const bool match = mult == (in_index ? 1 : 0);
    t.rows.push_back({n, d, dp, format_partition(*it, static_cast<std::size_t>(2 * n)), mult, in_index, match});
    if (!match)
      r.fail("multiplicity-free Schur decomposition of Sym^d(wedge^2 V) x Sym^{d'-d} V",
             "lambda=(" + format_partition(*it) + ") mult=" + std::to_string(mult));
  }
  std::int64_t dim = 0;
  for (const auto& lambda : report.index) dim += weyl_dimension(lambda, 2 * n);
  const auto expected = multiplicity_free_dimension(n, d, dp);
  r.table("dimension", {"index_dim", "expected", "match"}).rows.push_back({dim, expected, dim == expected});
  if (dim != expected) r.fail("dimension of Sym^d(wedge^2 V) x Sym^{d'-d} V", std::to_string(dim));
}

void cmd_strata(const RunConfig& c, Report& r) {
  const int d = c.params[0], dp = c.params[1];
  require(d >= 0 && d <= dp, "strata: need 0 <= d <= d'");
  require(d + dp <= 7, "strata: d + d' must be at most 7");
  const int n = d + dp;
  auto& pairs = r.table("c_pairs", {"J", "J'", "disjoint", "strata"});
  std::size_t strata_total = 0;
  for (const auto& p : enumerate_C_pairs(d, dp)) {
    std::string strata;
    if (p.disjoint) {
      const auto ws = strata_for(p.J, p.J_prime, n);
      strata_total += ws.size();
      strata = involution_list(ws);
    }
    pairs.rows.push_back({p.J, p.J_prime, p.disjoint, strata});
  }
  const auto E = enumerate_E(d, dp);
  auto& e_table = r.table("E", {"pairing", "involution"});
  for (const auto& alpha : E) e_table.rows.push_back({alpha.to_json(), alpha.to_involution().to_string()});
  auto& chi = r.table("ind_E_character", {"cycle_type", "value"});
  const auto character = ind_E_class_character(d, dp);
  for (auto it = character.rbegin(); it != character.rend(); ++it)
    chi.rows.push_back({format_partition(it->first), it->second});

  auto& checks = r.table("checks", {"check", "value", "expected", "match"});
  auto check = [&](const std::string& name, const std::string& statement, std::int64_t value, std::int64_t expected) {
    checks.rows.push_back({name, value, expected, value == expected});
    if (value != expected) r.fail(statement, name + "=" + std::to_string(value) + " expected " + std::to_string(expected));
  };
  check("|E|", "count of pairings with d pairs and d'-d singletons", static_cast<std::int64_t>(E.size()), e_count(d, dp));
  check("strata_total", "every pairing arises from exactly one disjoint stratum", static_cast<std::int64_t>(strata_total),
        static_cast<std::int64_t>(E.size()));
  check("induced_iso", "Ind_E is induced from sign x triv", verify_induced_iso(d, dp) ? 1 : 0, 1);
  for (int rank = 1; rank <= 4; ++rank)
    check("invariants_r" + std::to_string(rank), "invariants of Ind_E x W^{(x)(d+d')} equal Sym^d(wedge^2 W) x Sym^{d'-d} W",
          invariants_dim(d, dp, rank), invariants_dim_closed(d, dp, rank));
}

void cmd_flagdim(const RunConfig& c, Report& r) {
  const int dmax = c.params[0];
  require(dmax >= 0 && dmax <= c.bounds.get("margin.size"),
          "flagdim: dmax must be in 0.." + std::to_string(c.bounds.get("margin.size")) + " (raise margin.size)");
  std::vector<Partition> parts;
  for (int k = 0; k <= dmax; ++k)
    for (auto& p : partitions_of(k)) parts.push_back(std::move(p));
  auto& t = r.table("flag_margins", {"mu", "mu'", "degree", "margin", "interleaved", "gap"});
  for (const auto& mu : parts)
    for (const auto& mu_prime : parts) {
      const auto m = flag_dim_margin(mu, mu_prime);
      const auto fiber = fiber_mass(mu, mu_prime);
      const std::size_t len = std::max<std::size_t>({mu.length(), mu_prime.length(), 1});
      const auto chain = special_transposition_chain(interleave(mu, mu_prime, len));
      const bool interleaved = is_interleaved(mu, mu_prime);
      t.rows.push_back({format_partition(mu), format_partition(mu_prime), fiber.degree, m.margin, interleaved, chain.gap});
      const std::string where = "mu=(" + format_partition(mu) + ") mu'=(" + format_partition(mu_prime) + ")";
      if (m.margin > 0) r.fail("flag dimension bound -d'", where);
      if (m.equality != interleaved) r.fail("flag dimension equality iff interleaved", where);
      if (chain.gap != -m.margin || fiber.margin != m.margin) r.fail("three-way margin agreement", where);
    }
}

void cmd_fibermass(const RunConfig& c, Report& r) {
  const int d = c.params[0], dp = c.params[1];
  require(d >= 0 && d <= dp, "fibermass: need 0 <= d <= d'");
  require(dp <= c.bounds.get("fibermass.d"), "fibermass: d' must be at most " +
                                                 std::to_string(c.bounds.get("fibermass.d")) + " (raise fibermass.d)");
  const auto m = collided_fiber_mass(d, dp);
  const auto e = e_count(d, dp);
  const bool match = m.degree == -dp && m.leading == e;
  r.table("collided_fiber_mass", {"d", "d'", "degree", "leading", "|E|", "match", "mass"})
      .rows.push_back({d, dp, m.degree, m.leading, e, match, m.mass.to_string()});
  if (m.degree != -dp) r.fail("collided fiber has dimension -d'", "degree=" + std::to_string(m.degree));
  if (m.leading != e) r.fail("collided fiber top coefficient equals |E|", "leading=" + std::to_string(m.leading));
}

void cmd_orbits(const RunConfig& c, Report& r) {
  const int d = c.params[0], dp = c.params[1], q = c.params[2];
  require(q == 2 || q == 3, "orbits: q must be 2 or 3");
  require(d >= 0 && dp >= 0, "orbits: d and d' must be nonnegative");
  const int limit = c.bounds.get(q == 2 ? "orbits.q2" : "orbits.q3");
  require(d + dp <= limit, "orbits: d + d' must be at most " + std::to_string(limit) + " at q=" + std::to_string(q));
  const auto orbits = k_orbits(d, dp, q);
  const auto bar = bar_E(d, dp);
  const auto dual = static_cast<std::int64_t>(dual_bar_E(d, dp).size());
  const bool match = orbits == static_cast<std::int64_t>(bar.size()) && orbits == dual;
  r.table("orbit_counts", {"d", "d'", "q", "orbits", "barE", "dual_barE", "match"})
      .rows.push_back({d, dp, q, orbits, bar.size(), dual, match});
  auto& pairs = r.table("bar_E", {"w", "J"});
  for (const auto& p : bar) pairs.rows.push_back({p.w.to_string(), p.J});
  if (!match)
    r.fail("K-orbits on flags are classified by bar E", "orbits=" + std::to_string(orbits) +
                                                            " barE=" + std::to_string(bar.size()));
}

void cmd_levi(const RunConfig& c, Report& r) {
  const int N = c.params[0], lambda_bound = c.params[1], nu_bound = c.params[2];
  require(N >= 1 && N <= c.bounds.get("levi.N"), "levi: N must be in 1.." + std::to_string(c.bounds.get("levi.N")));
  const int cap = c.bounds.get("levi.bound");
  require(lambda_bound >= 0 && lambda_bound <= cap && nu_bound >= 0 && nu_bound <= cap,
          "levi: bounds must be in 0.." + std::to_string(cap) + " (raise levi.bound)");
  const BlockLevi L = BlockLevi::parse(c.blocks);
  require(L.rank() == N, "levi: blocks must partition {1..N}");
  const auto s = sweep_levi_inequality(L, lambda_bound, nu_bound, c.jobs);
  r.table("levi_sweep", {"blocks", "antistandard", "lambdas", "pairs", "mus", "equalities", "max_f",
                         "lambda_M_not_G", "equalities_M_not_G", "holds"})
      .rows.push_back({L.to_json(), s.antistandard, s.lambdas, s.pairs, s.mus, s.equalities, s.mus ? s.max_f : 0,
                       s.divergent_lambdas, s.divergent_equalities, s.holds()});
  for (const auto& f : s.failures) r.fail("antistandard coweight inequality and its equality case", f);
}

void cmd_selftest(const RunConfig& c, Report& r, std::ostream& err) {
  auto& t = r.table("selftest", {"id", "criterion", "status", "cases", "budget_seconds"});
  for (int id = 1; id <= kCriterionCount; ++id) {
    const auto result = run_criterion(id, c.bounds, c.jobs);
    err << result.summary_line() << '\n';
    t.rows.push_back({id, result.name, result.passed() ? "pass" : "fail", result.cases, result.budget_seconds});
    for (const auto& f : result.failures) r.fail(result.name, f);
    if (!result.within_budget()) r.fail(result.name, "runtime budget exceeded");
  }
}

}  // namespace

std::optional<int> parse_command_line(int argc, const char* const* argv, RunConfig& config, std::ostream& out,
                                      std::ostream& err) {
  CLI::App app{"Exact combinatorial verifications for linear periods and antistandard Levis", "linper"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::string format = "tsv";
  int jobs = default_jobs();
  std::vector<std::string> bounds;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
  app.add_option("--jobs", jobs, "Worker threads (default: LINPER_JOBS or hardware concurrency)")
      ->check(CLI::PositiveNumber);
  app.add_option("--bound", bounds, "Raise a sweep bound, key=value (repeatable)");
  app.add_option("--seed", config.seed, "Reserved; all algorithms are exact");

  std::vector<int> p3(3), p2(2), p1(1);
  std::string blocks;
  auto add3 = [&](const char* name, const char* help, const char* a, const char* b, const char* c) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option(a, p3[0])->required();
    sub->add_option(b, p3[1])->required();
    sub->add_option(c, p3[2])->required();
    return sub;
  };
  auto* schur = add3("schur", "Schur decomposition of Sym^d(wedge^2 V) x Sym^{d'-d} V, dim V = 2n", "n", "d", "d'");
  auto* strata = app.add_subcommand("strata", "C-pairs, the set E, strata and the Ind_E character");
  strata->add_option("d", p2[0])->required();
  strata->add_option("d'", p2[1])->required();
  auto* flagdim = app.add_subcommand("flagdim", "Flag dimension margins for all |mu|, |mu'| <= dmax");
  flagdim->add_option("dmax", p1[0])->required();
  auto* fibermass = app.add_subcommand("fibermass", "Degree and top coefficient of the collided fiber mass");
  fibermass->add_option("d", p2[0])->required();
  fibermass->add_option("d'", p2[1])->required();
  auto* orbits = add3("orbits", "K-orbits on complete flags over F_q versus bar E", "d", "d'", "q");
  auto* levi = app.add_subcommand("levi", "Coweight inequality sweep for a block Levi of GL_N");
  levi->add_option("N", p3[0])->required();
  levi->add_option("blocks", blocks, "Blocks as a JSON list, e.g. [[1,3],[2,4]]")->required();
  levi->add_option("lambda-bound", p3[1])->required();
  levi->add_option("nu-bound", p3[2])->required();
  auto* selftest = app.add_subcommand("selftest", "Run every acceptance criterion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidConfig;
  }

  if (schur->parsed()) config.command = "schur", config.params = p3;
  if (strata->parsed()) config.command = "strata", config.params = p2;
  if (flagdim->parsed()) config.command = "flagdim", config.params = p1;
  if (fibermass->parsed()) config.command = "fibermass", config.params = p2;
  if (orbits->parsed()) config.command = "orbits", config.params = p3;
  if (levi->parsed()) config.command = "levi", config.params = p3, config.blocks = blocks;
  if (selftest->parsed()) config.command = "selftest", config.params.clear();

  config.format = format == "json" ? Format::Json : Format::Tsv;
  config.jobs = jobs;
  try {
    for (const auto& b : bounds)
      if (config.bounds.set_from_string(b)) config.raised_bounds.push_back(b);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidConfig;
  }
  for (const auto& b : config.raised_bounds)
    err << "warning: bound " << b << " is above the default; runtime may grow sharply\n";
  return std::nullopt;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Report report;
  report.command = config.command;
  try {
    if (config.command == "schur") cmd_schur(config, report);
    else if (config.command == "strata") cmd_strata(config, report);
    else if (config.command == "flagdim") cmd_flagdim(config, report);
    else if (config.command == "fibermass") cmd_fibermass(config, report);
    else if (config.command == "orbits") cmd_orbits(config, report);
    else if (config.command == "levi") cmd_levi(config, report);
    else if (config.command == "selftest") cmd_selftest(config, report, err);
    else throw std::invalid_argument("unknown command: " + config.command);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidConfig;
  }
  if (config.format == Format::Json)
    write_json(report, out);
  else
    write_tsv(report, out);
  return report.failures.empty() ? kOk : kVerificationFailed;
}

}  // namespace linper::cli
