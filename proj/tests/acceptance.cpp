// Acceptance run: one PASS/FAIL line per criterion, with its time budget.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "plethysm/cli.hpp"
#include "plethysm/exactlinalg.hpp"
#include "plethysm/ortho.hpp"
#include "plethysm/proofcheck.hpp"

using namespace plethysm;
using Json = nlohmann::ordered_json;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

struct CliResult {
  int code;
  std::string out;
};

CliResult invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str()};
}

std::vector<Json> json_lines(const std::string& text) {
  std::vector<Json> v;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) v.push_back(Json::parse(line));
  return v;
}

Outcome counterexample() {
  Outcome o;
  const Json count = Json::parse(invoke({"count", "--shape", "[6,2,2,1,1]"}).out)["results"][0];
  o.require(count["h_count"] == "41580", "h_count " + count["h_count"].dump());
  o.require(count["v_count"] == "27720", "v_count " + count["v_count"].dump());
  o.require(count["dominance_holds"] == true, "dominance");
  const auto check = invoke({"check", "--shape", "[6,2,2,1,1]", "--mode", "conjecture1"});
  const Json verdict = Json::parse(check.out)["results"][0];
  o.require(check.code == 2, "exit code " + std::to_string(check.code));
  o.require(verdict["verdict"] == "FAILS_BY_COUNTING", "verdict " + verdict["verdict"].dump());
  o.require(verdict["matrix_rows_built"] == 0, "matrix was built");
  return o;
}

Outcome two_row_theorem() {
  Outcome o;
  const std::size_t expected[] = {0, 0, 3, 10, 35, 126, 462};
  for (int n = 2; n <= 6; ++n) {
    const Partition shape = Partition::rectangle(2, n);
    const auto v = cli::check_shape(shape, cli::Mode::conjecture2, {});
    const BigInt formula = factorial(2 * n) / (2 * factorial(n) * factorial(n));
    const bool ok = v.rank_report && v.rank_report->rank == expected[n] && formula == expected[n] &&
                    v.h_count == formula &&
                    v.rank_report->certification == Certification::certified_full &&
                    v.verdict == cli::Verdict::full_rank;
    o.require(ok, "n=" + std::to_string(n));
  }
  o.detail = o.pass ? "ranks 3,10,35,126,462 CERTIFIED_FULL" : o.detail;
  return o;
}

Outcome black_list_bridge() {
  Outcome o;
  for (auto [m, n] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 3}}) {
    const OrthMatrix mm = build_M(m, n);
    const OrthMatrix k = build_K(Partition::rectangle(m, n));
    o.require(mm.same_entries(k), "M != K at (" + std::to_string(m) + "," + std::to_string(n) + ")");
  }
  for (int n = 2; n <= 5; ++n) {
    const OrthMatrix mm = build_M(2, n);
    const RankReport r = certified_rank(mm);
    o.require(r.certified() && BigInt(static_cast<unsigned long>(r.rank)) == count_dissections(n, 2),
              "rank M(2," + std::to_string(n) + ") = " + std::to_string(r.rank));
  }
  return o;
}

Outcome zero_filter() {
  Outcome o;
  std::size_t checked = 0;
  for (int n = 3; n <= 4; ++n) {
    const proofcheck::TwoRowContext ctx(n);
    const auto report = proofcheck::zero_filter_sweep(ctx);
    std::size_t partials = 0;
    for (int k = 1; k < n; ++k) partials += proofcheck::enumerate_partials(n, k, proofcheck::Alphabet::full).size();
    o.require(report.records.size() == partials, "sweep incomplete at n=" + std::to_string(n));
    o.require(report.passed(), std::to_string(report.failures()) + " failures at n=" + std::to_string(n));
    checked += report.records.size();
  }
  if (o.pass) o.detail = std::to_string(checked) + " partial tableaux";
  return o;
}

Outcome coefficients() {
  Outcome o;
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= n / 2; ++k)
      o.require(proofcheck::verify_coefficient_count(n, k), "n=" + std::to_string(n) + " k=" + std::to_string(k));
  return o;
}

Outcome induction() {
  Outcome o;
  for (int n = 2; n <= 5; ++n) {
    const auto report = proofcheck::verify_induction_chain(n);
    o.require(report.passed() && report.isolates_mu0, "n=" + std::to_string(n));
  }
  return o;
}

Outcome hooks() {
  Outcome o;
  std::size_t seen = 0;
  for (int n = 1; n <= 8; ++n) {
    const auto r = invoke({"scan", "--n", std::to_string(n), "--hooks-only"});
    const auto lines = json_lines(r.out);
    o.require(r.code == 0, "exit code at N=" + std::to_string(n));
    o.require(lines.size() == static_cast<std::size_t>(n), "hook count at N=" + std::to_string(n));
    for (const auto& line : lines) {
      const Json v = line["results"][0];
      o.require(v["verdict"] == "FULL_RANK", v["shape"].get<std::string>() + " " + v["verdict"].get<std::string>());
      ++seen;
    }
  }
  if (o.pass) o.detail = std::to_string(seen) + " hooks FULL_RANK";
  return o;
}

Outcome properties() {
  Outcome o;
  const auto counts = oracle::partition_counts(9);
  for (int n = 1; n <= 9; ++n) {
    const auto parts = enumerate_partitions(n);
    o.require(parts.size() == counts[n], "p(" + std::to_string(n) + ")");
    for (const auto& p : parts) {
      o.require(conjugate(conjugate(p)) == p, "involution " + p.to_string());
      if (n <= 8) {
        o.require(enumerate_horizontal(p).size() == count_horizontal(p).get_ui(), "H count " + p.to_string());
        o.require(enumerate_vertical(p).size() == count_vertical(p).get_ui(), "V count " + p.to_string());
      }
      for (const auto& q : parts)
        o.require(dominates(p, q) == dominates(conjugate(q), conjugate(p)),
                  "anti-automorphism " + p.to_string() + " " + q.to_string());
    }
  }

  oracle::Lcg rng{2024};
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t rows = 1 + rng.next() % 20;
    const std::size_t cols = 1 + rng.next() % 20;
    const auto m = oracle::random01(rng, rows, cols, 10 + static_cast<unsigned>(rng.next() % 80));
    const std::size_t exact = rank_exact(IntMatrix::from_rows(m));
    o.require(exact == oracle::rational_rank(m), "bareiss vs rational, trial " + std::to_string(trial));
    std::size_t agreed = rank_mod_p(m, kDefaultPrimes[0]);
    for (auto p : kDefaultPrimes) {
      const std::size_t r = rank_mod_p(m, p);
      o.require(r <= exact, "mod-p above exact, trial " + std::to_string(trial));
      o.require(r == agreed, "primes disagree, trial " + std::to_string(trial));
    }
    o.require(agreed == exact, "consensus below exact, trial " + std::to_string(trial));
  }

  for (int n = 1; n <= 5; ++n) {
    const OrthMatrix k = build_K(Partition::rectangle(2, n));
    const std::size_t fact = factorial(n).get_ui();
    for (std::size_t i = 0; i < k.rows(); ++i) o.require(k.row_sum(i) == fact, "row sum n=" + std::to_string(n));
  }

  const auto first = invoke({"scan", "--n", "7"});
  const auto second = invoke({"scan", "--n", "7"});
  const auto threaded = invoke({"--threads", "2", "scan", "--n", "7"});
  o.require(first.out == second.out && first.out == threaded.out, "scan output differs between runs");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "counterexample [6,2,2,1,1]", 1, counterexample},
      {2, "K(2 x n) full rank, n = 2..6", 60, two_row_theorem},
      {3, "M = K and rank M(2,n)", 30, black_list_bridge},
      {4, "zero-filter column sums, n = 3,4", 120, zero_filter},
      {5, "coefficient counts, n <= 6", 60, coefficients},
      {6, "induction chain, n = 2..5", 60, induction},
      {7, "hooks full rank, N <= 8", 60, hooks},
      {8, "property suites and scan determinism", 600, properties},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.budget_s;
    const bool ok = o.pass && in_time;
    if (!in_time) o.detail += (o.detail.empty() ? "" : "; ") + std::string("over time budget");
    std::printf("AC%d %s  %-40s %8.3fs (limit %gs)%s%s\n", c.id, ok ? "PASS" : "FAIL", c.name, secs, c.budget_s,
                o.detail.empty() ? "" : "  ", o.detail.c_str());
    failed += !ok;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
