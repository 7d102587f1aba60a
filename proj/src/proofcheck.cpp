#include "plethysm/proofcheck.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace plethysm::proofcheck {

namespace {

std::uint64_t bit(int e) { return std::uint64_t{1} << (e - 1); }

std::uint64_t prefix_mask(int n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

void require_two_row(const HorizontalTableau& mu, int n) {
  if (mu.size() != 2 || mu[0].size() != n || mu[1].size() != n)
    throw InvalidInput("expected a horizontal tableau of shape 2x" + std::to_string(n) + ", got " +
                       mu.to_string());
}

}  // namespace

PartialTableau::PartialTableau(int n, std::vector<std::pair<int, int>> columns)
    : n_(n), columns_(std::move(columns)) {
  if (n_ < 1 || 2 * n_ > kMaxGround) throw InvalidInput("partial tableau needs 1 <= n <= 32");
  if (columns_.size() >= static_cast<std::size_t>(n_))
    throw InvalidInput("a partial tableau of 2x" + std::to_string(n_) + " has fewer than " +
                       std::to_string(n_) + " columns");
  for (auto& [x, y] : columns_) {
    if (x > y) std::swap(x, y);
    if (x < 1 || y > 2 * n_) throw InvalidInput("partial tableau entry out of range");
    if (x == y) throw InvalidInput("a column needs two distinct entries");
    if (support_ & (bit(x) | bit(y))) throw InvalidInput("partial tableau columns must be disjoint");
    support_ |= bit(x) | bit(y);
  }
  std::sort(columns_.begin(), columns_.end());
}

PartialTableau PartialTableau::parse(int n, std::string_view text) {
  std::vector<std::pair<int, int>> columns;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && text[i] == ' ') ++i;
  };
  auto number = [&] {
    skip();
    const std::size_t start = i;
    int v = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9' && v <= kMaxGround)
      v = v * 10 + (text[i++] - '0');
    if (i == start) throw ParseError("expected a number", start);
    return v;
  };
  skip();
  if (i == text.size()) return PartialTableau(n, {});
  for (;;) {
    const int x = number();
    skip();
    if (i >= text.size() || text[i] != ',') throw ParseError("expected ','", i);
    ++i;
    const int y = number();
    columns.emplace_back(x, y);
    skip();
    if (i == text.size()) break;
    if (text[i] != '|') throw ParseError("expected '|'", i);
    ++i;
  }
  return PartialTableau(n, std::move(columns));
}

std::string PartialTableau::to_string() const {
  std::ostringstream os;
  for (std::size_t c = 0; c < columns_.size(); ++c)
    os << (c ? "|" : "") << columns_[c].first << ',' << columns_[c].second;
  return os.str();
}

namespace {

void partials_rec(int n, int alphabet, int start, std::size_t k, std::vector<std::pair<int, int>>& cols,
                  std::uint64_t used, std::vector<PartialTableau>& out) {
  if (cols.size() == k) {
    out.emplace_back(n, cols);
    return;
  }
  for (int x = start; x <= alphabet; ++x) {
    if (used & bit(x)) continue;
    for (int y = x + 1; y <= alphabet; ++y) {
      if (used & bit(y)) continue;
      cols.emplace_back(x, y);
      partials_rec(n, alphabet, x + 1, k, cols, used | bit(x) | bit(y), out);
      cols.pop_back();
    }
  }
}

}  // namespace

std::vector<PartialTableau> enumerate_partials(int n, int k, Alphabet alphabet) {
  if (n < 1 || 2 * n > kMaxGround) throw InvalidInput("n out of range");
  const int max_k = alphabet == Alphabet::full ? n - 1 : n / 2;
  if (k < 0 || k > max_k)
    throw InvalidInput("k = " + std::to_string(k) + " out of range 0.." + std::to_string(max_k));
  const int letters = alphabet == Alphabet::full ? 2 * n : n;
  std::vector<PartialTableau> out;
  std::vector<std::pair<int, int>> cols;
  partials_rec(n, letters, 1, static_cast<std::size_t>(k), cols, 0, out);
  return out;
}

std::vector<PartialTableau> enumerate_restricted_partials(int n, int k) {
  return enumerate_partials(n, k, Alphabet::restricted);
}

TypeStat type_of(const HorizontalTableau& mu, Block reference) {
  if (mu.size() != 2 || mu[0].size() != mu[1].size())
    throw InvalidInput("type statistics need a 2 x n tableau, got " + mu.to_string());
  const int n = mu[0].size();
  if (reference.size() != n) throw InvalidInput("reference set must have n elements");
  const int first = std::popcount(mu[0].bits() & reference.bits());
  const int second = std::popcount(mu[1].bits() & reference.bits());
  return {std::max(first, second), std::min(first, second), n};
}

TypeStat type_of(const HorizontalTableau& mu) {
  if (mu.size() != 2) throw InvalidInput("type statistics need a 2 x n tableau, got " + mu.to_string());
  return type_of(mu, Block(prefix_mask(mu[0].size())));
}

HorizontalTableau mu0(int n) {
  const std::uint64_t low = prefix_mask(n);
  return HorizontalTableau(2 * n, {Block(low), Block(prefix_mask(2 * n) & ~low)});
}

bool orthogonal_to_partial(const HorizontalTableau& mu, const PartialTableau& nu_p) {
  if (mu.ground_size() != 2 * nu_p.n())
    throw InvalidInput("partial tableau for n = " + std::to_string(nu_p.n()) +
                       " against a tableau on " + std::to_string(mu.ground_size()) + " elements");
  require_two_row(mu, nu_p.n());
  const std::uint64_t row = mu[0].bits();
  for (const auto& [x, y] : nu_p.columns())
    if (((row & bit(x)) != 0) == ((row & bit(y)) != 0)) return false;
  return true;
}

bool is_subtableau(const PartialTableau& nu_p, const VerticalTableau& nu) {
  for (const auto& [x, y] : nu_p.columns()) {
    const std::uint64_t col = bit(x) | bit(y);
    if (std::none_of(nu.blocks().begin(), nu.blocks().end(),
                     [col](Block b) { return b.bits() == col; }))
      return false;
  }
  return true;
}

namespace {

// Pairs off `rest` in every possible way, calling visit(columns) per matching.
template <class Visit>
void matchings(std::uint64_t rest, std::vector<Block>& cols, Visit& visit) {
  if (!rest) {
    visit(cols);
    return;
  }
  const std::uint64_t low = rest & (~rest + 1);
  for (std::uint64_t others = rest & ~low; others; others &= others - 1) {
    const std::uint64_t partner = others & (~others + 1);
    cols.emplace_back(low | partner);
    matchings(rest & ~(low | partner), cols, visit);
    cols.pop_back();
  }
}

}  // namespace

std::uint64_t count_extensions(const HorizontalTableau& mu, const PartialTableau& nu_p) {
  const int n = nu_p.n();
  if (mu.ground_size() != 2 * n) throw InvalidInput("inconsistent ground sets");
  std::vector<Block> cols;
  for (const auto& [x, y] : nu_p.columns()) cols.emplace_back(bit(x) | bit(y));
  std::uint64_t count = 0;
  auto visit = [&](const std::vector<Block>& full) {
    if (is_orthogonal(mu, VerticalTableau(2 * n, full))) ++count;
  };
  matchings(prefix_mask(2 * n) & ~nu_p.support(), cols, visit);
  return count;
}

bool orthogonal_to_partial_brute(const HorizontalTableau& mu, const PartialTableau& nu_p) {
  return count_extensions(mu, nu_p) > 0;
}

nlohmann::ordered_json to_json(const CheckRecord& record) {
  nlohmann::ordered_json j;
  j["check"] = record.check;
  j["inputs"] = record.inputs;
  j["expected"] = record.expected;
  j["observed"] = record.observed;
  j["pass"] = record.pass;
  return j;
}

bool CheckReport::passed() const noexcept { return failures() == 0; }

std::size_t CheckReport::failures() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return !r.pass; }));
}

TwoRowContext::TwoRowContext(int n, const Limits& limits)
    : n_(n), k_(build_K(Partition::rectangle(2, n), limits)) {}

CheckRecord zero_filter_record(const TwoRowContext& ctx, const PartialTableau& nu_p) {
  if (nu_p.n() != ctx.n()) throw InvalidInput("partial tableau for a different n");
  const auto& mat = ctx.k_matrix();
  const auto& rows = ctx.horizontal();
  const auto& cols = ctx.vertical();
  std::vector<std::uint64_t> sums(rows.size(), 0);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (!is_subtableau(nu_p, cols[j])) continue;
    for (std::size_t i = 0; i < rows.size(); ++i) sums[i] += mat.entry(i, j);
  }
  const std::uint64_t scale =
      factorial(static_cast<unsigned>(ctx.n() - static_cast<int>(nu_p.k()))).get_ui();
  std::vector<std::uint64_t> expected(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    expected[i] = orthogonal_to_partial(rows[i], nu_p) ? scale : 0;

  CheckRecord r;
  r.check = "zero_filter";
  r.inputs = {{"n", ctx.n()}, {"k", nu_p.k()}, {"partial", nu_p.to_string()}};
  r.expected = expected;
  r.observed = sums;
  r.pass = expected == sums;
  return r;
}

bool zero_filter_identity(int n, const PartialTableau& nu_p, const Limits& limits) {
  return zero_filter_record(TwoRowContext(n, limits), nu_p).pass;
}

CheckReport zero_filter_sweep(const TwoRowContext& ctx) {
  CheckReport report;
  for (int k = 1; k <= ctx.n() - 1; ++k)
    for (const auto& nu_p : enumerate_partials(ctx.n(), k, Alphabet::full))
      report.records.push_back(zero_filter_record(ctx, nu_p));
  return report;
}

BigInt coefficient_c(int n, int a, int k) {
  if (k < 0 || a < 0 || a > n || k > a || k > n - a) return 0;
  const auto f = [](int x) { return factorial(static_cast<unsigned>(x)); };
  return f(n - a) * f(a) / (f(k) * f(n - a - k) * f(a - k));
}

CheckReport coefficient_count_report(const TwoRowContext& ctx, int k) {
  const int n = ctx.n();
  const auto partials = enumerate_restricted_partials(n, k);
  CheckReport report;
  for (const auto& mu : ctx.horizontal()) {
    const int a = type_of(mu).a;
    const auto count = static_cast<std::uint64_t>(std::count_if(
        partials.begin(), partials.end(), [&](const PartialTableau& p) { return orthogonal_to_partial(mu, p); }));
    const BigInt expected = coefficient_c(n, a, k);
    CheckRecord r;
    r.check = "coefficient_count";
    r.inputs = {{"n", n}, {"k", k}, {"mu", mu.to_string()}, {"type", a}, {"vanishing", a > n - k}};
    r.expected = expected.get_str();
    r.observed = std::to_string(count);
    // Beyond type n-k the formula is zero and so must the count be.
    r.pass = expected == BigInt(static_cast<unsigned long>(count)) && (a <= n - k || count == 0);
    report.records.push_back(std::move(r));
  }
  return report;
}

bool verify_coefficient_count(int n, int k, const Limits& limits) {
  return coefficient_count_report(TwoRowContext(n, limits), k).passed();
}

bool InductionReport::passed() const noexcept {
  return isolates_mu0 && !steps.empty() &&
         std::all_of(steps.begin(), steps.end(), [](const InductionStep& s) { return s.passed(); });
}

InductionReport verify_induction_chain(int n, const Limits& limits) {
  return verify_induction_chain(TwoRowContext(n, limits));
}

InductionReport verify_induction_chain(const TwoRowContext& ctx) {
  const int n = ctx.n();
  const auto& rows = ctx.horizontal();
  const auto& cols = ctx.vertical();
  const auto& mat = ctx.k_matrix();

  std::vector<int> types(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) types[i] = type_of(rows[i]).a;

  // Coefficient maps keyed by partial tableau text (texts of different k never collide).
  using Combination = std::map<std::string, std::pair<PartialTableau, Rational>>;
  auto add = [](Combination& into, const PartialTableau& p, const Rational& c) {
    auto [it, inserted] = into.try_emplace(p.to_string(), p, c);
    if (!inserted) it->second.second += c;
  };

  InductionReport report;
  report.n = n;
  std::map<int, Combination> established;
  const int first = n - n / 2;
  for (int a = first; a <= n; ++a) {
    InductionStep step;
    step.type = a;
    step.k = n - a;
    step.pivot = coefficient_c(n, a, step.k);
    step.type_size = static_cast<std::size_t>(std::count(types.begin(), types.end(), a));
    if (sgn(step.pivot) == 0) {
      report.steps.push_back(std::move(step));
      break;
    }

    // Sum over P_k of the partial indicators is sum_{a'' <= a} c_{a''}^k 1_{T_{a''}};
    // subtract the established types and divide by the pivot.
    Combination combo;
    const Rational inv_pivot = Rational(1) / Rational(step.pivot);
    for (const auto& p : enumerate_restricted_partials(n, step.k)) add(combo, p, inv_pivot);
    for (const auto& [lower, lower_combo] : established) {
      const Rational scale = -Rational(coefficient_c(n, lower, step.k)) * inv_pivot;
      if (scale == 0) continue;
      for (const auto& [key, entry] : lower_combo) add(combo, entry.first, scale * entry.second);
    }
    for (auto it = combo.begin(); it != combo.end();)
      it = it->second.second == 0 ? combo.erase(it) : std::next(it);

    // Check against the type indicator through the split-column test.
    bool partial_ok = true;
    for (std::size_t i = 0; i < rows.size() && partial_ok; ++i) {
      Rational value = 0;
      for (const auto& [key, entry] : combo)
        if (orthogonal_to_partial(rows[i], entry.first)) value += entry.second;
      partial_ok = value == Rational(types[i] == a ? 1 : 0);
    }
    step.partial_combination_ok = partial_ok;

    // Each partial indicator is 1/(n-k)! times a sum of K columns; lift and check K y.
    std::vector<Rational> y(cols.size());
    for (const auto& [key, entry] : combo) {
      const Rational share =
          entry.second / Rational(factorial(static_cast<unsigned>(n - static_cast<int>(entry.first.k()))));
      for (std::size_t j = 0; j < cols.size(); ++j)
        if (is_subtableau(entry.first, cols[j])) y[j] += share;
    }
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (y[j] != 0) support.push_back(j);
    step.column_support = support.size();
    bool column_ok = true;
    for (std::size_t i = 0; i < rows.size() && column_ok; ++i) {
      Rational value = 0;
      for (std::size_t j : support)
        if (mat.entry(i, j)) value += y[j];
      column_ok = value == Rational(types[i] == a ? 1 : 0);
    }
    step.column_combination_ok = column_ok;

    for (const auto& [key, entry] : combo) step.certificate.push_back(entry);
    established[a] = std::move(combo);
    report.steps.push_back(std::move(step));
  }

  const auto target = mu0(n);
  const bool unique = std::count(types.begin(), types.end(), n) == 1;
  const auto it = std::find(rows.begin(), rows.end(), target);
  report.mu0 = target.to_string();
  report.isolates_mu0 = unique && it != rows.end() && types[static_cast<std::size_t>(it - rows.begin())] == n &&
                        !report.steps.empty() && report.steps.back().type == n &&
                        report.steps.back().passed();
  return report;
}

nlohmann::ordered_json to_json(const InductionReport& report) {
  nlohmann::ordered_json j;
  j["n"] = report.n;
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (const auto& s : report.steps) {
    nlohmann::ordered_json step;
    step["type"] = s.type;
    step["k"] = s.k;
    step["pivot"] = s.pivot.get_str();
    step["type_size"] = s.type_size;
    nlohmann::ordered_json cert = nlohmann::ordered_json::array();
    for (const auto& [p, c] : s.certificate) cert.push_back({{"partial", p.to_string()}, {"coefficient", c.get_str()}});
    step["certificate"] = cert;
    step["column_support"] = s.column_support;
    step["partial_combination_ok"] = s.partial_combination_ok;
    step["column_combination_ok"] = s.column_combination_ok;
    step["pass"] = s.passed();
    steps.push_back(step);
  }
  j["steps"] = steps;
  j["mu0"] = report.mu0;
  j["isolates_mu0"] = report.isolates_mu0;
  j["pass"] = report.passed();
  return j;
}

}  // namespace plethysm::proofcheck
