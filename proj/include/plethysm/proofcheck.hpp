#pragma once

// Machine checks of the 2 x n argument: partial tableaux and their extension
// counts, the column-sum identity behind "orthogonality to a partial tableau
// is a 0-filter", the type statistics with their coefficient formula, and the
// induction that isolates mu0. Brute-force references sit next to the fast
// characterisations they validate.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "plethysm/common.hpp"
#include "plethysm/ortho.hpp"
#include "plethysm/tableaux.hpp"

namespace plethysm::proofcheck {

// k disjoint 2-element columns over {1..2n}, k < n. Canonical form: each pair
// ascending, pairs ordered by first element.
class PartialTableau {
 public:
  PartialTableau(int n, std::vector<std::pair<int, int>> columns);
  // "1,4|2,6"; the empty string is the empty partial tableau.
  static PartialTableau parse(int n, std::string_view text);

  int n() const noexcept { return n_; }
  std::size_t k() const noexcept { return columns_.size(); }
  const std::vector<std::pair<int, int>>& columns() const noexcept { return columns_; }
  // Elements used by the columns.
  std::uint64_t support() const noexcept { return support_; }
  std::string to_string() const;

  friend bool operator==(const PartialTableau& a, const PartialTableau& b) {
    return a.n_ == b.n_ && a.columns_ == b.columns_;
  }

 private:
  int n_;
  std::vector<std::pair<int, int>> columns_;
  std::uint64_t support_ = 0;
};

// Full: entries from {1..2n}, 0 <= k < n. Restricted (the sets P_k): entries
// from {1..n}, 0 <= k <= n/2.
enum class Alphabet { full, restricted };

std::vector<PartialTableau> enumerate_partials(int n, int k, Alphabet alphabet);
std::vector<PartialTableau> enumerate_restricted_partials(int n, int k);

struct TypeStat {
  int a = 0;  // larger count of reference elements in one row
  int b = 0;  // smaller count
  int reference_size = 0;
};

// Counts of {1..n} in the two rows of mu, shape 2 x n. Throws on other shapes.
TypeStat type_of(const HorizontalTableau& mu);
// Same with an arbitrary n-element reference set.
TypeStat type_of(const HorizontalTableau& mu, Block reference);

// Rows {1..n} and {n+1..2n}; the unique tableau of type n.
HorizontalTableau mu0(int n);

// Split-column test: each column of nu_p has its elements in different rows.
bool orthogonal_to_partial(const HorizontalTableau& mu, const PartialTableau& nu_p);
// nu_p is a set of columns of nu.
bool is_subtableau(const PartialTableau& nu_p, const VerticalTableau& nu);

// Reference implementations: enumerate every perfect matching of the elements
// not covered by nu_p and test orthogonality of the completed tableau.
std::uint64_t count_extensions(const HorizontalTableau& mu, const PartialTableau& nu_p);
bool orthogonal_to_partial_brute(const HorizontalTableau& mu, const PartialTableau& nu_p);

// One checked identity: inputs in text form, expected and observed values.
struct CheckRecord {
  std::string check;
  nlohmann::ordered_json inputs;
  nlohmann::ordered_json expected;
  nlohmann::ordered_json observed;
  bool pass = false;
};

nlohmann::ordered_json to_json(const CheckRecord& record);

struct CheckReport {
  std::vector<CheckRecord> records;
  bool passed() const noexcept;
  std::size_t failures() const noexcept;
};

// H, V and K of the shape 2 x n, built once for sweeps.
class TwoRowContext {
 public:
  explicit TwoRowContext(int n, const Limits& limits = {});

  int n() const noexcept { return n_; }
  const OrthMatrix& k_matrix() const noexcept { return k_; }
  const std::vector<HorizontalTableau>& horizontal() const noexcept { return k_.row_labels(); }
  const std::vector<VerticalTableau>& vertical() const noexcept { return k_.col_labels(); }

 private:
  int n_;
  OrthMatrix k_;
};

// Sum over nu ⊇ nu_p of the K column at nu equals (n-k)! [mu ⊥ nu_p], for every mu.
CheckRecord zero_filter_record(const TwoRowContext& ctx, const PartialTableau& nu_p);
bool zero_filter_identity(int n, const PartialTableau& nu_p, const Limits& limits = {});
// All full-alphabet partial tableaux with 1 <= k <= n-1.
CheckReport zero_filter_sweep(const TwoRowContext& ctx);

// (n-a)! a! / (k! (n-a-k)! (a-k)!), and 0 unless 0 <= k <= min(a, n-a).
BigInt coefficient_c(int n, int a, int k);

// For every mu of 2 x n: #{nu' in P_k : mu ⊥ nu'} == c_{type(mu)}^k. One record per mu.
CheckReport coefficient_count_report(const TwoRowContext& ctx, int k);
bool verify_coefficient_count(int n, int k, const Limits& limits = {});

struct InductionStep {
  int type = 0;           // a: the type being isolated
  int k = 0;              // size of the partial tableaux summed over
  BigInt pivot;           // c_a^k, the coefficient divided out
  std::size_t type_size = 0;
  // The type-a indicator as a combination of partial-tableau indicators.
  std::vector<std::pair<PartialTableau, Rational>> certificate;
  // Number of K columns carrying a nonzero coefficient after lifting.
  std::size_t column_support = 0;
  bool partial_combination_ok = false;  // sum coeff [mu ⊥ nu'] == 1_{T_a}
  bool column_combination_ok = false;   // K y == 1_{T_a}
  bool passed() const noexcept {
    return sgn(pivot) != 0 && partial_combination_ok && column_combination_ok;
  }
};

struct InductionReport {
  int n = 0;
  std::vector<InductionStep> steps;
  std::string mu0;  // text of the isolated tableau
  bool isolates_mu0 = false;
  bool passed() const noexcept;
};

InductionReport verify_induction_chain(int n, const Limits& limits = {});
InductionReport verify_induction_chain(const TwoRowContext& ctx);
nlohmann::ordered_json to_json(const InductionReport& report);

}  // namespace plethysm::proofcheck
