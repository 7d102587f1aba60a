#include "plethysm/exactlinalg.hpp"

#include <chrono>

namespace plethysm {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw InvalidInput("row " + std::to_string(i) + " has length " +
                         std::to_string(rows[i].size()) + ", expected " + std::to_string(cols));
    std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * cols));
  }
  return m;
}

void IntMatrix::fill_row(std::size_t i, std::span<std::int64_t> out) const {
  std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_), cols_, out.begin());
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

namespace {

void check_modulus(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31))
    throw InvalidInput("modulus " + std::to_string(p) + " must be below 2^31");
  if (!is_prime(p)) throw InvalidInput("modulus " + std::to_string(p) + " is not prime");
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

}  // namespace

PrimeFieldMatrix::PrimeFieldMatrix(std::uint32_t modulus,
                                   std::vector<std::vector<std::uint64_t>> rows)
    : modulus_(modulus), rows_(std::move(rows)) {
  check_modulus(modulus_);
  cols_ = rows_.empty() ? 0 : rows_.front().size();
  for (const auto& row : rows_) {
    if (row.size() != cols_) throw InvalidInput("inconsistent row lengths");
    for (std::uint64_t v : row)
      if (v >= modulus_) throw InvalidInput("entry " + std::to_string(v) + " not reduced");
  }
}

std::size_t PrimeFieldMatrix::rank(Exec exec) const {
  ModPEchelon echelon(modulus_, cols_, exec);
  for (const auto& row : rows_) echelon.insert(row);
  return echelon.rank();
}

ModPEchelon::ModPEchelon(std::uint32_t p, std::size_t cols, Exec exec)
    : p_(p), cols_(cols), exec_(exec) {
  check_modulus(p);
}

bool ModPEchelon::insert(std::vector<std::uint64_t> row) {
  if (row.size() != cols_) throw InvalidInput("row length does not match the echelon basis");
  if (pivots_.size() == cols_) return false;
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    const std::size_t pivot = pivots_[b];
    if (row[pivot] != 0) kernels::sub_mul_mod(exec_, row, basis_[b], row[pivot], p_, pivot);
  }
  std::size_t pivot = 0;
  while (pivot < cols_ && row[pivot] == 0) ++pivot;
  if (pivot == cols_) return false;
  const std::uint64_t inv = pow_mod(row[pivot], p_ - 2, p_);
  for (std::size_t j = pivot; j < cols_; ++j) row[j] = row[j] * inv % p_;
  basis_.push_back(std::move(row));
  pivots_.push_back(pivot);
  return true;
}

std::size_t rank_mod_p(const RowSource& source, std::uint32_t p, Exec exec) {
  const std::size_t rows = source.rows();
  const std::size_t cols = source.cols();
  ModPEchelon echelon(p, cols, exec);
  const std::size_t bound = std::min(rows, cols);
  std::vector<std::int64_t> raw(cols);
  const auto mod = static_cast<std::int64_t>(p);
  for (std::size_t i = 0; i < rows && echelon.rank() < bound; ++i) {
    source.fill_row(i, raw);
    std::vector<std::uint64_t> row(cols);
    for (std::size_t j = 0; j < cols; ++j)
      row[j] = static_cast<std::uint64_t>(((raw[j] % mod) + mod) % mod);
    echelon.insert(std::move(row));
  }
  return echelon.rank();
}

std::size_t rank_mod_p(const std::vector<std::vector<std::int64_t>>& rows, std::uint32_t p) {
  check_modulus(p);
  return rank_mod_p(IntMatrix::from_rows(rows), p, Exec::serial);
}

std::size_t rank_exact(const RowSource& source, std::size_t max_exact) {
  const std::size_t rows = source.rows();
  const std::size_t cols = source.cols();
  if (rows > max_exact || cols > max_exact)
    throw ResourceLimit("exact elimination on " + std::to_string(rows) + "x" +
                        std::to_string(cols) + " exceeds the cap of " +
                        std::to_string(max_exact));

  std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
  std::vector<std::int64_t> raw(cols);
  for (std::size_t i = 0; i < rows; ++i) {
    source.fill_row(i, raw);
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = static_cast<long>(raw[j]);
  }

  // Bareiss single-step elimination with column skipping; every division is exact.
  BigInt prev = 1;
  BigInt t;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(a[pivot][c]) == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[rank], a[pivot]);
    const auto& prow = a[rank];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      auto& row = a[i];
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_mul(row[j].get_mpz_t(), prow[c].get_mpz_t(), row[j].get_mpz_t());
        mpz_mul(t.get_mpz_t(), row[c].get_mpz_t(), prow[j].get_mpz_t());
        mpz_sub(row[j].get_mpz_t(), row[j].get_mpz_t(), t.get_mpz_t());
        mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), prev.get_mpz_t());
      }
      row[c] = 0;
    }
    prev = prow[c];
    ++rank;
  }
  return rank;
}

std::string to_string(Certification c) {
  switch (c) {
    case Certification::certified_full: return "CERTIFIED_FULL";
    case Certification::certified_exact: return "CERTIFIED_EXACT";
    case Certification::mod_p_evidence: return "MOD_P_EVIDENCE";
  }
  return "?";
}

std::string to_string(RankMethod m) {
  return m == RankMethod::mod_p ? "mod_p" : "fraction_free";
}

RankReport certified_rank(const RowSource& source, const CertPolicy& policy) {
  const auto start = std::chrono::steady_clock::now();
  RankReport report;
  report.n_rows = source.rows();
  report.n_cols = source.cols();
  const std::size_t bound = std::min(report.n_rows, report.n_cols);
  auto finish = [&] {
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
  };

  std::size_t best = 0;
  for (std::uint32_t p : policy.primes) {
    const std::size_t r = rank_mod_p(source, p, policy.exec);
    report.moduli_used.push_back(p);
    best = std::max(best, r);
    if (r == bound) {
      report.rank = r;
      report.certification = Certification::certified_full;
      report.method = RankMethod::mod_p;
      return finish();
    }
  }
  if (report.n_rows <= policy.max_exact && report.n_cols <= policy.max_exact) {
    report.rank = rank_exact(source, policy.max_exact);
    report.certification = Certification::certified_exact;
    report.method = RankMethod::fraction_free;
    return finish();
  }
  report.rank = best;
  report.certification = Certification::mod_p_evidence;
  report.method = RankMethod::mod_p;
  return finish();
}

nlohmann::ordered_json to_json(const RankReport& report, bool timing) {
  nlohmann::ordered_json j;
  j["rank"] = report.rank;
  j["rows"] = report.n_rows;
  j["cols"] = report.n_cols;
  j["certification"] = to_string(report.certification);
  j["moduli_used"] = report.moduli_used;
  j["method"] = to_string(report.method);
  if (timing)
    j["elapsed_ms"] = static_cast<std::int64_t>(report.elapsed_ms + 0.5);
  else
    j["elapsed_ms"] = nullptr;
  return j;
}

}  // namespace plethysm
