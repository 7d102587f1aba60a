#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "plethysm/common.hpp"
#include "plethysm/kernels.hpp"

namespace plethysm {

// Anything that can hand out matrix rows one at a time, in order.
class RowSource {
 public:
  virtual ~RowSource() = default;
  virtual std::size_t rows() const = 0;
  virtual std::size_t cols() const = 0;
  // Writes row i into out[0, cols()).
  virtual void fill_row(std::size_t i, std::span<std::int64_t> out) const = 0;
};

// Small dense integer matrix, row-major.
class IntMatrix : public RowSource {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  // Throws InvalidInput on ragged input.
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const override { return rows_; }
  std::size_t cols() const override { return cols_; }
  void fill_row(std::size_t i, std::span<std::int64_t> out) const override;

  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

bool is_prime(std::uint64_t n) noexcept;

// Matrix over GF(p), p prime and < 2^31.
class PrimeFieldMatrix {
 public:
  PrimeFieldMatrix(std::uint32_t modulus, std::vector<std::vector<std::uint64_t>> rows);

  std::uint32_t modulus() const noexcept { return modulus_; }
  const std::vector<std::vector<std::uint64_t>>& rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t rank(Exec exec = Exec::serial) const;

 private:
  std::uint32_t modulus_;
  std::size_t cols_ = 0;
  std::vector<std::vector<std::uint64_t>> rows_;
};

// Row echelon basis over GF(p) grown one row at a time. Retains at most
// min(rows, cols) normalised rows; memory is O(rank * cols).
class ModPEchelon {
 public:
  ModPEchelon(std::uint32_t p, std::size_t cols, Exec exec = Exec::parallel);

  // Reduces `row` (residues in [0, p)) in place; keeps it if independent.
  bool insert(std::vector<std::uint64_t> row);
  std::size_t rank() const noexcept { return pivots_.size(); }
  std::uint32_t modulus() const noexcept { return p_; }

 private:
  std::uint32_t p_;
  std::size_t cols_;
  Exec exec_;
  std::vector<std::vector<std::uint64_t>> basis_;
  std::vector<std::size_t> pivots_;
};

// Rank over GF(p) folding the rows of `source` into a ModPEchelon.
std::size_t rank_mod_p(const RowSource& source, std::uint32_t p, Exec exec = Exec::parallel);
// Same, for an explicit list of rows. Throws on ragged rows or non-prime p.
std::size_t rank_mod_p(const std::vector<std::vector<std::int64_t>>& rows, std::uint32_t p);

// Rank over Q by fraction-free (Bareiss) elimination on exact integers.
// Throws ResourceLimit if either dimension exceeds max_exact.
std::size_t rank_exact(const RowSource& source, std::size_t max_exact = Limits{}.max_exact);

enum class Certification { certified_full, certified_exact, mod_p_evidence };
enum class RankMethod { mod_p, fraction_free };

std::string to_string(Certification c);
std::string to_string(RankMethod m);

struct RankReport {
  std::size_t rank = 0;
  std::size_t n_rows = 0;
  std::size_t n_cols = 0;
  Certification certification = Certification::mod_p_evidence;
  std::vector<std::uint32_t> moduli_used;
  RankMethod method = RankMethod::mod_p;
  double elapsed_ms = 0.0;

  bool full_rank() const noexcept { return rank == std::min(n_rows, n_cols); }
  bool certified() const noexcept { return certification != Certification::mod_p_evidence; }
};

inline const std::vector<std::uint32_t> kDefaultPrimes = {2147483647u, 2147483629u, 2147483587u};

struct CertPolicy {
  std::vector<std::uint32_t> primes = kDefaultPrimes;
  std::size_t max_exact = Limits{}.max_exact;
  Exec exec = Exec::parallel;
};

// Full rank is certified by a single prime reaching min(rows, cols), since
// rank mod p never exceeds the rational rank. A deficiency is only certified
// by exact elimination; otherwise the best mod-p rank is reported as evidence.
RankReport certified_rank(const RowSource& source, const CertPolicy& policy = {});

// {rank, rows, cols, certification, moduli_used, method, elapsed_ms}.
// With timing off, elapsed_ms is null so reports are byte-reproducible.
nlohmann::ordered_json to_json(const RankReport& report, bool timing = true);

}  // namespace plethysm
