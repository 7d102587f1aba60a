#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "plethysm/exactlinalg.hpp"
#include "plethysm/kernels.hpp"
#include "plethysm/tableaux.hpp"

namespace plethysm {

// mu ⊥ nu: every row of mu meets every column of nu in at most one element.
// Throws InvalidInput if the ground sets differ.
bool is_orthogonal(const HorizontalTableau& mu, const VerticalTableau& nu);

// Black–List entry: every |S_i ∩ T_j| equals one.
bool meets_exactly_once(const HorizontalTableau& t, const VerticalTableau& s);

// Labelled 0/1 matrix, rows bit-packed in 64-bit words.
class OrthMatrix : public RowSource {
 public:
  OrthMatrix() = default;
  OrthMatrix(std::string shape_tag, std::vector<HorizontalTableau> row_labels,
             std::vector<VerticalTableau> col_labels);

  std::size_t rows() const override { return row_labels_.size(); }
  std::size_t cols() const override { return col_labels_.size(); }
  void fill_row(std::size_t i, std::span<std::int64_t> out) const override;

  bool entry(std::size_t i, std::size_t j) const noexcept {
    return (bits_[i * words_per_row_ + j / 64] >> (j % 64)) & 1u;
  }
  void set(std::size_t i, std::size_t j, bool value) noexcept;
  // Copies a 0/1 byte row into packed row i.
  void set_row(std::size_t i, std::span<const std::uint8_t> row);
  std::size_t row_sum(std::size_t i) const noexcept;

  const std::vector<HorizontalTableau>& row_labels() const noexcept { return row_labels_; }
  const std::vector<VerticalTableau>& col_labels() const noexcept { return col_labels_; }
  const std::string& shape_tag() const noexcept { return shape_tag_; }

  // Entrywise comparison; labels are compared through their text form.
  bool same_entries(const OrthMatrix& other) const noexcept;

 private:
  std::string shape_tag_;
  std::vector<HorizontalTableau> row_labels_;
  std::vector<VerticalTableau> col_labels_;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> bits_;
};

// K_lambda, rows H_lambda, columns V_lambda, both in enumeration order.
OrthMatrix build_K(const Partition& shape, const Limits& limits = {}, Exec exec = Exec::parallel);

// M^{m,n}: rows are dissections into m blocks of size n, columns into n blocks of size m.
OrthMatrix build_M(int m, int n, const Limits& limits = {}, Exec exec = Exec::parallel);

// Rows of K_lambda computed on demand, never materialised as a whole.
class KRowStream : public RowSource {
 public:
  explicit KRowStream(const Partition& shape, const Limits& limits = {},
                      Exec exec = Exec::parallel);

  std::size_t rows() const override { return row_labels_.size(); }
  std::size_t cols() const override { return col_count_; }
  void fill_row(std::size_t i, std::span<std::int64_t> out) const override;
  void fill_row(std::size_t i, std::span<std::uint8_t> out) const;

  // Number of rows handed out so far.
  std::uint64_t rows_streamed() const noexcept { return streamed_.load(); }

 private:
  std::vector<HorizontalTableau> row_labels_;
  std::vector<std::uint64_t> col_masks_;
  std::size_t col_count_ = 0;
  std::size_t blocks_per_col_ = 0;
  Exec exec_;
  mutable std::atomic<std::uint64_t> streamed_{0};
};

enum class ExportFormat { matrix_market, dense };

// Writes `path` in the chosen format plus `path` + ".labels":
// row labels, a blank line, then column labels.
void export_matrix(const OrthMatrix& mat, const std::filesystem::path& path,
                   ExportFormat format);

}  // namespace plethysm
