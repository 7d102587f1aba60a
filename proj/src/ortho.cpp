#include "plethysm/ortho.hpp"

#include <fstream>

namespace plethysm {

namespace {

std::vector<std::uint64_t> masks_of(const std::vector<Block>& blocks) {
  std::vector<std::uint64_t> out;
  out.reserve(blocks.size());
  for (Block b : blocks) out.push_back(b.bits());
  return out;
}

template <class Tableau>
std::vector<std::uint64_t> flatten(const std::vector<Tableau>& tableaux) {
  std::vector<std::uint64_t> out;
  if (tableaux.empty()) return out;
  out.reserve(tableaux.size() * tableaux.front().size());
  for (const auto& t : tableaux)
    for (Block b : t.blocks()) out.push_back(b.bits());
  return out;
}

void check_ground(const HorizontalTableau& mu, const VerticalTableau& nu) {
  if (mu.ground_size() != nu.ground_size())
    throw InvalidInput("tableaux on different ground sets: " + std::to_string(mu.ground_size()) +
                       " vs " + std::to_string(nu.ground_size()));
}

template <class Pred>
void fill_matrix(OrthMatrix& mat, Exec exec) {
  const auto& rows = mat.row_labels();
  const auto& cols = mat.col_labels();
  if (rows.empty() || cols.empty()) return;
  const std::vector<std::uint64_t> col_masks = flatten(cols);
  const kernels::FlatColumns flat{col_masks, cols.front().size()};
  const std::ptrdiff_t n_rows = static_cast<std::ptrdiff_t>(rows.size());
  if (exec == Exec::parallel) {
#pragma omp parallel
    {
      std::vector<std::uint8_t> buf(cols.size());
#pragma omp for schedule(dynamic, 16)
      for (std::ptrdiff_t i = 0; i < n_rows; ++i) {
        const auto row_masks = masks_of(rows[static_cast<std::size_t>(i)].blocks());
        kernels::incidence_row_serial<Pred>(row_masks, flat, buf);
        mat.set_row(static_cast<std::size_t>(i), buf);
      }
    }
  } else {
    std::vector<std::uint8_t> buf(cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto row_masks = masks_of(rows[i].blocks());
      kernels::incidence_row_serial<Pred>(row_masks, flat, buf);
      mat.set_row(i, buf);
    }
  }
}

}  // namespace

bool is_orthogonal(const HorizontalTableau& mu, const VerticalTableau& nu) {
  check_ground(mu, nu);
  for (Block r : mu.blocks())
    for (Block c : nu.blocks())
      if (!meets_at_most_once(r, c)) return false;
  return true;
}

bool meets_exactly_once(const HorizontalTableau& t, const VerticalTableau& s) {
  check_ground(t, s);
  return kernels::ExactlyOnce::test(masks_of(t.blocks()), masks_of(s.blocks()));
}

OrthMatrix::OrthMatrix(std::string shape_tag, std::vector<HorizontalTableau> row_labels,
                       std::vector<VerticalTableau> col_labels)
    : shape_tag_(std::move(shape_tag)),
      row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      words_per_row_((col_labels_.size() + 63) / 64),
      bits_(row_labels_.size() * words_per_row_, 0) {}

void OrthMatrix::fill_row(std::size_t i, std::span<std::int64_t> out) const {
  for (std::size_t j = 0; j < cols(); ++j) out[j] = entry(i, j) ? 1 : 0;
}

void OrthMatrix::set(std::size_t i, std::size_t j, bool value) noexcept {
  const std::uint64_t bit = std::uint64_t{1} << (j % 64);
  auto& word = bits_[i * words_per_row_ + j / 64];
  word = value ? (word | bit) : (word & ~bit);
}

void OrthMatrix::set_row(std::size_t i, std::span<const std::uint8_t> row) {
  std::uint64_t* words = bits_.data() + i * words_per_row_;
  std::fill_n(words, words_per_row_, 0);
  for (std::size_t j = 0; j < row.size(); ++j)
    if (row[j]) words[j / 64] |= std::uint64_t{1} << (j % 64);
}

std::size_t OrthMatrix::row_sum(std::size_t i) const noexcept {
  std::size_t sum = 0;
  for (std::size_t w = 0; w < words_per_row_; ++w)
    sum += static_cast<std::size_t>(std::popcount(bits_[i * words_per_row_ + w]));
  return sum;
}

bool OrthMatrix::same_entries(const OrthMatrix& other) const noexcept {
  if (rows() != other.rows() || cols() != other.cols()) return false;
  for (std::size_t i = 0; i < rows(); ++i)
    if (row_labels_[i].to_string() != other.row_labels_[i].to_string()) return false;
  for (std::size_t j = 0; j < cols(); ++j)
    if (col_labels_[j].to_string() != other.col_labels_[j].to_string()) return false;
  return bits_ == other.bits_;
}

OrthMatrix build_K(const Partition& shape, const Limits& limits, Exec exec) {
  OrthMatrix mat("K" + shape.to_string(), enumerate_horizontal(shape, limits),
                 enumerate_vertical(shape, limits));
  fill_matrix<kernels::AtMostOnce>(mat, exec);
  return mat;
}

OrthMatrix build_M(int m, int n, const Limits& limits, Exec exec) {
  const Partition rect = Partition::rectangle(m, n);
  OrthMatrix mat("M(" + std::to_string(m) + "," + std::to_string(n) + ")",
                 enumerate_horizontal(rect, limits), enumerate_vertical(rect, limits));
  fill_matrix<kernels::ExactlyOnce>(mat, exec);
  return mat;
}

KRowStream::KRowStream(const Partition& shape, const Limits& limits, Exec exec)
    : row_labels_(enumerate_horizontal(shape, limits)), exec_(exec) {
  const auto cols = enumerate_vertical(shape, limits);
  col_count_ = cols.size();
  blocks_per_col_ = cols.empty() ? 0 : cols.front().size();
  col_masks_ = flatten(cols);
}

void KRowStream::fill_row(std::size_t i, std::span<std::uint8_t> out) const {
  const auto row_masks = masks_of(row_labels_[i].blocks());
  kernels::incidence_row<kernels::AtMostOnce>(exec_, row_masks,
                                              {col_masks_, blocks_per_col_}, out);
  streamed_.fetch_add(1);
}

void KRowStream::fill_row(std::size_t i, std::span<std::int64_t> out) const {
  std::vector<std::uint8_t> buf(col_count_);
  fill_row(i, std::span<std::uint8_t>(buf));
  std::copy(buf.begin(), buf.end(), out.begin());
}

void export_matrix(const OrthMatrix& mat, const std::filesystem::path& path,
                   ExportFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path.string(), "cannot open for writing");
  if (format == ExportFormat::matrix_market) {
    std::size_t nnz = 0;
    for (std::size_t i = 0; i < mat.rows(); ++i) nnz += mat.row_sum(i);
    out << "%%MatrixMarket matrix coordinate pattern general\n";
    out << mat.rows() << ' ' << mat.cols() << ' ' << nnz << '\n';
    for (std::size_t i = 0; i < mat.rows(); ++i)
      for (std::size_t j = 0; j < mat.cols(); ++j)
        if (mat.entry(i, j)) out << i + 1 << ' ' << j + 1 << '\n';
  } else {
    std::string line(mat.cols(), '0');
    for (std::size_t i = 0; i < mat.rows(); ++i) {
      for (std::size_t j = 0; j < mat.cols(); ++j) line[j] = mat.entry(i, j) ? '1' : '0';
      out << line << '\n';
    }
  }
  out.flush();
  if (!out) throw IoError(path.string(), "write failed");

  std::filesystem::path label_path = path;
  label_path += ".labels";
  std::ofstream labels(label_path, std::ios::binary);
  if (!labels) throw IoError(label_path.string(), "cannot open for writing");
  for (const auto& t : mat.row_labels()) labels << t.to_string() << '\n';
  labels << '\n';
  for (const auto& t : mat.col_labels()) labels << t.to_string() << '\n';
  labels.flush();
  if (!labels) throw IoError(label_path.string(), "write failed");
}

}  // namespace plethysm
