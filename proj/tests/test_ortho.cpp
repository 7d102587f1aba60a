#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "plethysm/ortho.hpp"

using namespace plethysm;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("orthogonality examples") {
  const Partition shape({2, 2});
  const auto mu = HorizontalTableau::parse(shape, "1,2|3,4");
  CHECK(is_orthogonal(mu, VerticalTableau::parse(shape, "1,3|2,4")));
  CHECK_FALSE(is_orthogonal(mu, VerticalTableau::parse(shape, "1,2|3,4")));

  const Partition row({5});
  const auto single = HorizontalTableau::parse(row, "1,2,3,4,5");
  CHECK(is_orthogonal(single, VerticalTableau::parse(row, "1|2|3|4|5")));

  CHECK_THROWS_AS(is_orthogonal(mu, VerticalTableau::parse(row, "1|2|3|4|5")), InvalidInput);
}

TEST_CASE("K of (2,2) is J - I") {
  const auto k = build_K(Partition({2, 2}));
  REQUIRE(k.rows() == 3);
  REQUIRE(k.cols() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(k.entry(i, j) == (i != j));
}

TEST_CASE("K of a single row is [1]") {
  for (int n = 1; n <= 6; ++n) {
    const auto k = build_K(Partition({n}));
    REQUIRE(k.rows() == 1);
    REQUIRE(k.cols() == 1);
    CHECK(k.entry(0, 0));
  }
}

TEST_CASE("entries agree with the predicate and labels with enumeration") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& shape : enumerate_partitions(n)) {
      const auto k = build_K(shape);
      CHECK(k.rows() == enumerate_horizontal(shape).size());
      CHECK(k.cols() == enumerate_vertical(shape).size());
      std::size_t mismatches = 0;
      for (std::size_t i = 0; i < k.rows(); ++i)
        for (std::size_t j = 0; j < k.cols(); ++j)
          mismatches += k.entry(i, j) != is_orthogonal(k.row_labels()[i], k.col_labels()[j]);
      CHECK(mismatches == 0);
      if (shape == conjugate(shape)) CHECK(k.rows() == k.cols());
    }
}

TEST_CASE("serial and parallel construction agree") {
  for (const auto& shape : {Partition({3, 3}), Partition({4, 2, 1}), Partition({3, 2, 2, 1})}) {
    CHECK(build_K(shape, {}, Exec::serial).same_entries(build_K(shape, {}, Exec::parallel)));
  }
  CHECK(build_M(2, 4, {}, Exec::serial).same_entries(build_M(2, 4, {}, Exec::parallel)));
}

TEST_CASE("K(2xn) rows sum to n!") {
  const std::size_t fact[] = {1, 1, 2, 6, 24, 120};
  for (int n = 1; n <= 5; ++n) {
    const auto k = build_K(Partition::rectangle(2, n));
    for (std::size_t i = 0; i < k.rows(); ++i) CHECK(k.row_sum(i) == fact[n]);
  }
  const auto k23 = build_K(Partition::rectangle(2, 3));
  CHECK(k23.rows() == 10);
  CHECK(k23.cols() == 15);
}

TEST_CASE("symmetric shapes give square matrices") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& shape : enumerate_partitions(n))
      if (shape == conjugate(shape)) {
        const auto k = build_K(shape);
        CHECK(k.rows() == k.cols());
      }
}

TEST_CASE("M(m,n) equals K(m x n)") {
  CHECK(build_M(1, 4).rows() == 1);
  CHECK(build_M(1, 4).entry(0, 0));
  for (int m = 1; m <= 4; ++m)
    for (int n = m; n <= 4; ++n) {
      if (m * n > 12) continue;
      CAPTURE(m);
      CAPTURE(n);
      const auto mm = build_M(m, n);
      const auto k = build_K(Partition::rectangle(m, n));
      CHECK(mm.same_entries(k));
      CHECK(BigInt(static_cast<unsigned long>(mm.rows())) == count_dissections(n, m));
      CHECK(BigInt(static_cast<unsigned long>(mm.cols())) == count_dissections(m, n));
    }
}

TEST_CASE("K(m x n) is the transpose of K(n x m)") {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      if (m * n > 12) continue;
      const auto a = build_K(Partition::rectangle(m, n));
      const auto b = build_K(Partition::rectangle(n, m));
      REQUIRE(a.rows() == b.cols());
      REQUIRE(a.cols() == b.rows());
      // Rows of one are columns of the other; match them through block sets.
      std::map<std::string, std::size_t> b_row, b_col;
      for (std::size_t i = 0; i < b.rows(); ++i) b_row[b.row_labels()[i].to_string()] = i;
      for (std::size_t j = 0; j < b.cols(); ++j) b_col[b.col_labels()[j].to_string()] = j;
      std::vector<std::size_t> col_to_b_row(a.cols());
      for (std::size_t j = 0; j < a.cols(); ++j)
        col_to_b_row[j] = b_row.at(a.col_labels()[j].to_string());
      std::size_t mismatches = 0;
      for (std::size_t i = 0; i < a.rows(); ++i) {
        const std::size_t bj = b_col.at(a.row_labels()[i].to_string());
        for (std::size_t j = 0; j < a.cols(); ++j)
          mismatches += a.entry(i, j) != b.entry(col_to_b_row[j], bj);
      }
      CHECK(mismatches == 0);
    }
}

TEST_CASE("streamed rows match the materialised matrix") {
  const auto shape = Partition({3, 2, 1});
  const auto k = build_K(shape);
  const KRowStream stream(shape);
  REQUIRE(stream.rows() == k.rows());
  REQUIRE(stream.cols() == k.cols());
  std::vector<std::int64_t> a(k.cols()), b(k.cols());
  for (std::size_t i = 0; i < k.rows(); ++i) {
    stream.fill_row(i, std::span<std::int64_t>(a));
    k.fill_row(i, b);
    CHECK(a == b);
  }
  CHECK(stream.rows_streamed() == k.rows());
}

TEST_CASE("export formats") {
  const auto dir = std::filesystem::temp_directory_path() / "plethysm_test_export";
  std::filesystem::create_directories(dir);
  const auto k = build_K(Partition({2, 2}));

  export_matrix(k, dir / "k.mtx", ExportFormat::matrix_market);
  CHECK(slurp(dir / "k.mtx") ==
        "%%MatrixMarket matrix coordinate pattern general\n"
        "3 3 6\n1 2\n1 3\n2 1\n2 3\n3 1\n3 2\n");
  CHECK(slurp(dir / "k.mtx.labels") ==
        "1,2|3,4\n1,3|2,4\n1,4|2,3\n\n1,2|3,4\n1,3|2,4\n1,4|2,3\n");

  export_matrix(k, dir / "k.txt", ExportFormat::dense);
  CHECK(slurp(dir / "k.txt") == "011\n101\n110\n");

  try {
    export_matrix(k, dir / "missing" / "k.txt", ExportFormat::dense);
    FAIL("expected an I/O error");
  } catch (const IoError& e) {
    CHECK(e.path().find("missing") != std::string::npos);
  }
  std::filesystem::remove_all(dir);
}
