#pragma once

// Data-parallel inner loops. Every parallel kernel has a serial twin with
// identical output; tests compare them and bench/ times them.

#include <cstddef>
#include <cstdint>
#include <span>

#include "plethysm/tableaux.hpp"

namespace plethysm {

enum class Exec { serial, parallel };

namespace kernels {

// Below this many columns a parallel region costs more than it saves.
inline constexpr std::size_t kParallelThreshold = 4096;

// K entry: every row block meets every column block in at most one element.
struct AtMostOnce {
  static bool test(std::span<const std::uint64_t> rows,
                   std::span<const std::uint64_t> cols) noexcept {
    for (std::uint64_t r : rows)
      for (std::uint64_t c : cols) {
        const std::uint64_t x = r & c;
        if (x & (x - 1)) return false;
      }
    return true;
  }
};

// M entry: every row block meets every column block in exactly one element.
struct ExactlyOnce {
  static bool test(std::span<const std::uint64_t> rows,
                   std::span<const std::uint64_t> cols) noexcept {
    for (std::uint64_t r : rows)
      for (std::uint64_t c : cols)
        if (std::popcount(r & c) != 1) return false;
    return true;
  }
};

// Column tableaux flattened to `blocks_per_col` masks each.
struct FlatColumns {
  std::span<const std::uint64_t> masks;
  std::size_t blocks_per_col = 0;
  std::size_t count() const noexcept {
    return blocks_per_col ? masks.size() / blocks_per_col : 0;
  }
  std::span<const std::uint64_t> column(std::size_t j) const noexcept {
    return masks.subspan(j * blocks_per_col, blocks_per_col);
  }
};

template <class Pred>
void incidence_row_serial(std::span<const std::uint64_t> row_blocks, FlatColumns cols,
                          std::span<std::uint8_t> out) {
  const std::size_t n = cols.count();
  for (std::size_t j = 0; j < n; ++j) out[j] = Pred::test(row_blocks, cols.column(j)) ? 1 : 0;
}

template <class Pred>
void incidence_row_parallel(std::span<const std::uint64_t> row_blocks, FlatColumns cols,
                            std::span<std::uint8_t> out) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(cols.count());
#pragma omp parallel for schedule(static) if (n >= static_cast<std::ptrdiff_t>(kParallelThreshold))
  for (std::ptrdiff_t j = 0; j < n; ++j)
    out[j] = Pred::test(row_blocks, cols.column(static_cast<std::size_t>(j))) ? 1 : 0;
}

template <class Pred>
void incidence_row(Exec exec, std::span<const std::uint64_t> row_blocks, FlatColumns cols,
                   std::span<std::uint8_t> out) {
  if (exec == Exec::parallel)
    incidence_row_parallel<Pred>(row_blocks, cols, out);
  else
    incidence_row_serial<Pred>(row_blocks, cols, out);
}

// target[j] = (target[j] - factor * basis[j]) mod p for j in [from, size).
// Residues are < p < 2^31, so the products fit in 64 bits.
inline void sub_mul_mod_serial(std::span<std::uint64_t> target,
                               std::span<const std::uint64_t> basis, std::uint64_t factor,
                               std::uint64_t p, std::size_t from) {
  const std::uint64_t neg = (p - factor) % p;
  for (std::size_t j = from; j < target.size(); ++j)
    target[j] = (target[j] + neg * basis[j]) % p;
}

inline void sub_mul_mod_parallel(std::span<std::uint64_t> target,
                                 std::span<const std::uint64_t> basis, std::uint64_t factor,
                                 std::uint64_t p, std::size_t from) {
  const std::uint64_t neg = (p - factor) % p;
  const std::ptrdiff_t end = static_cast<std::ptrdiff_t>(target.size());
  const std::ptrdiff_t begin = static_cast<std::ptrdiff_t>(from);
#pragma omp parallel for schedule(static) if (end - begin >= static_cast<std::ptrdiff_t>(kParallelThreshold))
  for (std::ptrdiff_t j = begin; j < end; ++j)
    target[j] = (target[j] + neg * basis[j]) % p;
}

inline void sub_mul_mod(Exec exec, std::span<std::uint64_t> target,
                        std::span<const std::uint64_t> basis, std::uint64_t factor,
                        std::uint64_t p, std::size_t from) {
  if (exec == Exec::parallel)
    sub_mul_mod_parallel(target, basis, factor, p, from);
  else
    sub_mul_mod_serial(target, basis, factor, p, from);
}

}  // namespace kernels
}  // namespace plethysm
