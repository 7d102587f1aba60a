#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "plethysm/common.hpp"
#include "plethysm/partitions.hpp"

namespace plethysm {

inline constexpr int kMaxGround = 64;

// Subset of {1..64}; element e is bit e-1.
class Block {
 public:
  constexpr Block() = default;
  constexpr explicit Block(std::uint64_t bits) : bits_(bits) {}
  static Block of(std::initializer_list<int> members);

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  // Smallest member (1-based); 0 when empty.
  constexpr int min_element() const noexcept {
    return bits_ ? std::countr_zero(bits_) + 1 : 0;
  }
  constexpr bool contains(int e) const noexcept { return (bits_ >> (e - 1)) & 1u; }
  std::vector<int> members() const;

  friend constexpr bool operator==(Block, Block) = default;

 private:
  std::uint64_t bits_ = 0;
};

// |a ∩ b| <= 1 without a full popcount.
constexpr bool meets_at_most_once(Block a, Block b) noexcept {
  const std::uint64_t x = a.bits() & b.bits();
  return (x & (x - 1)) == 0;
}

namespace detail {
struct RowsTag {};
struct ColumnsTag {};

// Canonical set-partition of {1..N}: blocks sorted by (size desc, min asc).
template <class Tag>
class BlockTableau {
 public:
  BlockTableau() = default;
  // Validates the disjoint-cover invariant and canonicalises the block order.
  BlockTableau(int ground_size, std::vector<Block> blocks);

  int ground_size() const noexcept { return ground_size_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  const Block& operator[](std::size_t i) const { return blocks_[i]; }

  // Block sizes in canonical order, as a partition.
  Partition block_sizes() const;

  // "1,2,3|4,5,6"
  std::string to_string() const;

  friend bool operator==(const BlockTableau&, const BlockTableau&) = default;

 protected:
  int ground_size_ = 0;
  std::vector<Block> blocks_;
};
}  // namespace detail

// h-equivalence class of fillings of a shape: its rows.
class HorizontalTableau : public detail::BlockTableau<detail::RowsTag> {
 public:
  using BlockTableau::BlockTableau;
  Partition shape() const { return block_sizes(); }
  // Parses the text form; the block sizes must match `shape`.
  static HorizontalTableau parse(const Partition& shape, std::string_view text);
};

// v-equivalence class of fillings of a shape: its columns (sizes from the conjugate).
class VerticalTableau : public detail::BlockTableau<detail::ColumnsTag> {
 public:
  using BlockTableau::BlockTableau;
  Partition shape() const { return conjugate(block_sizes()); }
  static VerticalTableau parse(const Partition& shape, std::string_view text);
};

// Raw set partitions with the given block sizes, in lexicographic order of
// canonical forms. Exposed for callers that want blocks without a tableau type.
std::vector<std::vector<Block>> enumerate_set_partitions(const Partition& sizes,
                                                         const Limits& limits = {});

std::vector<HorizontalTableau> enumerate_horizontal(const Partition& shape,
                                                    const Limits& limits = {});
std::vector<VerticalTableau> enumerate_vertical(const Partition& shape,
                                                const Limits& limits = {});

// N! / (prod lambda_i! * prod_j m_j(lambda)!)
BigInt count_horizontal(const Partition& shape);
BigInt count_vertical(const Partition& shape);
// |I_{m,n}|: dissections of {1..mn} into n blocks of size m.
BigInt count_dissections(int m, int n);

}  // namespace plethysm
