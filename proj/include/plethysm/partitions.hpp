#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "plethysm/common.hpp"

namespace plethysm {

// An integer partition: weakly decreasing positive parts, no trailing zeros.
class Partition {
 public:
  Partition() = default;
  // Throws InvalidInput unless parts is non-empty, positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  // `rows` rows of length `cols`, i.e. the shape rows x cols.
  static Partition rectangle(int rows, int cols);
  // Hook (n - r, 1^r).
  static Partition hook(int n, int r);
  // Accepts "[6,2,2,1,1]" or the rectangle sugar "2x5" (= "[5,5]").
  static Partition parse(std::string_view text);

  std::span<const int> parts() const noexcept { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  std::size_t length() const noexcept { return parts_.size(); }
  int total() const noexcept { return total_; }

  // Number of parts equal to `size`.
  int multiplicity(int size) const noexcept;
  bool is_hook() const noexcept;
  bool is_rectangle() const noexcept;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

Partition conjugate(const Partition& p);

// Prefix-sum dominance p >= q. Throws InvalidInput if the totals differ.
bool dominates(const Partition& p, const Partition& q);

// All partitions of n in reverse-lexicographic order, starting with (n).
// Throws ResourceLimit when n exceeds limits.max_partition_n.
std::vector<Partition> enumerate_partitions(int n, const Limits& limits = {});

}  // namespace plethysm
