#include "plethysm/tableaux.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace plethysm {

Block Block::of(std::initializer_list<int> members) {
  std::uint64_t bits = 0;
  for (int e : members) {
    if (e < 1 || e > kMaxGround) throw InvalidInput("block member out of range");
    bits |= std::uint64_t{1} << (e - 1);
  }
  return Block(bits);
}

std::vector<int> Block::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

namespace {

bool canonical_less(Block a, Block b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a.min_element() < b.min_element();
}

std::uint64_t ground_mask(int n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

std::string join_blocks(const std::vector<Block>& blocks) {
  std::ostringstream os;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) os << '|';
    const auto members = blocks[i].members();
    for (std::size_t j = 0; j < members.size(); ++j) os << (j ? "," : "") << members[j];
  }
  return os.str();
}

std::vector<Block> parse_blocks(std::string_view text, int ground_size) {
  std::vector<Block> blocks;
  std::uint64_t bits = 0;
  bool have_member = false;
  std::size_t i = 0;
  auto flush = [&](std::size_t at) {
    if (!have_member) throw ParseError("empty block", at);
    blocks.emplace_back(bits);
    bits = 0;
    have_member = false;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = i;
      int value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > kMaxGround) break;
        ++i;
      }
      if (value < 1 || value > ground_size)
        throw ParseError("element out of range 1.." + std::to_string(ground_size), start);
      const std::uint64_t bit = std::uint64_t{1} << (value - 1);
      if (bits & bit) throw ParseError("repeated element", start);
      bits |= bit;
      have_member = true;
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      if (i < text.size() && text[i] != ',' && text[i] != '|')
        throw ParseError("expected ',' or '|'", i);
      if (i < text.size() && text[i] == ',') {
        ++i;
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
          throw ParseError("expected a number", i);
      }
    } else if (c == '|') {
      flush(i);
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  flush(text.size());
  return blocks;
}

}  // namespace

namespace detail {

template <class Tag>
BlockTableau<Tag>::BlockTableau(int ground_size, std::vector<Block> blocks)
    : ground_size_(ground_size), blocks_(std::move(blocks)) {
  if (ground_size_ < 1 || ground_size_ > kMaxGround)
    throw InvalidInput("ground set size must be in 1.." + std::to_string(kMaxGround));
  std::uint64_t seen = 0;
  for (Block b : blocks_) {
    if (b.empty()) throw InvalidInput("tableau blocks must be non-empty");
    if (seen & b.bits()) throw InvalidInput("tableau blocks must be disjoint");
    seen |= b.bits();
  }
  if (seen != ground_mask(ground_size_))
    throw InvalidInput("tableau blocks must cover 1.." + std::to_string(ground_size_));
  std::sort(blocks_.begin(), blocks_.end(), canonical_less);
}

template <class Tag>
Partition BlockTableau<Tag>::block_sizes() const {
  std::vector<int> sizes;
  sizes.reserve(blocks_.size());
  for (Block b : blocks_) sizes.push_back(b.size());
  return Partition(std::move(sizes));
}

template <class Tag>
std::string BlockTableau<Tag>::to_string() const {
  return join_blocks(blocks_);
}

template class BlockTableau<RowsTag>;
template class BlockTableau<ColumnsTag>;

}  // namespace detail

HorizontalTableau HorizontalTableau::parse(const Partition& shape, std::string_view text) {
  HorizontalTableau t(shape.total(), parse_blocks(text, shape.total()));
  if (t.shape() != shape)
    throw InvalidInput("row sizes of '" + std::string(text) + "' do not match " +
                       shape.to_string());
  return t;
}

VerticalTableau VerticalTableau::parse(const Partition& shape, std::string_view text) {
  VerticalTableau t(shape.total(), parse_blocks(text, shape.total()));
  if (t.shape() != shape)
    throw InvalidInput("column sizes of '" + std::string(text) + "' do not match " +
                       conjugate(shape).to_string());
  return t;
}

namespace {

// Generates canonical set partitions directly: blocks follow the size order,
// and within a run of equal sizes the minimal elements increase. A candidate
// minimum is only tried if enough larger elements remain to finish the run,
// which rules out dead ends.
class SetPartitionGenerator {
 public:
  explicit SetPartitionGenerator(const Partition& sizes)
      : sizes_(sizes.parts().begin(), sizes.parts().end()), run_left_(sizes_.size()) {
    for (std::size_t i = sizes_.size(); i-- > 0;)
      run_left_[i] = (i + 1 < sizes_.size() && sizes_[i + 1] == sizes_[i]) ? run_left_[i + 1] + 1 : 1;
  }

  // Calls visit(block) for each admissible block at `slot`, in lexicographic order.
  template <class Visit>
  void for_each_block(std::size_t slot, std::uint64_t remaining, int lower, Visit&& visit) const {
    const int size = sizes_[slot];
    const int need_above = run_left_[slot] * size - 1;
    for (std::uint64_t rest = remaining; rest; rest &= rest - 1) {
      const int m = std::countr_zero(rest) + 1;
      if (m <= lower) continue;
      const std::uint64_t above = remaining & ~ground_mask(m);
      if (std::popcount(above) < need_above) break;
      std::vector<int> candidates;
      for (std::uint64_t b = above; b; b &= b - 1) candidates.push_back(std::countr_zero(b) + 1);
      choose(candidates, 0, size - 1, std::uint64_t{1} << (m - 1), visit);
    }
  }

  void complete(std::size_t slot, std::uint64_t remaining, std::vector<Block>& prefix,
                std::vector<std::vector<Block>>& out) const {
    if (slot == sizes_.size()) {
      out.push_back(prefix);
      return;
    }
    const int lower =
        (slot > 0 && sizes_[slot - 1] == sizes_[slot]) ? prefix[slot - 1].min_element() : 0;
    for_each_block(slot, remaining, lower, [&](std::uint64_t bits) {
      prefix.emplace_back(bits);
      complete(slot + 1, remaining & ~bits, prefix, out);
      prefix.pop_back();
    });
  }

 private:
  template <class Visit>
  static void choose(const std::vector<int>& candidates, std::size_t from, int k,
                     std::uint64_t acc, Visit& visit) {
    if (k == 0) {
      visit(acc);
      return;
    }
    for (std::size_t i = from; i + static_cast<std::size_t>(k) <= candidates.size(); ++i)
      choose(candidates, i + 1, k - 1, acc | (std::uint64_t{1} << (candidates[i] - 1)), visit);
  }

  std::vector<int> sizes_;
  std::vector<int> run_left_;
};

void check_enum_cap(const BigInt& count, const Limits& limits, const Partition& sizes) {
  if (count > BigInt(std::to_string(limits.max_enum)))
    throw ResourceLimit("enumerating " + count.get_str() + " set partitions with block sizes " +
                        sizes.to_string() + " exceeds the cap of " +
                        std::to_string(limits.max_enum));
}

}  // namespace

std::vector<std::vector<Block>> enumerate_set_partitions(const Partition& sizes,
                                                         const Limits& limits) {
  if (sizes.total() > kMaxGround)
    throw ResourceLimit("ground sets larger than " + std::to_string(kMaxGround) +
                        " are not supported");
  check_enum_cap(count_horizontal(sizes), limits, sizes);

  const SetPartitionGenerator gen(sizes);
  const std::uint64_t all = ground_mask(sizes.total());
  std::vector<std::uint64_t> first_blocks;
  gen.for_each_block(0, all, 0, [&](std::uint64_t bits) { first_blocks.push_back(bits); });

  // Subtrees under each first block are independent; concatenating them in
  // first-block order reproduces the serial order.
  std::vector<std::vector<std::vector<Block>>> parts(first_blocks.size());
  const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(first_blocks.size());
#pragma omp parallel for schedule(dynamic) if (count > 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    std::vector<Block> prefix{Block(first_blocks[static_cast<std::size_t>(i)])};
    gen.complete(1, all & ~first_blocks[static_cast<std::size_t>(i)], prefix,
                 parts[static_cast<std::size_t>(i)]);
  }

  std::vector<std::vector<Block>> out;
  for (auto& p : parts)
    for (auto& blocks : p) out.push_back(std::move(blocks));
  return out;
}

std::vector<HorizontalTableau> enumerate_horizontal(const Partition& shape, const Limits& limits) {
  auto raw = enumerate_set_partitions(shape, limits);
  std::vector<HorizontalTableau> out;
  out.reserve(raw.size());
  for (auto& blocks : raw) out.emplace_back(shape.total(), std::move(blocks));
  return out;
}

std::vector<VerticalTableau> enumerate_vertical(const Partition& shape, const Limits& limits) {
  auto raw = enumerate_set_partitions(conjugate(shape), limits);
  std::vector<VerticalTableau> out;
  out.reserve(raw.size());
  for (auto& blocks : raw) out.emplace_back(shape.total(), std::move(blocks));
  return out;
}

BigInt count_horizontal(const Partition& shape) {
  BigInt denom = 1;
  std::map<int, int> multiplicities;
  for (int part : shape.parts()) {
    denom *= factorial(static_cast<unsigned>(part));
    ++multiplicities[part];
  }
  for (const auto& [part, mult] : multiplicities) denom *= factorial(static_cast<unsigned>(mult));
  return factorial(static_cast<unsigned>(shape.total())) / denom;
}

BigInt count_vertical(const Partition& shape) { return count_horizontal(conjugate(shape)); }

BigInt count_dissections(int m, int n) {
  if (m < 1 || n < 1) throw InvalidInput("count_dissections needs positive m, n");
  BigInt denom = factorial(static_cast<unsigned>(n));
  const BigInt fm = factorial(static_cast<unsigned>(m));
  for (int i = 0; i < n; ++i) denom *= fm;
  return factorial(static_cast<unsigned>(m) * static_cast<unsigned>(n)) / denom;
}

}  // namespace plethysm
