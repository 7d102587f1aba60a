#include "plethysm/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace plethysm {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InvalidInput("partition must have at least one part");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw InvalidInput("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw InvalidInput("partition parts must be weakly decreasing");
  }
  total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::rectangle(int rows, int cols) {
  if (rows < 1 || cols < 1) throw InvalidInput("rectangle dimensions must be positive");
  return Partition(std::vector<int>(static_cast<std::size_t>(rows), cols));
}

Partition Partition::hook(int n, int r) {
  if (n < 1 || r < 0 || r >= n) throw InvalidInput("hook needs 0 <= r < n");
  std::vector<int> parts{n - r};
  parts.insert(parts.end(), static_cast<std::size_t>(r), 1);
  return Partition(std::move(parts));
}

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  std::size_t pos() const { return pos_; }

  void expect(char c) {
    skip_space();
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  int number() {
    skip_space();
    const std::size_t start = pos_;
    long value = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 1'000'000) throw ParseError("number too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected a number", start);
    return static_cast<int>(value);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Partition Partition::parse(std::string_view text) {
  Scanner s(text);
  s.skip_space();
  if (s.peek() == '[') {
    s.expect('[');
    std::vector<int> parts;
    s.skip_space();
    if (s.peek() == ']') throw ParseError("empty partition", s.pos());
    for (;;) {
      const std::size_t at = s.pos();
      const int part = s.number();
      if (part < 1) throw ParseError("parts must be positive", at);
      if (!parts.empty() && part > parts.back())
        throw ParseError("parts must be weakly decreasing", at);
      parts.push_back(part);
      s.skip_space();
      if (s.peek() == ',') {
        s.expect(',');
        continue;
      }
      s.expect(']');
      break;
    }
    s.skip_space();
    if (!s.done()) throw ParseError("trailing characters", s.pos());
    return Partition(std::move(parts));
  }
  const std::size_t at = s.pos();
  const int rows = s.number();
  s.skip_space();
  if (s.peek() != 'x' && s.peek() != 'X') throw ParseError("expected 'x'", s.pos());
  s.expect(s.peek());
  const int cols = s.number();
  s.skip_space();
  if (!s.done()) throw ParseError("trailing characters", s.pos());
  if (rows < 1 || cols < 1) throw ParseError("rectangle dimensions must be positive", at);
  return rectangle(rows, cols);
}

int Partition::multiplicity(int size) const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), size));
}

bool Partition::is_hook() const noexcept {
  return parts_.size() <= 1 || parts_[1] == 1;
}

bool Partition::is_rectangle() const noexcept {
  return !parts_.empty() && parts_.front() == parts_.back();
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ']';
  return os.str();
}

Partition conjugate(const Partition& p) {
  std::vector<int> parts(static_cast<std::size_t>(p[0]), 0);
  for (int part : p.parts())
    for (int j = 0; j < part; ++j) ++parts[static_cast<std::size_t>(j)];
  return Partition(std::move(parts));
}

bool dominates(const Partition& p, const Partition& q) {
  if (p.total() != q.total())
    throw InvalidInput("dominance compares partitions of different totals: " + p.to_string() +
                       " vs " + q.to_string());
  const std::size_t len = std::max(p.length(), q.length());
  long sp = 0;
  long sq = 0;
  for (std::size_t i = 0; i < len; ++i) {
    sp += i < p.length() ? p[i] : 0;
    sq += i < q.length() ? q[i] : 0;
    if (sp < sq) return false;
  }
  return true;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, const Limits& limits) {
  if (n < 1) throw InvalidInput("enumerate_partitions needs n >= 1");
  if (n > limits.max_partition_n)
    throw ResourceLimit("partitions of " + std::to_string(n) + " exceed the limit of " +
                        std::to_string(limits.max_partition_n));
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

}  // namespace plethysm
