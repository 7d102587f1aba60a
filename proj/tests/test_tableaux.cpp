#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "oracles.hpp"
#include "plethysm/tableaux.hpp"

using namespace plethysm;

namespace {

template <class T>
std::vector<std::string> texts(const std::vector<T>& tableaux) {
  std::vector<std::string> out;
  for (const auto& t : tableaux) out.push_back(t.to_string());
  return out;
}

std::multiset<int> sizes_of(const std::vector<Block>& blocks) {
  std::multiset<int> s;
  for (Block b : blocks) s.insert(b.size());
  return s;
}

}  // namespace

TEST_CASE("small enumerations") {
  CHECK(texts(enumerate_horizontal(Partition({2, 2}))) ==
        std::vector<std::string>{"1,2|3,4", "1,3|2,4", "1,4|2,3"});
  CHECK(texts(enumerate_horizontal(Partition({2, 1}))) ==
        std::vector<std::string>{"1,2|3", "1,3|2", "2,3|1"});
  CHECK(texts(enumerate_horizontal(Partition({5}))) == std::vector<std::string>{"1,2,3,4,5"});

  CHECK(enumerate_vertical(Partition({2, 2})).size() == 3);
  CHECK(texts(enumerate_vertical(Partition({4}))) == std::vector<std::string>{"1|2|3|4"});
  CHECK(enumerate_vertical(Partition::rectangle(2, 3)).size() == 15);
}

TEST_CASE("counting formulas") {
  CHECK(count_horizontal(Partition({6, 2, 2, 1, 1})) == 41580);
  CHECK(count_horizontal(Partition({2, 2})) == 3);
  CHECK(count_horizontal(Partition({7})) == 1);
  CHECK(count_vertical(Partition({6, 2, 2, 1, 1})) == 27720);
  CHECK(count_vertical(Partition::rectangle(2, 5)) == 945);
  CHECK(count_vertical(Partition({9})) == 1);
  CHECK(count_dissections(2, 2) == 3);
  CHECK(count_dissections(1, 6) == 1);
  CHECK(count_dissections(2, 3) == 15);
  // Past 64-bit range: 30!/(2^15 15!) = 29!! = 6190283353629375.
  CHECK(count_dissections(2, 15) == BigInt("6190283353629375"));
}

TEST_CASE("rectangles and dissections agree") {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      const auto rect = Partition::rectangle(m, n);
      CHECK(count_horizontal(rect) == count_dissections(n, m));
      CHECK(count_vertical(rect) == count_dissections(m, n));
    }
}

TEST_CASE("enumeration matches the brute-force quotient of all fillings") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& shape : enumerate_partitions(n)) {
      const auto listed = enumerate_horizontal(shape);
      CAPTURE(shape.to_string());
      CHECK(BigInt(static_cast<unsigned long>(listed.size())) == count_horizontal(shape));

      const std::vector<int> sizes(shape.parts().begin(), shape.parts().end());
      if (n <= 7) {
        const auto brute = oracle::classes_from_fillings(sizes);
        const auto got = texts(listed);
        CHECK(std::set<std::string>(got.begin(), got.end()) == brute);
      }

      // Disjoint cover, block sizes, canonical order, lexicographic listing.
      const std::multiset<int> want(sizes.begin(), sizes.end());
      std::vector<std::vector<std::vector<int>>> keys;
      for (const auto& t : listed) {
        std::uint64_t seen = 0;
        for (Block b : t.blocks()) {
          CHECK((seen & b.bits()) == 0);
          seen |= b.bits();
        }
        CHECK(seen == (n == 64 ? ~0ULL : (1ULL << n) - 1));
        CHECK(sizes_of(t.blocks()) == want);
        std::vector<std::vector<int>> key;
        for (Block b : t.blocks()) key.push_back(b.members());
        keys.push_back(key);
      }
      CHECK(std::is_sorted(keys.begin(), keys.end()));
      CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
    }
}

TEST_CASE("vertical tableaux are horizontal tableaux of the conjugate") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& shape : enumerate_partitions(n)) {
      const auto v = enumerate_vertical(shape);
      const auto h = enumerate_horizontal(conjugate(shape));
      REQUIRE(v.size() == h.size());
      for (std::size_t i = 0; i < v.size(); ++i) {
        CHECK(v[i].blocks() == h[i].blocks());
        CHECK(v[i].shape() == shape);
      }
      CHECK(BigInt(static_cast<unsigned long>(v.size())) == count_vertical(shape));
    }
}

TEST_CASE("canonical identity") {
  const HorizontalTableau a(4, {Block::of({3, 4}), Block::of({1, 2})});
  const HorizontalTableau b(4, {Block::of({1, 2}), Block::of({4, 3})});
  CHECK(a == b);
  CHECK(a.to_string() == "1,2|3,4");
  const HorizontalTableau mixed(5, {Block::of({5}), Block::of({2, 4}), Block::of({1, 3})});
  CHECK(mixed.to_string() == "1,3|2,4|5");
}

TEST_CASE("invalid tableaux") {
  CHECK_THROWS_AS(HorizontalTableau(4, {Block::of({1, 2}), Block::of({2, 3, 4})}), InvalidInput);
  CHECK_THROWS_AS(HorizontalTableau(4, {Block::of({1, 2}), Block::of({3})}), InvalidInput);
  CHECK_THROWS_AS(HorizontalTableau(3, {Block::of({1, 2, 3}), Block()}), InvalidInput);
  CHECK_THROWS_AS(HorizontalTableau(65, {}), InvalidInput);
}

TEST_CASE("text parsing") {
  const auto shape = Partition({3, 3});
  const auto t = HorizontalTableau::parse(shape, "4,5,6|1,2,3");
  CHECK(t.to_string() == "1,2,3|4,5,6");
  const auto v = VerticalTableau::parse(shape, "1,4|2,5|3,6");
  CHECK(v.shape() == shape);
  CHECK_THROWS_AS(HorizontalTableau::parse(shape, "1,2|3,4,5,6"), InvalidInput);
  CHECK_THROWS_AS(HorizontalTableau::parse(shape, "1,2,3|4,5,7"), ParseError);
  CHECK_THROWS_AS(HorizontalTableau::parse(shape, "1,2,2|4,5,6"), ParseError);
  CHECK_THROWS_AS(HorizontalTableau::parse(shape, "1,2,3||4,5,6"), ParseError);
  CHECK_THROWS_AS(HorizontalTableau::parse(shape, "1,2,3|4,5,"), ParseError);
  CHECK_THROWS_AS(HorizontalTableau::parse(shape, "1;2,3|4,5,6"), ParseError);
  for (const auto& h : enumerate_horizontal(Partition({3, 2, 1})))
    CHECK(HorizontalTableau::parse(Partition({3, 2, 1}), h.to_string()) == h);
}

TEST_CASE("enumeration cap is a hard error") {
  Limits limits;
  limits.max_enum = 100;
  CHECK_THROWS_AS(enumerate_horizontal(Partition::rectangle(2, 5), limits), ResourceLimit);
  CHECK(enumerate_horizontal(Partition::rectangle(2, 4), limits).size() == 35);
  CHECK_THROWS_AS(enumerate_horizontal(Partition({40, 30})), ResourceLimit);
}
