#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace plethysm {

using BigInt = mpz_class;
using Rational = mpq_class;

// Bad arguments: malformed shapes, mismatched ground sets, non-prime moduli.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured cap would be exceeded. Never silently truncated.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  IoError(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InvalidInput(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

struct Limits {
  // Largest N accepted by enumerate_partitions.
  int max_partition_n = 64;
  // Maximum number of tableaux any single enumeration may produce.
  std::uint64_t max_enum = 10'000'000;
  // Dimension cap for fraction-free elimination (both rows and columns).
  std::size_t max_exact = 2000;
};

BigInt factorial(unsigned n);

}  // namespace plethysm
