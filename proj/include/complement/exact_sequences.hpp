// Exact base sequences u(n) and the brute-force complement sieve.
//
// Everything in this header is exact integer arithmetic on GMP integers.
// The sieve is the ground truth every closed-form generator is checked
// against.
#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace complement {

using BigNat = mpz_class;
using Index = std::int64_t;

class IndexOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

struct RthPowers {
  unsigned r;  // >= 2
};

struct PowersOf {
  unsigned long base;  // >= 2
};

struct Triangular {};

// u(n) = F(n + 2), which skips the repeated 1 of the raw Fibonacci sequence.
struct FibonacciShifted {};

struct Custom {
  std::shared_ptr<const std::vector<BigNat>> terms;
};

class SequenceFamily {
 public:
  using Kind = std::variant<RthPowers, PowersOf, Triangular, FibonacciShifted, Custom>;

  static SequenceFamily rth_powers(unsigned r);
  static SequenceFamily powers_of(unsigned long base);
  static SequenceFamily triangular();
  static SequenceFamily fibonacci();
  // Throws std::invalid_argument unless `terms` is non-empty, nonnegative
  // and strictly increasing.
  static SequenceFamily custom(std::vector<BigNat> terms);

  const Kind& kind() const { return kind_; }

  // Stable human-readable identifier, e.g. "rth-power(r=3)".
  std::string id() const;

 private:
  explicit SequenceFamily(Kind kind) : kind_(std::move(kind)) {}
  Kind kind_;
};

// Reads a custom family: one unsigned decimal integer per line, strictly
// increasing, blank lines ignored.
SequenceFamily load_custom_family(const std::filesystem::path& path);
SequenceFamily parse_custom_family(const std::string& text);

BigNat fib(Index n);

// Throws IndexOutOfRange for Custom when n >= length, std::invalid_argument
// for n < 0.
BigNat term(const SequenceFamily& family, Index n);

// Number of known terms; only finite for Custom.
std::optional<std::size_t> known_length(const SequenceFamily& family);

bool is_member(const SequenceFamily& family, const BigNat& v);

// Sorted integers N with u(0) <= N <= hi that are not terms of the family.
std::vector<BigNat> oracle_complement(const SequenceFamily& family, const BigNat& hi);

// The first `count` elements of the complement, growing the sieve range as
// needed.
std::vector<BigNat> oracle_complement_prefix(const SequenceFamily& family, std::size_t count);

}  // namespace complement
