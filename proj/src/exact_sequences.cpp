#include "complement/exact_sequences.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

namespace complement {

namespace {

// Sieve ranges beyond this many integers are refused rather than allocated.
constexpr unsigned long kMaxSieveSpan = 1ul << 34;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_index(Index n) {
  if (n < 0) throw std::invalid_argument("sequence index must be nonnegative");
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

SequenceFamily SequenceFamily::rth_powers(unsigned r) {
  if (r < 2) throw std::invalid_argument("r-th powers need r >= 2");
  return SequenceFamily(RthPowers{r});
}

SequenceFamily SequenceFamily::powers_of(unsigned long base) {
  if (base < 2) throw std::invalid_argument("powers of a need a >= 2");
  return SequenceFamily(PowersOf{base});
}

SequenceFamily SequenceFamily::triangular() { return SequenceFamily(Triangular{}); }

SequenceFamily SequenceFamily::fibonacci() { return SequenceFamily(FibonacciShifted{}); }

SequenceFamily SequenceFamily::custom(std::vector<BigNat> terms) {
  if (terms.empty()) throw std::invalid_argument("custom sequence is empty");
  if (terms.front() < 0) throw std::invalid_argument("custom sequence has a negative term");
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (terms[i] <= terms[i - 1]) {
      throw std::invalid_argument("custom sequence is not strictly increasing at position " +
                                  std::to_string(i));
    }
  }
  return SequenceFamily(Custom{std::make_shared<const std::vector<BigNat>>(std::move(terms))});
}

std::string SequenceFamily::id() const {
  return std::visit(
      Overloaded{
          [](const RthPowers& k) { return "rth-power(r=" + std::to_string(k.r) + ")"; },
          [](const PowersOf& k) { return "powers(base=" + std::to_string(k.base) + ")"; },
          [](const Triangular&) { return std::string("triangular"); },
          [](const FibonacciShifted&) { return std::string("fibonacci"); },
          [](const Custom& k) { return "custom(len=" + std::to_string(k.terms->size()) + ")"; },
      },
      kind_);
}

SequenceFamily parse_custom_family(const std::string& text) {
  std::vector<BigNat> terms;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty()) continue;
    if (!std::all_of(body.begin(), body.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": expected an unsigned decimal integer");
    }
    terms.emplace_back(std::string(body), 10);
  }
  return SequenceFamily::custom(std::move(terms));
}

SequenceFamily load_custom_family(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_custom_family(buffer.str());
}

// Fast doubling: with (a, b) = (F(k), F(k+1)),
// F(2k) = a(2b - a) and F(2k+1) = a^2 + b^2.
BigNat fib(Index n) {
  require_index(n);
  BigNat a = 0;
  BigNat b = 1;
  BigNat c;
  BigNat d;
  const auto un = static_cast<std::uint64_t>(n);
  for (int bit = 63; bit >= 0; --bit) {
    c = a * (2 * b - a);
    d = a * a + b * b;
    if ((un >> bit) & 1u) {
      a = d;
      b = c + d;
    } else {
      a = c;
      b = d;
    }
  }
  return a;
}

BigNat term(const SequenceFamily& family, Index n) {
  require_index(n);
  const auto un = static_cast<unsigned long>(n);
  return std::visit(
      Overloaded{
          [&](const RthPowers& k) {
            BigNat out;
            mpz_ui_pow_ui(out.get_mpz_t(), un, k.r);
            return out;
          },
          [&](const PowersOf& k) {
            BigNat out;
            mpz_ui_pow_ui(out.get_mpz_t(), k.base, un);
            return out;
          },
          [&](const Triangular&) {
            BigNat out = n;
            out = out * (out + 1) / 2;
            return out;
          },
          [&](const FibonacciShifted&) { return fib(n + 2); },
          [&](const Custom& k) {
            if (un >= k.terms->size()) {
              throw IndexOutOfRange("custom sequence has " + std::to_string(k.terms->size()) +
                                    " terms; index " + std::to_string(n) + " requested");
            }
            return (*k.terms)[un];
          },
      },
      family.kind());
}

std::optional<std::size_t> known_length(const SequenceFamily& family) {
  if (const auto* c = std::get_if<Custom>(&family.kind())) return c->terms->size();
  return std::nullopt;
}

bool is_member(const SequenceFamily& family, const BigNat& v) {
  if (const auto* c = std::get_if<Custom>(&family.kind())) {
    return std::binary_search(c->terms->begin(), c->terms->end(), v);
  }
  if (v < term(family, 0)) return false;
  // Gallop to an index whose term reaches v, then bisect.
  Index hi = 1;
  while (term(family, hi) < v) hi *= 2;
  Index lo = hi / 2;
  while (lo < hi) {
    const Index mid = lo + (hi - lo) / 2;
    if (term(family, mid) < v) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return term(family, lo) == v;
}

std::vector<BigNat> oracle_complement(const SequenceFamily& family, const BigNat& hi) {
  const BigNat first = term(family, 0);
  if (hi < first) throw std::invalid_argument("sieve upper bound is below u(0)");
  const auto length = known_length(family);
  if (length && hi > term(family, static_cast<Index>(*length - 1))) {
    throw IndexOutOfRange("sieve upper bound exceeds the last known custom term");
  }
  const BigNat span_big = hi - first + 1;
  if (!span_big.fits_ulong_p() || span_big.get_ui() > kMaxSieveSpan) {
    throw std::invalid_argument("sieve range too large");
  }
  const unsigned long span = span_big.get_ui();

  std::vector<bool> is_term(span, false);
  for (Index n = 0;; ++n) {
    if (length && static_cast<std::size_t>(n) >= *length) break;
    const BigNat u = term(family, n);
    if (u > hi) break;
    is_term[BigNat(u - first).get_ui()] = true;
  }

  std::vector<BigNat> out;
  for (unsigned long offset = 0; offset < span; ++offset) {
    if (!is_term[offset]) out.push_back(first + offset);
  }
  return out;
}

std::vector<BigNat> oracle_complement_prefix(const SequenceFamily& family, std::size_t count) {
  if (count == 0) return {};
  BigNat hi = term(family, 0) + 2 * BigNat(static_cast<unsigned long>(count)) + 16;
  for (;;) {
    if (const auto length = known_length(family)) {
      const BigNat last = term(family, static_cast<Index>(*length - 1));
      if (hi > last) hi = last;
    }
    auto out = oracle_complement(family, hi);
    if (out.size() >= count) {
      out.resize(count);
      return out;
    }
    if (const auto length = known_length(family);
        length && hi == term(family, static_cast<Index>(*length - 1))) {
      throw IndexOutOfRange("custom sequence too short for " + std::to_string(count) +
                            " complement elements");
    }
    hi *= 2;
  }
}

}  // namespace complement
