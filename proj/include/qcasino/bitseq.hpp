#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <string_view>
#include <utility>

#include "qcasino/common.hpp"

namespace qcasino {

// Finite binary strings are std::string over {'0','1'}. The empty string is
// the empty word lambda.
using BitString = std::string;

inline bool is_bit_string(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

inline void require_bit_string(std::string_view s) {
  if (!is_bit_string(s)) {
    throw shape_error("bit string may contain only '0' and '1'");
  }
}

inline long long count_ones(std::string_view s) {
  return std::count(s.begin(), s.end(), '1');
}

inline long long count_zeros(std::string_view s) {
  return static_cast<long long>(s.size()) - count_ones(s);
}

// Running symbol statistics of a prefix.
struct FrequencyStats {
  long long n = 0;
  long long count_ones = 0;

  void observe(char bit) {
    ++n;
    if (bit == '1') ++count_ones;
  }

  // Defined for n > 0; NaN on the empty prefix.
  double relative_frequency() const {
    if (n == 0) return std::numeric_limits<double>::quiet_NaN();
    return static_cast<double>(count_ones) / static_cast<double>(n);
  }
};

inline FrequencyStats frequency_stats(std::string_view s) {
  require_bit_string(s);
  FrequencyStats st;
  for (char c : s) st.observe(c);
  return st;
}

// First n symbols of the concatenation of all binary strings in
// length-lexicographic order: 0, 1, 00, 01, 10, 11, 000, ...
inline BitString champernowne_prefix(long long n) {
  if (n < 1) throw precondition_error("champernowne_prefix requires n >= 1");
  BitString out;
  out.reserve(static_cast<std::size_t>(n));
  for (int len = 1; static_cast<long long>(out.size()) < n; ++len) {
    for (std::uint64_t v = 0; v >> len == 0 && static_cast<long long>(out.size()) < n; ++v) {
      for (int b = len - 1; b >= 0 && static_cast<long long>(out.size()) < n; --b) {
        out.push_back(((v >> b) & 1u) ? '1' : '0');
      }
    }
  }
  return out;
}

// Probability of the cylinder set of all infinite sequences extending a given
// prefix, under the unbiased measure: exactly 2^-|prefix|. Held as the exact
// exponent; value() is exact in double down to the subnormal range.
struct CylinderProb {
  int log2_denominator = 0;

  double value() const { return std::ldexp(1.0, -log2_denominator); }
};

inline CylinderProb cylinder_probability(std::string_view prefix) {
  require_bit_string(prefix);
  return CylinderProb{static_cast<int>(prefix.size())};
}

// Number of indices n in [1, |prefix|] at which the running frequency of 1s
// is exactly 1/2 (the finite-prefix recurrence statistic).
inline long long recurrence_count(std::string_view prefix) {
  require_bit_string(prefix);
  long long hits = 0;
  long long ones = 0;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (prefix[i] == '1') ++ones;
    if (2 * ones == static_cast<long long>(i) + 1) ++hits;
  }
  return hits;
}

// An on-demand generator of an infinite binary sequence. Infinite objects are
// never materialized; callers pull one symbol at a time up to their horizon.
class BitSource {
 public:
  explicit BitSource(std::function<char()> next) : next_(std::move(next)) {}

  char next() { return next_(); }

 private:
  std::function<char()> next_;
};

// The constant sequence bit^infinity.
inline BitSource constant_source(char bit) {
  if (bit != '0' && bit != '1') throw shape_error("bit must be '0' or '1'");
  return BitSource([bit] { return bit; });
}

// Periodic repetition of a finite pattern, e.g. "01" -> 010101...
inline BitSource periodic_source(BitString pattern) {
  require_bit_string(pattern);
  if (pattern.empty()) throw precondition_error("periodic pattern must be non-empty");
  auto pos = std::make_shared<std::size_t>(0);
  auto pat = std::make_shared<BitString>(std::move(pattern));
  return BitSource([pos, pat] {
    char c = (*pat)[*pos];
    *pos = (*pos + 1) % pat->size();
    return c;
  });
}

// A finite result string exposed as a source; reading past the end throws.
inline BitSource fixed_results_source(BitString results) {
  require_bit_string(results);
  auto pos = std::make_shared<std::size_t>(0);
  auto res = std::make_shared<BitString>(std::move(results));
  return BitSource([pos, res] {
    if (*pos >= res->size()) {
      throw precondition_error("fixed result string exhausted");
    }
    return (*res)[(*pos)++];
  });
}

// The Champernowne sequence as a constant-memory generator.
inline BitSource champernowne_source() {
  struct State {
    int len = 1;
    std::uint64_t value = 0;
    int bit = 0;
  };
  auto st = std::make_shared<State>();
  return BitSource([st] {
    char out = ((st->value >> (st->len - 1 - st->bit)) & 1u) ? '1' : '0';
    if (++st->bit == st->len) {
      st->bit = 0;
      if (++st->value >> st->len) {
        st->value = 0;
        ++st->len;
      }
    }
    return out;
  });
}

}  // namespace qcasino
