#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cantor {

// One `index value` line of an OEIS b-file.
struct SequenceEntry {
  std::int64_t index = 0;
  mpz_class value;
};

// Parses b-file text: blank lines and `#` comments are skipped; every
// other line must be exactly `index value` with a non-negative value.
// Indices must be strictly increasing (MalformedLineError /
// NonMonotonicIndexError carry the 1-based line number).
std::vector<SequenceEntry> parse_bfile(std::istream& in);
std::vector<SequenceEntry> parse_bfile(const std::string& text);

// One `index value` line per entry; parse_bfile(serialize_bfile(x)) == x.
std::string serialize_bfile(const std::vector<SequenceEntry>& entries);

// Symmetric difference of {expected values <= cap} and {computed values
// <= cap}, each side sorted ascending.
struct CrossCheckReport {
  std::vector<mpz_class> expected_only;
  std::vector<mpz_class> computed_only;
  bool agree() const { return expected_only.empty() && computed_only.empty(); }
};

CrossCheckReport cross_check(const std::vector<SequenceEntry>& expected,
                             const std::vector<mpz_class>& computed,
                             const mpz_class& range_cap);

}  // namespace cantor
