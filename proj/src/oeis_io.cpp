#include "cantor/oeis_io.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <set>
#include <sstream>

#include "cantor/errors.hpp"

namespace cantor {
namespace {

bool is_integer_token(const std::string& tok, bool allow_sign) {
  if (tok.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (tok[0] == '-' || tok[0] == '+')) i = 1;
  if (i == tok.size()) return false;
  for (; i < tok.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
  }
  return true;
}

}  // namespace

std::vector<SequenceEntry> parse_bfile(std::istream& in) {
  std::vector<SequenceEntry> out;
  std::string line;
  std::size_t line_no = 0;
  bool have_prev = false;
  std::int64_t prev_index = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::string index_tok, value_tok, extra;
    if (!(fields >> index_tok)) continue;  // blank
    if (index_tok[0] == '#') continue;     // comment
    if (!(fields >> value_tok) || (fields >> extra)) {
      throw MalformedLineError(
          "line " + std::to_string(line_no) + ": expected `index value`",
          line_no);
    }
    if (!is_integer_token(index_tok, true) ||
        !is_integer_token(value_tok, false)) {
      throw MalformedLineError(
          "line " + std::to_string(line_no) + ": non-integer field", line_no);
    }
    SequenceEntry entry;
    try {
      entry.index = std::stoll(index_tok);
    } catch (const std::out_of_range&) {
      throw MalformedLineError(
          "line " + std::to_string(line_no) + ": index out of range", line_no);
    }
    entry.value = mpz_class(value_tok);
    if (have_prev && entry.index <= prev_index) {
      throw NonMonotonicIndexError("line " + std::to_string(line_no) +
                                       ": index " + index_tok +
                                       " does not increase",
                                   line_no);
    }
    prev_index = entry.index;
    have_prev = true;
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<SequenceEntry> parse_bfile(const std::string& text) {
  std::istringstream in(text);
  return parse_bfile(in);
}

std::string serialize_bfile(const std::vector<SequenceEntry>& entries) {
  std::ostringstream out;
  for (const SequenceEntry& e : entries) {
    out << e.index << ' ' << e.value.get_str() << '\n';
  }
  return out.str();
}

CrossCheckReport cross_check(const std::vector<SequenceEntry>& expected,
                             const std::vector<mpz_class>& computed,
                             const mpz_class& range_cap) {
  std::set<mpz_class> want, have;
  for (const SequenceEntry& e : expected) {
    if (e.value <= range_cap) want.insert(e.value);
  }
  for (const mpz_class& v : computed) {
    if (v <= range_cap) have.insert(v);
  }
  CrossCheckReport report;
  std::set_difference(want.begin(), want.end(), have.begin(), have.end(),
                      std::back_inserter(report.expected_only));
  std::set_difference(have.begin(), have.end(), want.begin(), want.end(),
                      std::back_inserter(report.computed_only));
  return report;
}

}  // namespace cantor
