#include "niggli/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace niggli {

G6Matrix SubspacePattern::projector() const {
  return projector_onto_span(columns);
}

G6Vector SubspacePattern::evaluate(const std::vector<double>& values) const {
  if (values.size() != columns.size())
    throw PreconditionError("pattern needs " + std::to_string(columns.size()) +
                            " parameter values");
  G6Vector g;
  for (std::size_t k = 0; k < columns.size(); ++k)
    for (int i = 0; i < 6; ++i)
      g[i] += boost::rational_cast<double>(columns[k][i]) * values[k];
  return g;
}

namespace {

// ASCII copy with U+2212 folded to '-' and whitespace dropped.
std::string normalize(std::string_view text) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c == 0xE2 && i + 2 < text.size() &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      out += '-';
      i += 2;
    } else if (!std::isspace(c)) {
      out += static_cast<char>(c);
    }
  }
  return out;
}

class EntryParser {
 public:
  EntryParser(std::string_view s, SubspacePattern& pat, int slot)
      : s_(s), pat_(pat), slot_(slot) {}

  void run() {
    if (s_.empty()) fail("empty entry");
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      term(sign);
      first = false;
    }
  }

 private:
  std::int64_t number() {
    std::int64_t v = 0;
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      v = v * 10 + (s_[pos_++] - '0');
    if (pos_ == start) fail("expected a number");
    return v;
  }

  void term(int sign) {
    std::int64_t num = 1;
    bool has_num = false;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      num = number();
      has_num = true;
    }
    char name = 0;
    if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
      name = s_[pos_++];
    std::int64_t den = 1;
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      den = number();
      if (den == 0) fail("zero denominator");
    }
    if (!name) {
      if (!has_num || num != 0) fail("constant terms other than 0 are not linear");
      return;
    }
    auto it = std::find(pat_.parameters.begin(), pat_.parameters.end(), name);
    std::size_t k = static_cast<std::size_t>(it - pat_.parameters.begin());
    if (it == pat_.parameters.end()) {
      pat_.parameters.push_back(name);
      pat_.columns.emplace_back();
      for (auto& x : pat_.columns.back()) x = 0;
    }
    pat_.columns[k][slot_] += Rational(sign * num, den);
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("pattern entry '" + std::string(s_) + "': " + why);
  }

  std::string_view s_;
  SubspacePattern& pat_;
  int slot_;
  std::size_t pos_ = 0;
};

std::string format_coefficient(const Rational& c, char name) {
  std::string out;
  const auto num = c.numerator() < 0 ? -c.numerator() : c.numerator();
  if (num != 1) out += std::to_string(num);
  out += name;
  if (c.denominator() != 1) out += "/" + std::to_string(c.denominator());
  return out;
}

}  // namespace

SubspacePattern parse_pattern(std::string_view text) {
  std::string s = normalize(text);
  const bool open = !s.empty() && s.front() == '(';
  const bool close = !s.empty() && s.back() == ')';
  if (open != close) throw ParseError("unbalanced parentheses in pattern: " + std::string(text));
  if (open) s = s.substr(1, s.size() - 2);
  std::vector<std::string> entries;
  std::stringstream ss(s);
  for (std::string e; std::getline(ss, e, ',');) entries.push_back(e);
  if (entries.size() != 6)
    throw ParseError("pattern needs six entries, got " + std::to_string(entries.size()));
  SubspacePattern pat;
  for (int i = 0; i < 6; ++i) EntryParser(entries[i], pat, i).run();
  if (exact_rank(pat.columns) != pat.free_parameters())
    throw ParseError("pattern parameters are linearly dependent: " + std::string(text));
  return pat;
}

std::string format_pattern(const std::vector<RationalVector6>& spanning_rows) {
  static constexpr char kNames[] = "rstuvw";
  const auto basis = row_echelon(spanning_rows);
  std::string out = "(";
  for (int i = 0; i < 6; ++i) {
    if (i) out += ',';
    std::string entry;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const Rational& c = basis[k][i];
      if (is_zero(c)) continue;
      if (is_negative(c)) entry += '-';
      else if (!entry.empty()) entry += '+';
      entry += format_coefficient(c, kNames[k]);
    }
    out += entry.empty() ? "0" : entry;
  }
  return out + ")";
}

}  // namespace niggli
