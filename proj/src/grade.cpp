#include "hyperq/grade.hpp"

#include <cctype>
#include <charconv>
#include <numeric>

namespace hyperq {

Grade Grade::of(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw MalformedGrade("denominator must be positive");
  if (num < 0) throw OutOfRange("grade is negative");
  if (num > den) throw OutOfRange("grade exceeds 1");
  const std::int64_t g = std::gcd(num, den);
  Grade r;
  r.num_ = num / g;
  r.den_ = den / g;
  return r;
}

namespace {

std::int64_t parse_int(std::string_view text, bool &negative) {
  negative = false;
  std::size_t pos = 0;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  if (pos == text.size()) throw MalformedGrade("empty number");
  std::int64_t value = 0;
  const auto *first = text.data() + pos;
  const auto *last = text.data() + text.size();
  auto [p, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range)
    throw OutOfRange("grade component overflows 64 bits");
  if (ec != std::errc{} || p != last)
    throw MalformedGrade("expected decimal digits, got \"" +
                         std::string(text) + "\"");
  return value;
}

}  // namespace

Grade Grade::parse(std::string_view text) {
  if (text.empty()) throw MalformedGrade("empty grade");
  const auto slash = text.find('/');
  bool neg_num = false, neg_den = false;
  std::int64_t num, den;
  if (slash == std::string_view::npos) {
    num = parse_int(text, neg_num);
    den = 1;
  } else {
    num = parse_int(text.substr(0, slash), neg_num);
    den = parse_int(text.substr(slash + 1), neg_den);
    if (den == 0) throw MalformedGrade("zero denominator");
  }
  if (neg_num != neg_den && num != 0) throw OutOfRange("grade is negative");
  return of(num, den);
}

Grade Grade::complement() const { return of(den_ - num_, den_); }

std::string Grade::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Grade &a, const Grade &b) {
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool sum_at_most_one(const Grade &a, const Grade &b) {
  const __int128 lhs = static_cast<__int128>(a.num()) * b.den() +
                       static_cast<__int128>(b.num()) * a.den();
  const __int128 rhs = static_cast<__int128>(a.den()) * b.den();
  return lhs <= rhs;
}

}  // namespace hyperq
