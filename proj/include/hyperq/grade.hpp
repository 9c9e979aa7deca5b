#ifndef HYPERQ_GRADE_HPP
#define HYPERQ_GRADE_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "hyperq/errors.hpp"

namespace hyperq {

/// Exact rational in [0,1], stored in lowest terms.
///
/// All membership degrees and cut thresholds are Grades, so level-cut
/// comparisons and sup/inf over finite images are decided without any
/// floating-point tolerance. Components are 64-bit; comparisons go through
/// 128-bit cross products, and construction rejects values outside [0,1].
class Grade {
 public:
  constexpr Grade() = default;  // zero

  /// Reduced rational num/den; throws OutOfRange unless 0 <= num/den <= 1.
  static Grade of(std::int64_t num, std::int64_t den);

  /// Parses "p/q" or a bare integer "p".
  /// Throws MalformedGrade on syntax errors, OutOfRange on values
  /// outside [0,1].
  static Grade parse(std::string_view text);

  static constexpr Grade zero() { return Grade{}; }
  static Grade one() { return of(1, 1); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  Grade complement() const;  // 1 - g

  std::string str() const;

  friend bool operator==(const Grade &a, const Grade &b) = default;
  friend std::strong_ordering operator<=>(const Grade &a, const Grade &b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Whether a + b <= 1 (the intuitionistic constraint), computed exactly.
bool sum_at_most_one(const Grade &a, const Grade &b);

}  // namespace hyperq

#endif
