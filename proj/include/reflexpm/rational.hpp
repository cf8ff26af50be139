#pragma once

// Exact rational numbers over 64-bit integers. Every operation is carried
// out in 128-bit intermediates and reduced; a result that does not fit in
// 64 bits raises InternalError instead of wrapping.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace reflexpm {

class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit from integers
  /// Throws InputError on a zero denominator.
  Rational(std::int64_t num, std::int64_t den);

  [[nodiscard]] std::int64_t num() const noexcept { return num_; }
  [[nodiscard]] std::int64_t den() const noexcept { return den_; }
  [[nodiscard]] bool is_integer() const noexcept { return den_ == 1; }
  [[nodiscard]] bool is_zero() const noexcept { return num_ == 0; }
  [[nodiscard]] int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

  [[nodiscard]] std::int64_t floor() const noexcept;
  [[nodiscard]] std::int64_t ceil() const noexcept;

  /// "p/q" in lowest terms, or "n" for integers.
  [[nodiscard]] std::string to_string() const;
  /// Parses "n" or "p/q"; throws InputError on malformed text.
  static Rational parse(const std::string& text);

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  /// Throws InputError on division by zero.
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  __extension__ typedef __int128 Wide;
  static Rational from_wide(Wide num, Wide den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

using RationalVector = std::vector<Rational>;
using IntVector = std::vector<std::int64_t>;

[[nodiscard]] RationalVector to_rational(const IntVector& v);
/// Throws InternalError on a fractional entry; test with is_integral first.
[[nodiscard]] IntVector to_integer(const RationalVector& v);
[[nodiscard]] bool is_integral(const RationalVector& v);
[[nodiscard]] Rational dot(const IntVector& a, const RationalVector& x);
[[nodiscard]] std::int64_t dot(const IntVector& a, const IntVector& x);

/// Overflow-checked int64 helpers.
[[nodiscard]] std::int64_t checked_add(std::int64_t a, std::int64_t b);
[[nodiscard]] std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace reflexpm
