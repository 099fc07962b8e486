#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace simplefold {

/// Exact rational number, always in canonical reduced form.
///
/// Every coordinate in the library is a Rational. There is no epsilon
/// anywhere: comparisons such as "strictly outside the image" rely on exact
/// equality.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  /// Accepts "3", "-7", "5/2", "2.75", "-0.5". Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  std::string to_string() const;  ///< "3" or "5/2"
  double to_double() const { return value_.get_d(); }
  bool is_integer() const;
  /// The value when it is an integer that fits in 64 bits.
  std::optional<std::int64_t> to_int64() const;
  Rational denominator() const;
  int sign() const { return sgn(value_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::size_t hash() const;

 private:
  explicit Rational(mpq_class v);
  mpq_class value_{0};
};

Rational abs(const Rational& r);
const Rational& min(const Rational& a, const Rational& b);
const Rational& max(const Rational& a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace simplefold

template <>
struct std::hash<simplefold::Rational> {
  std::size_t operator()(const simplefold::Rational& r) const noexcept { return r.hash(); }
};
